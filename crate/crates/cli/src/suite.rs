//! The full check suite: every roster member goes through validation, reconstruction,
//! the comparison functor, (co)invariants, projection and fusion, torsor twisting and the
//! round trip; fixed controls cover the automorphism presheaf, negative controls, the
//! square-root torsor and induced functors.

use std::path::Path;

use hopf_objects::catalog::{cyclic, evaluation, function_algebra, kappa, symmetric};
use hopf_objects::{FinGroupObj, GalGroupMor, GalTwoCell, GroGroupMor, GroTwoCell, HopfObj};
use kosmos_core::finset::{FinMap, FinObj};
use kosmos_core::linear::{tensor_map, LinMap};
use kosmos_core::{Morphism, Rat, VecObj};
use lawcheck::{certify_iso, Report};
use rayon::prelude::*;
use reconstruction::{
    aut_presheaf_check_galois, aut_presheaf_check_grothendieck, comparison_functor_galois,
    comparison_functor_grothendieck, reconstruct_galois, reconstruct_grothendieck,
};
use rep_category::{gal, gro, GalRep, GroRep};
use serde::Deserialize;
use serde_json::json;
use torsors::induced::{
    function_algebra_map, gal_adjunction_check, gal_induce, gal_two_cell_nat, gro_adjunction_check, gro_coinduce,
    gro_two_cell_nat,
};
use torsors::{gal as tg, gro as tr, rational_points_dim2, GalTorsor, GroTorsor, PAIR_SIZE_LIMIT};

use crate::input::{parse_rational, parent_dir, BuildError, InputDoc, LibError, Loader, Object};
use crate::oracle::{hopf_isomorphic, isomorphic_by_search, SEARCH_LIMIT};
use crate::report::{InputDigest, Item, SuiteReport};
use crate::{CliError, Options, Side};

/// Largest product of comodule dimensions visited by pairwise checks.
const GRO_PAIR_LIMIT: usize = 16;

const BROKEN_GROUP: &str = include_str!("../../../data/broken-assoc.json");
const BROKEN_HOPF: &str = include_str!("../../../data/broken-antipode.json");
const SQRT2: &str = include_str!("../../../data/sqrt2.json");
const SPLIT: &str = include_str!("../../../data/split.json");
const SIGN: &str = include_str!("../../../data/oz2-sign.json");
const QUOTIENT: &str = include_str!("../../../data/z4-to-z2.json");
const RESTRICTION: &str = include_str!("../../../data/oz4-to-oz2.json");
const TRANSPOSITION: &str = include_str!("../../../data/s3-transposition-cell.json");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RosterDoc {
    members: Vec<String>,
}

#[allow(clippy::large_enum_variant)]
pub enum MemberObject {
    Group(FinGroupObj),
    Hopf(HopfObj<Rat>),
    Invalid { galois: bool, reports: Vec<Report> },
}

pub struct Member {
    pub name: String,
    pub object: MemberObject,
}

impl Member {
    fn galois(&self) -> bool {
        match &self.object {
            MemberObject::Group(_) => true,
            MemberObject::Hopf(_) => false,
            MemberObject::Invalid { galois, .. } => *galois,
        }
    }
}

pub struct Roster {
    pub members: Vec<Member>,
    pub inputs: Vec<InputDigest>,
}

/// Reads the roster file and every member it lists. Members that fail their axioms are kept
/// (and reported); unreadable or malformed members abort with a parse error.
pub fn load_roster(path: &Path) -> Result<Roster, CliError> {
    let display = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|e| CliError::Io { path: display.clone(), message: e.to_string() })?;
    let doc: RosterDoc =
        serde_json::from_slice(&bytes).map_err(|e| CliError::Parse { path: display.clone(), message: e.to_string() })?;
    let mut inputs = vec![InputDigest::of(&display, &bytes)];
    let base = parent_dir(path);
    let mut members = Vec::new();
    for m in &doc.members {
        let mpath = base.join(m);
        let (mdoc, mbytes) = Loader::read_doc(&mpath)?;
        inputs.push(InputDigest::of(&mpath.display().to_string(), &mbytes));
        let galois = match &mdoc {
            InputDoc::FinsetGroup(_) => true,
            InputDoc::RatHopf(_) => false,
            other => {
                return Err(CliError::Parse {
                    path: mpath.display().to_string(),
                    message: format!("roster members must be groups or Hopf objects, found {}", other.kind()),
                })
            }
        };
        let object = match Loader::new(parent_dir(&mpath)).build(&mdoc, m) {
            Ok(Object::Group(g)) => MemberObject::Group(g),
            Ok(Object::Hopf(h)) => MemberObject::Hopf(h),
            Ok(_) => unreachable!("kind checked above"),
            Err(BuildError::Schema(e)) => return Err(e),
            Err(BuildError::Invalid(reports)) => MemberObject::Invalid { galois, reports },
        };
        let name = Path::new(m).file_stem().map_or(m.clone(), |s| s.to_string_lossy().into_owned());
        members.push(Member { name, object });
    }
    Ok(Roster { members, inputs })
}

type Task<'a> = Box<dyn Fn() -> Vec<Item> + Send + Sync + 'a>;

/// Runs the suite over `roster`. Work is spread over threads; items are reported in the
/// order they were scheduled.
pub fn run_suite(roster: &Roster, side: Side, opts: &Options) -> SuiteReport {
    let mut report = SuiteReport::new("suite");
    report.seed = opts.seed;
    report.inputs = roster.inputs.clone();
    let selected: Vec<&Member> = roster
        .members
        .iter()
        .filter(|m| if m.galois() { side.galois() } else { side.grothendieck() })
        .collect();
    if selected.is_empty() {
        report.warnings.push("roster is empty for the selected side; nothing was checked".into());
        return report;
    }
    let mut tasks: Vec<Task> = Vec::new();
    for m in &selected {
        match &m.object {
            MemberObject::Group(g) => {
                if g.order() > opts.max_order {
                    report.warnings.push(format!("{}: order {} exceeds --max-order {}", m.name, g.order(), opts.max_order));
                }
                tasks.push(Box::new(move || galois_member(&m.name, g, opts)));
            }
            MemberObject::Hopf(h) => {
                if h.dim() > opts.max_order {
                    report.warnings.push(format!("{}: dimension {} exceeds --max-order {}", m.name, h.dim(), opts.max_order));
                }
                tasks.push(Box::new(move || grothendieck_member(&m.name, h, opts)));
            }
            MemberObject::Invalid { reports, .. } => tasks.push(Box::new(move || {
                let mut item = Item::new(1, "axioms", &m.name);
                item.extend(reports.iter().cloned());
                if item.passed {
                    item.fail("rejected without a failing equation".into());
                }
                vec![item]
            })),
        }
    }
    if selected.iter().any(|m| m.galois()) {
        tasks.push(Box::new(|| vec![broken_group_control()]));
        tasks.push(Box::new(|| vec![aut_presheaf_galois()]));
        tasks.push(Box::new(|| vec![negative_control_galois()]));
        tasks.push(Box::new(|| induced_galois(opts)));
    }
    if selected.iter().any(|m| !m.galois()) {
        tasks.push(Box::new(|| vec![broken_hopf_control()]));
        tasks.push(Box::new(|| vec![aut_presheaf_grothendieck()]));
        tasks.push(Box::new(|| vec![sign_invariants()]));
        tasks.push(Box::new(|| vec![negative_control_grothendieck()]));
        tasks.push(Box::new(|| sqrt2_torsor(opts)));
        tasks.push(Box::new(|| induced_grothendieck(opts)));
    }
    let results: Vec<Vec<Item>> = tasks.par_iter().map(|t| t()).collect();
    for item in results.into_iter().flatten() {
        report.add(item);
    }
    report
}

/// Runs `body` and turns a library error into a failed item, keeping any reports it carries.
pub fn run(criterion: u8, name: &str, subject: &str, body: impl FnOnce(&mut Item) -> Result<(), LibError>) -> Item {
    let mut item = Item::new(criterion, name, subject);
    if let Err(e) = body(&mut item) {
        match e {
            LibError::Reports(r) => {
                item.extend(r);
                if item.passed {
                    item.fail("aborted".into());
                }
            }
            LibError::Malformed(m) | LibError::Other(_, m) => item.fail(m),
        }
    }
    item
}

fn skipped(criterion: u8, name: &str, subject: &str, why: &str) -> Item {
    let mut item = Item::new(criterion, name, subject);
    item.skip(why.into());
    item
}

fn doc(text: &str) -> InputDoc {
    serde_json::from_str(text).expect("bundled document parses")
}

fn fixture(text: &str, name: &str) -> Result<Object, BuildError> {
    Loader::new(".").build(&doc(text), name)
}

fn built(text: &str, name: &str) -> Result<Object, LibError> {
    fixture(text, name).map_err(|e| match e {
        BuildError::Schema(e) => LibError::Malformed(e.to_string()),
        BuildError::Invalid(r) => LibError::Reports(r),
    })
}

// ---- roster members, finite sets

pub fn galois_member(name: &str, g: &FinGroupObj, opts: &Options) -> Vec<Item> {
    let mut out = vec![run(1, "axioms", name, |item| {
        item.checklist(g.axioms()?);
        Ok(())
    })];
    let heavy = [(2, "reconstruction"), (3, "comparison functor"), (5, "coinvariants"), (6, "projection and fusion"), (7, "torsor twist"), (8, "round trip")];
    if g.order() > opts.max_order {
        out.extend(heavy.iter().map(|&(c, n)| skipped(c, n, name, "order exceeds --max-order")));
        return out;
    }
    let probes = gal::probes(g, opts.probe_limit);
    out.extend(galois_reconstruction(name, g, &probes));
    out.push(run(5, "coinvariants", name, |item| {
        for n in 0..=4 {
            item.checklist(gal::coinvariants_of_free(g, &FinObj::new(n))?);
        }
        Ok(())
    }));
    out.push(run(6, "projection and fusion", name, |item| {
        for x in &probes {
            for y in &probes {
                if x.size() * y.size() > PAIR_SIZE_LIMIT {
                    continue;
                }
                item.checklist(gal::projection_formula_check(y.carrier(), x)?);
                item.checklist(gal::fusion_check(g, x.carrier(), y.carrier())?);
            }
        }
        Ok(())
    }));
    let t = GalTorsor::regular(g);
    out.push(run(7, "torsor twist", name, |item| {
        let t = t.clone()?;
        galois_twist(item, &t, Some(g), &probes)
    }));
    out.push(run(8, "round trip", name, |item| {
        let rt = tg::fib_tors_roundtrip(&t.clone()?)?;
        item.checklist(rt.checks);
        Ok(())
    }));
    out
}

/// Reconstruction from the literal fiber-functor formulas, its oracles, and the comparison
/// functor on `probes`.
pub fn galois_reconstruction(name: &str, g: &FinGroupObj, probes: &[GalRep]) -> Vec<Item> {
    let mut out = Vec::new();
    let mut comparison = Item::new(3, "comparison functor", name);
    out.push(run(2, "reconstruction", name, |item| {
        let rec = reconstruct_galois(g)?;
        item.checklist(rec.checks.clone());
        let n = g.order();
        let w = |a: usize| rec.witness.apply(a);
        let relabeled = (0..n).all(|a| (0..n).all(|b| w(g.m(a, b)) == rec.group.m(w(a), w(b))));
        item.assert("independent oracle", "tables agree after relabeling by the witness", relabeled, None);
        if n <= SEARCH_LIMIT {
            let found = isomorphic_by_search(&rec.group, g).is_some();
            item.assert("independent oracle", "exhaustive isomorphism search", found, None);
        }
        item.data = Some(json!({ "table": rec.group.table(), "unit": rec.group.unit(), "witness": rec.witness.map.table() }));
        comparison = run(3, "comparison functor", name, |c| {
            let (images, checks) = comparison_functor_galois(&rec, probes)?;
            c.checklist(checks);
            c.assert("comparison functor", "every probe transports", images.len() == probes.len(), None);
            Ok(())
        });
        Ok(())
    }));
    out.push(comparison);
    out
}

/// Torsor laws, the twisted group with its oracle, the twisted fiber functor and the
/// twisted equivalence. `expect` is a group the twisted group should be isomorphic to.
pub fn galois_twist(item: &mut Item, t: &GalTorsor, expect: Option<&FinGroupObj>, probes: &[GalRep]) -> Result<(), LibError> {
    item.checklist(t.laws()?);
    let tw = tg::twist_group(t)?;
    item.checklist(tw.checks.clone());
    if let Some(g) = expect.filter(|g| g.order() <= SEARCH_LIMIT) {
        item.assert("independent oracle", "twisted group is isomorphic to the group", isomorphic_by_search(&tw.group, g).is_some(), None);
    }
    let tf = tg::twist_fiber(t, probes)?;
    let carriers: Vec<usize> = tf.carriers.iter().map(|c| c.obj.size()).collect();
    item.checklist(tf.checks);
    item.checklist(tg::twisted_equiv_check(t, probes)?);
    item.data = Some(json!({
        "twisted_group_order": tw.group.order(),
        "twisted_group_table": tw.group.table(),
        "twisted_fiber_sizes": carriers,
    }));
    Ok(())
}

// ---- roster members, vector spaces

pub fn grothendieck_member(name: &str, h: &HopfObj<Rat>, opts: &Options) -> Vec<Item> {
    let mut out = vec![run(1, "axioms", name, |item| {
        item.checklist(h.axioms()?);
        Ok(())
    })];
    let heavy = [(2, "reconstruction"), (3, "comparison functor"), (5, "invariants"), (6, "projection and fusion"), (7, "torsor twist"), (8, "round trip")];
    if h.dim() > opts.max_order {
        out.extend(heavy.iter().map(|&(c, n)| skipped(c, n, name, "dimension exceeds --max-order")));
        return out;
    }
    let probes = gro::probes(h, opts.probe_limit);
    out.extend(grothendieck_reconstruction(name, h, &probes));
    out.push(run(5, "invariants", name, |item| {
        for n in 0..=4 {
            item.checklist(gro::invariants_of_cofree(h, &VecObj::new(n))?);
        }
        Ok(())
    }));
    out.push(run(6, "projection and fusion", name, |item| {
        for x in &probes {
            for y in &probes {
                if x.dim() * y.dim() > GRO_PAIR_LIMIT {
                    continue;
                }
                item.checklist(gro::projection_formula_check(x, y.carrier())?);
                item.checklist(gro::fusion_check(h, x.carrier(), y.carrier())?);
            }
        }
        Ok(())
    }));
    let t = GroTorsor::regular(h);
    out.push(run(7, "torsor twist", name, |item| {
        let t = t.clone()?;
        grothendieck_twist(item, &t, Some(h), &probes)
    }));
    out.push(run(8, "round trip", name, |item| {
        let rt = tr::fib_tors_roundtrip(&t.clone()?)?;
        item.checklist(rt.checks);
        Ok(())
    }));
    out
}

pub fn grothendieck_reconstruction(name: &str, h: &HopfObj<Rat>, probes: &[GroRep<Rat>]) -> Vec<Item> {
    let mut out = Vec::new();
    let mut comparison = Item::new(3, "comparison functor", name);
    out.push(run(2, "reconstruction", name, |item| {
        let rec = reconstruct_grothendieck(h)?;
        item.checklist(rec.checks.clone());
        let w = &rec.witness.map;
        let same = |a: &LinMap<Rat>, b: &LinMap<Rat>| a.equals(b);
        let relabeled = same(&w.compose(h.mul_map())?, &rec.group.mul_map().compose(&tensor_map(w, w))?)?
            && same(&tensor_map(w, w).compose(h.comul())?, &rec.group.comul().compose(w)?)?
            && same(&w.compose(h.unit_map())?, rec.group.unit_map())?
            && same(&rec.group.counit().compose(w)?, h.counit())?;
        item.assert("independent oracle", "structure constants agree after the witness change of basis", relabeled, None);
        if let Some(iso) = hopf_isomorphic(&rec.group, h) {
            item.assert("independent oracle", "character groups are isomorphic", iso, None);
        }
        item.data = Some(json!({
            "mul": rows(rec.group.mul_map()),
            "unit": rows(rec.group.unit_map()),
            "comul": rows(rec.group.comul()),
            "counit": rows(rec.group.counit()),
            "antipode": rows(rec.group.antipode()),
            "witness": rows(&rec.witness.map),
        }));
        comparison = run(3, "comparison functor", name, |c| {
            let (images, checks) = comparison_functor_grothendieck(&rec, probes)?;
            c.checklist(checks);
            c.assert("comparison functor", "every probe transports", images.len() == probes.len(), None);
            Ok(())
        });
        Ok(())
    }));
    out.push(comparison);
    out
}

pub fn grothendieck_twist(
    item: &mut Item,
    t: &GroTorsor<Rat>,
    expect: Option<&HopfObj<Rat>>,
    probes: &[GroRep<Rat>],
) -> Result<(), LibError> {
    item.checklist(t.laws()?);
    let tw = tr::twist_group(t)?;
    item.checklist(tw.checks.clone());
    if let Some(h) = expect {
        match hopf_isomorphic(&tw.group, h) {
            Some(iso) => {
                item.assert("independent oracle", "twisted group is isomorphic to the group", iso, None);
            }
            None => {
                item.assert("independent oracle", "twisted group has a full character group", false, None);
            }
        }
    }
    let tf = tr::twist_fiber(t, probes)?;
    let dims: Vec<usize> = tf.carriers.iter().map(|c| c.obj.dim()).collect();
    item.checklist(tf.checks);
    item.checklist(tr::twisted_equiv_check(t, probes)?);
    item.data = Some(json!({
        "twisted_group_dim": tw.group.dim(),
        "twisted_group_mul": rows(tw.group.mul_map()),
        "twisted_group_comul": rows(tw.group.comul()),
        "twisted_fiber_dims": dims,
    }));
    Ok(())
}

pub fn rows(m: &LinMap<Rat>) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

// ---- fixed controls, finite sets

/// A Cayley table with one entry changed must be rejected, and the reported witness must be
/// a triple on which the table really is not associative.
fn broken_group_control() -> Item {
    run(1, "broken table is rejected", "broken-assoc", |item| {
        let InputDoc::FinsetGroup(raw) = doc(BROKEN_GROUP) else { unreachable!("bundled group") };
        match fixture(BROKEN_GROUP, "broken-assoc") {
            Ok(_) => {
                item.assert("negative control", "broken table rejected", false, None);
            }
            Err(BuildError::Schema(e)) => item.fail(e.to_string()),
            Err(BuildError::Invalid(reports)) => {
                item.assert("negative control", "broken table rejected", true, None);
                let assoc = reports.iter().find(|r| r.name == "associativity" && !r.passed);
                let coords = assoc.and_then(|r| r.witness.as_ref()).and_then(|w| w.coords.clone());
                let m = |a: usize, b: usize| raw.mul[a][b];
                let genuine = matches!(coords.as_deref(), Some(&[a, b, c]) if m(m(a, b), c) != m(a, m(b, c)));
                item.assert("negative control", "witness triple violates associativity", genuine, Some(format!("{coords:?}")));
            }
        }
        Ok(())
    })
}

fn aut_presheaf_galois() -> Item {
    run(4, "automorphism presheaf", "(z2, 1), (z2, 2), (z3, 3)", |item| {
        for (g, c) in [(cyclic(2), 1), (cyclic(2), 2), (cyclic(3), 3)] {
            item.checklist(aut_presheaf_check_galois(&g, &FinObj::new(c))?);
        }
        Ok(())
    })
}

/// φ and χ with the antipode left out are not inverse to themselves on a nonabelian group.
fn negative_control_galois() -> Item {
    run(6, "inverse without antipode fails", "s3", |item| {
        let s3 = symmetric(3);
        let reg = GalRep::regular(&s3);
        let z = FinObj::new(2);
        let phi = gal::projection_map(&z, &reg)?;
        let naive = gal::projection_naive_inverse(&z, &reg)?;
        let id = FinMap::identity(phi.map.dom());
        item.assert("negative control", "projection inverse without antipode fails", !naive.compose(&phi.map)?.equals(&id)?, None);
        let chi = gal::fusion_map(&s3, &FinObj::unit(), &FinObj::unit())?;
        item.assert("negative control", "fusion inverse without antipode fails", !chi.compose(&chi)?.equals(&FinMap::identity(chi.dom()))?, None);
        item.checklist(gal::projection_formula_check(&z, &reg)?);
        Ok(())
    })
}

fn induced_galois(opts: &Options) -> Vec<Item> {
    let adjunction = run(9, "induction and restriction", "z4 -> z2", |item| {
        let Object::GalMor(f) = built(QUOTIENT, "z4-to-z2")? else { unreachable!("bundled morphism") };
        item.checklist(gal_adjunction_check(&f, &gal::probes(&f.src, opts.probe_limit), &gal::probes(&f.dst, opts.probe_limit))?);
        let size = gal_induce(&f, &GalRep::regular(&f.src))?.rep.size();
        item.assert("induction and restriction", "induced regular representation has 2 elements", size == 2, Some(size.to_string()));
        Ok(())
    });
    let cell = run(9, "two-cell transformation", "s3 transposition", |item| {
        let Object::GalCell(cell) = built(TRANSPOSITION, "s3-transposition-cell")? else { unreachable!("bundled cell") };
        galois_cell(item, &cell, &gal::probes(&cell.f1.dst, opts.probe_limit))
    });
    vec![adjunction, cell]
}

pub fn galois_cell(item: &mut Item, cell: &GalTwoCell, probes: &[GalRep]) -> Result<(), LibError> {
    let nat = gal_two_cell_nat(cell, probes)?;
    item.checklist(nat.checks);
    for (k, (c, inv)) in nat.components.iter().zip(&nat.inverses).enumerate() {
        let certified = certify_iso(c).map(|i| i.equals(inv)).unwrap_or(Ok(false))?;
        item.assert("two-cell transformation", &format!("component {k} is invertible with the displayed inverse"), certified, None);
    }
    Ok(())
}

// ---- fixed controls, vector spaces

fn broken_hopf_control() -> Item {
    run(1, "broken table is rejected", "broken-antipode", |item| {
        match fixture(BROKEN_HOPF, "broken-antipode") {
            Ok(_) => {
                item.assert("negative control", "broken Hopf object rejected", false, None);
            }
            Err(BuildError::Schema(e)) => item.fail(e.to_string()),
            Err(BuildError::Invalid(reports)) => {
                item.assert("negative control", "broken Hopf object rejected", true, None);
                let failing: Vec<&Report> = reports.iter().filter(|r| !r.passed).collect();
                let antipode_only = !failing.is_empty() && failing.iter().all(|r| r.name.contains("antipode"));
                item.assert("negative control", "only the antipode laws fail", antipode_only, None);
                // the witness is a basis vector on which m(ς⊗I)Δ and uε differ for the raw tables
                let InputDoc::RatHopf(raw) = doc(BROKEN_HOPF) else { unreachable!("bundled Hopf object") };
                let h = function_algebra(&cyclic(3))?;
                let values: Vec<Vec<Rat>> =
                    raw.antipode.iter().map(|r| r.iter().filter_map(|v| parse_rational(v)).collect()).collect();
                let s = LinMap::new(h.carrier().clone(), h.carrier().clone(), values)?;
                let lhs = h.mul_map().compose(&tensor_map(&s, &LinMap::identity(h.carrier())))?.compose(h.comul())?;
                let rhs = h.unit_map().compose(h.counit())?;
                let genuine = failing
                    .iter()
                    .find_map(|r| r.witness.as_ref())
                    .is_some_and(|w| lhs.column(w.index) != rhs.column(w.index));
                item.assert("negative control", "witness basis vector violates the antipode law", genuine, None);
            }
        }
        Ok(())
    })
}

fn aut_presheaf_grothendieck() -> Item {
    run(4, "automorphism presheaf", "(oz2, kappa)", |item| {
        let h = function_algebra(&cyclic(2))?;
        let k = kappa()?.algebra();
        let points = [evaluation(&h, 0), evaluation(&h, 1)];
        item.checklist(aut_presheaf_check_grothendieck(&h, &k, &points)?);
        Ok(())
    })
}

fn sign_invariants() -> Item {
    run(5, "invariants", "sign over oz2", |item| {
        let Object::GroRep(sign) = built(SIGN, "oz2-sign")? else { unreachable!("bundled comodule") };
        let d = sign.invariants()?.obj.dim();
        item.assert("invariants", "invariants of the sign comodule vanish", d == 0, Some(d.to_string()));
        Ok(())
    })
}

fn negative_control_grothendieck() -> Item {
    run(6, "inverse without antipode fails", "oz3", |item| {
        let h = function_algebra(&cyclic(3))?;
        let reg = GroRep::regular(&h);
        let k = VecObj::unit();
        let phi = gro::projection_map(&reg, &k)?;
        let naive = gro::projection_naive_inverse(&reg, &k)?;
        let id = LinMap::identity(phi.map.dom());
        item.assert("negative control", "projection inverse without antipode fails", !naive.compose(&phi.map)?.equals(&id)?, None);
        let chi = gro::fusion_map(&h, &k, &k)?;
        item.assert("negative control", "fusion inverse without antipode fails", !chi.compose(&chi)?.equals(&LinMap::identity(chi.dom()))?, None);
        item.checklist(gro::projection_formula_check(&reg, &k)?);
        Ok(())
    })
}

fn sqrt2_torsor(opts: &Options) -> Vec<Item> {
    let t = built(SQRT2, "sqrt2");
    let twist = run(7, "torsor twist", "sqrt2", |item| {
        let Object::GroTorsor(t) = t.clone()? else { unreachable!("bundled torsor") };
        let h = t.group().clone();
        let mut probes = gro::probes(&h, opts.probe_limit);
        let Object::GroRep(sign) = built(SIGN, "oz2-sign")? else { unreachable!("bundled comodule") };
        probes.push(sign);
        grothendieck_twist(item, &t, Some(&h), &probes)
    });
    let round = run(8, "round trip", "sqrt2", |item| {
        let Object::GroTorsor(t) = t.clone()? else { unreachable!("bundled torsor") };
        item.checklist(tr::fib_tors_roundtrip(&t)?.checks);
        let n = rational_points_dim2(t.algebra())?.len();
        item.assert("rational points", "the square-root torsor has no rational point", n == 0, Some(n.to_string()));
        let Object::Alg(split) = built(SPLIT, "split")? else { unreachable!("bundled algebra") };
        let n = rational_points_dim2(&split)?.len();
        item.assert("rational points", "the split algebra has two rational points", n == 2, Some(n.to_string()));
        Ok(())
    });
    vec![twist, round]
}

fn induced_grothendieck(opts: &Options) -> Vec<Item> {
    let restriction = run(9, "restriction and coinduction", "oz4 -> oz2", |item| {
        let Object::GroMor(f) = built(RESTRICTION, "oz4-to-oz2")? else { unreachable!("bundled morphism") };
        item.checklist(gro_adjunction_check(&f, &gro::probes(&f.dom, 3), &gro::probes(&f.cod, opts.probe_limit))?);
        let d = gro_coinduce(&f, &GroRep::regular(&f.cod))?.rep.dim();
        item.assert("restriction and coinduction", "coinduced regular comodule has dimension 4", d == 4, Some(d.to_string()));
        Ok(())
    });
    let inclusion = run(9, "restriction and coinduction", "oz2 -> oz4", |item| {
        let quotient = GalGroupMor::validate(cyclic(4), cyclic(2), vec![0, 1, 0, 1])?;
        let f: GroGroupMor<Rat> = function_algebra_map(&quotient)?;
        item.checklist(gro_adjunction_check(&f, &gro::probes(&f.dom, opts.probe_limit), &gro::probes(&f.cod, 3))?);
        Ok(())
    });
    let cell = run(9, "two-cell transformation", "oz2 evaluation at 1", |item| {
        let h = function_algebra(&cyclic(2))?;
        let id = GroGroupMor::identity(&h);
        let cell = GroTwoCell::validate(id.clone(), id, evaluation(&h, 1))?;
        grothendieck_cell(item, &cell, &gro::probes(&h, opts.probe_limit))
    });
    vec![restriction, inclusion, cell]
}

pub fn grothendieck_cell(item: &mut Item, cell: &GroTwoCell<Rat>, probes: &[GroRep<Rat>]) -> Result<(), LibError> {
    let nat = gro_two_cell_nat(cell, probes)?;
    item.checklist(nat.checks);
    for (k, (c, inv)) in nat.components.iter().zip(&nat.inverses).enumerate() {
        let certified = certify_iso(c).map(|i| i.equals(inv)).unwrap_or(Ok(false))?;
        item.assert("two-cell transformation", &format!("component {k} is invertible with the displayed inverse"), certified, None);
    }
    Ok(())
}
