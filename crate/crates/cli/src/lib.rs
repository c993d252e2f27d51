//! Command-line front end: reads JSON definitions, runs the validators, reconstruction and
//! torsor machinery on them, and writes deterministic reports.

pub mod input;
pub mod oracle;
pub mod report;
pub mod suite;

use std::path::Path;

use hopf_objects::HopfObj;
use kosmos_core::linear::symmetry;
use kosmos_core::{Morphism, Rat};
use rep_category::{gal, gro};
use serde_json::json;
use thiserror::Error;
use torsors::{gal as tg, gro as tr, rational_points_dim2};

use input::{parent_dir, BuildError, Loader, Object};
use report::{InputDigest, Item, SuiteReport};
use suite::run;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub const EXIT_CODE: i32 = 2;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Galois,
    Grothendieck,
    Both,
}

impl Side {
    pub fn galois(self) -> bool {
        self != Side::Grothendieck
    }

    pub fn grothendieck(self) -> bool {
        self != Side::Galois
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    pub probe_limit: usize,
    pub max_order: usize,
    /// Recorded in reports; no probe selection is randomized.
    pub seed: Option<u64>,
}

impl Default for Options {
    fn default() -> Self {
        Options { probe_limit: 5, max_order: 8, seed: None }
    }
}

/// Reads `PREKOSMOS_SEED` if set.
pub fn seed_from_env() -> Result<Option<u64>, CliError> {
    match std::env::var("PREKOSMOS_SEED") {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| CliError::Usage(format!("PREKOSMOS_SEED={v:?} is not an unsigned integer"))),
        Err(_) => Ok(None),
    }
}

fn read(path: &Path) -> Result<(input::InputDoc, InputDigest), CliError> {
    let (doc, bytes) = Loader::read_doc(path)?;
    Ok((doc, InputDigest::of(&path.display().to_string(), &bytes)))
}

fn subject(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

/// Validates one document of any kind.
pub fn cmd_check(path: &Path, opts: &Options) -> Result<SuiteReport, CliError> {
    let (doc, digest) = read(path)?;
    let mut report = SuiteReport::new("check");
    report.seed = opts.seed;
    report.inputs.push(digest);
    let name = subject(path);
    let mut item = Item::standalone(&format!("{} laws", doc.kind()), &name);
    match Loader::new(parent_dir(path)).build(&doc, &path.display().to_string()) {
        Err(BuildError::Schema(e)) => return Err(e),
        Err(BuildError::Invalid(reports)) => {
            item.extend(reports);
            if item.passed {
                item.fail("rejected without a failing equation".into());
            }
        }
        Ok(obj) => {
            item = run(0, &format!("{} laws", doc.kind()), &name, |item| {
                item.checklist(match &obj {
                    Object::Group(g) => g.axioms()?,
                    Object::Hopf(h) => h.axioms()?,
                    Object::Alg(a) => a.axioms()?,
                    Object::GalRep(x) => x.laws()?,
                    Object::GroRep(x) => x.laws()?,
                    Object::GalTorsor(t) => t.laws()?,
                    Object::GroTorsor(t) => t.laws()?,
                    Object::GalMor(f) => f.laws()?,
                    Object::GroMor(f) => f.laws()?,
                    Object::GalCell(c) => c.laws()?,
                    Object::GroCell(c) => c.laws()?,
                });
                Ok(())
            });
            item.criterion = None;
        }
    }
    report.add(item);
    Ok(report)
}

/// Reconstructs a group or Hopf object from its representations and runs the comparison
/// functor on the default probes.
pub fn cmd_reconstruct(path: &Path, opts: &Options) -> Result<SuiteReport, CliError> {
    let (_, digest) = read(path)?;
    let mut report = SuiteReport::new("reconstruct");
    report.seed = opts.seed;
    report.inputs.push(digest);
    let name = subject(path);
    let items = match Loader::load_path(path) {
        Err(BuildError::Schema(e)) => return Err(e),
        Err(BuildError::Invalid(reports)) => {
            let mut item = Item::new(1, "axioms", &name);
            item.extend(reports);
            vec![item]
        }
        Ok(Object::Group(g)) => suite::galois_reconstruction(&name, &g, &gal::probes(&g, opts.probe_limit)),
        Ok(Object::Hopf(h)) => suite::grothendieck_reconstruction(&name, &h, &gro::probes(&h, opts.probe_limit)),
        Ok(_) => return Err(CliError::Usage("reconstruct expects a finset-group or rat-hopf document".into())),
    };
    for item in items {
        report.add(item);
    }
    Ok(report)
}

fn cocommutative(h: &HopfObj<Rat>) -> bool {
    symmetry(h.carrier(), h.carrier()).compose(h.comul()).and_then(|d| d.equals(h.comul())).unwrap_or(false)
}

/// Twists by a torsor: the twisted group, the twisted fiber functor on probes, the twisted
/// equivalence and the round trip back to a torsor.
pub fn cmd_twist(group: &Path, torsor: &Path, opts: &Options) -> Result<SuiteReport, CliError> {
    let (_, gdigest) = read(group)?;
    let (tdoc, tdigest) = read(torsor)?;
    let mut report = SuiteReport::new("twist");
    report.seed = opts.seed;
    report.inputs = vec![gdigest, tdigest];
    let name = subject(torsor);
    let g = match Loader::load_path(group) {
        Err(BuildError::Schema(e)) => return Err(e),
        Err(BuildError::Invalid(reports)) => {
            let mut item = Item::new(1, "axioms", &subject(group));
            item.extend(reports);
            report.add(item);
            return Ok(report);
        }
        Ok(obj @ (Object::Group(_) | Object::Hopf(_))) => obj,
        Ok(_) => return Err(CliError::Usage("--group expects a finset-group or rat-hopf document".into())),
    };
    let t = match Loader::new(parent_dir(torsor)).build_with(&tdoc, &torsor.display().to_string(), Some(&g)) {
        Err(BuildError::Schema(e)) => return Err(e),
        Err(BuildError::Invalid(reports)) => {
            let mut item = Item::new(7, "torsor laws", &name);
            item.extend(reports);
            report.add(item);
            return Ok(report);
        }
        Ok(t) => t,
    };
    match (&g, t) {
        (Object::Group(g), Object::GalTorsor(t)) => {
            let probes = gal::probes(g, opts.probe_limit);
            // every nonempty torsor of finite sets has a point, so the twisted group is π
            report.add(run(7, "torsor twist", &name, |item| suite::galois_twist(item, &t, Some(g), &probes)));
            report.add(run(8, "round trip", &name, |item| {
                let rt = tg::fib_tors_roundtrip(&t)?;
                item.checklist(rt.checks);
                item.data = Some(json!({ "counit": rt.counit.table(), "points": t.size() }));
                Ok(())
            }));
        }
        (Object::Hopf(h), Object::GroTorsor(t)) => {
            let probes = gro::probes(h, opts.probe_limit);
            // inner forms of a non-cocommutative group need not be isomorphic to it
            let expect = cocommutative(h).then_some(h);
            report.add(run(7, "torsor twist", &name, |item| suite::grothendieck_twist(item, &t, expect, &probes)));
            report.add(run(8, "round trip", &name, |item| {
                let rt = tr::fib_tors_roundtrip(&t)?;
                item.checklist(rt.checks);
                let mut data = json!({ "unit": suite::rows(&rt.unit) });
                if t.dim() == 2 {
                    let points: Vec<Vec<Vec<String>>> = rational_points_dim2(t.algebra())?.iter().map(suite::rows).collect();
                    data["rational_points"] = json!(points.len());
                    data["points"] = json!(points);
                }
                item.data = Some(data);
                Ok(())
            }));
        }
        _ => return Err(CliError::Usage("torsor and group live on different sides".into())),
    }
    Ok(report)
}

/// The suite over a roster file.
pub fn cmd_suite(roster: &Path, side: Side, opts: &Options) -> Result<SuiteReport, CliError> {
    let roster = suite::load_roster(roster)?;
    Ok(suite::run_suite(&roster, side, opts))
}
