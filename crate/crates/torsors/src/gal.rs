//! Right torsors under a finite group, read in finite sets.

use hopf_objects::FinGroupObj;
use kosmos_core::finset::{
    diagonal, factor_through_epi, reflexive_coequalizer, symmetry, tensor_map, tensor_obj, terminal, CoeqResult,
    FinMap, FinObj,
};
use kosmos_core::{compose_all, tensor_all, Morphism};
use lawcheck::{certify_iso, Checklist};
use reconstruction::{Colax, GalFiber, ReconError};
use rep_category::{gal, GalRep, GalRepMor, RepError};

use crate::{NatProbe, TorsorError, PAIR_SIZE_LIMIT};

/// Equivariant maps per probe pair used for naturality checks.
const MAPS_PER_PAIR: usize = 4;

fn id(x: &FinObj) -> FinMap {
    FinMap::identity(x)
}

fn right_action_laws(group: &FinGroupObj, p: &FinObj, action: &FinMap) -> Result<Checklist, TorsorError> {
    let (ip, ig) = (id(p), id(group.carrier()));
    let mut c = Checklist::new("right action law");
    c.equation_split(
        "associativity",
        &action.compose(&tensor_map(action, &ig))?,
        &action.compose(&tensor_map(&ip, group.mul_map()))?,
        &[p.size(), group.order(), group.order()],
    )?;
    c.equation("unit", &action.compose(&tensor_map(&ip, &group.unit_map()))?, &ip)?;
    Ok(c)
}

/// A right π-torsor (p, λ: p⊗π → p) over the point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalTorsor {
    group: FinGroupObj,
    carrier: FinObj,
    action: FinMap,
    tau: FinMap,
    tau_inv: FinMap,
    div: FinMap,
}

impl GalTorsor {
    pub fn validate(group: &FinGroupObj, carrier: FinObj, action: FinMap) -> Result<Self, TorsorError> {
        if carrier.size() == 0 {
            return Err(TorsorError::EmptyCarrier);
        }
        let action = action.retyped(&tensor_obj(&carrier, group.carrier()), &carrier)?;
        let laws = right_action_laws(group, &carrier, &action)?;
        if !laws.passed() {
            return Err(TorsorError::ActionLaw(laws.into_reports()));
        }
        let tau = tensor_map(&id(&carrier), &action).compose(&tensor_map(&diagonal(&carrier), &id(group.carrier())))?;
        let tau_inv = certify_iso(&tau).map_err(|e| TorsorError::TauNotIso(e.to_string()))?;
        let div = tensor_map(&terminal(&carrier), &id(group.carrier())).compose(&tau_inv)?;
        let t = GalTorsor { group: group.clone(), carrier, action, tau, tau_inv, div };
        let c = t.laws()?;
        if !c.passed() {
            return Err(TorsorError::ActionLaw(c.into_reports()));
        }
        Ok(t)
    }

    /// `table[a][g]` is a·g.
    pub fn from_table(group: &FinGroupObj, carrier: FinObj, table: &[Vec<usize>]) -> Result<Self, TorsorError> {
        if table.len() != carrier.size() || table.iter().any(|r| r.len() != group.order()) {
            return Err(kosmos_core::KosmosError::ShapeMismatch("action table must be |p| x |π|".into()).into());
        }
        let flat = table.iter().flatten().copied().collect();
        let action = FinMap::new(tensor_obj(&carrier, group.carrier()), carrier.clone(), flat)?;
        GalTorsor::validate(group, carrier, action)
    }

    /// π acting on itself by right multiplication.
    pub fn regular(group: &FinGroupObj) -> Result<Self, TorsorError> {
        GalTorsor::validate(group, group.carrier().clone(), group.mul_map().clone())
    }

    pub fn group(&self) -> &FinGroupObj {
        &self.group
    }

    pub fn carrier(&self) -> &FinObj {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn action(&self) -> &FinMap {
        &self.action
    }

    pub fn act(&self, a: usize, g: usize) -> usize {
        self.action.apply(a * self.group.order() + g)
    }

    /// τ = (I⊗λ)(Δ⊗I): p⊗π → p⊗p.
    pub fn tau(&self) -> &FinMap {
        &self.tau
    }

    pub fn tau_inv(&self) -> &FinMap {
        &self.tau_inv
    }

    /// d = (e⊗I)τ⁻¹: p⊗p → π, so that b = a·d(a, b).
    pub fn div(&self) -> &FinMap {
        &self.div
    }

    /// Action laws together with the shear and division identities.
    pub fn laws(&self) -> Result<Checklist, TorsorError> {
        let g = &self.group;
        let p = &self.carrier;
        let (ip, ig) = (id(p), id(g.carrier()));
        let (dp, ep) = (diagonal(p), terminal(p));
        let (n, m) = (p.size(), g.order());
        let (tau, lam, d) = (&self.tau, &self.action, &self.div);
        let mut c = Checklist::new("torsor identities");
        c.extend(right_action_laws(g, p, lam)?);
        c.equation_split(
            "tau commutes with the diagonal",
            &tensor_map(&ip, tau).compose(&tensor_map(&dp, &ig))?,
            &tensor_map(&dp, &ip).compose(tau)?,
            &[n, m],
        )?;
        c.equation_split("tau recovers the action", lam, &tensor_map(&ep, &ip).compose(tau)?, &[n, m])?;
        c.equation_split(
            "tau intertwines the multiplication",
            &tau.compose(&tensor_map(&ip, g.mul_map()))?,
            &tensor_map(&ip, lam).compose(&tensor_map(tau, &ig))?,
            &[n, m, m],
        )?;
        c.equation("tau at the unit is the diagonal", &tau.compose(&tensor_map(&ip, &g.unit_map()))?, &dp)?;
        c.equation_split(
            "division is equivariant",
            &d.compose(&tensor_map(&ip, lam))?,
            &g.mul_map().compose(&tensor_map(d, &ig))?,
            &[n, n, m],
        )?;
        c.equation("division on the diagonal is the unit", &d.compose(&dp)?, &g.unit_map().compose(&ep)?)?;
        c.equation_split(
            "division gives the shear inverse",
            &self.tau_inv,
            &tensor_map(&ip, d).compose(&tensor_map(&dp, &ip))?,
            &[n, n],
        )?;
        c.equation_split(
            "division is antisymmetric",
            &d.compose(&symmetry(p, p))?,
            &g.inv_map().compose(d)?,
            &[n, n],
        )?;
        Ok(c)
    }

    /// f: p → q commutes with the actions.
    pub fn morphism_laws(&self, other: &GalTorsor, f: &FinMap) -> Result<Checklist, TorsorError> {
        if self.group != other.group {
            return Err(RepError::GroupMismatch("torsors under different groups".into()).into());
        }
        let mut c = Checklist::new("torsor morphism");
        c.equation_split(
            "commutes with the actions",
            &f.compose(&self.action)?,
            &other.action.compose(&tensor_map(f, &id(self.group.carrier())))?,
            &[self.size(), self.group.order()],
        )?;
        Ok(c)
    }
}

/// A right π-torsor carrying a compatible left action of a second group π'.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalBitorsor {
    right: GalTorsor,
    left_group: FinGroupObj,
    left_action: FinMap,
}

impl GalBitorsor {
    pub fn validate(right: GalTorsor, left_group: &FinGroupObj, left_action: FinMap) -> Result<Self, TorsorError> {
        let p = right.carrier().clone();
        let left_action = left_action.retyped(&tensor_obj(left_group.carrier(), &p), &p)?;
        let b = GalBitorsor { right, left_group: left_group.clone(), left_action };
        let c = b.laws()?;
        if !c.passed() {
            return Err(TorsorError::ActionLaw(c.into_reports()));
        }
        Ok(b)
    }

    pub fn laws(&self) -> Result<Checklist, TorsorError> {
        let (h, p) = (&self.left_group, self.right.carrier());
        let (ih, ip, ig) = (id(h.carrier()), id(p), id(self.right.group.carrier()));
        let (gam, lam) = (&self.left_action, self.right.action());
        let mut c = Checklist::new("bitorsor");
        c.equation_split(
            "left action associativity",
            &gam.compose(&tensor_map(h.mul_map(), &ip))?,
            &gam.compose(&tensor_map(&ih, gam))?,
            &[h.order(), h.order(), p.size()],
        )?;
        c.equation("left action unit", &gam.compose(&tensor_map(&h.unit_map(), &ip))?, &ip)?;
        c.equation_split(
            "actions commute",
            &lam.compose(&tensor_map(gam, &ig))?,
            &gam.compose(&tensor_map(&ih, lam))?,
            &[h.order(), p.size(), self.right.group.order()],
        )?;
        let left_shear = tensor_map(gam, &ip).compose(&tensor_map(&ih, &diagonal(p)))?;
        c.iso("left shear is invertible", &left_shear);
        Ok(c)
    }

    pub fn right(&self) -> &GalTorsor {
        &self.right
    }

    pub fn left_group(&self) -> &FinGroupObj {
        &self.left_group
    }

    pub fn left_action(&self) -> &FinMap {
        &self.left_action
    }

    /// The same set with the roles of the groups exchanged through the antipodes:
    /// a·h = h⁻¹·a and g·a = a·g⁻¹.
    pub fn opposite(&self) -> Result<GalBitorsor, TorsorError> {
        let p = self.right.carrier();
        let (h, g) = (&self.left_group, self.right.group());
        let right_action =
            compose_all(&[&self.left_action, &symmetry(p, h.carrier()), &tensor_map(&id(p), h.inv_map())])?;
        let right = GalTorsor::validate(h, p.clone(), right_action)?;
        let left_action =
            compose_all(&[self.right.action(), &symmetry(g.carrier(), p), &tensor_map(g.inv_map(), &id(p))])?;
        GalBitorsor::validate(right, g, left_action)
    }

    /// ω̆^p(X): the twisted carrier of X with the left action induced by γ_p⊗I.
    pub fn twist_rep(&self, x: &GalRep) -> Result<(GalRep, CoeqResult), TorsorError> {
        let q = GalTwist::new(&self.right).coeq(x)?;
        let h = &self.left_group;
        let act = factor_through_epi(
            &tensor_map(&id(h.carrier()), &q.proj),
            &q.proj.compose(&tensor_map(&self.left_action, &id(x.carrier())))?,
        )?;
        Ok((GalRep::validate(h, q.obj.clone(), act)?, q))
    }
}

/// π^p with the data that exhibits it.
#[derive(Debug, Clone)]
pub struct GalTwistedGroup {
    pub group: FinGroupObj,
    /// p⊗p → π^p.
    pub quotient: CoeqResult,
    /// p as a (π^p, π)-bitorsor.
    pub bitorsor: GalBitorsor,
    /// Φ: p⊗p → p⊗π^p.
    pub phi: FinMap,
    pub phi_inv: FinMap,
    pub checks: Checklist,
}

/// π^p as the quotient of p⊗p by (a, b) ~ (a·d(b, c), c), with the structure maps factored
/// through the quotient.
pub fn twist_group(t: &GalTorsor) -> Result<GalTwistedGroup, TorsorError> {
    let p = t.carrier();
    let ip = id(p);
    let forget = tensor_all(&[&ip, &ip, &terminal(p)]);
    let shift = compose_all(&[
        &tensor_map(t.action(), &ip),
        &tensor_all(&[&ip, t.div(), &ip]),
        &tensor_all(&[&ip, &ip, &diagonal(p)]),
    ])?;
    let quotient = reflexive_coequalizer(&forget, &shift, &tensor_map(&ip, &diagonal(p)))?;
    let cq = &quotient.proj;
    let obj = quotient.obj.clone();

    let left_action = factor_through_epi(&tensor_map(cq, &ip), &t.action().compose(&tensor_map(&ip, t.div()))?)?;
    let mul = factor_through_epi(&tensor_map(&id(&obj), cq), &cq.compose(&tensor_map(&left_action, &ip))?)?;
    let unit = factor_through_epi(&terminal(p), &cq.compose(&diagonal(p))?)?;
    // the antipode comes from the opposite bitorsor: [a, b]⁻¹ = [b, a]
    let inv = factor_through_epi(cq, &cq.compose(&symmetry(p, p))?)?;
    let group = FinGroupObj::validate(obj.clone(), mul, unit.apply(0), inv)?;
    let bitorsor = GalBitorsor::validate(t.clone(), &group, left_action.clone())?;

    let mut checks = Checklist::new("twisted group");
    checks.extend(group.axioms()?);
    checks.extend(bitorsor.laws()?);
    let phi = compose_all(&[&tensor_map(&ip, cq), &tensor_map(&ip, &symmetry(p, p)), &tensor_map(&diagonal(p), &ip)])?;
    let phi_inv = compose_all(&[
        &tensor_map(&ip, &left_action),
        &tensor_map(&ip, &symmetry(&obj, p)),
        &tensor_map(&diagonal(p), &id(&obj)),
    ])?;
    if let Some(inv) = checks.iso("comparison p⊗p → p⊗π^p is invertible", &phi) {
        checks.equation("comparison inverse matches the displayed composite", &inv, &phi_inv)?;
    }
    Ok(GalTwistedGroup { group, quotient, bitorsor, phi, phi_inv, checks })
}

/// The fiber functor twisted by a right torsor: ω^p(X) = p ⊗_π x.
#[derive(Debug, Clone)]
pub struct GalTwist {
    torsor: GalTorsor,
}

impl GalTwist {
    pub fn new(t: &GalTorsor) -> Self {
        GalTwist { torsor: t.clone() }
    }

    pub fn torsor(&self) -> &GalTorsor {
        &self.torsor
    }

    /// ξ^p_X: p⊗x → ω^p(X), the coequalizer of I⊗γ_x and λ⊗I with section I⊗u⊗I.
    pub fn coeq(&self, x: &GalRep) -> Result<CoeqResult, RepError> {
        let (p, g) = (self.torsor.carrier(), self.torsor.group());
        if x.group() != g {
            return Err(RepError::GroupMismatch("representation of a different group".into()));
        }
        let ix = id(x.carrier());
        let f = tensor_map(&id(p), x.action());
        let h = tensor_map(self.torsor.action(), &ix);
        let s = tensor_all(&[&id(p), &g.unit_map(), &ix]);
        Ok(reflexive_coequalizer(&f, &h, &s)?)
    }

    /// (p⊗)_{x,y} = (I⊗s_{p,x}⊗I)(Δ_p⊗I⊗I): p⊗x⊗y → p⊗x⊗p⊗y.
    fn split(&self, x: &FinObj, y: &FinObj) -> Result<FinMap, ReconError> {
        let p = self.torsor.carrier();
        Ok(compose_all(&[
            &tensor_all(&[&id(p), &symmetry(p, x), &id(y)]),
            &tensor_all(&[&diagonal(p), &id(x), &id(y)]),
        ])?)
    }
}

impl GalFiber for GalTwist {
    fn group(&self) -> &FinGroupObj {
        self.torsor.group()
    }

    fn obj(&self, x: &GalRep) -> Result<FinObj, ReconError> {
        Ok(self.coeq(x)?.obj)
    }

    fn map(&self, f: &GalRepMor) -> Result<FinMap, ReconError> {
        let (qx, qy) = (self.coeq(&f.src)?, self.coeq(&f.dst)?);
        let lift = qy.proj.compose(&tensor_map(&id(self.torsor.carrier()), &f.map))?;
        Ok(factor_through_epi(&qx.proj, &lift)?)
    }

    fn tensor_coh(&self, x: &GalRep, y: &GalRep) -> Result<FinMap, ReconError> {
        let qxy = self.coeq(&x.tensor(y)?)?;
        let (qx, qy) = (self.coeq(x)?, self.coeq(y)?);
        let h = tensor_map(&qx.proj, &qy.proj).compose(&self.split(x.carrier(), y.carrier())?)?;
        Ok(factor_through_epi(&qxy.proj, &h)?)
    }

    fn unit_coh(&self) -> Result<FinMap, ReconError> {
        let q = self.coeq(&GalRep::unit(self.torsor.group()))?;
        Ok(factor_through_epi(&q.proj, &terminal(self.torsor.carrier()))?)
    }

    fn trivial_coh(&self, z: &FinObj) -> Result<FinMap, ReconError> {
        let q = self.coeq(&GalRep::trivial(self.torsor.group(), z))?;
        Ok(factor_through_epi(&q.proj, &tensor_map(&terminal(self.torsor.carrier()), &id(z)))?)
    }
}

/// The twisted fiber functor evaluated on probes, with its coherence maps certified.
#[derive(Debug, Clone)]
pub struct GalTwistedFiber {
    pub twist: GalTwist,
    pub probes: Vec<GalRep>,
    pub carriers: Vec<CoeqResult>,
    /// ω^p_{X,Y} for each visited probe pair.
    pub tensor_cohs: Vec<((usize, usize), FinMap)>,
    pub unit_coh: FinMap,
    /// ω̂^p_z for z of sizes 1, 2, 3.
    pub trivial_cohs: Vec<FinMap>,
    pub checks: Checklist,
}

pub fn twist_fiber(t: &GalTorsor, probes: &[GalRep]) -> Result<GalTwistedFiber, TorsorError> {
    let w = GalTwist::new(t);
    let p = t.carrier();
    let mut checks = Checklist::new("twisted fiber functor");
    let carriers: Vec<CoeqResult> = probes.iter().map(|x| w.coeq(x)).collect::<Result<_, _>>()?;
    let mut tensor_cohs = Vec::new();
    for (i, x) in probes.iter().enumerate() {
        for (j, y) in probes.iter().enumerate() {
            if x.size() * y.size() > PAIR_SIZE_LIMIT {
                continue;
            }
            let coh = w.tensor_coh(x, y)?;
            checks.iso(&format!("tensor coherence on probes {i},{j} is invertible"), &coh);
            let qxy = w.coeq(&x.tensor(y)?)?;
            let rhs = tensor_map(&carriers[i].proj, &carriers[j].proj).compose(&w.split(x.carrier(), y.carrier())?)?;
            checks.equation(&format!("tensor coherence square on probes {i},{j}"), &coh.compose(&qxy.proj)?, &rhs)?;
            tensor_cohs.push(((i, j), coh));
        }
    }
    let unit_coh = w.unit_coh()?;
    checks.iso("unit coherence is invertible", &unit_coh);
    let q1 = w.coeq(&GalRep::unit(t.group()))?;
    checks.equation("unit coherence square", &unit_coh.compose(&q1.proj)?, &terminal(p))?;
    let mut trivial_cohs = Vec::new();
    for n in 1..=3 {
        let z = FinObj::new(n);
        let coh = w.trivial_coh(&z)?;
        checks.iso(&format!("trivial coherence on a {n}-element set is invertible"), &coh);
        trivial_cohs.push(coh);
    }
    Ok(GalTwistedFiber { twist: w, probes: probes.to_vec(), carriers, tensor_cohs, unit_coh, trivial_cohs, checks })
}

/// ω^p(m) for an equivariant map m, given the coequalizers at its ends.
fn twisted_map(p: &FinObj, src: &CoeqResult, dst: &CoeqResult, m: &FinMap) -> Result<FinMap, TorsorError> {
    Ok(factor_through_epi(&src.proj, &dst.proj.compose(&tensor_map(&id(p), m))?)?)
}

struct ThetaStage {
    once: CoeqResult,
    twice: CoeqResult,
    mor: GalRepMor,
}

fn theta_stage(b: &GalBitorsor, bo: &GalBitorsor, x: &GalRep) -> Result<ThetaStage, TorsorError> {
    let p = b.right().carrier();
    let (y, once) = b.twist_rep(x)?;
    let (z, twice) = bo.twist_rep(&y)?;
    let ix = id(x.carrier());
    let h = compose_all(&[&twice.proj, &tensor_map(&id(p), &once.proj), &tensor_map(&diagonal(p), &ix)])?;
    let map = factor_through_epi(&tensor_map(&terminal(p), &ix), &h)?;
    Ok(ThetaStage { once, twice, mor: GalRepMor { src: x.clone(), dst: z, map } })
}

/// ϑ_X: X → ω̆^{p̊}ω̆^p(X), the unique map with ϑ_X(e_p⊗I) = ξ^{p̊}(I⊗ξ^p_X)(Δ_p⊗I).
/// Not validated; see [`twisted_equiv_check`].
pub fn theta(b: &GalBitorsor, x: &GalRep) -> Result<GalRepMor, TorsorError> {
    Ok(theta_stage(b, &b.opposite()?, x)?.mor)
}

fn theta_checks(b: &GalBitorsor, probes: &[GalRep], tag: &str) -> Result<Checklist, TorsorError> {
    let bo = b.opposite()?;
    let p = b.right().carrier();
    let mut c = Checklist::new("twisted equivalence");
    let mut stages = Vec::new();
    for (k, x) in probes.iter().enumerate() {
        let st = theta_stage(b, &bo, x)?;
        c.iso(&format!("{tag}: component on probe {k} is invertible"), &st.mor.map);
        c.assert(&format!("{tag}: component on probe {k} is equivariant"), st.mor.laws()?.passed(), None);
        stages.push(st);
    }
    for (i, x) in probes.iter().enumerate() {
        for (j, y) in probes.iter().enumerate() {
            let Ok(ms) = gal::hom_rep_capped(x, y, MAPS_PER_PAIR) else { continue };
            for (k, m) in ms.iter().enumerate() {
                let m1 = twisted_map(p, &stages[i].once, &stages[j].once, &m.map)?;
                let m2 = twisted_map(p, &stages[i].twice, &stages[j].twice, &m1)?;
                c.equation(
                    &format!("{tag}: natural along map {k} from probe {i} to {j}"),
                    &m2.compose(&stages[i].mor.map)?,
                    &stages[j].mor.map.compose(&m.map)?,
                )?;
            }
        }
    }
    Ok(c)
}

/// Builds π^p, the opposite bitorsor p̊, and checks ϑ^p on `probes` and ϑ^{p̊} on the
/// standard probes of π^p.
pub fn twisted_equiv_check(t: &GalTorsor, probes: &[GalRep]) -> Result<Checklist, TorsorError> {
    let tg = twist_group(t)?;
    let b = &tg.bitorsor;
    let bo = b.opposite()?;
    let mut c = Checklist::new("twisted equivalence");
    c.extend(tg.checks.clone());
    let boo = bo.opposite()?;
    c.equation("opposite twice restores the right action", boo.right().action(), b.right().action())?;
    c.equation("opposite twice restores the left action", boo.left_action(), b.left_action())?;
    c.extend(theta_checks(b, probes, "torsor")?);
    let back = gal::probes(&tg.group, probes.len());
    c.extend(theta_checks(&bo, &back, "opposite torsor")?);
    Ok(c)
}

/// ϑ^f: ω^p ⇒ ω^q for a torsor isomorphism f: p → q, with ϑ^f_X ξ^p_X = ξ^q_X (f⊗I).
pub fn torsor_iso_to_nat(
    p: &GalTorsor,
    q: &GalTorsor,
    f: &FinMap,
    probes: &[GalRep],
) -> Result<NatProbe<FinMap>, TorsorError> {
    let f = f.retyped(p.carrier(), q.carrier())?;
    let laws = p.morphism_laws(q, &f)?;
    if !laws.passed() {
        return Err(TorsorError::NotTorsorMorphism(laws.into_reports()));
    }
    let mut checks = Checklist::new("torsor transformation");
    checks.extend(laws);
    checks.iso("torsor morphism is invertible", &f);
    let (wp, wq) = (GalTwist::new(p), GalTwist::new(q));
    let component = |x: &GalRep| -> Result<FinMap, TorsorError> {
        let (qp, qq) = (wp.coeq(x)?, wq.coeq(x)?);
        Ok(factor_through_epi(&qp.proj, &qq.proj.compose(&tensor_map(&f, &id(x.carrier())))?)?)
    };
    let mut components = Vec::new();
    let mut inverses = Vec::new();
    for (k, x) in probes.iter().enumerate() {
        let th = component(x)?;
        let inv = checks.iso(&format!("component on probe {k} is invertible"), &th);
        inverses.push(inv.unwrap_or_else(|| th.clone()));
        components.push(th);
    }
    let one = GalRep::unit(p.group());
    checks.equation("respects the unit coherence", &wq.unit_coh()?.compose(&component(&one)?)?, &wp.unit_coh()?)?;
    let z = FinObj::new(2);
    let tz = GalRep::trivial(p.group(), &z);
    checks.equation(
        "respects the trivial coherence",
        &wq.trivial_coh(&z)?.compose(&component(&tz)?)?,
        &wp.trivial_coh(&z)?,
    )?;
    for (i, x) in probes.iter().enumerate() {
        for (j, y) in probes.iter().enumerate() {
            if x.size() * y.size() <= PAIR_SIZE_LIMIT {
                let lhs = wq.tensor_coh(x, y)?.compose(&component(&x.tensor(y)?)?)?;
                let rhs = tensor_map(&components[i], &components[j]).compose(&wp.tensor_coh(x, y)?)?;
                checks.equation(&format!("respects the tensor coherence on probes {i},{j}"), &lhs, &rhs)?;
            }
            let Ok(ms) = gal::hom_rep_capped(x, y, MAPS_PER_PAIR) else { continue };
            for (k, m) in ms.iter().enumerate() {
                checks.equation(
                    &format!("natural along map {k} from probe {i} to {j}"),
                    &wq.map(m)?.compose(&components[i])?,
                    &components[j].compose(&wp.map(m)?)?,
                )?;
            }
        }
    }
    Ok(NatProbe { components, inverses, checks })
}

/// The torsor attached to the twisted fiber functor and the counit back to the input.
#[derive(Debug, Clone)]
pub struct GalRoundTrip {
    pub torsor: GalTorsor,
    /// f^p: ω^p(ω_!κ) → p.
    pub counit: FinMap,
    pub checks: Checklist,
}

/// Sends ω^p to the torsor ω^p(ω_!κ) with action ω^p(ε)∘hatar⁻¹, and compares it with p
/// through the unique f^p with f^p ξ^p = λ_p.
pub fn fib_tors_roundtrip(t: &GalTorsor) -> Result<GalRoundTrip, TorsorError> {
    let g = t.group();
    let w = GalTwist::new(t);
    let phi = Colax::new(&w);
    let reg = GalRep::free(g, &FinObj::unit());
    let q = w.coeq(&reg)?;
    let mut checks = Checklist::new("fiber functor to torsor round trip");
    let hatar = phi.hatar(reg.carrier())?;
    let hatar_inv = checks
        .iso("hatar on the group is invertible", &hatar)
        .ok_or_else(|| TorsorError::RoundTripFailure("hatar on the group is not invertible".into()))?;
    let action = w.map(&reg.free_counit())?.compose(&hatar_inv)?;
    let torsor = GalTorsor::validate(g, q.obj.clone(), action)
        .map_err(|e| TorsorError::RoundTripFailure(format!("associated torsor: {e}")))?;
    checks.extend(torsor.laws()?);
    let counit = factor_through_epi(&q.proj, t.action())?;
    checks.iso("counit is invertible", &counit);
    checks.extend(torsor.morphism_laws(t, &counit)?);
    Ok(GalRoundTrip { torsor, counit, checks })
}
