//! Left torsors under a commutative Hopf algebra: comodule algebras with invertible shear.

use hopf_objects::{CommAlgObj, HopfObj};
use kosmos_core::linear::{
    coreflexive_equalizer, factor_through_mono, symmetry, tensor_map, tensor_obj,
};
use kosmos_core::{compose_all, tensor_all, EqResult, LinMap, Morphism, Scalar, VecObj};
use lawcheck::{certify_iso, Checklist};
use reconstruction::{GroFiber, Lax, ReconError};
use rep_category::{gro, GroRep, GroRepMor, RepError};

use crate::{NatProbe, TorsorError, PAIR_SIZE_LIMIT};

const MAPS_PER_PAIR: usize = 4;

fn id<F: Scalar>(x: &VecObj) -> LinMap<F> {
    LinMap::identity(x)
}

/// Multiplication of the tensor product algebra a⊗b.
fn tensor_mul<F: Scalar>(a: &CommAlgObj<F>, b: &CommAlgObj<F>) -> Result<LinMap<F>, TorsorError> {
    let (x, y) = (a.carrier(), b.carrier());
    Ok(tensor_map(a.mul_map(), b.mul_map()).compose(&tensor_all(&[&id(x), &symmetry(y, x), &id(y)]))?)
}

fn left_coaction_laws<F: Scalar>(
    group: &HopfObj<F>,
    alg: &CommAlgObj<F>,
    coaction: &LinMap<F>,
) -> Result<Checklist, TorsorError> {
    let p = alg.carrier();
    let (ip, ig) = (id(p), id(group.carrier()));
    let mut c = Checklist::new("left coaction law");
    c.equation(
        "coassociativity",
        &tensor_map(group.comul(), &ip).compose(coaction)?,
        &tensor_map(&ig, coaction).compose(coaction)?,
    )?;
    c.equation("counit", &tensor_map(group.counit(), &ip).compose(coaction)?, &ip)?;
    c.equation_split(
        "coaction is multiplicative",
        &coaction.compose(alg.mul_map())?,
        &tensor_mul(&group.algebra(), alg)?.compose(&tensor_map(coaction, coaction))?,
        &[p.dim(), p.dim()],
    )?;
    c.equation(
        "coaction is unital",
        &coaction.compose(alg.unit_map())?,
        &tensor_map(group.unit_map(), alg.unit_map()),
    )?;
    Ok(c)
}

/// A left π-torsor: a commutative algebra p with an algebra coaction λ: p → π⊗p whose shear
/// τ = (I⊗∇)(λ⊗I): p⊗p → π⊗p is invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroTorsor<F> {
    group: HopfObj<F>,
    algebra: CommAlgObj<F>,
    coaction: LinMap<F>,
    tau: LinMap<F>,
    tau_inv: LinMap<F>,
    div: LinMap<F>,
}

impl<F: Scalar> GroTorsor<F> {
    pub fn validate(group: &HopfObj<F>, algebra: CommAlgObj<F>, coaction: LinMap<F>) -> Result<Self, TorsorError> {
        let p = algebra.carrier().clone();
        if p.dim() == 0 {
            return Err(TorsorError::EmptyCarrier);
        }
        let coaction = coaction.retyped(&p, &tensor_obj(group.carrier(), &p))?;
        let laws = left_coaction_laws(group, &algebra, &coaction)?;
        if !laws.passed() {
            return Err(TorsorError::ActionLaw(laws.into_reports()));
        }
        let tau = tensor_map(&id(group.carrier()), algebra.mul_map()).compose(&tensor_map(&coaction, &id(&p)))?;
        let tau_inv = certify_iso(&tau).map_err(|e| TorsorError::TauNotIso(e.to_string()))?;
        let div = tau_inv.compose(&tensor_map(&id(group.carrier()), algebra.unit_map()))?;
        let t = GroTorsor { group: group.clone(), algebra, coaction, tau, tau_inv, div };
        let c = t.laws()?;
        if !c.passed() {
            return Err(TorsorError::ActionLaw(c.into_reports()));
        }
        Ok(t)
    }

    /// π over itself with λ = Δ.
    pub fn regular(group: &HopfObj<F>) -> Result<Self, TorsorError> {
        GroTorsor::validate(group, group.algebra(), group.comul().clone())
    }

    pub fn group(&self) -> &HopfObj<F> {
        &self.group
    }

    pub fn algebra(&self) -> &CommAlgObj<F> {
        &self.algebra
    }

    pub fn carrier(&self) -> &VecObj {
        self.algebra.carrier()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn coaction(&self) -> &LinMap<F> {
        &self.coaction
    }

    pub fn tau(&self) -> &LinMap<F> {
        &self.tau
    }

    pub fn tau_inv(&self) -> &LinMap<F> {
        &self.tau_inv
    }

    /// d = τ⁻¹(I⊗u): π → p⊗p.
    pub fn div(&self) -> &LinMap<F> {
        &self.div
    }

    pub fn laws(&self) -> Result<Checklist, TorsorError> {
        let g = &self.group;
        let p = self.carrier();
        let (ip, ig) = (id(p), id(g.carrier()));
        let (mul, unit) = (self.algebra.mul_map(), self.algebra.unit_map());
        let (tau, lam, d) = (&self.tau, &self.coaction, &self.div);
        let n = p.dim();
        let mut c = Checklist::new("torsor identities");
        c.extend(left_coaction_laws(g, &self.algebra, lam)?);
        c.equation_split(
            "tau is linear over the right factor",
            &tau.compose(&tensor_map(&ip, mul))?,
            &tensor_map(&ig, mul).compose(&tensor_map(tau, &ip))?,
            &[n, n, n],
        )?;
        c.equation("tau at the unit is the coaction", &tau.compose(&tensor_map(&ip, unit))?, lam)?;
        c.equation_split(
            "tau commutes with the coaction",
            &tensor_map(&ig, tau).compose(&tensor_map(lam, &ip))?,
            &tensor_map(g.comul(), &ip).compose(tau)?,
            &[n, n],
        )?;
        c.equation_split("counit after tau is the product", &tensor_map(g.counit(), &ip).compose(tau)?, mul, &[n, n])?;
        c.equation(
            "division is colinear",
            &tensor_map(lam, &ip).compose(d)?,
            &tensor_map(&ig, d).compose(g.comul())?,
        )?;
        c.equation("product of the division is the counit", &mul.compose(d)?, &unit.compose(g.counit())?)?;
        c.equation_split(
            "division gives the shear inverse",
            &self.tau_inv,
            &tensor_map(&ip, mul).compose(&tensor_map(d, &ip))?,
            &[g.dim(), n],
        )?;
        c.equation("division is antisymmetric", &symmetry(p, p).compose(d)?, &d.compose(g.antipode())?)?;
        Ok(c)
    }

    /// f: p → q is an algebra map commuting with the coactions.
    pub fn morphism_laws(&self, other: &GroTorsor<F>, f: &LinMap<F>) -> Result<Checklist, TorsorError> {
        if self.group != other.group {
            return Err(RepError::GroupMismatch("torsors over different Hopf algebras".into()).into());
        }
        let mut c = Checklist::new("torsor morphism");
        c.equation(
            "commutes with the coactions",
            &other.coaction.compose(f)?,
            &tensor_map(&id(self.group.carrier()), f).compose(&self.coaction)?,
        )?;
        c.equation_split(
            "preserves the product",
            &f.compose(self.algebra.mul_map())?,
            &other.algebra.mul_map().compose(&tensor_map(f, f))?,
            &[self.dim(), self.dim()],
        )?;
        c.equation("preserves the unit", &f.compose(self.algebra.unit_map())?, other.algebra.unit_map())?;
        Ok(c)
    }
}

/// A left π-torsor with a commuting right coaction of a second Hopf algebra π'.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroBitorsor<F> {
    left: GroTorsor<F>,
    right_group: HopfObj<F>,
    right_coaction: LinMap<F>,
}

impl<F: Scalar> GroBitorsor<F> {
    pub fn validate(left: GroTorsor<F>, right_group: &HopfObj<F>, right_coaction: LinMap<F>) -> Result<Self, TorsorError> {
        let p = left.carrier().clone();
        let right_coaction = right_coaction.retyped(&p, &tensor_obj(&p, right_group.carrier()))?;
        let b = GroBitorsor { left, right_group: right_group.clone(), right_coaction };
        let c = b.laws()?;
        if !c.passed() {
            return Err(TorsorError::ActionLaw(c.into_reports()));
        }
        Ok(b)
    }

    pub fn laws(&self) -> Result<Checklist, TorsorError> {
        let (h, p) = (&self.right_group, self.left.carrier());
        let (ih, ip, ig) = (id(h.carrier()), id(p), id(self.left.group.carrier()));
        let (rho, lam) = (&self.right_coaction, self.left.coaction());
        let mut c = Checklist::new("bitorsor");
        c.equation(
            "right coassociativity",
            &tensor_map(rho, &ih).compose(rho)?,
            &tensor_map(&ip, h.comul()).compose(rho)?,
        )?;
        c.equation("right counit", &tensor_map(&ip, h.counit()).compose(rho)?, &ip)?;
        let alg = self.left.algebra();
        let target = tensor_mul(alg, &h.algebra())?;
        c.equation_split(
            "right coaction is multiplicative",
            &rho.compose(alg.mul_map())?,
            &target.compose(&tensor_map(rho, rho))?,
            &[p.dim(), p.dim()],
        )?;
        c.equation(
            "right coaction is unital",
            &rho.compose(alg.unit_map())?,
            &tensor_map(alg.unit_map(), h.unit_map()),
        )?;
        c.equation(
            "coactions commute",
            &tensor_map(lam, &ih).compose(rho)?,
            &tensor_map(&ig, rho).compose(lam)?,
        )?;
        let right_shear = tensor_map(alg.mul_map(), &ih).compose(&tensor_map(&ip, rho))?;
        c.iso("right shear is invertible", &right_shear);
        Ok(c)
    }

    pub fn left(&self) -> &GroTorsor<F> {
        &self.left
    }

    pub fn right_group(&self) -> &HopfObj<F> {
        &self.right_group
    }

    pub fn right_coaction(&self) -> &LinMap<F> {
        &self.right_coaction
    }

    /// Sides exchanged through the antipodes.
    pub fn opposite(&self) -> Result<GroBitorsor<F>, TorsorError> {
        let p = self.left.carrier();
        let (h, g) = (&self.right_group, self.left.group());
        let left = compose_all(&[
            &tensor_map(h.antipode(), &id(p)),
            &symmetry(p, h.carrier()),
            &self.right_coaction,
        ])?;
        let left = GroTorsor::validate(h, self.left.algebra().clone(), left)?;
        let right = compose_all(&[&tensor_map(&id(p), g.antipode()), &symmetry(g.carrier(), p), self.left.coaction()])?;
        GroBitorsor::validate(left, g, right)
    }

    /// ω̆^p(X): the twisted space of X with the right π'-coaction induced by I⊗ρ'.
    pub fn twist_rep(&self, x: &GroRep<F>) -> Result<(GroRep<F>, EqResult<F>), TorsorError> {
        let e = GroTwist::new(&self.left).equalizer(x)?;
        let h = &self.right_group;
        let co = factor_through_mono(
            &tensor_map(&e.incl, &id(h.carrier())),
            &tensor_map(&id(x.carrier()), &self.right_coaction).compose(&e.incl)?,
        )?;
        Ok((GroRep::validate(h, e.obj.clone(), co)?, e))
    }
}

/// π^p with the data that exhibits it.
#[derive(Debug, Clone)]
pub struct GroTwistedGroup<F> {
    pub group: HopfObj<F>,
    /// π^p ↪ p⊗p.
    pub inclusion: EqResult<F>,
    pub bitorsor: GroBitorsor<F>,
    /// Φ: π^p⊗p → p⊗p.
    pub phi: LinMap<F>,
    pub phi_inv: LinMap<F>,
    pub checks: Checklist,
}

/// π^p as the subspace of p⊗p cut out by u⊗I⊗I = (∇⊗I⊗I)(I⊗d⊗I)(I⊗λ), with its structure
/// maps factored through the inclusion.
pub fn twist_group<F: Scalar>(t: &GroTorsor<F>) -> Result<GroTwistedGroup<F>, TorsorError> {
    let p = t.carrier();
    let ip = id(p);
    let alg = t.algebra();
    let (mul, unit) = (alg.mul_map(), alg.unit_map());
    let f = tensor_all(&[unit, &ip, &ip]);
    let g = compose_all(&[&tensor_all(&[mul, &ip, &ip]), &tensor_all(&[&ip, t.div(), &ip]), &tensor_map(&ip, t.coaction())])?;
    let inclusion = coreflexive_equalizer(&f, &g, &tensor_map(mul, &ip))?;
    let eq = &inclusion.incl;
    let obj = inclusion.obj.clone();
    let io = id(&obj);

    let pp_mul = tensor_mul(alg, alg)?;
    let new_mul = factor_through_mono(eq, &pp_mul.compose(&tensor_map(eq, eq))?)?;
    let new_unit = factor_through_mono(eq, &tensor_map(unit, unit))?;
    let right = factor_through_mono(&tensor_map(&ip, eq), &tensor_map(t.div(), &ip).compose(t.coaction())?)?;
    let comul = factor_through_mono(&tensor_map(eq, &io), &tensor_map(&ip, &right).compose(eq)?)?;
    let counit = factor_through_mono(unit, &mul.compose(eq)?)?;
    let antipode = factor_through_mono(eq, &symmetry(p, p).compose(eq)?)?;
    let group = HopfObj::validate(obj.clone(), new_mul, new_unit, comul, counit, antipode)?;
    let bitorsor = GroBitorsor::validate(t.clone(), &group, right.clone())?;

    let mut checks = Checklist::new("twisted group");
    checks.extend(group.axioms()?);
    checks.extend(bitorsor.laws()?);
    let phi = compose_all(&[&tensor_map(&ip, mul), &tensor_map(&symmetry(p, p), &ip), &tensor_map(eq, &ip)])?;
    let phi_inv =
        compose_all(&[&tensor_map(&io, mul), &tensor_map(&symmetry(p, &obj), &ip), &tensor_map(&right, &ip)])?;
    if let Some(inv) = checks.iso("comparison π^p⊗p → p⊗p is invertible", &phi) {
        checks.equation("comparison inverse matches the displayed composite", &inv, &phi_inv)?;
    }
    Ok(GroTwistedGroup { group, inclusion, bitorsor, phi, phi_inv, checks })
}

/// The fiber functor twisted by a left torsor: ω^p(X) = x □_π p.
#[derive(Debug, Clone)]
pub struct GroTwist<F> {
    torsor: GroTorsor<F>,
}

impl<F: Scalar> GroTwist<F> {
    pub fn new(t: &GroTorsor<F>) -> Self {
        GroTwist { torsor: t.clone() }
    }

    pub fn torsor(&self) -> &GroTorsor<F> {
        &self.torsor
    }

    /// ξ^p_X: ω^p(X) → x⊗p, the equalizer of ρ_x⊗I and I⊗λ with retraction I⊗e⊗I.
    pub fn equalizer(&self, x: &GroRep<F>) -> Result<EqResult<F>, RepError> {
        let (p, g) = (self.torsor.carrier(), self.torsor.group());
        if x.group() != g {
            return Err(RepError::GroupMismatch("comodule over a different Hopf algebra".into()));
        }
        let ix = id(x.carrier());
        let f = tensor_map(x.coaction(), &id(p));
        let h = tensor_map(&ix, self.torsor.coaction());
        let r = tensor_all(&[&ix, g.counit(), &id(p)]);
        Ok(coreflexive_equalizer(&f, &h, &r)?)
    }

    /// (I⊗I⊗∇)(I⊗s_{p,y}⊗I): x⊗p⊗y⊗p → x⊗y⊗p.
    fn merge(&self, x: &VecObj, y: &VecObj) -> Result<LinMap<F>, ReconError> {
        let p = self.torsor.carrier();
        Ok(compose_all(&[
            &tensor_all(&[&id(x), &id(y), self.torsor.algebra().mul_map()]),
            &tensor_all(&[&id(x), &symmetry(p, y), &id(p)]),
        ])?)
    }
}

impl<F: Scalar> GroFiber<F> for GroTwist<F> {
    fn group(&self) -> &HopfObj<F> {
        self.torsor.group()
    }

    fn obj(&self, x: &GroRep<F>) -> Result<VecObj, ReconError> {
        Ok(self.equalizer(x)?.obj)
    }

    fn map(&self, f: &GroRepMor<F>) -> Result<LinMap<F>, ReconError> {
        let (ex, ey) = (self.equalizer(&f.src)?, self.equalizer(&f.dst)?);
        let h = tensor_map(&f.map, &id(self.torsor.carrier())).compose(&ex.incl)?;
        Ok(factor_through_mono(&ey.incl, &h)?)
    }

    fn tensor_coh(&self, x: &GroRep<F>, y: &GroRep<F>) -> Result<LinMap<F>, ReconError> {
        let exy = self.equalizer(&x.tensor(y)?)?;
        let (ex, ey) = (self.equalizer(x)?, self.equalizer(y)?);
        let h = self.merge(x.carrier(), y.carrier())?.compose(&tensor_map(&ex.incl, &ey.incl))?;
        Ok(factor_through_mono(&exy.incl, &h)?)
    }

    fn unit_coh(&self) -> Result<LinMap<F>, ReconError> {
        let e = self.equalizer(&GroRep::unit(self.torsor.group()))?;
        Ok(factor_through_mono(&e.incl, self.torsor.algebra().unit_map())?)
    }

    fn trivial_coh(&self, z: &VecObj) -> Result<LinMap<F>, ReconError> {
        let e = self.equalizer(&GroRep::trivial(self.torsor.group(), z))?;
        Ok(factor_through_mono(&e.incl, &tensor_map(&id(z), self.torsor.algebra().unit_map()))?)
    }
}

#[derive(Debug, Clone)]
pub struct GroTwistedFiber<F> {
    pub twist: GroTwist<F>,
    pub probes: Vec<GroRep<F>>,
    pub carriers: Vec<EqResult<F>>,
    pub tensor_cohs: Vec<((usize, usize), LinMap<F>)>,
    pub unit_coh: LinMap<F>,
    pub trivial_cohs: Vec<LinMap<F>>,
    pub checks: Checklist,
}

pub fn twist_fiber<F: Scalar>(t: &GroTorsor<F>, probes: &[GroRep<F>]) -> Result<GroTwistedFiber<F>, TorsorError> {
    let w = GroTwist::new(t);
    let mut checks = Checklist::new("twisted fiber functor");
    let carriers: Vec<EqResult<F>> = probes.iter().map(|x| w.equalizer(x)).collect::<Result<_, _>>()?;
    for (k, (x, e)) in probes.iter().zip(&carriers).enumerate() {
        checks.assert(
            &format!("twisted space of probe {k} has the dimension of the probe"),
            e.obj.dim() == x.dim(),
            Some(format!("{} vs {}", e.obj.dim(), x.dim())),
        );
    }
    let mut tensor_cohs = Vec::new();
    for (i, x) in probes.iter().enumerate() {
        for (j, y) in probes.iter().enumerate() {
            if x.dim() * y.dim() > PAIR_SIZE_LIMIT {
                continue;
            }
            let coh = w.tensor_coh(x, y)?;
            checks.iso(&format!("tensor coherence on probes {i},{j} is invertible"), &coh);
            tensor_cohs.push(((i, j), coh));
        }
    }
    let unit_coh = w.unit_coh()?;
    checks.iso("unit coherence is invertible", &unit_coh);
    let mut trivial_cohs = Vec::new();
    for n in 1..=3 {
        let coh = w.trivial_coh(&VecObj::new(n))?;
        checks.iso(&format!("trivial coherence in dimension {n} is invertible"), &coh);
        trivial_cohs.push(coh);
    }
    Ok(GroTwistedFiber { twist: w, probes: probes.to_vec(), carriers, tensor_cohs, unit_coh, trivial_cohs, checks })
}

fn twisted_map<F: Scalar>(p: &VecObj, src: &EqResult<F>, dst: &EqResult<F>, m: &LinMap<F>) -> Result<LinMap<F>, TorsorError> {
    Ok(factor_through_mono(&dst.incl, &tensor_map(m, &id(p)).compose(&src.incl)?)?)
}

fn capped_homs<F: Scalar>(x: &GroRep<F>, y: &GroRep<F>) -> Vec<GroRepMor<F>> {
    gro::hom_rep(x, y).map(|mut v| {
        v.truncate(MAPS_PER_PAIR);
        v
    }).unwrap_or_default()
}

type ThetaBack<F> = (GroRep<F>, EqResult<F>, EqResult<F>, LinMap<F>);

/// ϑ'_X: ω̆^{p̊}ω̆^p(X) → x, the unique map with (I⊗u)ϑ' = (I⊗∇)(ξ^p_X⊗I)ξ^{p̊}.
fn theta_back<F: Scalar>(
    b: &GroBitorsor<F>,
    bo: &GroBitorsor<F>,
    x: &GroRep<F>,
) -> Result<ThetaBack<F>, TorsorError> {
    let p = b.left().carrier();
    let alg = b.left().algebra();
    let (y, e1) = b.twist_rep(x)?;
    let (z, e2) = bo.twist_rep(&y)?;
    let ix = id(x.carrier());
    let h = compose_all(&[&tensor_map(&ix, alg.mul_map()), &tensor_map(&e1.incl, &id(p)), &e2.incl])?;
    let back = factor_through_mono(&tensor_map(&ix, alg.unit_map()), &h)?;
    Ok((z, e1, e2, back))
}

/// ϑ_X: X → ω̆^{p̊}ω̆^p(X), the inverse of ϑ'_X. Not validated; see [`twisted_equiv_check`].
pub fn theta<F: Scalar>(b: &GroBitorsor<F>, x: &GroRep<F>) -> Result<GroRepMor<F>, TorsorError> {
    let (z, _, _, back) = theta_back(b, &b.opposite()?, x)?;
    Ok(GroRepMor { src: x.clone(), dst: z, map: certify_iso(&back)? })
}

fn theta_checks<F: Scalar>(b: &GroBitorsor<F>, probes: &[GroRep<F>], tag: &str) -> Result<Checklist, TorsorError> {
    let bo = b.opposite()?;
    let p = b.left().carrier();
    let mut c = Checklist::new("twisted equivalence");
    let mut stages = Vec::new();
    for (k, x) in probes.iter().enumerate() {
        let (z, e1, e2, back) = theta_back(b, &bo, x)?;
        let Some(theta) = c.iso(&format!("{tag}: component on probe {k} is invertible"), &back) else {
            continue;
        };
        let mor = GroRepMor { src: x.clone(), dst: z, map: theta.clone() };
        c.assert(&format!("{tag}: component on probe {k} is colinear"), mor.laws()?.passed(), None);
        stages.push((k, e1, e2, theta));
    }
    for (i, ei1, ei2, ti) in &stages {
        for (j, ej1, ej2, tj) in &stages {
            for (k, m) in capped_homs(&probes[*i], &probes[*j]).iter().enumerate() {
                let m1 = twisted_map(p, ei1, ej1, &m.map)?;
                let m2 = twisted_map(p, ei2, ej2, &m1)?;
                c.equation(
                    &format!("{tag}: natural along map {k} from probe {i} to {j}"),
                    &m2.compose(ti)?,
                    &tj.compose(&m.map)?,
                )?;
            }
        }
    }
    Ok(c)
}

pub fn twisted_equiv_check<F: Scalar>(t: &GroTorsor<F>, probes: &[GroRep<F>]) -> Result<Checklist, TorsorError> {
    let tg = twist_group(t)?;
    let b = &tg.bitorsor;
    let bo = b.opposite()?;
    let mut c = Checklist::new("twisted equivalence");
    c.extend(tg.checks.clone());
    let boo = bo.opposite()?;
    c.equation("opposite twice restores the left coaction", boo.left().coaction(), b.left().coaction())?;
    c.equation("opposite twice restores the right coaction", boo.right_coaction(), b.right_coaction())?;
    c.extend(theta_checks(b, probes, "torsor")?);
    let back = gro::probes(&tg.group, probes.len());
    c.extend(theta_checks(&bo, &back, "opposite torsor")?);
    Ok(c)
}

/// ϑ^f: ω^p ⇒ ω^q for a torsor isomorphism f: p → q, with ξ^q_X ϑ^f_X = (I⊗f)ξ^p_X.
pub fn torsor_iso_to_nat<F: Scalar>(
    p: &GroTorsor<F>,
    q: &GroTorsor<F>,
    f: &LinMap<F>,
    probes: &[GroRep<F>],
) -> Result<NatProbe<LinMap<F>>, TorsorError> {
    let f = f.retyped(p.carrier(), q.carrier())?;
    let laws = p.morphism_laws(q, &f)?;
    if !laws.passed() {
        return Err(TorsorError::NotTorsorMorphism(laws.into_reports()));
    }
    let mut checks = Checklist::new("torsor transformation");
    checks.extend(laws);
    checks.iso("torsor morphism is invertible", &f);
    let (wp, wq) = (GroTwist::new(p), GroTwist::new(q));
    let component = |x: &GroRep<F>| -> Result<LinMap<F>, TorsorError> {
        let (ep, eq) = (wp.equalizer(x)?, wq.equalizer(x)?);
        Ok(factor_through_mono(&eq.incl, &tensor_map(&id(x.carrier()), &f).compose(&ep.incl)?)?)
    };
    let mut components = Vec::new();
    let mut inverses = Vec::new();
    for (k, x) in probes.iter().enumerate() {
        let th = component(x)?;
        let inv = checks.iso(&format!("component on probe {k} is invertible"), &th);
        inverses.push(inv.unwrap_or_else(|| th.clone()));
        components.push(th);
    }
    let one = GroRep::unit(p.group());
    checks.equation("respects the unit coherence", &component(&one)?.compose(&wp.unit_coh()?)?, &wq.unit_coh()?)?;
    let z = VecObj::new(2);
    let tz = GroRep::trivial(p.group(), &z);
    checks.equation(
        "respects the trivial coherence",
        &component(&tz)?.compose(&wp.trivial_coh(&z)?)?,
        &wq.trivial_coh(&z)?,
    )?;
    for (i, x) in probes.iter().enumerate() {
        for (j, y) in probes.iter().enumerate() {
            if x.dim() * y.dim() <= PAIR_SIZE_LIMIT {
                let lhs = component(&x.tensor(y)?)?.compose(&wp.tensor_coh(x, y)?)?;
                let rhs = wq.tensor_coh(x, y)?.compose(&tensor_map(&components[i], &components[j]))?;
                checks.equation(&format!("respects the tensor coherence on probes {i},{j}"), &lhs, &rhs)?;
            }
            for (k, m) in capped_homs(x, y).iter().enumerate() {
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

#[derive(Debug, Clone)]
pub struct GroRoundTrip<F> {
    pub torsor: GroTorsor<F>,
    /// f^p: p → ω^p(π), the corestriction of λ_p.
    pub unit: LinMap<F>,
    pub checks: Checklist,
}

/// Sends ω^p to the torsor ω^p(π) with coaction tahar⁻¹∘ω^p(Δ) and the algebra structure carried
/// by the monoidal structure of ω^p, and compares it with p.
pub fn fib_tors_roundtrip<F: Scalar>(t: &GroTorsor<F>) -> Result<GroRoundTrip<F>, TorsorError> {
    let g = t.group();
    let w = GroTwist::new(t);
    let phi = Lax::new(&w);
    let reg = GroRep::regular(g);
    let e = w.equalizer(&reg)?;
    let mut checks = Checklist::new("fiber functor to torsor round trip");
    let tahar = phi.tahar(g.carrier())?;
    let tahar_inv = checks
        .iso("tahar on the Hopf algebra is invertible", &tahar)
        .ok_or_else(|| TorsorError::RoundTripFailure("tahar on the Hopf algebra is not invertible".into()))?;
    let coaction = tahar_inv.compose(&w.map(&reg.cofree_unit())?)?;
    let reg2 = reg.tensor(&reg)?;
    let mul_mor = GroRepMor::validate(&reg2, &reg, g.mul_map().clone())?;
    let unit_mor = GroRepMor::validate(&GroRep::unit(g), &reg, g.unit_map().clone())?;
    let mul = w.map(&mul_mor)?.compose(&w.tensor_coh(&reg, &reg)?)?;
    let unit = w.map(&unit_mor)?.compose(&w.unit_coh()?)?;
    let algebra = CommAlgObj::validate(e.obj.clone(), mul, unit)
        .map_err(|err| TorsorError::RoundTripFailure(format!("associated algebra: {err}")))?;
    let torsor = GroTorsor::validate(g, algebra, coaction)
        .map_err(|err| TorsorError::RoundTripFailure(format!("associated torsor: {err}")))?;
    checks.extend(torsor.laws()?);
    let unit_map = factor_through_mono(&e.incl, t.coaction())?;
    checks.iso("comparison is invertible", &unit_map);
    checks.extend(t.morphism_laws(&torsor, &unit_map)?);
    Ok(GroRoundTrip { torsor, unit: unit_map, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopf_objects::catalog::{cyclic, function_algebra, grouplike_z2};
    use kosmos_core::{rat, Rat};

    #[test]
    fn regular_shear_inverse_uses_antipode() {
        let h = function_algebra(&cyclic(3)).unwrap();
        let t = GroTorsor::regular(&h).unwrap();
        let ip = id::<Rat>(h.carrier());
        let expected = compose_all(&[
            &tensor_map(&ip, h.mul_map()),
            &tensor_all(&[&ip, h.antipode(), &ip]),
            &tensor_map(h.comul(), &ip),
        ])
        .unwrap();
        assert!(t.tau_inv().equals(&expected).unwrap());
    }

    #[test]
    fn twisted_group_of_regular_has_same_dimension() {
        let h = grouplike_z2().unwrap();
        let tg = twist_group(&GroTorsor::regular(&h).unwrap()).unwrap();
        assert_eq!(tg.group.dim(), 2);
        assert!(tg.checks.passed(), "{:?}", tg.checks.failures());
    }

    #[test]
    fn twisted_spaces_keep_dimension() {
        let h = grouplike_z2().unwrap();
        let t = GroTorsor::regular(&h).unwrap();
        let tf = twist_fiber(&t, &gro::probes(&h, 5)).unwrap();
        assert!(tf.checks.passed(), "{:?}", tf.checks.failures());
        assert_eq!(tf.unit_coh.get(0, 0), rat(1));
    }
}
