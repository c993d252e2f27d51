//! Functors induced along group morphisms: restriction with its adjoint on each side, and the
//! natural isomorphisms that 2-cells give between restrictions.

use hopf_objects::catalog::function_algebra;
use hopf_objects::{GalGroupMor, GalTwoCell, GroGroupMor, GroTwoCell};
use kosmos_core::finset::{self, CoeqResult, FinMap, FinObj};
use kosmos_core::linear::{self, coreflexive_equalizer, factor_through_mono};
use kosmos_core::{compose_all, rat, tensor_all, EqResult, LinMap, Morphism, Rat, Scalar, VecObj};
use lawcheck::Checklist;
use rep_category::{gal, gro, GalRep, GalRepMor, GroRep, GroRepMor};

use crate::{NatProbe, TorsorError};

const MAPS_PER_PAIR: usize = 4;

fn fid(x: &FinObj) -> FinMap {
    FinMap::identity(x)
}

fn lid<F: Scalar>(x: &VecObj) -> LinMap<F> {
    LinMap::identity(x)
}

/// f^*X = (x, γ_x(f⊗I)) for f: π' → π.
pub fn gal_restrict(f: &GalGroupMor, x: &GalRep) -> Result<GalRep, TorsorError> {
    let act = x.action().compose(&finset::tensor_map(&f.map, &fid(x.carrier())))?;
    Ok(GalRep::validate(&f.src, x.carrier().clone(), act)?)
}

/// f_!Z = π ⊗_{π'} z with the action of π on the left factor.
#[derive(Debug, Clone)]
pub struct GalInduced {
    pub rep: GalRep,
    /// π⊗z → f_!Z.
    pub quotient: CoeqResult,
}

pub fn gal_induce(f: &GalGroupMor, z: &GalRep) -> Result<GalInduced, TorsorError> {
    let (pi, sub) = (&f.dst, &f.src);
    let (ip, iz) = (fid(pi.carrier()), fid(z.carrier()));
    let act_z = finset::tensor_map(&ip, z.action());
    let act_pi = compose_all(&[&finset::tensor_map(pi.mul_map(), &iz), &tensor_all(&[&ip, &f.map, &iz])])?;
    let section = tensor_all(&[&ip, &sub.unit_map(), &iz]);
    let quotient = finset::reflexive_coequalizer(&act_z, &act_pi, &section)?;
    let action = finset::factor_through_epi(
        &finset::tensor_map(&ip, &quotient.proj),
        &quotient.proj.compose(&finset::tensor_map(pi.mul_map(), &iz))?,
    )?;
    let rep = GalRep::validate(pi, quotient.obj.clone(), action)?;
    Ok(GalInduced { rep, quotient })
}

fn gal_induce_map(f: &GalGroupMor, a: &GalInduced, b: &GalInduced, m: &FinMap) -> Result<FinMap, TorsorError> {
    let lift = b.quotient.proj.compose(&finset::tensor_map(&fid(f.dst.carrier()), m))?;
    Ok(finset::factor_through_epi(&a.quotient.proj, &lift)?)
}

/// η_Z = [1, -]: Z → f^*f_!Z.
pub fn gal_unit(f: &GalGroupMor, z: &GalRep) -> Result<GalRepMor, TorsorError> {
    let ind = gal_induce(f, z)?;
    let map = ind.quotient.proj.compose(&finset::tensor_map(&f.dst.unit_map(), &fid(z.carrier())))?;
    Ok(GalRepMor::validate(z, &gal_restrict(f, &ind.rep)?, map)?)
}

/// ε_X: f_!f^*X → X, [g, x] ↦ g·x.
pub fn gal_counit(f: &GalGroupMor, x: &GalRep) -> Result<GalRepMor, TorsorError> {
    let ind = gal_induce(f, &gal_restrict(f, x)?)?;
    let map = finset::factor_through_epi(&ind.quotient.proj, x.action())?;
    Ok(GalRepMor::validate(&ind.rep, x, map)?)
}

/// Unit, counit and both triangle identities of f_! ⊣ f^*, on representations `zs` of π' and `xs` of π.
pub fn gal_adjunction_check(f: &GalGroupMor, zs: &[GalRep], xs: &[GalRep]) -> Result<Checklist, TorsorError> {
    let mut c = Checklist::new("induction and restriction");
    c.extend(f.laws()?);
    for (k, z) in zs.iter().enumerate() {
        let eta = gal_unit(f, z)?;
        let ind = gal_induce(f, z)?;
        let again = gal_induce(f, &eta.dst)?;
        let lifted = gal_induce_map(f, &ind, &again, &eta.map)?;
        let eps = gal_counit(f, &ind.rep)?;
        c.equation(&format!("first triangle on source {k}"), &eps.map.compose(&lifted)?, &fid(ind.rep.carrier()))?;
    }
    for (k, x) in xs.iter().enumerate() {
        let eps = gal_counit(f, x)?;
        let eta = gal_unit(f, &gal_restrict(f, x)?)?;
        c.equation(&format!("second triangle on target {k}"), &eps.map.compose(&eta.map)?, &fid(x.carrier()))?;
    }
    Ok(c)
}

/// f^*X = (x, (I⊗f)ρ) for a Hopf map f: π → π'.
pub fn gro_restrict<F: Scalar>(f: &GroGroupMor<F>, x: &GroRep<F>) -> Result<GroRep<F>, TorsorError> {
    let co = linear::tensor_map(&lid(x.carrier()), &f.map).compose(x.coaction())?;
    Ok(GroRep::validate(&f.cod, x.carrier().clone(), co)?)
}

/// f_*Z = z □_{π'} π with the coaction of π on the right factor.
#[derive(Debug, Clone)]
pub struct GroCoinduced<F> {
    pub rep: GroRep<F>,
    /// f_*Z ↪ z⊗π.
    pub inclusion: EqResult<F>,
}

pub fn gro_coinduce<F: Scalar>(f: &GroGroupMor<F>, z: &GroRep<F>) -> Result<GroCoinduced<F>, TorsorError> {
    let (pi, quot) = (&f.dom, &f.cod);
    let (ip, iz) = (lid(pi.carrier()), lid(z.carrier()));
    let a = linear::tensor_map(z.coaction(), &ip);
    let b = compose_all(&[&tensor_all(&[&iz, &f.map, &ip]), &linear::tensor_map(&iz, pi.comul())])?;
    let r = tensor_all(&[&iz, quot.counit(), &ip]);
    let inclusion = coreflexive_equalizer(&a, &b, &r)?;
    let co = factor_through_mono(
        &linear::tensor_map(&inclusion.incl, &ip),
        &linear::tensor_map(&iz, pi.comul()).compose(&inclusion.incl)?,
    )?;
    let rep = GroRep::validate(pi, inclusion.obj.clone(), co)?;
    Ok(GroCoinduced { rep, inclusion })
}

fn gro_coinduce_map<F: Scalar>(
    f: &GroGroupMor<F>,
    a: &GroCoinduced<F>,
    b: &GroCoinduced<F>,
    m: &LinMap<F>,
) -> Result<LinMap<F>, TorsorError> {
    let h = linear::tensor_map(m, &lid(f.dom.carrier())).compose(&a.inclusion.incl)?;
    Ok(factor_through_mono(&b.inclusion.incl, &h)?)
}

/// η_X: X → f_*f^*X, the corestriction of ρ_x.
pub fn gro_unit<F: Scalar>(f: &GroGroupMor<F>, x: &GroRep<F>) -> Result<GroRepMor<F>, TorsorError> {
    let co = gro_coinduce(f, &gro_restrict(f, x)?)?;
    let map = factor_through_mono(&co.inclusion.incl, x.coaction())?;
    Ok(GroRepMor::validate(x, &co.rep, map)?)
}

/// ε_Z = (I⊗e)ξ: f^*f_*Z → Z.
pub fn gro_counit<F: Scalar>(f: &GroGroupMor<F>, z: &GroRep<F>) -> Result<GroRepMor<F>, TorsorError> {
    let co = gro_coinduce(f, z)?;
    let map = linear::tensor_map(&lid(z.carrier()), f.dom.counit()).compose(&co.inclusion.incl)?;
    Ok(GroRepMor::validate(&gro_restrict(f, &co.rep)?, z, map)?)
}

/// Unit, counit and both triangle identities of f^* ⊣ f_*, on comodules `xs` over π and `zs` over π'.
pub fn gro_adjunction_check<F: Scalar>(
    f: &GroGroupMor<F>,
    xs: &[GroRep<F>],
    zs: &[GroRep<F>],
) -> Result<Checklist, TorsorError> {
    let mut c = Checklist::new("restriction and coinduction");
    c.extend(f.laws()?);
    for (k, z) in zs.iter().enumerate() {
        let co = gro_coinduce(f, z)?;
        let eta = gro_unit(f, &co.rep)?;
        let eps = gro_counit(f, z)?;
        let again = gro_coinduce(f, &eps.src)?;
        let pushed = gro_coinduce_map(f, &again, &co, &eps.map)?;
        c.equation(&format!("first triangle on target {k}"), &pushed.compose(&eta.map)?, &lid(co.rep.carrier()))?;
    }
    for (k, x) in xs.iter().enumerate() {
        let eta = gro_unit(f, x)?;
        let eps = gro_counit(f, &gro_restrict(f, x)?)?;
        c.equation(&format!("second triangle on source {k}"), &eps.map.compose(&eta.map)?, &lid(x.carrier()))?;
    }
    Ok(c)
}

/// The Hopf map O(π) → O(π') dual to a homomorphism π' → π: restriction of functions.
pub fn function_algebra_map(f: &GalGroupMor) -> Result<GroGroupMor<Rat>, TorsorError> {
    let (big, small) = (function_algebra(&f.dst)?, function_algebra(&f.src)?);
    let map = LinMap::from_fn(big.carrier(), small.carrier(), |r, c| rat((f.apply(r) == c) as i64));
    Ok(GroGroupMor::validate(big, small, map)?)
}

/// ϑ_X = γ_x(θ⊗I): f1^*X → f2^*X, with inverse γ_x(θ⁻¹⊗I).
pub fn gal_two_cell_nat(cell: &GalTwoCell, probes: &[GalRep]) -> Result<NatProbe<FinMap>, TorsorError> {
    let pi = &cell.f1.dst;
    let mut checks = Checklist::new("two-cell transformation");
    checks.extend(cell.laws()?);
    let theta_inv = pi.inv(cell.theta);
    let mut components = Vec::new();
    let mut inverses = Vec::new();
    for (k, x) in probes.iter().enumerate() {
        let th = FinMap::from_fn(x.carrier(), x.carrier(), |i| x.act(cell.theta, i))?;
        let inv = FinMap::from_fn(x.carrier(), x.carrier(), |i| x.act(theta_inv, i))?;
        let (s, t) = (gal_restrict(&cell.f1, x)?, gal_restrict(&cell.f2, x)?);
        let mor = GalRepMor { src: s, dst: t, map: th.clone() };
        checks.assert(&format!("component on probe {k} is equivariant"), mor.laws()?.passed(), None);
        checks.equation(&format!("component on probe {k} is inverted by theta inverse"), &inv.compose(&th)?, &fid(x.carrier()))?;
        components.push(th);
        inverses.push(inv);
    }
    for (i, x) in probes.iter().enumerate() {
        for (j, y) in probes.iter().enumerate() {
            let Ok(ms) = gal::hom_rep_capped(x, y, MAPS_PER_PAIR) else { continue };
            for (k, m) in ms.iter().enumerate() {
                checks.equation(
                    &format!("natural along map {k} from probe {i} to {j}"),
                    &m.map.compose(&components[i])?,
                    &components[j].compose(&m.map)?,
                )?;
            }
        }
    }
    Ok(NatProbe { components, inverses, checks })
}

/// ϑ_X = (I⊗θ)ρ_x: f1^*X → f2^*X, with inverse (I⊗θς)ρ_x.
pub fn gro_two_cell_nat<F: Scalar>(cell: &GroTwoCell<F>, probes: &[GroRep<F>]) -> Result<NatProbe<LinMap<F>>, TorsorError> {
    let pi = &cell.f1.dom;
    let mut checks = Checklist::new("two-cell transformation");
    checks.extend(cell.laws()?);
    let theta_inv = cell.theta.compose(pi.antipode())?;
    let mut components = Vec::new();
    let mut inverses = Vec::new();
    for (k, x) in probes.iter().enumerate() {
        let ix = lid(x.carrier());
        let th = linear::tensor_map(&ix, &cell.theta).compose(x.coaction())?;
        let inv = linear::tensor_map(&ix, &theta_inv).compose(x.coaction())?;
        let (s, t) = (gro_restrict(&cell.f1, x)?, gro_restrict(&cell.f2, x)?);
        let mor = GroRepMor { src: s, dst: t, map: th.clone() };
        checks.assert(&format!("component on probe {k} is colinear"), mor.laws()?.passed(), None);
        checks.equation(&format!("component on probe {k} is inverted by theta inverse"), &inv.compose(&th)?, &ix)?;
        components.push(th);
        inverses.push(inv);
    }
    for (i, x) in probes.iter().enumerate() {
        for (j, y) in probes.iter().enumerate() {
            let Ok(mut ms) = gro::hom_rep(x, y) else { continue };
            ms.truncate(MAPS_PER_PAIR);
            for (k, m) in ms.iter().enumerate() {
                checks.equation(
                    &format!("natural along map {k} from probe {i} to {j}"),
                    &m.map.compose(&components[i])?,
                    &components[j].compose(&m.map)?,
                )?;
            }
        }
    }
    Ok(NatProbe { components, inverses, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopf_objects::catalog::{cyclic, symmetric};

    fn inclusion_z2_z4() -> GalGroupMor {
        GalGroupMor::validate(cyclic(2), cyclic(4), vec![0, 2]).unwrap()
    }

    #[test]
    fn induced_from_subgroup_has_index_times_size() {
        let f = inclusion_z2_z4();
        let ind = gal_induce(&f, &GalRep::regular(&cyclic(2))).unwrap();
        assert_eq!(ind.rep.size(), 4);
        let triv = GalRep::trivial(&cyclic(2), &FinObj::new(1));
        assert_eq!(gal_induce(&f, &triv).unwrap().rep.size(), 2);
    }

    #[test]
    fn galois_triangles_on_inclusion() {
        let f = inclusion_z2_z4();
        let c = gal_adjunction_check(&f, &gal::probes(&cyclic(2), 4), &gal::probes(&cyclic(4), 3)).unwrap();
        assert!(c.passed(), "{:?}", c.failures());
    }

    #[test]
    fn conjugation_by_transposition() {
        let s3 = symmetric(3);
        let id = GalGroupMor::identity(&s3);
        let conj = GalGroupMor { src: s3.clone(), dst: s3.clone(), map: s3.inner_auto(1).unwrap() };
        let cell = GalTwoCell::validate(id, conj, 1).unwrap();
        let nat = gal_two_cell_nat(&cell, &gal::probes(&s3, 3)).unwrap();
        assert!(nat.checks.passed(), "{:?}", nat.checks.failures());
    }
}
