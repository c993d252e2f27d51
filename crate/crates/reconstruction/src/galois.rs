//! Reconstruction of a finite group from its representations on finite sets.

use std::collections::BTreeSet;

use hopf_objects::{hom_group, FinGroupObj, GalGroupMor, HopfError};
use kosmos_core::finset::{diagonal, symmetry, tensor_map, tensor_obj, terminal, FinMap, FinObj};
use kosmos_core::{compose_all, tensor_all, Morphism};
use lawcheck::{certify_iso, Checklist};
use rep_category::{gal, GalRep};

use crate::colax::{cokleisli_compose, cokleisli_inverse, Colax};
use crate::fiber::{FiberData, GalFiber, GalForgetful};
use crate::ReconError;

/// Probes used by the checks in this module.
pub const PROBE_LIMIT: usize = 5;

#[derive(Debug, Clone)]
pub struct GalReconstruction {
    pub source: FinGroupObj,
    pub group: FinGroupObj,
    /// The unitor π → π⊗κ, a group isomorphism onto the reconstruction.
    pub witness: GalGroupMor,
    pub witness_inverse: GalGroupMor,
    pub checks: Checklist,
}

/// hatar_x for the forgetful functor of `pi`.
pub fn reflection_hatar(pi: &FinGroupObj, x: &FinObj) -> Result<FinMap, ReconError> {
    let w = GalForgetful::new(pi);
    Colax::new(&w).hatar(x)
}

/// hatar is invertible on the carrier of every probe and natural along generating maps.
pub fn hatar_checks<W: GalFiber>(phi: &Colax<W>, data: &FiberData<gal::GalRep, gal::GalRepMor, FinMap>) -> Result<Checklist, ReconError> {
    let mut c = Checklist::new("hatar comparison");
    let pk = phi.obj(&FinObj::unit())?;
    let hatars: Vec<FinMap> = data.probes.iter().map(|x| phi.hatar(x.carrier())).collect::<Result<_, _>>()?;
    for (k, h) in hatars.iter().enumerate() {
        c.iso(&format!("hatar invertible on probe {k}"), h);
    }
    for (k, m) in data.generators.iter().enumerate() {
        let (src, dst) = data.edges[k];
        let f = &m.map;
        let lhs = tensor_map(&FinMap::identity(&pk), f).compose(&hatars[src])?;
        let rhs = hatars[dst].compose(&phi.map(f)?)?;
        c.equation(&format!("hatar natural along generator {k}"), &lhs, &rhs)?;
    }
    Ok(c)
}

pub fn reconstruct_galois(pi: &FinGroupObj) -> Result<GalReconstruction, ReconError> {
    let w = GalForgetful::new(pi);
    let phi = Colax::new(&w);
    let kappa = FinObj::unit();
    let p = phi.obj(&kappa)?;
    let reg = GalRep::free(pi, &kappa);
    let wreg = w.obj(&reg)?;

    let hatar_p = phi.hatar(&wreg)?;
    let mul = w.map(&reg.free_counit())?.compose(&certify_iso(&hatar_p)?)?;
    let unit = GalRep::free_unit(pi, &kappa);
    // ς = ξ̌_{free κ}∘φ(η_κ), with ξ̌ = ξ⁻¹∘hatar and ξ⁻¹ taken in the coKleisli category.
    let xi_inv = cokleisli_inverse(&p, &wreg, &phi.universal(&reg)?)?;
    let xi_check = xi_inv.compose(&hatar_p)?;
    let antipode = xi_check.compose(&phi.map(&unit)?)?;

    let pp = tensor_obj(&p, &p);
    let group = FinGroupObj::validate(p.clone(), mul.retyped(&pp, &p)?, unit.apply(0), antipode.retyped(&p, &p)?)
        .map_err(|e| match e {
            HopfError::Axioms(r) => ReconError::ReconstructionMismatch(r),
            other => other.into(),
        })?;

    let mut checks = Checklist::new("group reconstruction");
    let unitor = FinMap::identity(pi.carrier()).retyped(pi.carrier(), &p)?;
    let witness = GalGroupMor::validate(pi.clone(), group.clone(), unitor.table().to_vec())?;
    let inv = checks.iso("witness is a bijection", &witness.map);
    let inv = inv.ok_or_else(|| ReconError::ReconstructionMismatch(checks.reports().to_vec()))?;
    let witness_inverse = GalGroupMor::validate(group.clone(), pi.clone(), inv.table().to_vec())?;
    checks.extend(witness.laws()?);
    checks.equation("witness inverse after witness", &witness_inverse.after(&witness)?.map, &FinMap::identity(pi.carrier()))?;
    checks.equation("witness after witness inverse", &witness.after(&witness_inverse)?.map, &FinMap::identity(group.carrier()))?;
    checks.equation(
        "antipode matches the inverse of the group",
        &witness.map.compose(pi.inv_map())?,
        &group.inv_map().compose(&witness.map)?,
    )?;
    let data = FiberData::galois(pi, PROBE_LIMIT);
    checks.extend(data.triangles()?);
    checks.extend(hatar_checks(&phi, &data)?);
    if !checks.passed() {
        return Err(ReconError::ReconstructionMismatch(checks.into_reports()));
    }
    Ok(GalReconstruction { source: pi.clone(), group, witness, witness_inverse, checks })
}

/// Sends each probe (x, γ) to (x, ξ_X) as a representation of the reconstructed group.
pub fn comparison_functor_galois(
    rec: &GalReconstruction,
    probes: &[GalRep],
) -> Result<(Vec<GalRep>, Checklist), ReconError> {
    let w = GalForgetful::new(&rec.source);
    let phi = Colax::new(&w);
    let mut c = Checklist::new("comparison functor");
    let mut images = Vec::new();
    for (k, x) in probes.iter().enumerate() {
        let xi = phi.universal(x)?;
        let img = GalRep::validate(&rec.group, x.carrier().clone(), xi)?;
        let pulled = img.action().compose(&tensor_map(&rec.witness.map, &FinMap::identity(x.carrier())))?;
        c.equation(&format!("probe {k} transported back"), &pulled, x.action())?;
        images.push(img);
    }
    for (i, x) in probes.iter().enumerate() {
        for (j, y) in probes.iter().enumerate() {
            if x.size() * y.size() > 64 {
                continue;
            }
            let direct = phi.universal(&x.tensor(y)?)?;
            let paired = images[i].tensor(&images[j])?;
            c.equation(&format!("tensor of probes {i} and {j}"), &direct, paired.action())?;
        }
    }
    Ok((images, c))
}

/// ϑ_X = γ_x∘(g⊗I): c⊗x → x.
pub fn theta(g: &FinMap, x: &GalRep) -> Result<FinMap, ReconError> {
    Ok(x.action().compose(&tensor_map(g, &FinMap::identity(x.carrier())))?)
}

/// (c⊗)_{x,y} = (I⊗s_{c,x}⊗I)(Δ_c⊗I⊗I): c⊗x⊗y → c⊗x⊗c⊗y.
fn c_split(c: &FinObj, x: &FinObj, y: &FinObj) -> Result<FinMap, ReconError> {
    let (ic, ix, iy) = (FinMap::identity(c), FinMap::identity(x), FinMap::identity(y));
    Ok(compose_all(&[&tensor_all(&[&ic, &symmetry(c, x), &iy]), &tensor_all(&[&diagonal(c), &ix, &iy])])?)
}

/// Every map g: c → π yields a monoidal transformation ϑ in the coKleisli category of c⊗;
/// g is recovered from ϑ at the regular representation, and the assignment respects the
/// convolution product and inverses.
pub fn aut_presheaf_check_galois(pi: &FinGroupObj, c: &FinObj) -> Result<Checklist, ReconError> {
    let hg = hom_group(c, pi)?;
    let count = (pi.order() as u128).pow(c.size() as u32);
    let mut out = Checklist::new("automorphism presheaf");
    out.assert("number of transformations", hg.group.order() as u128 == count, Some(format!("{count}")));

    let data = FiberData::galois(pi, PROBE_LIMIT);
    let unit = GalRep::unit(pi);
    let triv = GalRep::trivial(pi, &FinObj::new(2));
    let reg = GalRep::regular(pi);
    let mut probes = data.probes.clone();
    probes.extend([unit.clone(), triv.clone()]);
    let n = hg.group.order();
    let thetas: Vec<Vec<FinMap>> = (0..n)
        .map(|k| probes.iter().map(|x| theta(&hg.element(k), x)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;

    let kappa = FinObj::unit();
    let ck = tensor_obj(c, &kappa);
    let rec_in = compose_all(&[
        &tensor_map(&FinMap::identity(c), &GalRep::free_unit(pi, &kappa)),
        &FinMap::identity(c).retyped(c, &ck)?,
    ])?;
    let mut families = BTreeSet::new();
    for (k, th) in thetas.iter().enumerate() {
        let g = hg.element(k);
        let tag = |s: &str| format!("{s} (g = {k})");
        for (j, m) in data.generators.iter().enumerate() {
            let (src, dst) = data.edges[j];
            let lhs = m.map.compose(&th[src])?;
            let rhs = th[dst].compose(&tensor_map(&FinMap::identity(c), &m.map))?;
            out.equation(&tag(&format!("natural along generator {j}")), &lhs, &rhs)?;
        }
        for (i, x) in data.probes.iter().enumerate() {
            for (j, y) in data.probes.iter().enumerate() {
                if x.size() * y.size() > 64 {
                    continue;
                }
                let whole = theta(&g, &x.tensor(y)?)?;
                let parts = tensor_map(&th[i], &th[j]).compose(&c_split(c, x.carrier(), y.carrier())?)?;
                out.equation(&tag(&format!("tensor on probes {i}, {j}")), &whole, &parts)?;
            }
        }
        let np = probes.len();
        out.equation(&tag("unit component"), &th[np - 2], &terminal(&ck))?;
        let proj = tensor_map(&terminal(c), &FinMap::identity(triv.carrier()));
        out.equation(&tag("trivial component"), &th[np - 1], &proj)?;

        let back = theta(&g, &reg)?.compose(&rec_in)?;
        if !back.equals(&g)? {
            return Err(ReconError::RoundTripFailure(format!("g = {:?}", g.table())));
        }
        out.equation(&tag("round trip"), &back, &g)?;
        families.insert(th.iter().map(|t| t.table().to_vec()).collect::<Vec<_>>());

        let ginv = pi.inv_map().compose(&g)?;
        for (i, x) in probes.iter().enumerate() {
            out.equation(&tag(&format!("coKleisli inverse on probe {i}")), &cokleisli_inverse(c, x.carrier(), &th[i])?, &theta(&ginv, x)?)?;
        }
    }
    out.assert("distinct maps give distinct transformations", families.len() == n, None);

    let partners = if n <= 32 { n } else { 8 };
    for k in 0..n {
        for k2 in 0..partners {
            let prod = hg.group.m(k, k2);
            out.equation(
                &format!("convolution matches the hom group ({k}, {k2})"),
                &pi.convolution(&hg.element(k), &hg.element(k2))?,
                &hg.element(prod),
            )?;
            for i in 0..probes.len() {
                let composed = cokleisli_compose(c, probes[i].carrier(), &thetas[k][i], &thetas[k2][i])?;
                out.equation(&format!("composition ({k}, {k2}) on probe {i}"), &composed, &thetas[prod][i])?;
            }
        }
    }
    Ok(out)
}
