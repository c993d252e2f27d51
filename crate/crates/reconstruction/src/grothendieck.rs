//! Reconstruction of a commutative Hopf algebra from its comodules.

use std::collections::BTreeSet;

use hopf_objects::{CommAlgObj, GroGroupMor, HopfError, HopfObj};
use kosmos_core::linear::{symmetry, tensor_map, tensor_obj};
use kosmos_core::{compose_all, tensor_all, LinMap, Morphism, Scalar, VecObj};
use lawcheck::{certify_iso, Checklist};
use rep_category::{GroRep, GroRepMor};

use crate::fiber::{FiberData, GroFiber, GroForgetful};
use crate::lax::{kleisli_compose, kleisli_inverse, Lax};
use crate::ReconError;

pub const PROBE_LIMIT: usize = 5;

#[derive(Debug, Clone)]
pub struct GroReconstruction<F> {
    pub source: HopfObj<F>,
    pub group: HopfObj<F>,
    /// The unitor π → κ⊗π as a Hopf algebra isomorphism onto the reconstruction.
    pub witness: GroGroupMor<F>,
    pub witness_inverse: GroGroupMor<F>,
    pub checks: Checklist,
}

/// tahar_x for the forgetful functor of `pi`.
pub fn coreflection_tahar<F: Scalar>(pi: &HopfObj<F>, x: &VecObj) -> Result<LinMap<F>, ReconError> {
    let w = GroForgetful::new(pi);
    Lax::new(&w).tahar(x)
}

pub fn tahar_checks<F: Scalar, W: GroFiber<F>>(
    phi: &Lax<F, W>,
    data: &FiberData<GroRep<F>, GroRepMor<F>, LinMap<F>>,
) -> Result<Checklist, ReconError> {
    let mut c = Checklist::new("tahar comparison");
    let pk = phi.obj(&VecObj::unit())?;
    let tahars: Vec<LinMap<F>> = data.probes.iter().map(|x| phi.tahar(x.carrier())).collect::<Result<_, _>>()?;
    for (k, t) in tahars.iter().enumerate() {
        c.iso(&format!("tahar invertible on probe {k}"), t);
    }
    for (k, m) in data.generators.iter().enumerate() {
        let (src, dst) = data.edges[k];
        let f = &m.map;
        let lhs = phi.map(f)?.compose(&tahars[src])?;
        let rhs = tahars[dst].compose(&tensor_map(f, &LinMap::identity(&pk)))?;
        c.equation(&format!("tahar natural along generator {k}"), &lhs, &rhs)?;
    }
    Ok(c)
}

pub fn reconstruct_grothendieck<F: Scalar>(pi: &HopfObj<F>) -> Result<GroReconstruction<F>, ReconError> {
    let w = GroForgetful::new(pi);
    let phi = Lax::new(&w);
    let kappa = VecObj::unit();
    let p = phi.obj(&kappa)?;
    let mul = phi.tensor_coh(&kappa, &kappa)?;
    let unit = phi.unit_coh()?;
    let alg = CommAlgObj::validate(p.clone(), mul.clone(), unit.clone()).map_err(mismatch)?;

    let reg = GroRep::cofree(pi, &kappa);
    let wreg = w.obj(&reg)?;
    let tahar_w = phi.tahar(&wreg)?;
    let comul = certify_iso(&tahar_w)?.compose(&w.map(&reg.cofree_unit())?)?;
    let counit = GroRep::cofree_counit(pi, &kappa);
    // ς = φ(ε_κ)∘ξ̌_{cofree κ}, with ξ̌ = tahar∘ξ⁻¹ and ξ⁻¹ taken in the Kleisli category.
    let xi_inv = kleisli_inverse(&alg, &wreg, &phi.universal(&reg)?)?;
    let xi_check = tahar_w.compose(&xi_inv)?;
    let antipode = phi.map(&counit)?.compose(&xi_check)?;

    let pp = tensor_obj(&p, &p);
    let group = HopfObj::validate(
        p.clone(),
        mul.retyped(&pp, &p)?,
        unit.retyped(&kappa, &p)?,
        comul.retyped(&p, &pp)?,
        counit.retyped(&p, &kappa)?,
        antipode.retyped(&p, &p)?,
    )
    .map_err(mismatch)?;

    let mut checks = Checklist::new("Hopf reconstruction");
    let unitor = LinMap::identity(pi.carrier());
    let witness = GroGroupMor::validate(pi.clone(), group.clone(), unitor)?;
    let inv = checks.iso("witness is invertible", &witness.map);
    let inv = inv.ok_or_else(|| ReconError::ReconstructionMismatch(checks.reports().to_vec()))?;
    let witness_inverse = GroGroupMor::validate(group.clone(), pi.clone(), inv)?;
    checks.extend(witness.laws()?);
    checks.equation("witness inverse after witness", &witness_inverse.after(&witness)?.map, &LinMap::identity(pi.carrier()))?;
    checks.equation("witness after witness inverse", &witness.after(&witness_inverse)?.map, &LinMap::identity(group.carrier()))?;
    checks.equation(
        "antipode matches the original antipode",
        &witness.map.compose(pi.antipode())?,
        &group.antipode().compose(&witness.map)?,
    )?;
    let data = FiberData::grothendieck(pi, PROBE_LIMIT);
    checks.extend(data.triangles()?);
    checks.extend(tahar_checks(&phi, &data)?);
    if !checks.passed() {
        return Err(ReconError::ReconstructionMismatch(checks.into_reports()));
    }
    Ok(GroReconstruction { source: pi.clone(), group, witness, witness_inverse, checks })
}

fn mismatch(e: HopfError) -> ReconError {
    match e {
        HopfError::Axioms(r) => ReconError::ReconstructionMismatch(r),
        other => other.into(),
    }
}

/// Sends each probe (x, ρ) to (x, ξ_X) as a comodule over the reconstruction.
pub fn comparison_functor_grothendieck<F: Scalar>(
    rec: &GroReconstruction<F>,
    probes: &[GroRep<F>],
) -> Result<(Vec<GroRep<F>>, Checklist), ReconError> {
    let w = GroForgetful::new(&rec.source);
    let phi = Lax::new(&w);
    let mut c = Checklist::new("comparison functor");
    let mut images = Vec::new();
    for (k, x) in probes.iter().enumerate() {
        let xi = phi.universal(x)?;
        let img = GroRep::validate(&rec.group, x.carrier().clone(), xi)?;
        let pulled = tensor_map(&LinMap::identity(x.carrier()), &rec.witness_inverse.map).compose(img.coaction())?;
        c.equation(&format!("probe {k} transported back"), &pulled, x.coaction())?;
        images.push(img);
    }
    for (i, x) in probes.iter().enumerate() {
        for (j, y) in probes.iter().enumerate() {
            if x.dim() * y.dim() > 16 {
                continue;
            }
            let direct = phi.universal(&x.tensor(y)?)?;
            let paired = images[i].tensor(&images[j])?;
            c.equation(&format!("tensor of probes {i} and {j}"), &direct, paired.coaction())?;
        }
    }
    Ok((images, c))
}

/// ϑ_X = (I⊗g)ρ_x: x → x⊗b.
pub fn theta<F: Scalar>(g: &LinMap<F>, x: &GroRep<F>) -> Result<LinMap<F>, ReconError> {
    Ok(tensor_map(&LinMap::identity(x.carrier()), g).compose(x.coaction())?)
}

/// (⊗b)_{x,y} = (I⊗I⊗∇_b)(I⊗s_{b,y}⊗I): x⊗b⊗y⊗b → x⊗y⊗b.
fn b_merge<F: Scalar>(b: &CommAlgObj<F>, x: &VecObj, y: &VecObj) -> Result<LinMap<F>, ReconError> {
    let (ix, iy, ib) = (LinMap::identity(x), LinMap::identity(y), LinMap::identity(b.carrier()));
    Ok(compose_all(&[&tensor_all(&[&ix, &iy, b.mul_map()]), &tensor_all(&[&ix, &symmetry(b.carrier(), y), &ib])])?)
}

fn fingerprint<F: Scalar>(m: &LinMap<F>) -> String {
    format!("{:?}", m.to_rows())
}

fn is_algebra_map<F: Scalar>(pi: &HopfObj<F>, b: &CommAlgObj<F>, g: &LinMap<F>) -> Result<bool, ReconError> {
    if g.dom().dim() != pi.dim() || g.cod().dim() != b.dim() {
        return Ok(false);
    }
    Ok(g.compose(pi.mul_map())?.equals(&b.mul_map().compose(&tensor_map(g, g))?)?
        && g.compose(pi.unit_map())?.equals(b.unit_map())?)
}

/// Each algebra map g: π → b yields a monoidal transformation ϑ in the Kleisli category
/// of ⊗b; g is recovered by applying e⊗I to ϑ at the regular comodule.
pub fn aut_presheaf_check_grothendieck<F: Scalar>(
    pi: &HopfObj<F>,
    b: &CommAlgObj<F>,
    gs: &[LinMap<F>],
) -> Result<Checklist, ReconError> {
    for (k, g) in gs.iter().enumerate() {
        if !is_algebra_map(pi, b, g)? {
            return Err(HopfError::InvalidPoint(format!("map {k} is not an algebra map")).into());
        }
    }
    let data = FiberData::grothendieck(pi, PROBE_LIMIT);
    let unit = GroRep::unit(pi);
    let triv = GroRep::trivial(pi, &VecObj::new(2));
    let reg = GroRep::regular(pi);
    let mut probes = data.probes.clone();
    probes.extend([unit, triv.clone()]);
    let thetas: Vec<Vec<LinMap<F>>> = gs
        .iter()
        .map(|g| probes.iter().map(|x| theta(g, x)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;

    let mut out = Checklist::new("automorphism presheaf");
    let np = probes.len();
    let mut families = BTreeSet::new();
    for (k, g) in gs.iter().enumerate() {
        let th = &thetas[k];
        let tag = |s: &str| format!("{s} (g = {k})");
        for (j, m) in data.generators.iter().enumerate() {
            let (src, dst) = data.edges[j];
            let lhs = tensor_map(&m.map, &LinMap::identity(b.carrier())).compose(&th[src])?;
            let rhs = th[dst].compose(&m.map)?;
            out.equation(&tag(&format!("natural along generator {j}")), &lhs, &rhs)?;
        }
        for (i, x) in data.probes.iter().enumerate() {
            for (j, y) in data.probes.iter().enumerate() {
                if x.dim() * y.dim() > 16 {
                    continue;
                }
                let whole = theta(g, &x.tensor(y)?)?;
                let parts = b_merge(b, x.carrier(), y.carrier())?.compose(&tensor_map(&th[i], &th[j]))?;
                out.equation(&tag(&format!("tensor on probes {i}, {j}")), &whole, &parts)?;
            }
        }
        out.equation(&tag("unit component"), &th[np - 2], b.unit_map())?;
        let inc = tensor_map(&LinMap::identity(triv.carrier()), b.unit_map());
        out.equation(&tag("trivial component"), &th[np - 1], &inc)?;

        let back = tensor_map(pi.counit(), &LinMap::identity(b.carrier())).compose(&theta(g, &reg)?)?;
        if !back.equals(g)? {
            return Err(ReconError::RoundTripFailure(format!("algebra map {k}")));
        }
        out.equation(&tag("round trip"), &back, g)?;
        families.insert(th.iter().map(fingerprint).collect::<Vec<_>>());

        let ginv = g.compose(pi.antipode())?;
        for (i, x) in probes.iter().enumerate() {
            out.equation(&tag(&format!("Kleisli inverse on probe {i}")), &kleisli_inverse(b, x.carrier(), &th[i])?, &theta(&ginv, x)?)?;
        }
    }
    let distinct: BTreeSet<String> = gs.iter().map(fingerprint).collect();
    out.assert("distinct maps give distinct transformations", families.len() == distinct.len(), None);

    for (k, g) in gs.iter().enumerate() {
        for (k2, g2) in gs.iter().enumerate() {
            let prod = pi.convolution_out(b, g, g2)?;
            for (i, x) in probes.iter().enumerate() {
                let composed = kleisli_compose(b, x.carrier(), &thetas[k][i], &thetas[k2][i])?;
                out.equation(&format!("composition ({k}, {k2}) on probe {i}"), &composed, &theta(&prod, x)?)?;
            }
        }
    }
    Ok(out)
}
