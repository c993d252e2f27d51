//! φ = ω∘free: FinSet → FinSet, a colax tensor functor, and the coKleisli category of c⊗.

use hopf_objects::FinGroupObj;
use kosmos_core::finset::{diagonal, tensor_map, tensor_obj, terminal, FinMap, FinObj};
use kosmos_core::{compose_all, Morphism};
use lawcheck::certify_iso;
use rep_category::{GalRep, GalRepMor};

use crate::fiber::GalFiber;
use crate::ReconError;

pub struct Colax<'a, W: GalFiber> {
    fiber: &'a W,
}

impl<'a, W: GalFiber> Colax<'a, W> {
    pub fn new(fiber: &'a W) -> Self {
        Colax { fiber }
    }

    pub fn fiber(&self) -> &W {
        self.fiber
    }

    fn group(&self) -> &FinGroupObj {
        self.fiber.group()
    }

    fn free(&self, x: &FinObj) -> GalRep {
        GalRep::free(self.group(), x)
    }

    pub fn obj(&self, x: &FinObj) -> Result<FinObj, ReconError> {
        self.fiber.obj(&self.free(x))
    }

    /// φ(f) = ω(I⊗f).
    pub fn map(&self, f: &FinMap) -> Result<FinMap, ReconError> {
        let m = GalRepMor {
            src: self.free(f.dom()),
            dst: self.free(f.cod()),
            map: tensor_map(&FinMap::identity(self.group().carrier()), f),
        };
        self.fiber.map(&m)
    }

    /// φ_{x,y}: φ(x⊗y) → φ(x)⊗φ(y).
    pub fn tensor_coh(&self, x: &FinObj, y: &FinObj) -> Result<FinMap, ReconError> {
        let (fx, fy) = (self.free(x), self.free(y));
        let split = GalRepMor {
            src: self.free(&tensor_obj(x, y)),
            dst: fx.tensor(&fy)?,
            map: GalRep::split(self.group(), x, y),
        };
        Ok(self.fiber.tensor_coh(&fx, &fy)?.compose(&self.fiber.map(&split)?)?)
    }

    /// φ_κ: φ(κ) → κ.
    pub fn unit_coh(&self) -> Result<FinMap, ReconError> {
        let kappa = FinObj::unit();
        let fk = self.free(&kappa);
        let e = GalRepMor { map: terminal(fk.carrier()), src: fk, dst: GalRep::unit(self.group()) };
        Ok(self.fiber.unit_coh()?.compose(&self.fiber.map(&e)?)?)
    }

    /// φ̂_x: φ(x) → x, through the trivial representation on x.
    pub fn trivial_coh(&self, x: &FinObj) -> Result<FinMap, ReconError> {
        let fx = self.free(x);
        let pr = GalRepMor {
            map: tensor_map(&terminal(self.group().carrier()), &FinMap::identity(x)),
            src: fx,
            dst: GalRep::trivial(self.group(), x),
        };
        Ok(self.fiber.trivial_coh(x)?.compose(&self.fiber.map(&pr)?)?)
    }

    /// hatar_x = (I⊗φ̂_x)∘φ_{κ,x}∘φ(ι_x): φ(x) → φ(κ)⊗x.
    pub fn hatar(&self, x: &FinObj) -> Result<FinMap, ReconError> {
        let kappa = FinObj::unit();
        let kx = tensor_obj(&kappa, x);
        let iota = FinMap::identity(x).retyped(x, &kx)?;
        let pk = self.obj(&kappa)?;
        Ok(compose_all(&[
            &tensor_map(&FinMap::identity(&pk), &self.trivial_coh(x)?),
            &self.tensor_coh(&kappa, x)?,
            &self.map(&iota)?,
        ])?)
    }

    /// ξ_X = ω(ε_X)∘hatar⁻¹: φ(κ)⊗x → ω(X), with x the underlying set of X.
    pub fn universal(&self, rep: &GalRep) -> Result<FinMap, ReconError> {
        let x = rep.carrier();
        let counit = GalRepMor { src: self.free(x), dst: rep.clone(), map: rep.action().clone() };
        let inv = certify_iso(&self.hatar(x)?)?;
        Ok(self.fiber.map(&counit)?.compose(&inv)?)
    }
}

/// c_!(f) = (I⊗f)(Δ_c⊗I): c⊗x → c⊗y for f: c⊗x → y.
pub fn cokleisli_extend(c: &FinObj, x: &FinObj, f: &FinMap) -> Result<FinMap, ReconError> {
    let lift = tensor_map(&FinMap::identity(c), f);
    let dup = tensor_map(&diagonal(c), &FinMap::identity(x));
    Ok(lift.compose(&dup)?)
}

/// g∘f = g(I⊗f)(Δ_c⊗I) in the coKleisli category of c⊗.
pub fn cokleisli_compose(c: &FinObj, x: &FinObj, g: &FinMap, f: &FinMap) -> Result<FinMap, ReconError> {
    Ok(g.compose(&cokleisli_extend(c, x, f)?)?)
}

/// The coKleisli inverse (e_c⊗I)∘c_!(f)⁻¹: c⊗y → x of f: c⊗x → y.
pub fn cokleisli_inverse(c: &FinObj, x: &FinObj, f: &FinMap) -> Result<FinMap, ReconError> {
    let inv = certify_iso(&cokleisli_extend(c, x, f)?)?;
    let pr = tensor_map(&terminal(c), &FinMap::identity(x));
    Ok(pr.compose(&inv)?)
}
