//! φ = ω∘cofree: Vec → Vec, a lax tensor functor, and the Kleisli category of ⊗b.

use hopf_objects::{CommAlgObj, HopfObj};
use kosmos_core::linear::{tensor_map, tensor_obj};
use kosmos_core::{compose_all, LinMap, Morphism, Scalar, VecObj};
use lawcheck::certify_iso;
use rep_category::{GroRep, GroRepMor};

use crate::fiber::GroFiber;
use crate::ReconError;

pub struct Lax<'a, F: Scalar, W: GroFiber<F>> {
    fiber: &'a W,
    _scalar: std::marker::PhantomData<F>,
}

impl<'a, F: Scalar, W: GroFiber<F>> Lax<'a, F, W> {
    pub fn new(fiber: &'a W) -> Self {
        Lax { fiber, _scalar: std::marker::PhantomData }
    }

    pub fn fiber(&self) -> &W {
        self.fiber
    }

    fn group(&self) -> &HopfObj<F> {
        self.fiber.group()
    }

    fn cofree(&self, x: &VecObj) -> GroRep<F> {
        GroRep::cofree(self.group(), x)
    }

    pub fn obj(&self, x: &VecObj) -> Result<VecObj, ReconError> {
        self.fiber.obj(&self.cofree(x))
    }

    /// φ(f) = ω(f⊗I).
    pub fn map(&self, f: &LinMap<F>) -> Result<LinMap<F>, ReconError> {
        let m = GroRepMor {
            src: self.cofree(f.dom()),
            dst: self.cofree(f.cod()),
            map: tensor_map(f, &LinMap::identity(self.group().carrier())),
        };
        self.fiber.map(&m)
    }

    /// φ_{x,y}: φ(x)⊗φ(y) → φ(x⊗y).
    pub fn tensor_coh(&self, x: &VecObj, y: &VecObj) -> Result<LinMap<F>, ReconError> {
        let (fx, fy) = (self.cofree(x), self.cofree(y));
        let merge = GroRepMor {
            src: fx.tensor(&fy)?,
            dst: self.cofree(&tensor_obj(x, y)),
            map: GroRep::merge(self.group(), x, y),
        };
        Ok(self.fiber.map(&merge)?.compose(&self.fiber.tensor_coh(&fx, &fy)?)?)
    }

    /// φ_κ: κ → φ(κ).
    pub fn unit_coh(&self) -> Result<LinMap<F>, ReconError> {
        let fk = self.cofree(&VecObj::unit());
        let u = GroRepMor { map: self.group().unit_map().clone(), src: GroRep::unit(self.group()), dst: fk };
        Ok(self.fiber.map(&u)?.compose(&self.fiber.unit_coh()?)?)
    }

    /// φ̂_x: x → φ(x), through the trivial comodule on x.
    pub fn trivial_coh(&self, x: &VecObj) -> Result<LinMap<F>, ReconError> {
        let inc = GroRepMor {
            map: tensor_map(&LinMap::identity(x), self.group().unit_map()),
            src: GroRep::trivial(self.group(), x),
            dst: self.cofree(x),
        };
        Ok(self.fiber.map(&inc)?.compose(&self.fiber.trivial_coh(x)?)?)
    }

    /// tahar_x = φ(ȷ⁻¹)∘φ_{x,κ}∘(φ̂_x⊗I): x⊗φ(κ) → φ(x).
    pub fn tahar(&self, x: &VecObj) -> Result<LinMap<F>, ReconError> {
        let kappa = VecObj::unit();
        let xk = tensor_obj(x, &kappa);
        let unitor_inv = LinMap::identity(x).retyped(&xk, x)?;
        let pk = self.obj(&kappa)?;
        Ok(compose_all(&[
            &self.map(&unitor_inv)?,
            &self.tensor_coh(x, &kappa)?,
            &tensor_map(&self.trivial_coh(x)?, &LinMap::identity(&pk)),
        ])?)
    }

    /// ξ_X = tahar⁻¹∘ω(η_X): ω(X) → x⊗φ(κ), with x the underlying space of X.
    pub fn universal(&self, rep: &GroRep<F>) -> Result<LinMap<F>, ReconError> {
        let x = rep.carrier();
        let inv = certify_iso(&self.tahar(x)?)?;
        Ok(inv.compose(&self.fiber.map(&rep.cofree_unit())?)?)
    }
}

/// b_!(f) = (I⊗∇_b)(f⊗I): x⊗b → y⊗b for f: x → y⊗b.
pub fn kleisli_extend<F: Scalar>(b: &CommAlgObj<F>, y: &VecObj, f: &LinMap<F>) -> Result<LinMap<F>, ReconError> {
    let fold = tensor_map(&LinMap::identity(y), b.mul_map());
    Ok(fold.compose(&tensor_map(f, &LinMap::identity(b.carrier())))?)
}

/// g∘f = (I⊗∇_b)(g⊗I)f in the Kleisli category of ⊗b.
pub fn kleisli_compose<F: Scalar>(
    b: &CommAlgObj<F>,
    z: &VecObj,
    g: &LinMap<F>,
    f: &LinMap<F>,
) -> Result<LinMap<F>, ReconError> {
    Ok(kleisli_extend(b, z, g)?.compose(f)?)
}

/// The Kleisli inverse b_!(f)⁻¹∘(I⊗u_b): y → x⊗b of f: x → y⊗b.
pub fn kleisli_inverse<F: Scalar>(b: &CommAlgObj<F>, y: &VecObj, f: &LinMap<F>) -> Result<LinMap<F>, ReconError> {
    let inv = certify_iso(&kleisli_extend(b, y, f)?)?;
    Ok(inv.compose(&tensor_map(&LinMap::identity(y), b.unit_map()))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopf_objects::catalog::{cyclic, function_algebra};
    use kosmos_core::{rat, Rat};

    #[test]
    fn kleisli_inverse_of_the_comultiplication() {
        let h = function_algebra(&cyclic(3)).unwrap();
        let b = h.algebra();
        let x = h.carrier();
        let inv = kleisli_inverse(&b, x, h.comul()).unwrap();
        let unit: LinMap<Rat> = tensor_map(&LinMap::identity(h.carrier()), b.unit_map());
        assert!(kleisli_compose(&b, x, &inv, h.comul()).unwrap().equals(&unit).unwrap());
        // (I⊗ς)Δ
        let expected = tensor_map(&LinMap::identity(h.carrier()), h.antipode()).compose(h.comul()).unwrap();
        assert!(inv.equals(&expected).unwrap());
        assert_eq!(inv.get(0, 0), rat(1));
    }
}
