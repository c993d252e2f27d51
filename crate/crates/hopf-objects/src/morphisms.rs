use kosmos_core::finset::{point, tensor_map as ftensor, FinMap};
use kosmos_core::linear::tensor_map;
use kosmos_core::{compose_all, LinMap, Morphism, Scalar, VecObj};
use lawcheck::Checklist;

use crate::{FinGroupObj, HopfError, HopfObj};

fn finish(c: Checklist) -> Result<(), HopfError> {
    if c.passed() {
        Ok(())
    } else {
        Err(HopfError::Axioms(c.into_reports()))
    }
}

/// A group homomorphism src → dst.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalGroupMor {
    pub src: FinGroupObj,
    pub dst: FinGroupObj,
    pub map: FinMap,
}

impl GalGroupMor {
    pub fn validate(src: FinGroupObj, dst: FinGroupObj, table: Vec<usize>) -> Result<Self, HopfError> {
        let map = FinMap::new(src.carrier().clone(), dst.carrier().clone(), table)?;
        let f = GalGroupMor { src, dst, map };
        finish(f.laws()?)?;
        Ok(f)
    }

    pub fn laws(&self) -> Result<Checklist, HopfError> {
        let mut c = Checklist::new("group-morphism");
        let f = &self.map;
        let n = self.src.order();
        c.equation_split(
            "preserves multiplication",
            &f.compose(self.src.mul_map())?,
            &self.dst.mul_map().compose(&ftensor(f, f))?,
            &[n, n],
        )?;
        c.equation("preserves unit", &f.compose(&self.src.unit_map())?, &self.dst.unit_map())?;
        Ok(c)
    }

    pub fn identity(g: &FinGroupObj) -> Self {
        GalGroupMor { src: g.clone(), dst: g.clone(), map: FinMap::identity(g.carrier()) }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map.apply(a)
    }

    /// self ∘ other.
    pub fn after(&self, other: &GalGroupMor) -> Result<GalGroupMor, HopfError> {
        if other.dst != self.src {
            return Err(HopfError::NotComposable("inner target differs from outer source".into()));
        }
        Ok(GalGroupMor { src: other.src.clone(), dst: self.dst.clone(), map: self.map.compose(&other.map)? })
    }
}

/// A Hopf algebra map dom → cod; as a map of groups it points the other way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroGroupMor<F> {
    pub dom: HopfObj<F>,
    pub cod: HopfObj<F>,
    pub map: LinMap<F>,
}

impl<F: Scalar> GroGroupMor<F> {
    pub fn validate(dom: HopfObj<F>, cod: HopfObj<F>, map: LinMap<F>) -> Result<Self, HopfError> {
        let map = map.retyped(dom.carrier(), cod.carrier())?;
        let f = GroGroupMor { dom, cod, map };
        finish(f.laws()?)?;
        Ok(f)
    }

    pub fn laws(&self) -> Result<Checklist, HopfError> {
        let mut c = Checklist::new("group-morphism");
        let f = &self.map;
        let (a, b) = (&self.dom, &self.cod);
        c.equation_split(
            "preserves multiplication",
            &f.compose(a.mul_map())?,
            &b.mul_map().compose(&tensor_map(f, f))?,
            &[a.dim(), a.dim()],
        )?;
        c.equation("preserves unit", &f.compose(a.unit_map())?, b.unit_map())?;
        c.equation("preserves comultiplication", &b.comul().compose(f)?, &tensor_map(f, f).compose(a.comul())?)?;
        c.equation("preserves counit", &b.counit().compose(f)?, a.counit())?;
        Ok(c)
    }

    pub fn identity(h: &HopfObj<F>) -> Self {
        GroGroupMor { dom: h.clone(), cod: h.clone(), map: LinMap::identity(h.carrier()) }
    }

    /// self ∘ other as algebra maps.
    pub fn after(&self, other: &GroGroupMor<F>) -> Result<GroGroupMor<F>, HopfError> {
        if other.cod != self.dom {
            return Err(HopfError::NotComposable("inner target differs from outer source".into()));
        }
        Ok(GroGroupMor { dom: other.dom.clone(), cod: self.cod.clone(), map: self.map.compose(&other.map)? })
    }
}

/// A 2-cell θ: f₁ ⇒ f₂ between homomorphisms π' → π, given by an element θ of π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalTwoCell {
    pub f1: GalGroupMor,
    pub f2: GalGroupMor,
    pub theta: usize,
}

impl GalTwoCell {
    pub fn validate(f1: GalGroupMor, f2: GalGroupMor, theta: usize) -> Result<Self, HopfError> {
        let cell = GalTwoCell { f1, f2, theta };
        finish(cell.laws()?)?;
        Ok(cell)
    }

    pub fn laws(&self) -> Result<Checklist, HopfError> {
        if self.f1.src != self.f2.src || self.f1.dst != self.f2.dst {
            return Err(HopfError::GroupMismatch("2-cell between non-parallel morphisms".into()));
        }
        let pi = &self.f1.dst;
        let src = self.f1.src.carrier();
        let t = point(pi.carrier(), self.theta).map_err(|_| HopfError::InvalidPoint(self.theta.to_string()))?;
        let const_t = t.compose(&kosmos_core::finset::terminal(src))?;
        let mut c = Checklist::new("two-cell");
        c.equation(
            "theta conjugates f1 into f2",
            &pi.convolution(&const_t, &self.f1.map)?,
            &pi.convolution(&self.f2.map, &const_t)?,
        )?;
        c.equation("f2 is inner twist of f1", &pi.inner_auto(self.theta)?.compose(&self.f1.map)?, &self.f2.map)?;
        Ok(c)
    }

    pub fn identity(f: &GalGroupMor) -> Self {
        GalTwoCell { f1: f.clone(), f2: f.clone(), theta: f.dst.unit() }
    }

    /// Vertical composite `next ∘ self`: f₁ ⇒ f₃ with component θ₂⋆θ₁.
    pub fn then(&self, next: &GalTwoCell) -> Result<GalTwoCell, HopfError> {
        if self.f2 != next.f1 {
            return Err(HopfError::NotComposable("2-cells do not share a middle morphism".into()));
        }
        let theta = self.f1.dst.m(next.theta, self.theta);
        GalTwoCell::validate(self.f1.clone(), next.f2.clone(), theta)
    }

    /// Horizontal composite of θ: f₁ ⇒ f₂ (π' → π) after θ': g₁ ⇒ g₂ (π'' → π'),
    /// with component θ⋆f₁(θ'). Also returns the component f₂(θ')⋆θ for comparison.
    pub fn horizontal(&self, inner: &GalTwoCell) -> Result<(GalTwoCell, usize), HopfError> {
        let pi = &self.f1.dst;
        let theta = pi.m(self.theta, self.f1.apply(inner.theta));
        let alt = pi.m(self.f2.apply(inner.theta), self.theta);
        let cell = GalTwoCell::validate(self.f1.after(&inner.f1)?, self.f2.after(&inner.f2)?, theta)?;
        Ok((cell, alt))
    }
}

/// A 2-cell θ: f₁ ⇒ f₂ between Hopf algebra maps π → π', given by an algebra point θ: π → κ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroTwoCell<F> {
    pub f1: GroGroupMor<F>,
    pub f2: GroGroupMor<F>,
    pub theta: LinMap<F>,
}

impl<F: Scalar> GroTwoCell<F> {
    pub fn validate(f1: GroGroupMor<F>, f2: GroGroupMor<F>, theta: LinMap<F>) -> Result<Self, HopfError> {
        let cell = GroTwoCell { f1, f2, theta };
        finish(cell.laws()?)?;
        Ok(cell)
    }

    pub fn laws(&self) -> Result<Checklist, HopfError> {
        if self.f1.dom != self.f2.dom || self.f1.cod != self.f2.cod {
            return Err(HopfError::GroupMismatch("2-cell between non-parallel morphisms".into()));
        }
        let pi = &self.f1.dom;
        if !pi.algebra().is_algebra_point(&self.theta)? {
            return Err(HopfError::InvalidPoint("theta is not an algebra map".into()));
        }
        let d = pi.comul();
        let mut c = Checklist::new("two-cell");
        c.equation(
            "theta conjugates f1 into f2",
            &tensor_map(&self.theta, &self.f1.map).compose(d)?,
            &tensor_map(&self.f2.map, &self.theta).compose(d)?,
        )?;
        c.equation("f2 is inner twist of f1", &self.f1.map.compose(&pi.inner_auto(&self.theta)?)?, &self.f2.map)?;
        Ok(c)
    }

    pub fn identity(f: &GroGroupMor<F>) -> Self {
        GroTwoCell { f1: f.clone(), f2: f.clone(), theta: f.dom.counit().clone() }
    }

    pub fn then(&self, next: &GroTwoCell<F>) -> Result<GroTwoCell<F>, HopfError> {
        if self.f2 != next.f1 {
            return Err(HopfError::NotComposable("2-cells do not share a middle morphism".into()));
        }
        let theta = point_product(&self.f1.dom, &next.theta, &self.theta)?;
        GroTwoCell::validate(self.f1.clone(), next.f2.clone(), theta)
    }

    /// Horizontal composite of θ: f₁ ⇒ f₂ (π → π') with θ': g₁ ⇒ g₂ (π' → π''), giving
    /// g₁f₁ ⇒ g₂f₂ with component θ⋆(θ'f₁). Also returns (θ'f₂)⋆θ for comparison.
    pub fn horizontal(&self, outer: &GroTwoCell<F>) -> Result<(GroTwoCell<F>, LinMap<F>), HopfError> {
        let pi = &self.f1.dom;
        let theta = point_product(pi, &self.theta, &outer.theta.compose(&self.f1.map)?)?;
        let alt = point_product(pi, &outer.theta.compose(&self.f2.map)?, &self.theta)?;
        let cell = GroTwoCell::validate(outer.f1.after(&self.f1)?, outer.f2.after(&self.f2)?, theta)?;
        Ok((cell, alt))
    }
}

/// a⋆b = (a⊗b)∘Δ for points a, b: π → κ.
pub fn point_product<F: Scalar>(pi: &HopfObj<F>, a: &LinMap<F>, b: &LinMap<F>) -> Result<LinMap<F>, HopfError> {
    let p = compose_all(&[&tensor_map(a, b), pi.comul()])?;
    Ok(p.retyped(pi.carrier(), &VecObj::unit())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, evaluation, function_algebra, symmetric};

    #[test]
    fn z4_to_z2_reduction() {
        let f = GalGroupMor::validate(cyclic(4), cyclic(2), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(f.apply(3), 1);
        assert!(GalGroupMor::validate(cyclic(4), cyclic(2), vec![0, 1, 1, 0]).is_err());
    }

    #[test]
    fn vertical_composition_in_z4() {
        let z4 = cyclic(4);
        let id = GalGroupMor::identity(&z4);
        let a = GalTwoCell::validate(id.clone(), id.clone(), 1).unwrap();
        let b = GalTwoCell::validate(id.clone(), id.clone(), 2).unwrap();
        assert_eq!(a.then(&b).unwrap().theta, 3);
        let unit = GalTwoCell::identity(&id);
        assert_eq!(unit.then(&a).unwrap().theta, 1);
    }

    #[test]
    fn s3_conjugation_cells() {
        let s3 = symmetric(3);
        let id = GalGroupMor::identity(&s3);
        let t = 1;
        let conj = GalGroupMor::validate(s3.clone(), s3.clone(), s3.inner_auto(t).unwrap().table().to_vec()).unwrap();
        GalTwoCell::validate(id.clone(), conj.clone(), t).unwrap();
        assert!(GalTwoCell::validate(id.clone(), id.clone(), t).is_err());
        let back = GalTwoCell::validate(conj, id.clone(), s3.inv(t)).unwrap();
        assert_eq!(back.f2, id);
    }

    #[test]
    fn horizontal_formulas_agree() {
        let s3 = symmetric(3);
        let id = GalGroupMor::identity(&s3);
        for t in 0..6 {
            for u in 0..6 {
                let ct = GalGroupMor::validate(s3.clone(), s3.clone(), s3.inner_auto(t).unwrap().table().to_vec()).unwrap();
                let cu = GalGroupMor::validate(s3.clone(), s3.clone(), s3.inner_auto(u).unwrap().table().to_vec()).unwrap();
                let outer = GalTwoCell::validate(id.clone(), ct, t).unwrap();
                let inner = GalTwoCell::validate(id.clone(), cu, u).unwrap();
                let (cell, alt) = outer.horizontal(&inner).unwrap();
                assert_eq!(cell.theta, alt);
            }
        }
    }

    #[test]
    fn gro_cells_on_os3() {
        let g = symmetric(3);
        let h = function_algebra(&g).unwrap();
        let id = GroGroupMor::identity(&h);
        let t = 3;
        let theta = evaluation(&h, t);
        let sigma = h.inner_auto(&theta).unwrap();
        let conj = GroGroupMor::validate(h.clone(), h.clone(), sigma).unwrap();
        let cell = GroTwoCell::validate(id.clone(), conj.clone(), theta.clone()).unwrap();
        assert!(GroTwoCell::validate(id.clone(), id.clone(), theta.clone()).is_err());
        let inv = evaluation(&h, g.inv(t));
        let back = GroTwoCell::validate(conj, id.clone(), inv).unwrap();
        let loop_ = cell.then(&back).unwrap();
        assert_eq!(&loop_.theta, h.counit());
        let (hor, alt) = cell.horizontal(&GroTwoCell::identity(&id)).unwrap();
        assert_eq!(hor.theta, alt);
    }

    #[test]
    fn gro_vertical_matches_group_product() {
        let g = cyclic(4);
        let h = function_algebra(&g).unwrap();
        let id = GroGroupMor::identity(&h);
        let a = GroTwoCell::validate(id.clone(), id.clone(), evaluation(&h, 1)).unwrap();
        let b = GroTwoCell::validate(id.clone(), id.clone(), evaluation(&h, 2)).unwrap();
        assert_eq!(a.then(&b).unwrap().theta, evaluation(&h, 3));
    }

    #[test]
    fn restriction_map_oz4_to_oz2() {
        // The dual of the inclusion Z/2 → Z/4, k ↦ 2k, is restriction of functions.
        let (z2, z4) = (cyclic(2), cyclic(4));
        let (o2, o4) = (function_algebra(&z2).unwrap(), function_algebra(&z4).unwrap());
        let res = LinMap::from_fn(o4.carrier(), o2.carrier(), |r, c| kosmos_core::rat((c == 2 * r) as i64));
        GroGroupMor::validate(o4, o2, res).unwrap();
    }
}
