//! Fiber functors out of the representation categories, with their monoidal structure.

use hopf_objects::{FinGroupObj, HopfObj};
use kosmos_core::finset::{FinMap, FinObj};
use kosmos_core::{LinMap, Morphism, Scalar, VecObj};
use lawcheck::Checklist;
use rep_category::{gal, gro, GalRep, GalRepMor, GroRep, GroRepMor};

use crate::ReconError;

/// A strong monoidal functor Rep(π) → FinSet that preserves trivial representations.
pub trait GalFiber {
    fn group(&self) -> &FinGroupObj;
    fn obj(&self, x: &GalRep) -> Result<FinObj, ReconError>;
    fn map(&self, f: &GalRepMor) -> Result<FinMap, ReconError>;
    /// ω(X⊗Y) → ω(X)⊗ω(Y).
    fn tensor_coh(&self, x: &GalRep, y: &GalRep) -> Result<FinMap, ReconError>;
    /// ω(1) → κ.
    fn unit_coh(&self) -> Result<FinMap, ReconError>;
    /// ω(t z) → z.
    fn trivial_coh(&self, z: &FinObj) -> Result<FinMap, ReconError>;
}

/// A strong monoidal functor Comod(π) → Vec preserving trivial comodules.
pub trait GroFiber<F: Scalar> {
    fn group(&self) -> &HopfObj<F>;
    fn obj(&self, x: &GroRep<F>) -> Result<VecObj, ReconError>;
    fn map(&self, f: &GroRepMor<F>) -> Result<LinMap<F>, ReconError>;
    /// ω(X)⊗ω(Y) → ω(X⊗Y).
    fn tensor_coh(&self, x: &GroRep<F>, y: &GroRep<F>) -> Result<LinMap<F>, ReconError>;
    /// κ → ω(1).
    fn unit_coh(&self) -> Result<LinMap<F>, ReconError>;
    /// z → ω(t z).
    fn trivial_coh(&self, z: &VecObj) -> Result<LinMap<F>, ReconError>;
}

#[derive(Debug, Clone)]
pub struct GalForgetful {
    group: FinGroupObj,
}

impl GalForgetful {
    pub fn new(group: &FinGroupObj) -> Self {
        GalForgetful { group: group.clone() }
    }
}

impl GalFiber for GalForgetful {
    fn group(&self) -> &FinGroupObj {
        &self.group
    }
    fn obj(&self, x: &GalRep) -> Result<FinObj, ReconError> {
        Ok(x.carrier().clone())
    }
    fn map(&self, f: &GalRepMor) -> Result<FinMap, ReconError> {
        Ok(f.map.clone())
    }
    fn tensor_coh(&self, x: &GalRep, y: &GalRep) -> Result<FinMap, ReconError> {
        Ok(FinMap::identity(&kosmos_core::finset::tensor_obj(x.carrier(), y.carrier())))
    }
    fn unit_coh(&self) -> Result<FinMap, ReconError> {
        Ok(FinMap::identity(&FinObj::unit()))
    }
    fn trivial_coh(&self, z: &FinObj) -> Result<FinMap, ReconError> {
        Ok(FinMap::identity(z))
    }
}

#[derive(Debug, Clone)]
pub struct GroForgetful<F> {
    group: HopfObj<F>,
}

impl<F: Scalar> GroForgetful<F> {
    pub fn new(group: &HopfObj<F>) -> Self {
        GroForgetful { group: group.clone() }
    }
}

impl<F: Scalar> GroFiber<F> for GroForgetful<F> {
    fn group(&self) -> &HopfObj<F> {
        &self.group
    }
    fn obj(&self, x: &GroRep<F>) -> Result<VecObj, ReconError> {
        Ok(x.carrier().clone())
    }
    fn map(&self, f: &GroRepMor<F>) -> Result<LinMap<F>, ReconError> {
        Ok(f.map.clone())
    }
    fn tensor_coh(&self, x: &GroRep<F>, y: &GroRep<F>) -> Result<LinMap<F>, ReconError> {
        Ok(LinMap::identity(&kosmos_core::linear::tensor_obj(x.carrier(), y.carrier())))
    }
    fn unit_coh(&self) -> Result<LinMap<F>, ReconError> {
        Ok(LinMap::identity(&VecObj::unit()))
    }
    fn trivial_coh(&self, z: &VecObj) -> Result<LinMap<F>, ReconError> {
        Ok(LinMap::identity(z))
    }
}

/// Maps kept per ordered probe pair when collecting generating morphisms.
pub const GENERATORS_PER_PAIR: usize = 16;

/// Probe representations with generating morphisms between them and the adjunction data
/// of the forgetful functor on each probe.
#[derive(Debug, Clone)]
pub struct FiberData<R, M, A> {
    pub probes: Vec<R>,
    pub generators: Vec<M>,
    /// Probe indices (source, target) of each generator.
    pub edges: Vec<(usize, usize)>,
    /// η on the carrier of each probe (the free or cofree unit).
    pub units: Vec<A>,
    /// ε at each probe.
    pub counits: Vec<A>,
}

impl FiberData<GalRep, GalRepMor, FinMap> {
    pub fn galois(group: &FinGroupObj, limit: usize) -> Self {
        let probes = gal::probes(group, limit);
        let (mut generators, mut edges) = (Vec::new(), Vec::new());
        for (i, x) in probes.iter().enumerate() {
            for (j, y) in probes.iter().enumerate() {
                if let Ok(ms) = gal::hom_rep_capped(x, y, GENERATORS_PER_PAIR) {
                    edges.extend(std::iter::repeat_n((i, j), ms.len()));
                    generators.extend(ms);
                }
            }
        }
        let units = probes.iter().map(|x| GalRep::free_unit(group, x.carrier())).collect();
        let counits = probes.iter().map(|x| x.free_counit().map).collect();
        FiberData { probes, generators, edges, units, counits }
    }

    /// ε_X∘η_x = I_x on every probe, read in the category of sets.
    pub fn triangles(&self) -> Result<Checklist, ReconError> {
        let mut c = Checklist::new("free-forgetful adjunction");
        for (k, x) in self.probes.iter().enumerate() {
            c.equation(
                &format!("counit after unit on probe {k}"),
                &self.counits[k].compose(&self.units[k])?,
                &FinMap::identity(x.carrier()),
            )?;
        }
        Ok(c)
    }
}

impl<F: Scalar> FiberData<GroRep<F>, GroRepMor<F>, LinMap<F>> {
    pub fn grothendieck(group: &HopfObj<F>, limit: usize) -> Self {
        let probes = gro::probes(group, limit);
        let (mut generators, mut edges) = (Vec::new(), Vec::new());
        for (i, x) in probes.iter().enumerate() {
            for (j, y) in probes.iter().enumerate() {
                if let Ok(ms) = gro::hom_rep(x, y) {
                    let ms: Vec<_> = ms.into_iter().take(GENERATORS_PER_PAIR).collect();
                    edges.extend(std::iter::repeat_n((i, j), ms.len()));
                    generators.extend(ms);
                }
            }
        }
        let units = probes.iter().map(|x| x.cofree_unit().map).collect();
        let counits = probes.iter().map(|x| GroRep::cofree_counit(group, x.carrier())).collect();
        FiberData { probes, generators, edges, units, counits }
    }

    /// ε_x∘η_X = I_x on every probe.
    pub fn triangles(&self) -> Result<Checklist, ReconError> {
        let mut c = Checklist::new("forgetful-cofree adjunction");
        for (k, x) in self.probes.iter().enumerate() {
            c.equation(
                &format!("counit after unit on probe {k}"),
                &self.counits[k].compose(&self.units[k])?,
                &LinMap::identity(x.carrier()),
            )?;
        }
        Ok(c)
    }
}
