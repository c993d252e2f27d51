//! The two ambient symmetric monoidal categories: finite sets (cartesian product, reflexive
//! coequalizers) and finite-dimensional vector spaces over an exact field (Kronecker
//! product, coreflexive equalizers). Both tensors are strictly associative and unital.

pub mod error;
pub mod finset;
pub mod linear;
pub mod morphism;

pub use error::{KosmosError, Result};
pub use finset::{CoeqResult, FinMap, FinObj};
pub use linear::{EqResult, LinMap, Scalar, VecObj};
pub use morphism::{compose_all, tensor_all, Difference, Morphism};

use num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoherenceKind {
    Assoc,
    LeftUnit,
    RightUnit,
}

pub type Rat = BigRational;
pub type RatObj = VecObj;
pub type RatMap = LinMap<Rat>;
pub type RatEqResult = EqResult<Rat>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
