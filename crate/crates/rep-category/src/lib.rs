//! Representations of a group object: sets with a left action of a finite group, and
//! comodules over a commutative Hopf algebra. Both categories are symmetric monoidal with a
//! strict monoidal forgetful functor, which is what the reconstruction crate consumes.

pub mod gal;
pub mod gro;

use hopf_objects::HopfError;
use kosmos_core::KosmosError;
use lawcheck::Report;
use thiserror::Error;

pub use gal::{GalRep, GalRepMor};
pub use gro::{GroRep, GroRepMor};

/// Enumeration in `hom_rep` stops above this many candidate maps.
pub const HOM_ENUMERATION_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    Kosmos(#[from] KosmosError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("action law fails: {}", failed(.0))]
    ActionLaw(Vec<Report>),
    #[error("not a morphism of representations: {}", failed(.0))]
    NotEquivariant(Vec<Report>),
    #[error("carrier too large: {candidates} candidate maps exceed the limit {limit}")]
    CarrierTooLarge { candidates: u128, limit: u128 },
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
}

fn failed(reports: &[Report]) -> String {
    reports.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect::<Vec<_>>().join(", ")
}

pub type RatRep = GroRep<kosmos_core::Rat>;
pub type RatRepMor = GroRepMor<kosmos_core::Rat>;
