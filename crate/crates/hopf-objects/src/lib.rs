//! Group objects on both sides: finite groups as Hopf monoids in finite sets, and
//! commutative Hopf algebras over an exact field read in the affine direction.

pub mod catalog;
pub mod group;
pub mod hopf;
pub mod morphisms;

use kosmos_core::{KosmosError, Rat};
use lawcheck::Report;
use thiserror::Error;

pub use group::{hom_group, FinGroupObj, HomGroup};
pub use hopf::{CommAlgObj, HopfObj};
pub use morphisms::{GalGroupMor, GalTwoCell, GroGroupMor, GroTwoCell};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error(transparent)]
    Kosmos(#[from] KosmosError),
    #[error("group and Hopf carriers must be nonempty")]
    EmptyCarrier,
    #[error("axioms failed: {}", names(.0))]
    Axioms(Vec<Report>),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
}

fn names(reports: &[Report]) -> String {
    reports.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect::<Vec<_>>().join(", ")
}

pub type RatHopfObj = HopfObj<Rat>;
pub type RatCommAlg = CommAlgObj<Rat>;
pub type RatGroupMor = GroGroupMor<Rat>;
pub type RatTwoCell = GroTwoCell<Rat>;
