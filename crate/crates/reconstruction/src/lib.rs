//! Recovering a group object from its category of representations.
//!
//! The fiber functor ω and its adjoints give a colax (finite sets) or lax (vector spaces)
//! tensor functor φ on the ambient category. `hatar`/`tahar` compare φ with tensoring by
//! φ(κ), and the structure maps of φ(κ) are read off from them. The reconstructed object
//! is then certified isomorphic to the original through the unitor.

pub mod colax;
pub mod fiber;
pub mod galois;
pub mod grothendieck;
pub mod lax;

use hopf_objects::HopfError;
use kosmos_core::KosmosError;
use lawcheck::Report;
use rep_category::RepError;
use thiserror::Error;

pub use colax::Colax;
pub use fiber::{FiberData, GalFiber, GalForgetful, GroFiber, GroForgetful};
pub use galois::{aut_presheaf_check_galois, comparison_functor_galois, reconstruct_galois, GalReconstruction};
pub use grothendieck::{
    aut_presheaf_check_grothendieck, comparison_functor_grothendieck, reconstruct_grothendieck, GroReconstruction,
};
pub use lax::Lax;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconError {
    #[error(transparent)]
    Kosmos(#[from] KosmosError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("reconstruction mismatch: {}", failed(.0))]
    ReconstructionMismatch(Vec<Report>),
    #[error("round trip failed for {0}")]
    RoundTripFailure(String),
}

fn failed(reports: &[Report]) -> String {
    reports.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect::<Vec<_>>().join(", ")
}

pub type RatGroReconstruction = GroReconstruction<kosmos_core::Rat>;
