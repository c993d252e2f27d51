//! Torsors over the base on both sides: validation with the shear map τ and the division
//! map d, the twisted group π^p, twisting the fiber functor by a torsor, functors induced
//! along group morphisms, and the round trip between fiber functors and torsors.

pub mod gal;
pub mod gro;
pub mod induced;
pub mod points;

use hopf_objects::HopfError;
use kosmos_core::KosmosError;
use lawcheck::{Checklist, Report};
use reconstruction::ReconError;
use rep_category::RepError;
use thiserror::Error;

pub use gal::{GalBitorsor, GalTorsor, GalTwist, GalTwistedGroup};
pub use gro::{GroBitorsor, GroTorsor, GroTwist, GroTwistedGroup};

pub use points::rational_points_dim2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorsorError {
    #[error(transparent)]
    Kosmos(#[from] KosmosError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Recon(#[from] ReconError),
    #[error("torsor carrier must be nonempty")]
    EmptyCarrier,
    #[error("action law fails: {}", failed(.0))]
    ActionLaw(Vec<Report>),
    #[error("shear map is not invertible: {0}")]
    TauNotIso(String),
    #[error("not a morphism of torsors: {}", failed(.0))]
    NotTorsorMorphism(Vec<Report>),
    #[error("round trip failed: {0}")]
    RoundTripFailure(String),
    #[error("algebra has dimension {0}, expected 2")]
    NotDimTwo(usize),
    #[error("algebra unit is zero")]
    NotUnital,
}

fn failed(reports: &[Report]) -> String {
    reports.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect::<Vec<_>>().join(", ")
}

/// Components of a natural isomorphism evaluated on a list of probes.
#[derive(Debug, Clone)]
pub struct NatProbe<M> {
    pub components: Vec<M>,
    pub inverses: Vec<M>,
    pub checks: Checklist,
}

/// Largest carrier (or dimension) of a probe pair tensor that the checks still visit.
pub const PAIR_SIZE_LIMIT: usize = 64;


pub type RatGroTorsor = GroTorsor<kosmos_core::Rat>;
