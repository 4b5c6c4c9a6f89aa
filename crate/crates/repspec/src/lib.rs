//! Symplectic representations of reductive Lie algebras, their components,
//! gluing of sl(2) factors, and saturation.

pub mod glue;
pub mod rep;
pub mod saturation;
pub mod summand;

pub use glue::glue_links;
pub use rep::{dim, product, realize, Component, SymplecticRep};
pub use saturation::{
    assemble_saturated, check_saturated, decompose_components, extract_module, torus_free_key, SaturationReport,
};
pub use summand::{dual_highest, dual_summand, duality_class, DualityClass, IrreducibleSummand, Origin};

use mfsr_lattice::LatticeError;

#[derive(Debug, thiserror::Error)]
pub enum RepError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("not realizable: {0}")]
    NotRealizable(String),
    #[error("invalid link: {0}")]
    InvalidLink(String),
    #[error("malformed representation: {0}")]
    Malformed(String),
    #[error("not symplectic: {0}")]
    NotSymplectic(String),
}
