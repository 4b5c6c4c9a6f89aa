//! The extremal-weight reduction: decides multiplicity-freeness of a
//! symplectic representation and computes its rank and generic isotropy.

pub mod classify;
pub mod isotropy;
pub mod policy;
pub mod reduce;
pub mod verdict;

pub use classify::{classify_weight, is_admissible, reduction_step, WeightClass};
pub use isotropy::{classify_subsystem, generic_isotropy, IsotropyDescription};
pub use policy::{DefaultPolicy, RandomPolicy, ScriptedPolicy, SelectionPolicy, Candidate};
pub use reduce::{run_reduction, Reducer, ReductionResult, StepRecord};
pub use verdict::{criterion_a, is_multiplicity_free, is_multiplicity_free_with, verdict_from, Verdict, Witness, WitnessKind};

use mfsr_lattice::LatticeError;
use mfsr_repspec::RepError;

#[derive(Debug, thiserror::Error)]
pub enum KnopError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),
    #[error("selection script: {0}")]
    Script(String),
}
