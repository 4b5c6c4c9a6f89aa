//! Weight lattices and root systems of reductive Lie algebras.
//!
//! Weights are integer vectors in the fundamental-weight basis, one block
//! per simple factor, followed by the torus coordinates. All arithmetic is
//! exact.

pub mod cartan;
pub mod freudenthal;
pub mod linalg;
pub mod roots;
pub mod scalar;
pub mod shape;
pub mod weight;

pub use cartan::{factor_data, FactorData};
pub use freudenthal::{
    dominant_conjugate, irreducible_weights, irreducible_weights_in, weyl_dimension,
    weyl_dimension_in,
};
pub use roots::{build_root_system, coroot_pairing, Root, RootSystem};
pub use scalar::Scalar;
pub use shape::{AlgebraShape, Series, SimpleFactor};
pub use weight::{dual_weights, power_weights, tensor_weights, PowerKind, Weight, WeightMultiset};

/// Default exact field used throughout.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; fast but may overflow on large inputs.
pub type SmallRational = num_rational::Rational64;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invalid simple factor {series}{rank}: {reason}")]
    InvalidFactor {
        series: String,
        rank: usize,
        reason: &'static str,
    },
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("highest weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("power k = {k} out of range for a module of dimension {dim}")]
    KOutOfRange { k: usize, dim: u64 },
    #[error("weights over different shapes")]
    ShapeMismatch,
    #[error("non-integral value in {0}")]
    NonIntegral(&'static str),
}
