//! Tensor product and level-l fusion coefficients for A2.
//!
//! Three independent routes are provided: the Racah-Speiser and Kac-Walton
//! sums over (affine) Weyl groups, and the closed BMW formula. The
//! [`symbolic`] module re-derives the fusion rule as a piecewise-linear
//! function of `(a, b, c, d, e, f, l)` and compares it with BMW over exact
//! polyhedral cones.
//!
//! All arithmetic is exact. Functions are generic over an integer
//! [`Scalar`]; `i64` is the default for numeric work and `i128` for cone
//! computations. `BigInt` works everywhere.

pub mod bmw;
pub mod fusion;
pub mod multiplicity;
pub mod rootsystem;
pub mod symbolic;
pub mod tensor;
pub mod verify;

pub use polycone::{Scalar, Q};

pub use bmw::{bmw_fusion, bmw_g, bmw_intermediates, bmw_tensor, BmwIntermediates};
pub use fusion::{
    contributing_alcoves, fusion_coefficient, fusion_decomposition, FusionMode, FusionQuery,
};
pub use multiplicity::{freudenthal_diagram, mult, mult_dominant, mult_table, weight_diagram};
pub use rootsystem::{
    dot_action, fold_to_alcove, fold_to_chamber, killing_form, AffineWeylWord, Fold, Generator,
    Level, Weight,
};
pub use symbolic::{bmw_symbolic, compare_piecewise, symbolic_kac_walton, SymbolicFusionResult};
pub use tensor::{tensor_coefficient, tensor_decomposition, CoefficientTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("level must be nonnegative, got {0}")]
    NegativeLevel(String),
    #[error("no generator s{0}; expected s0, s1 or s2")]
    InvalidGenerator(usize),
    #[error("cannot parse Weyl word {0:?}")]
    InvalidWord(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {weight} is outside the level-{level} alcove")]
    OutsideAlcove { weight: String, level: String },
    #[error("{0} is not one of the thirteen contributing alcoves")]
    NotContributing(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Cone(#[from] polycone::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub type BigWeight = Weight<num_bigint::BigInt>;
pub type BigLevel = Level<num_bigint::BigInt>;
