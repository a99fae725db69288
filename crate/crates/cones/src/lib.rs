//! Exact polyhedral cones and piecewise-linear functions supported on them.
//!
//! Everything here is generic over an integer type `T` implementing
//! [`Scalar`]; coefficients live in the field `Ratio<T>`. The aliases at the
//! bottom of this file pick `i128` (fast, overflow-checked) or `BigInt`
//! (unbounded) for callers that don't care.
//!
//! A "cone" is an H-representation `{p : F_i(p) >= 0}` where each `F_i` is an
//! affine form. Affine constants are allowed, so strictly speaking these are
//! polyhedra; the name follows the usage in the fusion-rule literature.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub mod cone;
pub mod fourier_motzkin;
pub mod generators;
pub mod json;
mod lp;
pub mod piecewise;
pub mod space;
pub mod union;

pub use cone::Cone;
pub use generators::Generators;
pub use piecewise::{Comparison, Counterexample, Piece, PiecewiseLinear, Violation};
pub use space::{AffineMap, LinearForm, Space};
pub use union::is_union_convex;

/// Integer types usable as the numerator/denominator type of the coefficient
/// field.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + std::str::FromStr
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + std::str::FromStr
        + Send
        + Sync
        + 'static
{
}

/// Exact rational over `T`.
pub type Q<T> = num_rational::Ratio<T>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable tuples differ: {left} vs {right}")]
    AmbientMismatch { left: String, right: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cone is empty or not full-dimensional")]
    Empty,
    #[error("declared domains differ")]
    DomainMismatch,
    #[error("point lies outside the declared domain")]
    OutsideDomain,
    #[error("no piece contains the point")]
    NotCovered,
    #[error("malformed cone-set JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub type Rational = Q<i128>;
pub type BigRational = Q<num_bigint::BigInt>;
pub type Form = LinearForm<i128>;
pub type BigForm = LinearForm<num_bigint::BigInt>;
pub type ExactCone = Cone<i128>;
pub type BigCone = Cone<num_bigint::BigInt>;
pub type Pwl = PiecewiseLinear<i128>;
pub type BigPwl = PiecewiseLinear<num_bigint::BigInt>;
