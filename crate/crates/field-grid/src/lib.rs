//! Discrete biquaternion-valued fields on regular periodic grids.
//!
//! A [`Field`] holds one biquaternion sample per point of a 1-, 2- or
//! 3-dimensional torus described by a [`GridShape`]. The inner product is
//! the Riemann-sum form of the Hilbert-space pairing
//!
//! ```text
//! <f, g> = Sc sum_x conj_ch(f(x)) g(x) dV
//!        = sum_x sum_m conj(f_m(x)) g_m(x) dV,
//! ```
//!
//! a complex number, conjugate-linear in the first argument. Fields are
//! immutable after construction; every operation returns a new field.

mod field;
mod shape;
pub mod synth;

pub use field::{Field, Side};
pub use shape::GridShape;

/// Domain errors for grid and field operations.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldError {
    /// Grid extents or spacings outside the supported domain.
    BadShape(String),
    /// Two operands live on different grids.
    ShapeMismatch,
    /// Sample buffer length does not match the grid.
    BadSampleCount { expected: usize, actual: usize },
    /// An offset/index vector has the wrong dimensionality.
    BadRank { expected: usize, actual: usize },
}

impl std::fmt::Display for FieldError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldError::BadShape(what) => write!(f, "bad grid shape: {what}"),
            FieldError::ShapeMismatch => write!(f, "fields live on different grids"),
            FieldError::BadSampleCount { expected, actual } => {
                write!(f, "expected {expected} samples, got {actual}")
            }
            FieldError::BadRank { expected, actual } => {
                write!(f, "expected {expected} axes, got {actual}")
            }
        }
    }
}

impl std::error::Error for FieldError {}
