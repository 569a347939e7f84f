//! Quaternion and biquaternion arithmetic for spectral signal processing.
//!
//! The skew-field `H` of real quaternions has basis `{1, i, j, k}` with
//! `i^2 = j^2 = k^2 = -1`, `ij = -ji = k`, `jk = -kj = i`, `ki = -ik = j`.
//! [`Quaternion`] implements this algebra over `f64` coefficients,
//! [`PureUnit`] is a unit vector of the imaginary 3-space (an axis), and
//! [`Biquaternion`] extends the coefficients to complex numbers with a
//! central complex unit that commutes with `i, j, k`.
//!
//! Unit quaternions act as rotations in two distinct ways, both provided
//! here:
//!
//! * conjugation `x -> q x q~` rotates the imaginary 3-space in the plane
//!   orthogonal to the axis of `q` through twice its angle ([`rotate3`]);
//! * one-sided multiplication `x -> x q` (or `q x`) is an isoclinic
//!   rotation of 4-space, turning every half-line through the origin by
//!   the same angle ([`Biquaternion::right_mul`]).

mod biquaternion;
mod quaternion;

pub use biquaternion::Biquaternion;
pub use quaternion::{exp_pure, rotate3, PureUnit, Quaternion};

/// Domain errors for quaternion operations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuaternionError {
    /// The zero quaternion has no inverse.
    ZeroInverse,
    /// A unit quaternion was required; carries the offending norm.
    NotUnit(f64),
    /// A unit axis (pure unit quaternion) was required; carries the
    /// offending vector norm.
    NotUnitAxis(f64),
}

impl std::fmt::Display for QuaternionError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuaternionError::ZeroInverse => write!(f, "zero quaternion has no inverse"),
            QuaternionError::NotUnit(n) => {
                write!(f, "expected unit quaternion, got norm {n}")
            }
            QuaternionError::NotUnitAxis(n) => {
                write!(f, "expected unit axis, got vector norm {n}")
            }
        }
    }
}

impl std::error::Error for QuaternionError {}
