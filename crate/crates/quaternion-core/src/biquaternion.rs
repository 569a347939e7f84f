use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::Quaternion;

/// Quaternion with complex coefficients: `c0 + c1 i + c2 j + c3 k` where
/// each `cm` is a complex number whose imaginary unit commutes with the
/// quaternionic units `i, j, k`.
///
/// This is the scalar type of the spectral domain: frequency multipliers
/// such as `i xi/|xi|` mix the central complex unit with the quaternionic
/// ones, and real quaternion samples embed with zero imaginary parts.
///
/// Biquaternions contain zero divisors, so [`Biquaternion::magnitude`] is
/// the Euclidean length of the eight real coordinates, not a
/// multiplicative norm.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Biquaternion {
    /// Complex coefficients of `1, i, j, k` in that order.
    pub coeffs: [Complex64; 4],
}

impl Biquaternion {
    pub const ZERO: Self = Self {
        coeffs: [Complex64::new(0.0, 0.0); 4],
    };

    pub const ONE: Self = Self {
        coeffs: [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        ],
    };

    pub const fn new(c0: Complex64, c1: Complex64, c2: Complex64, c3: Complex64) -> Self {
        Self {
            coeffs: [c0, c1, c2, c3],
        }
    }

    /// Embeds a complex number as a central scalar.
    pub fn from_complex(c: Complex64) -> Self {
        let mut coeffs = [Complex64::new(0.0, 0.0); 4];
        coeffs[0] = c;
        Self { coeffs }
    }

    pub fn from_real(t: f64) -> Self {
        Self::from_complex(Complex64::new(t, 0.0))
    }

    /// Scalar part, a complex number.
    pub fn scalar_part(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Quaternion of the real parts of the four coefficients.
    pub fn real_part(&self) -> Quaternion {
        Quaternion::new(
            self.coeffs[0].re,
            self.coeffs[1].re,
            self.coeffs[2].re,
            self.coeffs[3].re,
        )
    }

    /// Quaternion of the imaginary parts of the four coefficients.
    pub fn imag_part(&self) -> Quaternion {
        Quaternion::new(
            self.coeffs[0].im,
            self.coeffs[1].im,
            self.coeffs[2].im,
            self.coeffs[3].im,
        )
    }

    /// Complex conjugation of every coefficient, leaving `i, j, k` alone.
    pub fn conj_c(&self) -> Self {
        let c = self.coeffs;
        Self::new(c[0].conj(), c[1].conj(), c[2].conj(), c[3].conj())
    }

    /// Quaternionic conjugation: negates the `i, j, k` coefficients.
    pub fn conj_q(&self) -> Self {
        let c = self.coeffs;
        Self::new(c[0], -c[1], -c[2], -c[3])
    }

    /// Combined complex and quaternionic conjugation. Anti-multiplicative:
    /// `conj_ch(p q) = conj_ch(q) conj_ch(p)`.
    pub fn conj_ch(&self) -> Self {
        let c = self.coeffs;
        Self::new(c[0].conj(), -c[1].conj(), -c[2].conj(), -c[3].conj())
    }

    /// Squared Euclidean magnitude of the eight real coordinates.
    pub fn magnitude_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude_sqr().sqrt()
    }

    /// Largest deviation from being a real scalar: the magnitude of the
    /// imaginary scalar part and of all three vector coefficients.
    pub fn real_scalar_defect(&self) -> f64 {
        let c = self.coeffs;
        c[0].im
            .abs()
            .max(c[1].norm())
            .max(c[2].norm())
            .max(c[3].norm())
    }

    /// Right multiplication by a real quaternion, `x -> x q`. For unit `q`
    /// this is a right-isoclinic rotation of the four real coordinates
    /// (applied to real and imaginary parts alike).
    pub fn right_mul(&self, q: &Quaternion) -> Self {
        *self * Self::from(*q)
    }

    /// Left multiplication by a real quaternion, `x -> q x`.
    pub fn left_mul(&self, q: &Quaternion) -> Self {
        Self::from(*q) * *self
    }
}

impl From<Quaternion> for Biquaternion {
    fn from(q: Quaternion) -> Self {
        Self::new(
            Complex64::new(q.w, 0.0),
            Complex64::new(q.x, 0.0),
            Complex64::new(q.y, 0.0),
            Complex64::new(q.z, 0.0),
        )
    }
}

impl Add for Biquaternion {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        let a = self.coeffs;
        let b = r.coeffs;
        Self::new(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])
    }
}

impl Sub for Biquaternion {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        let a = self.coeffs;
        let b = r.coeffs;
        Self::new(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])
    }
}

impl Neg for Biquaternion {
    type Output = Self;
    fn neg(self) -> Self {
        let c = self.coeffs;
        Self::new(-c[0], -c[1], -c[2], -c[3])
    }
}

/// Central complex scalar multiplication (left and right agree).
impl Mul<Complex64> for Biquaternion {
    type Output = Self;
    fn mul(self, t: Complex64) -> Self {
        let c = self.coeffs;
        Self::new(c[0] * t, c[1] * t, c[2] * t, c[3] * t)
    }
}

impl Mul<f64> for Biquaternion {
    type Output = Self;
    fn mul(self, t: f64) -> Self {
        self * Complex64::new(t, 0.0)
    }
}

/// Hamilton product over complex coefficients.
impl Mul for Biquaternion {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let a = self.coeffs;
        let b = r.coeffs;
        Self::new(
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        )
    }
}
