use std::ops::{Add, Mul, Neg, Sub};

use crate::QuaternionError;

/// Relative tolerance accepted on |q| = 1 for rotation inputs. Inputs
/// outside it are rejected rather than silently renormalized.
const UNIT_TOL: f64 = 1e-9;

/// Real quaternion `w + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Embeds a real scalar as `t * 1`.
    pub const fn scalar(t: f64) -> Self {
        Self::new(t, 0.0, 0.0, 0.0)
    }

    /// Builds the pure quaternion `v1 i + v2 j + v3 k`.
    pub const fn pure(v: [f64; 3]) -> Self {
        Self::new(0.0, v[0], v[1], v[2])
    }

    /// Scalar part `Sc(q) = w`.
    pub fn scalar_part(&self) -> f64 {
        self.w
    }

    /// Vector part `Vec(q)` as a 3-vector of the i, j, k coefficients.
    pub fn vector_part(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Conjugate `q~ = w - x i - y j - z k`.
    pub fn conj(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Euclidean norm `|q| = sqrt(q q~)`.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Multiplicative inverse `q~ / |q|^2`, so that `q * q.inverse() = 1`.
    pub fn inverse(&self) -> Result<Self, QuaternionError> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(QuaternionError::ZeroInverse);
        }
        Ok(self.conj() * (1.0 / n2))
    }

    pub fn is_unit(&self) -> bool {
        (self.norm() - 1.0).abs() <= UNIT_TOL
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, t: f64) -> Self {
        Self::new(self.w * t, self.x * t, self.y * t, self.z * t)
    }
}

/// Hamilton product; distributes over addition and is associative but not
/// commutative.
impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        Self::new(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

/// Pure unit quaternion `u = u1 i + u2 j + u3 k` with `|u| = 1`.
///
/// Such an axis satisfies `u^2 = -1`, hence `u^{-1} = -u`, and generates
/// the one-parameter family `exp_pure(u, phi) = cos(phi) + u sin(phi)` of
/// unit quaternions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureUnit {
    x: f64,
    y: f64,
    z: f64,
}

impl PureUnit {
    pub const I: Self = Self {
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    pub const J: Self = Self {
        x: 0.0,
        y: 1.0,
        z: 0.0,
    };
    pub const K: Self = Self {
        x: 0.0,
        y: 0.0,
        z: 1.0,
    };

    /// Accepts a vector already of unit length (within 1e-9); the
    /// components are stored as given, not renormalized.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, QuaternionError> {
        let n = (x * x + y * y + z * z).sqrt();
        if (n - 1.0).abs() > UNIT_TOL {
            return Err(QuaternionError::NotUnitAxis(n));
        }
        Ok(Self { x, y, z })
    }

    /// Normalizes an arbitrary nonzero vector into an axis.
    pub fn from_vector(v: [f64; 3]) -> Result<Self, QuaternionError> {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(QuaternionError::NotUnitAxis(n));
        }
        Ok(Self {
            x: v[0] / n,
            y: v[1] / n,
            z: v[2] / n,
        })
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn as_quaternion(&self) -> Quaternion {
        Quaternion::pure([self.x, self.y, self.z])
    }
}

impl Neg for PureUnit {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

/// Exponential of a pure quaternion: `e^{u phi} = cos(phi) + u sin(phi)`.
///
/// Always a unit quaternion; `exp_pure(u, pi)` gives `-1` for every axis.
pub fn exp_pure(axis: PureUnit, phi: f64) -> Quaternion {
    let (s, c) = phi.sin_cos();
    let [x, y, z] = axis.components();
    Quaternion::new(c, x * s, y * s, z * s)
}

/// Rotates the 3-vector `v` by the unit quaternion `q` via `q v q~`.
///
/// For `q = exp_pure(u, phi)` this turns the plane orthogonal to `u`
/// through the angle `2 phi` and fixes the axis `u`. Rejects `q` whose
/// norm is off unity by more than 1e-9.
pub fn rotate3(q: &Quaternion, v: [f64; 3]) -> Result<[f64; 3], QuaternionError> {
    if !q.is_unit() {
        return Err(QuaternionError::NotUnit(q.norm()));
    }
    let r = *q * Quaternion::pure(v) * q.conj();
    Ok([r.x, r.y, r.z])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn assert_close(a: Quaternion, b: Quaternion, tol: f64) {
        let d = (a - b).norm();
        assert!(d <= tol, "{a:?} vs {b:?}, |diff| = {d:e}");
    }

    #[test]
    fn multiplication_table() {
        assert_eq!(Quaternion::I * Quaternion::I, -Quaternion::ONE);
        assert_eq!(Quaternion::J * Quaternion::J, -Quaternion::ONE);
        assert_eq!(Quaternion::K * Quaternion::K, -Quaternion::ONE);
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::I, -Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::K, Quaternion::I);
        assert_eq!(Quaternion::K * Quaternion::J, -Quaternion::I);
        assert_eq!(Quaternion::K * Quaternion::I, Quaternion::J);
        assert_eq!(Quaternion::I * Quaternion::K, -Quaternion::J);
    }

    #[test]
    fn product_of_one_plus_i_and_one_plus_j() {
        let a = Quaternion::ONE + Quaternion::I;
        let b = Quaternion::ONE + Quaternion::J;
        assert_eq!(a * b, Quaternion::new(1.0, 1.0, 1.0, 1.0));
    }

    #[test]
    fn inverse_of_one_plus_i_plus_j_plus_k() {
        // Oracle: q conj(q) = |q|^2 = 4 expanded by hand, so the inverse
        // must be conj(q)/4 componentwise.
        let q = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        let inv = q.inverse().unwrap();
        assert_eq!(inv, Quaternion::new(0.25, -0.25, -0.25, -0.25));
        assert_close(q * inv, Quaternion::ONE, 1e-15);
        assert_close(inv * q, Quaternion::ONE, 1e-15);
    }

    #[test]
    fn norm_and_scalar_inverse() {
        assert_eq!(Quaternion::new(1.0, 1.0, 1.0, 1.0).norm(), 2.0);
        assert_eq!(
            Quaternion::scalar(2.0).inverse().unwrap(),
            Quaternion::scalar(0.5)
        );
        // unit pure quaternion: u^{-1} = -u
        assert_eq!(Quaternion::I.inverse().unwrap(), -Quaternion::I);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(
            Quaternion::ZERO.inverse(),
            Err(QuaternionError::ZeroInverse)
        );
    }

    #[test]
    fn exp_pure_special_values() {
        assert_close(exp_pure(PureUnit::K, PI), -Quaternion::ONE, 1e-15);
        assert_close(exp_pure(PureUnit::J, 0.0), Quaternion::ONE, 0.0);
        assert_close(exp_pure(PureUnit::I, FRAC_PI_2), Quaternion::I, 1e-15);
    }

    #[test]
    fn axis_squares_to_minus_one() {
        let u = PureUnit::from_vector([1.0, 1.0, 0.0]).unwrap();
        let uq = u.as_quaternion();
        assert_close(uq * uq, -Quaternion::ONE, 1e-15);
        assert_close(uq.inverse().unwrap(), -uq, 1e-15);
    }

    #[test]
    fn rotate_i_about_k_quarter_turn() {
        // Oracle: the explicit product chain q * i * conj(q).
        let q = exp_pure(PureUnit::K, FRAC_PI_4);
        let by_chain = q * Quaternion::I * q.conj();
        let rotated = rotate3(&q, [1.0, 0.0, 0.0]).unwrap();
        assert_close(Quaternion::pure(rotated), by_chain, 1e-15);
        assert_close(Quaternion::pure(rotated), Quaternion::J, 1e-15);
    }

    #[test]
    fn rotate_identity_and_fixed_axis() {
        let v = [0.3, -0.4, 0.5];
        assert_eq!(rotate3(&Quaternion::ONE, v).unwrap(), v);
        let q = exp_pure(PureUnit::K, FRAC_PI_4);
        let axis = rotate3(&q, [0.0, 0.0, 1.0]).unwrap();
        assert_close(Quaternion::pure(axis), Quaternion::K, 1e-15);
    }

    #[test]
    fn rotate_rejects_non_unit() {
        let q = Quaternion::new(1.0, 1.0, 0.0, 0.0);
        assert!(matches!(
            rotate3(&q, [1.0, 0.0, 0.0]),
            Err(QuaternionError::NotUnit(_))
        ));
    }

    #[test]
    fn pure_unit_rejects_far_from_unit() {
        assert!(PureUnit::new(1.0, 1.0, 0.0).is_err());
        assert!(PureUnit::new(0.0, 1.0 + 1e-6, 0.0).is_err());
        assert!(PureUnit::new(0.0, 1.0 + 1e-12, 0.0).is_ok());
        assert!(PureUnit::from_vector([0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn scalar_vector_split_reassembles() {
        let q = Quaternion::new(1.5, -2.0, 0.25, 3.0);
        let back = Quaternion::scalar(q.scalar_part()) + Quaternion::pure(q.vector_part());
        assert_eq!(back, q);
    }
}
