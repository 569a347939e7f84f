use num_complex::Complex64;
use quaternion_core::{Biquaternion, Quaternion};

use crate::{FieldError, GridShape};

/// Which side a non-commuting factor is applied on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Dense biquaternion samples over a periodic grid, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    shape: GridShape,
    samples: Vec<Biquaternion>,
}

/// Kahan-compensated complex accumulator; keeps long reductions accurate
/// to a few ulp independent of the sample count.
#[derive(Default)]
struct KahanSum {
    sum: Complex64,
    carry: Complex64,
}

impl KahanSum {
    fn add(&mut self, term: Complex64) {
        let y = term - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(&self) -> Complex64 {
        self.sum
    }
}

impl Field {
    pub fn new(shape: GridShape, samples: Vec<Biquaternion>) -> Result<Self, FieldError> {
        if samples.len() != shape.len() {
            return Err(FieldError::BadSampleCount {
                expected: shape.len(),
                actual: samples.len(),
            });
        }
        Ok(Self { shape, samples })
    }

    pub fn zeros(shape: GridShape) -> Self {
        let n = shape.len();
        Self {
            shape,
            samples: vec![Biquaternion::ZERO; n],
        }
    }

    pub fn constant(shape: GridShape, value: Biquaternion) -> Self {
        let n = shape.len();
        Self {
            shape,
            samples: vec![value; n],
        }
    }

    /// Builds a field by evaluating `f` at every grid point, row-major.
    /// Coordinates arrive padded to three axes.
    pub fn from_fn(shape: GridShape, mut f: impl FnMut([usize; 3]) -> Biquaternion) -> Self {
        let [n0, n1, n2] = shape.dims3();
        let mut samples = Vec::with_capacity(shape.len());
        for i0 in 0..n0 {
            for i1 in 0..n1 {
                for i2 in 0..n2 {
                    samples.push(f([i0, i1, i2]));
                }
            }
        }
        Self { shape, samples }
    }

    pub fn shape(&self) -> &GridShape {
        &self.shape
    }

    pub fn samples(&self) -> &[Biquaternion] {
        &self.samples
    }

    /// Hilbert-space inner product `<f, g>`, conjugate-linear in `self`.
    pub fn inner(&self, g: &Field) -> Result<Complex64, FieldError> {
        if self.shape != g.shape {
            return Err(FieldError::ShapeMismatch);
        }
        let mut acc = KahanSum::default();
        for (a, b) in self.samples.iter().zip(&g.samples) {
            for m in 0..4 {
                acc.add(a.coeffs[m].conj() * b.coeffs[m]);
            }
        }
        Ok(acc.value() * self.shape.cell_volume())
    }

    /// L2 norm `sqrt(<f, f>)`.
    pub fn norm_l2(&self) -> f64 {
        let mut acc = 0.0f64;
        let mut carry = 0.0f64;
        for s in &self.samples {
            let y = s.magnitude_sqr() - carry;
            let t = acc + y;
            carry = (t - acc) - y;
            acc = t;
        }
        (acc * self.shape.cell_volume()).sqrt()
    }

    /// Largest sample magnitude.
    pub fn norm_inf(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.magnitude())
            .fold(0.0, f64::max)
    }

    pub fn add(&self, g: &Field) -> Result<Field, FieldError> {
        self.zip(g, |a, b| a + b)
    }

    pub fn sub(&self, g: &Field) -> Result<Field, FieldError> {
        self.zip(g, |a, b| a - b)
    }

    fn zip(
        &self,
        g: &Field,
        op: impl Fn(Biquaternion, Biquaternion) -> Biquaternion,
    ) -> Result<Field, FieldError> {
        if self.shape != g.shape {
            return Err(FieldError::ShapeMismatch);
        }
        let samples = self
            .samples
            .iter()
            .zip(&g.samples)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Ok(Field {
            shape: self.shape.clone(),
            samples,
        })
    }

    pub fn map(&self, op: impl Fn(Biquaternion) -> Biquaternion) -> Field {
        Field {
            shape: self.shape.clone(),
            samples: self.samples.iter().map(|&s| op(s)).collect(),
        }
    }

    /// Pointwise multiplication by a constant biquaternion on the chosen
    /// side. Complex scalars are central, so for them the side is
    /// immaterial.
    pub fn scale(&self, factor: Biquaternion, side: Side) -> Field {
        match side {
            Side::Left => self.map(|s| factor * s),
            Side::Right => self.map(|s| s * factor),
        }
    }

    /// Central complex scaling.
    pub fn scale_complex(&self, c: Complex64) -> Field {
        self.map(|s| s * c)
    }

    /// Pointwise right multiplication by a real quaternion.
    pub fn right_mul(&self, q: &Quaternion) -> Field {
        self.map(|s| s.right_mul(q))
    }

    /// Cyclic translation: `shift(f, t)(x) = f(x - t)`, offsets taken
    /// modulo the extents. Exactly inverted by the negated offsets.
    pub fn shift(&self, offsets: &[i64]) -> Result<Field, FieldError> {
        if offsets.len() != self.shape.rank() {
            return Err(FieldError::BadRank {
                expected: self.shape.rank(),
                actual: offsets.len(),
            });
        }
        let mut t = [0i64; 3];
        t[..offsets.len()].copy_from_slice(offsets);
        let dims = self.shape.dims3();
        let out = Field::from_fn(self.shape.clone(), |c| {
            let src = [
                (c[0] as i64 - t[0]).rem_euclid(dims[0] as i64) as usize,
                (c[1] as i64 - t[1]).rem_euclid(dims[1] as i64) as usize,
                (c[2] as i64 - t[2]).rem_euclid(dims[2] as i64) as usize,
            ];
            self.samples[self.shape.index_of(src)]
        });
        Ok(out)
    }

    /// Arithmetic mean of the samples, per coefficient.
    pub fn mean(&self) -> Biquaternion {
        let mut acc = KahanSum::default();
        let mut out = Biquaternion::ZERO;
        for m in 0..4 {
            acc = KahanSum::default();
            for s in &self.samples {
                acc.add(s.coeffs[m]);
            }
            out.coeffs[m] = acc.value() / self.samples.len() as f64;
        }
        let _ = acc;
        out
    }

    /// Subtracts the per-coefficient mean; idempotent, removes the DC
    /// spectral bin.
    pub fn zero_mean(&self) -> Field {
        let m = self.mean();
        self.map(|s| s - m)
    }

    /// True when every sample is exactly a real scalar (zero vector part
    /// and zero imaginary parts).
    pub fn is_real_scalar(&self) -> bool {
        self.samples.iter().all(|s| s.real_scalar_defect() == 0.0)
    }

    /// Largest per-sample deviation from real-scalar form.
    pub fn real_scalar_defect(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.real_scalar_defect())
            .fold(0.0, f64::max)
    }

    /// Real parts of the scalar coefficient, one per sample.
    pub fn scalar_re(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.coeffs[0].re).collect()
    }
}
