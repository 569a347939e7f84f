use crate::FieldError;

/// Extents and per-axis sample spacing of a periodic grid, 1 to 3 axes.
///
/// Axis order is row-major: the last axis varies fastest in sample
/// storage. Axis `m` is associated with the quaternionic unit `i`, `j`,
/// `k` for `m = 0, 1, 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridShape {
    dims: Vec<usize>,
    spacing: Vec<f64>,
}

impl GridShape {
    /// Grid with unit spacing on every axis. Extents must each be at
    /// least 2 and there must be 1 to 3 of them.
    pub fn new(dims: &[usize]) -> Result<Self, FieldError> {
        Self::with_spacing(dims, &vec![1.0; dims.len()])
    }

    pub fn with_spacing(dims: &[usize], spacing: &[f64]) -> Result<Self, FieldError> {
        if dims.is_empty() || dims.len() > 3 {
            return Err(FieldError::BadShape(format!(
                "{} axes, supported range is 1 to 3",
                dims.len()
            )));
        }
        if let Some(n) = dims.iter().find(|&&n| n < 2) {
            return Err(FieldError::BadShape(format!("extent {n} below minimum 2")));
        }
        if spacing.len() != dims.len() {
            return Err(FieldError::BadShape(format!(
                "{} spacings for {} axes",
                spacing.len(),
                dims.len()
            )));
        }
        if let Some(h) = spacing.iter().find(|&&h| !(h > 0.0) || !h.is_finite()) {
            return Err(FieldError::BadShape(format!("spacing {h} not positive")));
        }
        Ok(Self {
            dims: dims.to_vec(),
            spacing: spacing.to_vec(),
        })
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn spacing(&self) -> &[f64] {
        &self.spacing
    }

    /// Total number of grid points.
    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false // extents are at least 2
    }

    /// Volume of one grid cell, the Riemann-sum weight of the inner
    /// product.
    pub fn cell_volume(&self) -> f64 {
        self.spacing.iter().product()
    }

    /// Extents padded with trailing 1s to three axes.
    pub fn dims3(&self) -> [usize; 3] {
        let mut d = [1usize; 3];
        d[..self.dims.len()].copy_from_slice(&self.dims);
        d
    }

    /// Row-major coordinates of a linear sample index (padded to 3).
    pub fn coords_of(&self, idx: usize) -> [usize; 3] {
        let [_, n1, n2] = self.dims3();
        let i2 = idx % n2;
        let rest = idx / n2;
        [rest / n1, rest % n1, i2]
    }

    /// Linear index of row-major coordinates (padded to 3).
    pub fn index_of(&self, c: [usize; 3]) -> usize {
        let [_, n1, n2] = self.dims3();
        (c[0] * n1 + c[1]) * n2 + c[2]
    }
}
