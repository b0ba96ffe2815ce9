//! Applying transforms to vectors and square images.

use crate::error::{Error, Result};
use crate::family::TransformFamily;
use crate::kahan::{dot, NeumaierSum};
use crate::matrix::TransformMatrix;
use crate::validation::INVERSE_GATE_TOL;

/// A finite real input vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    values: Vec<f64>,
}

impl Signal {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSignal("empty"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidSignal("non-finite value"));
        }
        Ok(Signal { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest magnitude entry.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Euclidean norm, compensated.
    pub fn norm(&self) -> f64 {
        dot(&self.values, &self.values).sqrt()
    }
}

/// Transform-domain coefficients, tagged with the family that produced
/// them.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    values: Vec<f64>,
    family: TransformFamily,
    n_param: u64,
}

impl CoefficientVector {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn family(&self) -> TransformFamily {
        self.family
    }

    pub fn n_param(&self) -> u64 {
        self.n_param
    }

    /// Euclidean norm, compensated.
    pub fn norm(&self) -> f64 {
        dot(&self.values, &self.values).sqrt()
    }
}

/// Matrix-vector product over raw row-major entries, optionally with
/// the transposed matrix. Each output entry is a compensated inner
/// product.
pub fn apply_entries(
    rows: usize,
    cols: usize,
    entries: &[f64],
    x: &[f64],
    transpose: bool,
) -> Result<Vec<f64>> {
    assert_eq!(entries.len(), rows * cols);
    let (in_len, out_len) = if transpose { (rows, cols) } else { (cols, rows) };
    if x.len() != in_len {
        return Err(Error::ShapeMismatch { expected: in_len, actual: x.len() });
    }
    let mut out = vec![0.0; out_len];
    if transpose {
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = NeumaierSum::new();
            for k in 0..rows {
                acc.add(entries[k * cols + i] * x[k]);
            }
            *slot = acc.value();
        }
    } else {
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = dot(&entries[i * cols..(i + 1) * cols], x);
        }
    }
    Ok(out)
}

/// Forward transform: `m * x`.
pub fn forward(m: &TransformMatrix, x: &Signal) -> Result<CoefficientVector> {
    let values = apply_entries(m.rows(), m.cols(), m.entries(), x.values(), false)?;
    Ok(CoefficientVector {
        values,
        family: m.family(),
        n_param: m.n_param(),
    })
}

/// Inverse transform: `m^T * c`, valid because every transform here is
/// inverted by its transpose.
///
/// The matrix must measure orthogonal at the gate tolerance; the first
/// call runs the Gram measurement and caches it on the matrix. A matrix
/// that fails the gate yields [`Error::NotOrthogonal`] carrying the
/// measured deviation. Use [`roundtrip_error`] to study such matrices
/// anyway.
pub fn inverse(m: &TransformMatrix, c: &CoefficientVector) -> Result<Signal> {
    if c.len() != m.rows() {
        return Err(Error::ShapeMismatch { expected: m.rows(), actual: c.len() });
    }
    let deviation = m.gram_deviation();
    if deviation > INVERSE_GATE_TOL {
        return Err(Error::NotOrthogonal { deviation });
    }
    let values = apply_entries(m.rows(), m.cols(), m.entries(), c.values(), true)?;
    Signal::new(values)
}

/// Largest entrywise error of the transpose round trip,
/// `max |x - m^T (m x)|`. Diagnostic: no orthogonality gate.
pub fn roundtrip_error(m: &TransformMatrix, x: &Signal) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let fwd = apply_entries(m.rows(), m.cols(), m.entries(), x.values(), false)?;
    let back = apply_entries(m.rows(), m.cols(), m.entries(), &fwd, true)?;
    Ok(x.values()
        .iter()
        .zip(&back)
        .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs())))
}

/// Separable two-dimensional transform of a square image:
/// `m * img * m^T`. The image is row-major with side `m.cols()`.
pub fn forward_2d(m: &TransformMatrix, img: &[f64]) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.cols();
    if img.len() != n * n {
        return Err(Error::ShapeMismatch { expected: n * n, actual: img.len() });
    }
    // rows of tmp = m * img
    let mut tmp = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = NeumaierSum::new();
            for k in 0..n {
                acc.add(m.get(i, k) * img[k * n + j]);
            }
            tmp[i * n + j] = acc.value();
        }
    }
    // out = tmp * m^T: out[i][j] = sum_k tmp[i][k] * m[j][k]
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = dot(&tmp[i * n..(i + 1) * n], m.row(j));
        }
    }
    Ok(out)
}
