use std::f64::consts::FRAC_1_SQRT_2;

use crate::angle::{angle_pi, numerator};
use crate::error::{Error, Result};
use crate::family::TransformFamily;
use crate::matrix::TransformMatrix;

/// The four classic even-type cosine transforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DctVariant {
    I,
    II,
    III,
    IV,
}

impl DctVariant {
    pub fn family(self) -> TransformFamily {
        match self {
            DctVariant::I => TransformFamily::Dct1,
            DctVariant::II => TransformFamily::Dct2,
            DctVariant::III => TransformFamily::Dct3,
            DctVariant::IV => TransformFamily::Dct4,
        }
    }
}

/// Materialize one of the four classic cosine transforms of parameter N.
///
/// Type I is (N+1)x(N+1) with kernel `cos(k n pi / N)` and half weights
/// at both boundary indices; types II/III are NxN with the half-sample
/// kernel on one side and the `sqrt(1/N)`-vs-`sqrt(2/N)` column/row
/// normalization; type IV is NxN with half samples on both sides and
/// denominator 4N, which is the reading under which the matrix is
/// orthogonal for every N.
pub fn build_classic_dct(variant: DctVariant, n: u64) -> Result<TransformMatrix> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let nf = n as f64;
    let family = variant.family();
    match variant {
        DctVariant::I => {
            let size = (n + 1) as usize;
            let scale = (2.0 / nf).sqrt();
            let mut entries = vec![0.0; size * size];
            for k in 0..size {
                for j in 0..size {
                    let ends = (k == 0 || k == size - 1) as u32 + (j == 0 || j == size - 1) as u32;
                    let weight = boundary_weight(ends);
                    let angle = angle_pi(numerator(&[k as i128, j as i128])?, n)?;
                    entries[k * size + j] = scale * weight * angle.cos();
                }
            }
            Ok(TransformMatrix::new(size, size, entries, family, None, n))
        }
        DctVariant::II => {
            let size = n as usize;
            let a0 = (1.0 / nf).sqrt();
            let a = (2.0 / nf).sqrt();
            let mut entries = vec![0.0; size * size];
            for k in 0..size {
                for j in 0..size {
                    let num = numerator(&[2 * k as i128 + 1, j as i128])?;
                    let angle = angle_pi(num, 2 * n)?;
                    let coeff = if j == 0 { a0 } else { a };
                    entries[k * size + j] = coeff * angle.cos();
                }
            }
            Ok(TransformMatrix::new(size, size, entries, family, None, n))
        }
        DctVariant::III => {
            let size = n as usize;
            let a0 = (1.0 / nf).sqrt();
            let a = (2.0 / nf).sqrt();
            let mut entries = vec![0.0; size * size];
            for k in 0..size {
                let coeff = if k == 0 { a0 } else { a };
                for j in 0..size {
                    let num = numerator(&[k as i128, 2 * j as i128 + 1])?;
                    let angle = angle_pi(num, 2 * n)?;
                    entries[k * size + j] = coeff * angle.cos();
                }
            }
            Ok(TransformMatrix::new(size, size, entries, family, None, n))
        }
        DctVariant::IV => {
            let size = n as usize;
            let scale = (2.0 / nf).sqrt();
            let mut entries = vec![0.0; size * size];
            for k in 0..size {
                for j in 0..size {
                    let num = numerator(&[2 * k as i128 + 1, 2 * j as i128 + 1])?;
                    let angle = angle_pi(num, 4 * n)?;
                    entries[k * size + j] = scale * angle.cos();
                }
            }
            Ok(TransformMatrix::new(size, size, entries, family, None, n))
        }
    }
}

/// Combined boundary weight for the given number of half-weighted
/// indices. Multiplying the two 1/sqrt(2) factors symbolically keeps
/// the corner coefficient exact.
pub(crate) fn boundary_weight(ends: u32) -> f64 {
    match ends {
        0 => 1.0,
        1 => FRAC_1_SQRT_2,
        _ => 0.5,
    }
}
