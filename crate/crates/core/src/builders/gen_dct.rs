use crate::angle::{angle_pi, numerator};
use crate::error::{Error, Result};
use crate::family::TransformFamily;
use crate::matrix::TransformMatrix;
use crate::params::{FamilyParams, ParamsPqr};

/// Variants of the three-parameter generalized cosine family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenDctVariant {
    II,
    III,
    IV,
}

impl GenDctVariant {
    pub fn family(self) -> TransformFamily {
        match self {
            GenDctVariant::II => TransformFamily::GenDct2,
            GenDctVariant::III => TransformFamily::GenDct3,
            GenDctVariant::IV => TransformFamily::GenDct4,
        }
    }
}

/// Materialize a generalized cosine transform with parameters (p, q, r).
///
/// Variant III has kernel `cos(k (4qn + r) p pi / (2N))` with first-row
/// coefficient `sqrt(1/N)` and `sqrt(2/N)` elsewhere; variant II is its
/// exact transpose; variant IV has kernel
/// `cos((2k+1) (4qn + r) p pi / (4N))` with constant `sqrt(2/N)` scaling.
///
/// Parameter combinations that violate the orthogonality conditions are
/// still materialized; condition checking is a separate concern.
pub fn build_gen_dct(variant: GenDctVariant, n: u64, params: ParamsPqr) -> Result<TransformMatrix> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let size = n as usize;
    let nf = n as f64;
    let (p, q, r) = (params.p() as i128, params.q() as i128, params.r() as i128);
    let meta = Some(FamilyParams::Pqr(params));
    match variant {
        GenDctVariant::III => {
            let a0 = (1.0 / nf).sqrt();
            let a = (2.0 / nf).sqrt();
            let mut entries = vec![0.0; size * size];
            for k in 0..size {
                let coeff = if k == 0 { a0 } else { a };
                for j in 0..size {
                    let num = numerator(&[k as i128, 4 * q * j as i128 + r, p])?;
                    let angle = angle_pi(num, 2 * n)?;
                    entries[k * size + j] = coeff * angle.cos();
                }
            }
            Ok(TransformMatrix::new(size, size, entries, variant.family(), meta, n))
        }
        GenDctVariant::II => {
            let third = build_gen_dct(GenDctVariant::III, n, params)?;
            let entries = third.transposed_entries();
            Ok(TransformMatrix::new(size, size, entries, variant.family(), meta, n))
        }
        GenDctVariant::IV => {
            let scale = (2.0 / nf).sqrt();
            let mut entries = vec![0.0; size * size];
            for k in 0..size {
                for j in 0..size {
                    let num = numerator(&[2 * k as i128 + 1, 4 * q * j as i128 + r, p])?;
                    let angle = angle_pi(num, 4 * n)?;
                    entries[k * size + j] = scale * angle.cos();
                }
            }
            Ok(TransformMatrix::new(size, size, entries, variant.family(), meta, n))
        }
    }
}
