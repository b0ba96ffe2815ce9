use crate::angle::{angle_pi, numerator};
use crate::error::{Error, Result};
use crate::family::TransformFamily;
use crate::matrix::TransformMatrix;
use crate::params::{DwtParams, FamilyParams, ParamsPqr, Rational};

/// The Hartley kernel, `cas x = cos x + sin x`.
#[inline]
pub fn cas(x: f64) -> f64 {
    x.cos() + x.sin()
}

/// The four classic W transforms, distinguished by their (alpha, beta)
/// phase offsets at gamma = 2. Type I is the discrete Hartley transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DwtVariant {
    I,
    II,
    III,
    IV,
}

impl DwtVariant {
    pub fn family(self) -> TransformFamily {
        match self {
            DwtVariant::I => TransformFamily::Dwt1,
            DwtVariant::II => TransformFamily::Dwt2,
            DwtVariant::III => TransformFamily::Dwt3,
            DwtVariant::IV => TransformFamily::Dwt4,
        }
    }

    fn offsets(self) -> (Rational, Rational) {
        match self {
            DwtVariant::I => (Rational::ZERO, Rational::ZERO),
            DwtVariant::II => (Rational::HALF, Rational::ZERO),
            DwtVariant::III => (Rational::ZERO, Rational::HALF),
            DwtVariant::IV => (Rational::HALF, Rational::HALF),
        }
    }
}

/// Entry (k, j) of the unified W transform is
/// `sqrt(2/N) * sin(pi/4 + (k+alpha)(j+beta) gamma pi / N)`.
///
/// The full phase `pi/4 + (k+alpha)(j+beta) gamma pi / N` is a single
/// rational multiple of pi, so it is folded into one exact numerator
/// over `4 N den(alpha) den(beta)` before evaluation.
fn unified_entries(n: u64, params: &DwtParams) -> Result<Vec<f64>> {
    let size = n as usize;
    let scale = (2.0 / n as f64).sqrt();
    let a_num = i128::from(params.alpha().numerator());
    let a_den = i128::from(params.alpha().denominator());
    let b_num = i128::from(params.beta().numerator());
    let b_den = i128::from(params.beta().denominator());
    let gamma = i128::from(params.gamma());

    // pi/4 + x pi / d == (d + 4x) pi / (4d): one exact rational phase.
    let base_den = i128::from(n)
        .checked_mul(a_den)
        .and_then(|d| d.checked_mul(b_den))
        .ok_or(Error::AngleOverflow)?;
    let den = u64::try_from(base_den.checked_mul(4).ok_or(Error::AngleOverflow)?)
        .map_err(|_| Error::AngleOverflow)?;

    let mut entries = vec![0.0; size * size];
    for k in 0..size {
        let row_factor = a_den
            .checked_mul(k as i128)
            .and_then(|v| v.checked_add(a_num))
            .ok_or(Error::AngleOverflow)?;
        for j in 0..size {
            let col_factor = b_den
                .checked_mul(j as i128)
                .and_then(|v| v.checked_add(b_num))
                .ok_or(Error::AngleOverflow)?;
            let phase = numerator(&[4, row_factor, col_factor, gamma])?
                .checked_add(base_den)
                .ok_or(Error::AngleOverflow)?;
            let angle = angle_pi(phase, den)?;
            entries[k * size + j] = scale * angle.sin();
        }
    }
    Ok(entries)
}

/// Materialize the unified W transform for arbitrary rational offsets
/// and integer gamma. No orthogonality is implied for general
/// parameters; validation is a separate concern.
pub fn build_dwt_unified(n: u64, params: DwtParams) -> Result<TransformMatrix> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let entries = unified_entries(n, &params)?;
    Ok(TransformMatrix::new(
        n as usize,
        n as usize,
        entries,
        TransformFamily::DwtUnified,
        Some(FamilyParams::Dwt(params)),
        n,
    ))
}

/// One of the four classic W transforms, via the unified form at
/// gamma = 2.
pub fn build_dwt_classic(variant: DwtVariant, n: u64) -> Result<TransformMatrix> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let (alpha, beta) = variant.offsets();
    let params = DwtParams::new(alpha, beta, 2).expect("gamma = 2 is valid");
    let entries = unified_entries(n, &params)?;
    Ok(TransformMatrix::new(
        n as usize,
        n as usize,
        entries,
        variant.family(),
        Some(FamilyParams::Dwt(params)),
        n,
    ))
}

/// Generalized cas-kernel W transform: NxN with entry
/// `(1/sqrt(N)) cas((2k+1)(q j + r) p pi / N)`.
///
/// Coincides with the unified form at
/// (alpha, beta, gamma) = (1/2, r/q, 2pq).
pub fn build_dwt_cas(n: u64, params: ParamsPqr) -> Result<TransformMatrix> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let size = n as usize;
    let coeff = 1.0 / (n as f64).sqrt();
    let (p, q, r) = (params.p() as i128, params.q() as i128, params.r() as i128);
    let mut entries = vec![0.0; size * size];
    for k in 0..size {
        for j in 0..size {
            let num = numerator(&[2 * k as i128 + 1, q * j as i128 + r, p])?;
            let angle = angle_pi(num, n)?;
            entries[k * size + j] = coeff * cas(angle);
        }
    }
    Ok(TransformMatrix::new(
        size,
        size,
        entries,
        TransformFamily::GenDwtCas,
        Some(FamilyParams::Pqr(params)),
        n,
    ))
}

/// Generalized type-IV W transform: NxN with entry
/// `(1/sqrt(N)) cas((2k+1)(2q j + r) p pi / (2N))`.
///
/// For even r = 2m the kernel reduces to the cas form with (p, q, m).
pub fn build_gen_dwt4(n: u64, params: ParamsPqr) -> Result<TransformMatrix> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let size = n as usize;
    let coeff = 1.0 / (n as f64).sqrt();
    let (p, q, r) = (params.p() as i128, params.q() as i128, params.r() as i128);
    let mut entries = vec![0.0; size * size];
    for k in 0..size {
        for j in 0..size {
            let num = numerator(&[2 * k as i128 + 1, 2 * q * j as i128 + r, p])?;
            let angle = angle_pi(num, 2 * n)?;
            entries[k * size + j] = coeff * cas(angle);
        }
    }
    Ok(TransformMatrix::new(
        size,
        size,
        entries,
        TransformFamily::GenDwt4,
        Some(FamilyParams::Pqr(params)),
        n,
    ))
}
