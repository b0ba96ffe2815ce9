use crate::angle::{angle_pi, numerator};
use crate::builders::classic_dct::boundary_weight;
use crate::error::{Error, Result};
use crate::family::TransformFamily;
use crate::matrix::TransformMatrix;

/// Odd-length cosine transform: NxN with kernel
/// `cos((2k+1)(2n+1) pi / (2N-1))`, global scale `sqrt(4/(2N-1))` and
/// half weights at index N-1 on both axes. The last row and column are
/// constant multiples of -1/sqrt(2) (corner -1/2) because the kernel
/// angle there is an odd multiple of pi.
pub fn build_new_dct(n: u64) -> Result<TransformMatrix> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let size = n as usize;
    let den = 2 * n - 1;
    let scale = (4.0 / den as f64).sqrt();
    let mut entries = vec![0.0; size * size];
    for k in 0..size {
        for j in 0..size {
            let ends = (k == size - 1) as u32 + (j == size - 1) as u32;
            let weight = boundary_weight(ends);
            let num = numerator(&[2 * k as i128 + 1, 2 * j as i128 + 1])?;
            let angle = angle_pi(num, den)?;
            entries[k * size + j] = scale * weight * angle.cos();
        }
    }
    Ok(TransformMatrix::new(size, size, entries, TransformFamily::NewDct, None, n))
}

/// Odd-length sine transform: NxN with kernel
/// `sin((2k+1)(2n+1) pi / (2N+1))` and scale `sqrt(4/(2N+1))`.
pub fn build_new_dst(n: u64) -> Result<TransformMatrix> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let size = n as usize;
    let den = 2 * n + 1;
    let scale = (4.0 / den as f64).sqrt();
    let mut entries = vec![0.0; size * size];
    for k in 0..size {
        for j in 0..size {
            let num = numerator(&[2 * k as i128 + 1, 2 * j as i128 + 1])?;
            let angle = angle_pi(num, den)?;
            entries[k * size + j] = scale * angle.sin();
        }
    }
    Ok(TransformMatrix::new(size, size, entries, TransformFamily::NewDst, None, n))
}

/// Mixed sine-cosine transform of size (2N+1)x(2N+1): N cosine rows,
/// one constant row `-sqrt(1/(2N+1))`, then N sine rows, all over the
/// kernel angle `(2k+1)(2n+1) pi / (2N+1)`.
pub fn build_new_sct(n: u64) -> Result<TransformMatrix> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let half = n as usize;
    let size = 2 * half + 1;
    let den = 2 * n + 1;
    let scale = (2.0 / den as f64).sqrt();
    let constant = -(1.0 / den as f64).sqrt();
    let mut entries = vec![0.0; size * size];
    for j in 0..size {
        entries[half * size + j] = constant;
    }
    for k in 0..half {
        for j in 0..size {
            let num = numerator(&[2 * k as i128 + 1, 2 * j as i128 + 1])?;
            let angle = angle_pi(num, den)?;
            entries[k * size + j] = scale * angle.cos();
            entries[(half + 1 + k) * size + j] = scale * angle.sin();
        }
    }
    Ok(TransformMatrix::new(size, size, entries, TransformFamily::NewSct, None, n))
}
