//! Exact evaluation of kernel angles of the form `num * pi / den`.
//!
//! Every kernel angle in this crate is a rational multiple of pi. The
//! numerator is assembled in checked integer arithmetic and reduced
//! modulo the period (2 * den) before conversion to floating point, so
//! the argument handed to libm is always in [0, 2*pi) and carries only
//! conversion-level rounding, independent of how large k, n and the
//! family parameters are.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Largest integer magnitude a numerator may reach. Beyond this the
/// integer is no longer exactly representable as an f64 and the builder
/// rejects the parameter combination.
pub const MAX_EXACT_NUMERATOR: u128 = 1 << 53;

/// Angle `num * pi / den`, reduced modulo 2*pi exactly before the
/// float conversion. `den` must be positive.
pub fn angle_pi(num: i128, den: u64) -> Result<f64> {
    debug_assert!(den > 0);
    if num.unsigned_abs() > MAX_EXACT_NUMERATOR || u128::from(den) > MAX_EXACT_NUMERATOR {
        return Err(Error::AngleOverflow);
    }
    let modulus = 2 * i128::from(den);
    let reduced = num.rem_euclid(modulus);
    Ok(reduced as f64 * PI / den as f64)
}

/// Checked product of angle-numerator factors.
pub fn numerator(factors: &[i128]) -> Result<i128> {
    let mut acc: i128 = 1;
    for &f in factors {
        acc = acc.checked_mul(f).ok_or(Error::AngleOverflow)?;
    }
    Ok(acc)
}
