use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Greatest common divisor on exact integers (Euclid).
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// An exact rational number, stored in lowest terms with a positive
/// denominator. Keeps transform parameters out of floating point so
/// equal parameters compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational {
    num: i64,
    den: u64,
}

impl Rational {
    pub fn new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroParam("denominator"));
        }
        let g = gcd(num.unsigned_abs(), den);
        Ok(Rational {
            num: num / g as i64,
            den: den / g,
        })
    }

    /// Exact integer value.
    pub fn integer(value: i64) -> Self {
        Rational { num: value, den: 1 }
    }

    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const HALF: Rational = Rational { num: 1, den: 2 };

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Error produced when parsing a rational literal such as `1/2` or `-3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal: {:?} (expected \"num\" or \"num/den\")", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        match s.split_once('/') {
            None => {
                let num: i64 = s.trim().parse().map_err(|_| bad())?;
                Ok(Rational::integer(num))
            }
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                let den: u64 = den.trim().parse().map_err(|_| bad())?;
                Rational::new(num, den).map_err(|_| bad())
            }
        }
    }
}

/// The positive-integer triple (p, q, r) taken by the generalized
/// cosine and W families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamsPqr {
    p: u64,
    q: u64,
    r: u64,
}

impl ParamsPqr {
    pub fn new(p: u64, q: u64, r: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::ZeroParam("p"));
        }
        if q == 0 {
            return Err(Error::ZeroParam("q"));
        }
        if r == 0 {
            return Err(Error::ZeroParam("r"));
        }
        Ok(ParamsPqr { p, q, r })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn r(&self) -> u64 {
        self.r
    }
}

impl fmt::Display for ParamsPqr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} q={} r={}", self.p, self.q, self.r)
    }
}

/// The (alpha, beta, gamma) triple of the unified W transform, with the
/// two phase offsets kept as exact rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DwtParams {
    alpha: Rational,
    beta: Rational,
    gamma: u64,
}

impl DwtParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: u64) -> Result<Self> {
        if gamma == 0 {
            return Err(Error::ZeroParam("gamma"));
        }
        Ok(DwtParams { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> Rational {
        self.alpha
    }

    pub fn beta(&self) -> Rational {
        self.beta
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }
}

impl fmt::Display for DwtParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} beta={} gamma={}", self.alpha, self.beta, self.gamma)
    }
}

/// Parameters attached to a materialized matrix, when its family takes any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyParams {
    Pqr(ParamsPqr),
    Dwt(DwtParams),
}

impl FamilyParams {
    pub fn as_pqr(&self) -> Option<&ParamsPqr> {
        match self {
            FamilyParams::Pqr(p) => Some(p),
            FamilyParams::Dwt(_) => None,
        }
    }

    pub fn as_dwt(&self) -> Option<&DwtParams> {
        match self {
            FamilyParams::Dwt(d) => Some(d),
            FamilyParams::Pqr(_) => None,
        }
    }
}
