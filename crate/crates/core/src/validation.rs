//! Orthogonality measurement and the gcd orthogonality conditions.

use crate::builders;
use crate::error::{Error, Result};
use crate::family::TransformFamily;
use crate::kahan::dot;
use crate::matrix::TransformMatrix;
use crate::params::{gcd, DwtParams, FamilyParams, ParamsPqr, Rational};

/// How far the Gram product of a square matrix deviates from the
/// identity. All fields are nonnegative and finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GramReport {
    n: usize,
    max_offdiag: f64,
    max_diag_dev: f64,
    frobenius_dev: f64,
}

impl GramReport {
    /// Measure `G^T G - I` for row-major `entries` of shape
    /// `rows x cols`. The product is formed from pairwise inner
    /// products of the transpose's rows, each accumulated with
    /// compensated summation.
    pub fn compute(rows: usize, cols: usize, entries: &[f64]) -> Result<GramReport> {
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        assert_eq!(entries.len(), rows * cols);
        let n = rows;
        // Transposing first keeps the column pairs contiguous.
        let mut t = vec![0.0; n * n];
        for r in 0..n {
            for c in 0..n {
                t[c * n + r] = entries[r * n + c];
            }
        }
        let mut max_offdiag: f64 = 0.0;
        let mut max_diag_dev: f64 = 0.0;
        let mut frobenius_sq: f64 = 0.0;
        for i in 0..n {
            let row_i = &t[i * n..(i + 1) * n];
            for j in i..n {
                let row_j = &t[j * n..(j + 1) * n];
                let inner = dot(row_i, row_j);
                if i == j {
                    let dev = (inner - 1.0).abs();
                    max_diag_dev = max_diag_dev.max(dev);
                    frobenius_sq += dev * dev;
                } else {
                    let dev = inner.abs();
                    max_offdiag = max_offdiag.max(dev);
                    // The Gram product is symmetric; count both halves.
                    frobenius_sq += 2.0 * dev * dev;
                }
            }
        }
        Ok(GramReport {
            n,
            max_offdiag,
            max_diag_dev,
            frobenius_dev: frobenius_sq.sqrt(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest off-diagonal magnitude of `G^T G`.
    pub fn max_offdiag(&self) -> f64 {
        self.max_offdiag
    }

    /// Largest deviation of a diagonal entry of `G^T G` from 1.
    pub fn max_diag_dev(&self) -> f64 {
        self.max_diag_dev
    }

    /// Frobenius norm of `G^T G - I`.
    pub fn frobenius_dev(&self) -> f64 {
        self.frobenius_dev
    }

    /// Largest entrywise deviation of `G^T G` from the identity.
    pub fn max_dev(&self) -> f64 {
        self.max_offdiag.max(self.max_diag_dev)
    }

    pub fn orthogonal_at(&self, tol: f64) -> bool {
        self.max_offdiag <= tol && self.max_diag_dev <= tol
    }
}

/// Gram deviation report for a built matrix.
pub fn gram_report(m: &TransformMatrix) -> Result<GramReport> {
    GramReport::compute(m.rows(), m.cols(), m.entries())
}

/// Default orthogonality tolerance for a transform of size `n`: the
/// kernel angle error grows linearly with the integer numerator, so the
/// flat desk-scale tolerance is relaxed proportionally past n = 64.
pub fn default_tolerance(n: usize) -> f64 {
    if n <= 64 {
        1e-10
    } else {
        1e-13 * n as f64
    }
}

/// Orthogonality gate used by the inverse path.
pub const INVERSE_GATE_TOL: f64 = 1e-8;

/// Outcome of evaluating a family's orthogonality conditions at a
/// particular (N, p, q, r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    checks: Vec<(String, bool)>,
}

impl ConditionReport {
    /// True exactly when every individual check holds.
    pub fn satisfied(&self) -> bool {
        self.checks.iter().all(|(_, holds)| *holds)
    }

    /// The individual named checks, e.g. `("gcd(pq,N)=1", true)`.
    pub fn checks(&self) -> &[(String, bool)] {
        &self.checks
    }
}

/// Evaluate the orthogonality conditions for `family` at size `n`.
///
/// The generalized cosine families require `gcd(pq, N) = 1` and
/// `gcd(pr, 2) = 1`; the generalized W families require only
/// `gcd(pq, N) = 1` (r is unrestricted). Families that take no (p, q, r)
/// report trivially satisfied when called without parameters and are
/// rejected when parameters are supplied anyway.
pub fn check_conditions(
    family: TransformFamily,
    n: u64,
    params: Option<&ParamsPqr>,
) -> Result<ConditionReport> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    match (family.takes_pqr(), params) {
        (false, Some(_)) => Err(Error::NotParameterized(family)),
        (false, None) => Ok(ConditionReport { checks: Vec::new() }),
        (true, None) => Err(Error::MissingParams(family)),
        (true, Some(p)) => {
            let pq = p.p().checked_mul(p.q());
            let pr = p.p().checked_mul(p.r());
            let mut checks = Vec::new();
            checks.push((
                "gcd(pq,N)=1".to_string(),
                pq.map(|pq| gcd(pq, n) == 1).unwrap_or(false),
            ));
            if matches!(
                family,
                TransformFamily::GenDct2 | TransformFamily::GenDct3 | TransformFamily::GenDct4
            ) {
                checks.push((
                    "gcd(pr,2)=1".to_string(),
                    pr.map(|pr| gcd(pr, 2) == 1).unwrap_or(false),
                ));
            }
            Ok(ConditionReport { checks })
        }
    }
}

/// One evaluated point of a parameter sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub family: TransformFamily,
    pub n: u64,
    pub params: FamilyParams,
    pub condition_satisfied: bool,
    pub outcome: SweepOutcome,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SweepOutcome {
    /// Largest entrywise Gram deviation of the materialized matrix.
    Deviation(f64),
    /// The builder rejected this parameter combination.
    BuildError(String),
}

impl SweepRow {
    /// Deviation if the matrix was materialized.
    pub fn deviation(&self) -> Option<f64> {
        match self.outcome {
            SweepOutcome::Deviation(d) => Some(d),
            SweepOutcome::BuildError(_) => None,
        }
    }
}

/// Result of sweeping a parameterized family over a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    rows: Vec<SweepRow>,
    tol: f64,
}

impl SweepReport {
    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Rows whose conditions hold yet whose measured deviation exceeds
    /// the sweep tolerance. An orthogonality theorem predicts this is
    /// always empty.
    pub fn condition_violations(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(move |row| {
            row.condition_satisfied && row.deviation().map(|d| d > self.tol).unwrap_or(false)
        })
    }
}

/// Sweep a (p, q, r)-parameterized family over every n in `n_values`
/// and every p <= p_max, q <= q_max, r <= r_max, measuring the Gram
/// deviation of each materialized matrix. Condition-violating tuples
/// are swept too, so the empirical boundary of the orthogonality
/// theorems can be inspected. Builder rejections become per-row error
/// markers. Rows are ordered by (n, p, q, r); `n_values` is sorted and
/// deduplicated first.
pub fn sweep(
    family: TransformFamily,
    n_values: &[u64],
    p_max: u64,
    q_max: u64,
    r_max: u64,
    tol: f64,
) -> Result<SweepReport> {
    if !family.takes_pqr() {
        return Err(Error::NotParameterized(family));
    }
    if p_max == 0 || q_max == 0 || r_max == 0 {
        return Err(Error::ZeroParam("sweep bound"));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::ZeroParam("tol"));
    }
    let mut ns: Vec<u64> = n_values.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let mut rows = Vec::new();
    for &n in &ns {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        for p in 1..=p_max {
            for q in 1..=q_max {
                for r in 1..=r_max {
                    let params = ParamsPqr::new(p, q, r)?;
                    let condition = check_conditions(family, n, Some(&params))?.satisfied();
                    let outcome = match builders::build(family, n, Some(&FamilyParams::Pqr(params))) {
                        Ok(m) => SweepOutcome::Deviation(gram_report(&m)?.max_dev()),
                        Err(e) => SweepOutcome::BuildError(e.to_string()),
                    };
                    rows.push(SweepRow {
                        family,
                        n,
                        params: FamilyParams::Pqr(params),
                        condition_satisfied: condition,
                        outcome,
                    });
                }
            }
        }
    }
    Ok(SweepReport { rows, tol })
}

/// Sweep the unified W transform along the slice
/// `(alpha, beta, gamma) = (1/2, 1/q, q)` for q = 1..=q_max.
///
/// This slice sits next to the provably orthogonal
/// `(1/2, r/q, 2pq)` slice but halves gamma; no orthogonality condition
/// is claimed for it, so every row reports `condition_satisfied = false`
/// and the measured deviation is purely informational.
pub fn sweep_unified_probe(n_values: &[u64], q_max: u64, tol: f64) -> Result<SweepReport> {
    if q_max == 0 {
        return Err(Error::ZeroParam("sweep bound"));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::ZeroParam("tol"));
    }
    let mut ns: Vec<u64> = n_values.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let mut rows = Vec::new();
    for &n in &ns {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        for q in 1..=q_max {
            let params = DwtParams::new(Rational::HALF, Rational::new(1, q)?, q)?;
            let outcome = match builders::build_dwt_unified(n, params) {
                Ok(m) => SweepOutcome::Deviation(gram_report(&m)?.max_dev()),
                Err(e) => SweepOutcome::BuildError(e.to_string()),
            };
            rows.push(SweepRow {
                family: TransformFamily::DwtUnified,
                n,
                params: FamilyParams::Dwt(params),
                condition_satisfied: false,
                outcome,
            });
        }
    }
    Ok(SweepReport { rows, tol })
}
