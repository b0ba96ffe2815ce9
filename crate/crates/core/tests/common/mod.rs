//! Brute-force reference computations, deliberately independent of the
//! library's compensated paths: plain triple-loop products with naive
//! summation.

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use dtt_core::TransformMatrix;

/// Entry (i, j) of `G^T G` by direct column inner product.
pub fn naive_gram_entry(m: &TransformMatrix, i: usize, j: usize) -> f64 {
    let mut sum = 0.0;
    for k in 0..m.rows() {
        sum += m.get(k, i) * m.get(k, j);
    }
    sum
}

/// Largest entrywise deviation of `G^T G` from the identity, measured
/// the slow and obvious way.
pub fn naive_gram_dev(m: &TransformMatrix) -> f64 {
    assert_eq!(m.rows(), m.cols(), "gram oracle needs a square matrix");
    let n = m.cols();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((naive_gram_entry(m, i, j) - expected).abs());
        }
    }
    worst
}

/// Max entrywise difference between two matrices of equal shape.
pub fn max_entry_diff(a: &TransformMatrix, b: &TransformMatrix) -> f64 {
    assert_eq!(a.rows(), b.rows());
    assert_eq!(a.cols(), b.cols());
    a.entries()
        .iter()
        .zip(b.entries())
        .fold(0.0f64, |acc, (x, y)| acc.max((x - y).abs()))
}

/// Naive matrix-vector product, plain summation.
pub fn naive_mat_vec(m: &TransformMatrix, x: &[f64]) -> Vec<f64> {
    assert_eq!(x.len(), m.cols());
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j) * x[j]).sum())
        .collect()
}
