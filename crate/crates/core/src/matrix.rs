use std::sync::OnceLock;

use crate::family::TransformFamily;
use crate::params::FamilyParams;

/// A dense, row-major transform matrix together with the family and
/// parameters it was built from.
///
/// Matrices are immutable after construction and safe to share between
/// threads. `n_param` is the family's size parameter, which is the row
/// count for most families but not all: the type-I cosine transform of
/// parameter N is (N+1)x(N+1) and the sine-cosine transform is
/// (2N+1)x(2N+1).
#[derive(Debug, Clone)]
pub struct TransformMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
    family: TransformFamily,
    params: Option<FamilyParams>,
    n_param: u64,
    gram_dev: OnceLock<f64>,
}

impl TransformMatrix {
    pub(crate) fn new(
        rows: usize,
        cols: usize,
        entries: Vec<f64>,
        family: TransformFamily,
        params: Option<FamilyParams>,
        n_param: u64,
    ) -> Self {
        assert_eq!(entries.len(), rows * cols);
        debug_assert!(entries.iter().all(|v| v.is_finite()));
        TransformMatrix {
            rows,
            cols,
            entries,
            family,
            params,
            n_param,
            gram_dev: OnceLock::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries, length `rows * cols`.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        debug_assert!(row < self.rows && col < self.cols);
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn family(&self) -> TransformFamily {
        self.family
    }

    pub fn params(&self) -> Option<&FamilyParams> {
        self.params.as_ref()
    }

    /// The family's size parameter (the N the matrix was built for).
    pub fn n_param(&self) -> u64 {
        self.n_param
    }

    /// Measured Gram deviation, computed once on first use and cached.
    /// This is what the inverse gate consults.
    pub fn gram_deviation(&self) -> f64 {
        *self.gram_dev.get_or_init(|| {
            crate::validation::GramReport::compute(self.rows, self.cols, &self.entries)
                .expect("transform matrices are square")
                .max_dev()
        })
    }

    /// Entries of the transpose, row-major.
    pub(crate) fn transposed_entries(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.entries.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[c * self.rows + r] = self.entries[r * self.cols + c];
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<TransformMatrix>();
    }

    #[test]
    fn gram_deviation_is_cached() {
        let m = crate::builders::build_new_dst(6).unwrap();
        let first = m.gram_deviation();
        assert_eq!(first, m.gram_deviation());
        assert!(first <= 1e-12);
    }

    #[test]
    fn transpose_swaps_indices() {
        let m = crate::builders::build_classic_dct(crate::builders::DctVariant::II, 3).unwrap();
        let t = m.transposed_entries();
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(t[c * 3 + r], m.get(r, c));
            }
        }
    }
}
