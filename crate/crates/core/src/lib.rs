//! Dense builders for families of discrete trigonometric transforms,
//! orthogonality validation, and signal application.
//!
//! The crate materializes each transform as an explicit real matrix:
//! the four classic even-type cosine transforms, a three-parameter
//! generalized cosine family (types II/III/IV) that is orthogonal when
//! `gcd(pq, N) = 1` and `gcd(pr, 2) = 1`, odd-length cosine / sine /
//! sine-cosine transforms, and the unified W (cas-kernel) transform
//! with its classic, generalized-cas and generalized type-IV forms,
//! orthogonal when `gcd(pq, N) = 1`.
//!
//! Everything is naive O(N^2) dense evaluation by design: matrices at
//! desk scale are small enough that explicit storage keeps validation
//! (`G^T G` against the identity) and inversion (transpose action)
//! trivial. No fast factorizations are provided.
//!
//! ```
//! use dtt_core::{build_dwt_cas, gram_report, ParamsPqr};
//!
//! let m = build_dwt_cas(8, ParamsPqr::new(1, 1, 1).unwrap()).unwrap();
//! let report = gram_report(&m).unwrap();
//! assert!(report.orthogonal_at(1e-10));
//! ```

mod angle;
mod builders;
mod error;
mod family;
pub mod kahan;
pub mod lcg;
mod matrix;
mod params;
pub mod signal;
pub mod validation;

pub use builders::{
    build, build_classic_dct, build_dwt_cas, build_dwt_classic, build_dwt_unified, build_gen_dct,
    build_gen_dwt4, build_new_dct, build_new_dst, build_new_sct, cas, DctVariant, DwtVariant,
    GenDctVariant,
};
pub use error::{Error, Result};
pub use family::{TransformFamily, UnknownFamily};
pub use matrix::TransformMatrix;
pub use params::{gcd, DwtParams, FamilyParams, ParamsPqr, ParseRationalError, Rational};
pub use signal::{
    apply_entries, forward, forward_2d, inverse, roundtrip_error, CoefficientVector, Signal,
};
pub use validation::{
    check_conditions, default_tolerance, gram_report, sweep, sweep_unified_probe, ConditionReport,
    GramReport, SweepOutcome, SweepReport, SweepRow, INVERSE_GATE_TOL,
};
