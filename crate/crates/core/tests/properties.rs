mod common;

use common::max_entry_diff;
use dtt_core::{
    build, build_dwt_cas, build_dwt_unified, build_gen_dct, build_gen_dwt4, forward, DwtParams,
    FamilyParams, GenDctVariant, ParamsPqr, Rational, Signal, TransformFamily,
};
use proptest::prelude::*;

fn pqr_strategy() -> impl Strategy<Value = ParamsPqr> {
    (1u64..=5, 1u64..=5, 1u64..=5).prop_map(|(p, q, r)| ParamsPqr::new(p, q, r).unwrap())
}

proptest! {
    #[test]
    fn gen_dct2_is_transpose_of_gen_dct3(n in 1u64..=32, params in pqr_strategy()) {
        let ii = build_gen_dct(GenDctVariant::II, n, params).unwrap();
        let iii = build_gen_dct(GenDctVariant::III, n, params).unwrap();
        for k in 0..n as usize {
            for j in 0..n as usize {
                prop_assert_eq!(ii.get(k, j).to_bits(), iii.get(j, k).to_bits());
            }
        }
    }

    #[test]
    fn cas_form_is_unified_slice(n in 1u64..=32, params in pqr_strategy()) {
        let cas_form = build_dwt_cas(n, params).unwrap();
        let unified = build_dwt_unified(
            n,
            DwtParams::new(
                Rational::HALF,
                Rational::new(params.r() as i64, params.q()).unwrap(),
                2 * params.p() * params.q(),
            )
            .unwrap(),
        )
        .unwrap();
        prop_assert!(max_entry_diff(&cas_form, &unified) <= 1e-13);
    }

    #[test]
    fn gen_dwt4_with_even_r_degrades_to_cas_form(
        n in 1u64..=32,
        p in 1u64..=5,
        q in 1u64..=5,
        m in 1u64..=5,
    ) {
        let doubled = build_gen_dwt4(n, ParamsPqr::new(p, q, 2 * m).unwrap()).unwrap();
        let reduced = build_dwt_cas(n, ParamsPqr::new(p, q, m).unwrap()).unwrap();
        prop_assert!(max_entry_diff(&doubled, &reduced) <= 1e-14);
    }

    #[test]
    fn entries_are_finite_and_bounded(
        family_idx in 0usize..TransformFamily::ALL.len(),
        n in 1u64..=24,
        params in pqr_strategy(),
        gamma in 1u64..=6,
    ) {
        let family = TransformFamily::ALL[family_idx];
        let args = if family.takes_pqr() {
            Some(FamilyParams::Pqr(params))
        } else if family.takes_dwt_params() {
            Some(FamilyParams::Dwt(
                DwtParams::new(Rational::HALF, Rational::new(1, 3).unwrap(), gamma).unwrap(),
            ))
        } else {
            None
        };
        let m = build(family, n, args.as_ref()).unwrap();
        // Global scale is at most sqrt(2/N) for the cosine kernels and
        // sqrt(2)/sqrt(N) for the cas kernels; sqrt(2) * sqrt(2/N)
        // bounds them all. The new odd-length transforms use a smaller
        // denominator but stay under the same bound.
        let bound = std::f64::consts::SQRT_2 * (2.0f64).sqrt() + 1e-12;
        for &v in m.entries() {
            prop_assert!(v.is_finite());
            prop_assert!(v.abs() <= bound, "entry {} out of range", v);
        }
    }

    #[test]
    fn forward_is_linear(
        a in -4.0f64..4.0,
        b in -4.0f64..4.0,
        seed_x in 1u64..50,
        seed_y in 50u64..100,
    ) {
        let m = build_dwt_cas(8, ParamsPqr::new(1, 1, 1).unwrap()).unwrap();
        let x = dtt_core::lcg::test_signal(seed_x, 8);
        let y = dtt_core::lcg::test_signal(seed_y, 8);
        let combined: Vec<f64> = x
            .values()
            .iter()
            .zip(y.values())
            .map(|(xv, yv)| a * xv + b * yv)
            .collect();
        let lhs = forward(&m, &Signal::new(combined).unwrap()).unwrap();
        let fx = forward(&m, &x).unwrap();
        let fy = forward(&m, &y).unwrap();
        for i in 0..8 {
            let rhs = a * fx.values()[i] + b * fy.values()[i];
            prop_assert!((lhs.values()[i] - rhs).abs() <= 1e-12);
        }
    }

    #[test]
    fn csv_scale_bound_per_family(n in 1u64..=16, params in pqr_strategy()) {
        // |entry| <= sqrt(2) * (family scale): cas kernels reach
        // sqrt(2)/sqrt(N), cosine kernels stop at their scale.
        let m = build_dwt_cas(n, params).unwrap();
        let bound = std::f64::consts::SQRT_2 / (n as f64).sqrt() + 1e-12;
        for &v in m.entries() {
            prop_assert!(v.abs() <= bound);
        }
    }
}
