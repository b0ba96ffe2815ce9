//! Acceptance suite: the full-scale orthogonality, identity, round-trip
//! and CLI-contract checks, one test per criterion. Each prints a
//! PASS line with its measured extremes and runtime; run with
//! `cargo test -p dtt-cli --test acceptance -- --nocapture` to see them.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::Instant;

use dtt_core::lcg::test_signal;
use dtt_core::{
    build_classic_dct, build_dwt_cas, build_dwt_classic, build_dwt_unified, build_gen_dct,
    build_gen_dwt4, build_new_dct, build_new_dst, build_new_sct, forward, gcd, gram_report,
    roundtrip_error, DctVariant, DwtParams, DwtVariant, GenDctVariant, ParamsPqr, Rational,
    TransformMatrix,
};

const SUITE_TOL: f64 = 1e-10;

fn pqr(p: u64, q: u64, r: u64) -> ParamsPqr {
    ParamsPqr::new(p, q, r).unwrap()
}

/// Independent brute-force Gram oracle: plain triple loop, naive sums.
fn oracle_gram_dev(m: &TransformMatrix) -> f64 {
    let n = m.cols();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let mut sum = 0.0;
            for k in 0..n {
                sum += m.get(k, i) * m.get(k, j);
            }
            let expected = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((sum - expected).abs());
        }
    }
    worst
}

/// The generalized-cosine theorem grid: odd p, r up to 9, q up to 9,
/// gcd(pq, N) = 1.
fn gen_dct_grid(n: u64) -> Vec<ParamsPqr> {
    let mut grid = Vec::new();
    for p in [1u64, 3, 5, 7, 9] {
        for q in 1..=9u64 {
            if gcd(p * q, n) != 1 {
                continue;
            }
            for r in [1u64, 3, 5, 7, 9] {
                grid.push(pqr(p, q, r));
            }
        }
    }
    grid
}

/// The generalized-W theorem grid: p, q up to 9 with gcd(pq, N) = 1,
/// r unrestricted up to 9.
fn gen_dwt_grid(n: u64) -> Vec<ParamsPqr> {
    let mut grid = Vec::new();
    for p in 1..=9u64 {
        for q in 1..=9u64 {
            if gcd(p * q, n) != 1 {
                continue;
            }
            for r in 1..=9u64 {
                grid.push(pqr(p, q, r));
            }
        }
    }
    grid
}

#[test]
fn suite_1_generalized_dct_orthogonality() {
    let start = Instant::now();
    let mut count = 0usize;
    let mut worst = 0.0f64;
    for n in 2..=64u64 {
        for params in gen_dct_grid(n) {
            for variant in [GenDctVariant::II, GenDctVariant::III, GenDctVariant::IV] {
                let m = build_gen_dct(variant, n, params).unwrap();
                let dev = gram_report(&m).unwrap().max_dev();
                assert!(
                    dev <= SUITE_TOL,
                    "gen-dct {variant:?} n={n} {params}: deviation {dev:e}"
                );
                worst = worst.max(dev);
                count += 1;
            }
        }
    }
    println!(
        "PASS generalized-DCT suite: {count} matrices, worst deviation {worst:.2e} <= 1e-10 ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
}

#[test]
fn suite_2_generalized_dwt_orthogonality() {
    let start = Instant::now();
    let mut count = 0usize;
    let mut worst = 0.0f64;
    for n in 2..=64u64 {
        for params in gen_dwt_grid(n) {
            for m in [build_dwt_cas(n, params).unwrap(), build_gen_dwt4(n, params).unwrap()] {
                let dev = gram_report(&m).unwrap().max_dev();
                assert!(dev <= SUITE_TOL, "{} n={n} {params}: deviation {dev:e}", m.family());
                worst = worst.max(dev);
                count += 1;
            }
        }
    }
    println!(
        "PASS generalized-DWT suite: {count} matrices, worst deviation {worst:.2e} <= 1e-10 ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
}

#[test]
fn suite_3_new_transforms_orthogonality() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in 1..=64u64 {
        for m in [build_new_dct(n).unwrap(), build_new_dst(n).unwrap()] {
            let dev = gram_report(&m).unwrap().max_dev();
            assert!(dev <= SUITE_TOL, "{} n={n}: deviation {dev:e}", m.family());
            worst = worst.max(dev);
        }
    }
    for n in 1..=32u64 {
        let m = build_new_sct(n).unwrap();
        assert_eq!(m.rows(), 2 * n as usize + 1);
        let dev = gram_report(&m).unwrap().max_dev();
        assert!(dev <= SUITE_TOL, "new-sct n={n}: deviation {dev:e}");
        worst = worst.max(dev);
    }
    println!(
        "PASS new-transform suite: 160 matrices, worst deviation {worst:.2e} <= 1e-10 ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
}

#[test]
fn suite_4_classic_transforms_orthogonality_and_hartley_formula() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in 1..=64u64 {
        for variant in [DctVariant::I, DctVariant::II, DctVariant::III, DctVariant::IV] {
            let m = build_classic_dct(variant, n).unwrap();
            let dev = gram_report(&m).unwrap().max_dev();
            assert!(dev <= SUITE_TOL, "{} n={n}: deviation {dev:e}", m.family());
            worst = worst.max(dev);
        }
        for variant in [DwtVariant::I, DwtVariant::II, DwtVariant::III, DwtVariant::IV] {
            let m = build_dwt_classic(variant, n).unwrap();
            let dev = gram_report(&m).unwrap().max_dev();
            assert!(dev <= SUITE_TOL, "{} n={n}: deviation {dev:e}", m.family());
            worst = worst.max(dev);
        }
    }
    // Type-I W entries against the direct Hartley formula, with the
    // angle reduced in exact integers before evaluation.
    let mut worst_hartley = 0.0f64;
    for n in 1..=64u64 {
        let m = build_dwt_classic(DwtVariant::I, n).unwrap();
        let coeff = 1.0 / (n as f64).sqrt();
        for k in 0..m.rows() {
            for j in 0..m.cols() {
                let reduced = (2 * k as i128 * j as i128).rem_euclid(2 * n as i128);
                let angle = reduced as f64 * std::f64::consts::PI / n as f64;
                let want = coeff * (angle.cos() + angle.sin());
                let diff = (m.get(k, j) - want).abs();
                assert!(diff <= 1e-14, "hartley n={n} ({k},{j}): diff {diff:e}");
                worst_hartley = worst_hartley.max(diff);
            }
        }
    }
    println!(
        "PASS classic suite: 512 matrices <= 1e-10 (worst {worst:.2e}); hartley formula match \
         worst {worst_hartley:.2e} <= 1e-14 ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
}

#[test]
fn suite_5_classic_dwt_exclusivity_at_n8() {
    let start = Instant::now();
    let grid = [Rational::ZERO, Rational::new(1, 4).unwrap(), Rational::HALF];
    let classic = [
        (Rational::ZERO, Rational::ZERO),
        (Rational::HALF, Rational::ZERO),
        (Rational::ZERO, Rational::HALF),
        (Rational::HALF, Rational::HALF),
    ];
    let mut passing = Vec::new();
    for alpha in grid {
        for beta in grid {
            let m = build_dwt_unified(8, DwtParams::new(alpha, beta, 2).unwrap()).unwrap();
            let dev = oracle_gram_dev(&m);
            if dev <= SUITE_TOL {
                passing.push((alpha, beta));
            } else {
                assert!(
                    dev >= 1e-2,
                    "({alpha}, {beta}) is neither orthogonal nor clearly off: {dev:e}"
                );
            }
        }
    }
    assert_eq!(passing.len(), 4);
    for pair in classic {
        assert!(passing.contains(&pair), "missing classic pair ({}, {})", pair.0, pair.1);
    }
    println!(
        "PASS exclusivity grid: exactly the 4 classic offset pairs pass at n=8; all others \
         deviate >= 1e-2 ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
}

#[test]
fn suite_6_structural_identities() {
    let start = Instant::now();

    // Transpose relation, bit-exact.
    for n in 1..=32u64 {
        for p in 1..=5u64 {
            for q in 1..=5u64 {
                for r in 1..=5u64 {
                    let ii = build_gen_dct(GenDctVariant::II, n, pqr(p, q, r)).unwrap();
                    let iii = build_gen_dct(GenDctVariant::III, n, pqr(p, q, r)).unwrap();
                    for k in 0..n as usize {
                        for j in 0..n as usize {
                            assert_eq!(
                                ii.get(k, j).to_bits(),
                                iii.get(j, k).to_bits(),
                                "transpose mismatch n={n} p={p} q={q} r={r} ({k},{j})"
                            );
                        }
                    }
                }
            }
        }
    }

    // cas form == unified slice (1/2, r/q, 2pq) within 1e-13.
    let mut worst_unified = 0.0f64;
    for n in 1..=32u64 {
        for p in 1..=5u64 {
            for q in 1..=5u64 {
                for r in 1..=5u64 {
                    let cas_form = build_dwt_cas(n, pqr(p, q, r)).unwrap();
                    let unified = build_dwt_unified(
                        n,
                        DwtParams::new(
                            Rational::HALF,
                            Rational::new(r as i64, q).unwrap(),
                            2 * p * q,
                        )
                        .unwrap(),
                    )
                    .unwrap();
                    let diff = max_diff(&cas_form, &unified);
                    assert!(diff <= 1e-13, "unified slice n={n} p={p} q={q} r={r}: {diff:e}");
                    worst_unified = worst_unified.max(diff);
                }
            }
        }
    }

    // Even r degrades the generalized type-IV W to the cas form, 1e-14.
    let mut worst_even = 0.0f64;
    for n in 1..=32u64 {
        for p in 1..=5u64 {
            for q in 1..=5u64 {
                for m in 1..=5u64 {
                    let doubled = build_gen_dwt4(n, pqr(p, q, 2 * m)).unwrap();
                    let reduced = build_dwt_cas(n, pqr(p, q, m)).unwrap();
                    let diff = max_diff(&doubled, &reduced);
                    assert!(diff <= 1e-14, "even-r n={n} p={p} q={q} m={m}: {diff:e}");
                    worst_even = worst_even.max(diff);
                }
            }
        }
    }

    // (1/2, 1/2, 4) equals the cas form at (1, 2, 1) for odd sizes, 1e-13.
    let mut worst_special = 0.0f64;
    for n in (1..=31u64).step_by(2) {
        let unified =
            build_dwt_unified(n, DwtParams::new(Rational::HALF, Rational::HALF, 4).unwrap())
                .unwrap();
        let cas_form = build_dwt_cas(n, pqr(1, 2, 1)).unwrap();
        let diff = max_diff(&unified, &cas_form);
        assert!(diff <= 1e-13, "odd special case n={n}: {diff:e}");
        worst_special = worst_special.max(diff);
    }

    println!(
        "PASS structural identities: transpose bit-exact; unified slice {worst_unified:.2e} <= \
         1e-13; even-r {worst_even:.2e} <= 1e-14; odd special case {worst_special:.2e} <= 1e-13 \
         ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
}

fn max_diff(a: &TransformMatrix, b: &TransformMatrix) -> f64 {
    a.entries()
        .iter()
        .zip(b.entries())
        .fold(0.0f64, |acc, (x, y)| acc.max((x - y).abs()))
}

#[test]
fn suite_7_roundtrip_and_parseval() {
    let start = Instant::now();
    let mut count = 0usize;
    let mut worst_rt = 0.0f64;
    let mut worst_norm = 0.0f64;

    let mut check = |m: &TransformMatrix| {
        for seed in 1..=10u64 {
            let x = test_signal(seed, m.cols());
            let err = roundtrip_error(m, &x).unwrap();
            let bound = 1e-10 * x.max_abs().max(1.0);
            assert!(err <= bound, "{} n={} seed {seed}: round trip {err:e}", m.family(), m.n_param());
            worst_rt = worst_rt.max(err);

            let c = forward(m, &x).unwrap();
            let rel = (c.norm() - x.norm()).abs() / x.norm();
            assert!(rel <= 1e-10, "{} n={} seed {seed}: norm drift {rel:e}", m.family(), m.n_param());
            worst_norm = worst_norm.max(rel);
        }
        count += 1;
    };

    for n in 2..=64u64 {
        for params in gen_dct_grid(n) {
            for variant in [GenDctVariant::II, GenDctVariant::III, GenDctVariant::IV] {
                check(&build_gen_dct(variant, n, params).unwrap());
            }
        }
        for params in gen_dwt_grid(n) {
            check(&build_dwt_cas(n, params).unwrap());
            check(&build_gen_dwt4(n, params).unwrap());
        }
    }
    for n in 1..=64u64 {
        check(&build_new_dct(n).unwrap());
        check(&build_new_dst(n).unwrap());
        for variant in [DctVariant::I, DctVariant::II, DctVariant::III, DctVariant::IV] {
            check(&build_classic_dct(variant, n).unwrap());
        }
        for variant in [DwtVariant::I, DwtVariant::II, DwtVariant::III, DwtVariant::IV] {
            check(&build_dwt_classic(variant, n).unwrap());
        }
    }
    for n in 1..=32u64 {
        check(&build_new_sct(n).unwrap());
    }

    println!(
        "PASS round-trip and norm preservation: {count} matrices x 10 signals, worst round trip \
         {worst_rt:.2e}, worst relative norm drift {worst_norm:.2e} <= 1e-10 ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dtt"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dtt-acceptance-{}-{tag}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn suite_8_sweep_soundness_over_all_parameterized_families() {
    let start = Instant::now();
    let dir = temp_dir("sweep");
    for family in ["gen-dct2", "gen-dct3", "gen-dct4", "gen-dwt-cas", "gen-dwt4"] {
        let out = dir.join(format!("{family}.csv"));
        let result = run(&[
            "sweep", "--family", family, "--n", "4,5,6,7,8,9,10,11,12", "--p-max", "5",
            "--q-max", "5", "--r-max", "5", "--tol", "1e-10", "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(
            code(&result),
            0,
            "{family}: {}",
            String::from_utf8_lossy(&result.stderr)
        );
        let text = fs::read_to_string(&out).unwrap();
        assert_eq!(text.lines().count(), 1 + 9 * 125, "{family} row count");
    }
    println!(
        "PASS sweep soundness: 5 families x 1125 rows each, every condition-satisfied row within \
         1e-10, all exits 0 ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
}

#[test]
fn suite_9_cli_contract_golden_and_exit_codes() {
    let start = Instant::now();
    let dir = temp_dir("contract");

    // gen: byte-identical across runs.
    let gen_outs: Vec<PathBuf> = (0..2).map(|i| dir.join(format!("gen{i}.csv"))).collect();
    for out in &gen_outs {
        let result = run(&[
            "gen", "--family", "gen-dct4", "--n", "12", "--p", "3", "--q", "2", "--r", "5",
            "--out", out.to_str().unwrap(), "--sidecar",
        ]);
        assert_eq!(code(&result), 0);
    }
    assert_eq!(fs::read(&gen_outs[0]).unwrap(), fs::read(&gen_outs[1]).unwrap());

    // check: byte-identical stdout across runs.
    let check_args = ["check", "--family", "new-dst", "--n", "20", "--tol", "1e-10"];
    let first = run(&check_args);
    let second = run(&check_args);
    assert_eq!(first.stdout, second.stdout);

    // apply: byte-identical output across runs.
    let signal = dir.join("signal.csv");
    fs::write(&signal, "1.0\n-1.0\n0.5\n-0.5\n0.25\n").unwrap();
    let apply_outs: Vec<PathBuf> = (0..2).map(|i| dir.join(format!("apply{i}.csv"))).collect();
    for out in &apply_outs {
        let result = run(&[
            "apply", "--family", "new-dct", "--n", "5", "--signal", signal.to_str().unwrap(),
            "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(code(&result), 0);
    }
    assert_eq!(fs::read(&apply_outs[0]).unwrap(), fs::read(&apply_outs[1]).unwrap());

    // Exit-code matrix: 0 success, 1 checked-property failure, 2 usage.
    assert_eq!(code(&run(&["check", "--family", "dwt2", "--n", "8"])), 0);
    assert_eq!(
        code(&run(&[
            "check", "--family", "gen-dct3", "--n", "4", "--p", "1", "--q", "2", "--r", "1",
        ])),
        1
    );
    assert_eq!(code(&run(&["gen", "--family", "gen-dct3", "--n", "8", "--p", "1", "--q", "2"])), 2);

    println!(
        "PASS CLI contract: gen/check/apply byte-identical across runs; exit codes 0/1/2 verified \
         ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
}
