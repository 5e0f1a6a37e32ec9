//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Run with `cargo test -p stiefel-core --test acceptance -- --nocapture`
//! to see the per-criterion report.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use stiefel_core::degree::{
    aztec_check, count_nilp_bruteforce, degree, degree_table, degree_via_integral, lgv_matrix,
    path_config, Method, Regime,
};
use stiefel_core::exact::{choose2, pow2, rat, Matrix};
use stiefel_core::gt::{count_invariants, dim_irrep, enumerate_fillings, gt_polytope_dim};
use stiefel_core::symb::{weight_vars, MultiPoly};
use stiefel_core::volumes::{vol_closed, vol_symbolic};
use stiefel_core::weights::{omega_closed, omega_recursive, Partition};

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

/// Degrees of St(k, n) for 1 <= k <= n <= 10, frozen independently of
/// the library's own reference constant.
const EXPECTED_DEGREES: &[(i64, &[u64])] = &[
    (1, &[2, 2, 2, 2, 2, 2, 2, 2, 2, 2]),
    (2, &[4, 8, 8, 8, 8, 8, 8, 8, 8]),
    (3, &[16, 40, 64, 64, 64, 64, 64, 64]),
    (4, &[80, 384, 704, 1024, 1024, 1024, 1024]),
    (5, &[768, 4768, 14848, 23808, 32768, 32768]),
    (6, &[9536, 111616, 420736, 1064960, 1581056]),
    (7, &[223232, 3433600, 22429696, 66082816]),
    (8, &[6867200, 196968448, 1604859904]),
    (9, &[393936896, 14994641408]),
    (10, &[29989282816]),
];

#[test]
fn criterion_1_table_reproduction() {
    let started = Instant::now();
    let table = degree_table(10).expect("table computes");
    let mut checked = 0;
    for &(k, row) in EXPECTED_DEGREES {
        for (offset, &expected) in row.iter().enumerate() {
            let n = k + offset as i64;
            let cell = table
                .iter()
                .find(|r| (r.k, r.n) == (k, n))
                .unwrap_or_else(|| panic!("missing cell ({k}, {n})"));
            assert_eq!(cell.degree, big(expected), "degree of St({k}, {n})");
            checked += 1;
        }
    }
    assert_eq!(checked, 55);
    assert_eq!(table.len(), 55);
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "table took {elapsed:?}");
    println!("criterion 1 (table reproduction, 55 cells, {elapsed:?}): PASS");
}

#[test]
fn criterion_2_worked_example() {
    let result = degree(4, 6, Method::Auto).expect("degree computes");
    let expected_matrix = Matrix::from_rows(vec![
        vec![big(35), big(10), big(1)],
        vec![big(15), big(6), big(1)],
        vec![big(1), big(1), big(1)],
    ])
    .unwrap();
    assert_eq!(result.witnesses.matrix.as_ref(), Some(&expected_matrix));
    assert_eq!(result.witnesses.det, Some(big(44)));
    assert_eq!(result.degree, big(704));
    assert_eq!(result.regime, Regime::Determinant);
    println!("criterion 2 (St(4,6) worked example): PASS");
}

#[test]
fn criterion_3_oracle_equivalence() {
    let started = Instant::now();
    for (k, n) in [(3, 4), (4, 5), (4, 6), (5, 6), (5, 7)] {
        let cfg = path_config(k, n).expect("in band");
        let brute = count_nilp_bruteforce(&cfg).expect("within brute-force limits");
        let det = lgv_matrix(&cfg).det().expect("square");
        assert_eq!(brute, det, "(k, n) = ({k}, {n})");
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(30), "oracle took {elapsed:?}");
    println!("criterion 3 (path-count oracle on 5 configurations, {elapsed:?}): PASS");
}

#[test]
fn criterion_4_route_equivalence() {
    for k in 2..=8i64 {
        for n in k + 1..=2 * k - 1 {
            let via_det = degree(k, n, Method::Determinant).expect("band").degree;
            let via_integral = degree_via_integral(k, n).expect("band");
            assert_eq!(via_det, via_integral, "determinant vs integral at ({k}, {n})");
            if let Ok(result) = degree(k, n, Method::Paths) {
                assert_eq!(via_det, result.degree, "determinant vs paths at ({k}, {n})");
            }
        }
    }
    println!("criterion 4 (determinant = integral = 2^k * path count, k <= 8): PASS");
}

#[test]
fn criterion_5_regime_seam() {
    for k in 1..=10i64 {
        let paths = if k == 1 {
            BigInt::from(1) // empty endpoint configuration
        } else {
            lgv_matrix(&path_config(k, 2 * k - 1).unwrap()).det().unwrap()
        };
        assert_eq!(
            pow2(k as u64) * paths,
            pow2(choose2(k + 1) as u64),
            "seam identity at k = {k}"
        );
    }
    for r in 1..=12 {
        let (lhs, rhs) = aztec_check(r);
        assert_eq!(lhs, rhs, "Aztec identity at r = {r}");
    }
    println!("criterion 5 (regime seam k <= 10, Aztec identity r <= 12): PASS");
}

#[test]
fn criterion_6_volume_formulas() {
    let started = Instant::now();

    // The (4, 7) pattern volume, assembled by hand:
    // (1/6)(L1-L2)(L2-L3)(L1-L3) L1 L2 L3.
    let vars = weight_vars(3);
    let v = |i| MultiPoly::var(&vars, i);
    let worked = v(0)
        .sub(&v(1))
        .mul(&v(1).sub(&v(2)))
        .mul(&v(0).sub(&v(2)))
        .mul(&v(0))
        .mul(&v(1))
        .mul(&v(2))
        .scale(&rat(1, 6));
    assert_eq!(vol_symbolic(4, 7).unwrap(), worked);

    let mut patterns = 0;
    for k in 2..=10i64 {
        for n in k + 1..=2 * k - 1 {
            if gt_polytope_dim(k, n).unwrap() > 12 {
                continue;
            }
            let closed = vol_closed(k, n).unwrap().expand().unwrap();
            let symbolic = vol_symbolic(k, n).unwrap();
            assert_eq!(symbolic, closed, "(k, n) = ({k}, {n})");
            patterns += 1;
        }
    }
    assert!(patterns >= 13, "expected at least 13 patterns, saw {patterns}");
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "volumes took {elapsed:?}");
    println!("criterion 6 (symbolic = closed-form volume on {patterns} patterns, {elapsed:?}): PASS");
}

#[test]
fn criterion_7_representation_dimensions() {
    for n in 3..=8u32 {
        let mut parts = vec![0i64; (n / 2) as usize];
        parts[0] = 1;
        assert_eq!(dim_irrep(n, &Partition::new(parts)).unwrap(), big(n as u64));
    }
    assert_eq!(dim_irrep(5, &Partition::new(vec![1, 1])).unwrap(), big(10));

    let mut cases = 0;
    for n in 2..=7u32 {
        for lambda in dominant_weights(n, 5) {
            for m in 1..=n {
                let counted = count_invariants(n, &lambda, m).unwrap();
                let enumerated = enumerate_fillings(n, &lambda, m).unwrap().count();
                assert_eq!(
                    counted,
                    big(enumerated as u64),
                    "(n, lambda, m) = ({n}, {lambda}, {m})"
                );
                cases += 1;
            }
        }
    }
    println!("criterion 7 (representation dimensions; DP = enumeration on {cases} cases): PASS");
}

/// Relative deviation of the rescaled lattice-point count from the
/// closed-form volume at dilation `j`.
fn asymptotic_deviation(k: i64, n: i64, j: i64) -> BigRational {
    let r = (n / 2) as usize;
    let lambda: Vec<i64> = [3i64, 2, 1][..r].to_vec();
    let scaled = Partition::new(lambda.iter().map(|p| p * j).collect());
    let count = count_invariants(n as u32, &scaled, (n - k) as u32).unwrap();
    let dim = gt_polytope_dim(k, n).unwrap();
    let point: Vec<BigRational> = lambda.iter().map(|&p| rat(p, 1)).collect();
    let volume = vol_closed(k, n).unwrap().eval(&point).unwrap();
    let mut scale = BigRational::from_integer(BigInt::from(1));
    for _ in 0..dim {
        scale *= rat(j, 1);
    }
    let ratio = BigRational::from_integer(count) / scale;
    (&ratio - &volume).abs() / &volume
}

/// This criterion is stated with a fixed dilation of j = 60 and a 5%
/// tolerance. The count and the volume are each validated elsewhere
/// (the count against exhaustive enumeration, the volume against both
/// nested symbolic integration and the lattice-count limit), and the
/// deviation shrinks like c/j as the companion test below verifies —
/// but at j = 60 it measures 2.0%, 6.7% and 8.8% on the three test
/// patterns, so the stated tolerance is not attainable for the last
/// two. The criterion is kept as stated rather than loosened; see the
/// companion for the property that actually holds.
#[test]
fn criterion_8_asymptotic_consistency() {
    let started = Instant::now();
    let tolerance = rat(1, 20);
    let mut failures = Vec::new();
    for (k, n) in [(3i64, 4i64), (4, 6), (4, 7)] {
        let deviation = asymptotic_deviation(k, n, 60);
        let approx = deviation.numer().clone() * BigInt::from(100_000) / deviation.denom();
        let status = if deviation <= tolerance { "within" } else { "EXCEEDS" };
        println!(
            "criterion 8: (k, n) = ({k}, {n}) at j = 60 deviates by {approx}e-5 ({status} 5%)"
        );
        if deviation > tolerance {
            failures.push(format!("({k}, {n}) deviates by {approx}e-5 > 5000e-5"));
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "asymptotic check took {elapsed:?}");
    if failures.is_empty() {
        println!("criterion 8 (lattice counts within 5% of volumes at j = 60, {elapsed:?}): PASS");
    } else {
        println!("criterion 8 (lattice counts within 5% of volumes at j = 60, {elapsed:?}): FAIL");
    }
    assert!(
        failures.is_empty(),
        "the j = 60 proxy for the volume limit overshoots its 5% tolerance: {}; \
         the boundary correction decays like c/j (verified by the companion convergence \
         test), so the limit itself is right and the finite tolerance is not",
        failures.join("; ")
    );
}

/// Companion to criterion 8: the property that does hold. The deviation
/// decreases under doubling of j on every test pattern and is within 5%
/// by j = 120.
#[test]
fn criterion_8_companion_convergence() {
    let started = Instant::now();
    for (k, n) in [(3i64, 4i64), (4, 6), (4, 7)] {
        let at_30 = asymptotic_deviation(k, n, 30);
        let at_60 = asymptotic_deviation(k, n, 60);
        let at_120 = asymptotic_deviation(k, n, 120);
        assert!(at_60 < at_30, "(k, n) = ({k}, {n}): no improvement from j = 30 to 60");
        assert!(at_120 < at_60, "(k, n) = ({k}, {n}): no improvement from j = 60 to 120");
        assert!(
            at_120 <= rat(1, 20),
            "(k, n) = ({k}, {n}): deviation at j = 120 still above 5%"
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "convergence check took {elapsed:?}");
    println!("criterion 8 companion (deviation falls with j; within 5% at j = 120, {elapsed:?}): PASS");
}

#[test]
fn criterion_9_omega_consistency() {
    for k in 1..=12i64 {
        for n in k..=2 * k - 1 {
            assert_eq!(
                omega_recursive(k, n).unwrap(),
                omega_closed(k, n).unwrap(),
                "(k, n) = ({k}, {n})"
            );
        }
    }
    // The published table of Omega partitions, frozen here.
    let expected: &[(i64, i64, &[i64])] = &[
        (2, 3, &[1]),
        (3, 4, &[1, 0]),
        (3, 5, &[1, 1]),
        (4, 5, &[2, 1]),
        (4, 6, &[1, 1, 0]),
        (4, 7, &[1, 1, 1]),
        (5, 6, &[2, 1, 0]),
        (5, 7, &[2, 2, 1]),
        (5, 8, &[1, 1, 1, 0]),
        (5, 9, &[1, 1, 1, 1]),
        (6, 7, &[3, 2, 1]),
        (6, 8, &[2, 2, 1, 0]),
        (6, 9, &[2, 2, 2, 1]),
        (6, 10, &[1, 1, 1, 1, 0]),
        (7, 8, &[3, 2, 1, 0]),
        (7, 9, &[3, 3, 2, 1]),
        (7, 10, &[2, 2, 2, 1, 0]),
        (8, 9, &[4, 3, 2, 1]),
        (8, 10, &[3, 3, 2, 1, 0]),
        (9, 10, &[4, 3, 2, 1, 0]),
    ];
    assert_eq!(expected.len(), 20);
    for &(k, n, parts) in expected {
        assert_eq!(omega_closed(k, n).unwrap().parts(), parts, "Omega({k}, {n})");
    }
    println!("criterion 9 (Omega recursion = closed form, 20 table entries): PASS");
}

/// All dominant integral weights for SO(n) with absolute entries summing
/// to at most `budget`.
fn dominant_weights(n: u32, budget: i64) -> Vec<Partition> {
    let r = (n / 2) as usize;
    let even = n % 2 == 0;
    fn rec(parts: &mut Vec<i64>, j: usize, budget: i64, even: bool, out: &mut Vec<Partition>) {
        let r = parts.len();
        if j == r {
            out.push(Partition::new(parts.clone()));
            return;
        }
        let cap = if j == 0 { budget } else { parts[j - 1].min(budget) };
        let lo = if even && j + 1 == r { -cap } else { 0 };
        for v in lo..=cap {
            parts[j] = v;
            rec(parts, j + 1, budget - v.abs(), even, out);
            parts[j] = 0;
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0i64; r], 0, budget, even, &mut out);
    out
}
