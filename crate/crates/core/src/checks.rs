//! Self-verification suite: every cross-cutting identity the library
//! promises, runnable as a batch. The CLI `verify` subcommand fronts
//! this module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::degree::{
    aztec_check, count_nilp_bruteforce, degree, degree_table, degree_via_integral, lgv_matrix,
    path_config, Method, KNOWN_DEGREES,
};
use crate::exact::{choose2, pow2, rat};
use crate::gt::{count_invariants, dim_irrep, enumerate_fillings, gt_polytope_dim};
use crate::volumes::{vol_closed, vol_symbolic};
use crate::weights::{omega_closed, omega_recursive, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyLevel {
    /// Reference table, Aztec identity, Omega consistency.
    Fast,
    /// Everything: adds the seam, route equivalence, brute-force path
    /// oracles, symbolic volume equivalence, representation dimensions
    /// and the asymptotic volume check.
    Full,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn report(name: &'static str, outcome: std::result::Result<String, String>) -> CheckReport {
    match outcome {
        Ok(detail) => CheckReport { name, passed: true, detail },
        Err(detail) => CheckReport { name, passed: false, detail },
    }
}

/// Run the suite at the requested level.
pub fn run_checks(level: VerifyLevel) -> Vec<CheckReport> {
    let mut reports = vec![
        report("degree-table", check_degree_table()),
        report("aztec-identity", check_aztec()),
        report("omega-consistency", check_omega()),
    ];
    if level == VerifyLevel::Full {
        reports.push(report("regime-seam", check_seam()));
        reports.push(report("route-equivalence", check_routes()));
        reports.push(report("nilp-oracle", check_nilp_oracle()));
        reports.push(report("volume-equivalence", check_volumes()));
        reports.push(report("representation-dims", check_representation_dims()));
        reports.push(report("asymptotic-volume", check_asymptotic_volume()));
    }
    reports
}

fn check_degree_table() -> std::result::Result<String, String> {
    let table = degree_table(10).map_err(|e| e.to_string())?;
    for &(k, n, expected) in KNOWN_DEGREES {
        let row = table
            .iter()
            .find(|r| (r.k, r.n) == (k, n))
            .ok_or_else(|| format!("missing table entry ({k}, {n})"))?;
        if row.degree != BigInt::from(expected) {
            return Err(format!(
                "degree mismatch at ({k}, {n}): computed {}, reference {expected}",
                row.degree
            ));
        }
    }
    Ok(format!("{} entries match the reference table", KNOWN_DEGREES.len()))
}

fn check_aztec() -> std::result::Result<String, String> {
    for r in 1..=10 {
        let (lhs, rhs) = aztec_check(r);
        if lhs != rhs {
            return Err(format!("Aztec identity fails at r = {r}: {lhs} vs {rhs}"));
        }
    }
    Ok("2^C(r+1,2) = det[C(2i,j)] for r = 1..10".into())
}

fn check_omega() -> std::result::Result<String, String> {
    let mut cases = 0;
    for k in 1..=12i64 {
        for n in k..=2 * k - 1 {
            let rec = omega_recursive(k, n).map_err(|e| e.to_string())?;
            let closed = omega_closed(k, n).map_err(|e| e.to_string())?;
            if rec != closed {
                return Err(format!("Omega({k}, {n}): recursion {rec}, closed form {closed}"));
            }
            cases += 1;
        }
    }
    for &(k, n, parts) in crate::weights::OMEGA_REFERENCE {
        let closed = omega_closed(k, n).map_err(|e| e.to_string())?;
        if closed.parts() != parts {
            return Err(format!("Omega({k}, {n}) = {closed} differs from reference {parts:?}"));
        }
    }
    Ok(format!(
        "recursion and closed form agree on {cases} pairs; all {} reference entries match",
        crate::weights::OMEGA_REFERENCE.len()
    ))
}

fn check_seam() -> std::result::Result<String, String> {
    for k in 1..=10i64 {
        let n = 2 * k - 1;
        let paths = if k == 1 {
            // Empty configuration: one (empty) tuple of paths.
            BigInt::from(1)
        } else {
            let cfg = path_config(k, n).map_err(|e| e.to_string())?;
            lgv_matrix(&cfg).det().map_err(|e| e.to_string())?
        };
        let lhs = pow2(k as u64) * paths;
        let rhs = pow2(choose2(k + 1) as u64);
        if lhs != rhs {
            return Err(format!("seam mismatch at k = {k}: 2^k L = {lhs}, Bezout {rhs}"));
        }
    }
    for r in 1..=12 {
        let (lhs, rhs) = aztec_check(r);
        if lhs != rhs {
            return Err(format!("Aztec identity fails at r = {r}"));
        }
    }
    Ok("2^k L(k, 2k-1) = 2^C(k+1,2) for k = 1..10; Aztec identity for r = 1..12".into())
}

fn check_routes() -> std::result::Result<String, String> {
    let mut cases = 0;
    for k in 2..=8i64 {
        for n in k + 1..=2 * k - 1 {
            let via_det = degree(k, n, Method::Determinant).map_err(|e| e.to_string())?;
            let via_integral = degree_via_integral(k, n).map_err(|e| e.to_string())?;
            if via_det.degree != via_integral {
                return Err(format!(
                    "determinant and integral routes disagree at ({k}, {n}): {} vs {via_integral}",
                    via_det.degree
                ));
            }
            cases += 1;
        }
    }
    Ok(format!("determinant and integral routes agree on {cases} pairs"))
}

fn check_nilp_oracle() -> std::result::Result<String, String> {
    for (k, n) in [(3, 4), (4, 5), (4, 6), (5, 6), (5, 7)] {
        let cfg = path_config(k, n).map_err(|e| e.to_string())?;
        let brute = count_nilp_bruteforce(&cfg).map_err(|e| e.to_string())?;
        let det = lgv_matrix(&cfg).det().map_err(|e| e.to_string())?;
        if brute != det {
            return Err(format!(
                "path count and determinant disagree at ({k}, {n}): {brute} vs {det}"
            ));
        }
    }
    Ok("brute-force path counts match determinants on all 5 configurations".into())
}

fn check_volumes() -> std::result::Result<String, String> {
    let mut cases = 0;
    for k in 2..=10i64 {
        for n in k + 1..=2 * k - 1 {
            if gt_polytope_dim(k, n).map_err(|e| e.to_string())? > 12 {
                continue;
            }
            let closed = vol_closed(k, n)
                .and_then(|v| v.expand())
                .map_err(|e| e.to_string())?;
            let symbolic = vol_symbolic(k, n).map_err(|e| e.to_string())?;
            if closed != symbolic {
                return Err(format!("volume routes disagree at ({k}, {n})"));
            }
            cases += 1;
        }
    }
    Ok(format!("symbolic integration matches the closed form on {cases} patterns"))
}

fn check_representation_dims() -> std::result::Result<String, String> {
    for n in 3..=8u32 {
        let mut parts = vec![0i64; (n / 2) as usize];
        parts[0] = 1;
        let dim = dim_irrep(n, &Partition::new(parts)).map_err(|e| e.to_string())?;
        if dim != BigInt::from(n) {
            return Err(format!("dim of the vector representation of SO({n}) came out {dim}"));
        }
    }
    let adjoint = dim_irrep(5, &Partition::new(vec![1, 1])).map_err(|e| e.to_string())?;
    if adjoint != BigInt::from(10) {
        return Err(format!("dim V_(1,1) for SO(5) came out {adjoint}"));
    }
    let mut cases = 0;
    for n in 2..=7u32 {
        for lambda in dominant_weights(n, 5) {
            for m in 1..=n {
                let counted = count_invariants(n, &lambda, m).map_err(|e| e.to_string())?;
                let enumerated =
                    enumerate_fillings(n, &lambda, m).map_err(|e| e.to_string())?.count();
                if counted != BigInt::from(enumerated as u64) {
                    return Err(format!(
                        "count/enumeration mismatch at (n, lambda, m) = ({n}, {lambda}, {m})"
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("dimension formulas hold; DP matches enumeration on {cases} cases"))
}

fn asymptotic_deviation(k: i64, n: i64, j: i64) -> std::result::Result<BigRational, String> {
    let r = (n / 2) as usize;
    let lambda: Vec<i64> = [3i64, 2, 1][..r].to_vec();
    let scaled = Partition::new(lambda.iter().map(|p| p * j).collect());
    let count =
        count_invariants(n as u32, &scaled, (n - k) as u32).map_err(|e| e.to_string())?;
    let dim = gt_polytope_dim(k, n).map_err(|e| e.to_string())?;
    let point: Vec<BigRational> = lambda.iter().map(|&p| rat(p, 1)).collect();
    let volume = vol_closed(k, n).and_then(|v| v.eval(&point)).map_err(|e| e.to_string())?;
    let mut scale = BigRational::from_integer(BigInt::from(1));
    for _ in 0..dim {
        scale *= rat(j, 1);
    }
    let ratio = BigRational::from_integer(count) / scale;
    Ok((&ratio - &volume).abs() / &volume)
}

fn permille(x: &BigRational) -> BigInt {
    x.numer() * BigInt::from(1000) / x.denom()
}

/// The lattice-count-versus-volume proxy at dilation j = 60 with a 5%
/// tolerance, as the acceptance suite states it. The count converges to
/// the volume like c/j, but at j = 60 the boundary correction still
/// exceeds 5% on two of the three patterns, so this check reports a
/// failure there; the detail carries the j = 120 deviations to show the
/// convergence itself is sound.
fn check_asymptotic_volume() -> std::result::Result<String, String> {
    let mut lines = Vec::new();
    let mut failed = false;
    for (k, n) in [(3i64, 4i64), (4, 6), (4, 7)] {
        let at_60 = asymptotic_deviation(k, n, 60)?;
        if at_60 > rat(1, 20) {
            failed = true;
            let at_120 = asymptotic_deviation(k, n, 120)?;
            lines.push(format!(
                "({k}, {n}): {} permille at j = 60 exceeds the 50 permille tolerance \
                 (falls to {} permille at j = 120, consistent with a c/j boundary term)",
                permille(&at_60),
                permille(&at_120)
            ));
        } else {
            lines.push(format!("({k}, {n}): {} permille at j = 60", permille(&at_60)));
        }
    }
    let summary = lines.join("; ");
    if failed {
        Err(summary)
    } else {
        Ok(summary)
    }
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
