//! Degree of the Stiefel manifold `St(k, n)` by regime dispatch, with
//! cross-validating routes.
//!
//! * `n >= 2k - 1`: the projective closure is a complete intersection of
//!   `C(k + 1, 2)` quadrics, so the degree is the Bezout bound
//!   `2^C(k+1,2)`.
//! * `k + 1 <= n <= 2k - 1`: the degree is `2^k` times the number of
//!   non-intersecting lattice-path tuples joining two explicit point
//!   configurations, evaluated as a binomial determinant
//!   (Lindstrom-Gessel-Viennot). An independent route assembles the same
//!   number from Gelfand-Tsetlin polytope volumes and a simplex integral
//!   of alternating polynomials.
//! * `n = k` (for `k >= 2`): `St(n, n)` is the full orthogonal group,
//!   whose two components each project with degree one onto
//!   `St(n-1, n)`, giving twice the degree of `St(n-1, n)`.
//!
//! At the overlap `n = 2k - 1` both applicable routes are always
//! computed and compared; a mismatch is a hard error.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, choose2, factorial, pow2, Matrix};
use crate::symb::integral_product_simplex;
use crate::volumes::vol_closed;
use crate::weights::{dim_stiefel, omega_closed};

/// Which part of the dispatch a degree came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `n >= 2k - 1`: complete intersection, Bezout bound attained.
    Bezout,
    /// `k + 1 <= n <= 2k - 2`: binomial determinant / lattice paths.
    Determinant,
    /// `n = k >= 2`: the orthogonal group `O(n)`.
    OrthogonalGroup,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Bezout => "bezout",
            Regime::Determinant => "determinant",
            Regime::OrthogonalGroup => "orthogonal-group",
        })
    }
}

/// Route selector for [`degree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Dispatch on the regime of `(k, n)`.
    #[default]
    Auto,
    /// Force the binomial-determinant formula.
    Determinant,
    /// Force brute-force path enumeration (small cases only).
    Paths,
    /// Force the volume-integral formula.
    Integral,
}

/// How a [`DegreeResult`] was actually computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    ClosedForm,
    Determinant,
    Paths,
    Integral,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::ClosedForm => "closed-form",
            Route::Determinant => "determinant",
            Route::Paths => "paths",
            Route::Integral => "integral",
        })
    }
}

/// Endpoint sets for non-intersecting lattice-path counting: paths run
/// from `starts[i]` to `ends[i]` using unit north and east steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathConfig {
    pub starts: Vec<(i64, i64)>,
    pub ends: Vec<(i64, i64)>,
}

/// Intermediate data retained alongside a degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witnesses {
    pub matrix: Option<Matrix<BigInt>>,
    pub det: Option<BigInt>,
    pub path_count: Option<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeResult {
    pub k: i64,
    pub n: i64,
    pub degree: BigInt,
    pub regime: Regime,
    pub method: Route,
    pub witnesses: Witnesses,
}

fn check_band(k: i64, n: i64, what: &str) -> Result<()> {
    if k + 1 > n || n > 2 * k - 1 {
        return Err(Error::Domain(format!(
            "{what} requires k + 1 <= n <= 2k - 1, got (k, n) = ({k}, {n})"
        )));
    }
    Ok(())
}

/// Lattice-path endpoint configuration for `(k, n)` in the determinant
/// band: starts `(-(Omega(k,n)_j + r - j), 0)` on the x-axis and ends
/// `(0, n - 2j)` on the y-axis, for `j = 1, ..., r`.
pub fn path_config(k: i64, n: i64) -> Result<PathConfig> {
    check_band(k, n, "the lattice-path configuration")?;
    let r = n / 2;
    let omega = omega_closed(k, n)?;
    let starts = (0..r as usize)
        .map(|j| (-(omega.part(j) + r - 1 - j as i64), 0))
        .collect();
    let ends = (1..=r).map(|j| (0, n - 2 * j)).collect();
    Ok(PathConfig { starts, ends })
}

/// Pairwise path-count matrix: entry `(i, j)` is the number of monotone
/// north/east lattice paths from `starts[i]` to `ends[j]`, which is a
/// binomial coefficient (zero when the end is unreachable).
pub fn lgv_matrix(cfg: &PathConfig) -> Matrix<BigInt> {
    let r = cfg.starts.len();
    let mut entries = Vec::with_capacity(r * r);
    for &(ax, ay) in &cfg.starts {
        for &(bx, by) in &cfg.ends {
            let dx = bx - ax;
            let dy = by - ay;
            entries.push(binomial(dx + dy, dx));
        }
    }
    Matrix::new(r, r, entries).expect("square by construction")
}

/// The same matrix built from the partition data instead of the points:
/// entry `(i, j)` is `C(Omega(k,n)_i + Omega(n-1,n)_j + 2r - i - j,
/// Omega(k,n)_i + r - i)`.
fn binomial_formula_matrix(k: i64, n: i64) -> Result<Matrix<BigInt>> {
    check_band(k, n, "the determinant formula")?;
    let r = n / 2;
    let om_k = omega_closed(k, n)?;
    let om_top = omega_closed(n - 1, n)?;
    let mut entries = Vec::with_capacity((r * r) as usize);
    for i in 1..=r {
        for j in 1..=r {
            let upper = om_k.part(i as usize - 1) + om_top.part(j as usize - 1) + 2 * r - i - j;
            let lower = om_k.part(i as usize - 1) + r - i;
            entries.push(binomial(upper, lower));
        }
    }
    Matrix::new(r as usize, r as usize, entries)
}

/// Limits for the brute-force path oracle.
const MAX_BRUTE_PATHS: usize = 4;
const MAX_BRUTE_COORD: i64 = 8;

/// Count tuples of vertex-disjoint monotone lattice paths joining
/// `starts[i]` to `ends[i]` by exhaustive depth-first search.
///
/// This is the independent oracle for the determinant route, so it is
/// kept as plain as possible: walk the paths one by one, tracking the
/// set of occupied vertices.
pub fn count_nilp_bruteforce(cfg: &PathConfig) -> Result<BigInt> {
    if cfg.starts.len() != cfg.ends.len() {
        return Err(Error::Dimension("start and end sets differ in size".into()));
    }
    let within = |&(x, y): &(i64, i64)| x.abs() <= MAX_BRUTE_COORD && y.abs() <= MAX_BRUTE_COORD;
    if cfg.starts.len() > MAX_BRUTE_PATHS
        || !cfg.starts.iter().all(within)
        || !cfg.ends.iter().all(within)
    {
        return Err(Error::SizeLimit(format!(
            "brute-force enumeration is limited to {MAX_BRUTE_PATHS} paths with coordinates up to {MAX_BRUTE_COORD}"
        )));
    }

    fn extend(
        point: (i64, i64),
        target: (i64, i64),
        occupied: &mut HashSet<(i64, i64)>,
        rest: &[((i64, i64), (i64, i64))],
    ) -> BigInt {
        if point == target {
            return start_next(rest, occupied);
        }
        if point.0 > target.0 || point.1 > target.1 {
            return BigInt::zero();
        }
        let mut total = BigInt::zero();
        for step in [(1, 0), (0, 1)] {
            let next = (point.0 + step.0, point.1 + step.1);
            if occupied.contains(&next) {
                continue;
            }
            occupied.insert(next);
            total += extend(next, target, occupied, rest);
            occupied.remove(&next);
        }
        total
    }

    fn start_next(
        pairs: &[((i64, i64), (i64, i64))],
        occupied: &mut HashSet<(i64, i64)>,
    ) -> BigInt {
        let Some((&(start, target), rest)) = pairs.split_first() else {
            return BigInt::one();
        };
        if occupied.contains(&start) {
            return BigInt::zero();
        }
        occupied.insert(start);
        let total = extend(start, target, occupied, rest);
        occupied.remove(&start);
        total
    }

    let pairs: Vec<((i64, i64), (i64, i64))> =
        cfg.starts.iter().copied().zip(cfg.ends.iter().copied()).collect();
    Ok(start_next(&pairs, &mut HashSet::new()))
}

fn bezout_degree(k: i64) -> BigInt {
    pow2(choose2(k + 1) as u64)
}

fn determinant_degree(k: i64, n: i64) -> Result<(Matrix<BigInt>, BigInt, BigInt)> {
    let cfg = path_config(k, n)?;
    let matrix = lgv_matrix(&cfg);
    let from_partitions = binomial_formula_matrix(k, n)?;
    if matrix != from_partitions {
        return Err(Error::Inconsistency(format!(
            "path matrix and partition-formula matrix disagree at (k, n) = ({k}, {n})"
        )));
    }
    let det = matrix.det()?;
    let degree = pow2(k as u64) * &det;
    Ok((matrix, det, degree))
}

/// Degree of `St(k, n)` computed from polytope volumes: `N!` times the
/// integral over the dominant chamber of the product of the two pattern
/// volumes, assembled as closed-form scalars times the simplex integral
/// of `a_Omega(k,n) * a_Omega(n-1,n)`.
pub fn degree_via_integral(k: i64, n: i64) -> Result<BigInt> {
    check_band(k, n, "the integral formula")?;
    let r = (n / 2) as usize;
    let big_n = dim_stiefel(k, n)?;
    let invariants_volume = vol_closed(k, n)?;
    let full_volume = vol_closed(n - 1, n)?;
    // The chamber is the simplex folded r! times, twice that for even n
    // where the last coordinate also carries a sign.
    let copies = if n % 2 == 0 { 2 } else { 1 };
    let chamber = BigRational::new(BigInt::from(copies), factorial(r as u64));
    let simplex = integral_product_simplex(&invariants_volume.omega, &full_volume.omega, r)?;

    let value = BigRational::from_integer(factorial(big_n as u64))
        * invariants_volume.scalar
        * full_volume.scalar
        * chamber
        * simplex;
    if !value.is_integer() || !value.is_positive() {
        return Err(Error::Inconsistency(format!(
            "integral route produced {value} at (k, n) = ({k}, {n})"
        )));
    }
    Ok(value.to_integer())
}

/// `2^C(r+1,2)` against the determinant of the binomial matrix
/// `[C(2i, j)]` for `i, j = 1, ..., r` — the two sides of the identity
/// behind domino tilings of the Aztec diamond. The caller asserts
/// equality.
pub fn aztec_check(r: usize) -> (BigInt, BigInt) {
    let lhs = pow2(choose2(r as i64 + 1) as u64);
    let mut entries = Vec::with_capacity(r * r);
    for i in 1..=r as i64 {
        for j in 1..=r as i64 {
            entries.push(binomial(2 * i, j));
        }
    }
    let rhs = Matrix::new(r, r, entries)
        .expect("square by construction")
        .det()
        .expect("square matrix");
    (lhs, rhs)
}

/// Degree of `St(k, n)`, by the selected route.
///
/// With [`Method::Auto`] the regime decides: Bezout bound for
/// `n >= 2k - 1` (checked against the determinant route on the seam
/// `n = 2k - 1`), doubling of `St(n-1, n)` on the diagonal, determinant
/// route in between. The forced routes error outside their regime.
pub fn degree(k: i64, n: i64, method: Method) -> Result<DegreeResult> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!(
            "St(k, n) requires 1 <= k <= n, got (k, n) = ({k}, {n})"
        )));
    }
    let regime = if k == n && k >= 2 {
        Regime::OrthogonalGroup
    } else if n >= 2 * k - 1 {
        Regime::Bezout
    } else {
        Regime::Determinant
    };
    let result = match method {
        Method::Auto => match regime {
            Regime::Bezout => {
                let value = bezout_degree(k);
                if n == 2 * k - 1 && k >= 2 {
                    // Seam: the determinant route must reproduce the
                    // Bezout bound.
                    let (_, _, from_paths) = determinant_degree(k, n)?;
                    if from_paths != value {
                        return Err(Error::Inconsistency(format!(
                            "regime seam mismatch at (k, n) = ({k}, {n}): Bezout {value}, determinant {from_paths}"
                        )));
                    }
                }
                DegreeResult {
                    k,
                    n,
                    degree: value,
                    regime,
                    method: Route::ClosedForm,
                    witnesses: Witnesses::default(),
                }
            }
            Regime::OrthogonalGroup => {
                let half = degree(k - 1, n, Method::Auto)?;
                DegreeResult {
                    k,
                    n,
                    degree: half.degree * 2,
                    regime,
                    method: Route::ClosedForm,
                    witnesses: Witnesses::default(),
                }
            }
            Regime::Determinant => {
                let (matrix, det, value) = determinant_degree(k, n)?;
                DegreeResult {
                    k,
                    n,
                    degree: value,
                    regime,
                    method: Route::Determinant,
                    witnesses: Witnesses {
                        matrix: Some(matrix),
                        det: Some(det),
                        path_count: None,
                    },
                }
            }
        },
        Method::Determinant => {
            let (matrix, det, value) = determinant_degree(k, n)?;
            DegreeResult {
                k,
                n,
                degree: value,
                regime,
                method: Route::Determinant,
                witnesses: Witnesses { matrix: Some(matrix), det: Some(det), path_count: None },
            }
        }
        Method::Paths => {
            let cfg = path_config(k, n)?;
            let count = count_nilp_bruteforce(&cfg)?;
            DegreeResult {
                k,
                n,
                degree: pow2(k as u64) * &count,
                regime,
                method: Route::Paths,
                witnesses: Witnesses { matrix: None, det: None, path_count: Some(count) },
            }
        }
        Method::Integral => DegreeResult {
            k,
            n,
            degree: degree_via_integral(k, n)?,
            regime,
            method: Route::Integral,
            witnesses: Witnesses::default(),
        },
    };
    debug_assert!(result.degree.is_positive());
    Ok(result)
}

/// The full triangular table of degrees for `1 <= k <= n <= max_n`,
/// ordered by `k`, then `n`.
pub fn degree_table(max_n: i64) -> Result<Vec<DegreeResult>> {
    if max_n < 1 {
        return Err(Error::Domain(format!("table size must be at least 1, got {max_n}")));
    }
    let mut rows = Vec::new();
    for k in 1..=max_n {
        for n in k..=max_n {
            rows.push(degree(k, n, Method::Auto)?);
        }
    }
    Ok(rows)
}

/// Reference degrees of `St(k, n)` for `1 <= k <= n <= 10`, used by the
/// verification suite.
pub const KNOWN_DEGREES: &[(i64, i64, u64)] = &[
    (1, 1, 2),
    (1, 2, 2),
    (1, 3, 2),
    (1, 4, 2),
    (1, 5, 2),
    (1, 6, 2),
    (1, 7, 2),
    (1, 8, 2),
    (1, 9, 2),
    (1, 10, 2),
    (2, 2, 4),
    (2, 3, 8),
    (2, 4, 8),
    (2, 5, 8),
    (2, 6, 8),
    (2, 7, 8),
    (2, 8, 8),
    (2, 9, 8),
    (2, 10, 8),
    (3, 3, 16),
    (3, 4, 40),
    (3, 5, 64),
    (3, 6, 64),
    (3, 7, 64),
    (3, 8, 64),
    (3, 9, 64),
    (3, 10, 64),
    (4, 4, 80),
    (4, 5, 384),
    (4, 6, 704),
    (4, 7, 1024),
    (4, 8, 1024),
    (4, 9, 1024),
    (4, 10, 1024),
    (5, 5, 768),
    (5, 6, 4768),
    (5, 7, 14848),
    (5, 8, 23808),
    (5, 9, 32768),
    (5, 10, 32768),
    (6, 6, 9536),
    (6, 7, 111616),
    (6, 8, 420736),
    (6, 9, 1064960),
    (6, 10, 1581056),
    (7, 7, 223232),
    (7, 8, 3433600),
    (7, 9, 22429696),
    (7, 10, 66082816),
    (8, 8, 6867200),
    (8, 9, 196968448),
    (8, 10, 1604859904),
    (9, 9, 393936896),
    (9, 10, 14994641408),
    (10, 10, 29989282816),
];

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn path_config_examples() {
        let cfg = path_config(4, 6).unwrap();
        assert_eq!(cfg.starts, vec![(-3, 0), (-2, 0), (0, 0)]);
        assert_eq!(cfg.ends, vec![(0, 4), (0, 2), (0, 0)]);

        let cfg = path_config(3, 5).unwrap();
        assert_eq!(cfg.starts, vec![(-2, 0), (-1, 0)]);
        assert_eq!(cfg.ends, vec![(0, 3), (0, 1)]);

        let cfg = path_config(5, 7).unwrap();
        assert_eq!(cfg.starts, vec![(-4, 0), (-3, 0), (-1, 0)]);
        assert_eq!(cfg.ends, vec![(0, 5), (0, 3), (0, 1)]);

        assert!(path_config(3, 6).is_err());
        assert!(path_config(3, 3).is_err());
    }

    /// Endpoint lists written out directly: `a` has `n - k` entries
    /// `k - 1, k - 2, ...` followed by `2k - n - 2, 2k - n - 4, ...`
    /// down to `n - 2r`; `b` is `n - 2, n - 4, ..., n - 2r`.
    #[test]
    fn path_config_matches_explicit_endpoint_lists() {
        for k in 2..=10i64 {
            for n in k + 1..=2 * k - 1 {
                let r = n / 2;
                let mut a = Vec::new();
                for i in 1..=n - k {
                    a.push(k - i);
                }
                let mut v = 2 * k - n - 2;
                while a.len() < r as usize {
                    a.push(v);
                    v -= 2;
                }
                let b: Vec<i64> = (1..=r).map(|j| n - 2 * j).collect();
                let cfg = path_config(k, n).unwrap();
                let starts: Vec<(i64, i64)> = a.iter().map(|&x| (-x, 0)).collect();
                let ends: Vec<(i64, i64)> = b.iter().map(|&y| (0, y)).collect();
                assert_eq!(cfg.starts, starts, "(k, n) = ({k}, {n})");
                assert_eq!(cfg.ends, ends, "(k, n) = ({k}, {n})");
            }
        }
    }

    #[test]
    fn lgv_matrix_worked_example() {
        let cfg = path_config(4, 6).unwrap();
        let m = lgv_matrix(&cfg);
        let expected = Matrix::from_rows(vec![
            vec![big(35), big(10), big(1)],
            vec![big(15), big(6), big(1)],
            vec![big(1), big(1), big(1)],
        ])
        .unwrap();
        assert_eq!(m, expected);
        assert_eq!(m.det().unwrap(), BigInt::from(44));
    }

    #[test]
    fn lgv_matrix_trivial_configs() {
        let single = PathConfig { starts: vec![(-1, 0)], ends: vec![(0, 1)] };
        assert_eq!(*lgv_matrix(&single).get(0, 0), big(2));
        let stationary = PathConfig { starts: vec![(0, 0)], ends: vec![(0, 0)] };
        assert_eq!(*lgv_matrix(&stationary).get(0, 0), big(1));
        let unreachable = PathConfig { starts: vec![(0, 1)], ends: vec![(0, 0)] };
        assert_eq!(*lgv_matrix(&unreachable).get(0, 0), BigInt::zero());
    }

    #[test]
    fn bruteforce_worked_example() {
        let cfg = path_config(4, 6).unwrap();
        assert_eq!(count_nilp_bruteforce(&cfg).unwrap(), big(44));
    }

    #[test]
    fn bruteforce_trivial_and_limits() {
        let stationary = PathConfig { starts: vec![(0, 0)], ends: vec![(0, 0)] };
        assert_eq!(count_nilp_bruteforce(&stationary).unwrap(), big(1));
        let too_far = PathConfig { starts: vec![(-9, 0)], ends: vec![(0, 0)] };
        assert!(matches!(count_nilp_bruteforce(&too_far), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn bruteforce_agrees_with_determinant() {
        for (k, n) in [(3, 4), (4, 5), (4, 6), (5, 6)] {
            let cfg = path_config(k, n).unwrap();
            assert_eq!(
                count_nilp_bruteforce(&cfg).unwrap(),
                lgv_matrix(&cfg).det().unwrap(),
                "(k, n) = ({k}, {n})"
            );
        }
        // 2^3 * L(3, 4) = 40 forces L(3, 4) = 5.
        let cfg = path_config(3, 4).unwrap();
        assert_eq!(count_nilp_bruteforce(&cfg).unwrap(), big(5));
    }

    #[test]
    fn degree_worked_example() {
        let result = degree(4, 6, Method::Auto).unwrap();
        assert_eq!(result.degree, big(704));
        assert_eq!(result.regime, Regime::Determinant);
        assert_eq!(result.method, Route::Determinant);
        assert_eq!(result.witnesses.det, Some(big(44)));
    }

    #[test]
    fn degree_reference_values() {
        assert_eq!(degree(5, 8, Method::Auto).unwrap().degree, big(23808));
        assert_eq!(degree(6, 6, Method::Auto).unwrap().degree, big(9536));
        assert_eq!(degree(2, 9, Method::Auto).unwrap().degree, big(8));
        assert_eq!(degree(1, 1, Method::Auto).unwrap().degree, big(2));
        assert!(degree(3, 2, Method::Auto).is_err());
    }

    #[test]
    fn degree_overlap_point_agrees_both_ways() {
        let auto = degree(3, 5, Method::Auto).unwrap();
        let det = degree(3, 5, Method::Determinant).unwrap();
        assert_eq!(auto.degree, big(64));
        assert_eq!(det.degree, big(64));
        assert_eq!(auto.regime, Regime::Bezout);
    }

    #[test]
    fn degree_via_integral_examples() {
        assert_eq!(degree_via_integral(4, 6).unwrap(), big(704));
        assert_eq!(degree_via_integral(3, 4).unwrap(), big(40));
        assert_eq!(degree_via_integral(6, 9).unwrap(), big(1064960));
        assert!(degree_via_integral(2, 4).is_err());
    }

    #[test]
    fn degree_method_paths() {
        let result = degree(4, 6, Method::Paths).unwrap();
        assert_eq!(result.degree, big(704));
        assert_eq!(result.witnesses.path_count, Some(big(44)));
    }

    #[test]
    fn forced_methods_error_outside_band() {
        assert!(degree(2, 6, Method::Determinant).is_err());
        assert!(degree(2, 6, Method::Integral).is_err());
        assert!(degree(4, 4, Method::Paths).is_err());
    }

    #[test]
    fn aztec_values() {
        assert_eq!(aztec_check(1), (big(2), big(2)));
        let (lhs, rhs) = aztec_check(3);
        assert_eq!(lhs, big(64));
        assert_eq!(rhs, big(64));
        let (lhs, rhs) = aztec_check(10);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn table_spot_checks() {
        let table = degree_table(10).unwrap();
        assert_eq!(table.len(), 55);
        for row in table.iter().filter(|r| r.k == 1) {
            assert_eq!(row.degree, big(2));
        }
        let last = table.iter().find(|r| (r.k, r.n) == (10, 10)).unwrap();
        assert_eq!(last.degree, big(29989282816));
        assert_eq!(last.regime, Regime::OrthogonalGroup);
        assert!(degree_table(0).is_err());
    }
}
