//! Partitions, dominant weights of `SO(n)`, the distinguished partition
//! family `Omega(k, n)`, and closed-form dimension counts for Stiefel
//! manifolds and their loci at infinity.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::choose2;

/// Weakly decreasing integer sequence.
///
/// A `Partition` of length `r` encodes a dominant integral weight: for
/// `SO(2r + 1)` all parts are nonnegative, for `SO(2r)` the last part
/// may be negative as long as `parts[r-2] >= |parts[r-1]|`.
///
/// Partitions are stored at full rank length, trailing zeros included,
/// because Gelfand-Tsetlin shapes and determinant indices need
/// positional access at a fixed rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(parts: Vec<i64>) -> Self {
        Partition(parts)
    }

    pub fn zero(len: usize) -> Self {
        Partition(vec![0; len])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, j: usize) -> i64 {
        self.0[j]
    }

    /// Sum of parts.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// All parts nonnegative and weakly decreasing.
    pub fn is_genuine(&self) -> bool {
        self.is_weakly_decreasing() && self.0.last().is_none_or(|&p| p >= 0)
    }

    /// Is this a dominant integral weight for `SO(n)`?
    ///
    /// Requires length equal to the rank of `SO(n)`. For odd `n` the
    /// parts must be weakly decreasing and nonnegative; for even `n`
    /// the last part may be negative within `|last| <= second to last`.
    pub fn is_dominant_for(&self, n: u32) -> bool {
        let rank = Rank::of(n);
        if self.len() != rank.r as usize {
            return false;
        }
        if rank.even {
            let r = self.len();
            if r == 0 {
                return true;
            }
            let head_ok = self.0[..r - 1].windows(2).all(|w| w[0] >= w[1]);
            let tail_ok = if r >= 2 { self.0[r - 2] >= self.0[r - 1].abs() } else { true };
            head_ok && tail_ok
        } else {
            self.is_genuine()
        }
    }

    /// Append a trailing zero part.
    pub fn extend_zero(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.push(0);
        Partition(parts)
    }

    /// Add one to every part.
    pub fn add_ones(&self) -> Partition {
        Partition(self.0.iter().map(|p| p + 1).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Group size `n` together with its rank `floor(n / 2)` and parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rank {
    pub n: u32,
    pub r: u32,
    pub even: bool,
}

impl Rank {
    pub fn of(n: u32) -> Self {
        Rank { n, r: n / 2, even: n % 2 == 0 }
    }
}

fn check_omega_domain(k: i64, n: i64) -> Result<()> {
    if k < 1 || n < k || n > 2 * k - 1 {
        return Err(Error::Domain(format!(
            "Omega(k, n) requires 1 <= k and k <= n <= 2k - 1, got (k, n) = ({k}, {n})"
        )));
    }
    Ok(())
}

/// The partition `Omega(k, n)` by its defining recursion.
///
/// Base case `Omega(k, 2k - 1) = (1, ..., 1)` with `k - 1` parts; below
/// that, append a zero to `Omega(k-1, n-1)` when `n` is even and add one
/// to every part of `Omega(k-1, n-1)` when `n` is odd.
pub fn omega_recursive(k: i64, n: i64) -> Result<Partition> {
    check_omega_domain(k, n)?;
    if n == 2 * k - 1 {
        return Ok(Partition(vec![1; (k - 1) as usize]));
    }
    let prev = omega_recursive(k - 1, n - 1)?;
    Ok(if n % 2 == 0 { prev.extend_zero() } else { prev.add_ones() })
}

/// The partition `Omega(k, n)` in closed form: `n - k` copies of `k - r`
/// followed by `k - r - 1, k - r - 2, ...` down to `0` (even `n`) or
/// down to `1` (odd `n`).
pub fn omega_closed(k: i64, n: i64) -> Result<Partition> {
    check_omega_domain(k, n)?;
    let r = n / 2;
    let head = k - r;
    let mut parts = vec![head; (n - k) as usize];
    let last = if n % 2 == 0 { 0 } else { 1 };
    let mut v = head - 1;
    while v >= last {
        parts.push(v);
        v -= 1;
    }
    debug_assert_eq!(parts.len(), r as usize);
    Ok(Partition(parts))
}

fn check_stiefel_domain(k: i64, n: i64) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!(
            "St(k, n) requires 1 <= k <= n, got (k, n) = ({k}, {n})"
        )));
    }
    Ok(())
}

/// `dim St(k, n) = C(n, 2) - C(n - k, 2)`.
pub fn dim_stiefel(k: i64, n: i64) -> Result<i64> {
    check_stiefel_domain(k, n)?;
    Ok(choose2(n) - choose2(n - k))
}

/// Codimension of `St(k, n)` in the `k x n` matrix space: `C(k + 1, 2)`,
/// the number of defining quadrics.
pub fn codim_stiefel(k: i64, n: i64) -> Result<i64> {
    check_stiefel_domain(k, n)?;
    Ok(choose2(k + 1))
}

/// Dimension of the intersection of the naive homogenization of
/// `St(k, n)` with the hyperplane at infinity.
///
/// Computed as the maximum over `s` in `1..=min(k, floor(n/2))` of
/// `n s - (3 s^2 + s) / 2 + k s - 1`, the dimension of the incidence
/// variety over the Fano scheme of `s`-planes in the quadric. Returns
/// `-1` for `n = 1`, where the locus is empty.
pub fn dim_z_infinity(k: i64, n: i64) -> Result<i64> {
    check_stiefel_domain(k, n)?;
    let s_max = k.min(n / 2);
    Ok((1..=s_max)
        .map(|s| n * s - (3 * s * s + s) / 2 + k * s - 1)
        .max()
        .unwrap_or(-1))
}

/// Reference values for Omega(k, n): every in-domain cell of the
/// published table for n <= 10, used by the verification suite.
pub const OMEGA_REFERENCE: &[(i64, i64, &[i64])] = &[
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
