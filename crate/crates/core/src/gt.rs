//! Gelfand-Tsetlin patterns for the chain `SO(m) < SO(m+1) < ... < SO(n)`:
//! shapes, integer-filling enumeration, and lattice-point counts giving
//! `dim V_lambda` and the dimension of the `SO(m)`-invariant subspace.
//!
//! A pattern of shape `(SO(m), SO(n))` has one row per group, the row of
//! `SO(i)` holding `floor(i / 2)` boxes, staggered so every box sits
//! between its north-west and north-east neighbours. A filling is valid
//! when each pair of adjacent rows interlaces according to the branching
//! rule for `SO(i) -> SO(i - 1)`:
//!
//! * odd `i = 2s + 1` over even `i - 1 = 2s`:
//!   `y_1 >= x_1 >= y_2 >= ... >= y_s >= x_s >= -y_s`;
//! * even `i = 2s` over odd `i - 1 = 2s - 1`:
//!   `y_1 >= x_1 >= y_2 >= ... >= x_{s-1} >= |y_s|`.
//!
//! Only the last box of an even-group row can be negative; every other
//! label is pinned to be nonnegative by these inequalities. Valid
//! fillings with top row `lambda` and bottom row zero are exactly the
//! multiplicity-free branching chains from the trivial `SO(m)`-weight up
//! to `lambda`, so counting them computes invariant dimensions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weights::Partition;

/// Cap on dense DP level size, to fail loudly instead of thrashing.
const MAX_LEVEL_CELLS: usize = 20_000_000;

/// The staircase diagram of a pattern: top group `n`, bottom group `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GTShape {
    n: u32,
    m: u32,
}

impl GTShape {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m < 1 || m > n {
            return Err(Error::Domain(format!(
                "pattern shape requires 1 <= m <= n, got (m, n) = ({m}, {n})"
            )));
        }
        Ok(GTShape { n, m })
    }

    pub fn top_group(&self) -> u32 {
        self.n
    }

    pub fn bottom_group(&self) -> u32 {
        self.m
    }

    /// Rows from the top down as `(group, box count)` pairs.
    pub fn rows(&self) -> Vec<(u32, usize)> {
        (self.m..=self.n).rev().map(|i| (i, (i / 2) as usize)).collect()
    }

    /// Total number of boxes below the top row.
    pub fn interior_boxes(&self) -> usize {
        (self.m..self.n).map(|i| (i / 2) as usize).sum()
    }
}

/// An integer filling of a pattern, rows listed from the top group down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTFilling {
    pub shape: GTShape,
    pub rows: Vec<Vec<i64>>,
}

impl fmt::Display for GTFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "(")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Inclusive `[lo, hi]` bounds for each box of the row below a row with
/// values `upper` belonging to group `upper_group`. Bounds of distinct
/// boxes are independent, so valid rows form a product of intervals.
fn lower_row_bounds(upper: &[i64], upper_group: u32) -> Vec<(i64, i64)> {
    let s = upper.len();
    debug_assert_eq!(s, (upper_group / 2) as usize);
    if upper_group % 2 == 1 {
        // SO(2s + 1) over SO(2s): same box count, signed last box.
        (0..s)
            .map(|j| {
                if j + 1 < s {
                    (upper[j + 1], upper[j])
                } else {
                    (-upper[s - 1], upper[s - 1])
                }
            })
            .collect()
    } else {
        // SO(2s) over SO(2s - 1): one box fewer, |last| bound.
        if s == 0 {
            return Vec::new();
        }
        (0..s - 1)
            .map(|j| {
                if j + 2 < s {
                    (upper[j + 1], upper[j])
                } else {
                    (upper[s - 1].abs(), upper[j])
                }
            })
            .collect()
    }
}

/// Inclusive bounds on the row *above* a row with values `lower`, as a
/// box (rectangle) in the upper row's coordinates. `None` marks an
/// unconstrained side; callers clip to the level's dimensions.
fn upper_row_rect(lower: &[i64], upper_group: u32) -> Vec<(Option<i64>, Option<i64>)> {
    let p = (upper_group / 2) as usize;
    let mut rect = Vec::with_capacity(p);
    if upper_group % 2 == 1 {
        // Upper SO(2s + 1), lower SO(2s): both have s boxes.
        let s = p;
        debug_assert_eq!(lower.len(), s);
        for j in 0..s {
            let hi = if j == 0 { None } else { Some(lower[j - 1]) };
            let lo = if j + 1 == s { Some(lower[s - 1].abs()) } else { Some(lower[j]) };
            rect.push((lo, hi));
        }
    } else {
        // Upper SO(2s), lower SO(2s - 1).
        let s = p;
        debug_assert_eq!(lower.len(), s.saturating_sub(1));
        for j in 0..s {
            if j + 1 == s {
                if s == 1 {
                    // SO(2) over SO(1): a single unconstrained box.
                    rect.push((None, None));
                } else {
                    rect.push((Some(-lower[s - 2]), Some(lower[s - 2])));
                }
            } else {
                let hi = if j == 0 { None } else { Some(lower[j - 1]) };
                rect.push((Some(lower[j]), hi));
            }
        }
    }
    rect
}

fn validate_weight(n: u32, lambda: &Partition) -> Result<()> {
    if !lambda.is_dominant_for(n) {
        return Err(Error::Domain(format!(
            "{lambda} is not a dominant integral weight for SO({n})"
        )));
    }
    Ok(())
}

fn validate_shape(n: u32, m: u32) -> Result<()> {
    if m < 1 || m > n {
        return Err(Error::Domain(format!(
            "chain requires 1 <= m <= n, got (m, n) = ({m}, {n})"
        )));
    }
    Ok(())
}

/// Lazily enumerates every integer filling with top row `lambda` and
/// zero bottom row, rows generated top-down with the leftmost box
/// varying slowest and labels ascending, i.e. in lexicographic order on
/// the concatenated rows.
pub fn enumerate_fillings(n: u32, lambda: &Partition, m: u32) -> Result<FillingStream> {
    validate_shape(n, m)?;
    validate_weight(n, lambda)?;
    let shape = GTShape::new(m, n)?;
    let mut stack = Vec::new();
    if n == m {
        if lambda.is_zero() {
            stack.push(vec![lambda.parts().to_vec()]);
        }
    } else {
        stack.push(vec![lambda.parts().to_vec()]);
    }
    Ok(FillingStream { shape, stack })
}

pub struct FillingStream {
    shape: GTShape,
    /// Partial fillings; the row for group `n - depth + 1` is last.
    stack: Vec<Vec<Vec<i64>>>,
}

impl Iterator for FillingStream {
    type Item = GTFilling;

    fn next(&mut self) -> Option<GTFilling> {
        let total_rows = (self.shape.n - self.shape.m + 1) as usize;
        while let Some(partial) = self.stack.pop() {
            if partial.len() == total_rows {
                return Some(GTFilling { shape: self.shape, rows: partial });
            }
            let upper_group = self.shape.n + 1 - partial.len() as u32;
            let group = upper_group - 1;
            let bounds = lower_row_bounds(partial.last().unwrap(), upper_group);
            if group == self.shape.m {
                // The bottom row is pinned to zero; keep it only if legal.
                if bounds.iter().all(|&(lo, hi)| lo <= 0 && 0 <= hi) {
                    let mut child = partial;
                    child.push(vec![0; bounds.len()]);
                    self.stack.push(child);
                }
                continue;
            }
            // Push candidate rows in reverse so they pop in ascending order.
            let mut candidates = vec![Vec::new()];
            for &(lo, hi) in &bounds {
                let mut widened = Vec::new();
                for prefix in candidates {
                    for v in lo..=hi {
                        let mut row = prefix.clone();
                        row.push(v);
                        widened.push(row);
                    }
                }
                candidates = widened;
            }
            for row in candidates.into_iter().rev() {
                let mut child = partial.clone();
                child.push(row);
                self.stack.push(child);
            }
        }
        None
    }
}

/// Dense DP level over the weights of one group.
struct Level {
    /// Inclusive `(lo, hi)` per coordinate.
    dims: Vec<(i64, i64)>,
    data: Vec<BigInt>,
}

impl Level {
    fn new(dims: Vec<(i64, i64)>) -> Result<Self> {
        let mut cells = 1usize;
        for &(lo, hi) in &dims {
            debug_assert!(lo <= hi);
            cells = cells
                .checked_mul((hi - lo + 1) as usize)
                .filter(|&c| c <= MAX_LEVEL_CELLS)
                .ok_or_else(|| {
                    Error::SizeLimit("pattern-counting state space too large".into())
                })?;
        }
        Ok(Level { dims, data: vec![BigInt::zero(); cells] })
    }

    fn strides(&self) -> Vec<usize> {
        let d = self.dims.len();
        let mut strides = vec![1usize; d];
        for axis in (0..d.saturating_sub(1)).rev() {
            let size = (self.dims[axis + 1].1 - self.dims[axis + 1].0 + 1) as usize;
            strides[axis] = strides[axis + 1] * size;
        }
        strides
    }

    fn index(&self, coords: &[i64], strides: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.dims)
            .zip(strides)
            .map(|((&c, &(lo, _)), &st)| (c - lo) as usize * st)
            .sum()
    }

    /// Turn `data` into inclusive prefix sums along every axis.
    fn accumulate(&mut self) {
        let strides = self.strides();
        let len = self.data.len();
        for (axis, &stride) in strides.iter().enumerate() {
            let size = (self.dims[axis].1 - self.dims[axis].0 + 1) as usize;
            if size <= 1 {
                continue;
            }
            for i in 0..len {
                let coord = (i / stride) % size;
                if coord > 0 {
                    let prev = self.data[i - stride].clone();
                    self.data[i] += prev;
                }
            }
        }
    }

    /// Sum of the original data over the rectangle `[a, b]` (inclusive),
    /// assuming `accumulate` has run. Empty rectangles sum to zero.
    fn rect_sum(&self, rect: &[(Option<i64>, Option<i64>)], strides: &[usize]) -> BigInt {
        let d = self.dims.len();
        debug_assert_eq!(rect.len(), d);
        let mut a = Vec::with_capacity(d);
        let mut b = Vec::with_capacity(d);
        for (j, &(lo_opt, hi_opt)) in rect.iter().enumerate() {
            let (lo_dim, hi_dim) = self.dims[j];
            let a_j = lo_opt.map_or(lo_dim, |v| v.max(lo_dim));
            let b_j = hi_opt.map_or(hi_dim, |v| v.min(hi_dim));
            if a_j > b_j {
                return BigInt::zero();
            }
            a.push(a_j);
            b.push(b_j);
        }
        let mut total = BigInt::zero();
        // Inclusion-exclusion over the 2^d corners of the rectangle.
        'corner: for mask in 0u32..(1 << d) {
            let mut coords = Vec::with_capacity(d);
            for j in 0..d {
                if mask & (1 << j) != 0 {
                    if a[j] - 1 < self.dims[j].0 {
                        continue 'corner; // prefix sum below the range is zero
                    }
                    coords.push(a[j] - 1);
                } else {
                    coords.push(b[j]);
                }
            }
            let value = &self.data[self.index(&coords, strides)];
            if mask.count_ones() % 2 == 0 {
                total += value;
            } else {
                total -= value;
            }
        }
        total
    }

    fn for_each_state(&self, mut f: impl FnMut(&[i64], usize)) {
        let d = self.dims.len();
        let mut coords: Vec<i64> = self.dims.iter().map(|&(lo, _)| lo).collect();
        for i in 0..self.data.len() {
            f(&coords, i);
            for axis in (0..d).rev() {
                coords[axis] += 1;
                if coords[axis] <= self.dims[axis].1 {
                    break;
                }
                coords[axis] = self.dims[axis].0;
            }
        }
    }
}

/// Coordinate bounds for the weights of group `g` inside a pattern of
/// top group `n` with top row `lambda`.
///
/// Coordinate `j` is at most `lambda_j` (its north-west chain), and at
/// least the top-row entry reached by its north-east chain of lower
/// bounds, when that chain makes it to the top row. The last coordinate
/// of an even group is sign-symmetric instead.
fn level_dims(g: u32, n: u32, lambda: &[i64]) -> Vec<(i64, i64)> {
    let q = (g / 2) as usize;
    (0..q)
        .map(|j| {
            let hi = lambda[j];
            let lo = if g % 2 == 0 && j + 1 == q {
                -hi
            } else {
                let mut h = g;
                let mut p = j;
                while h < n && p + 2 <= ((h + 1) / 2) as usize {
                    h += 1;
                    p += 1;
                }
                if h == n {
                    lambda[p]
                } else {
                    0
                }
            };
            (lo, hi)
        })
        .collect()
}

/// Number of branching chains from the trivial `SO(m)`-weight up to
/// `lambda` for `SO(n)`, i.e. the dimension of the space of
/// `SO(m)`-invariant vectors in the irreducible representation `V_lambda`.
///
/// Counts by dynamic programming over the reachable dominant weights of
/// each intermediate group, using rectangle prefix sums per transition,
/// so no filling is ever materialized.
pub fn count_invariants(n: u32, lambda: &Partition, m: u32) -> Result<BigInt> {
    validate_shape(n, m)?;
    validate_weight(n, lambda)?;
    if m == n {
        return Ok(if lambda.is_zero() { BigInt::one() } else { BigInt::zero() });
    }
    let top = lambda.parts();
    if m == n - 1 {
        let fits = lower_row_bounds(top, n).iter().all(|&(lo, hi)| lo <= 0 && 0 <= hi);
        return Ok(if fits { BigInt::one() } else { BigInt::zero() });
    }

    // Fill the first level below the top row directly.
    let mut level = Level::new(level_dims(n - 1, n, top))?;
    {
        let bounds = lower_row_bounds(top, n);
        let mut hits = Vec::new();
        level.for_each_state(|coords, idx| {
            if coords.iter().zip(&bounds).all(|(&c, &(lo, hi))| lo <= c && c <= hi) {
                hits.push(idx);
            }
        });
        for idx in hits {
            level.data[idx] = BigInt::one();
        }
    }

    // Walk the chain down to the row just above the bottom.
    for g in (m + 1..=n - 2).rev() {
        level.accumulate();
        let old_strides = level.strides();
        let mut next = Level::new(level_dims(g, n, top))?;
        let mut values = Vec::with_capacity(next.data.len());
        next.for_each_state(|coords, _| {
            let rect = upper_row_rect(coords, g + 1);
            values.push(level.rect_sum(&rect, &old_strides));
        });
        next.data = values;
        level = next;
    }

    // Bottom row is identically zero (empty for m = 1).
    level.accumulate();
    let strides = level.strides();
    let zero_row = vec![0i64; (m / 2) as usize];
    Ok(level.rect_sum(&upper_row_rect(&zero_row, m + 1), &strides))
}

/// `dim V_lambda` for `SO(n)`: the invariant count for the trivial
/// subgroup `SO(1)`.
pub fn dim_irrep(n: u32, lambda: &Partition) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Domain(format!("dim_irrep requires n >= 2, got {n}")));
    }
    count_invariants(n, lambda, 1)
}

/// One-step branching: the dominant `SO(n - 1)`-weights appearing in the
/// restriction of `V_lambda`.
#[cfg(test)]
fn branchings(n: u32, lambda: &Partition) -> Vec<Partition> {
    let bounds = lower_row_bounds(lambda.parts(), n);
    let mut rows = vec![Vec::new()];
    for &(lo, hi) in &bounds {
        let mut widened = Vec::new();
        for prefix in rows {
            for v in lo..=hi {
                let mut row: Vec<i64> = prefix.clone();
                row.push(v);
                widened.push(row);
            }
        }
        rows = widened;
    }
    rows.into_iter().map(Partition::new).collect()
}

/// Per-row free-box profile of the shape `(SO(m), SO(n))` under a zero
/// bottom row: for each group from `m` up to `n`, the row width and the
/// length of its prefix of labels not forced to vanish.
///
/// Forcing propagates up-right from the fixed bottom row: a box is
/// forced to zero exactly when its south-west neighbour below is, so the
/// forced boxes of each row form a suffix.
pub(crate) fn free_box_profile(n: u32, m: u32) -> Vec<(u32, usize, usize)> {
    let mut profile = Vec::new();
    let mut free_prefix = 0usize; // bottom row: all boxes fixed
    for g in m..=n {
        let width = (g / 2) as usize;
        if g > m {
            free_prefix = width.min(free_prefix + 1);
        }
        profile.push((g, width, free_prefix));
    }
    profile
}

/// Dimension of the Gelfand-Tsetlin polytope `GT(lambda)` for the chain
/// `SO(n - k) < SO(n)` with `lambda` generic: the number of labels not
/// forced to vanish.
///
/// Computed twice — by the closed form `r (2k - r) - C(k + 1, 2)` for
/// even `n`, `r (2k - r - 1) - C(k, 2)` for odd `n`, and by counting the
/// free boxes of the shape directly — and the two counts are checked
/// against each other.
pub fn gt_polytope_dim(k: i64, n: i64) -> Result<i64> {
    if k < 1 || n < k || n > 2 * k - 1 {
        return Err(Error::Domain(format!(
            "polytope dimension requires k <= n <= 2k - 1, got (k, n) = ({k}, {n})"
        )));
    }
    let r = n / 2;
    let closed = if n % 2 == 0 {
        r * (2 * k - r) - crate::exact::choose2(k + 1)
    } else {
        r * (2 * k - r - 1) - crate::exact::choose2(k)
    };
    let m_eff = (n - k).max(1) as u32;
    let counted: i64 = free_box_profile(n as u32, m_eff)
        .iter()
        .filter(|&&(g, _, _)| g != n as u32 && g != m_eff)
        .map(|&(_, _, free)| free as i64)
        .sum();
    // The bottom row contributes nothing: every box there is fixed.
    if closed != counted {
        return Err(Error::Inconsistency(format!(
            "polytope dimension mismatch at (k, n) = ({k}, {n}): closed form {closed}, box count {counted}"
        )));
    }
    Ok(closed)
}
