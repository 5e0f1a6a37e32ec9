//! Arbitrary-precision integer and rational arithmetic: factorials,
//! binomial coefficients and exact determinants.
//!
//! Degrees and the matrices they come from outgrow 64-bit integers
//! quickly (the degree of `St(10, 10)` is 29989282816 and the factorial
//! matrices behind the integral route are far larger), so everything
//! here runs on [`BigInt`] / [`BigRational`]. Rationals are kept in
//! lowest terms with a positive denominator by `num-rational` itself.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
///
/// Returning zero instead of erroring lets lattice-path matrices treat
/// unreachable endpoint pairs as "zero paths" with no special casing.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Dense row-major matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(self.rows)
    }
}

impl Matrix<BigInt> {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        Matrix { rows: n, cols: n, entries }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every division in the Bareiss recurrence is exact over the
    /// integers, so intermediate entries stay the size of minors
    /// instead of blowing up into rationals.
    pub fn det(&self) -> Result<BigInt> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for p in 0..n - 1 {
            if m.get(p, p).is_zero() {
                match (p + 1..n).find(|&q| !m.get(q, p).is_zero()) {
                    Some(q) => {
                        m.swap_rows(p, q);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in p + 1..n {
                for j in p + 1..n {
                    let num = m.get(p, p) * m.get(i, j) - m.get(i, p) * m.get(p, j);
                    m.entries[i * n + j] = num / &prev;
                }
                m.entries[i * n + p] = BigInt::zero();
            }
            prev = m.get(p, p).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if sign < 0 { -d } else { d })
    }

    pub fn to_rational(&self) -> Matrix<BigRational> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|e| BigRational::from_integer(e.clone()))
                .collect(),
        }
    }
}

impl Matrix<BigRational> {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigRational::one();
        }
        Matrix { rows: n, cols: n, entries }
    }

    /// Exact determinant.
    ///
    /// Integer matrices are routed through Bareiss elimination; anything
    /// with a genuine denominator falls back to exact rational Gaussian
    /// elimination.
    pub fn det(&self) -> Result<BigRational> {
        let n = self.require_square()?;
        if self.entries.iter().all(|e| e.is_integer()) {
            let ints = Matrix {
                rows: self.rows,
                cols: self.cols,
                entries: self.entries.iter().map(|e| e.to_integer()).collect(),
            };
            return Ok(BigRational::from_integer(ints.det()?));
        }
        let mut m = self.clone();
        let mut det = BigRational::one();
        for p in 0..n {
            let pivot_row = match (p..n).find(|&q| !m.get(q, p).is_zero()) {
                Some(q) => q,
                None => return Ok(BigRational::zero()),
            };
            if pivot_row != p {
                m.swap_rows(p, pivot_row);
                det = -det;
            }
            let pivot = m.get(p, p).clone();
            det *= &pivot;
            for i in p + 1..n {
                let factor = m.get(i, p) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in p..n {
                    let sub = &factor * m.get(p, j);
                    m.entries[i * n + j] -= sub;
                }
            }
        }
        Ok(det)
    }
}

/// Checked power of two as a big integer.
pub fn pow2(exp: u64) -> BigInt {
    BigInt::one() << exp as usize
}

/// `C(n, 2)` over machine integers, for dimension formulas.
pub fn choose2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}
