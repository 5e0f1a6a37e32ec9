//! Euclidean volumes of Gelfand-Tsetlin polytopes for the chain
//! `SO(n - k) < SO(n)`, in two independent ways: a closed form
//! `scalar * a_Omega(lambda)` and direct nested symbolic integration of
//! the pattern inequalities.
//!
//! The closed form is valid on the chamber
//! `lambda_1 >= lambda_2 >= ... >= lambda_r >= 0`. (For even `n` the
//! polytope itself only depends on `|lambda_r|`, while the alternating
//! polynomial does not, so the formula is read on that chamber.)

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{factorial, pow2, Matrix};
use crate::gt::free_box_profile;
use crate::symb::{alt_poly, weight_vars, MultiPoly};
use crate::weights::{omega_closed, Partition};

/// Hard cap on the number of integration variables accepted by
/// [`vol_symbolic`].
const MAX_FREE_VARIABLES: usize = 16;

/// A polytope volume in the form `scalar * a_omega(lambda_1..lambda_r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeFormula {
    pub scalar: BigRational,
    pub omega: Partition,
    pub rank: usize,
}

impl VolumeFormula {
    /// Expand into an explicit polynomial in `L1, ..., Lr`.
    pub fn expand(&self) -> Result<MultiPoly> {
        Ok(alt_poly(&self.omega, self.rank)?.scale(&self.scalar))
    }

    /// Evaluate at a point without expanding: the alternating polynomial
    /// is computed as a numeric determinant, so this works at any rank.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.rank {
            return Err(Error::Domain(format!(
                "expected {} coordinates, got {}",
                self.rank,
                point.len()
            )));
        }
        let r = self.rank;
        let mut entries = Vec::with_capacity(r * r);
        for i in 0..r {
            let exp = (self.omega.part(i) + (r - 1 - i) as i64) as u32;
            for x in point {
                let mut pw = BigRational::one();
                for _ in 0..exp {
                    pw *= x;
                }
                entries.push(pw);
            }
        }
        Ok(&self.scalar * Matrix::new(r, r, entries)?.det()?)
    }

    /// Human-readable `scalar * a_omega` form.
    pub fn describe(&self) -> String {
        format!("{} * a_{}", self.scalar, self.omega)
    }
}

fn check_regime(k: i64, n: i64) -> Result<()> {
    if k + 1 > n || n > 2 * k - 1 {
        return Err(Error::Domain(format!(
            "polytope volume requires k + 1 <= n <= 2k - 1, got (k, n) = ({k}, {n})"
        )));
    }
    Ok(())
}

/// Closed-form volume of the pattern polytope for `SO(n - k) < SO(n)`:
/// `2^(k - r) / prod_j ((Omega_j + r - j)!) * a_Omega(lambda)`.
pub fn vol_closed(k: i64, n: i64) -> Result<VolumeFormula> {
    check_regime(k, n)?;
    let r = (n / 2) as usize;
    let omega = omega_closed(k, n)?;
    let mut denom = BigInt::one();
    for j in 0..r {
        denom *= factorial((omega.part(j) + (r - 1 - j) as i64) as u64);
    }
    Ok(VolumeFormula {
        scalar: BigRational::new(pow2((k - n / 2) as u64), denom),
        omega,
        rank: r,
    })
}

/// Closed-form volume of the full-chain polytope for `SO(1) < SO(n)`,
/// which controls `dim V_lambda`: for even `n = 2r` this is
/// `2^(r-1) / prod (2(r-j))! * a_(r-1, ..., 0)`, for odd `n = 2r + 1` it
/// is `2^r / prod (2(r-j)+1)! * a_(r, ..., 1)`.
pub fn vol_so_n(n: i64) -> Result<VolumeFormula> {
    if n < 2 {
        return Err(Error::Domain(format!("vol_so_n requires n >= 2, got {n}")));
    }
    let r = (n / 2) as usize;
    let mut denom = BigInt::one();
    let (exp, omega) = if n % 2 == 0 {
        for j in 1..=r {
            denom *= factorial(2 * (r - j) as u64);
        }
        (r as u64 - 1, Partition::new((0..r).map(|i| (r - 1 - i) as i64).collect()))
    } else {
        for j in 1..=r {
            denom *= factorial(2 * (r - j) as u64 + 1);
        }
        (r as u64, Partition::new((0..r).map(|i| (r - i) as i64).collect()))
    };
    Ok(VolumeFormula { scalar: BigRational::new(pow2(exp), denom), omega, rank: r })
}

/// Volume of the pattern polytope by direct nested integration.
///
/// Builds the staircase shape for `SO(n - k) < SO(n)`, drops the labels
/// forced to vanish by the zero bottom row, and integrates the free
/// labels bottom row first, rightmost box first. Each variable ranges
/// between its north-west and north-east neighbours in the row above;
/// the rightmost box of an even-group row ranges symmetrically about
/// zero, which is folded to `[0, upper]` with a factor of two. The
/// number of doubled integrals must come out to exactly `k - r`, and
/// this is checked.
pub fn vol_symbolic(k: i64, n: i64) -> Result<MultiPoly> {
    check_regime(k, n)?;
    let m = (n - k) as u32;
    let r = (n / 2) as usize;
    let profile = free_box_profile(n as u32, m);
    let row_info = |g: u32| -> (usize, usize) {
        let (_, width, free) = profile[(g - m) as usize];
        (width, free)
    };

    let free_total: usize = (m + 1..n as u32).map(|g| row_info(g).1).sum();
    if free_total > MAX_FREE_VARIABLES {
        return Err(Error::SizeLimit(format!(
            "{free_total} free labels exceeds the symbolic integration cap of {MAX_FREE_VARIABLES}"
        )));
    }

    // Ring: lambda variables first, then one variable per free box.
    let mut names = weight_vars(r);
    let mut var_of_box = std::collections::HashMap::new();
    for g in (m + 1..n as u32).rev() {
        let (_, free) = row_info(g);
        for pos in 0..free {
            var_of_box.insert((g, pos), names.len());
            names.push(format!("u{g}_{}", pos + 1));
        }
    }

    // Value of the box at (group, position): a lambda variable in the
    // top row, a free variable, or the constant zero if forced.
    let box_value = |g: u32, pos: usize| -> MultiPoly {
        if g == n as u32 {
            return MultiPoly::var(&names, pos);
        }
        match var_of_box.get(&(g, pos)) {
            Some(&idx) => MultiPoly::var(&names, idx),
            None => MultiPoly::zero(&names),
        }
    };

    let mut result = MultiPoly::one(&names);
    let mut doubled = 0i64;
    for g in m + 1..n as u32 {
        let (_, free) = row_info(g);
        let above_width = ((g + 1) / 2) as usize;
        for pos in (0..free).rev() {
            let upper = box_value(g + 1, pos);
            let var = var_of_box[&(g, pos)];
            if pos + 1 < above_width {
                let lower = box_value(g + 1, pos + 1);
                result = result.integrate(var, &lower, &upper)?;
            } else {
                // No north-east neighbour: symmetric range, folded.
                debug_assert_eq!(g % 2, 0);
                let lower = MultiPoly::zero(&names);
                result = result
                    .integrate(var, &lower, &upper)?
                    .scale(&BigRational::from_integer(BigInt::from(2)));
                doubled += 1;
            }
        }
    }
    if doubled != k - n / 2 {
        return Err(Error::Inconsistency(format!(
            "expected {} doubled integrals for (k, n) = ({k}, {n}), performed {doubled}",
            k - n / 2
        )));
    }
    result.restrict(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::gt::gt_polytope_dim;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn closed_form_examples() {
        let v = vol_closed(4, 7).unwrap();
        assert_eq!(v.scalar, rat(1, 6));
        assert_eq!(v.omega, p(&[1, 1, 1]));

        let v = vol_closed(3, 5).unwrap();
        assert_eq!(v.scalar, rat(1, 1));
        assert_eq!(v.omega, p(&[1, 1]));

        // At the seam n = 2k - 1 the scalar is 2 / prod_{j<k} j!.
        for k in 2..=8i64 {
            let v = vol_closed(k, 2 * k - 1).unwrap();
            let mut denom = BigInt::one();
            for j in 1..k {
                denom *= factorial(j as u64);
            }
            assert_eq!(v.scalar, BigRational::new(BigInt::from(2), denom));
            assert_eq!(v.omega, p(&vec![1; (k - 1) as usize]));
        }

        assert!(vol_closed(2, 4).is_err());
        assert!(vol_closed(3, 3).is_err());
    }

    #[test]
    fn so_n_volumes() {
        let v = vol_so_n(4).unwrap();
        assert_eq!(v.scalar, rat(1, 1));
        assert_eq!(v.omega, p(&[1, 0]));

        let v = vol_so_n(3).unwrap();
        assert_eq!(v.scalar, rat(2, 1));
        assert_eq!(v.omega, p(&[1]));

        assert!(vol_so_n(1).is_err());

        for n in 3..=9i64 {
            assert_eq!(vol_so_n(n).unwrap(), vol_closed(n - 1, n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn symbolic_small_patterns() {
        // Single free box integrated symmetrically: volume 2 * L1.
        let vars = weight_vars(1);
        let expected = MultiPoly::var(&vars, 0).scale(&rat(2, 1));
        assert_eq!(vol_symbolic(2, 3).unwrap(), expected);

        // Two nested integrals: a_(1,1) = L1 L2 (L1 - L2).
        let expected = alt_poly(&p(&[1, 1]), 2).unwrap();
        assert_eq!(vol_symbolic(3, 5).unwrap(), expected);
    }

    #[test]
    fn symbolic_matches_worked_product() {
        // (1/6)(L1-L2)(L2-L3)(L1-L3) L1 L2 L3, assembled independently.
        let vars = weight_vars(3);
        let v = |i| MultiPoly::var(&vars, i);
        let product = v(0)
            .sub(&v(1))
            .mul(&v(1).sub(&v(2)))
            .mul(&v(0).sub(&v(2)))
            .mul(&v(0))
            .mul(&v(1))
            .mul(&v(2))
            .scale(&rat(1, 6));
        assert_eq!(vol_symbolic(4, 7).unwrap(), product);
    }

    #[test]
    fn symbolic_matches_closed_form() {
        for k in 2..=6i64 {
            for n in k + 1..=2 * k - 1 {
                if gt_polytope_dim(k, n).unwrap() > 10 {
                    continue;
                }
                let closed = vol_closed(k, n).unwrap().expand().unwrap();
                assert_eq!(vol_symbolic(k, n).unwrap(), closed, "(k, n) = ({k}, {n})");
            }
        }
    }

    #[test]
    fn symbolic_degree_matches_polytope_dimension() {
        for (k, n) in [(2, 3), (3, 4), (3, 5), (4, 5), (4, 6), (4, 7), (5, 7)] {
            assert_eq!(
                vol_symbolic(k, n).unwrap().total_degree() as i64,
                gt_polytope_dim(k, n).unwrap(),
                "(k, n) = ({k}, {n})"
            );
        }
    }

    #[test]
    fn closed_form_positive_on_strict_chamber() {
        for k in 2..=8i64 {
            for n in k + 1..=2 * k - 1 {
                let v = vol_closed(k, n).unwrap();
                let point: Vec<BigRational> =
                    (0..v.rank).map(|i| rat((v.rank - i) as i64, 1)).collect();
                let value = v.eval(&point).unwrap();
                assert!(value > BigRational::from_integer(BigInt::from(0)), "(k, n) = ({k}, {n})");
            }
        }
    }

    #[test]
    fn eval_agrees_with_expansion() {
        let v = vol_closed(4, 7).unwrap();
        let point = [rat(3, 1), rat(2, 1), rat(1, 1)];
        assert_eq!(v.eval(&point).unwrap(), rat(2, 1));
        assert_eq!(v.expand().unwrap().eval(&point), rat(2, 1));
    }
}
