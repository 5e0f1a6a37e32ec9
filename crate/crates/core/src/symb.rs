//! Exact multivariate polynomials, alternating polynomials `a_mu`, and
//! symbolic definite integration.
//!
//! The polynomial type is deliberately plain: a map from exponent
//! vectors to rational coefficients over a fixed, ordered variable list.
//! Patterns never need more than a dozen or so variables and exact
//! arithmetic dominates the cost, so there is nothing to gain from a
//! fancier representation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::weights::Partition;

/// Largest rank for which `a_mu` is expanded as a permutation sum.
const MAX_ALT_RANK: usize = 8;

/// Multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored; every exponent vector has length
/// equal to the variable count. Variable order is fixed at construction
/// and is also the print order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u16>, BigRational>,
}

impl MultiPoly {
    pub fn zero(vars: &[String]) -> Self {
        MultiPoly { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], value: BigRational) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !value.is_zero() {
            p.terms.insert(vec![0; vars.len()], value);
        }
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn var(vars: &[String], index: usize) -> Self {
        let mut exps = vec![0u16; vars.len()];
        exps[index] = 1;
        let mut p = MultiPoly::zero(vars);
        p.terms.insert(exps, BigRational::one());
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// The value of a constant polynomial, if it is one.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn assert_same_ring(&self, other: &MultiPoly) {
        assert_eq!(
            self.vars, other.vars,
            "polynomial operands come from different variable rings"
        );
    }

    fn insert_term(&mut self, exps: Vec<u16>, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut out = MultiPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(exps, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, factor: &BigRational) -> MultiPoly {
        if factor.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut out = MultiPoly::one(&self.vars);
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Substitute a constant for one variable.
    pub fn eval_var(&self, var: usize, value: &BigRational) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e[var] as u32;
            let mut exps = e.clone();
            exps[var] = 0;
            let mut coeff = c.clone();
            for _ in 0..k {
                coeff *= value;
            }
            out.insert_term(exps, coeff);
        }
        out
    }

    /// Evaluate at a full point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len(), "evaluation point has wrong arity");
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }

    /// Relabel variables: exponent of variable `i` moves to `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.vars.len());
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut exps = vec![0u16; e.len()];
            for (i, &k) in e.iter().enumerate() {
                exps[perm[i]] = k;
            }
            out.insert_term(exps, c.clone());
        }
        out
    }

    /// Project onto the first `keep` variables; errors if any discarded
    /// variable still occurs.
    pub fn restrict(&self, keep: usize) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(&self.vars[..keep.min(self.vars.len())]);
        for (e, c) in &self.terms {
            if e[keep..].iter().any(|&x| x != 0) {
                return Err(Error::Domain(format!(
                    "polynomial still involves a variable past index {keep}"
                )));
            }
            out.terms.insert(e[..keep].to_vec(), c.clone());
        }
        Ok(out)
    }

    fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] != 0)
    }

    /// Definite integral in one variable between polynomial bounds that
    /// must not involve the integration variable.
    pub fn integrate(&self, var: usize, lower: &MultiPoly, upper: &MultiPoly) -> Result<MultiPoly> {
        self.assert_same_ring(lower);
        self.assert_same_ring(upper);
        if lower.involves(var) || upper.involves(var) {
            return Err(Error::Domain(format!(
                "integration bounds involve the integration variable {}",
                self.vars[var]
            )));
        }
        let max_exp = self.terms.keys().map(|e| e[var]).max().unwrap_or(0) as usize;
        // Powers of the bounds, computed once up to the highest need.
        let mut upper_pows = Vec::with_capacity(max_exp + 2);
        let mut lower_pows = Vec::with_capacity(max_exp + 2);
        upper_pows.push(MultiPoly::one(&self.vars));
        lower_pows.push(MultiPoly::one(&self.vars));
        for k in 1..=max_exp + 1 {
            upper_pows.push(upper_pows[k - 1].mul(upper));
            lower_pows.push(lower_pows[k - 1].mul(lower));
        }
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut rest = e.clone();
            rest[var] = 0;
            let coeff = c / BigRational::from_integer(BigInt::from(k as u64 + 1));
            let diff = upper_pows[k + 1].sub(&lower_pows[k + 1]);
            for (de, dc) in &diff.terms {
                let exps: Vec<u16> = rest.iter().zip(de).map(|(a, b)| a + b).collect();
                out.insert_term(exps, &coeff * dc);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical graded-lexicographic print order: higher total degree
    /// first, then lexicographically larger exponent vectors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Vec<u16>, &BigRational)> = self.terms.iter().collect();
        ordered.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().map(|&x| x as u32).sum();
            let db: u32 = eb.iter().map(|&x| x as u32).sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        for (i, (exps, coeff)) in ordered.into_iter().enumerate() {
            let negative = coeff.is_negative();
            let mag = coeff.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let monomial: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        self.vars[j].clone()
                    } else {
                        format!("{}^{}", self.vars[j], k)
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{mag}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Default variable names `L1, ..., Lr` for weight coordinates.
pub fn weight_vars(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("L{i}")).collect()
}

/// The alternating polynomial `a_mu = det[ L_j ^ (mu_i + r - i) ]`,
/// expanded as a signed permutation sum. The exponents are strictly
/// decreasing, so the `r!` monomials are distinct and every coefficient
/// is plus or minus one.
pub fn alt_poly(mu: &Partition, r: usize) -> Result<MultiPoly> {
    alt_poly_in(&weight_vars(r), &(0..r).collect::<Vec<_>>(), mu)
}

/// `a_mu` over an arbitrary ring, with the `j`-th matrix column mapped
/// to variable `var_indices[j]`.
pub fn alt_poly_in(vars: &[String], var_indices: &[usize], mu: &Partition) -> Result<MultiPoly> {
    let r = var_indices.len();
    if mu.len() != r {
        return Err(Error::Domain(format!(
            "partition {mu} has length {}, expected {r}",
            mu.len()
        )));
    }
    if !mu.is_genuine() {
        return Err(Error::Domain(format!("{mu} is not a genuine partition")));
    }
    if r > MAX_ALT_RANK {
        return Err(Error::SizeLimit(format!(
            "alternating polynomial expansion capped at rank {MAX_ALT_RANK}, got {r}"
        )));
    }
    let exps: Vec<u16> = (0..r).map(|i| (mu.part(i) + (r - 1 - i) as i64) as u16).collect();
    let mut out = MultiPoly::zero(vars);
    let mut perm: Vec<usize> = (0..r).collect();
    permutations(&mut perm, 0, &mut |sigma, sign| {
        // Row i contributes L_{sigma(i)} ^ exps[i].
        let mut term = vec![0u16; vars.len()];
        for (i, &j) in sigma.iter().enumerate() {
            term[var_indices[j]] = exps[i];
        }
        let coeff = if sign { -BigRational::one() } else { BigRational::one() };
        out.insert_term(term, coeff);
    });
    Ok(out)
}

/// Visit all permutations of `perm[at..]`, reporting odd/even parity.
fn permutations(perm: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize], bool)) {
    fn rec(perm: &mut Vec<usize>, at: usize, odd: bool, visit: &mut impl FnMut(&[usize], bool)) {
        if at + 1 >= perm.len() {
            visit(perm, odd);
            return;
        }
        for i in at..perm.len() {
            perm.swap(at, i);
            rec(perm, at + 1, odd ^ (i != at), visit);
            perm.swap(at, i);
        }
    }
    if perm.is_empty() {
        visit(perm, false);
        return;
    }
    rec(perm, at, false, visit);
}

/// Iterated integral of `a_pi(mu_1, ..., mu_r)` with `mu_i` running over
/// `[lambda_{i+1}, lambda_i]`, in closed form: the result is
/// `scalar * a_{(pi, 0)}(lambda_1, ..., lambda_{r+1})` with
/// `scalar = 1 / prod_j (pi_j + r - j + 1)`.
pub fn integral_alternating(pi: &Partition, r: usize) -> Result<(BigRational, Partition)> {
    if pi.len() != r || !pi.is_genuine() {
        return Err(Error::Domain(format!(
            "integral_alternating requires a genuine partition of length {r}, got {pi}"
        )));
    }
    let mut denom = BigInt::one();
    for j in 0..r {
        denom *= BigInt::from(pi.part(j) + (r - j) as i64);
    }
    Ok((
        BigRational::new(BigInt::one(), denom),
        pi.extend_zero(),
    ))
}

/// Exact value of the integral of `a_mu * a_nu` over the simplex
/// `conv{0, e_1, ..., e_r} = { lambda_i >= 0, sum lambda_i <= 1 }`:
/// `r! / (r^2 + |mu| + |nu|)! * det[ (nu_i + mu_j + 2r - i - j)! ]`.
pub fn integral_product_simplex(mu: &Partition, nu: &Partition, r: usize) -> Result<BigRational> {
    if mu.len() != r || nu.len() != r {
        return Err(Error::Domain(format!(
            "integral_product_simplex requires both partitions to have length {r}, got {mu} and {nu}"
        )));
    }
    if !mu.is_genuine() || !nu.is_genuine() {
        return Err(Error::Domain("partitions must be weakly decreasing and nonnegative".into()));
    }
    let mut entries = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            let arg = nu.part(i) + mu.part(j) + 2 * r as i64 - (i + 1) as i64 - (j + 1) as i64;
            entries.push(factorial(arg as u64));
        }
    }
    let det = crate::exact::Matrix::new(r, r, entries)?.det()?;
    let weight = (r * r) as i64 + mu.sum() + nu.sum();
    Ok(BigRational::new(factorial(r as u64) * det, factorial(weight as u64)))
}
