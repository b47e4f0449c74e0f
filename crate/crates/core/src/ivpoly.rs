//! Integer-valued polynomials in the binomial basis `C(T+i, i)`, and
//! Macaulay's numerical functions.
//!
//! A polynomial `b_d·C(T+d,d) + … + b_1·C(T+1,1) + b_0` is stored as its
//! coefficient list `b_0..b_d`. Every integer combination of the basis is
//! integer-valued, so arithmetic never leaves ℤ. Binomials with a negative
//! upper argument are read as polynomials (falling factorial over `k!`).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::bigser;

use crate::error::{Error, Result};

/// `x(x-1)…(x-k+1)/k!` for any integer `x`.
pub fn binomial(x: &BigInt, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= x - BigInt::from(i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k)` over the naturals.
pub fn binomial_nat(n: &BigUint, k: u32) -> BigUint {
    let k_big = BigUint::from(k);
    if *n < k_big {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - BigUint::from(i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegerValuedPoly {
    #[serde(serialize_with = "bigser::seq", deserialize_with = "bigser::de_seq")]
    coeffs: Vec<BigInt>,
}

impl IntegerValuedPoly {
    pub fn zero() -> Self {
        IntegerValuedPoly { coeffs: Vec::new() }
    }

    pub fn constant(k: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![k.into()])
    }

    /// The basis element `C(T+i, i)`.
    pub fn basis(i: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); i + 1];
        coeffs[i] = BigInt::one();
        IntegerValuedPoly { coeffs }
    }

    /// Coefficients `b_0..b_d`; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerValuedPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `C(T+i, i)`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn evaluate(&self, s: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_zero())
            .map(|(i, b)| b * binomial(&(s + BigInt::from(i)), i as u32))
            .sum()
    }

    pub fn evaluate_at(&self, s: i64) -> BigInt {
        self.evaluate(&BigInt::from(s))
    }

    /// Rebuilds the polynomial through `values` sampled at `start, start+1, …`.
    ///
    /// The degree is at most `values.len() - 1`. Coefficients are read off
    /// as `b_i = (∇^i p)(-1)` with the backward difference `∇`.
    pub fn from_samples(start: &BigInt, values: &[BigInt]) -> Self {
        if values.is_empty() {
            return Self::zero();
        }
        // Newton form at `start`.
        let mut newton: Vec<BigInt> = Vec::with_capacity(values.len());
        let mut row = values.to_vec();
        while !row.is_empty() {
            newton.push(row[0].clone());
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        let newton_eval = |x: &BigInt| -> BigInt {
            let offset = x - start;
            newton
                .iter()
                .enumerate()
                .map(|(k, c)| c * binomial(&offset, k as u32))
                .sum()
        };
        let d = values.len() - 1;
        // p(-1), p(-2), …, p(-1-d)
        let tail: Vec<BigInt> = (0..=d as i64)
            .map(|k| newton_eval(&BigInt::from(-1 - k)))
            .collect();
        let coeffs = (0..=d)
            .map(|i| {
                (0..=i)
                    .map(|k| {
                        let c = binomial(&BigInt::from(i), k as u32) * &tail[k];
                        if k % 2 == 0 {
                            c
                        } else {
                            -c
                        }
                    })
                    .sum()
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// `T ↦ p(T + k)`.
    pub fn shift(&self, k: &BigInt) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let samples: Vec<BigInt> = (0..self.coeffs.len() as i64)
            .map(|s| self.evaluate(&(k + BigInt::from(s))))
            .collect();
        Self::from_samples(&BigInt::zero(), &samples)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Eventual pointwise comparison: `p < q` iff `p(s) < q(s)` for all `s ≫ 0`.
    /// Equivalent to lex order on `(b_d, …, b_0)` padded to a common degree.
    pub fn dominance_cmp(&self, other: &Self) -> Ordering {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .rev()
            .map(|i| self.coeff(i).cmp(&other.coeff(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// A point from which the sign of `self - other` never changes again on ℕ.
    ///
    /// With `r = self - other` of degree `d ≥ 1`, every lower basis element is
    /// bounded by `C(s+d-1, d-1)` on ℕ, so `r(s)` has the sign of `b_d` once
    /// `s ≥ d·Σ_{i<d}|b_i|`.
    pub fn crossover_bound(&self, other: &Self) -> BigUint {
        let r = self - other;
        if r.degree() < 1 {
            return BigUint::zero();
        }
        let d = r.coeffs.len() - 1;
        let tail: BigInt = r.coeffs[..d].iter().map(|b| b.abs()).sum();
        (tail * BigInt::from(d)).to_biguint().unwrap_or_default()
    }
}

impl Add for &IntegerValuedPoly {
    type Output = IntegerValuedPoly;

    fn add(self, rhs: Self) -> IntegerValuedPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntegerValuedPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntegerValuedPoly {
    type Output = IntegerValuedPoly;

    fn sub(self, rhs: Self) -> IntegerValuedPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntegerValuedPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Add for IntegerValuedPoly {
    type Output = IntegerValuedPoly;

    fn add(self, rhs: Self) -> IntegerValuedPoly {
        &self + &rhs
    }
}

impl Sub for IntegerValuedPoly {
    type Output = IntegerValuedPoly;

    fn sub(self, rhs: Self) -> IntegerValuedPoly {
        &self - &rhs
    }
}

impl Neg for &IntegerValuedPoly {
    type Output = IntegerValuedPoly;

    fn neg(self) -> IntegerValuedPoly {
        IntegerValuedPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntegerValuedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, b) in self.coeffs.iter().enumerate().rev() {
            if b.is_zero() {
                continue;
            }
            let negative = b.sign() == Sign::Minus;
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = b.magnitude();
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "C(T+{i},{i})")?;
            }
        }
        Ok(())
    }
}

/// The `d`-th Macaulay representation `a = C(a_d,d) + … + C(a_1,1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MacaulayRep {
    pub d: u32,
    /// `a_d, a_{d-1}, …, a_1`, strictly decreasing.
    #[serde(serialize_with = "bigser::seq")]
    pub coeffs: Vec<BigUint>,
}

impl MacaulayRep {
    pub fn value(&self) -> BigUint {
        self.coeffs
            .iter()
            .zip((1..=self.d).rev())
            .map(|(a, i)| binomial_nat(a, i))
            .sum()
    }
}

/// Largest `x` with `C(x, k) ≤ bound`, for `k ≥ 1`.
fn max_binomial_below(bound: &BigUint, k: u32) -> BigUint {
    if k == 1 {
        return bound.clone();
    }
    // C(k-1, k) = 0 ≤ bound always holds
    let mut lo = BigUint::from(k - 1);
    let mut hi = BigUint::from(k);
    while binomial_nat(&hi, k) <= *bound {
        lo = hi.clone();
        hi <<= 1;
    }
    // invariant: C(lo,k) ≤ bound < C(hi,k)
    while &hi - &lo > BigUint::one() {
        let mid: BigUint = (&lo + &hi) >> 1;
        if binomial_nat(&mid, k) <= *bound {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

pub fn macaulay_rep(a: &BigUint, d: u32) -> Result<MacaulayRep> {
    if a.is_zero() {
        return Err(Error::invalid("Macaulay representation needs a ≥ 1"));
    }
    if d == 0 {
        return Err(Error::invalid("Macaulay representation needs d ≥ 1"));
    }
    let mut rest = a.clone();
    let mut coeffs = Vec::with_capacity(d as usize);
    for i in (1..=d).rev() {
        let x = max_binomial_below(&rest, i);
        rest -= binomial_nat(&x, i);
        coeffs.push(x);
    }
    debug_assert!(rest.is_zero());
    Ok(MacaulayRep { d, coeffs })
}

/// `a^⟨d⟩`: every coefficient and index of the `d`-th representation bumped by one.
pub fn macaulay_next(a: &BigUint, d: u32) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::invalid("a^<d> needs d ≥ 1"));
    }
    if a.is_zero() {
        return Ok(BigUint::zero());
    }
    let rep = macaulay_rep(a, d)?;
    Ok(rep
        .coeffs
        .iter()
        .zip((1..=d).rev())
        .map(|(x, i)| binomial_nat(&(x + 1u32), i + 1))
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OSequenceViolation {
    /// `f(0) ≠ 1`.
    InitialValue,
    /// `f(1) > m`.
    TooManyVariables,
    /// `f(n+1) > f(n)^⟨n⟩`.
    Growth { n: usize },
}

impl OSequenceViolation {
    pub fn index(&self) -> usize {
        match self {
            OSequenceViolation::InitialValue => 0,
            OSequenceViolation::TooManyVariables => 1,
            OSequenceViolation::Growth { n } => *n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OSequenceReport {
    pub valid: bool,
    pub violation: Option<OSequenceViolation>,
    /// Whether `f(1) = m` holds exactly (absent when only `f(0)` was supplied).
    pub first_equals_m: Option<bool>,
}

/// Checks Macaulay's growth condition on a finite window `f(0..)`.
///
/// `f(1)` is only required to be at most `m`; ideals extended from fewer
/// variables have `f(1) < m`. Whether equality holds is reported separately.
pub fn is_osequence(values: &[BigUint], m: usize) -> Result<OSequenceReport> {
    if values.is_empty() {
        return Err(Error::invalid("empty sequence"));
    }
    if m == 0 {
        return Err(Error::invalid("need at least one variable"));
    }
    let first_equals_m = values.get(1).map(|v| v.to_usize() == Some(m));
    let violation = if !values[0].is_one() {
        Some(OSequenceViolation::InitialValue)
    } else if values.get(1).is_some_and(|v| *v > BigUint::from(m)) {
        Some(OSequenceViolation::TooManyVariables)
    } else {
        let mut found = None;
        for n in 1..values.len().saturating_sub(1) {
            if values[n + 1] > macaulay_next(&values[n], n as u32)? {
                found = Some(OSequenceViolation::Growth { n });
                break;
            }
        }
        found
    };
    Ok(OSequenceReport {
        valid: violation.is_none(),
        violation,
        first_equals_m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn nat(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn p(c: &[i64]) -> IntegerValuedPoly {
        IntegerValuedPoly::from_i64s(c)
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(&big(5), 2), big(10));
        assert_eq!(binomial(&big(-1), 0), big(1));
        assert_eq!(binomial(&big(-1), 3), big(-1));
        assert_eq!(binomial(&big(-2), 2), big(3));
        assert_eq!(binomial(&big(1), 2), big(0));
        assert_eq!(binomial_nat(&nat(3), 5), nat(0));
    }

    #[test]
    fn samples_examples() {
        let zero = big(0);
        let s = |v: &[i64]| v.iter().map(|&x| big(x)).collect::<Vec<_>>();
        assert_eq!(IntegerValuedPoly::from_samples(&zero, &s(&[1, 1, 1])), p(&[1]));
        assert_eq!(IntegerValuedPoly::from_samples(&zero, &s(&[1, 2, 3])), p(&[0, 1]));
        assert_eq!(IntegerValuedPoly::from_samples(&zero, &s(&[1, 3, 6])), p(&[0, 0, 1]));
        // samples at -3.. of C(T+2,2) - 4
        let q = p(&[-4, 0, 1]);
        let vals: Vec<BigInt> = (-3..1).map(|t| q.evaluate_at(t)).collect();
        assert_eq!(IntegerValuedPoly::from_samples(&big(-3), &vals), q);
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(IntegerValuedPoly::basis(2).evaluate_at(3), big(10));
        assert_eq!(IntegerValuedPoly::zero().evaluate_at(17), big(0));
        assert_eq!(IntegerValuedPoly::basis(1).evaluate_at(-1), big(0));
    }

    #[test]
    fn arithmetic_examples() {
        let a = p(&[3, -1, 2]);
        assert_eq!(&a + &IntegerValuedPoly::zero(), a);
        assert!((&a - &a).is_zero());
        assert_eq!(IntegerValuedPoly::basis(1) + IntegerValuedPoly::basis(0), p(&[1, 1]));
        assert_eq!(a.scale(&big(-2)), p(&[-6, 2, -4]));
        assert_eq!(IntegerValuedPoly::zero().degree(), -1);
    }

    #[test]
    fn shift_examples() {
        let a = p(&[5, 0, 3]);
        assert_eq!(a.shift(&big(0)), a);
        assert_eq!(IntegerValuedPoly::basis(1).shift(&big(2)), p(&[2, 1]));
        // C(T+3,2) = C(T+2,2) + C(T+2,1) = C(T+2,2) + C(T+1,1) + 1
        assert_eq!(IntegerValuedPoly::basis(2).shift(&big(1)), p(&[1, 1, 1]));
        let shifted = a.shift(&big(-4));
        for s in -3..5 {
            assert_eq!(shifted.evaluate_at(s), a.evaluate_at(s - 4));
        }
    }

    #[test]
    fn dominance_examples() {
        let a = p(&[1, 4, 2]);
        assert_eq!(a.dominance_cmp(&a), Ordering::Equal);
        assert_eq!(p(&[5]).dominance_cmp(&IntegerValuedPoly::basis(1)), Ordering::Less);
        assert_eq!(p(&[3, 1]).dominance_cmp(&p(&[4, 1])), Ordering::Less);
        assert_eq!(p(&[0, -1]).dominance_cmp(&IntegerValuedPoly::zero()), Ordering::Less);
        assert!(p(&[5]).evaluate_at(10) < IntegerValuedPoly::basis(1).evaluate_at(10));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, 3, 1]).to_string(), "C(T+2,2) + 3*C(T+1,1) - 2");
        assert_eq!(p(&[0, -1]).to_string(), "-C(T+1,1)");
        assert_eq!(IntegerValuedPoly::zero().to_string(), "0");
        assert_eq!(serde_json::to_string(&p(&[-2, 3, 1])).unwrap(), "[-2,3,1]");
    }

    #[test]
    fn macaulay_examples() {
        let rep = |a: u64, d: u32| -> Vec<u64> {
            macaulay_rep(&nat(a), d)
                .unwrap()
                .coeffs
                .iter()
                .map(|x| x.to_u64().unwrap())
                .collect()
        };
        assert_eq!(rep(1, 2), vec![2, 0]);
        assert_eq!(rep(5, 2), vec![3, 2]);
        assert_eq!(rep(37, 1), vec![37]);
        assert_eq!(rep(1, 3), vec![3, 1, 0]);
        assert!(macaulay_rep(&nat(0), 2).is_err());
        assert!(macaulay_rep(&nat(3), 0).is_err());

        assert_eq!(macaulay_next(&nat(0), 4).unwrap(), nat(0));
        // rep (3, 2) → C(4,3) + C(3,2)
        assert_eq!(macaulay_next(&nat(5), 2).unwrap(), nat(7));
        assert_eq!(macaulay_next(&nat(3), 1).unwrap(), nat(6));
        assert_eq!(macaulay_next(&nat(1), 7).unwrap(), nat(1));
    }

    #[test]
    fn osequence_examples() {
        let seq = |v: &[u64]| v.iter().map(|&x| nat(x)).collect::<Vec<_>>();
        // zero ideal in three variables: C(n+2, 2)
        let free: Vec<u64> = (0..10).map(|n| (n + 1) * (n + 2) / 2).collect();
        let r = is_osequence(&seq(&free), 3).unwrap();
        assert!(r.valid);
        assert_eq!(r.first_equals_m, Some(true));

        let r = is_osequence(&seq(&[1, 2, 5]), 2).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violation, Some(OSequenceViolation::Growth { n: 1 }));
        assert_eq!(r.violation.unwrap().index(), 1);

        let r = is_osequence(&seq(&[1, 1, 1, 1]), 1).unwrap();
        assert!(r.valid);

        let r = is_osequence(&seq(&[1, 1, 1]), 3).unwrap();
        assert!(r.valid);
        assert_eq!(r.first_equals_m, Some(false));

        assert_eq!(
            is_osequence(&seq(&[2, 1]), 2).unwrap().violation,
            Some(OSequenceViolation::InitialValue)
        );
        assert_eq!(
            is_osequence(&seq(&[1, 4]), 3).unwrap().violation,
            Some(OSequenceViolation::TooManyVariables)
        );
        assert!(is_osequence(&[], 2).is_err());
    }
}
