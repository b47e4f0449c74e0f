//! Ordinals below ε₀ in hereditary Cantor normal form.
//!
//! An ordinal is a finite sum `ω^γ₁·c₁ + … + ω^γₖ·cₖ` with `γ₁ > … > γₖ`
//! and positive natural coefficients; the exponents are themselves
//! [`CnfOrdinal`]s. Values are canonical on construction, so structural
//! equality is ordinal equality.
//!
//! Only the Hessenberg (natural) operations are provided. They are
//! commutative, associative and strictly monotone in each argument.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One Cantor normal form summand `ω^exponent · coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub exponent: CnfOrdinal,
    pub coefficient: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CnfOrdinal {
    terms: Vec<Term>,
}

impl CnfOrdinal {
    pub fn zero() -> Self {
        CnfOrdinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::natural(1u32)
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    pub fn natural(n: impl Into<BigUint>) -> Self {
        Self::monomial(Self::zero(), n.into())
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: CnfOrdinal) -> Self {
        Self::monomial(exponent, BigUint::one())
    }

    /// `ω^exponent · coefficient`; zero when the coefficient is zero.
    pub fn monomial(exponent: CnfOrdinal, coefficient: BigUint) -> Self {
        if coefficient.is_zero() {
            return Self::zero();
        }
        CnfOrdinal {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds an ordinal from arbitrary `(exponent, coefficient)` pairs,
    /// read as a natural sum: equal exponents merge and zero coefficients drop.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (CnfOrdinal, BigUint)>,
    {
        let mut out: Vec<Term> = terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exponent, coefficient)| Term {
                exponent,
                coefficient,
            })
            .collect();
        out.sort_by(|a, b| b.exponent.cmp(&a.exponent));
        let mut merged: Vec<Term> = Vec::with_capacity(out.len());
        for t in out {
            match merged.last_mut() {
                Some(last) if last.exponent == t.exponent => last.coefficient += t.coefficient,
                _ => merged.push(t),
            }
        }
        CnfOrdinal { terms: merged }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    /// The value as a natural number, if finite.
    pub fn as_natural(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    /// Successor ordinals end in a finite summand.
    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// Hessenberg natural sum: coefficients added exponent-wise.
    pub fn nat_sum(&self, other: &CnfOrdinal) -> CnfOrdinal {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.exponent.cmp(&b.exponent) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(Term {
                        exponent: a.exponent.clone(),
                        coefficient: &a.coefficient + &b.coefficient,
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        CnfOrdinal { terms: out }
    }

    /// Hessenberg natural product, `⊕ ω^(γᵢ⊕δⱼ)·aᵢbⱼ` over all term pairs.
    pub fn nat_prod(&self, other: &CnfOrdinal) -> CnfOrdinal {
        let mut pairs = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                pairs.push((
                    a.exponent.nat_sum(&b.exponent),
                    &a.coefficient * &b.coefficient,
                ));
            }
        }
        CnfOrdinal::from_terms(pairs)
    }

    /// `n`-fold natural product; the empty product is 1.
    pub fn nat_pow(&self, n: u32) -> CnfOrdinal {
        (0..n).fold(CnfOrdinal::one(), |acc, _| acc.nat_prod(self))
    }

    /// Order type of the decreasing sequences in `self` under the
    /// lexicographic ordering.
    pub fn ot_decreasing_sequences(&self) -> CnfOrdinal {
        if let Some(n) = self.as_natural() {
            if n <= BigUint::one() {
                return self.clone();
            }
            let pred = CnfOrdinal::natural(n - 1u32);
            return CnfOrdinal::omega_pow(pred).nat_sum(&CnfOrdinal::one());
        }
        let top = CnfOrdinal::omega_pow(self.clone());
        if self.is_successor() {
            top.nat_sum(&CnfOrdinal::one())
        } else {
            top
        }
    }
}

impl From<u64> for CnfOrdinal {
    fn from(n: u64) -> Self {
        CnfOrdinal::natural(n)
    }
}

impl From<BigUint> for CnfOrdinal {
    fn from(n: BigUint) -> Self {
        CnfOrdinal::natural(n)
    }
}

impl Ord for CnfOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a
                .exponent
                .cmp(&b.exponent)
                .then_with(|| a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for CnfOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CnfOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            f.write_str("w")?;
            if t.exponent != CnfOrdinal::one() {
                match t.exponent.as_natural() {
                    Some(n) => write!(f, "^{n}")?,
                    None if t.exponent == CnfOrdinal::omega() => f.write_str("^w")?,
                    None => write!(f, "^({})", t.exponent)?,
                }
            }
            if !t.coefficient.is_one() {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl FromStr for CnfOrdinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            chars: s.chars().collect(),
            pos: 0,
        };
        p.skip_ws();
        let value = p.sum()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(value)
    }
}

impl Serialize for CnfOrdinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CnfOrdinal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Recursive-descent parser for the `w^(...)*k + ...` text form.
struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: &str) -> Error {
        Error::parse(1, self.pos + 1, message)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<CnfOrdinal> {
        let start = self.pos;
        let mut terms: Vec<Term> = Vec::new();
        loop {
            let at = self.pos;
            let term = self.term()?;
            if let Some(prev) = terms.last() {
                if term.exponent >= prev.exponent {
                    self.pos = at;
                    return Err(self.error("exponents must be strictly decreasing"));
                }
            }
            terms.push(term);
            self.skip_ws();
            if !self.eat('+') {
                break;
            }
            self.skip_ws();
        }
        // a lone `0` is the zero ordinal; `0` as a summand is rejected
        if terms.len() == 1 && terms[0].coefficient.is_zero() {
            return Ok(CnfOrdinal::zero());
        }
        if terms.iter().any(|t| t.coefficient.is_zero()) {
            self.pos = start;
            return Err(self.error("zero summand in a sum"));
        }
        Ok(CnfOrdinal { terms })
    }

    fn term(&mut self) -> Result<Term> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Term {
                exponent: CnfOrdinal::zero(),
                coefficient: self.natural()?,
            }),
            Some('w') | Some('ω') => {
                let exponent = self.omega_power()?;
                let coefficient = if self.eat('*') {
                    let at = self.pos;
                    let c = self.natural()?;
                    if c.is_zero() {
                        self.pos = at;
                        return Err(self.error("coefficient must be positive"));
                    }
                    c
                } else {
                    BigUint::one()
                };
                Ok(Term {
                    exponent,
                    coefficient,
                })
            }
            _ => Err(self.error("expected a natural number or `w`")),
        }
    }

    /// Parses `w` or `w^atom` and returns the exponent.
    fn omega_power(&mut self) -> Result<CnfOrdinal> {
        self.pos += 1;
        if self.eat('^') {
            self.atom()
        } else {
            Ok(CnfOrdinal::one())
        }
    }

    fn atom(&mut self) -> Result<CnfOrdinal> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(CnfOrdinal::natural(self.natural()?)),
            Some('w') | Some('ω') => Ok(CnfOrdinal::omega_pow(self.omega_power()?)),
            Some('(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.sum()?;
                self.skip_ws();
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            _ => Err(self.error("expected exponent")),
        }
    }

    fn natural(&mut self) -> Result<BigUint> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse::<BigUint>()
            .map_err(|_| Error::parse(1, start + 1, "bad natural number"))
    }
}

/// Convenience for tests and reports: the finite value as `u64`, if it fits.
pub fn to_u64(a: &CnfOrdinal) -> Option<u64> {
    a.as_natural().and_then(|n| n.to_u64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> CnfOrdinal {
        s.parse().unwrap()
    }

    fn n(k: u64) -> CnfOrdinal {
        CnfOrdinal::from(k)
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(n(0).cmp(&n(0)), Ordering::Equal);
        assert!(n(3) < CnfOrdinal::omega());
        assert!(o("w^2 + 1") < o("w^2 + w"));
        assert!(o("w*5") < o("w^2"));
        assert!(o("w^w") > o("w^100*7 + 3"));
    }

    #[test]
    fn natural_sum_examples() {
        let a = o("w^3*2 + w + 4");
        assert_eq!(a.nat_sum(&n(0)), a);
        assert_eq!(n(0).nat_sum(&a), a);
        assert_eq!(n(1).nat_sum(&CnfOrdinal::omega()), o("w + 1"));
        assert_eq!(o("w + 1").nat_sum(&o("w + 2")), o("w*2 + 3"));
    }

    #[test]
    fn natural_product_examples() {
        let a = o("w^(w + 1) + w*3");
        assert_eq!(a.nat_prod(&n(1)), a);
        let w = CnfOrdinal::omega();
        assert_eq!(w.nat_prod(&w), o("w^2"));
        assert_eq!(o("w + 1").nat_prod(&o("w + 1")), o("w^2 + w*2 + 1"));
        assert_eq!(n(0).nat_prod(&a), n(0));
    }

    #[test]
    fn natural_power_examples() {
        let a = o("w + 1");
        assert_eq!(a.nat_pow(0), n(1));
        assert_eq!(a.nat_pow(1), a);
        assert_eq!(a.nat_pow(2), o("w^2 + w*2 + 1"));
        assert_eq!(a.nat_pow(3), o("w^3 + w^2*3 + w*3 + 1"));
    }

    #[test]
    fn omega_pow_examples() {
        assert_eq!(CnfOrdinal::omega_pow(n(0)), n(1));
        assert_eq!(CnfOrdinal::omega_pow(n(1)), CnfOrdinal::omega());
        assert_eq!(CnfOrdinal::omega_pow(CnfOrdinal::omega()), o("w^(w)"));
    }

    #[test]
    fn decreasing_sequence_order_types() {
        assert_eq!(n(0).ot_decreasing_sequences(), n(0));
        assert_eq!(n(1).ot_decreasing_sequences(), n(1));
        assert_eq!(n(2).ot_decreasing_sequences(), o("w + 1"));
        assert_eq!(n(3).ot_decreasing_sequences(), o("w^2 + 1"));
        assert_eq!(CnfOrdinal::omega().ot_decreasing_sequences(), o("w^w"));
        assert_eq!(o("w + 1").ot_decreasing_sequences(), o("w^(w + 1) + 1"));
        assert_eq!(o("w^2*3").ot_decreasing_sequences(), o("w^(w^2*3)"));
    }

    #[test]
    fn formatting() {
        assert_eq!(n(0).to_string(), "0");
        assert_eq!(o("w^2*3 + w + 5").to_string(), "w^2*3 + w + 5");
        assert_eq!(o("w^(w)").to_string(), "w^w");
        assert_eq!(o("w^(w^2 + w*2 + 1)").to_string(), "w^(w^2 + w*2 + 1)");
        assert_eq!(o("ω^ω^2").to_string(), "w^(w^2)");
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for bad in ["", "w +", "w + w", "1 + w", "w*0", "w^(1", "x", "w + 0", "3 4"] {
            assert!(bad.parse::<CnfOrdinal>().is_err(), "{bad:?} should fail");
        }
        match "w + w".parse::<CnfOrdinal>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn successor_and_limit() {
        assert!(o("w + 1").is_successor());
        assert!(o("w^2").is_limit());
        assert!(!n(0).is_limit() && !n(0).is_successor());
        assert_eq!(to_u64(&n(42)), Some(42));
        assert_eq!(to_u64(&CnfOrdinal::omega()), None);
    }
}
