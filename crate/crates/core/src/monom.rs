//! Exponent vectors, divisibility, term orders, and the word orderings
//! built on top of divisibility.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of ℕ^m, i.e. the exponent vector of a monomial.
///
/// The derived `Ord` is plain lexicographic order on the entries; use
/// [`TermOrder`] when a specific monomial order matters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExpVec(Vec<u32>);

pub(crate) fn check_dim(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

impl ExpVec {
    pub fn new(entries: Vec<u32>) -> Self {
        ExpVec(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        ExpVec(vec![0; dim])
    }

    /// `k·e_i`.
    pub fn pure_power(dim: usize, i: usize, k: u32) -> Self {
        let mut v = vec![0; dim];
        v[i] = k;
        ExpVec(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Indices `i` with `ν_i > 0`, increasing.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// A vector with at most one nonzero entry.
    pub fn is_pure_power(&self) -> bool {
        self.0.iter().filter(|&&e| e > 0).count() <= 1
    }

    /// The nonzero entries in coordinate order, `⟨ν⟩`.
    pub fn compress(&self) -> ExpVec {
        ExpVec(self.0.iter().copied().filter(|&e| e > 0).collect())
    }

    pub fn divides(&self, other: &ExpVec) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExpVec) -> Result<ExpVec> {
        check_dim(self.dim(), other.dim())?;
        Ok(ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// Componentwise maximum (the lcm of the monomials).
    pub fn join(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise `max(self - other, 0)`.
    pub fn saturating_sub(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Appends `extra` zero coordinates on the right (`left == false`) or left.
    pub fn pad(&self, extra: usize, left: bool) -> ExpVec {
        let zeros = std::iter::repeat_n(0, extra);
        if left {
            ExpVec(zeros.chain(self.0.iter().copied()).collect())
        } else {
            ExpVec(self.0.iter().copied().chain(zeros).collect())
        }
    }

    /// Monomial syntax, e.g. `x1^2*x3`; the origin prints as `1`.
    pub fn to_monomial_string(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Parses either a whitespace-separated tuple `2 0 1` or a monomial
    /// `x1^2*x3` in `dim` variables. Error columns are 1-based within `s`.
    pub fn parse(s: &str, dim: usize) -> Result<ExpVec> {
        let trimmed = s.trim();
        let lead = s.len() - s.trim_start().len();
        if trimmed.starts_with('x') || trimmed == "1" && dim != 1 {
            parse_monomial(trimmed, dim, lead)
        } else {
            parse_tuple(trimmed, dim, lead)
        }
    }
}

fn parse_tuple(s: &str, dim: usize, lead: usize) -> Result<ExpVec> {
    let mut entries = Vec::with_capacity(dim);
    let mut offset = 0;
    for token in s.split_whitespace() {
        let at = s[offset..].find(token).unwrap() + offset;
        offset = at + token.len();
        let v = token
            .parse::<u32>()
            .map_err(|_| Error::parse(1, lead + at + 1, format!("bad exponent `{token}`")))?;
        entries.push(v);
    }
    if entries.len() != dim {
        return Err(Error::parse(
            1,
            lead + 1,
            format!("expected {dim} exponents, found {}", entries.len()),
        ));
    }
    Ok(ExpVec(entries))
}

fn parse_monomial(s: &str, dim: usize, lead: usize) -> Result<ExpVec> {
    let mut entries = vec![0u32; dim];
    if s == "1" {
        return Ok(ExpVec(entries));
    }
    let mut offset = 0;
    for factor in s.split('*') {
        let col = lead + offset + 1;
        offset += factor.len() + 1;
        let factor = factor.trim();
        let body = factor
            .strip_prefix('x')
            .ok_or_else(|| Error::parse(1, col, format!("expected `x<i>`, found `{factor}`")))?;
        let (var, exp) = match body.split_once('^') {
            Some((v, e)) => (v, e),
            None => (body, "1"),
        };
        let var: usize = var
            .parse()
            .map_err(|_| Error::parse(1, col, format!("bad variable index in `{factor}`")))?;
        if var == 0 || var > dim {
            return Err(Error::parse(
                1,
                col,
                format!("variable x{var} out of range 1..={dim}"),
            ));
        }
        let exp: u32 = exp
            .parse()
            .map_err(|_| Error::parse(1, col, format!("bad exponent in `{factor}`")))?;
        entries[var - 1] += exp;
    }
    Ok(ExpVec(entries))
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl From<Vec<u32>> for ExpVec {
    fn from(v: Vec<u32>) -> Self {
        ExpVec(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExpVec {
    fn from(v: [u32; N]) -> Self {
        ExpVec(v.to_vec())
    }
}

/// Lexicographic order, first coordinate most significant.
pub fn lex_cmp(a: &ExpVec, b: &ExpVec) -> Ordering {
    a.0.cmp(&b.0)
}

/// Degree first, lexicographic tie-break.
pub fn deglex_cmp(a: &ExpVec, b: &ExpVec) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| lex_cmp(a, b))
}

/// An integer weight matrix `A`; `μ < ν` iff `Aμ <_lex Aν`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixOrder {
    rows: Vec<Vec<i64>>,
}

impl MatrixOrder {
    /// Validates that every column is lex-positive and that `A` has full
    /// column rank, so the order is total and extends divisibility.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let dim = rows
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::invalid("order matrix has no rows"))?;
        if dim == 0 {
            return Err(Error::invalid("order matrix has no columns"));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: bad.len(),
            });
        }
        for col in 0..dim {
            match rows.iter().map(|r| r[col]).find(|&x| x != 0) {
                Some(x) if x > 0 => {}
                _ => {
                    return Err(Error::invalid(format!(
                        "column {} of the order matrix is not lex-positive",
                        col + 1
                    )))
                }
            }
        }
        if rank(&rows) < dim {
            return Err(Error::invalid("order matrix does not have full column rank"));
        }
        Ok(MatrixOrder { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Parses whitespace-separated integer rows, one per line; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Error::parse(ln + 1, 1, format!("bad matrix entry `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::new(rows)
    }

    fn weigh(&self, v: &ExpVec) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v.entries()).map(|(a, &e)| a * i64::from(e)).sum())
            .collect()
    }
}

/// Rank over ℚ by fraction-free elimination.
fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let (a, b) = (m[r][c].clone(), m[i][c].clone());
            #[allow(clippy::needless_range_loop)]
            for j in c..cols {
                let v = &m[i][j] * &a - &m[r][j] * &b;
                m[i][j] = v;
            }
        }
        r += 1;
    }
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermOrder {
    Lex,
    #[default]
    DegLex,
    Matrix(MatrixOrder),
}

impl TermOrder {
    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Result<Ordering> {
        check_dim(a.dim(), b.dim())?;
        match self {
            TermOrder::Lex => Ok(lex_cmp(a, b)),
            TermOrder::DegLex => Ok(deglex_cmp(a, b)),
            TermOrder::Matrix(m) => {
                check_dim(m.dim(), a.dim())?;
                Ok(m.weigh(a).cmp(&m.weigh(b)))
            }
        }
    }

    /// Whether the order has type ω on ℕ^dim (every element has finitely
    /// many predecessors).
    pub fn has_type_omega(&self, dim: usize) -> bool {
        match self {
            TermOrder::DegLex => true,
            TermOrder::Lex => dim == 1,
            TermOrder::Matrix(m) => m.rows[0].iter().all(|&x| x > 0),
        }
    }

    /// The lex order with coordinates permuted: row `k` of the matrix is
    /// `e_{perm[k]}`.
    pub fn permuted_lex(perm: &[usize]) -> Result<Self> {
        let dim = perm.len();
        let rows = perm
            .iter()
            .map(|&i| {
                let mut r = vec![0; dim];
                r[i] = 1;
                r
            })
            .collect();
        Ok(TermOrder::Matrix(MatrixOrder::new(rows)?))
    }
}

pub fn term_cmp(order: &TermOrder, a: &ExpVec, b: &ExpVec) -> Result<Ordering> {
    order.cmp(a, b)
}

pub fn divides(a: &ExpVec, b: &ExpVec) -> Result<bool> {
    a.divides(b)
}

fn common_dim<'a>(words: impl IntoIterator<Item = &'a ExpVec>) -> Result<()> {
    let mut dim = None;
    for w in words {
        match dim {
            None => dim = Some(w.dim()),
            Some(d) => check_dim(d, w.dim())?,
        }
    }
    Ok(())
}

/// Higman's embedding order on finite sequences: `u ≤* v` iff `u` maps
/// into `v` by a strictly increasing index map with `u_i | v_φ(i)`.
///
/// Greedy earliest matching decides it.
pub fn higman_leq(u: &[ExpVec], v: &[ExpVec]) -> Result<bool> {
    common_dim(u.iter().chain(v))?;
    let mut j = 0;
    for x in u {
        while j < v.len() && !x.divides_unchecked(&v[j]) {
            j += 1;
        }
        if j == v.len() {
            return Ok(false);
        }
        j += 1;
    }
    Ok(true)
}

/// A commutative word (finite multiset) of exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CommWord {
    letters: Vec<ExpVec>,
}

impl CommWord {
    pub fn new(mut letters: Vec<ExpVec>) -> Self {
        letters.sort_by(deglex_cmp);
        CommWord { letters }
    }

    pub fn letters(&self) -> &[ExpVec] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl FromIterator<ExpVec> for CommWord {
    fn from_iter<I: IntoIterator<Item = ExpVec>>(iter: I) -> Self {
        CommWord::new(iter.into_iter().collect())
    }
}

/// `u ≤◇ v`: an injective map from the letters of `u` to those of `v` with
/// each letter dividing its image. Decided by maximum bipartite matching.
pub fn comm_leq(u: &CommWord, v: &CommWord) -> Result<bool> {
    common_dim(u.letters.iter().chain(&v.letters))?;
    if u.len() > v.len() {
        return Ok(false);
    }
    let adj: Vec<Vec<usize>> = u
        .letters
        .iter()
        .map(|x| {
            (0..v.len())
                .filter(|&j| x.divides_unchecked(&v.letters[j]))
                .collect()
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; v.len()];
    for i in 0..u.len() {
        let mut seen = vec![false; v.len()];
        if !augment(i, &adj, &mut owner, &mut seen) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn augment(i: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &j in &adj[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if owner[j].is_none_or(|k| augment(k, adj, owner, seen)) {
            owner[j] = Some(i);
            return true;
        }
    }
    false
}

/// The multiset ordering: cancel the common part of `u` and `v`, then every
/// remaining letter of `u` must divide some remaining letter of `v`.
pub fn multiset_leq(u: &CommWord, v: &CommWord) -> Result<bool> {
    common_dim(u.letters.iter().chain(&v.letters))?;
    let mut counts: HashMap<&ExpVec, isize> = HashMap::new();
    for x in &u.letters {
        *counts.entry(x).or_default() += 1;
    }
    for y in &v.letters {
        *counts.entry(y).or_default() -= 1;
    }
    let residual_u: Vec<&ExpVec> = counts
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(x, _)| *x)
        .collect();
    let residual_v: Vec<&ExpVec> = counts
        .iter()
        .filter(|(_, &c)| c < 0)
        .map(|(y, _)| *y)
        .collect();
    Ok(residual_u
        .iter()
        .all(|x| residual_v.iter().any(|y| x.divides_unchecked(y))))
}

/// All vectors of ℕ^dim with degree exactly `n`, in decreasing lex order.
pub fn vectors_of_degree(dim: usize, n: u32) -> Vec<ExpVec> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; dim];
    fill_degree(&mut cur, 0, n, &mut out);
    out
}

fn fill_degree(cur: &mut Vec<u32>, pos: usize, rest: u32, out: &mut Vec<ExpVec>) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(ExpVec(cur.clone()));
        return;
    }
    for e in (0..=rest).rev() {
        cur[pos] = e;
        fill_degree(cur, pos + 1, rest - e, out);
    }
    cur[pos] = 0;
}

/// All vectors of ℕ^dim with degree at most `n`.
pub fn vectors_up_to_degree(dim: usize, n: u32) -> Vec<ExpVec> {
    (0..=n).flat_map(|d| vectors_of_degree(dim, d)).collect()
}
