//! Monomial ideals, stored as final segments of ℕ^m through their minimal
//! generators.
//!
//! The generator list is an antichain under divisibility sorted by deglex,
//! which makes the representation canonical: two ideals are equal exactly
//! when their generator lists are. The zero ideal (the empty final segment)
//! has no generators; the unit ideal is generated by the origin.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monom::{check_dim, deglex_cmp, CommWord, ExpVec};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr")]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExpVec>,
}

#[derive(Deserialize)]
struct IdealRepr {
    dim: usize,
    gens: Vec<Vec<u32>>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;

    fn try_from(r: IdealRepr) -> Result<Self> {
        MonomialIdeal::new(r.dim, r.gens.into_iter().map(ExpVec::new).collect())
    }
}

impl MonomialIdeal {
    /// Normalizes arbitrary generators: drops duplicates and every generator
    /// divisible by another, then sorts by deglex.
    pub fn new(dim: usize, raw: Vec<ExpVec>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("monomial ideals need at least one variable"));
        }
        for g in &raw {
            check_dim(dim, g.dim())?;
        }
        Ok(Self::from_raw(dim, raw))
    }

    /// `new` without dimension checks, for generators built internally.
    pub(crate) fn from_raw(dim: usize, mut raw: Vec<ExpVec>) -> Self {
        raw.sort_by(deglex_cmp);
        raw.dedup();
        // a divisor precedes its multiples in deglex order
        let mut gens: Vec<ExpVec> = Vec::with_capacity(raw.len());
        for g in raw {
            if !gens.iter().any(|h| h.divides_unchecked(&g)) {
                gens.push(g);
            }
        }
        MonomialIdeal { dim, gens }
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: Vec::new(),
        }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: vec![ExpVec::zeros(dim)],
        }
    }

    /// The irreducible ideal `m^ν = (x_i^{ν_i} : ν_i > 0)`.
    pub fn irreducible(nu: &ExpVec) -> Self {
        let dim = nu.dim();
        let gens = nu
            .support()
            .into_iter()
            .map(|i| ExpVec::pure_power(dim, i, nu.entries()[i]))
            .collect();
        Self::from_raw(dim, gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[ExpVec] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_origin()
    }

    /// Largest exponent of the last variable among the generators.
    pub fn max_last_exponent(&self) -> u32 {
        self.gens
            .iter()
            .map(|g| g.entries()[self.dim - 1])
            .max()
            .unwrap_or(0)
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(ExpVec::degree).max().unwrap_or(0)
    }

    pub fn contains(&self, nu: &ExpVec) -> Result<bool> {
        check_dim(self.dim, nu.dim())?;
        Ok(self.contains_unchecked(nu))
    }

    pub(crate) fn contains_unchecked(&self, nu: &ExpVec) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(nu))
    }

    /// `self ⊇ other` as final segments.
    pub fn superset(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }

    /// Union of the final segments.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.dim, other.dim)?;
        let raw = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_raw(self.dim, raw))
    }

    /// Intersection of the final segments, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.dim, other.dim)?;
        let raw = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.join(h)))
            .collect();
        Ok(Self::from_raw(self.dim, raw))
    }

    /// `(I : X^ν)`.
    pub fn colon(&self, nu: &ExpVec) -> Result<MonomialIdeal> {
        check_dim(self.dim, nu.dim())?;
        let raw = self.gens.iter().map(|g| g.saturating_sub(nu)).collect();
        Ok(Self::from_raw(self.dim, raw))
    }

    /// The layer `{e ∈ ℕ^{m-1} : (e, j) ∈ E}`.
    pub fn slice(&self, j: u32) -> Result<MonomialIdeal> {
        if self.dim < 2 {
            return Err(Error::invalid("slicing needs at least two variables"));
        }
        let last = self.dim - 1;
        let raw = self
            .gens
            .iter()
            .filter(|g| g.entries()[last] <= j)
            .map(|g| ExpVec::new(g.entries()[..last].to_vec()))
            .collect();
        Ok(Self::from_raw(last, raw))
    }

    /// The same generators in one more (last) variable.
    pub fn cone(&self) -> MonomialIdeal {
        MonomialIdeal {
            dim: self.dim + 1,
            gens: self.gens.iter().map(|g| g.pad(1, false)).collect(),
        }
    }

    /// The ideal `I + J + (x_i y_j)` in the disjoint variables `x, y`.
    ///
    /// Its Hilbert function is `H_I + H_J` in every positive degree.
    pub fn direct_sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        for e in [self, other] {
            if e.is_zero() || e.is_unit() {
                return Err(Error::invalid(
                    "direct sum needs nonzero proper ideals on both sides",
                ));
            }
        }
        let (m, n) = (self.dim, other.dim);
        let mut raw: Vec<ExpVec> = self.gens.iter().map(|g| g.pad(n, false)).collect();
        raw.extend(other.gens.iter().map(|g| g.pad(m, true)));
        for i in 0..m {
            for j in 0..n {
                let mut e = vec![0; m + n];
                e[i] = 1;
                e[m + j] = 1;
                raw.push(ExpVec::new(e));
            }
        }
        Ok(Self::from_raw(m + n, raw))
    }

    /// The unique irredundant decomposition `E = m^ν₁ ∩ … ∩ m^νᵣ`, as the
    /// deglex-sorted list of the `νᵢ`.
    pub fn irreducible_decomposition(&self) -> Result<Vec<ExpVec>> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::invalid(
                "irreducible decomposition needs a nonzero proper ideal",
            ));
        }
        let mut memo = HashMap::new();
        let mut comps = split(self, &mut memo);
        prune_redundant(&mut comps);
        Ok(comps)
    }

    /// Irreducible components grouped by support, each compressed to its
    /// nonzero entries. Support sets use 0-based coordinate indices.
    pub fn components_by_support(&self) -> Result<BTreeMap<Vec<usize>, CommWord>> {
        let mut groups: BTreeMap<Vec<usize>, Vec<ExpVec>> = BTreeMap::new();
        for nu in self.irreducible_decomposition()? {
            groups.entry(nu.support()).or_default().push(nu.compress());
        }
        Ok(groups
            .into_iter()
            .map(|(k, v)| (k, CommWord::new(v)))
            .collect())
    }

    /// Text form: `dim m` followed by one tuple per line (or `zero` / `unit`).
    pub fn to_file_string(&self) -> String {
        let mut out = format!("dim {}\n", self.dim);
        if self.is_zero() {
            out.push_str("zero\n");
        } else if self.is_unit() {
            out.push_str("unit\n");
        } else {
            for g in &self.gens {
                out.push_str(&g.to_string());
                out.push('\n');
            }
        }
        out
    }

    /// Parses the text form. Generators are tuples `2 0 1` or monomials
    /// `x1^2*x3`; `#` starts a comment; `zero` and `unit` name the special
    /// ideals. Errors carry 1-based line and column.
    pub fn parse(text: &str) -> Result<MonomialIdeal> {
        let mut dim: Option<usize> = None;
        let mut raw = Vec::new();
        let mut unit = false;
        for (ln, full) in text.lines().enumerate() {
            let line_no = ln + 1;
            let line = full.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let col0 = line.len() - line.trim_start().len();
            let Some(d) = dim else {
                let rest = line.trim().strip_prefix("dim").ok_or_else(|| {
                    Error::parse(line_no, col0 + 1, "expected `dim <m>` header")
                })?;
                let d: usize = rest.trim().parse().map_err(|_| {
                    Error::parse(line_no, col0 + 4, "dimension must be a positive integer")
                })?;
                if d == 0 {
                    return Err(Error::parse(line_no, col0 + 4, "dimension must be positive"));
                }
                dim = Some(d);
                continue;
            };
            match line.trim() {
                "zero" => {}
                "unit" => unit = true,
                _ => {
                    let v = ExpVec::parse(line, d).map_err(|e| match e {
                        Error::Parse {
                            column, message, ..
                        } => Error::parse(line_no, column, message),
                        other => other,
                    })?;
                    raw.push(v);
                }
            }
        }
        let dim = dim.ok_or_else(|| Error::parse(1, 1, "missing `dim <m>` header"))?;
        if unit {
            raw.push(ExpVec::zeros(dim));
        }
        Ok(Self::from_raw(dim, raw))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(ExpVec::to_monomial_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn split(e: &MonomialIdeal, memo: &mut HashMap<MonomialIdeal, Vec<ExpVec>>) -> Vec<ExpVec> {
    if let Some(hit) = memo.get(e) {
        return hit.clone();
    }
    let out = match e.gens.iter().find(|g| !g.is_pure_power()) {
        None => {
            let mut nu = vec![0; e.dim];
            for g in &e.gens {
                let i = g.support()[0];
                nu[i] = g.entries()[i];
            }
            vec![ExpVec::new(nu)]
        }
        Some(g) => {
            // g = u·v with u = x_i^{g_i} and v coprime to u
            let i = g.support()[0];
            let u = ExpVec::pure_power(e.dim, i, g.entries()[i]);
            let v = g.saturating_sub(&u);
            let mut with_u = e.gens.clone();
            with_u.push(u);
            let mut with_v = e.gens.clone();
            with_v.push(v);
            let mut comps = split(&MonomialIdeal::from_raw(e.dim, with_u), memo);
            comps.extend(split(&MonomialIdeal::from_raw(e.dim, with_v), memo));
            prune_redundant(&mut comps);
            comps
        }
    };
    memo.insert(e.clone(), out.clone());
    out
}

/// `m^μ ⊇ m^ν`: every `x_j^{ν_j}` lies in `m^μ`.
fn irreducible_contains(mu: &ExpVec, nu: &ExpVec) -> bool {
    let (mu, nu) = (mu.entries(), nu.entries());
    nu.iter()
        .zip(mu)
        .all(|(&n, &m)| n == 0 || (m > 0 && m <= n))
}

/// Drops duplicate components and every component containing another one.
fn prune_redundant(comps: &mut Vec<ExpVec>) {
    comps.sort_by(deglex_cmp);
    comps.dedup();
    let all = comps.clone();
    comps.retain(|mu| {
        !all.iter()
            .any(|nu| nu != mu && irreducible_contains(mu, nu))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monom::vectors_up_to_degree;

    fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(dim, gens.iter().map(|g| ExpVec::new(g.to_vec())).collect()).unwrap()
    }

    fn v(e: &[u32]) -> ExpVec {
        ExpVec::new(e.to_vec())
    }

    fn same_points(a: &MonomialIdeal, b: &MonomialIdeal, box_degree: u32) -> bool {
        vectors_up_to_degree(a.dim(), box_degree)
            .iter()
            .all(|p| a.contains(p).unwrap() == b.contains(p).unwrap())
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(ideal(2, &[&[1, 0], &[2, 0]]).gens(), &[v(&[1, 0])]);
        assert!(ideal(2, &[]).is_zero());
        assert!(ideal(2, &[&[0, 0], &[5, 5]]).is_unit());
        let e = ideal(2, &[&[0, 3], &[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(e.gens(), &[v(&[1, 1]), v(&[2, 0]), v(&[0, 3])]);
        assert_eq!(MonomialIdeal::new(2, e.gens().to_vec()).unwrap(), e);
        assert!(MonomialIdeal::new(2, vec![v(&[1])]).is_err());
        assert!(MonomialIdeal::new(0, vec![]).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(!MonomialIdeal::zero(2).contains(&v(&[4, 4])).unwrap());
        assert!(MonomialIdeal::unit(2).contains(&v(&[0, 0])).unwrap());
        assert!(ideal(2, &[&[2, 0]]).contains(&v(&[3, 1])).unwrap());
        assert!(ideal(2, &[&[2, 0]]).contains(&v(&[3, 1, 0])).is_err());
    }

    #[test]
    fn superset_examples() {
        let e = ideal(2, &[&[1, 2], &[3, 0]]);
        assert!(e.superset(&e).unwrap());
        assert!(MonomialIdeal::unit(2)
            .superset(&MonomialIdeal::zero(2))
            .unwrap());
        assert!(!ideal(2, &[&[1, 0]]).superset(&ideal(2, &[&[0, 1]])).unwrap());
    }

    #[test]
    fn lattice_examples() {
        let e = ideal(2, &[&[1, 2], &[3, 0]]);
        assert_eq!(e.sum(&MonomialIdeal::zero(2)).unwrap(), e);
        assert!(e.sum(&MonomialIdeal::unit(2)).unwrap().is_unit());
        assert_eq!(
            ideal(2, &[&[2, 0]]).intersect(&ideal(2, &[&[0, 3]])).unwrap(),
            ideal(2, &[&[2, 3]])
        );
        assert_eq!(e.intersect(&e).unwrap(), e);
        assert!(e.intersect(&MonomialIdeal::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn colon_examples() {
        let e = ideal(2, &[&[1, 2], &[3, 0]]);
        assert_eq!(e.colon(&v(&[0, 0])).unwrap(), e);
        assert_eq!(ideal(2, &[&[2, 1]]).colon(&v(&[1, 0])).unwrap(), ideal(2, &[&[1, 1]]));
        let c = ideal(2, &[&[2, 0], &[0, 2]]).colon(&v(&[2, 0])).unwrap();
        assert!(c.is_unit());
        // membership oracle: q ∈ (E : ν) iff q + ν ∈ E
        let e = ideal(3, &[&[2, 1, 0], &[0, 3, 1], &[1, 0, 2]]);
        let nu = v(&[1, 1, 0]);
        let c = e.colon(&nu).unwrap();
        for q in vectors_up_to_degree(3, 5) {
            assert_eq!(c.contains(&q).unwrap(), e.contains(&q.add(&nu).unwrap()).unwrap());
        }
    }

    #[test]
    fn slice_examples() {
        assert!(MonomialIdeal::zero(2).slice(3).unwrap().is_zero());
        let e = ideal(2, &[&[1, 2]]);
        assert!(e.slice(1).unwrap().is_zero());
        assert_eq!(e.slice(2).unwrap(), ideal(1, &[&[1]]));
        assert_eq!(ideal(2, &[&[0, 3], &[2, 0]]).slice(0).unwrap(), ideal(1, &[&[2]]));
        assert!(ideal(1, &[&[2]]).slice(0).is_err());
        // membership oracle on each layer
        let e = ideal(3, &[&[2, 1, 0], &[0, 3, 1], &[1, 0, 2]]);
        for j in 0..4 {
            let s = e.slice(j).unwrap();
            for q in vectors_up_to_degree(2, 5) {
                let mut full = q.entries().to_vec();
                full.push(j);
                assert_eq!(s.contains(&q).unwrap(), e.contains(&v(&full)).unwrap());
            }
        }
    }

    #[test]
    fn cone_examples() {
        assert_eq!(MonomialIdeal::zero(2).cone(), MonomialIdeal::zero(3));
        assert!(MonomialIdeal::unit(2).cone().is_unit());
        assert_eq!(ideal(1, &[&[2]]).cone(), ideal(2, &[&[2, 0]]));
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(
            ideal(1, &[&[1]]).direct_sum(&ideal(1, &[&[1]])).unwrap(),
            ideal(2, &[&[1, 0], &[0, 1]])
        );
        assert_eq!(
            ideal(1, &[&[2]]).direct_sum(&ideal(1, &[&[3]])).unwrap(),
            ideal(2, &[&[2, 0], &[0, 3], &[1, 1]])
        );
        assert!(MonomialIdeal::zero(1).direct_sum(&ideal(1, &[&[1]])).is_err());
        assert!(ideal(1, &[&[1]]).direct_sum(&MonomialIdeal::unit(2)).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let pure = ideal(3, &[&[2, 0, 0], &[0, 0, 5]]);
        assert_eq!(pure.irreducible_decomposition().unwrap(), vec![v(&[2, 0, 5])]);
        assert_eq!(
            ideal(2, &[&[2, 1]]).irreducible_decomposition().unwrap(),
            vec![v(&[0, 1]), v(&[2, 0])]
        );
        assert_eq!(
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
                .irreducible_decomposition()
                .unwrap(),
            vec![v(&[1, 2]), v(&[2, 1])]
        );
        assert!(MonomialIdeal::zero(2).irreducible_decomposition().is_err());
        assert!(MonomialIdeal::unit(2).irreducible_decomposition().is_err());
    }

    #[test]
    fn decomposition_intersects_back() {
        let e = ideal(3, &[&[2, 1, 0], &[0, 3, 1], &[1, 0, 2], &[1, 1, 1]]);
        let comps = e.irreducible_decomposition().unwrap();
        let back = comps
            .iter()
            .map(MonomialIdeal::irreducible)
            .reduce(|a, b| a.intersect(&b).unwrap())
            .unwrap();
        assert_eq!(back, e);
        assert!(same_points(&back, &e, 8));
    }

    #[test]
    fn support_groups() {
        let e = ideal(2, &[&[2, 1]]);
        let groups = e.components_by_support().unwrap();
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[&vec![0]], CommWord::new(vec![v(&[2])]));
        assert_eq!(groups[&vec![1]], CommWord::new(vec![v(&[1])]));
        let groups = ideal(3, &[&[1, 0, 0], &[0, 0, 4]]).components_by_support().unwrap();
        assert_eq!(groups.keys().collect::<Vec<_>>(), vec![&vec![0, 2]]);
    }

    #[test]
    fn file_format() {
        let text = "# example\ndim 3\nx1^2*x3\n  0 1 1  # inline\n\n2 0 1\n";
        let e = MonomialIdeal::parse(text).unwrap();
        assert_eq!(e, ideal(3, &[&[2, 0, 1], &[0, 1, 1]]));
        assert_eq!(MonomialIdeal::parse(&e.to_file_string()).unwrap(), e);
        assert!(MonomialIdeal::parse("dim 2\nzero\n").unwrap().is_zero());
        assert!(MonomialIdeal::parse("dim 2\nunit\n").unwrap().is_unit());
        assert!(MonomialIdeal::parse("dim 2\n").unwrap().is_zero());
        match MonomialIdeal::parse("dim 2\n1 0\n1 q\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            MonomialIdeal::parse("1 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, r#"{"dim":3,"gens":[[0,1,1],[2,0,1]]}"#);
        let back: MonomialIdeal = serde_json::from_str(r#"{"dim":3,"gens":[[2,0,1],[0,1,1],[4,4,4]]}"#).unwrap();
        assert_eq!(back, e);
    }
}
