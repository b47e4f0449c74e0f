//! Three total well-orderings of monomial ideals that extend reverse
//! inclusion (`E ⊋ F` implies `E < F`), and the ordinal constants that
//! bound their order types.
//!
//! - **Kleene-Brouwer** (`kb`): compare the generator lists sorted by a term
//!   order of type ω. A proper extension precedes its prefix; otherwise the
//!   first differing generator decides. The zero ideal (no generators) is the
//!   maximum.
//! - **Triangle** (`⊴`): in one variable, `E ⊴ F` iff `E ⊇ F`; in `m`
//!   variables, compare the slice sequences `(E_0, E_1, …)` lexicographically
//!   with the `(m-1)`-variable order.
//! - **Minimal type**: compare `ψ(p_E)`, breaking ties with `⊴`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{self, Config};
use crate::ideal::MonomialIdeal;
use crate::ivpoly::IntegerValuedPoly;
use crate::monom::{check_dim, TermOrder};
use crate::ordinal::CnfOrdinal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IdealOrder {
    Kb { term_order: TermOrder },
    Triangle,
    MinType,
}

impl IdealOrder {
    /// Kleene-Brouwer order over `term_order`, which must have type ω.
    /// Plain lex only has type ω in one variable and is rejected here; use
    /// [`kb_cmp`] directly for univariate ideals.
    pub fn kb(term_order: TermOrder) -> Result<Self> {
        if !term_order.has_type_omega(2) {
            return Err(Error::invalid(
                "the Kleene-Brouwer order needs a degree-compatible term order",
            ));
        }
        Ok(IdealOrder::Kb { term_order })
    }

    pub fn cmp(&self, e: &MonomialIdeal, f: &MonomialIdeal) -> Result<Ordering> {
        Ok(self.compare(e, f)?.ordering)
    }

    pub fn compare(&self, e: &MonomialIdeal, f: &MonomialIdeal) -> Result<Comparison> {
        match self {
            IdealOrder::Kb { term_order } => kb_compare(e, f, term_order),
            IdealOrder::Triangle => triangle_compare(e, f),
            IdealOrder::MinType => min_type_compare(e, f),
        }
    }
}

/// What settled a comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "by", rename_all = "snake_case")]
pub enum Decision {
    Identical,
    /// Generator lists first differ at this position.
    Generator { index: usize },
    /// One generator list extends the other, which has this length.
    Prefix { length: usize },
    /// Slice indices from the last variable inward, ending in a one-variable
    /// containment test.
    Slice { path: Vec<u32> },
    /// Different heights.
    Psi { left: CnfOrdinal, right: CnfOrdinal },
    /// Equal heights, then `⊴`.
    PsiTie { psi: CnfOrdinal, slice: Vec<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    #[serde(serialize_with = "ser_ordering")]
    pub ordering: Ordering,
    pub decision: Decision,
}

fn ser_ordering<S: serde::Serializer>(o: &Ordering, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    })
}

pub fn kb_cmp(e: &MonomialIdeal, f: &MonomialIdeal, order: &TermOrder) -> Result<Ordering> {
    Ok(kb_compare(e, f, order)?.ordering)
}

pub fn kb_compare(e: &MonomialIdeal, f: &MonomialIdeal, order: &TermOrder) -> Result<Comparison> {
    check_dim(e.dim(), f.dim())?;
    if !order.has_type_omega(e.dim()) {
        return Err(Error::invalid(format!(
            "term order does not have type ω on ℕ^{}",
            e.dim()
        )));
    }
    let sorted = |i: &MonomialIdeal| -> Result<Vec<_>> {
        let mut g = i.gens().to_vec();
        let mut err = None;
        g.sort_by(|a, b| {
            order.cmp(a, b).unwrap_or_else(|x| {
                err = Some(x);
                Ordering::Equal
            })
        });
        err.map_or(Ok(g), Err)
    };
    let (a, b) = (sorted(e)?, sorted(f)?);
    for (k, (x, y)) in a.iter().zip(&b).enumerate() {
        let o = order.cmp(x, y)?;
        if o != Ordering::Equal {
            return Ok(Comparison {
                ordering: o,
                decision: Decision::Generator { index: k },
            });
        }
    }
    // extensions precede their prefixes
    let ordering = b.len().cmp(&a.len());
    let decision = if ordering == Ordering::Equal {
        Decision::Identical
    } else {
        Decision::Prefix {
            length: a.len().min(b.len()),
        }
    };
    Ok(Comparison { ordering, decision })
}

pub fn triangle_cmp(e: &MonomialIdeal, f: &MonomialIdeal) -> Result<Ordering> {
    Ok(triangle_compare(e, f)?.ordering)
}

pub fn triangle_compare(e: &MonomialIdeal, f: &MonomialIdeal) -> Result<Comparison> {
    check_dim(e.dim(), f.dim())?;
    let mut path = Vec::new();
    let ordering = triangle_rec(e, f, &mut path);
    let decision = if ordering == Ordering::Equal {
        Decision::Identical
    } else {
        Decision::Slice { path }
    };
    Ok(Comparison { ordering, decision })
}

fn triangle_rec(e: &MonomialIdeal, f: &MonomialIdeal, path: &mut Vec<u32>) -> Ordering {
    if e == f {
        return Ordering::Equal;
    }
    if e.dim() == 1 {
        // a larger final segment has a smaller generator, and the zero ideal
        // (no generator) is the largest
        let key = |i: &MonomialIdeal| i.gens().first().map(|g| g.entries()[0]);
        return match (key(e), key(f)) {
            (Some(x), Some(y)) => x.cmp(&y),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        };
    }
    // slices are constant from the largest last exponent on (the slice
    // decomposition E = ⋃_j E_j × {j} stabilizes there)
    let top = e.max_last_exponent().max(f.max_last_exponent());
    for j in 0..=top {
        let (ej, fj) = (e.slice(j).expect("dim ≥ 2"), f.slice(j).expect("dim ≥ 2"));
        path.push(j);
        let o = triangle_rec(&ej, &fj, path);
        if o != Ordering::Equal {
            return o;
        }
        path.pop();
    }
    unreachable!("distinct ideals differ in some slice up to the largest last exponent")
}

fn samuel_poly(e: &MonomialIdeal) -> Result<IntegerValuedPoly> {
    match hilbert::hilbert_samuel_poly(e, &Config::default()) {
        Ok((p, _)) => Ok(p),
        Err(Error::TooManyGenerators { .. }) => Ok(hilbert::hilbert_samuel_poly_interpolated(e).0),
        Err(err) => Err(err),
    }
}

pub fn min_type_cmp(e: &MonomialIdeal, f: &MonomialIdeal) -> Result<Ordering> {
    Ok(min_type_compare(e, f)?.ordering)
}

pub fn min_type_compare(e: &MonomialIdeal, f: &MonomialIdeal) -> Result<Comparison> {
    check_dim(e.dim(), f.dim())?;
    let m = e.dim();
    let left = hilbert::psi(&samuel_poly(e)?, m)?;
    let right = hilbert::psi(&samuel_poly(f)?, m)?;
    match left.cmp(&right) {
        Ordering::Equal => {
            let tie = triangle_compare(e, f)?;
            let slice = match tie.decision {
                Decision::Slice { path } => path,
                _ => Vec::new(),
            };
            let decision = if tie.ordering == Ordering::Equal {
                Decision::Identical
            } else {
                Decision::PsiTie { psi: left, slice }
            };
            Ok(Comparison {
                ordering: tie.ordering,
                decision,
            })
        }
        ordering => Ok(Comparison {
            ordering,
            decision: Decision::Psi { left, right },
        }),
    }
}

/// Order-type constants for ideals of ℕ^m.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub m: usize,
    /// Height of the poset of ideals: `ω^m + 1`.
    pub height: CnfOrdinal,
    /// Order type under `kb`: `ω^{ω^{m-1}} + 1`.
    pub kb_order_type: CnfOrdinal,
    /// Lower bound on the maximal order type: `ω^{ω^{m-1}} + 1`.
    pub type_lower: CnfOrdinal,
    /// Upper bound on the maximal order type: `ω^{(ω+1)^{⊗m}}`.
    pub type_upper: CnfOrdinal,
    /// Order type of `⊴` on ideals of ℕ², the order type of decreasing
    /// sequences in `ω + 1`; only reported for `m = 2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangle_order_type_m2: Option<CnfOrdinal>,
}

pub fn bounds_report(m: usize) -> Result<BoundsReport> {
    if m == 0 {
        return Err(Error::invalid("need at least one variable"));
    }
    let w = CnfOrdinal::omega();
    let one = CnfOrdinal::one();
    let mm = CnfOrdinal::from(m as u64);
    let height = CnfOrdinal::omega_pow(mm).nat_sum(&one);
    let kb = CnfOrdinal::omega_pow(CnfOrdinal::omega_pow(CnfOrdinal::from(m as u64 - 1))).nat_sum(&one);
    let exponent = w.nat_sum(&one).nat_pow(m as u32);
    let type_upper = CnfOrdinal::omega_pow(exponent);
    let triangle = (m == 2).then(|| w.nat_sum(&one).ot_decreasing_sequences());
    Ok(BoundsReport {
        m,
        height,
        kb_order_type: kb.clone(),
        type_lower: kb,
        type_upper,
        triangle_order_type_m2: triangle,
    })
}
