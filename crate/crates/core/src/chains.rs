//! Length bounds for lex-decreasing sequences and ideal chains.
//!
//! A sequence `ν_0 >_lex ν_1 >_lex …` in ℕ^m is `f`-bounded when
//! `|ν_i| ≤ f(i)`. Its maximal length `ℓ(m, f)` satisfies `ℓ(1, f) = f(0)+1`
//! and
//!
//! ```text
//! ℓ(m, f) = 1 + ℓ(m-1, f_1) + … + ℓ(m-1, f_{f(0)})
//! f_i(j)  = f(j + 1 + ℓ(m-1, f_1) + … + ℓ(m-1, f_{i-1})) - f(0) + i
//! ```
//!
//! for a nondecreasing `f`. Every `f_i`, and every function derived from it
//! in turn, has the form `j ↦ g(j + offset) + delta` for the monotonized
//! base `g`, so the recursion is memoized on `(m, offset, delta)`. Values
//! grow like the Ackermann function in `m`; evaluation carries a budget of
//! recursion frames and reports exhaustion instead of running away.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ivpoly::binomial_nat;
use crate::monom::{check_dim, vectors_up_to_degree, ExpVec};

/// Default frame budget for [`ell`] and [`t_m`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Largest argument a closure bound is evaluated at.
pub const CLOSURE_HORIZON: u64 = 1 << 24;

type Closure = Arc<dyn Fn(u64) -> u64 + Send + Sync>;

/// A bound `f: ℕ → ℕ`, replaced on construction by its running maximum
/// `g(i) = max{f(0), …, f(i)}`.
#[derive(Clone)]
pub struct BoundFn {
    repr: Repr,
}

#[derive(Clone)]
enum Repr {
    /// `i ↦ p + i·q`, already nondecreasing.
    Affine { p: BigUint, q: BigUint },
    /// Prefix maxima of the table, then the constant `tail`.
    Table { values: Vec<BigUint>, tail: BigUint },
    /// Prefix maxima of the closure, filled on demand.
    Closure {
        f: Closure,
        cache: Arc<Mutex<Vec<u64>>>,
    },
    /// `h_m ∘ inner`; `h_m` is increasing, so this stays monotone.
    HilbertComposed { inner: Box<BoundFn>, m: u32 },
}

impl fmt::Debug for BoundFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Affine { p, q } => write!(f, "Affine({p} + i*{q})"),
            Repr::Table { values, tail } => write!(f, "Table({values:?}, tail {tail})"),
            Repr::Closure { .. } => f.write_str("Closure"),
            Repr::HilbertComposed { inner, m } => write!(f, "h_{m}({inner:?})"),
        }
    }
}

impl BoundFn {
    pub fn affine(p: impl Into<BigUint>, q: impl Into<BigUint>) -> Self {
        BoundFn {
            repr: Repr::Affine {
                p: p.into(),
                q: q.into(),
            },
        }
    }

    pub fn constant(c: impl Into<BigUint>) -> Self {
        Self::affine(c, 0u32)
    }

    /// `f(i) = values[i]`, and `tail` past the end.
    pub fn table(values: Vec<BigUint>, tail: impl Into<BigUint>) -> Self {
        let mut running = BigUint::zero();
        let values: Vec<BigUint> = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                if i == 0 || v > running {
                    running = v;
                }
                running.clone()
            })
            .collect();
        let tail = tail.into().max(running);
        BoundFn {
            repr: Repr::Table { values, tail },
        }
    }

    pub fn from_fn(f: impl Fn(u64) -> u64 + Send + Sync + 'static) -> Self {
        BoundFn {
            repr: Repr::Closure {
                f: Arc::new(f),
                cache: Arc::new(Mutex::new(Vec::new())),
            },
        }
    }

    /// `h_m ∘ self`.
    pub fn compose_h(&self, m: u32) -> Self {
        BoundFn {
            repr: Repr::HilbertComposed {
                inner: Box::new(self.clone()),
                m,
            },
        }
    }

    /// The monotonized value `g(i)`.
    pub fn eval(&self, i: &BigUint) -> Result<BigUint> {
        match &self.repr {
            Repr::Affine { p, q } => Ok(p + i * q),
            Repr::Table { values, tail } => Ok(i
                .to_usize()
                .and_then(|k| values.get(k))
                .unwrap_or(tail)
                .clone()),
            Repr::Closure { f, cache } => {
                let k = i
                    .to_u64()
                    .filter(|&k| k < CLOSURE_HORIZON)
                    .ok_or_else(|| {
                        Error::invalid(format!("closure bound evaluated beyond {CLOSURE_HORIZON}"))
                    })? as usize;
                let mut cache = cache.lock().expect("bound cache poisoned");
                while cache.len() <= k {
                    let v = f(cache.len() as u64);
                    let prev = cache.last().copied().unwrap_or(v);
                    cache.push(prev.max(v));
                }
                Ok(BigUint::from(cache[k]))
            }
            Repr::HilbertComposed { inner, m } => Ok(h_m_big(&inner.eval(i)?, *m)),
        }
    }

    pub fn at(&self, i: u64) -> Result<BigUint> {
        self.eval(&BigUint::from(i))
    }
}

fn h_m_big(s: &BigUint, m: u32) -> BigUint {
    if s.is_zero() {
        return BigUint::zero();
    }
    s + binomial_nat(&(s - 1u32 + m), m)
}

/// `h_m(s) = s + C(s-1+m, m)`.
pub fn h_m(s: u64, m: u32) -> BigUint {
    h_m_big(&BigUint::from(s), m)
}

struct Ell<'a> {
    g: &'a BoundFn,
    memo: HashMap<(usize, BigUint, BigInt), BigUint>,
    frames: u64,
    budget: u64,
}

impl<'a> Ell<'a> {
    fn new(g: &'a BoundFn, budget: u64) -> Self {
        Ell {
            g,
            memo: HashMap::new(),
            frames: 0,
            budget,
        }
    }

    fn tick(&mut self, depth: usize) -> Result<()> {
        self.frames += 1;
        if self.frames > self.budget {
            return Err(Error::BudgetExceeded {
                depth,
                frames: self.frames - 1,
            });
        }
        Ok(())
    }

    /// `h(0)` for `h(j) = g(j + offset) + delta`.
    fn head(&self, offset: &BigUint, delta: &BigInt) -> Result<(BigUint, BigUint)> {
        let base = self.g.eval(offset)?;
        let h0 = (BigInt::from(base.clone()) + delta)
            .to_biguint()
            .expect("derived bounds stay nonnegative");
        Ok((base, h0))
    }

    /// Offsets and deltas of the `f_i` derived from `h`, with their lengths.
    fn children(
        &mut self,
        m: usize,
        offset: &BigUint,
        delta: &BigInt,
        depth: usize,
    ) -> Result<Vec<(BigUint, BigInt, BigUint)>> {
        let (base, h0) = self.head(offset, delta)?;
        let count = h0.to_u64().filter(|&c| c <= self.budget).ok_or(Error::BudgetExceeded {
            depth,
            frames: self.frames,
        })?;
        let mut out = Vec::with_capacity(count as usize);
        let mut used = BigUint::zero();
        for i in 1..=count {
            let off_i = offset + 1u32 + &used;
            let delta_i = BigInt::from(i) - BigInt::from(base.clone());
            let len = self.ell(m - 1, &off_i, &delta_i, depth + 1)?;
            used += &len;
            out.push((off_i, delta_i, len));
        }
        Ok(out)
    }

    fn ell(&mut self, m: usize, offset: &BigUint, delta: &BigInt, depth: usize) -> Result<BigUint> {
        self.tick(depth)?;
        if m == 1 {
            return Ok(self.head(offset, delta)?.1 + 1u32);
        }
        let key = (m, offset.clone(), delta.clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let total = self
            .children(m, offset, delta, depth)?
            .into_iter()
            .fold(BigUint::one(), |acc, (_, _, len)| acc + len);
        self.memo.insert(key, total.clone());
        Ok(total)
    }

    fn extremal(
        &mut self,
        m: usize,
        offset: &BigUint,
        delta: &BigInt,
        cap: usize,
        out: &mut Vec<Vec<u32>>,
    ) -> Result<()> {
        let (_, h0) = self.head(offset, delta)?;
        let top = h0
            .to_u32()
            .ok_or_else(|| Error::invalid("sequence entries exceed u32"))?;
        let push = |v: Vec<u32>, out: &mut Vec<Vec<u32>>| {
            if out.len() < cap {
                out.push(v);
            }
            out.len() < cap
        };
        if m == 1 {
            for k in (0..=top).rev() {
                if !push(vec![k], out) {
                    break;
                }
            }
            return Ok(());
        }
        let mut first = vec![0; m];
        first[0] = top;
        if !push(first, out) {
            return Ok(());
        }
        for (i, (off_i, delta_i, _)) in self.children(m, offset, delta, 1)?.into_iter().enumerate() {
            let lead = top - (i as u32 + 1);
            let mut inner = Vec::new();
            self.extremal(m - 1, &off_i, &delta_i, cap - out.len(), &mut inner)?;
            for mut v in inner {
                v.insert(0, lead);
                out.push(v);
            }
            if out.len() >= cap {
                break;
            }
        }
        Ok(())
    }
}

/// `ℓ(m, f)`: the maximal length of an `f`-bounded lex-decreasing sequence
/// in ℕ^m, counting at most `budget` recursion frames.
pub fn ell(m: usize, f: &BoundFn, budget: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::invalid("need at least one variable"));
    }
    Ell::new(f, budget).ell(m, &BigUint::zero(), &BigInt::zero(), 1)
}

/// A maximal `f`-bounded lex-decreasing sequence, truncated to `cap` terms.
pub fn extremal_sequence(m: usize, f: &BoundFn, cap: usize, budget: u64) -> Result<Vec<ExpVec>> {
    if m == 0 {
        return Err(Error::invalid("need at least one variable"));
    }
    let mut out = Vec::new();
    if cap > 0 {
        Ell::new(f, budget).extremal(m, &BigUint::zero(), &BigInt::zero(), cap, &mut out)?;
    }
    Ok(out.into_iter().map(ExpVec::new).collect())
}

/// `t_m(f) = ℓ(m, h_m ∘ f)`, a bound on the length of strictly ascending
/// chains of ideals generated in degrees bounded by `f`.
pub fn t_m(m: usize, f: &BoundFn, budget: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::invalid("need at least one variable"));
    }
    ell(m, &f.compose_h(m as u32), budget)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Bad,
    /// `E_i ⊇ E_j` with `i < j`.
    Good { i: usize, j: usize },
}

/// Whether no earlier ideal contains a later one. The witness for a good
/// sequence is the first pair in order of `(j, i)`.
pub fn is_bad_sequence(ideals: &[MonomialIdeal]) -> Result<Verdict> {
    if let Some(first) = ideals.first() {
        for e in ideals {
            check_dim(first.dim(), e.dim())?;
        }
    }
    for j in 1..ideals.len() {
        for i in 0..j {
            if ideals[i].superset(&ideals[j])? {
                return Ok(Verdict::Good { i, j });
            }
        }
    }
    Ok(Verdict::Bad)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadSearch {
    pub sequence: Vec<MonomialIdeal>,
    /// The whole search tree was visited within the node cap.
    pub exhaustive: bool,
    pub nodes: u64,
}

/// All ideals of ℕ^m whose minimal generators have degree at most `d`,
/// plus the zero ideal.
pub fn ideals_generated_up_to(m: usize, d: u32) -> Vec<MonomialIdeal> {
    ideals_generated_capped(m, d, usize::MAX).expect("uncapped")
}

/// As [`ideals_generated_up_to`], giving up once more than `limit` ideals
/// have been produced.
fn ideals_generated_capped(m: usize, d: u32, limit: usize) -> Option<Vec<MonomialIdeal>> {
    let points = vectors_up_to_degree(m, d);
    let mut out = vec![MonomialIdeal::zero(m)];
    let mut chosen = Vec::new();
    let complete = antichains(&points, 0, &mut chosen, &mut |gens| {
        out.push(MonomialIdeal::from_raw(m, gens.to_vec()));
        out.len() <= limit
    });
    complete.then_some(out)
}

/// Feeds every nonempty antichain extending `chosen` to `emit`; stops and
/// returns false as soon as `emit` does.
fn antichains(
    points: &[ExpVec],
    from: usize,
    chosen: &mut Vec<ExpVec>,
    emit: &mut dyn FnMut(&[ExpVec]) -> bool,
) -> bool {
    for k in from..points.len() {
        let p = &points[k];
        if chosen
            .iter()
            .any(|c| c.divides_unchecked(p) || p.divides_unchecked(c))
        {
            continue;
        }
        chosen.push(p.clone());
        let go_on = emit(chosen) && antichains(points, k + 1, chosen, emit);
        chosen.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Longest bad sequence `E_0, E_1, …` of ideals of ℕ^m with `E_i` generated
/// in degrees at most `f(i)`, by depth-first search over at most `cap` nodes.
/// A desk-scale explorer: only meaningful for tiny `m` and `f`.
pub fn max_bad_degree_growth(m: usize, f: &BoundFn, cap: u64) -> Result<BadSearch> {
    if m == 0 || m > 3 {
        return Err(Error::invalid("bad-sequence search supports 1 ≤ m ≤ 3"));
    }
    let mut search = BadDfs {
        m,
        f,
        cap,
        nodes: 0,
        exhaustive: true,
        levels: HashMap::new(),
        best: Vec::new(),
    };
    let mut current = Vec::new();
    search.dfs(&mut current)?;
    Ok(BadSearch {
        sequence: search.best,
        exhaustive: search.exhaustive,
        nodes: search.nodes,
    })
}

struct BadDfs<'a> {
    m: usize,
    f: &'a BoundFn,
    cap: u64,
    nodes: u64,
    exhaustive: bool,
    levels: HashMap<u32, Vec<MonomialIdeal>>,
    best: Vec<MonomialIdeal>,
}

impl BadDfs<'_> {
    fn dfs(&mut self, current: &mut Vec<MonomialIdeal>) -> Result<()> {
        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        let d = self
            .f
            .at(current.len() as u64)?
            .to_u32()
            .filter(|&d| d <= 64)
            .ok_or_else(|| Error::invalid("degree bound too large for exhaustive search"))?;
        if !self.levels.contains_key(&d) {
            // generating the level costs at least one node per ideal
            let limit = (self.cap - self.nodes.min(self.cap)) as usize;
            match ideals_generated_capped(self.m, d, limit) {
                Some(level) => {
                    self.levels.insert(d, level);
                }
                None => {
                    self.exhaustive = false;
                    return Ok(());
                }
            }
        }
        let candidates = self.levels[&d].clone();
        for e in candidates {
            if current.iter().any(|prev| prev.superset(&e).expect("same dim")) {
                continue;
            }
            if self.nodes >= self.cap {
                self.exhaustive = false;
                return Ok(());
            }
            self.nodes += 1;
            current.push(e);
            self.dfs(current)?;
            current.pop();
            if !self.exhaustive {
                return Ok(());
            }
        }
        Ok(())
    }
}
