//! Hilbert and Hilbert-Samuel functions and polynomials of monomial ideals,
//! the minimizing coefficients of a Hilbert-Samuel polynomial, and the
//! ordinal `ψ` built from them.
//!
//! Counting goes through the inclusion-exclusion table of the generators:
//! for every subset `S` of generators, `(-1)^{|S|}` is recorded against the
//! degree of `lcm S`. The number of degree-`n` multiples of a monomial of
//! degree `L` is `C(n-L+m-1, m-1)`, which turns the table into exact
//! counts and, read as polynomials in `n`, into the Hilbert polynomials.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::bigser;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ivpoly::{binomial, macaulay_next, IntegerValuedPoly};
use crate::monom::{vectors_of_degree, ExpVec};
use crate::ordinal::CnfOrdinal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Maximum generator count for inclusion-exclusion (2^n subsets).
    pub subset_cap: usize,
    /// Extra degrees scanned past the stabilization bound when computing `n₀`.
    pub n0_margin: u64,
    /// Fixed `n₀` search window; `None` derives it from the stabilization bound.
    pub n0_window: Option<u64>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            subset_cap: 20,
            n0_margin: 8,
            n0_window: None,
        }
    }
}

/// Signed subset counts keyed by lcm degree.
#[derive(Debug, Clone)]
struct LcmTable {
    terms: BTreeMap<u64, BigInt>,
}

impl LcmTable {
    fn new(e: &MonomialIdeal, cap: usize) -> Result<Self> {
        let gens = e.gens();
        if gens.len() > cap {
            return Err(Error::TooManyGenerators {
                generators: gens.len(),
                cap,
            });
        }
        let mut terms: BTreeMap<u64, BigInt> = BTreeMap::new();
        // depth-first over subsets, carrying the running lcm and parity
        let mut stack: Vec<(usize, ExpVec, bool)> = vec![(0, ExpVec::zeros(e.dim()), false)];
        while let Some((next, lcm, odd)) = stack.pop() {
            *terms.entry(lcm.degree()).or_default() += if odd { -1 } else { 1 };
            for (k, g) in gens.iter().enumerate().skip(next) {
                stack.push((k + 1, lcm.join(g), !odd));
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LcmTable { terms })
    }

    /// `Σ_L c_L · C(n - L + k, k)`, truncated to `n ≥ L` when `exact`.
    fn eval(&self, n: i64, k: u32, exact: bool) -> BigInt {
        self.terms
            .iter()
            .filter(|(&l, _)| !exact || n >= l as i64)
            .map(|(&l, c)| c * binomial(&BigInt::from(n - l as i64 + i64::from(k)), k))
            .sum()
    }

    /// The polynomial `Σ_L c_L · C(T - L + k, k)` of degree ≤ k.
    fn poly(&self, k: u32) -> IntegerValuedPoly {
        let samples: Vec<BigInt> = (0..=i64::from(k)).map(|t| self.eval(t, k, false)).collect();
        IntegerValuedPoly::from_samples(&BigInt::zero(), &samples)
    }
}

fn to_nat(v: BigInt) -> BigUint {
    v.to_biguint().expect("lattice point counts are nonnegative")
}

/// `H_E(n)`: the number of degree-`n` points outside `E`.
pub fn hilbert_fn(e: &MonomialIdeal, n: u64) -> Result<BigUint> {
    hilbert_fn_with(e, n, &Config::default())
}

pub fn hilbert_fn_with(e: &MonomialIdeal, n: u64, cfg: &Config) -> Result<BigUint> {
    let table = LcmTable::new(e, cfg.subset_cap)?;
    Ok(to_nat(table.eval(n as i64, (e.dim() - 1) as u32, true)))
}

/// `h_E(s)`: the number of points of degree at most `s` outside `E`.
pub fn hilbert_samuel_fn(e: &MonomialIdeal, s: u64) -> Result<BigUint> {
    hilbert_samuel_fn_with(e, s, &Config::default())
}

pub fn hilbert_samuel_fn_with(e: &MonomialIdeal, s: u64, cfg: &Config) -> Result<BigUint> {
    let table = LcmTable::new(e, cfg.subset_cap)?;
    Ok(to_nat(table.eval(s as i64, e.dim() as u32, true)))
}

/// `H_E(0..=n_max)` and `h_E(0..=n_max)` in one pass.
pub fn hilbert_values(e: &MonomialIdeal, n_max: u64, cfg: &Config) -> Result<(Vec<BigUint>, Vec<BigUint>)> {
    let table = LcmTable::new(e, cfg.subset_cap)?;
    let m = e.dim() as u32;
    let hf = (0..=n_max as i64)
        .map(|n| to_nat(table.eval(n, m - 1, true)))
        .collect();
    let hs = (0..=n_max as i64)
        .map(|n| to_nat(table.eval(n, m, true)))
        .collect();
    Ok((hf, hs))
}

/// Agreement bound: the degree of the lcm of all generators.
pub fn threshold(e: &MonomialIdeal) -> u64 {
    e.gens()
        .iter()
        .fold(ExpVec::zeros(e.dim()), |acc, g| acc.join(g))
        .degree()
}

/// The Hilbert-Samuel polynomial `p_E` and a threshold `s*` with
/// `p_E(s) = h_E(s)` for all `s ≥ s*`.
pub fn hilbert_samuel_poly(e: &MonomialIdeal, cfg: &Config) -> Result<(IntegerValuedPoly, u64)> {
    let table = LcmTable::new(e, cfg.subset_cap)?;
    Ok((table.poly(e.dim() as u32), threshold(e)))
}

/// The Hilbert polynomial `P_E`, agreeing with `H_E` from [`threshold`] on.
pub fn hilbert_poly(e: &MonomialIdeal, cfg: &Config) -> Result<IntegerValuedPoly> {
    let table = LcmTable::new(e, cfg.subset_cap)?;
    Ok(table.poly((e.dim() - 1) as u32))
}

/// `h_E(s)` by recursion on the last variable, `h_E(s) = Σ_j h_{E_j}(s-j)`,
/// without enumerating generator subsets.
pub fn hilbert_samuel_fn_sliced(e: &MonomialIdeal, s: u64) -> BigUint {
    let mut memo = std::collections::HashMap::new();
    sliced_count(e, s, &mut memo)
}

fn sliced_count(
    e: &MonomialIdeal,
    s: u64,
    memo: &mut std::collections::HashMap<(MonomialIdeal, u64), BigUint>,
) -> BigUint {
    if e.is_unit() {
        return BigUint::zero();
    }
    if e.dim() == 1 {
        let cap = e.gens().first().map_or(u64::MAX, |g| u64::from(g.entries()[0]));
        return BigUint::from((s + 1).min(cap));
    }
    if let Some(hit) = memo.get(&(e.clone(), s)) {
        return hit.clone();
    }
    let mut total = BigUint::zero();
    for j in 0..=s {
        let layer = e.slice(j.min(u64::from(u32::MAX)) as u32).expect("dim ≥ 2");
        total += sliced_count(&layer, s - j, memo);
    }
    memo.insert((e.clone(), s), total.clone());
    total
}

/// Interpolation fallback for ideals with too many generators: samples
/// `h_E` at `s*, …, s*+m` by slicing and rebuilds the polynomial.
pub fn hilbert_samuel_poly_interpolated(e: &MonomialIdeal) -> (IntegerValuedPoly, u64) {
    let start = threshold(e);
    let samples: Vec<BigInt> = (0..=e.dim() as u64)
        .map(|k| BigInt::from(hilbert_samuel_fn_sliced(e, start + k)))
        .collect();
    (
        IntegerValuedPoly::from_samples(&BigInt::from(start), &samples),
        start,
    )
}

/// `C(T+m, m)`, the Hilbert-Samuel polynomial of the zero ideal.
pub fn zero_ideal_poly(m: usize) -> IntegerValuedPoly {
    IntegerValuedPoly::basis(m)
}

/// Minimizing coefficients `(c_{m-1}, …, c_0)` of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimizingCoefficients {
    /// `c_{m-1}` first.
    #[serde(serialize_with = "bigser::seq")]
    pub coeffs: Vec<BigInt>,
}

impl MinimizingCoefficients {
    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_i`.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.coeffs[self.coeffs.len() - 1 - i]
    }

    pub fn is_valid(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// The largest `i` with `c_i < 0`, i.e. the first offending entry read
    /// from the leading end.
    pub fn first_negative(&self) -> Option<(usize, &BigInt)> {
        let m = self.coeffs.len();
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative())
            .map(|(k, c)| (m - 1 - k, c))
    }

    /// `|c| = Σ c_i`, defined for valid coefficients.
    pub fn total(&self) -> Option<BigUint> {
        self.coeffs.iter().map(|c| c.to_biguint()).sum()
    }

    fn invalid_error(&self) -> Error {
        let (index, value) = self.first_negative().expect("invalid coefficients");
        Error::InvalidPolynomial {
            index,
            value: value.to_string(),
        }
    }
}

/// The shift-and-subtract step: `q(T) = p(T+b) - C(T+d+1+b, d+1) + C(T+d+1, d+1)`
/// with `b` the leading coefficient and `d` the degree of `p`.
fn reduce_step(p: &IntegerValuedPoly) -> IntegerValuedPoly {
    let d = p.degree() as usize;
    let b = p.leading_coeff();
    let cone = IntegerValuedPoly::basis(d + 1);
    let q = &p.shift(&b) - &(&cone.shift(&b) - &cone);
    debug_assert!(q.degree() < p.degree());
    q
}

fn tilde_coefficients(p: &IntegerValuedPoly) -> Vec<BigInt> {
    if p.degree() <= 0 {
        return vec![p.coeff(0)];
    }
    let d = p.degree() as usize;
    let tail = tilde_coefficients(&reduce_step(p));
    let mut out = Vec::with_capacity(d + 1);
    out.push(p.leading_coeff());
    out.extend(std::iter::repeat_n(BigInt::zero(), d - tail.len()));
    out.extend(tail);
    out
}

/// Runs the minimizing-coefficient recursion on `p` for ideals in `m`
/// variables. All entries are nonnegative exactly when `p` is the
/// Hilbert-Samuel polynomial of a nonempty final segment of ℕ^m.
///
/// The zero-ideal polynomial `C(T+m, m)` has degree `m` and is rejected
/// here; [`psi`] handles it.
pub fn minimizing_coefficients(p: &IntegerValuedPoly, m: usize) -> Result<MinimizingCoefficients> {
    if p.is_zero() {
        return Err(Error::invalid(
            "the zero polynomial (unit ideal) has no minimizing coefficients",
        ));
    }
    coefficients(p, m)
}

/// The recursion without the nonzero precondition; the unit ideal's
/// polynomial `0` gets all-zero coefficients.
fn coefficients(p: &IntegerValuedPoly, m: usize) -> Result<MinimizingCoefficients> {
    if m == 0 {
        return Err(Error::invalid("need at least one variable"));
    }
    if p.degree() >= m as isize {
        return Err(Error::invalid(format!(
            "degree {} is not below the number of variables {m}",
            p.degree()
        )));
    }
    if p.is_zero() {
        return Ok(MinimizingCoefficients {
            coeffs: vec![BigInt::zero(); m],
        });
    }
    let tail = tilde_coefficients(p);
    let mut coeffs = vec![BigInt::zero(); m - tail.len()];
    coeffs.extend(tail);
    Ok(MinimizingCoefficients { coeffs })
}

fn valid_coefficients(p: &IntegerValuedPoly, m: usize) -> Result<MinimizingCoefficients> {
    let c = coefficients(p, m)?;
    if !c.is_valid() {
        return Err(c.invalid_error());
    }
    Ok(c)
}

/// `ψ_p = ω^{m-1}·c_{m-1} + … + c_0`, or `ω^m` for `C(T+m, m)`.
pub fn psi(p: &IntegerValuedPoly, m: usize) -> Result<CnfOrdinal> {
    if *p == zero_ideal_poly(m) {
        return Ok(CnfOrdinal::omega_pow(CnfOrdinal::from(m as u64)));
    }
    let c = valid_coefficients(p, m)?;
    Ok(psi_from_coefficients(&c))
}

pub fn psi_from_coefficients(c: &MinimizingCoefficients) -> CnfOrdinal {
    CnfOrdinal::from_terms((0..c.dim()).map(|i| {
        (
            CnfOrdinal::from(i as u64),
            c.get(i).to_biguint().expect("valid coefficients"),
        )
    }))
}

/// `φ(p) = Σ c_i`, the length of the canonical decomposition.
pub fn phi(p: &IntegerValuedPoly, m: usize) -> Result<BigUint> {
    if *p == zero_ideal_poly(m) {
        return Err(Error::invalid("φ is undefined for the zero ideal"));
    }
    Ok(valid_coefficients(p, m)?.total().expect("valid"))
}

/// Largest decomposition materialized by [`canonical_decomposition`].
pub const MAX_DECOMPOSITION_LEN: u64 = 10_000_000;

/// The sequence `a_1 ≥ … ≥ a_s` with
/// `p(T) = Σ_k C(T + a_k - (k-1), a_k)`: `c_i` copies of `i`, descending.
pub fn canonical_decomposition(p: &IntegerValuedPoly, m: usize) -> Result<Vec<u32>> {
    let total = phi(p, m)?;
    if total > BigUint::from(MAX_DECOMPOSITION_LEN) {
        return Err(Error::invalid(format!(
            "decomposition of length {total} is too long to list"
        )));
    }
    let c = valid_coefficients(p, m)?;
    let mut out = Vec::new();
    for i in (0..m).rev() {
        let count = c.get(i).to_usize().expect("bounded above");
        out.extend(std::iter::repeat_n(i as u32, count));
    }
    Ok(out)
}

/// `Σ_k C(T + a_k - (k-1), a_k)` for `k = 1..=s`.
pub fn reconstruct(a: &[u32]) -> IntegerValuedPoly {
    a.iter()
        .enumerate()
        .fold(IntegerValuedPoly::zero(), |acc, (k, &ai)| {
            acc + IntegerValuedPoly::basis(ai as usize).shift(&BigInt::from(-(k as i64)))
        })
}

fn small(v: &BigInt, what: &str) -> Result<u32> {
    v.to_u32()
        .ok_or_else(|| Error::invalid(format!("{what} {v} does not fit an exponent")))
}

/// Builds an ideal of ℕ^m whose Hilbert-Samuel polynomial is `p`, following
/// the recursion: `I = (x_m^{b+1}) + x_m^b·J` with `J` realizing the reduced
/// polynomial in `m-1` variables. Extra variables beyond `deg p + 1` enter
/// as linear generators.
pub fn realize(p: &IntegerValuedPoly, m: usize) -> Result<MonomialIdeal> {
    if *p == zero_ideal_poly(m) {
        return Ok(MonomialIdeal::zero(m));
    }
    valid_coefficients(p, m)?;
    realize_valid(p, m)
}

fn realize_valid(p: &IntegerValuedPoly, m: usize) -> Result<MonomialIdeal> {
    if p.is_zero() {
        return Ok(MonomialIdeal::unit(m));
    }
    let used = p.degree() as usize + 1;
    let core = if used == 1 {
        let k = small(&p.coeff(0), "constant")?;
        MonomialIdeal::from_raw(1, vec![ExpVec::new(vec![k])])
    } else {
        let b = small(&p.leading_coeff(), "leading coefficient")?;
        let j = realize_valid(&reduce_step(p), used - 1)?;
        let mut raw = vec![ExpVec::pure_power(used, used - 1, b + 1)];
        raw.extend(j.gens().iter().map(|g| {
            let mut e = g.entries().to_vec();
            e.push(b);
            ExpVec::new(e)
        }));
        MonomialIdeal::from_raw(used, raw)
    };
    let mut raw: Vec<ExpVec> = core.gens().iter().map(|g| g.pad(m - used, false)).collect();
    raw.extend((used..m).map(|i| ExpVec::pure_power(m, i, 1)));
    Ok(MonomialIdeal::from_raw(m, raw))
}

/// The ordinal height of `E` in the poset of final segments under reverse
/// inclusion: `ψ(p_E)`, and `ω^m` for the zero ideal.
pub fn height(e: &MonomialIdeal, cfg: &Config) -> Result<CnfOrdinal> {
    let (p, _) = hilbert_samuel_poly(e, cfg)?;
    psi(&p, e.dim())
}

/// Degree from which `H_E(n+1) = H_E(n)^⟨n⟩` provably holds: past the
/// polynomial threshold and past the decomposition length of `P_E`.
fn stabilization_bound(e: &MonomialIdeal, cfg: &Config) -> Result<u64> {
    let m = e.dim();
    let phi_hilbert = if m == 1 {
        0
    } else {
        let hp = hilbert_poly(e, cfg)?;
        phi(&hp, m - 1)?
            .to_u64()
            .ok_or_else(|| Error::invalid("decomposition length exceeds u64"))?
    };
    Ok(threshold(e).max(phi_hilbert).max(1))
}

/// `n₀(E)`: the least `n₀ ≥ 1` with `H(n+1) = H(n)^⟨n⟩` for every `n ≥ n₀`.
///
/// Equality beyond [`stabilization_bound`] is guaranteed, so the scan over
/// `[1, bound]` is a certificate. A configured window shorter than the
/// bound is reported as exhausted.
pub fn n0(e: &MonomialIdeal, cfg: &Config) -> Result<u64> {
    if e.is_zero() || e.is_unit() {
        return Err(Error::invalid("n0 needs a nonzero proper ideal"));
    }
    let bound = stabilization_bound(e, cfg)?;
    let window = cfg
        .n0_window
        .unwrap_or(bound + e.dim() as u64 + cfg.n0_margin);
    if window < bound {
        return Err(Error::WindowExhausted {
            window,
            needed: bound,
        });
    }
    let (hf, _) = hilbert_values(e, window + 1, cfg)?;
    let mut n0 = 1;
    for n in 1..=window as usize {
        if hf[n + 1] != macaulay_next(&hf[n], n as u32)? {
            n0 = n as u64 + 1;
        }
    }
    Ok(n0)
}

/// Whether every degree layer of `E` is a final segment in lex order.
pub fn is_lex_segment(e: &MonomialIdeal) -> bool {
    if e.is_zero() {
        return true;
    }
    // layers above the top generator degree are products of lex layers
    for n in 0..=e.max_generator_degree() as u32 {
        let mut seen_outside = false;
        for v in vectors_of_degree(e.dim(), n) {
            let inside = e.contains_unchecked(&v);
            if inside && seen_outside {
                return false;
            }
            seen_outside |= !inside;
        }
    }
    true
}

/// The lex-segment ideal with the Hilbert function of `E`, built from the
/// degree layers `0..=max_degree`: in each degree the lex-largest
/// `#layer - H_E(n)` points.
pub fn lex_segment_ideal(e: &MonomialIdeal, max_degree: u64, cfg: &Config) -> Result<MonomialIdeal> {
    let m = e.dim();
    if e.is_zero() {
        return Ok(MonomialIdeal::zero(m));
    }
    if e.max_generator_degree() > max_degree {
        return Err(Error::DegreeBoundTooSmall(max_degree));
    }
    let top = u32::try_from(max_degree).map_err(|_| Error::invalid("degree bound too large"))?;
    let (hf, _) = hilbert_values(e, max_degree, cfg)?;
    let mut raw = Vec::new();
    let mut prev: Vec<ExpVec> = Vec::new();
    for n in 0..=top {
        let layer = vectors_of_degree(m, n);
        let keep = layer.len() - hf[n as usize].to_usize().expect("bounded by layer size");
        let chosen: Vec<ExpVec> = layer.into_iter().take(keep).collect();
        // final-segment compatibility: x_i times the previous layer stays inside
        for g in &prev {
            for i in 0..m {
                let mut up = g.entries().to_vec();
                up[i] += 1;
                if !chosen.contains(&ExpVec::new(up)) {
                    return Err(Error::DegreeBoundTooSmall(max_degree));
                }
            }
        }
        raw.extend(chosen.iter().cloned());
        prev = chosen;
    }
    let lex = MonomialIdeal::from_raw(m, raw);
    let horizon = stabilization_bound(e, cfg)?.max(stabilization_bound(&lex, cfg)?) + 1;
    let (h_e, _) = hilbert_values(e, horizon, cfg)?;
    let (h_l, _) = hilbert_values(&lex, horizon, cfg)?;
    if h_e != h_l {
        return Err(Error::DegreeBoundTooSmall(max_degree));
    }
    Ok(lex)
}

/// Bundled invariants of one ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertProfile {
    pub dim: usize,
    /// Hilbert-Samuel polynomial `p_E`.
    pub p: IntegerValuedPoly,
    /// `p_E(s) = h_E(s)` for `s ≥ threshold`.
    pub threshold: u64,
    /// Minimizing coefficients `c_{m-1}, …, c_0`; absent for the zero ideal.
    #[serde(serialize_with = "bigser::opt_seq")]
    pub c: Option<Vec<BigInt>>,
    pub psi: CnfOrdinal,
    /// `φ(p_E) = Σ c_i`; absent for the zero ideal.
    #[serde(serialize_with = "bigser::opt")]
    pub phi: Option<BigUint>,
    /// `a_1 ≥ … ≥ a_s`; absent for the zero ideal or when too long to list.
    pub a_sequence: Option<Vec<u32>>,
    /// Absent for the zero and unit ideals.
    pub n0: Option<u64>,
}

pub fn profile(e: &MonomialIdeal, cfg: &Config) -> Result<HilbertProfile> {
    let m = e.dim();
    let (p, threshold) = hilbert_samuel_poly(e, cfg)?;
    let psi_value = psi(&p, m)?;
    let (c, phi_value, a_sequence) = if e.is_zero() {
        (None, None, None)
    } else {
        let c = valid_coefficients(&p, m)?;
        (
            Some(c.coeffs.clone()),
            c.total(),
            canonical_decomposition(&p, m).ok(),
        )
    };
    let n0_value = if e.is_zero() || e.is_unit() {
        None
    } else {
        Some(n0(e, cfg)?)
    };
    Ok(HilbertProfile {
        dim: m,
        p,
        threshold,
        c,
        psi: psi_value,
        phi: phi_value,
        a_sequence,
        n0: n0_value,
    })
}
