//! Poincaré series of standard graded algebras, kept in the reduced form
//! `Q(Z) / (1 − Z)^D` with `Q(1) ≠ 0` unless `D = 0`.
//!
//! Projective dimension is `D − 1` and multiplicity is `Q(1)`.

mod odd;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::coeff::binomial;
use crate::poly::Monomial;

pub use odd::{odd_system_solve, OddConfig, OddError, OddSolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("quotient by a regular element needs a module of positive dimension")]
    DimensionUnderflow,
    #[error("degree of a regular element must be at least 1")]
    InvalidDegree,
    #[error("monomial has {got} exponents, ring has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
}

/// Laurent polynomial in `Z` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut out = Laurent::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            out.add_term(low + k as i64, BigInt::from(c));
        }
        out
    }

    /// `(exponent, coefficient)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn low(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn high(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, k: i64, c: BigInt) {
        let entry = self.terms.entry(k).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c);
        }
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn shift(&self, k: i64) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `(1 − Z)^k`.
    pub fn one_minus_z_pow(k: u32) -> Laurent {
        let mut out = Laurent::zero();
        for i in 0..=u64::from(k) {
            let c = binomial(u64::from(k), i);
            out.add_term(i as i64, if i % 2 == 0 { c } else { -c });
        }
        out
    }

    /// Exact quotient by `1 − Z`, or `None` when `Q(1) ≠ 0`.
    pub fn div_one_minus_z(&self) -> Option<Laurent> {
        let (low, high) = match (self.low(), self.high()) {
            (Some(l), Some(h)) => (l, h),
            _ => return Some(Laurent::zero()),
        };
        // Q = (1 − Z)R  ⇔  R_k = Q_low + ⋯ + Q_k
        let mut acc = BigInt::zero();
        let mut out = Laurent::zero();
        for k in low..high {
            acc += self.coeff(k);
            out.add_term(k, acc.clone());
        }
        acc += self.coeff(high);
        acc.is_zero().then_some(out)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_laurent(self))
    }
}

/// Renders with ascending exponents, e.g. `1 + Z - Z^2`.
pub fn format_laurent(l: &Laurent) -> String {
    if l.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (k, c)) in l.terms().enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let z = match k {
            0 => String::new(),
            1 => "Z".into(),
            _ => format!("Z^{k}"),
        };
        match (z.is_empty(), mag.is_one()) {
            (true, _) => out.push_str(&mag.to_string()),
            (false, true) => out.push_str(&z),
            (false, false) => out.push_str(&format!("{mag}*{z}")),
        }
    }
    out
}

/// `numerator / (1 − Z)^denom_power`, reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    numerator: Laurent,
    denom_power: u32,
}

impl GradedSeries {
    pub fn new(numerator: Laurent, denom_power: u32) -> Self {
        let mut s = GradedSeries { numerator, denom_power };
        s.reduce();
        s
    }

    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.denom_power = 0;
            return;
        }
        while self.denom_power > 0 {
            match self.numerator.div_one_minus_z() {
                Some(q) => {
                    self.numerator = q;
                    self.denom_power -= 1;
                }
                None => break,
            }
        }
    }

    pub fn numerator(&self) -> &Laurent {
        &self.numerator
    }

    pub fn denom_power(&self) -> u32 {
        self.denom_power
    }

    /// The zero module.
    pub fn zero() -> Self {
        GradedSeries { numerator: Laurent::zero(), denom_power: 0 }
    }

    pub fn add(&self, other: &GradedSeries) -> GradedSeries {
        let d = self.denom_power.max(other.denom_power);
        let lift = |s: &GradedSeries| s.numerator.mul(&Laurent::one_minus_z_pow(d - s.denom_power));
        GradedSeries::new(lift(self).add(&lift(other)), d)
    }

    /// Coefficient of `Z^k`: the dimension of the degree-`k` part.
    pub fn coefficient(&self, k: i64) -> BigInt {
        coefficient_of(&self.numerator, self.denom_power, k)
    }

    /// Coefficients for degrees `0..=m`.
    pub fn dims(&self, m: i64) -> Vec<BigInt> {
        (0..=m).map(|k| self.coefficient(k)).collect()
    }
}

/// `[Z^k] Q / (1 − Z)^d`.
fn coefficient_of(q: &Laurent, d: u32, k: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for (j, c) in q.terms() {
        if j > k {
            break;
        }
        let w = if d == 0 {
            if j == k {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        } else {
            binomial((k - j) as u64 + u64::from(d) - 1, u64::from(d) - 1)
        };
        acc += c * w;
    }
    acc
}

/// `K[T_0, …, T_n]` with `n + 1 = nvars`: `1 / (1 − Z)^{n+1}`.
pub fn series_poly_ring(nvars: u32) -> GradedSeries {
    GradedSeries::new(Laurent::one(), nvars)
}

/// `M(−k)`: numerator times `Z^k`.
pub fn series_shift(s: &GradedSeries, k: i64) -> GradedSeries {
    GradedSeries { numerator: s.numerator.shift(k), denom_power: s.denom_power }
}

/// `M / fM` for a regular element `f` of degree `δ`: multiply by `1 − Z^δ`.
pub fn series_quot_regular(s: &GradedSeries, delta: u32) -> Result<GradedSeries, GradedError> {
    if delta == 0 {
        return Err(GradedError::InvalidDegree);
    }
    if s.denom_power == 0 {
        return Err(GradedError::DimensionUnderflow);
    }
    let factor = Laurent::one().sub(&Laurent::monomial(i64::from(delta), BigInt::one()));
    Ok(GradedSeries::new(s.numerator.mul(&factor), s.denom_power))
}

/// Series of `K[T_0, …, T_n] / I` for a monomial ideal `I`, via
/// `H(I) = H(I + ⟨x⟩) + Z·H(I : x)` on a pivot variable `x`.
pub fn series_monomial_quotient(nvars: u32, gens: &[Monomial]) -> Result<GradedSeries, GradedError> {
    for g in gens {
        if g.nvars() != nvars as usize {
            return Err(GradedError::ArityMismatch { expected: nvars as usize, got: g.nvars() });
        }
    }
    Ok(monomial_series(nvars, minimalize(gens.to_vec())))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    // ascending degree: a divisor always comes before its multiples
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn monomial_series(nvars: u32, gens: Vec<Monomial>) -> GradedSeries {
    if gens.iter().any(Monomial::is_one) {
        return GradedSeries::zero();
    }
    if gens.iter().all(|g| g.degree() == 1) {
        // distinct variables after minimalization: a regular sequence of linear forms
        return GradedSeries::new(Laurent::one(), nvars - gens.len() as u32);
    }
    let pivot_gen = gens.iter().max_by_key(|g| g.degree()).expect("nonempty");
    let x = pivot_gen.exps().iter().position(|&e| e > 0).expect("non-constant");
    let n = nvars as usize;
    let xm = Monomial::var_power(n, x, 1);
    let mut plus = gens.clone();
    plus.push(xm.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.exps().to_vec();
            e[x] = e[x].saturating_sub(1);
            Monomial::new(e)
        })
        .collect();
    let a = monomial_series(nvars, minimalize(plus));
    let b = monomial_series(nvars, minimalize(colon));
    a.add(&series_shift(&b, 1))
}

/// Dimension data read from a reduced series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimMult {
    /// `D − 1`; `−1` for finite-length modules.
    pub pd: i64,
    pub dim: u32,
    /// `Q(1)`; absent when `pd = −1`.
    pub mult: Option<BigInt>,
    /// `Σ dim M_m = Q(1)`; present only when `pd = −1`.
    pub total_dimension: Option<BigInt>,
}

pub fn dim_mult(s: &GradedSeries) -> DimMult {
    let q1 = s.numerator.eval_one();
    let pd = i64::from(s.denom_power) - 1;
    if pd < 0 {
        DimMult { pd, dim: 0, mult: None, total_dimension: Some(q1) }
    } else {
        DimMult { pd, dim: s.denom_power, mult: Some(q1), total_dimension: None }
    }
}

/// `h(m) = Σ_{k ≤ m} dim M_k`.
pub fn hilbert_samuel(s: &GradedSeries, m: i64) -> BigInt {
    coefficient_of(&s.numerator, s.denom_power + 1, m)
}

/// `H(m) = Σ_{i=0}^{D} e_i·C(m+i, i)`, equal to `h(m)` for all `m ≥ valid_from`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSamuelPolynomial {
    pub e: Vec<BigInt>,
    pub valid_from: i64,
}

impl HilbertSamuelPolynomial {
    pub fn eval(&self, m: i64) -> BigInt {
        self.e
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let top = m + i as i64;
                if top < 0 {
                    // C(m+i, i) as a polynomial in m for negative arguments
                    let prod = (1..=i as i64).fold(BigInt::one(), |acc, k| acc * BigInt::from(m + k));
                    e * prod / crate::coeff::factorial(i as u64)
                } else {
                    e * binomial(top as u64, i as u64)
                }
            })
            .sum()
    }
}

/// Partial fractions of `Q / (1 − Z)^{D+1}`: the Taylor coefficients `c_k` of
/// `Q` at `Z = 1` (in `W = 1 − Z`) give `e_{D−k} = c_k`; the leftover Laurent
/// part determines where the polynomial starts to agree.
pub fn hilbert_samuel_polynomial(s: &GradedSeries) -> HilbertSamuelPolynomial {
    let d = s.denom_power;
    let mut c = vec![BigInt::zero(); d as usize + 1];
    for (j, q) in s.numerator.terms() {
        for (k, ck) in c.iter_mut().enumerate() {
            let k64 = k as u64;
            // coefficient of W^k in (1 − W)^j
            let w = if j >= 0 {
                let b = binomial(j as u64, k64);
                if k % 2 == 0 {
                    b
                } else {
                    -b
                }
            } else {
                binomial((-j) as u64 + k64 - 1, k64)
            };
            *ck += q * w;
        }
    }
    let mut expansion = Laurent::zero();
    for (k, ck) in c.iter().enumerate() {
        expansion = expansion.add(&Laurent::one_minus_z_pow(k as u32).mul(&Laurent::monomial(0, ck.clone())));
    }
    let mut rest = s.numerator.sub(&expansion);
    for _ in 0..=d {
        rest = rest.div_one_minus_z().expect("Taylor remainder vanishes to order D+1");
    }
    // c_k / (1 − Z)^{D+1−k} matches its polynomial from m = k − D on
    let poly_from = c.iter().enumerate().filter(|(_, ck)| !ck.is_zero()).map(|(k, _)| k as i64 - i64::from(d)).max();
    let valid_from = match (poly_from, rest.high()) {
        (p, Some(h)) => p.map_or(h + 1, |p| p.max(h + 1)),
        (Some(p), None) => p,
        (None, None) => i64::MIN,
    };
    let e = (0..=d as usize).map(|i| c[d as usize - i].clone()).collect();
    HilbertSamuelPolynomial { e, valid_from }
}
