//! Sparse multivariate polynomials over a [`FieldSpec`].
//!
//! A [`Polynomial`] lives in a [`Ring`] (field plus ordered variable names)
//! and stores only its nonzero terms. Terms are kept in graded-lex order,
//! which is also the printing order.

mod grid;
mod resultant;
mod tilt;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::coeff::{CoeffError, FieldSpec, Scalar};

pub use grid::{grid_reduce, identity_witness, GridReduction, GridSpec, Witness};
pub use resultant::{resultant, sylvester_matrix};
pub use tilt::{tilt_axes, Tilt, TiltMode, VariableSubstitution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different variable lists")]
    VariableMismatch,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,
    #[error("no point with nonvanishing top form in the search grid")]
    NoTiltPoint,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Exponent vector `X^α`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of the first variable, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `X_var^exp`.
    pub fn var_power(nvars: usize, var: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[var] = exp;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, if `divisor` divides `self`.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Pads with `extra` trailing zero exponents.
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.extend(std::iter::repeat_n(0, extra));
        Monomial(e)
    }

    /// Every monomial of total degree `d` in `nvars` variables, ascending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(prefix: &mut Vec<u32>, left: usize, d: u32, out: &mut Vec<Monomial>) {
            if left == 1 {
                prefix.push(d);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=d {
                prefix.push(e);
                rec(prefix, left - 1, d - e, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(&mut Vec::with_capacity(nvars), nvars, d, &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree with a distinguished value for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Base field plus ordered variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: FieldSpec,
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(field: FieldSpec, vars: impl IntoIterator<Item = S>) -> Result<Arc<Ring>, PolyError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(Ring { field, vars }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// A variable name not already used, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.vars.contains(&name) {
            name.push('_');
        }
        name
    }

    pub fn with_var(&self, name: String) -> Result<Arc<Ring>, PolyError> {
        let mut vars = self.vars.clone();
        vars.push(name);
        Ring::new(self.field, vars)
    }

    pub fn with_field(&self, field: FieldSpec) -> Arc<Ring> {
        Arc::new(Ring { field, vars: self.vars.clone() })
    }
}

#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Scalar::one(ring.field))
    }

    pub fn constant(ring: &Arc<Ring>, c: Scalar) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, Scalar::from_i64(ring.field, c))
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Self {
        Self::monomial(ring, Monomial::var_power(ring.nvars(), index, 1), Scalar::one(ring.field))
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity");
        assert_eq!(c.field(), ring.field, "coefficient field");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms, summing repeats and dropping zeros.
    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self, PolyError> {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(PolyError::ArityMismatch { expected: ring.nvars(), got: m.nvars() });
            }
            if c.field() != ring.field {
                return Err(PolyError::FieldMismatch(ring.field, c.field()));
            }
            add_term(&mut map, m, c);
        }
        Ok(Polynomial { ring: ring.clone(), terms: map })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.is_constant() && self.terms.values().all(Scalar::is_one)
    }

    /// Value of a constant polynomial (zero for the zero polynomial).
    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_constant() {
            Some(self.coeff(&Monomial::one(self.nvars())))
        } else {
            None
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| Scalar::zero(self.field()))
    }

    pub fn degree(&self) -> Degree {
        self.terms.keys().next_back().map_or(Degree::NegInfinity, |m| Degree::Finite(m.degree()))
    }

    pub fn degree_in(&self, var: usize) -> Degree {
        self.terms.keys().map(|m| u64::from(m.exps()[var])).max().map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u64) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    fn compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.ring, &other.ring) {
            return Ok(());
        }
        if self.ring.field != other.ring.field {
            return Err(PolyError::FieldMismatch(self.ring.field, other.ring.field));
        }
        if self.ring.vars != other.ring.vars {
            return Err(PolyError::VariableMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.compatible(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.compatible(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), -c);
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.compatible(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                add_term(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(t, v)| (t.mul(m), v * c)).collect() }
    }

    /// Divides by the leading (graded-lex) coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Image under the substitution homomorphism `X ↦ point`.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.nvars(), got: point.len() });
        }
        if let Some(bad) = point.iter().find(|c| c.field() != self.field()) {
            return Err(PolyError::FieldMismatch(self.field(), bad.field()));
        }
        let mut powers: Vec<Vec<Scalar>> = point.iter().map(|x| vec![Scalar::one(self.field()), x.clone()]).collect();
        let mut acc = Scalar::zero(self.field());
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &point[i];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Substitutes `X_i ↦ images[i]` (all images in a common ring).
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.nvars(), got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for img in images {
            Polynomial::zero(&target).compatible(img)?;
        }
        if target.field != self.field() {
            return Err(PolyError::FieldMismatch(self.field(), target.field));
        }
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(&target), p.clone()]).collect();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &images[i];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Coefficients in `X_var`, lowest power first; each coefficient is free of `X_var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = match self.degree_in(var) {
            Degree::NegInfinity => return Vec::new(),
            Degree::Finite(d) => d as usize,
        };
        let mut out = vec![Polynomial::zero(&self.ring); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exps()[var] as usize;
            let mut e = m.exps().to_vec();
            e[var] = 0;
            out[k].terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exps()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] -= 1;
            add_term(&mut terms, Monomial(exps), c * &Scalar::from_i64(self.field(), i64::from(e)));
        }
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Re-homes the polynomial into a ring with the same field whose variable
    /// list extends this one by trailing variables.
    pub fn extend_to(&self, ring: &Arc<Ring>) -> Result<Polynomial, PolyError> {
        if ring.field != self.field() {
            return Err(PolyError::FieldMismatch(self.field(), ring.field));
        }
        if ring.nvars() < self.nvars() || ring.vars[..self.nvars()] != self.ring.vars[..] {
            return Err(PolyError::VariableMismatch);
        }
        let extra = ring.nvars() - self.nvars();
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.extended(extra), c.clone())).collect(),
        })
    }

    /// Exact quotient by `divisor`, or `None` if it does not divide.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>, PolyError> {
        self.compatible(divisor)?;
        let (lm, lc) = match divisor.leading_term() {
            None => return Err(PolyError::ZeroPolynomial),
            Some((m, c)) => (m.clone(), c.inv()?),
        };
        let mut rest = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rest.leading_term() {
            let q = match m.div(&lm) {
                Some(q) => q,
                None => return Ok(None),
            };
            let qc = c * &lc;
            rest = &rest - &divisor.mul_monomial(&q, &qc);
            quot.insert(q, qc);
        }
        Ok(Some(Polynomial { ring: self.ring.clone(), terms: quot }))
    }
}

fn add_term(map: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Single entry point for ring operations.
#[derive(Debug, Clone)]
pub enum PolyOp<'a> {
    Add(&'a Polynomial),
    Sub(&'a Polynomial),
    Mul(&'a Polynomial),
    Pow(u32),
}

pub fn poly_arith(f: &Polynomial, op: PolyOp<'_>) -> Result<Polynomial, PolyError> {
    match op {
        PolyOp::Add(g) => f.try_add(g),
        PolyOp::Sub(g) => f.try_sub(g),
        PolyOp::Mul(g) => f.try_mul(g),
        PolyOp::Pow(k) => Ok(f.pow(k)),
    }
}

/// Evaluates `f` at `point`.
pub fn evaluate(f: &Polynomial, point: &[Scalar]) -> Result<Scalar, PolyError> {
    f.evaluate(point)
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("incompatible polynomial rings")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$checked(&rhs).expect("incompatible polynomial rings")
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_poly(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.ring.field, crate::parse::format_poly(self))
    }
}
