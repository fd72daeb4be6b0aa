//! Exact field arithmetic over the rationals and prime fields.
//!
//! Every [`Scalar`] carries its field. Binary operators on scalars panic on a
//! field mismatch; the `checked_*` methods and [`scalar_arith`] report it as
//! an error instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Upper bound (exclusive) on prime moduli; products of two residues fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("{0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("cannot parse scalar {0:?}")]
    InvalidScalar(String),
    #[error("cannot parse field tag {0:?} (expected \"Q\" or \"Fp:<p>\")")]
    InvalidFieldTag(String),
    #[error("operation {0:?} needs a second operand")]
    MissingOperand(ArithOp),
}

/// A prime modulus `2 <= p < 2^31`, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self, CoeffError> {
        if p < MAX_MODULUS && is_prime(p) {
            Ok(Prime(p as u32))
        } else {
            Err(CoeffError::InvalidModulus(p))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Deterministic trial-division primality test; adequate below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The base field: ℚ or 𝔽_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(Prime),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, CoeffError> {
        Prime::new(p).map(FieldSpec::Prime)
    }

    /// Parses the textual tags `"Q"` and `"Fp:<p>"`.
    pub fn parse(tag: &str) -> Result<Self, CoeffError> {
        let tag = tag.trim();
        if tag == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = tag.strip_prefix("Fp:") {
            let p: u64 = rest.trim().parse().map_err(|_| CoeffError::InvalidFieldTag(tag.to_string()))?;
            return FieldSpec::prime(p);
        }
        Err(CoeffError::InvalidFieldTag(tag.to_string()))
    }

    pub fn modulus(self) -> Option<u32> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(p.get()),
        }
    }

    pub fn characteristic(self) -> u64 {
        self.modulus().map_or(0, u64::from)
    }

    pub fn is_rationals(self) -> bool {
        matches!(self, FieldSpec::Rationals)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{}", p.get()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Q(BigRational),
    Fp { value: u32, modulus: Prime },
}

/// An element of a [`FieldSpec`] in canonical form: a reduced fraction with
/// positive denominator, or a residue in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Uniform entry point for scalar arithmetic. Unary ops ignore `b`.
pub fn scalar_arith(op: ArithOp, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar, CoeffError> {
    let rhs = || b.ok_or(CoeffError::MissingOperand(op));
    match op {
        ArithOp::Add => a.checked_add(rhs()?),
        ArithOp::Sub => a.checked_sub(rhs()?),
        ArithOp::Mul => a.checked_mul(rhs()?),
        ArithOp::Div => a.checked_div(rhs()?),
        ArithOp::Neg => Ok(-a),
        ArithOp::Inv => a.inv(),
    }
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar(Repr::Q(BigRational::from_integer(BigInt::from(n)))),
            FieldSpec::Prime(p) => {
                let m = i64::from(p.get());
                Scalar(Repr::Fp { value: n.rem_euclid(m) as u32, modulus: p })
            }
        }
    }

    pub fn from_bigint(field: FieldSpec, n: &BigInt) -> Self {
        match field {
            FieldSpec::Rationals => Scalar(Repr::Q(BigRational::from_integer(n.clone()))),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p.get()));
                Scalar(Repr::Fp { value: r.to_u32().expect("residue below 2^31"), modulus: p })
            }
        }
    }

    /// `num / den`; in 𝔽_p this is `num · den⁻¹`.
    pub fn from_ratio(field: FieldSpec, num: &BigInt, den: &BigInt) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        match field {
            FieldSpec::Rationals => Ok(Scalar(Repr::Q(BigRational::new(num.clone(), den.clone())))),
            FieldSpec::Prime(_) => Scalar::from_bigint(field, num).checked_div(&Scalar::from_bigint(field, den)),
        }
    }

    /// Maps a rational into `field` (reducing mod p when needed).
    pub fn from_rational(field: FieldSpec, q: &BigRational) -> Result<Self, CoeffError> {
        Self::from_ratio(field, q.numer(), q.denom())
    }

    /// Parses an integer or an `a/b` fraction.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Self, CoeffError> {
        let text = text.trim();
        let bad = || CoeffError::InvalidScalar(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        if num.is_empty() || den.is_empty() || den.starts_with(['-', '+']) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        Self::from_ratio(field, &num, &den)
    }

    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Q(_) => FieldSpec::Rationals,
            Repr::Fp { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_zero(),
            Repr::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_one(),
            Repr::Fp { value, .. } => *value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Q(q) => Some(q),
            Repr::Fp { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u32> {
        match &self.0 {
            Repr::Q(_) => None,
            Repr::Fp { value, .. } => Some(*value),
        }
    }

    /// Lossy conversion used only by the floating-point demonstrator.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Q(q) => q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN),
            Repr::Fp { value, .. } => f64::from(*value),
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), CoeffError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(CoeffError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a + b)),
            (Repr::Fp { value: a, modulus }, Repr::Fp { value: b, .. }) => {
                let p = u64::from(modulus.get());
                let s = (u64::from(*a) + u64::from(*b)) % p;
                Scalar(Repr::Fp { value: s as u32, modulus: *modulus })
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.same_field(other)?;
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a * b)),
            (Repr::Fp { value: a, modulus }, Repr::Fp { value: b, .. }) => {
                let p = u64::from(modulus.get());
                let s = u64::from(*a) * u64::from(*b) % p;
                Scalar(Repr::Fp { value: s as u32, modulus: *modulus })
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Q(q) => Scalar(Repr::Q(q.recip())),
            Repr::Fp { value, modulus } => {
                let p = i64::from(modulus.get());
                let e = i64::from(*value).extended_gcd(&p);
                Scalar(Repr::Fp { value: e.x.rem_euclid(p) as u32, modulus: *modulus })
            }
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Repr::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Repr::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")?;
        if let Repr::Fp { modulus, .. } = &self.0 {
            write!(f, " (mod {})", modulus.get())?;
        }
        Ok(())
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: numeric in ℚ, by residue in 𝔽_p. Scalars of different
/// fields are ordered by field first so that the order stays total.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => a.cmp(b),
            (Repr::Fp { value: a, modulus: p }, Repr::Fp { value: b, modulus: q }) => p.cmp(q).then(a.cmp(b)),
            (Repr::Q(_), Repr::Fp { .. }) => Ordering::Less,
            (Repr::Fp { .. }, Repr::Q(_)) => Ordering::Greater,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Q(q) => Scalar(Repr::Q(-q)),
            Repr::Fp { value, modulus } => {
                let v = if *value == 0 { 0 } else { modulus.get() - value };
                Scalar(Repr::Fp { value: v, modulus: *modulus })
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$checked(&rhs).expect("scalar field mismatch")
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$checked(rhs).expect("scalar field mismatch")
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);

/// Exact `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
