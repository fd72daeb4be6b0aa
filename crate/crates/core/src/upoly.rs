//! Dense univariate polynomials over a single field.

use std::fmt;
use std::sync::Arc;

use crate::coeff::{FieldSpec, Scalar};
use crate::poly::{Monomial, PolyError, Polynomial, Ring};

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn zero(field: FieldSpec) -> Self {
        UPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(Scalar::one(field))
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// The monomial `Z`.
    pub fn x(field: FieldSpec) -> Self {
        Self::new(field, vec![Scalar::zero(field), Scalar::one(field)])
    }

    /// `Z − a`.
    pub fn linear_root(a: &Scalar) -> Self {
        Self::new(a.field(), vec![-a, Scalar::one(a.field())])
    }

    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UPoly { field, coeffs }
    }

    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| Scalar::from_i64(field, c)).collect())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, a: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(self.field), |acc, c| &(&acc * a) + c)
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new(self.field, (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new(self.field, (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(self.field);
        }
        let mut out = vec![Scalar::zero(self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UPoly::new(self.field, out)
    }

    pub fn scale(&self, c: &Scalar) -> UPoly {
        UPoly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UPoly {
        match self.lead() {
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
            None => self.clone(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lead().expect("nonzero").inv().expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(self.field), self.clone());
        }
        let mut quot = vec![Scalar::zero(self.field); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * b);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UPoly::new(self.field, quot), UPoly::new(self.field, rem))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.field,
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &Scalar::from_i64(self.field, k as i64)).collect(),
        )
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &UPoly) -> UPoly {
        let mut base = self.rem(m);
        let mut acc = UPoly::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Reads a polynomial that involves at most the variable `var`.
    pub fn from_polynomial(f: &Polynomial, var: usize) -> Result<UPoly, PolyError> {
        if var >= f.nvars() {
            return Err(PolyError::VariableOutOfRange(var));
        }
        let mut coeffs = Vec::new();
        for (m, c) in f.terms() {
            if m.exps().iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return Err(PolyError::ArityMismatch { expected: 1, got: f.nvars() });
            }
            let k = m.exps()[var] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Scalar::zero(f.field()));
            }
            coeffs[k] = c.clone();
        }
        Ok(UPoly::new(f.field(), coeffs))
    }

    pub fn to_polynomial(&self, ring: &Arc<Ring>, var: usize) -> Polynomial {
        let n = ring.nvars();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (Monomial::var_power(n, var, k as u32), c.clone()))
            .collect::<Vec<_>>();
        Polynomial::from_terms(ring, terms).expect("terms built for this ring")
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = Ring::new(self.field, ["Z"]).expect("one variable");
        write!(f, "{}", crate::parse::format_poly(&self.to_polynomial(&ring, 0)))
    }
}
