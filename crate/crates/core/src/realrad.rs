//! Real-radical certificates and the Motzkin polynomial.
//!
//! A certificate `(f, m, a_1..a_r, 𝔞)` claims `f^{2m} + Σ a_i² ∈ 𝔞`, which
//! places `f` in the real radical of `𝔞`. Only checking is offered; no
//! sum-of-squares search is attempted.

use std::sync::Arc;

use thiserror::Error;

use crate::coeff::{FieldSpec, Scalar};
use crate::ideal::{buchberger_with, default_order, GroebnerConfig, IdealError, DEFAULT_BUDGET};
use crate::poly::{GridSpec, PolyError, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealRadError {
    #[error("certificate exponent m must be at least 1")]
    ZeroExponent,
    #[error("certificates must be over the rationals, got {0}")]
    NotRational(FieldSpec),
    #[error("certificate polynomials live in different rings")]
    RingMismatch,
    #[error("the ideal needs at least one generator")]
    NoGenerators,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealRadicalCertificate {
    pub f: Polynomial,
    pub m: u32,
    pub sos_terms: Vec<Polynomial>,
    pub ideal_gens: Vec<Polynomial>,
}

impl RealRadicalCertificate {
    fn check_shape(&self) -> Result<(), RealRadError> {
        if self.m == 0 {
            return Err(RealRadError::ZeroExponent);
        }
        if self.f.field() != FieldSpec::Rationals {
            return Err(RealRadError::NotRational(self.f.field()));
        }
        if self.ideal_gens.is_empty() {
            return Err(RealRadError::NoGenerators);
        }
        let ring = self.f.ring();
        if self.sos_terms.iter().chain(&self.ideal_gens).any(|p| p.ring() != ring) {
            return Err(RealRadError::RingMismatch);
        }
        Ok(())
    }

    /// `f^{2m} + Σ a_i²`.
    pub fn witness(&self) -> Result<Polynomial, RealRadError> {
        self.check_shape()?;
        let mut acc = self.f.pow(2 * self.m);
        for a in &self.sos_terms {
            acc = acc.try_add(&a.try_mul(a)?)?;
        }
        Ok(acc)
    }
}

/// True when the certificate is valid, which proves `f` lies in the real
/// radical. False only rejects this particular certificate.
pub fn verify_real_radical_cert(cert: &RealRadicalCertificate) -> Result<bool, RealRadError> {
    verify_real_radical_cert_with(cert, DEFAULT_BUDGET)
}

pub fn verify_real_radical_cert_with(cert: &RealRadicalCertificate, budget: usize) -> Result<bool, RealRadError> {
    let w = cert.witness()?;
    let config = GroebnerConfig::new(default_order(cert.f.ring())).with_budget(budget);
    let gb = buchberger_with(&cert.ideal_gens, &config)?;
    Ok(gb.contains(&w)?)
}

/// `X⁴Y² + X²Y⁴ − 3X²Y² + 1` in `ℚ[X, Y]`.
pub fn motzkin() -> Polynomial {
    let ring = Ring::new(FieldSpec::Rationals, ["X", "Y"]).expect("distinct names");
    motzkin_in(&ring)
}

fn motzkin_in(ring: &Arc<Ring>) -> Polynomial {
    crate::parse::parse_poly("X^4*Y^2 + X^2*Y^4 - 3*X^2*Y^2 + 1", ring).expect("well-formed literal")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleCheck {
    pub min_value: Scalar,
    pub all_nonneg: bool,
    /// Grid points attaining the minimum, in grid order.
    pub minimizers: Vec<Vec<Scalar>>,
}

/// Exact evaluation over every grid point. Sampled evidence of
/// nonnegativity, nothing more.
pub fn nonneg_sample_check(f: &Polynomial, samples: &GridSpec) -> Result<SampleCheck, RealRadError> {
    if f.field() != FieldSpec::Rationals {
        return Err(RealRadError::NotRational(f.field()));
    }
    if samples.nvars() != f.nvars() {
        return Err(PolyError::ArityMismatch { expected: f.nvars(), got: samples.nvars() }.into());
    }
    let mut best: Option<(Scalar, Vec<Vec<Scalar>>)> = None;
    let mut all_nonneg = true;
    for pt in samples.points() {
        let v = f.evaluate(&pt)?;
        if v < Scalar::zero(FieldSpec::Rationals) {
            all_nonneg = false;
        }
        match &mut best {
            Some((b, pts)) if v == *b => pts.push(pt),
            Some((b, _)) if v > *b => {}
            _ => best = Some((v, vec![pt])),
        }
    }
    let (min_value, minimizers) = best.expect("grids are nonempty");
    Ok(SampleCheck { min_value, all_nonneg, minimizers })
}
