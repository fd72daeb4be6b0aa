//! Eigenvalue solver for zero-dimensional systems.
//!
//! The quotient `K[X]/𝔞` is finite-dimensional with the standard monomials as
//! basis. Multiplication by `x_i` is a linear map on it whose eigenvalues are
//! exactly the `i`-th coordinates of the points of `V(𝔞)`; for a point `a`,
//! the separator `g` (1 at `a`, 0 at the other points) is a common
//! eigenvector: `x_i·g = a_i·g` in the quotient.

mod roots;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use thiserror::Error;

use crate::coeff::{FieldSpec, Scalar};
use crate::ideal::{buchberger_with, default_order, quotient_basis, GroebnerBasis, GroebnerConfig, IdealError};
use crate::matrix::ScalarMatrix;
use crate::poly::{Monomial, PolyError, Polynomial, Ring};
use crate::upoly::UPoly;

pub use roots::{Root, EXHAUSTIVE_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StickelError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("matrix is not square")]
    NotSquare,
    #[error("zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("the unit ideal has a zero-dimensional quotient")]
    EmptyQuotient,
    #[error("points are not pairwise distinct")]
    DuplicatePoints,
    #[error("point index {0} out of range")]
    PointOutOfRange(usize),
    #[error("candidate eigenvector has zero normal form")]
    ZeroEigenvector,
}

/// `K[X_1,…,X_n]/𝔞` for a zero-dimensional, proper ideal `𝔞`.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    mults: Vec<OnceLock<ScalarMatrix>>,
}

impl QuotientAlgebra {
    pub fn new(gb: GroebnerBasis) -> Result<Self, StickelError> {
        if gb.is_unit() {
            return Err(StickelError::EmptyQuotient);
        }
        let basis = quotient_basis(&gb)?;
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mults = (0..gb.ring().nvars()).map(|_| OnceLock::new()).collect();
        Ok(QuotientAlgebra { gb, basis, index, mults })
    }

    pub fn from_generators(gens: &[Polynomial]) -> Result<Self, StickelError> {
        let ring = gens.first().ok_or(IdealError::NoGenerators)?.ring().clone();
        Self::new(buchberger_with(gens, &GroebnerConfig::new(default_order(&ring)))?)
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.gb.ring()
    }

    pub fn field(&self) -> FieldSpec {
        self.ring().field()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the normal form of `f` in the standard-monomial basis.
    pub fn coordinates(&self, f: &Polynomial) -> Result<Vec<Scalar>, StickelError> {
        let nf = self.gb.normal_form(f)?;
        let mut v = vec![Scalar::zero(self.field()); self.dim()];
        for (m, c) in nf.terms() {
            v[self.index[m]] = c.clone();
        }
        Ok(v)
    }

    /// Matrix of `y ↦ x_var·y`; column `j` holds the coordinates of `X_var·b_j`.
    pub fn mult_matrix(&self, var: usize) -> Result<ScalarMatrix, StickelError> {
        let slot = self.mults.get(var).ok_or(PolyError::VariableOutOfRange(var))?;
        if let Some(m) = slot.get() {
            return Ok(m.clone());
        }
        let m = self.build_mult_matrix(var)?;
        Ok(slot.get_or_init(|| m).clone())
    }

    fn build_mult_matrix(&self, var: usize) -> Result<ScalarMatrix, StickelError> {
        let ring = self.ring();
        let n = self.dim();
        let one = Scalar::one(self.field());
        let mut m = ScalarMatrix::zeros(self.field(), n, n);
        for (j, b) in self.basis.iter().enumerate() {
            let shifted = b.mul(&Monomial::var_power(ring.nvars(), var, 1));
            let col = self.coordinates(&Polynomial::monomial(ring, shifted, one.clone()))?;
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }
}

pub fn mult_matrix(qa: &QuotientAlgebra, var: usize) -> Result<ScalarMatrix, StickelError> {
    qa.mult_matrix(var)
}

/// `det(Z·I − m)` by Berkowitz's division-free algorithm.
pub fn char_poly(m: &ScalarMatrix, field: FieldSpec) -> Result<UPoly, StickelError> {
    if !m.is_square() {
        return Err(StickelError::NotSquare);
    }
    if let Some(p) = field.modulus() {
        return Ok(char_poly_mod(m, field, u64::from(p)));
    }
    let n = m.rows();
    // coefficients of the current characteristic polynomial, highest degree first
    let mut c = vec![Scalar::one(field)];
    for r in 0..n {
        // t = [1, −a_rr, −R·C, −R·M·C, …] for the leading (r+1)×(r+1) block
        let mut t = Vec::with_capacity(r + 2);
        t.push(Scalar::one(field));
        t.push(-m.get(r, r));
        let mut v: Vec<Scalar> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(Scalar::zero(field), |acc, k| &acc + &(m.get(r, k) * &v[k]));
            t.push(-rc);
            v = (0..r).map(|i| (0..r).fold(Scalar::zero(field), |acc, k| &acc + &(m.get(i, k) * &v[k]))).collect();
        }
        let next: Vec<Scalar> =
            (0..r + 2)
                .map(|i| {
                    (0..=i.min(r)).fold(Scalar::zero(field), |acc, j| {
                        if j < c.len() {
                            &acc + &(&t[i - j] * &c[j])
                        } else {
                            acc
                        }
                    })
                })
                .collect();
        c = next;
    }
    c.reverse();
    Ok(UPoly::new(field, c))
}

/// The same recurrence on machine residues.
fn char_poly_mod(m: &ScalarMatrix, field: FieldSpec, p: u64) -> UPoly {
    let n = m.rows();
    let a: Vec<Vec<u64>> =
        (0..n).map(|i| (0..n).map(|j| u64::from(m.get(i, j).residue().expect("prime field"))).collect()).collect();
    let neg = |x: u64| (p - x) % p;
    let mut c = vec![1u64];
    for r in 0..n {
        let mut t = Vec::with_capacity(r + 2);
        t.push(1);
        t.push(neg(a[r][r]));
        let mut v: Vec<u64> = (0..r).map(|i| a[i][r]).collect();
        for _ in 0..r {
            let rc = (0..r).fold(0, |acc, k| (acc + a[r][k] * v[k]) % p);
            t.push(neg(rc));
            v = (0..r).map(|i| (0..r).fold(0, |acc, k| (acc + a[i][k] * v[k]) % p)).collect();
        }
        c = (0..r + 2)
            .map(|i| (0..=i.min(r)).filter(|&j| j < c.len()).fold(0, |acc, j| (acc + t[i - j] * c[j]) % p))
            .collect();
    }
    c.reverse();
    UPoly::new(field, c.into_iter().map(|x| Scalar::from_i64(field, x as i64)).collect())
}

/// Roots of `p` in its coefficient field, with multiplicities, ascending.
pub fn field_roots(p: &UPoly) -> Result<Vec<Root>, StickelError> {
    if p.is_zero() {
        return Err(StickelError::ZeroPolynomial);
    }
    Ok(roots::roots_with_multiplicity(p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solutions {
    /// `V_K(𝔞)`, sorted lexicographically.
    pub points: Vec<Vec<Scalar>>,
    /// Set when some characteristic polynomial has fewer roots in `K` than the
    /// quotient dimension, so points over an extension of `K` may exist.
    pub may_have_nonrational: bool,
}

pub fn solve_points(gens: &[Polynomial]) -> Result<Solutions, StickelError> {
    let ring = gens.first().ok_or(IdealError::NoGenerators)?.ring().clone();
    solve_points_with(gens, &GroebnerConfig::new(default_order(&ring)))
}

pub fn solve_points_with(gens: &[Polynomial], config: &GroebnerConfig) -> Result<Solutions, StickelError> {
    let gb = buchberger_with(gens, config)?;
    if gb.is_unit() {
        return Ok(Solutions { points: Vec::new(), may_have_nonrational: false });
    }
    let qa = QuotientAlgebra::new(gb)?;
    let n = qa.ring().nvars();
    let per_var: Vec<(Vec<Scalar>, bool)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let m = qa.mult_matrix(i)?;
            let cp = char_poly(&m, qa.field())?;
            let roots = field_roots(&cp)?;
            let found: u32 = roots.iter().map(|r| r.multiplicity).sum();
            Ok((roots.into_iter().map(|r| r.value).collect(), (found as usize) < qa.dim()))
        })
        .collect::<Result<_, StickelError>>()?;
    let may_have_nonrational = per_var.iter().any(|(_, short)| *short);
    let mut points: Vec<Vec<Scalar>> = vec![Vec::new()];
    for (cands, _) in &per_var {
        points = points
            .into_iter()
            .flat_map(|pt| {
                cands.iter().map(move |c| {
                    let mut q = pt.clone();
                    q.push(c.clone());
                    q
                })
            })
            .collect();
    }
    let mut verified = Vec::new();
    for pt in points {
        let mut ok = true;
        for g in gens {
            if !g.evaluate(&pt)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            verified.push(pt);
        }
    }
    verified.sort();
    Ok(Solutions { points: verified, may_have_nonrational })
}

/// `g` with `g(points[j]) = 1` and `g(points[l]) = 0` for `l ≠ j`:
/// the product over `l ≠ j` of `(X_k − a_{l,k}) / (a_{j,k} − a_{l,k})`, with
/// `k` the first coordinate where the two points differ.
pub fn separator(ring: &Arc<Ring>, points: &[Vec<Scalar>], j: usize) -> Result<Polynomial, StickelError> {
    if j >= points.len() {
        return Err(StickelError::PointOutOfRange(j));
    }
    for pt in points {
        if pt.len() != ring.nvars() {
            return Err(PolyError::ArityMismatch { expected: ring.nvars(), got: pt.len() }.into());
        }
    }
    let base = &points[j];
    let mut g = Polynomial::one(ring);
    for (l, other) in points.iter().enumerate() {
        if l == j {
            continue;
        }
        let k = (0..ring.nvars()).find(|&k| base[k] != other[k]).ok_or(StickelError::DuplicatePoints)?;
        let denom = (&base[k] - &other[k]).inv().map_err(PolyError::from)?;
        let factor = &Polynomial::var(ring, k) - &Polynomial::constant(ring, other[k].clone());
        g = &g * &factor.scale(&denom);
    }
    Ok(g)
}

/// Checks `λ_{x_i}·vec(g) = point_i·vec(g)` for every `i`.
pub fn verify_stickelberger(qa: &QuotientAlgebra, point: &[Scalar], g: &Polynomial) -> Result<bool, StickelError> {
    let n = qa.ring().nvars();
    if point.len() != n {
        return Err(PolyError::ArityMismatch { expected: n, got: point.len() }.into());
    }
    let v = qa.coordinates(g)?;
    if v.iter().all(Scalar::is_zero) {
        return Err(StickelError::ZeroEigenvector);
    }
    for (i, a) in point.iter().enumerate() {
        let lhs = qa.mult_matrix(i)?.mul_vec(&v);
        if lhs.iter().zip(&v).any(|(l, x)| *l != a * x) {
            return Ok(false);
        }
    }
    Ok(true)
}
