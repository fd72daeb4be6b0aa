use std::sync::Arc;

use super::{Monomial, PolyError, Polynomial, Ring};
use crate::coeff::{FieldSpec, Scalar};

/// Finite sets `Λ_1, …, Λ_n` of field elements, one per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    field: FieldSpec,
    lambdas: Vec<Vec<Scalar>>,
}

impl GridSpec {
    /// Every `Λ_i` must be nonempty and duplicate-free.
    pub fn new(field: FieldSpec, lambdas: Vec<Vec<Scalar>>) -> Result<Self, PolyError> {
        for (i, set) in lambdas.iter().enumerate() {
            if set.is_empty() {
                return Err(PolyError::InvalidGrid(format!("Λ_{} is empty", i + 1)));
            }
            if let Some(bad) = set.iter().find(|a| a.field() != field) {
                return Err(PolyError::FieldMismatch(field, bad.field()));
            }
            for (k, a) in set.iter().enumerate() {
                if set[..k].contains(a) {
                    return Err(PolyError::InvalidGrid(format!("Λ_{} repeats {a}", i + 1)));
                }
            }
        }
        Ok(GridSpec { field, lambdas })
    }

    pub fn from_i64(field: FieldSpec, lambdas: &[&[i64]]) -> Result<Self, PolyError> {
        Self::new(field, lambdas.iter().map(|s| s.iter().map(|&a| Scalar::from_i64(field, a)).collect()).collect())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn lambdas(&self) -> &[Vec<Scalar>] {
        &self.lambdas
    }

    pub fn nvars(&self) -> usize {
        self.lambdas.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lambdas.iter().map(Vec::len).collect()
    }

    pub fn num_points(&self) -> usize {
        self.lambdas.iter().map(Vec::len).product()
    }

    /// The `idx`-th point in lexicographic order (last coordinate fastest).
    pub fn point(&self, mut idx: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); self.nvars()];
        for (i, set) in self.lambdas.iter().enumerate().rev() {
            out[i] = set[idx % set.len()].clone();
            idx /= set.len();
        }
        out
    }

    /// All points of `Λ_1 × ⋯ × Λ_n` in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Vec<Scalar>> + '_ {
        (0..self.num_points()).map(move |i| self.point(i))
    }

    /// `g_i(X_i) = ∏_{a ∈ Λ_i} (X_i − a)` as elements of `ring`.
    pub fn vanishing_polys(&self, ring: &Arc<Ring>) -> Result<Vec<Polynomial>, PolyError> {
        self.check_ring(ring)?;
        Ok(self
            .lambdas
            .iter()
            .enumerate()
            .map(|(i, set)| {
                let x = Polynomial::var(ring, i);
                set.iter().fold(Polynomial::one(ring), |acc, a| &acc * &(&x - &Polynomial::constant(ring, a.clone())))
            })
            .collect())
    }

    pub(crate) fn check_ring(&self, ring: &Ring) -> Result<(), PolyError> {
        if ring.field() != self.field {
            return Err(PolyError::FieldMismatch(ring.field(), self.field));
        }
        if ring.nvars() != self.nvars() {
            return Err(PolyError::ArityMismatch { expected: ring.nvars(), got: self.nvars() });
        }
        Ok(())
    }
}

/// `f = Σ quotients[i] · g_i + remainder` with `deg_{X_i} remainder < |Λ_i|`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridReduction {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Division with remainder by the monic univariate `g_i(X_i)`, one variable
/// at a time in ascending index order.
pub fn grid_reduce(f: &Polynomial, grid: &GridSpec) -> Result<GridReduction, PolyError> {
    grid.check_ring(f.ring())?;
    let ring = f.ring().clone();
    let gs = grid.vanishing_polys(&ring)?;
    let mut rem = f.clone();
    let mut quotients = Vec::with_capacity(gs.len());
    for (i, g) in gs.iter().enumerate() {
        let m = grid.lambdas[i].len() as u32;
        // X_i^m ≡ X_i^m − g_i, which has X_i-degree < m
        let tail = &Polynomial::monomial(&ring, Monomial::var_power(ring.nvars(), i, m), Scalar::one(ring.field())) - g;
        let mut q = Polynomial::zero(&ring);
        loop {
            let high: Vec<(Monomial, Scalar)> = rem
                .terms()
                .filter(|(mono, _)| mono.exps()[i] >= m)
                .map(|(mono, c)| (mono.clone(), c.clone()))
                .collect();
            if high.is_empty() {
                break;
            }
            let mut shifted = Vec::with_capacity(high.len());
            for (mono, c) in high {
                let mut e = mono.exps().to_vec();
                e[i] -= m;
                shifted.push((Monomial::new(e), c));
            }
            let part = Polynomial::from_terms(&ring, shifted)?;
            // rem = rem − part·g_i, done as (rem − part·X_i^m) + part·tail
            let lifted = part.mul_monomial(&Monomial::var_power(ring.nvars(), i, m), &Scalar::one(ring.field()));
            rem = &(&rem - &lifted) + &(&part * &tail);
            q = &q + &part;
        }
        quotients.push(q);
    }
    Ok(GridReduction { quotients, remainder: rem })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Point(Vec<Scalar>),
    VanishesEverywhere,
}

/// Finds `a ∈ Λ` with `f(a) ≠ 0`.
///
/// Follows the inductive argument: pick a witness for the leading
/// coefficient in the last variable, then scan the last coordinate. When the
/// grid is too small for that argument to apply, falls back to an exhaustive
/// scan before giving up.
pub fn identity_witness(f: &Polynomial, grid: &GridSpec) -> Result<Witness, PolyError> {
    grid.check_ring(f.ring())?;
    if f.is_zero() {
        return Ok(Witness::VanishesEverywhere);
    }
    if let Some(pt) = inductive_search(f, grid.nvars(), grid)? {
        return Ok(Witness::Point(pt));
    }
    for pt in grid.points() {
        if !f.evaluate(&pt)?.is_zero() {
            return Ok(Witness::Point(pt));
        }
    }
    Ok(Witness::VanishesEverywhere)
}

/// `f` involves only variables `< k`; returns a prefix point of length `k`.
fn inductive_search(f: &Polynomial, k: usize, grid: &GridSpec) -> Result<Option<Vec<Scalar>>, PolyError> {
    if f.is_zero() {
        return Ok(None);
    }
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let coeffs = f.coefficients_in(k - 1);
    let lead = coeffs.last().expect("nonzero polynomial");
    let prefix = match inductive_search(lead, k - 1, grid)? {
        Some(p) => p,
        None => return Ok(None),
    };
    let n = f.nvars();
    for b in &grid.lambdas[k - 1] {
        let mut pt = prefix.clone();
        pt.push(b.clone());
        pt.resize(n, Scalar::zero(f.field()));
        if !f.evaluate(&pt)?.is_zero() {
            pt.truncate(k);
            return Ok(Some(pt));
        }
    }
    Ok(None)
}
