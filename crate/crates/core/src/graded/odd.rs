//! Numerical search for a common real zero of odd-degree forms on the unit sphere.
//!
//! `r ≤ n` homogeneous forms of odd degree in `n + 1` variables always share a
//! nontrivial real zero, so a failed search says nothing about existence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::coeff::FieldSpec;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OddError {
    #[error("form {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("form {index} has even degree {degree}")]
    EvenDegree { index: usize, degree: u64 },
    #[error("{forms} forms in {vars} variables: at most {} allowed", vars.saturating_sub(1))]
    TooManyForms { forms: usize, vars: usize },
    #[error("empty system: the ambient dimension is unknown")]
    NoForms,
    #[error("forms must have rational coefficients")]
    NotRational,
    #[error("forms do not share one variable list")]
    RingMismatch,
    #[error("no point with Φ < {tol:e} after {restarts} restarts")]
    NotFound { tol: f64, restarts: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OddConfig {
    /// Target for `Φ(t) = Σ f_i(t)²`.
    pub tol: f64,
    pub restarts: usize,
    pub max_iters: usize,
    pub seed: u64,
}

impl Default for OddConfig {
    fn default() -> Self {
        OddConfig { tol: 1e-10, restarts: 100, max_iters: 5000, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OddSolution {
    pub point: Vec<f64>,
    pub phi: f64,
    /// Index of the restart that succeeded.
    pub restart: usize,
}

/// A form flattened to `(coefficient, exponents)` in double precision.
struct FloatForm {
    terms: Vec<(f64, Vec<u32>)>,
}

impl FloatForm {
    fn eval(&self, t: &[f64]) -> f64 {
        self.terms.iter().map(|(c, e)| c * mono(t, e)).sum()
    }

    fn grad(&self, t: &[f64], out: &mut [f64]) {
        out.iter_mut().for_each(|g| *g = 0.0);
        for (c, e) in &self.terms {
            for (k, g) in out.iter_mut().enumerate() {
                if e[k] == 0 {
                    continue;
                }
                let mut d = c * f64::from(e[k]);
                for (j, (&x, &ej)) in t.iter().zip(e).enumerate() {
                    let p = if j == k { ej - 1 } else { ej };
                    d *= x.powi(p as i32);
                }
                *g += d;
            }
        }
    }
}

fn mono(t: &[f64], e: &[u32]) -> f64 {
    t.iter().zip(e).map(|(x, &k)| x.powi(k as i32)).product()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(t: &mut [f64]) {
    let n = dot(t, t).sqrt();
    t.iter_mut().for_each(|x| *x /= n);
}

struct System {
    forms: Vec<FloatForm>,
    nvars: usize,
}

impl System {
    fn phi(&self, t: &[f64]) -> f64 {
        self.forms.iter().map(|f| f.eval(t).powi(2)).sum()
    }

    /// Tangential part of `∇Φ` at a unit vector.
    fn tangent_grad(&self, t: &[f64]) -> Vec<f64> {
        let mut g = vec![0.0; self.nvars];
        let mut gi = vec![0.0; self.nvars];
        for f in &self.forms {
            let v = f.eval(t);
            f.grad(t, &mut gi);
            g.iter_mut().zip(&gi).for_each(|(a, b)| *a += 2.0 * v * b);
        }
        let radial = dot(&g, t);
        g.iter_mut().zip(t).for_each(|(a, x)| *a -= radial * x);
        g
    }

    /// Minimum-norm Gauss–Newton step solving `J δ = −F`, `t·δ = 0`.
    fn newton_step(&self, t: &[f64]) -> Option<Vec<f64>> {
        let n = self.nvars;
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(self.forms.len() + 1);
        let mut rhs = Vec::with_capacity(self.forms.len() + 1);
        for f in &self.forms {
            let mut g = vec![0.0; n];
            f.grad(t, &mut g);
            rows.push(g);
            rhs.push(-f.eval(t));
        }
        rows.push(t.to_vec());
        rhs.push(0.0);
        let m = rows.len();
        let mut gram: Vec<Vec<f64>> = (0..m).map(|i| (0..m).map(|j| dot(&rows[i], &rows[j])).collect()).collect();
        let y = solve_dense(&mut gram, rhs)?;
        let mut delta = vec![0.0; n];
        for (row, yi) in rows.iter().zip(&y) {
            delta.iter_mut().zip(row).for_each(|(d, a)| *d += yi * a);
        }
        Some(delta)
    }

    fn descend(&self, start: Vec<f64>, cfg: &OddConfig) -> Option<(Vec<f64>, f64)> {
        let mut t = start;
        let mut phi = self.phi(&t);
        let mut step = 1.0;
        for _ in 0..cfg.max_iters {
            if phi < cfg.tol {
                return Some((t, phi));
            }
            if phi < 1e-3 {
                if let Some(delta) = self.newton_step(&t) {
                    let mut cand: Vec<f64> = t.iter().zip(&delta).map(|(a, b)| a + b).collect();
                    normalize(&mut cand);
                    let p = self.phi(&cand);
                    if p.is_finite() && p < 0.5 * phi {
                        t = cand;
                        phi = p;
                        continue;
                    }
                }
            }
            let g = self.tangent_grad(&t);
            let gg = dot(&g, &g);
            if gg == 0.0 || !gg.is_finite() {
                return None;
            }
            step *= 2.0;
            loop {
                let mut cand: Vec<f64> = t.iter().zip(&g).map(|(a, b)| a - step * b).collect();
                normalize(&mut cand);
                let p = self.phi(&cand);
                if p <= phi - 1e-4 * step * gg {
                    t = cand;
                    phi = p;
                    break;
                }
                step *= 0.5;
                if step < 1e-18 {
                    return None;
                }
            }
        }
        (phi < cfg.tol).then_some((t, phi))
    }
}

/// Gaussian elimination with partial pivoting on a small dense system.
fn solve_dense(a: &mut [Vec<f64>], mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    let scale = a.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() <= 1e-14 * scale {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for (k, row) in rest.iter_mut().enumerate() {
            let f = row[col] / pivot_row[col];
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * p;
            }
            b[col + 1 + k] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let r = dot(&v, &v);
        if r > 1e-6 && r <= 1.0 {
            normalize(&mut v);
            return v;
        }
    }
}

/// Multi-start projected gradient descent for `Φ = Σ f_i²` on `S^n`, with a
/// Gauss–Newton finish once `Φ` is small. Restart `k` is seeded by `seed + k`,
/// and the lowest successful restart index is returned regardless of scheduling.
pub fn odd_system_solve(forms: &[Polynomial], cfg: &OddConfig) -> Result<OddSolution, OddError> {
    let nvars = forms.first().ok_or(OddError::NoForms)?.nvars();
    for (i, f) in forms.iter().enumerate() {
        if f.ring() != forms[0].ring() {
            return Err(OddError::RingMismatch);
        }
        if f.field() != FieldSpec::Rationals {
            return Err(OddError::NotRational);
        }
        if !f.is_homogeneous() {
            return Err(OddError::NotHomogeneous(i));
        }
        if let Some(d) = f.degree().finite() {
            if d % 2 == 0 {
                return Err(OddError::EvenDegree { index: i, degree: d });
            }
        }
    }
    if forms.len() >= nvars {
        return Err(OddError::TooManyForms { forms: forms.len(), vars: nvars });
    }
    let system = System {
        forms: forms
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| FloatForm { terms: f.terms().map(|(m, c)| (c.to_f64(), m.exps().to_vec())).collect() })
            .collect(),
        nvars,
    };
    (0..cfg.restarts)
        .into_par_iter()
        .find_map_first(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(k as u64));
            let start = random_unit(&mut rng, nvars);
            let (mut t, _) = system.descend(start, cfg)?;
            normalize(&mut t);
            let phi = system.phi(&t);
            (phi < cfg.tol).then_some(OddSolution { point: t, phi, restart: k })
        })
        .ok_or(OddError::NotFound { tol: cfg.tol, restarts: cfg.restarts })
}
