//! Combinatorial Nullstellensatz: grid vanishing ideals, nonvanishing
//! witnesses, the Karasev–Petrov coefficient formula, Dyson's constant term
//! and the Erdős–Heilbronn / Cauchy–Davenport sumset bounds.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::coeff::{factorial, is_prime, FieldSpec, Scalar};
use crate::poly::{grid_reduce, Degree, GridSpec, Monomial, PolyError, Polynomial, Ring};
use crate::upoly::UPoly;

/// Term-count cap for Dyson expansions.
pub const DYSON_TERM_BUDGET: u128 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(Hypothesis),
    #[error("no witness found although every hypothesis holds")]
    WitnessNotFound,
    #[error("|Λ_{var}| = {size} but ν_{var} + 1 = {expected}")]
    GridSizeMismatch { var: usize, size: usize, expected: u64 },
    #[error("deg f = {degree} exceeds Σν = {bound}")]
    DegreeTooHigh { degree: u64, bound: u64 },
    #[error("degree vector has {got} entries, ring has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("expansion would exceed {0} terms")]
    BudgetExceeded(u128),
    #[error("invalid exponent vector: {0}")]
    InvalidAlpha(String),
    #[error("invalid sumset instance: {0}")]
    InvalidInstance(String),
}

/// One failed precondition of [`cn_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    DegreeSum { degree: Degree, sum: u64 },
    CoefficientZero,
    GridTooSmall { var: usize, size: usize, degree: u64 },
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Hypothesis::DegreeSum { degree, sum } => write!(f, "deg f = {degree:?} but Σd = {sum}"),
            Hypothesis::CoefficientZero => write!(f, "coefficient of X^d is zero"),
            Hypothesis::GridTooSmall { var, size, degree } => {
                write!(f, "|Λ_{}| = {size} is not larger than d_{} = {degree}", var + 1, var + 1)
            }
        }
    }
}

/// True iff `f` lies in `⟨g_1(X_1), …, g_n(X_n)⟩`, i.e. vanishes on the whole grid.
pub fn cn_membership(f: &Polynomial, grid: &GridSpec) -> Result<bool, CnError> {
    Ok(grid_reduce(f, grid)?.remainder.is_zero())
}

/// First grid point (lexicographic scan) where `f` does not vanish, after
/// checking the three hypotheses that guarantee one exists.
pub fn cn_witness(f: &Polynomial, d: &[u64], grid: &GridSpec) -> Result<Vec<Scalar>, CnError> {
    grid.check_ring(f.ring())?;
    if d.len() != f.nvars() {
        return Err(CnError::ArityMismatch { expected: f.nvars(), got: d.len() });
    }
    let sum: u64 = d.iter().sum();
    if f.degree() != Degree::Finite(sum) {
        return Err(CnError::HypothesisViolated(Hypothesis::DegreeSum { degree: f.degree(), sum }));
    }
    let exps =
        d.iter().map(|&e| u32::try_from(e).map_err(|_| PolyError::ExponentOverflow)).collect::<Result<_, _>>()?;
    if f.coeff(&Monomial::new(exps)).is_zero() {
        return Err(CnError::HypothesisViolated(Hypothesis::CoefficientZero));
    }
    for (i, (&di, set)) in d.iter().zip(grid.lambdas()).enumerate() {
        if set.len() as u64 <= di {
            return Err(CnError::HypothesisViolated(Hypothesis::GridTooSmall { var: i, size: set.len(), degree: di }));
        }
    }
    for pt in grid.points() {
        if !f.evaluate(&pt)?.is_zero() {
            return Ok(pt);
        }
    }
    Err(CnError::WitnessNotFound)
}

/// `g_i` as a univariate polynomial.
pub fn vanishing_upoly(set: &[Scalar], field: FieldSpec) -> UPoly {
    set.iter().fold(UPoly::one(field), |acc, a| acc.mul(&UPoly::linear_root(a)))
}

/// `Σ_{a ∈ Λ} f(a) / (g'_1(a_1)⋯g'_n(a_n))`, which equals the coefficient of
/// `X^ν` in `f` whenever `deg f ≤ Σν` and `|Λ_i| = ν_i + 1`.
pub fn kp_coefficient(f: &Polynomial, nu: &[u64], grid: &GridSpec) -> Result<Scalar, CnError> {
    grid.check_ring(f.ring())?;
    if nu.len() != f.nvars() {
        return Err(CnError::ArityMismatch { expected: f.nvars(), got: nu.len() });
    }
    for (i, (&v, set)) in nu.iter().zip(grid.lambdas()).enumerate() {
        if set.len() as u64 != v + 1 {
            return Err(CnError::GridSizeMismatch { var: i, size: set.len(), expected: v + 1 });
        }
    }
    let bound: u64 = nu.iter().sum();
    if let Degree::Finite(degree) = f.degree() {
        if degree > bound {
            return Err(CnError::DegreeTooHigh { degree, bound });
        }
    }
    let field = grid.field();
    // weights 1/g'_i(a) from the formal derivative of the expanded g_i
    let weights: Vec<Vec<Scalar>> = grid
        .lambdas()
        .iter()
        .map(|set| {
            let dg = vanishing_upoly(set, field).derivative();
            set.iter().map(|a| dg.eval(a).inv()).collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()
        .map_err(PolyError::from)?;
    let sizes = grid.sizes();
    let total = (0..grid.num_points())
        .into_par_iter()
        .map(|idx| -> Result<Scalar, PolyError> {
            let pt = grid.point(idx);
            let mut w = f.evaluate(&pt)?;
            let mut rest = idx;
            for i in (0..sizes.len()).rev() {
                w = &w * &weights[i][rest % sizes[i]];
                rest /= sizes[i];
            }
            Ok(w)
        })
        .try_reduce(|| Scalar::zero(field), |a, b| Ok(&a + &b))?;
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DysonResult {
    /// Coefficient of `∏ X_i^{α−α_i}` in `∏_{i<j} (−1)^{α_j}(X_j − X_i)^{α_i+α_j}`.
    pub c: Scalar,
    /// `α! / (α_1!⋯α_n!)` with `α = Σα_i`.
    pub multinomial: Scalar,
    pub equal: bool,
}

fn check_alpha(alpha: &[u64]) -> Result<(), CnError> {
    if alpha.len() < 2 {
        return Err(CnError::InvalidAlpha("need at least two entries".into()));
    }
    if alpha.contains(&0) {
        return Err(CnError::InvalidAlpha("entries must be positive".into()));
    }
    if alpha.iter().any(|&a| a > u64::from(u16::MAX)) {
        return Err(CnError::InvalidAlpha("entries too large".into()));
    }
    Ok(())
}

fn dyson_ring(n: usize) -> Arc<Ring> {
    Ring::new(FieldSpec::Rationals, (1..=n).map(|i| format!("x{i}"))).expect("distinct names")
}

fn multinomial(alpha: &[u64]) -> Scalar {
    let total: u64 = alpha.iter().sum();
    let den = alpha.iter().fold(num_bigint::BigInt::from(1), |acc, &a| acc * factorial(a));
    Scalar::from_ratio(FieldSpec::Rationals, &factorial(total), &den).expect("nonzero")
}

/// Monomials of degree `deg` in `n` variables: an upper bound on term counts.
fn homogeneous_count(n: u128, deg: u128) -> u128 {
    let mut acc: u128 = 1;
    for i in 1..n {
        acc = acc.saturating_mul(deg + i) / i;
    }
    acc
}

/// Dyson's constant term via the polynomial reformulation, expanded exactly over ℚ.
pub fn dyson_coefficient(alpha: &[u64]) -> Result<DysonResult, CnError> {
    check_alpha(alpha)?;
    let n = alpha.len();
    let total: u64 = alpha.iter().sum();
    let deg = (n as u128 - 1) * u128::from(total);
    if homogeneous_count(n as u128, deg) > DYSON_TERM_BUDGET {
        return Err(CnError::BudgetExceeded(DYSON_TERM_BUDGET));
    }
    let ring = dyson_ring(n);
    let mut f = Polynomial::one(&ring);
    for j in 0..n {
        for i in 0..j {
            let diff = &Polynomial::var(&ring, j) - &Polynomial::var(&ring, i);
            let mut factor = diff.pow((alpha[i] + alpha[j]) as u32);
            if alpha[j] % 2 == 1 {
                factor = -factor;
            }
            f = &f * &factor;
        }
    }
    let target = Monomial::new(alpha.iter().map(|&a| (total - a) as u32).collect());
    let c = f.coeff(&target);
    let multinomial = multinomial(alpha);
    let equal = c == multinomial;
    Ok(DysonResult { c, multinomial, equal })
}

/// `f̃ = ∏_{i<j} (−1)^{α_j} G_ij` with `G_ij = ∏_{t=−α_i+1}^{α_j} (X_j − X_i + t)`.
pub fn dyson_tilde(alpha: &[u64]) -> Result<Polynomial, CnError> {
    check_alpha(alpha)?;
    let n = alpha.len();
    let ring = dyson_ring(n);
    let mut f = Polynomial::one(&ring);
    for j in 0..n {
        for i in 0..j {
            let diff = &Polynomial::var(&ring, j) - &Polynomial::var(&ring, i);
            let lo = 1 - alpha[i] as i64;
            let hi = alpha[j] as i64;
            let mut g =
                (lo..=hi).fold(Polynomial::one(&ring), |acc, t| &acc * &(&diff + &Polynomial::from_i64(&ring, t)));
            if alpha[j] % 2 == 1 {
                g = -g;
            }
            f = &f * &g;
        }
    }
    Ok(f)
}

/// Segment grids `Λ_i = {0, 1, …, α − α_i}` used with [`dyson_tilde`].
pub fn dyson_grid(alpha: &[u64]) -> Result<GridSpec, CnError> {
    check_alpha(alpha)?;
    let total: u64 = alpha.iter().sum();
    let q = FieldSpec::Rationals;
    Ok(GridSpec::new(
        q,
        alpha.iter().map(|&a| (0..=(total - a) as i64).map(|v| Scalar::from_i64(q, v)).collect()).collect(),
    )?)
}

/// The only point of the segment grid where `f̃` does not vanish:
/// `β_i = α_1 + ⋯ + α_{i−1}`.
pub fn dyson_beta(alpha: &[u64]) -> Vec<u64> {
    alpha
        .iter()
        .scan(0, |acc, &a| {
            let b = *acc;
            *acc += a;
            Some(b)
        })
        .collect()
}

/// Dyson's constant term through [`kp_coefficient`] applied to `f̃`.
pub fn dyson_via_kp(alpha: &[u64]) -> Result<Scalar, CnError> {
    let total: u64 = alpha.iter().sum();
    let f = dyson_tilde(alpha)?;
    let nu: Vec<u64> = alpha.iter().map(|&a| total - a).collect();
    kp_coefficient(&f, &nu, &dyson_grid(alpha)?)
}

/// Closed form `f̃(β) / ∏ g'_i(β_i)` with
/// `g'_i(β_i) = (−1)^{α_{i+1}+⋯+α_n} (α_1+⋯+α_{i−1})! (α_{i+1}+⋯+α_n)!` and
/// `G_ij(β) = (α_i+⋯+α_j)! / (α_{i+1}+⋯+α_{j−1})!`.
pub fn dyson_closed_form(alpha: &[u64]) -> Result<Scalar, CnError> {
    check_alpha(alpha)?;
    let n = alpha.len();
    let q = FieldSpec::Rationals;
    let seg = |a: usize, b: usize| -> u64 {
        if a >= b {
            0
        } else {
            alpha[a..b].iter().sum()
        }
    };
    let fact = |k: u64| Scalar::from_bigint(q, &factorial(k));
    let sign = |k: u64| Scalar::from_i64(q, if k.is_multiple_of(2) { 1 } else { -1 });
    let mut num = Scalar::one(q);
    for (j, &aj) in alpha.iter().enumerate() {
        for i in 0..j {
            let g = fact(seg(i, j + 1)).checked_div(&fact(seg(i + 1, j))).map_err(PolyError::from)?;
            num = &(&num * &sign(aj)) * &g;
        }
    }
    let mut den = Scalar::one(q);
    for i in 0..n {
        let after = seg(i + 1, n);
        den = &(&den * &sign(after)) * &(&fact(seg(0, i)) * &fact(after));
    }
    Ok(num.checked_div(&den).map_err(PolyError::from)?)
}

/// Two nonempty duplicate-free subsets of `ℤ/pℤ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumsetInstance {
    p: u64,
    m: Vec<u64>,
    n: Vec<u64>,
}

impl SumsetInstance {
    pub fn new(p: u64, m: Vec<u64>, n: Vec<u64>) -> Result<Self, CnError> {
        if !is_prime(p) {
            return Err(CnError::InvalidInstance(format!("{p} is not prime")));
        }
        for (name, set) in [("M", &m), ("N", &n)] {
            if set.is_empty() {
                return Err(CnError::InvalidInstance(format!("{name} is empty")));
            }
            if let Some(x) = set.iter().find(|&&x| x >= p) {
                return Err(CnError::InvalidInstance(format!("{name} contains {x} ≥ p")));
            }
            if set.iter().collect::<BTreeSet<_>>().len() != set.len() {
                return Err(CnError::InvalidInstance(format!("{name} has repeated elements")));
            }
        }
        Ok(SumsetInstance { p, m, n })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> &[u64] {
        &self.m
    }

    pub fn n(&self) -> &[u64] {
        &self.n
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumsetResult {
    /// Sorted residues.
    pub set: Vec<u64>,
    pub bound: i64,
    pub holds: bool,
}

fn sumset_with(inst: &SumsetInstance, restricted: bool) -> SumsetResult {
    let mut set = BTreeSet::new();
    for &a in &inst.m {
        for &b in &inst.n {
            if !(restricted && a == b) {
                set.insert((a + b) % inst.p);
            }
        }
    }
    let slack = if restricted { 3 } else { 1 };
    let bound = (inst.p as i64).min((inst.m.len() + inst.n.len()) as i64 - slack);
    let holds = set.len() as i64 >= bound;
    SumsetResult { set: set.into_iter().collect(), bound, holds }
}

/// `{a + b : a ∈ M, b ∈ N, a ≠ b}` against `min(p, |M| + |N| − 3)`.
pub fn restricted_sumset(inst: &SumsetInstance) -> SumsetResult {
    sumset_with(inst, true)
}

/// `M + N` against `min(p, |M| + |N| − 1)`.
pub fn sumset(inst: &SumsetInstance) -> SumsetResult {
    sumset_with(inst, false)
}
