use super::{grid::Witness, identity_witness, Degree, GridSpec, Monomial, PolyError, Polynomial};
use crate::coeff::Scalar;

/// Images of the variables under a ring endomorphism `X_i ↦ images[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct VariableSubstitution {
    images: Vec<Polynomial>,
}

impl VariableSubstitution {
    pub fn identity(ring: &std::sync::Arc<super::Ring>) -> Self {
        VariableSubstitution { images: (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect() }
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        f.substitute(&self.images)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, p)| *p == Polynomial::var(p.ring(), i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TiltMode {
    /// `X_i ↦ X_i + a_i X_var`; needs enough field elements to find `a`.
    Linear,
    /// `X_i ↦ X_i + X_var^{r^k}`; works over every field.
    Power,
}

/// Result of [`tilt_axes`]: `tilted = forward(f)` and `inverse(tilted) = f`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tilt {
    pub forward: VariableSubstitution,
    pub inverse: VariableSubstitution,
    pub tilted: Polynomial,
    /// Degree of `tilted` in the distinguished variable.
    pub degree: u64,
    /// Coefficient of `X_var^degree` in `tilted`; a nonzero constant.
    pub leading: Scalar,
}

/// Changes coordinates so that `f` becomes monic (up to a unit) in `X_var`.
pub fn tilt_axes(f: &Polynomial, var: usize, mode: TiltMode) -> Result<Tilt, PolyError> {
    let ring = f.ring().clone();
    let n = ring.nvars();
    if var >= n {
        return Err(PolyError::VariableOutOfRange(var));
    }
    if f.is_constant() {
        return Err(PolyError::ConstantPolynomial);
    }
    let total = f.degree().finite().expect("non-constant");
    if f.degree_in(var) == Degree::Finite(total) {
        let id = VariableSubstitution::identity(&ring);
        return finish(f, var, id.clone(), id);
    }
    let (forward, inverse) = match mode {
        TiltMode::Linear => linear_substitution(f, var, total)?,
        TiltMode::Power => power_substitution(f, var)?,
    };
    finish(f, var, forward, inverse)
}

fn finish(
    f: &Polynomial,
    var: usize,
    forward: VariableSubstitution,
    inverse: VariableSubstitution,
) -> Result<Tilt, PolyError> {
    let tilted = forward.apply(f)?;
    let degree = tilted.degree_in(var).finite().expect("nonzero image");
    let lead = tilted.coefficients_in(var).pop().expect("nonzero image");
    let leading = lead.constant_value().expect("tilted polynomial has a unit leading coefficient");
    Ok(Tilt { forward, inverse, tilted, degree, leading })
}

fn linear_substitution(
    f: &Polynomial,
    var: usize,
    total: u64,
) -> Result<(VariableSubstitution, VariableSubstitution), PolyError> {
    let ring = f.ring().clone();
    let n = ring.nvars();
    let field = ring.field();
    // top form with X_var = 1: its nonvanishing points give admissible slopes
    let top = f.homogeneous_part(total);
    let mut at_one: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ring, i)).collect();
    at_one[var] = Polynomial::one(&ring);
    let h = top.substitute(&at_one)?;
    let width = match field.modulus() {
        None => total + 1,
        Some(p) => (total + 1).min(u64::from(p)),
    };
    let values: Vec<Scalar> = (0..width as i64).map(|a| Scalar::from_i64(field, a)).collect();
    let lambdas = (0..n).map(|i| if i == var { vec![Scalar::zero(field)] } else { values.clone() }).collect();
    let grid = GridSpec::new(field, lambdas)?;
    let a = match identity_witness(&h, &grid)? {
        Witness::Point(a) => a,
        Witness::VanishesEverywhere => return Err(PolyError::NoTiltPoint),
    };
    let xv = Polynomial::var(&ring, var);
    let mut fwd = Vec::with_capacity(n);
    let mut inv = Vec::with_capacity(n);
    for (i, ai) in a.iter().enumerate() {
        let xi = Polynomial::var(&ring, i);
        if i == var {
            fwd.push(xi.clone());
            inv.push(xi);
        } else {
            let shift = xv.scale(ai);
            fwd.push(&xi + &shift);
            inv.push(&xi - &shift);
        }
    }
    Ok((VariableSubstitution { images: fwd }, VariableSubstitution { images: inv }))
}

fn power_substitution(f: &Polynomial, var: usize) -> Result<(VariableSubstitution, VariableSubstitution), PolyError> {
    let ring = f.ring().clone();
    let n = ring.nvars();
    let r = f.terms().flat_map(|(m, _)| m.exps().iter().copied()).max().unwrap_or(0).max(1) + 1;
    let mut fwd = Vec::with_capacity(n);
    let mut inv = Vec::with_capacity(n);
    let mut k = 0u32;
    for i in 0..n {
        let xi = Polynomial::var(&ring, i);
        if i == var {
            fwd.push(xi.clone());
            inv.push(xi);
            continue;
        }
        k += 1;
        let gamma = r.checked_pow(k).ok_or(PolyError::ExponentOverflow)?;
        let shift = Polynomial::monomial(&ring, Monomial::var_power(n, var, gamma), Scalar::one(ring.field()));
        fwd.push(&xi + &shift);
        inv.push(&xi - &shift);
    }
    Ok((VariableSubstitution { images: fwd }, VariableSubstitution { images: inv }))
}
