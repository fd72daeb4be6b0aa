use super::{Degree, PolyError, Polynomial};
use crate::matrix::{poly_determinant, Matrix};

/// Sylvester matrix of `f` and `g` with respect to `X_var`.
///
/// With `d = deg f` and `r = deg g` in `X_var`, the matrix is `(d+r)×(d+r)`:
/// `r` rows holding the ascending coefficients `f_0, …, f_d`, each shifted
/// one column right of the previous, followed by `d` rows holding
/// `g_0, …, g_r` in the same way. Entries are polynomials free of `X_var`.
pub fn sylvester_matrix(f: &Polynomial, g: &Polynomial, var: usize) -> Result<Matrix<Polynomial>, PolyError> {
    if var >= f.nvars() {
        return Err(PolyError::VariableOutOfRange(var));
    }
    f.compatible(g)?;
    let (d, r) = match (f.degree_in(var), g.degree_in(var)) {
        (Degree::Finite(d), Degree::Finite(r)) => (d as usize, r as usize),
        _ => return Err(PolyError::ZeroPolynomial),
    };
    let fc = f.coefficients_in(var);
    let gc = g.coefficients_in(var);
    let size = d + r;
    let zero = Polynomial::zero(f.ring());
    let mut m = Matrix::filled(size, size, zero);
    for row in 0..r {
        for (k, c) in fc.iter().enumerate() {
            m.set(row, row + k, c.clone());
        }
    }
    for row in 0..d {
        for (k, c) in gc.iter().enumerate() {
            m.set(r + row, row + k, c.clone());
        }
    }
    Ok(m)
}

/// `Res_{X_var}(f, g)`: the determinant of [`sylvester_matrix`], a polynomial
/// in the remaining variables (kept in the same ring).
pub fn resultant(f: &Polynomial, g: &Polynomial, var: usize) -> Result<Polynomial, PolyError> {
    let m = sylvester_matrix(f, g, var)?;
    poly_determinant(&m, &Polynomial::one(f.ring()))
}
