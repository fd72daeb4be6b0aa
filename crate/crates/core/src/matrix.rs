//! Dense matrices with exact determinants.

use std::fmt;

use crate::coeff::{FieldSpec, Scalar};
use crate::poly::{PolyError, Polynomial};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

/// Matrix over a base field.
pub type ScalarMatrix = Matrix<Scalar>;

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, entries: vec![value; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T: fmt::Display + Clone> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (i, v) in self.row(r).iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl ScalarMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, Scalar::zero(field))
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Scalar::from_i64(field, v)).collect()).collect())
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(
                    Scalar::zero(v.first().map_or_else(|| self.get(r, 0).field(), Scalar::field)),
                    |acc, (a, b)| &acc + &(a * b),
                )
            })
            .collect()
    }

    pub fn mul(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, other.rows);
        let field = self.entries.first().or(other.entries.first()).map(Scalar::field);
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Scalar::zero(field.expect("nonempty product"));
                for k in 0..self.cols {
                    acc = &acc + &(self.get(r, k) * other.get(k, c));
                }
                out.push(acc);
            }
        }
        Matrix { rows: self.rows, cols: other.cols, entries: out }
    }

    /// Exact determinant: fraction-free Bareiss elimination over ℚ, plain
    /// Gaussian elimination over 𝔽_p.
    pub fn determinant(&self, field: FieldSpec) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        match field {
            FieldSpec::Rationals => {
                bareiss(self.clone(), Scalar::one(field), |a, b| a.checked_div(b).expect("Bareiss pivot is nonzero"))
            }
            FieldSpec::Prime(_) => gauss_det(self.clone(), field),
        }
    }
}

fn gauss_det(mut m: ScalarMatrix, field: FieldSpec) -> Scalar {
    let n = m.rows;
    let mut det = Scalar::one(field);
    for k in 0..n {
        let pivot = match (k..n).find(|&r| !m.get(r, k).is_zero()) {
            Some(p) => p,
            None => return Scalar::zero(field),
        };
        if pivot != k {
            m.swap_rows(pivot, k);
            det = -det;
        }
        let pv = m.get(k, k).clone();
        det = &det * &pv;
        let inv = pv.inv().expect("nonzero pivot");
        for r in k + 1..n {
            let factor = m.get(r, k) * &inv;
            if factor.is_zero() {
                continue;
            }
            for c in k..n {
                let v = m.get(r, c) - &(&factor * m.get(k, c));
                m.set(r, c, v);
            }
        }
    }
    det
}

trait RingElem: Clone {
    fn is_zero_elem(&self) -> bool;
    fn mul_elem(&self, o: &Self) -> Self;
    fn sub_elem(&self, o: &Self) -> Self;
    fn neg_elem(&self) -> Self;
}

impl RingElem for Scalar {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn neg_elem(&self) -> Self {
        -self
    }
}

impl RingElem for Polynomial {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn neg_elem(&self) -> Self {
        -self
    }
}

/// Bareiss elimination over an integral domain; `div_exact` must divide exactly.
fn bareiss<T: RingElem>(mut m: Matrix<T>, one: T, div_exact: impl Fn(&T, &T) -> T) -> T {
    let n = m.rows;
    if n == 0 {
        return one;
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        let pivot = match (k..n).find(|&r| !m.get(r, k).is_zero_elem()) {
            Some(p) => p,
            None => return m.get(0, 0).sub_elem(m.get(0, 0)),
        };
        if pivot != k {
            m.swap_rows(pivot, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m.get(i, j).mul_elem(m.get(k, k)).sub_elem(&m.get(i, k).mul_elem(m.get(k, j)));
                m.set(i, j, div_exact(&num, &prev));
            }
        }
        prev = m.get(k, k).clone();
    }
    let det = m.get(n - 1, n - 1).clone();
    if negate {
        det.neg_elem()
    } else {
        det
    }
}

/// Determinant of a matrix of polynomials (all in one ring), by Bareiss
/// elimination with exact polynomial division.
pub fn poly_determinant(m: &Matrix<Polynomial>, one: &Polynomial) -> Result<Polynomial, PolyError> {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let all_constant = m.entries.iter().all(Polynomial::is_constant);
    if all_constant {
        let field = one.field();
        let scalars = m.map(|p| p.constant_value().expect("constant entry"));
        return Ok(Polynomial::constant(one.ring(), scalars.determinant(field)));
    }
    Ok(bareiss(m.clone(), one.clone(), |a, b| a.div_exact(b).expect("same ring").expect("Bareiss division is exact")))
}
