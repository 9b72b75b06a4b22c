//! Dense exact matrices with field elimination: rank, kernel, determinant,
//! reduced row echelon form, inverse.

use std::fmt;

use rand::Rng;

use super::scalar::{FieldTag, Scalar};
use crate::{Error, Result};

/// Row-major dense matrix over a single exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldTag,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: FieldTag) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldTag) -> Self {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldTag,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let s = f(r, c);
                if s.tag() != field {
                    return Err(Error::FieldMismatch);
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            rows,
            cols,
            field,
            data,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let cols = rows[0].len();
        let field = rows[0][0].tag();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            if row.len() != cols {
                return Err(Error::RaggedRows);
            }
            for s in row {
                if s.tag() != field {
                    return Err(Error::FieldMismatch);
                }
                data.push(s.clone());
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            field,
            data,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]], field: FieldTag) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        Matrix::from_fn(r, c, field, |i, j| Scalar::from_i64(rows[i][j], field)).unwrap()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) {
        assert_eq!(s.tag(), self.field, "entry field mismatch");
        self.data[r * self.cols + c] = s;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |r, c| {
            self.get(c, r).clone()
        })
        .unwrap()
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                if self.get(r, c) != self.get(c, r) {
                    return false;
                }
            }
        }
        true
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Matrix::from_fn(self.rows, self.cols, self.field, |r, c| {
            self.get(r, c) + other.get(r, c)
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Matrix::from_fn(self.rows, self.cols, self.field, |r, c| {
            self.get(r, c) - other.get(r, c)
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        assert_eq!(s.tag(), self.field, "scale field mismatch");
        Matrix::from_fn(self.rows, self.cols, self.field, |r, c| s * self.get(r, c)).unwrap()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        Matrix::from_fn(self.rows, other.cols, self.field, |r, c| {
            let mut acc = Scalar::zero(self.field);
            for k in 0..self.cols {
                acc = &acc + &(self.get(r, k) * other.get(k, c));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero(self.field);
                for (k, vk) in v.iter().enumerate() {
                    acc = &acc + &(self.get(r, k) * vk);
                }
                acc
            })
            .collect())
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        Ok(())
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(sel) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, sel);
            let inv = m.get(pivot_row, col).inv().expect("pivot nonzero");
            for c in col..m.cols {
                let v = m.get(pivot_row, c) * &inv;
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c) - &(&factor * m.get(pivot_row, c));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right kernel {x : m x = 0}.
    pub fn kernel_basis(&self) -> super::subspace::Subspace {
        let (r, pivots) = self.rref();
        let mut pivot_of_col = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(i);
        }
        let free_cols: Vec<usize> = pivot_of_col
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_none())
            .map(|(c, _)| c)
            .collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &f in &free_cols {
            let mut v = vec![Scalar::zero(self.field); self.cols];
            v[f] = Scalar::one(self.field);
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -r.get(i, f);
            }
            basis.push(v);
        }
        super::subspace::Subspace::from_span(self.cols, self.field, basis)
    }

    /// Exact determinant. Rejects non-square input.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one(self.field);
        for col in 0..n {
            let Some(sel) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Scalar::zero(self.field));
            };
            if sel != col {
                m.swap_rows(col, sel);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("pivot nonzero");
            for r in (col + 1)..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) * &inv;
                for c in col..n {
                    let v = m.get(r, c) - &(&factor * m.get(col, c));
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse; singular input is rejected.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n, self.field);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one(self.field));
        }
        let (reduced, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(Error::SingularMatrix);
        }
        Matrix::from_fn(n, n, self.field, |r, c| reduced.get(r, n + c).clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Entry-wise reduction of a rational matrix into F_p; denominators
    /// divisible by p are rejected.
    pub fn reduce_mod(&self, p: u64) -> Result<Matrix> {
        let field = FieldTag::fp(p)?;
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for s in &self.data {
            data.push(match s {
                Scalar::Fp { .. } => return Err(Error::FieldMismatch),
                Scalar::Rational(r) => {
                    Scalar::from_ratio(r.numer().clone(), r.denom().clone(), field)?
                }
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            field,
            data,
        })
    }

    /// Entries as u64 residues; only for prime-field matrices.
    pub fn fp_entries(&self) -> Option<Vec<Vec<u64>>> {
        self.field.modulus()?;
        Some(
            (0..self.rows)
                .map(|r| {
                    (0..self.cols)
                        .map(|c| self.get(r, c).fp_value().unwrap())
                        .collect()
                })
                .collect(),
        )
    }

    pub fn random(rows: usize, cols: usize, field: FieldTag, rng: &mut impl Rng) -> Matrix {
        Matrix::from_fn(rows, cols, field, |_, _| random_scalar(field, rng)).unwrap()
    }

    /// Elementary shear `I + lambda E_{ij}` (i != j); unit determinant by
    /// construction.
    pub fn shear(n: usize, i: usize, j: usize, lambda: Scalar) -> Matrix {
        assert_ne!(i, j, "shear requires i != j");
        let field = lambda.tag();
        let mut m = Matrix::identity(n, field);
        m.set(i, j, lambda);
        m
    }

    /// Product of `count` random elementary shears: a random special-linear
    /// matrix without any root extraction.
    pub fn random_sl(n: usize, field: FieldTag, count: usize, rng: &mut impl Rng) -> Matrix {
        let mut m = Matrix::identity(n, field);
        for _ in 0..count {
            let i = rng.random_range(0..n);
            let mut j = rng.random_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let lambda = random_nonzero_scalar(field, rng);
            m = m.mul(&Matrix::shear(n, i, j, lambda)).unwrap();
        }
        m
    }

    /// Random invertible matrix: a special-linear part times a random
    /// invertible diagonal.
    pub fn random_invertible(n: usize, field: FieldTag, rng: &mut impl Rng) -> Matrix {
        let mut m = Matrix::random_sl(n, field, 3 * n, rng);
        for i in 0..n {
            let d = random_nonzero_scalar(field, rng);
            for c in 0..n {
                let v = m.get(i, c) * &d;
                m.set(i, c, v);
            }
        }
        m
    }
}

pub fn random_scalar(field: FieldTag, rng: &mut impl Rng) -> Scalar {
    match field {
        FieldTag::Rational => Scalar::from_i64(rng.random_range(-20..=20), field),
        FieldTag::Fp(p) => Scalar::from_u64(rng.random_range(0..p), field),
    }
}

pub fn random_nonzero_scalar(field: FieldTag, rng: &mut impl Rng) -> Scalar {
    loop {
        let s = random_scalar(field, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
