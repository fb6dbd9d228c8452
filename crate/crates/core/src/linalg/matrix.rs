use std::fmt;

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact scalars. Linear maps act on column
/// vectors: entry `(r, c)` is the coefficient of output basis vector `r` in
/// the image of input basis vector `c`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::dims(format!("matrix row {i}"), c, row.len()));
            }
            data.extend(row);
        }
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dims("matrix entries", rows * cols, data.len()));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Matrix from small integers, mainly for fixtures.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let data: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.int(x)).collect())
            .collect();
        Matrix::from_rows(field, data).expect("rectangular fixture")
    }

    /// Column matrix holding `v`.
    pub fn column_vector(field: Field, v: &[Scalar]) -> Self {
        Matrix {
            field,
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    /// Row matrix holding `v`.
    pub fn row_vector(field: Field, v: &[Scalar]) -> Self {
        Matrix {
            field,
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::dims("matrix product", self.cols, rhs.rows));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Composition for shapes the caller has already validated.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.compose(rhs).expect("composable shapes")
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::dims("matrix-vector product", self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Kronecker product; the left factor indexes the major leg.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    for c2 in 0..rhs.cols {
                        let b = rhs.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * rhs.rows + r2, c1 * rhs.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn zip(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::dims(
                "matrix sum",
                self.rows * self.cols,
                rhs.rows * rhs.cols,
            ));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Block-diagonal sum `self ⊕ rhs`.
    pub fn direct_sum(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + rhs.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..rhs.rows {
            for c in 0..rhs.cols {
                out.set(self.rows + r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        out
    }

    /// Stack `self` on top of `rhs`.
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.cols {
            return Err(Error::dims("vertical stack", self.cols, rhs.cols));
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        })
    }

    /// Flattens row-major into one vector; used for maps viewed as unknowns.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Nonzero entries of each column, for sparse application.
    pub(crate) fn column_support(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for r in 0..self.rows {
            for (c, v) in self.row(r).iter().enumerate() {
                if !v.is_zero() {
                    cols[c].push((r, v.clone()));
                }
            }
        }
        cols
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {} [", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
