use serde::Serialize;

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Reduced row echelon form with the pivot columns in order.
///
/// The pivot in each column is the first nonzero entry at or below the
/// current row, so the output depends only on the input.
pub fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let field = a.field();
    let mut rows = a.to_rows();
    let ncols = a.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let m = Matrix::from_vec(field, a.rows(), ncols, rows.concat()).expect("shape preserved");
    (m, pivots)
}

pub fn rank(a: &Matrix) -> usize {
    rref(a).1.len()
}

/// Solution set of an affine system: `particular + span(nullspace_basis)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineSolutionSet {
    #[serde(serialize_with = "ser_opt_vec")]
    pub particular: Option<Vec<Scalar>>,
    #[serde(serialize_with = "ser_vecs")]
    pub nullspace_basis: Vec<Vec<Scalar>>,
}

fn ser_opt_vec<S: serde::Serializer>(v: &Option<Vec<Scalar>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(v) => s.collect_seq(v.iter().map(ToString::to_string)),
    }
}

fn ser_vecs<S: serde::Serializer>(v: &[Vec<Scalar>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.iter().map(ToString::to_string).collect::<Vec<_>>()))
}

impl AffineSolutionSet {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    /// Dimension of the solution space, `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        self.particular.as_ref().map(|_| self.nullspace_basis.len())
    }

    /// `particular + Σ coeffs[i] · basis[i]`.
    pub fn element(&self, coeffs: &[Scalar]) -> Option<Vec<Scalar>> {
        let p = self.particular.as_ref()?;
        assert_eq!(coeffs.len(), self.nullspace_basis.len(), "one coefficient per basis vector");
        let mut x = p.clone();
        for (c, b) in coeffs.iter().zip(&self.nullspace_basis) {
            if c.is_zero() {
                continue;
            }
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += &(c * bi);
            }
        }
        Some(x)
    }

    /// The particular solution followed by `particular + b` for every basis
    /// vector `b`: an affinely spanning family of the whole set.
    pub fn affine_generators(&self) -> Vec<Vec<Scalar>> {
        let Some(p) = &self.particular else {
            return Vec::new();
        };
        let mut out = vec![p.clone()];
        for b in &self.nullspace_basis {
            out.push(p.iter().zip(b).map(|(x, y)| x + y).collect());
        }
        out
    }

    /// Every element, for prime fields only. Intended for small oracle checks.
    pub fn enumerate(&self, field: Field) -> Vec<Vec<Scalar>> {
        let Field::Prime(p) = field else {
            panic!("enumeration needs a finite field");
        };
        if self.particular.is_none() {
            return Vec::new();
        }
        let k = self.nullspace_basis.len();
        let total = (p as usize).pow(k as u32);
        (0..total)
            .map(|mut n| {
                let coeffs: Vec<Scalar> = (0..k)
                    .map(|_| {
                        let c = field.int((n % p as usize) as i64);
                        n /= p as usize;
                        c
                    })
                    .collect();
                self.element(&coeffs).expect("nonempty")
            })
            .collect()
    }
}

/// Solves `a · x = b` exactly. Free variables are set to zero in the
/// particular solution; the null-space basis has one vector per free column.
pub fn solve_affine_system(a: &Matrix, b: &[Scalar]) -> Result<AffineSolutionSet> {
    if a.rows() != b.len() {
        return Err(Error::dims("affine system right-hand side", a.rows(), b.len()));
    }
    let field = a.field();
    let n = a.cols();
    // augmented matrix [a | b]
    let mut aug = Vec::with_capacity(a.rows() * (n + 1));
    for (r, rhs) in b.iter().enumerate() {
        aug.extend_from_slice(a.row(r));
        aug.push(rhs.clone());
    }
    let aug = Matrix::from_vec(field, a.rows(), n + 1, aug)?;
    let (red, pivots) = rref(&aug);
    let nullspace_basis = null_basis_from_rref(&red, &pivots, n);
    if pivots.last() == Some(&n) {
        return Ok(AffineSolutionSet {
            particular: None,
            nullspace_basis,
        });
    }
    let mut x = vec![field.zero(); n];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = red.get(row, n).clone();
    }
    Ok(AffineSolutionSet {
        particular: Some(x),
        nullspace_basis,
    })
}

/// Solves for an unknown `rows × cols` matrix `X` from a residual that is
/// affine in `X` and vanishes exactly on the wanted maps. The residual is
/// probed at zero and at every matrix unit; unknowns are the entries of `X`
/// in row-major order.
pub fn solve_affine_map<F>(field: Field, rows: usize, cols: usize, residual: F) -> Result<AffineSolutionSet>
where
    F: Fn(&Matrix) -> Result<Vec<Scalar>>,
{
    let n = rows * cols;
    let base = residual(&Matrix::zeros(field, rows, cols))?;
    let mut columns = Vec::with_capacity(n);
    for u in 0..n {
        let mut e = Matrix::zeros(field, rows, cols);
        e.set(u / cols, u % cols, field.one());
        let r = residual(&e)?;
        if r.len() != base.len() {
            return Err(Error::Internal("residual length depends on the unknown".into()));
        }
        columns.push(r.iter().zip(&base).map(|(x, b)| x - b).collect::<Vec<_>>());
    }
    let m = base.len();
    let mut data = Vec::with_capacity(m * n);
    for r in 0..m {
        data.extend(columns.iter().map(|c| c[r].clone()));
    }
    let a = Matrix::from_vec(field, m, n, data)?;
    let rhs: Vec<Scalar> = base.iter().map(|b| -b).collect();
    solve_affine_system(&a, &rhs)
}

fn null_basis_from_rref(red: &Matrix, pivots: &[usize], n: usize) -> Vec<Vec<Scalar>> {
    let field = red.field();
    let pivot_cols: Vec<usize> = pivots.iter().copied().filter(|&c| c < n).collect();
    let mut is_pivot = vec![false; n];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![field.zero(); n];
            v[f] = field.one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                let e = red.get(row, f);
                if !e.is_zero() {
                    v[pc] = -e;
                }
            }
            v
        })
        .collect()
}

/// Basis of `{x : a·x = 0}`; empty iff `a` is injective.
pub fn kernel_basis(a: &Matrix) -> Vec<Vec<Scalar>> {
    let (red, pivots) = rref(a);
    null_basis_from_rref(&red, &pivots, a.cols())
}

pub fn invert_matrix(a: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::dims("inverse of non-square matrix", a.rows(), a.cols()));
    }
    let n = a.rows();
    let field = a.field();
    let mut aug = Vec::with_capacity(n);
    for r in 0..n {
        let mut row = a.row(r).to_vec();
        row.extend((0..n).map(|c| if c == r { field.one() } else { field.zero() }));
        aug.push(row);
    }
    if n == 0 {
        return Ok(Matrix::zeros(field, 0, 0));
    }
    let aug = Matrix::from_rows(field, aug)?;
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::NotInvertible {
            context: format!("{n}x{n} matrix of rank {}", pivots.iter().filter(|&&c| c < n).count()),
        });
    }
    let mut inv = Matrix::zeros(field, n, n);
    for r in 0..n {
        for c in 0..n {
            inv.set(r, c, red.get(r, n + c).clone());
        }
    }
    Ok(inv)
}

/// Integer power of a square matrix; negative exponents use `inverse`.
pub fn matrix_power(a: &Matrix, inverse: &Matrix, exp: i32) -> Matrix {
    let base = if exp < 0 { inverse } else { a };
    let mut out = Matrix::identity(a.field(), a.rows());
    for _ in 0..exp.unsigned_abs() {
        out = out.mul(base);
    }
    out
}
