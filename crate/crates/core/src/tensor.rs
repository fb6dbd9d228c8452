//! Evaluation of multilinear formulas by acting on the legs of a tensor.
//!
//! A [`Legs`] value is a batch of elements of `V₁ ⊗ … ⊗ Vₙ`, stored dense and
//! row-major with the batch index outermost. Starting from
//! [`Legs::basis`] (every basis tensor of the input space) and applying
//! structure maps leg by leg evaluates a composite linear map on the whole
//! basis at once; [`Legs::into_matrix`] then reads it back as a matrix.
//!
//! Sweedler sums become leg splits: applying `Δ` to leg `i` replaces it by the
//! two legs `c₍₁₎, c₍₂₎`. Products merge two adjacent legs. Leg order always
//! follows the major-first convention of [`Matrix::kron`].

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};

#[derive(Clone, Debug)]
pub struct Legs {
    field: Field,
    batch: usize,
    dims: Vec<usize>,
    data: Vec<Scalar>,
}

fn product(dims: &[usize]) -> usize {
    dims.iter().product()
}

impl Legs {
    /// All basis tensors of `V₁ ⊗ … ⊗ Vₙ`, in lexicographic order.
    pub fn basis(field: Field, dims: &[usize]) -> Self {
        let n = product(dims);
        let mut data = vec![field.zero(); n * n];
        for i in 0..n {
            data[i * n + i] = field.one();
        }
        Legs {
            field,
            batch: n,
            dims: dims.to_vec(),
            data,
        }
    }

    /// Reads the columns of `m` as a batch of tensors with legs `dims`.
    pub fn from_matrix(m: &Matrix, dims: &[usize]) -> Result<Self> {
        if product(dims) != m.rows() {
            return Err(Error::dims("tensor legs from matrix", product(dims), m.rows()));
        }
        Ok(Legs {
            field: m.field(),
            batch: m.cols(),
            dims: dims.to_vec(),
            data: m.transpose().entries().to_vec(),
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Replaces legs `start..start+count` by legs `out_dims`, acting with
    /// `map` on the grouped block.
    pub fn apply(self, start: usize, count: usize, map: &Matrix, out_dims: &[usize]) -> Result<Self> {
        if start + count > self.dims.len() {
            return Err(Error::dims("tensor leg range", self.dims.len(), start + count));
        }
        let block_in = product(&self.dims[start..start + count]);
        if map.cols() != block_in {
            return Err(Error::dims(format!("map on legs {start}..{}", start + count), block_in, map.cols()));
        }
        if map.rows() != product(out_dims) {
            return Err(Error::dims("map output legs", product(out_dims), map.rows()));
        }
        let pre = product(&self.dims[..start]);
        let post = product(&self.dims[start + count..]);
        let block_out = map.rows();
        let support = map.column_support();

        let mut dims = self.dims[..start].to_vec();
        dims.extend_from_slice(out_dims);
        dims.extend_from_slice(&self.dims[start + count..]);

        let in_stride = pre * block_in * post;
        let out_stride = pre * block_out * post;
        let mut data = vec![self.field.zero(); self.batch * out_stride];
        for b in 0..self.batch {
            for p in 0..pre {
                for i in 0..block_in {
                    let col = &support[i];
                    if col.is_empty() {
                        continue;
                    }
                    for q in 0..post {
                        let x = &self.data[b * in_stride + (p * block_in + i) * post + q];
                        if x.is_zero() {
                            continue;
                        }
                        for (o, v) in col {
                            data[b * out_stride + (p * block_out + o) * post + q] += &(v * x);
                        }
                    }
                }
            }
        }
        Ok(Legs {
            field: self.field,
            batch: self.batch,
            dims,
            data,
        })
    }

    /// Applies a linear map to a single leg.
    pub fn map(self, leg: usize, map: &Matrix) -> Result<Self> {
        let rows = map.rows();
        self.apply(leg, 1, map, &[rows])
    }

    /// Splits one leg with a map `V → X ⊗ Y` (a comultiplication or coaction).
    pub fn split(self, leg: usize, map: &Matrix, left: usize, right: usize) -> Result<Self> {
        self.apply(leg, 1, map, &[left, right])
    }

    /// Merges legs `leg, leg + 1` with a map `X ⊗ Y → V` (a product or action).
    pub fn merge(self, leg: usize, map: &Matrix) -> Result<Self> {
        let rows = map.rows();
        self.apply(leg, 2, map, &[rows])
    }

    /// Reorders legs: output leg `t` is input leg `order[t]`.
    pub fn permute(self, order: &[usize]) -> Result<Self> {
        let n = self.dims.len();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::Invalid(format!("{order:?} is not a permutation of {n} legs")));
        }
        let dims: Vec<usize> = order.iter().map(|&i| self.dims[i]).collect();
        let size = product(&self.dims);
        // stride of each input leg
        let mut in_strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            in_strides[i] = in_strides[i + 1] * self.dims[i + 1];
        }
        let mut data = vec![self.field.zero(); self.batch * size];
        let mut idx = vec![0usize; n];
        for out in 0..size {
            // idx holds the output multi-index
            let src: usize = (0..n).map(|t| idx[t] * in_strides[order[t]]).sum();
            for b in 0..self.batch {
                let x = &self.data[b * size + src];
                if !x.is_zero() {
                    data[b * size + out] = x.clone();
                }
            }
            for t in (0..n).rev() {
                idx[t] += 1;
                if idx[t] < dims[t] {
                    break;
                }
                idx[t] = 0;
            }
        }
        Ok(Legs {
            field: self.field,
            batch: self.batch,
            dims,
            data,
        })
    }

    /// Swaps two adjacent legs.
    pub fn swap(self, leg: usize) -> Result<Self> {
        let mut order: Vec<usize> = (0..self.dims.len()).collect();
        order.swap(leg, leg + 1);
        self.permute(&order)
    }

    /// Matrix whose column `b` is batch element `b` flattened over all legs.
    pub fn into_matrix(self) -> Matrix {
        let rows = product(&self.dims);
        Matrix::from_vec(self.field, self.batch, rows, self.data)
            .expect("consistent tensor storage")
            .transpose()
    }
}

/// Matrix of the leg permutation on `V_{d₀} ⊗ … ⊗ V_{dₙ}`.
pub fn permutation_matrix(field: Field, dims: &[usize], order: &[usize]) -> Result<Matrix> {
    Ok(Legs::basis(field, dims).permute(order)?.into_matrix())
}
