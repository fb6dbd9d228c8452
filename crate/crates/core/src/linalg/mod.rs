//! Exact field arithmetic and the dense linear algebra kernel.

mod field;
mod matrix;
mod solve;

pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use solve::{
    invert_matrix, kernel_basis, matrix_power, rank, rref, solve_affine_map, solve_affine_system, AffineSolutionSet,
};
