//! Dense complex linear algebra used by the rest of the crate.

mod eig;
mod matrix;

pub use eig::{eigen_residual, hermitian_eig, EigDecomposition};
pub use matrix::{
    hermitian_residual, symmetry_residual, unitarity_residual, ComplexMatrix, ComplexVector, Scalar,
};
pub(crate) use matrix::{ONE, ZERO};
