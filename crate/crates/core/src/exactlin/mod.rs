//! Exact linear algebra over the rationals and prime fields.

pub mod field;
pub mod matrix;
pub mod radical;
pub mod subspace;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{rref_solve, Matrix, RrefSolve};
pub use radical::{algebra_radical, matrix_algebra_radical, MultTable};
pub use subspace::{subspace_ops, Subspace, SubspaceOps};
