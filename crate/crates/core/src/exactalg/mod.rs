//! Exact scalar arithmetic and dense exact linear algebra.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{random_nonzero_scalar, random_scalar, Matrix};
pub use scalar::{is_prime_u64, FieldTag, Scalar};
pub use subspace::{subspace_ops, Subspace, SubspaceRelations};

pub(crate) use scalar::{addmod, invmod, mulmod, submod};
