//! Exact scalars in ℚ(ζ_m) and dense linear algebra over them.

pub mod cyclotomic;
mod mat;
mod parse;
mod scalar;

pub use mat::{Mat, Rref};
pub use scalar::Scalar;
