//! Commutative cubes, their signed total complexes and cohomology, and the
//! cube attached to a module and a vertex.

mod cube;
mod idempotent;
mod module;

pub use cube::{cohomology, complex_from_cube, cone_check, Cohomology, Complex, ConeReport, Cube};
pub use idempotent::{column_basis, idempotent_cube};
pub use module::{euler_characteristic, module_character, module_cohomology, module_cube, EulerReport};

#[cfg(test)]
mod tests;
