//! Symmetric groups: permutations, Young diagrams, seminormal
//! representations, induction from Young subgroups, and the regular
//! representation test for `x ± ν Σ s_{1m}`.

mod perm;
mod rep;
mod young;

pub use perm::Perm;
pub use rep::{
    central_sum_invertible, coset_step, induce_rep, seminormal_rep, tensor_matrix,
    young_coset_reps, Induced, RepMatrices,
};
pub use young::{partitions, Contents, YoungDiagram};
