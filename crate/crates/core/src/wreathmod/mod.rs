//! Modules over the deformed wreath product algebra: storage, the relation
//! verifier, standard constructions, and transport along quiver symmetries.

mod build;
mod module;
mod transport;
mod verify;

pub use build::{block_diag, build_induced_zero_e, build_outer_tensor, direct_sum, simple};
pub use module::{Params, Tuple, WreathModule};
pub use transport::{
    check_intertwiner, check_morphism, graph_automorphism_transport, identity_morphism,
    match_edges, reorient_inverse, reorient_module, Morphism,
};
pub use verify::{commutator_residual, moment_residual, verify_relations, Relation, RelationFailure, VerifyReport};

#[cfg(test)]
mod tests;
