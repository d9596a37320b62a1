//! Reflection functors on wreath-product modules.

mod bigspace;
mod functor;
mod identities;
mod witness;

pub use bigspace::{subsets, BigSpace, SinkContext};
pub use functor::{
    apply_functor_word, generic_failure, is_generic, is_generic_oracle, reflect_morphism, reflect_unchecked,
    reflection_functor, sink_form, ReflectionOutput, WordTrace,
};
pub use identities::{check_identities, IdentityReport};
pub use witness::{involution_witness, Witness};
