//! Exact computations with modules over deformed wreath products of
//! preprojective algebras: reflection functors, their cube complexes, and the
//! parameter dictionary for wreath-product symplectic reflection algebras.

pub mod corpus;
pub mod cubecomplex;
pub mod error;
pub mod io;
pub mod quiver;
pub mod ratmat;
pub mod reflect;
pub mod sra;
pub mod symg;
pub mod wreathmod;

pub use error::{Error, Result};
pub use ratmat::{Mat, Scalar};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/quivers.md")]
    mod quivers {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/reflection.md")]
    mod reflection {}
    #[doc = include_str!("../../../book/src/cubes.md")]
    mod cubes {}
    #[doc = include_str!("../../../book/src/parameters.md")]
    mod parameters {}
}
