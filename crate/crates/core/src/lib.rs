//! Finite monoids and semigroups given by Cayley tables: Green's relations,
//! wreath products and the embeddings they carry, embedding problems for
//! finite groups, the Henckell–Schützenberger expansion, and a bounded search
//! for non-splitting covers.
//!
//! Every structure is an immutable table of dense `0..n` indices. Semigroups
//! are monoids with a flag recording whether the identity was adjoined.

pub mod algebra;
pub mod embedding;
pub mod error;
pub mod expansion;
pub mod greens;
pub mod projectivity;
pub(crate) mod search;
pub mod wreath;

pub use algebra::{
    direct_product, is_isomorphic, Congruence, FiniteGroup, FiniteMonoid, FiniteSemigroup, HomKind,
    Homomorphism, Limits, MonoidAction,
};
pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/tables.md")]
    mod tables {}
    #[doc = include_str!("../../../book/src/greens.md")]
    mod greens {}
    #[doc = include_str!("../../../book/src/wreath.md")]
    mod wreath {}
    #[doc = include_str!("../../../book/src/embedding.md")]
    mod embedding {}
    #[doc = include_str!("../../../book/src/expansion.md")]
    mod expansion {}
    #[doc = include_str!("../../../book/src/projectivity.md")]
    mod projectivity {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
