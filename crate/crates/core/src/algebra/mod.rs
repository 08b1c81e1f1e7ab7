//! Finite monoids, semigroups and groups given by Cayley tables.

mod action;
mod catalog;
mod congruence;
mod construct;
pub mod family;
mod hom;
mod iso;
pub(crate) mod monoid;

pub use action::MonoidAction;
pub use catalog::{
    canonical_form, enumerate_monoids, enumerate_semigroups, metacyclic, semidirect_cyclic,
    small_groups,
};
pub use congruence::{kernel_congruence_of_action, quotient_by_congruence, Congruence};
pub(crate) use construct::{check_cap, closure_mask};
pub use construct::{
    direct_power, direct_product, from_elements, generate, greedy_generators, restrict_to_subset,
    semigroup_from_elements, submonoid_closure, subsemigroup, Product,
};
pub use family::Family;
pub use hom::{kernel, HomKind, Homomorphism};
pub use iso::{is_isomorphic, profile};
pub use monoid::{FiniteGroup, FiniteMonoid, FiniteSemigroup};

/// Numeric limits shared by every construction and search.
///
/// These are configuration, not constants: the CLI exposes each of them as a
/// flag and as an `MLAB_*` environment variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Limits {
    /// Largest number of elements any constructed monoid may have.
    pub size_cap: usize,
    /// Largest order accepted by [`is_isomorphic`].
    pub iso_bound: usize,
    /// Largest group order for exhaustive subgroup enumeration.
    pub subgroup_cap: usize,
    /// Largest search space (product of candidate counts) a search may visit.
    pub budget: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            size_cap: 4096,
            iso_bound: 16,
            subgroup_cap: 64,
            budget: 1 << 32,
        }
    }
}
