//! Homomorphisms, isomorphisms and automorphism groups.
//!
//! Isomorphisms and automorphisms are both found by backtracking over the
//! images of a greedy generating sequence; fingerprints only ever reject.

mod aut;
mod hom;
mod iso;
mod search;

use thiserror::Error;

pub use aut::{
    automorphism_group, conj_normal, homs_from_cyclic, homs_to_aut, AutGroup, ConjugationAction, AUT_NODE_BUDGET,
};
pub use hom::{restrict, Hom, Iso};
pub use iso::{
    are_isomorphic, conjugacy_class_sizes, find_isomorphism, fingerprint, isomorphism_or_reason, Fingerprint,
    NonIsomorphic,
};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("map has {found} entries, source has {expected} elements")]
    LengthMismatch { expected: usize, found: usize },
    #[error("image {image} of element {element} is out of range")]
    OutOfRange { element: usize, image: usize },
    #[error("identity is not sent to the identity")]
    IdentityNotPreserved,
    #[error("not multiplicative at ({x}, {y})")]
    NotMultiplicative { x: usize, y: usize },
    #[error("map is not a bijection")]
    NotBijective,
    #[error("maps are not mutually inverse")]
    NotInverse,
    #[error("groups of the composed maps do not line up")]
    MismatchedGroups,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("source group is not cyclic")]
    NotCyclicSource,
    #[error("automorphism search exceeded its budget")]
    BudgetExceeded,
}

#[cfg(test)]
mod tests;
