//! Finite groups as Cayley tables, with the machinery needed to classify the
//! groups of order `p^2` and `pq`: subgroup lattices, homomorphism and
//! automorphism search, direct and semidirect products, recognition of
//! internal products, and an independent brute-force enumerator used to
//! cross-check every classification claim.

pub mod arith;
pub mod classification;
pub mod cli;
pub mod enumerate;
pub mod format;
pub mod group;
pub mod morphisms;
pub mod products;
pub mod recognition;
pub mod subgroup;

pub use group::{cyclic_group, quaternion_group, symmetric_group, FiniteGroup, GroupError};
