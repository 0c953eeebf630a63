//! Finite groups from generators, Cayley tables, subgroups, quotients,
//! extensions and isomorphism search.

pub mod extension;
pub mod finite;
pub mod map;
pub mod named;
pub mod perm;

pub use extension::{conjugation_action, semidirect_product, ShortExactSequence};
pub use finite::{generate_closure, ConcreteGroup, FiniteGroup, GroupElement, Subset, DEFAULT_CAP};
pub use map::{find_isomorphism, verify_printed_map, GroupMap, PrintedEntry, PrintedMapCheck};
pub use perm::Permutation;
