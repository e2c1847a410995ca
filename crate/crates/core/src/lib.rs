//! Finite loops, loop folders and the structure theory of Bruck loops.
//!
//! Loops are Cayley tables with the identity at index 0. Permutations act
//! on the right, so `R(x).then(R(y))` maps `z` to `(z*x)*y`.

pub mod bruck;
pub mod bsgs;
pub mod catalog;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod folder;
pub mod group;
pub mod iso;
pub mod loops;
pub mod perm;
pub mod structure;

pub use bsgs::PermGroup;
pub use error::{Error, Result};
pub use folder::{envelope, loop_of_folder, verify_folder, Envelope, FolderMorphism, LoopFolder};
pub use group::FiniteGroup;
pub use iso::{canonical_form, canonical_labeling, loops_isomorphic};
pub use loops::{CayleyLoop, LoopHom, SubloopSet};
pub use perm::Perm;

/// Default cap on enumerated group orders.
pub const DEFAULT_CAP: u128 = 1 << 20;
