//! Permutation groups small enough to enumerate.

mod group;
mod io;
mod perm;
mod structure;

pub use group::{order_bound, set_order_bound, ConjugacyClass, Group, GroupRef, Subgroup, DEFAULT_ORDER_BOUND};
pub use io::{parse_cycles, parse_group_file, parse_group_text, write_group_text, NamedGroup};
pub use perm::Permutation;
