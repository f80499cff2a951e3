//! Fillings of partition diagrams and the two formulas for `H̃_λ`.
//!
//! A [`Filling`] has an implicit basement of `∞` in row 0. The module
//! provides `inv`/`maj`, the column order `⊲`, sorted tableaux and `perm_t`,
//! the flip operators `T_i^{(r)}`, positive distinguished subexpressions,
//! families `𝓕(σ)` and the reverse (sorting) algorithm.

mod family;
mod filling;
mod flip;
mod htilde;
mod order;
mod pds;

pub use family::{block_decomposition, family, family_tree, sort_filling, FamilyEdge, FamilyTree};
pub use filling::{
    enumerate_fillings, filling_count, filling_from_index, is_inversion_triple, rectangles, Filling, Rectangle, Triple,
    TripleKind,
};
pub use flip::{flip, flip_row};
pub use htilde::{htilde_brute, htilde_compact, sorted_weight};
pub use order::{compare_columns, enumerate_sorted, is_sorted, perm_t, sort_block, SortedTableau};
pub use pds::{pds, sym_tilde};
