//! Compositions, partitions, diagrams, arm/leg and permutations.
//!
//! Conventions: columns are numbered from 1 at the left, rows from 1 at the
//! bottom, and row 0 is the basement. Column `i` of `dg(α)` has `α_i` cells.

mod composition;
mod diagram;
mod partition;
mod permutation;

pub use composition::{strong_compositions, weak_compositions, weak_with_plus, Composition, CompositionStats};
pub use diagram::{Basement, Cell, Diagram};
pub use partition::Partition;
pub(crate) use permutation::next_permutation;
pub use permutation::{canonical_w0_word, Permutation};

pub(crate) fn parse_list(s: &str) -> crate::Result<Vec<usize>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| crate::Error::Parse(format!("{p:?}: {e}")))
        })
        .collect()
}
