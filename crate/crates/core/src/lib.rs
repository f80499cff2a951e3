//! Exact combinatorial formulas for Macdonald polynomials.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: sparse integer polynomials in `x_1..x_n, q, t` and x-free quotients.
//! - [`shapes`]: compositions, partitions, diagrams, arm/leg and permutations.
//! - [`tableaux`]: fillings of partition diagrams, `inv`/`maj`, sorted tableaux,
//!   the flip operators, positive distinguished subexpressions, families and
//!   both formulas for the modified Macdonald polynomial `H̃_λ`.
//! - [`nonattacking`]: composition fillings with basements, `coinv`, the
//!   integral forms `𝓔_α` and `J_μ`, and `P_μ`.
//! - [`quasisymmetric`]: `G_γ`, quasisymmetric Schur functions, Demazure
//!   t-atoms and Hecke operators.
//!
//! All arithmetic is exact. Every summation that runs in parallel reduces
//! integer coefficients, so results do not depend on the thread count.

pub mod algebra;
mod error;
pub mod nonattacking;
pub mod quasisymmetric;
pub mod shapes;
pub mod tableaux;

pub use algebra::{MPoly, RationalForm, Var};
pub use error::{Error, Result};
pub use shapes::{Cell, Composition, Diagram, Partition, Permutation};
