//! Fillings of composition diagrams with basements, the nonattacking
//! condition, and the integral forms `𝓔`, `J` and `P` built from them.

mod enumerate;
mod filling;
mod integral;

pub use enumerate::{enumerate_na, for_each_na};
pub use filling::{attacks, is_coinversion_triple, AugmentedFilling, NaTriple, TripleType};
pub use integral::{e_general_q0, e_integral, j_compact, j_hhl, multiplicity_factor, p_poly, pr1, pr2, schur_oracle};
