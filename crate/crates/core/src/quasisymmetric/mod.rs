//! Quasisymmetric Macdonald polynomials `G_γ`, monomial quasisymmetric
//! expansions, Demazure t-atoms and the Hecke operators `T_i`.

mod expansion;
mod gamma;
mod hecke;

pub use expansion::{qsym_expand, QSymExpansion};
pub use gamma::{demazure_t_atom, g_integral, g_poly, qs_gamma};
pub use hecke::hecke_t;
