//! Exact polynomial arithmetic in `x_1..x_n, q, t`.

mod format;
mod mpoly;
mod rational;
mod tanalog;

pub use format::{MPolyJson, RationalJson, TermJson};
pub use mpoly::{Binding, MPoly, Var};
pub use rational::RationalForm;
pub use tanalog::{t_factorial, t_integer, t_multinomial, t_pochhammer};
