use rayon::prelude::*;

use crate::algebra::{MPoly, RationalForm};
use crate::error::{Error, Result};
use crate::nonattacking::{e_general_q0, e_integral, pr2};
use crate::shapes::{weak_with_plus, Composition, Permutation};

fn check_length(gamma: &Composition, n: usize) -> Result<()> {
    if gamma.ell() > n {
        return Err(Error::TooFewVariables {
            needed: gamma.ell(),
            nvars: n,
        });
    }
    Ok(())
}

/// `𝓖_γ = Σ_{α⁺ = γ} 𝓔_α` over weak compositions with `n` parts.
///
/// All such `α` share `inc(α)`, so this is `PR2(inc(γ)) · G_γ`.
pub fn g_integral(gamma: &Composition, n: usize) -> Result<MPoly> {
    check_length(gamma, n)?;
    weak_with_plus(gamma, n)
        .par_iter()
        .map(|a| e_integral(a, n))
        .try_reduce(|| MPoly::zero(n), |a, b| Ok(a + b))
}

/// `G_γ = 𝓖_γ / PR2(inc(γ))`.
pub fn g_poly(gamma: &Composition, n: usize) -> Result<RationalForm> {
    RationalForm::new(g_integral(gamma, n)?, pr2(gamma).with_nvars(n)?)
}

/// Demazure t-atom `E_α^{id}(x_1..x_n; 0, t)`.
pub fn demazure_t_atom(alpha: &Composition, n: usize) -> Result<MPoly> {
    e_general_q0(alpha, &Permutation::identity(alpha.len()), n)
}

/// Quasisymmetric Schur function `QS_γ = Σ_{α⁺ = γ} E_α^{id}(X; 0, 0)`.
pub fn qs_gamma(gamma: &Composition, n: usize) -> Result<MPoly> {
    check_length(gamma, n)?;
    weak_with_plus(gamma, n)
        .par_iter()
        .map(|a| Ok(demazure_t_atom(a, n)?.at_qt(None, Some(0))))
        .try_reduce(|| MPoly::zero(n), |a, b| Ok(a + b))
}
