use crate::algebra::MPoly;
use crate::error::Result;

/// `T_i p = t p − (t x_i − x_{i+1}) ∂_i p`.
pub fn hecke_t(p: &MPoly, i: usize) -> Result<MPoly> {
    let n = p.nvars();
    let dd = p.divided_difference(i)?;
    let factor = MPoly::t(n) * MPoly::x(n, i) - MPoly::x(n, i + 1);
    Ok(MPoly::t(n) * p - factor * dd)
}
