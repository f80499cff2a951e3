use crate::error::{Error, Result};

use super::filling::{is_inversion_triple, Filling};

/// The row where equal-height columns `i`, `i+1` first differ.
pub fn flip_row(f: &Filling, i: usize) -> Result<usize> {
    let ncols = f.columns().len();
    if i == 0 || i >= ncols {
        return Err(Error::IndexOutOfRange { index: i, nvars: ncols });
    }
    let (a, b) = (f.column(i), f.column(i + 1));
    if a.len() != b.len() {
        return Err(Error::HeightMismatch(a.len(), b.len()));
    }
    a.iter()
        .zip(b)
        .position(|(x, y)| x != y)
        .map(|k| k + 1)
        .ok_or(Error::IdenticalColumns(i, i + 1))
}

/// The operator `T_i^{(r)}`; returns the image and the row `r`.
///
/// Swaps the entries of columns `i`, `i+1` in row `r`, then keeps swapping
/// upward while the triple `(i+1,r′+1), (i,r′+1), (i,r′)` changes its
/// orientation because of the swap below it.
pub fn flip(f: &Filling, i: usize) -> Result<(Filling, usize)> {
    let r = flip_row(f, i)?;
    let h = f.height(i);
    let mut out = f.clone();
    let mut cur = r;
    loop {
        let before = out.column(i)[cur - 1];
        out.swap_cells(i, cur);
        if cur == h {
            break;
        }
        let after = out.column(i)[cur - 1];
        let a = out.column(i + 1)[cur];
        let b = out.column(i)[cur];
        if is_inversion_triple(a, b, before) == is_inversion_triple(a, b, after) {
            break;
        }
        cur += 1;
    }
    Ok((out, r))
}
