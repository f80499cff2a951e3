use crate::error::{Error, Result};

use super::MPoly;

/// `[k]_t = 1 + t + … + t^{k−1}` with no x-variables.
pub fn t_integer(k: usize) -> MPoly {
    let mut p = MPoly::zero(0);
    for e in 0..k {
        p += MPoly::q_t_monomial(0, 0, e as u32);
    }
    p
}

/// `[k]_t! = [1]_t [2]_t ⋯ [k]_t`.
pub fn t_factorial(k: usize) -> MPoly {
    (1..=k).fold(MPoly::one(0), |acc, i| acc * t_integer(i))
}

/// `(t;t)_k = (1−t)(1−t²)⋯(1−t^k)`; `k = 0` gives 1.
pub fn t_pochhammer(k: usize) -> MPoly {
    (1..=k).fold(MPoly::one(0), |acc, i| {
        acc * (MPoly::one(0) - MPoly::q_t_monomial(0, 0, i as u32))
    })
}

/// Gaussian multinomial `[n]_t! / ∏ [p]_t!`, with exact division.
pub fn t_multinomial(n: usize, parts: &[usize]) -> Result<MPoly> {
    let sum: usize = parts.iter().sum();
    if sum != n {
        return Err(Error::PartsSumMismatch { n, sum });
    }
    let den = parts.iter().fold(MPoly::one(0), |acc, &p| acc * t_factorial(p));
    t_factorial(n).exact_div_xfree(&den)
}
