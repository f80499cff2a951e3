use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::algebra::MPoly;
use crate::shapes::Partition;

use super::filling::{filling_count, filling_from_index, Filling};
use super::order::{enumerate_sorted, perm_t, SortedTableau};

fn stat_exponents(f: &Filling, nvars: usize, maj: usize, inv: usize) -> Vec<u32> {
    let mut e = f.x_exponents(nvars).expect("entries bounded by nvars");
    e[nvars] = maj as u32;
    e[nvars + 1] = inv as u32;
    e
}

/// `H̃_λ(x_1..x_n; q, t) = Σ_σ x^σ q^{maj σ} t^{inv σ}` over all fillings.
///
/// # Panics
/// If `n^{|λ|}` does not fit in `u64`.
pub fn htilde_brute(shape: &Partition, n: usize) -> MPoly {
    let total = filling_count(shape, n).expect("filling count overflows u64");
    (0..total)
        .into_par_iter()
        .fold(
            || MPoly::zero(n),
            |mut acc, idx| {
                let f = filling_from_index(shape, n, idx);
                acc.add_term(stat_exponents(&f, n, f.maj(), f.inv()), BigInt::one());
                acc
            },
        )
        .reduce(|| MPoly::zero(n), |a, b| a + b)
}

/// `q^{maj σ} t^{inv σ} perm_t(σ)` with no x-variables.
pub fn sorted_weight(s: &SortedTableau) -> MPoly {
    perm_t(s).shift(&[s.maj() as u32, s.inv() as u32])
}

/// `H̃_λ = Σ x^σ t^{inv σ} q^{maj σ} perm_t(σ)` over sorted tableaux.
pub fn htilde_compact(shape: &Partition, n: usize) -> MPoly {
    enumerate_sorted(shape, n)
        .par_iter()
        .map(|s| {
            let e = stat_exponents(s, n, s.maj(), s.inv());
            perm_t(s).with_nvars(n).expect("x-free").shift(&e)
        })
        .reduce(|| MPoly::zero(n), |a, b| a + b)
}
