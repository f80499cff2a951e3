use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::algebra::{t_pochhammer, MPoly, RationalForm};
use crate::error::{Error, Result};
use crate::shapes::{Cell, Composition, Partition, Permutation};

use super::enumerate::enumerate_na;
use super::filling::AugmentedFilling;

/// `1 − q^a t^b` with no x-variables.
fn one_minus(a: usize, b: usize) -> MPoly {
    MPoly::one(0) - MPoly::q_t_monomial(0, a as u32, b as u32)
}

/// `∏ (t;t)_{m_i}` over the multiplicities of the nonzero parts.
pub fn multiplicity_factor(parts: &[usize]) -> MPoly {
    let mut sorted: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
    sorted.sort_unstable();
    sorted
        .chunk_by(|a, b| a == b)
        .fold(MPoly::one(0), |acc, run| acc * t_pochhammer(run.len()))
}

/// `PR1(μ) = ∏_{s ∈ dg(μ)} (1 − q^{leg(s)} t^{arm(s)+1})`.
pub fn pr1(mu: &Partition) -> MPoly {
    let shape = mu.as_composition();
    shape.cells().into_iter().fold(MPoly::one(0), |acc, c| {
        let leg = shape.leg(c).expect("cell of the shape");
        let arm = shape.arm(c).expect("cell of the shape");
        acc * one_minus(leg, arm + 1)
    })
}

/// `PR2(α) = ∏(t;t)_{m_i} · ∏ (1 − q^{leg(s)+1} t^{arm(s)+1})` over the
/// cells of `dg(inc(α))` above row 1.
pub fn pr2(alpha: &Composition) -> MPoly {
    let shape = alpha.inc();
    shape
        .cells()
        .into_iter()
        .filter(|c| c.row >= 2)
        .fold(multiplicity_factor(alpha.parts()), |acc, c| {
            let leg = shape.leg(c).expect("cell of the shape");
            let arm = shape.arm(c).expect("cell of the shape");
            acc * one_minus(leg + 1, arm + 1)
        })
}

/// `q^{maj} t^{coinv}` times the per-cell factors above row 1:
/// `1 − q^{leg+1} t^{arm+1}` where the entry equals the one below, `1 − t`
/// otherwise. No x-variables.
fn integral_qt_weight(f: &AugmentedFilling) -> MPoly {
    let shape = f.shape();
    let mut w = MPoly::q_t_monomial(0, f.maj_na() as u32, f.coinv() as u32);
    for (i, col) in f.columns().iter().enumerate() {
        for r in 2..=col.len() {
            let factor = if col[r - 1] == col[r - 2] {
                let c = Cell::new(i + 1, r);
                let leg = shape.leg(c).expect("cell of the shape");
                let arm = shape.arm(c).expect("cell of the shape");
                one_minus(leg + 1, arm + 1)
            } else {
                one_minus(0, 1)
            };
            w = w * factor;
        }
    }
    w
}

fn place(qt: &MPoly, f: &AugmentedFilling, n: usize) -> MPoly {
    let e = f.x_exponents(n).expect("entries bounded by n");
    qt.with_nvars(n).expect("x-free").shift(&e)
}

fn sum_weights(fillings: &[AugmentedFilling], n: usize, weight: impl Fn(&AugmentedFilling) -> MPoly + Sync) -> MPoly {
    fillings
        .par_iter()
        .map(|f| place(&weight(f), f, n))
        .reduce(|| MPoly::zero(n), |a, b| a + b)
}

/// The integral form `𝓔_{inc(α)}^{β(α)}(x_1..x_n; q, t)`.
///
/// Sums over nonattacking fillings of `dg(inc(α))` on the basement `β(α)`,
/// whose row 1 is forced to copy the basement.
pub fn e_integral(alpha: &Composition, n: usize) -> Result<MPoly> {
    if alpha.len() != n {
        return Err(Error::NvarsMismatch {
            left: alpha.len(),
            right: n,
        });
    }
    let shape = alpha.inc();
    let beta = alpha.beta();
    let fillings = enumerate_na(&shape, Some(&beta), n, false);
    for f in &fillings {
        for (i, col) in f.columns().iter().enumerate() {
            if let Some(&v) = col.first() {
                assert_eq!(v as usize, beta.get(i + 1), "row 1 must copy the basement");
            }
        }
        assert!(f.row_one_ordered(), "forced fillings are ordered");
    }
    let sum = sum_weights(&fillings, n, integral_qt_weight);
    Ok(sum * multiplicity_factor(alpha.parts()).with_nvars(n).expect("x-free"))
}

/// `E_α^{basement}(x_1..x_n; 0, t)` for an arbitrary shape and basement.
///
/// Sums `x^σ t^{coinv} (1 − t)^k` over nonattacking fillings with no
/// descents, row 1 against the basement included, where `k` counts cells
/// whose entry differs from the one below.
pub fn e_general_q0(alpha: &Composition, basement: &Permutation, n: usize) -> Result<MPoly> {
    if basement.len() != alpha.len() {
        return Err(Error::NvarsMismatch {
            left: alpha.len(),
            right: basement.len(),
        });
    }
    let fillings: Vec<AugmentedFilling> = enumerate_na(alpha, Some(basement), n, false)
        .into_iter()
        .filter(|f| f.maj_na() == 0 && f.basement_descents() == 0)
        .collect();
    Ok(sum_weights(&fillings, n, |f| {
        let changes = f
            .columns()
            .iter()
            .enumerate()
            .map(|(i, col)| {
                let mut below = basement.get(i + 1) as u32;
                let mut k = 0;
                for &v in col {
                    if v != below {
                        k += 1;
                    }
                    below = v;
                }
                k
            })
            .sum::<usize>();
        one_minus(0, 1).pow(changes as u32).shift(&[0, f.coinv() as u32])
    }))
}

/// `J_μ(x_1..x_n; q, t)` from ordered nonattacking fillings of
/// `dg(inc(μ))`, with `μ` padded by zeros to `n` parts.
pub fn j_compact(mu: &Partition, n: usize) -> Result<MPoly> {
    let shape = mu.padded_inc(n)?;
    let fillings = enumerate_na(&shape, None, n, true);
    let sum = sum_weights(&fillings, n, integral_qt_weight);
    Ok(sum * multiplicity_factor(mu.parts()).with_nvars(n).expect("x-free"))
}

/// `J_μ(x_1..x_n; q, t)` from all nonattacking fillings of `dg(μ)`.
pub fn j_hhl(mu: &Partition, n: usize) -> MPoly {
    let shape = mu.as_composition();
    let fillings = enumerate_na(&shape, None, n, false);
    let sum = sum_weights(&fillings, n, integral_qt_weight);
    let prefactor = one_minus(0, 1).pow(mu.len() as u32);
    sum * prefactor.with_nvars(n).expect("x-free")
}

/// `P_μ = J_μ / PR1(μ)`.
pub fn p_poly(mu: &Partition, n: usize) -> Result<RationalForm> {
    RationalForm::new(j_compact(mu, n)?, pr1(mu).with_nvars(n)?)
}

/// Schur polynomial `s_λ(x_1..x_n)` from semistandard tableaux, with the
/// parts of `λ` as row lengths.
pub fn schur_oracle(lambda: &Partition, n: usize) -> MPoly {
    fn fill(rows: &[usize], n: u32, tab: &mut Vec<Vec<u32>>, i: usize, j: usize, exps: &mut Vec<u32>, out: &mut MPoly) {
        if i == rows.len() {
            out.add_term(exps.clone(), BigInt::one());
            return;
        }
        if j == rows[i] {
            tab.push(Vec::new());
            fill(rows, n, tab, i + 1, 0, exps, out);
            tab.pop();
            return;
        }
        let left = if j > 0 { tab[i][j - 1] } else { 1 };
        let above = if i > 0 { tab[i - 1][j] + 1 } else { 1 };
        for v in left.max(above)..=n {
            tab[i].push(v);
            exps[v as usize - 1] += 1;
            fill(rows, n, tab, i, j + 1, exps, out);
            exps[v as usize - 1] -= 1;
            tab[i].pop();
        }
    }
    let mut out = MPoly::zero(n);
    let mut tab = vec![Vec::new()];
    fill(lambda.parts(), n as u32, &mut tab, 0, 0, &mut vec![0; n + 2], &mut out);
    out
}
