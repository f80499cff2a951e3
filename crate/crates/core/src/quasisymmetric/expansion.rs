use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::MPoly;
use crate::error::{Error, Result};
use crate::shapes::Composition;

/// `Σ_γ c_γ M_γ` in the monomial quasisymmetric basis, with x-free
/// coefficients keyed by strong compositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSymExpansion {
    degree: Option<u32>,
    coeffs: BTreeMap<Composition, MPoly>,
}

impl QSymExpansion {
    /// Common x-degree of the keys; `None` if they differ or there are none.
    pub fn degree(&self) -> Option<u32> {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Composition, MPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, gamma: &Composition) -> Option<&MPoly> {
        self.coeffs.get(gamma)
    }

    /// Expands back to a polynomial in `x_1..x_n`.
    pub fn to_polynomial(&self, n: usize) -> Result<MPoly> {
        let mut out = MPoly::zero(n);
        for (gamma, c) in &self.coeffs {
            let c = c.with_nvars(n)?;
            for pos in combinations(n, gamma.len()) {
                out += &c.shift(&placement(n, &pos, gamma.parts()));
            }
        }
        Ok(out)
    }
}

/// Increasing `k`-subsets of `0..n`, in lex order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Full exponent vector with `parts` at `positions` and zero `q`, `t`.
fn placement(n: usize, positions: &[usize], parts: &[usize]) -> Vec<u32> {
    let mut e = vec![0; n + 2];
    for (&i, &p) in positions.iter().zip(parts) {
        e[i] = p as u32;
    }
    e
}

/// Expands `p` in monomial quasisymmetric functions.
///
/// Every placement `x_{i_1}^{γ_1} ⋯ x_{i_k}^{γ_k}`, `i_1 < ⋯ < i_k ≤ n`, of
/// each packed exponent vector must occur with the same coefficient.
/// Otherwise the error carries two x-exponent vectors that disagree.
pub fn qsym_expand(p: &MPoly) -> Result<QSymExpansion> {
    let n = p.nvars();
    let mut groups: BTreeMap<Vec<usize>, BTreeMap<Vec<usize>, MPoly>> = BTreeMap::new();
    for (e, c) in p.terms() {
        let positions: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
        let packed: Vec<usize> = positions.iter().map(|&i| e[i] as usize).collect();
        let term = MPoly::monomial(0, &[], e[n], e[n + 1], c.clone());
        *groups
            .entry(packed)
            .or_default()
            .entry(positions)
            .or_insert_with(|| MPoly::zero(0)) += &term;
    }
    let mut coeffs = BTreeMap::new();
    for (packed, by_pos) in groups {
        let (first_pos, reference) = by_pos.iter().next().expect("nonempty group");
        for pos in combinations(n, packed.len()) {
            if by_pos.get(&pos) != Some(reference) {
                let strip = |v: Vec<u32>| v[..n].to_vec();
                return Err(Error::NotQuasisymmetric {
                    left: strip(placement(n, first_pos, &packed)),
                    right: strip(placement(n, &pos, &packed)),
                });
            }
        }
        coeffs.insert(Composition::new(packed), reference.clone());
    }
    let mut sizes = coeffs.keys().map(|g| g.size() as u32);
    let degree = sizes.next().filter(|&d| sizes.all(|s| s == d));
    Ok(QSymExpansion { degree, coeffs })
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    degree: Option<u32>,
    coeffs: BTreeMap<String, MPoly>,
}

fn key(gamma: &Composition) -> String {
    gamma
        .parts()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl Serialize for QSymExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionJson {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(g, c)| (key(g), c.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSymExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ExpansionJson::deserialize(d)?;
        let mut coeffs = BTreeMap::new();
        for (k, c) in j.coeffs {
            let gamma: Composition = k.parse().map_err(serde::de::Error::custom)?;
            if gamma.parts().contains(&0) {
                return Err(serde::de::Error::custom("keys must be strong compositions"));
            }
            if !c.is_x_free() {
                return Err(serde::de::Error::custom("coefficients must be x-free"));
            }
            coeffs.insert(gamma, c.with_nvars(0).map_err(serde::de::Error::custom)?);
        }
        Ok(QSymExpansion {
            degree: j.degree,
            coeffs,
        })
    }
}
