use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::algebra::{t_multinomial, MPoly};
use crate::error::{Error, Result};
use crate::shapes::Partition;

use super::filling::{is_inversion_triple, rectangles, Filling};

/// The column order `⊲` on equal-height columns listed bottom to top.
///
/// `Less` means `A ⊲ B`: either `a_1 < b_1`, or the columns agree below the
/// first differing row `r ≥ 2` and `b_r, a_r, a_{r−1}` is not an inversion
/// triple.
pub fn compare_columns(a: &[u32], b: &[u32]) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::HeightMismatch(a.len(), b.len()));
    }
    let Some(r) = a.iter().zip(b).position(|(x, y)| x != y) else {
        return Ok(Ordering::Equal);
    };
    let less = if r == 0 {
        a[0] < b[0]
    } else {
        !is_inversion_triple(b[r], a[r], a[r - 1])
    };
    Ok(if less { Ordering::Less } else { Ordering::Greater })
}

/// Sorted arrangement of a block sitting on support value `z`.
///
/// Entries larger than `z` come first, then entries at most `z`, each part
/// weakly increasing. Without a support (row 1) the block is simply sorted.
pub fn sort_block(entries: &[u32], support: Option<u32>) -> Vec<u32> {
    let mut v = entries.to_vec();
    match support {
        None => v.sort_unstable(),
        Some(z) => v.sort_unstable_by_key(|&x| (x <= z, x)),
    }
    v
}

/// True iff every same-height column run weakly increases under `⊲`.
pub fn is_sorted(f: &Filling) -> bool {
    f.rectangles().iter().all(|rect| {
        rect.columns()
            .collect::<Vec<_>>()
            .windows(2)
            .all(|w| compare_columns(f.column(w[0]), f.column(w[1])) != Ok(Ordering::Greater))
    })
}

/// A filling known to satisfy [`is_sorted`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SortedTableau(Filling);

impl SortedTableau {
    pub fn new(f: Filling) -> Result<Self> {
        if is_sorted(&f) {
            Ok(SortedTableau(f))
        } else {
            Err(Error::InvalidFilling(format!("{f} is not sorted")))
        }
    }

    pub(crate) fn new_unchecked(f: Filling) -> Self {
        debug_assert!(is_sorted(&f));
        SortedTableau(f)
    }

    pub fn filling(&self) -> &Filling {
        &self.0
    }

    pub fn into_filling(self) -> Filling {
        self.0
    }
}

impl std::ops::Deref for SortedTableau {
    type Target = Filling;
    fn deref(&self) -> &Filling {
        &self.0
    }
}

/// All columns of height `h` over `{1..n}`, in increasing `⊲` order.
fn sorted_columns(h: usize, n: usize) -> Vec<Vec<u32>> {
    let mut cols: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..h {
        cols = cols
            .into_iter()
            .flat_map(|c| {
                (1..=n as u32).map(move |v| {
                    let mut c = c.clone();
                    c.push(v);
                    c
                })
            })
            .collect();
    }
    cols.sort_by(|a, b| compare_columns(a, b).expect("equal heights"));
    cols
}

/// Weakly increasing index sequences of length `k` below `m`.
fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// All sorted tableaux of `dg(λ)` over `{1..n}`.
///
/// Each rectangle is filled with a `⊲`-weakly-increasing sequence of
/// columns; rectangles combine independently.
pub fn enumerate_sorted(shape: &Partition, n: usize) -> Vec<SortedTableau> {
    let mut partial: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
    for rect in rectangles(shape) {
        let cols = sorted_columns(rect.height, n);
        let choices = multisets(cols.len(), rect.width);
        let (cols, choices) = (&cols, &choices);
        partial = partial
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |idx| {
                    let mut p = prefix.clone();
                    p.extend(idx.iter().map(|&i| cols[i].clone()));
                    p
                })
            })
            .collect();
    }
    partial
        .into_iter()
        .map(|cols| SortedTableau::new_unchecked(Filling::new(shape.clone(), cols).expect("valid shape")))
        .collect()
}

/// `perm_t(σ)`: product over rectangles of the t-multinomial of the
/// multiplicities of identical columns. No x-variables.
pub fn perm_t(f: &Filling) -> MPoly {
    f.rectangles().iter().fold(MPoly::one(0), |acc, rect| {
        let mut counts: BTreeMap<&[u32], usize> = BTreeMap::new();
        for i in rect.columns() {
            *counts.entry(f.column(i)).or_default() += 1;
        }
        let parts: Vec<usize> = counts.into_values().collect();
        acc * t_multinomial(rect.width, &parts).expect("multiplicities sum to width")
    })
}
