use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::MPoly;
use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition};

/// Whether the entries `a = σ(v,r)`, `b = σ(u,r)`, `c = σ(u,r−1)` with
/// `u < v` form a counterclockwise (inversion) triple.
///
/// Ties are broken by reading order, which puts `b` before `a` before `c`.
pub fn is_inversion_triple(a: u32, b: u32, c: u32) -> bool {
    (a < b && b <= c) || (c < a && a < b) || (b <= c && c < a)
}

/// A filling of `dg(λ)` by positive integers, with an `∞` basement.
///
/// Columns are stored bottom to top. Fillings order canonically by their
/// rows read top row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: Partition,
    cols: Vec<Vec<u32>>,
}

/// Maximal run of equal-height columns: `start` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rectangle {
    pub start: usize,
    pub width: usize,
    pub height: usize,
}

impl Rectangle {
    /// Columns covered, 1-based and inclusive.
    pub fn columns(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.start + self.width - 1
    }
}

/// Maximal runs of equal parts of `λ`.
pub fn rectangles(shape: &Partition) -> Vec<Rectangle> {
    let mut out: Vec<Rectangle> = Vec::new();
    for (i, &h) in shape.parts().iter().enumerate() {
        match out.last_mut() {
            Some(rect) if rect.height == h => rect.width += 1,
            _ => out.push(Rectangle {
                start: i + 1,
                width: 1,
                height: h,
            }),
        }
    }
    out
}

impl Filling {
    /// Builds a filling from its columns, each listed bottom to top.
    pub fn new(shape: Partition, cols: Vec<Vec<u32>>) -> Result<Self> {
        if cols.len() != shape.len() {
            return Err(Error::InvalidFilling(format!(
                "{} columns for a shape with {} parts",
                cols.len(),
                shape.len()
            )));
        }
        for (i, (c, &h)) in cols.iter().zip(shape.parts()).enumerate() {
            if c.len() != h {
                return Err(Error::InvalidFilling(format!(
                    "column {} has {} entries, expected {h}",
                    i + 1,
                    c.len()
                )));
            }
            if c.contains(&0) {
                return Err(Error::InvalidFilling("entries must be positive".into()));
            }
        }
        Ok(Filling { shape, cols })
    }

    /// Builds a filling from left-justified rows listed top row first.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let bottom_up: Vec<&Vec<u32>> = rows.iter().rev().collect();
        if bottom_up.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidFilling("row lengths must weakly decrease upward".into()));
        }
        let width = bottom_up.first().map_or(0, |r| r.len());
        let cols: Vec<Vec<u32>> = (0..width)
            .map(|i| bottom_up.iter().take_while(|r| r.len() > i).map(|r| r[i]).collect())
            .collect();
        let shape = Partition::new(cols.iter().map(Vec::len).collect())?;
        Filling::new(shape, cols)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Columns, each bottom to top.
    pub fn columns(&self) -> &[Vec<u32>] {
        &self.cols
    }

    /// Column `i` (1-based), bottom to top.
    pub fn column(&self, i: usize) -> &[u32] {
        &self.cols[i - 1]
    }

    pub fn height(&self, i: usize) -> usize {
        self.cols.get(i.wrapping_sub(1)).map_or(0, Vec::len)
    }

    /// Entry of a diagram cell; `None` outside the diagram or in the basement.
    pub fn entry(&self, c: Cell) -> Option<u32> {
        if c.row == 0 {
            return None;
        }
        self.cols.get(c.col.checked_sub(1)?)?.get(c.row - 1).copied()
    }

    /// Left-justified rows, top row first.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let max = self.cols.first().map_or(0, Vec::len);
        (1..=max)
            .rev()
            .map(|r| {
                self.cols
                    .iter()
                    .take_while(|c| c.len() >= r)
                    .map(|c| c[r - 1])
                    .collect()
            })
            .collect()
    }

    pub fn max_entry(&self) -> u32 {
        self.cols.iter().flatten().copied().max().unwrap_or(0)
    }

    pub(crate) fn swap_cells(&mut self, i: usize, r: usize) {
        let a = self.cols[i - 1][r - 1];
        let b = self.cols[i][r - 1];
        self.cols[i - 1][r - 1] = b;
        self.cols[i][r - 1] = a;
    }

    pub fn rectangles(&self) -> Vec<Rectangle> {
        rectangles(&self.shape)
    }

    /// Monomial `x^σ = ∏ x_{σ(s)}` in `nvars` variables.
    pub fn x_weight(&self, nvars: usize) -> Result<MPoly> {
        Ok(MPoly::from_exponents(nvars, self.x_exponents(nvars)?, BigInt::one()))
    }

    /// Exponent vector of `x^σ` with zero `q`, `t` slots.
    pub(crate) fn x_exponents(&self, nvars: usize) -> Result<Vec<u32>> {
        let mut e = vec![0u32; nvars + 2];
        for &v in self.cols.iter().flatten() {
            let v = v as usize;
            if v > nvars {
                return Err(Error::TooFewVariables { needed: v, nvars });
            }
            e[v - 1] += 1;
        }
        Ok(e)
    }

    /// Number of inversion triples, degenerate row-1 pairs included.
    pub fn inv(&self) -> usize {
        let mut count = 0;
        let max = self.cols.first().map_or(0, Vec::len);
        for r in 1..=max {
            let k = self.cols.iter().take_while(|c| c.len() >= r).count();
            for u in 0..k {
                let b = self.cols[u][r - 1];
                for v in u + 1..k {
                    let a = self.cols[v][r - 1];
                    let inverted = if r == 1 {
                        b > a
                    } else {
                        is_inversion_triple(a, b, self.cols[u][r - 2])
                    };
                    if inverted {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// `Σ (leg(s) + 1)` over descents `σ(s) > σ(South(s))`, rows 2 and up.
    pub fn maj(&self) -> usize {
        self.cols
            .iter()
            .map(|c| {
                (1..c.len())
                    .filter(|&k| c[k] > c[k - 1])
                    .map(|k| c.len() - k)
                    .sum::<usize>()
            })
            .sum()
    }

    /// Every triple with its orientation.
    pub fn triples(&self) -> Vec<Triple> {
        let mut out = Vec::new();
        let max = self.cols.first().map_or(0, Vec::len);
        for r in 1..=max {
            let k = self.cols.iter().take_while(|c| c.len() >= r).count();
            for u in 1..=k {
                for v in u + 1..=k {
                    let a = self.cols[v - 1][r - 1];
                    let b = self.cols[u - 1][r - 1];
                    let (kind, inversion) = if r == 1 {
                        (TripleKind::Degenerate, b > a)
                    } else {
                        let c = self.cols[u - 1][r - 2];
                        (TripleKind::Regular, is_inversion_triple(a, b, c))
                    };
                    out.push(Triple {
                        right: Cell::new(v, r),
                        left: Cell::new(u, r),
                        kind,
                        inversion,
                    });
                }
            }
        }
        out
    }
}

/// Shape of a triple of a partition filling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleKind {
    /// Cells `(v,r), (u,r), (u,r−1)` with `r ≥ 2`.
    Regular,
    /// A row-1 pair; the third cell is the `∞` basement.
    Degenerate,
}

/// A triple `(v,r), (u,r), (u,r−1)` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triple {
    pub right: Cell,
    pub left: Cell,
    pub kind: TripleKind,
    /// Counterclockwise orientation.
    pub inversion: bool,
}

impl Ord for Filling {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.rows().cmp(&other.rows()))
    }
}

impl PartialOrd for Filling {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Serialize, Deserialize)]
struct FillingJson {
    shape: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FillingJson {
            shape: self.shape.parts().to_vec(),
            rows: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FillingJson::deserialize(d)?;
        let f = Filling::from_rows(&j.rows).map_err(serde::de::Error::custom)?;
        if f.shape.parts() != j.shape.as_slice() {
            return Err(serde::de::Error::custom("rows do not match shape"));
        }
        Ok(f)
    }
}

impl std::fmt::Display for Filling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl std::str::FromStr for Filling {
    type Err = Error;

    /// Parses rows separated by `/`, top row first, entries separated by commas.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(format!("bad entry {v:?}: {e}")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Filling::from_rows(&rows)
    }
}

/// Total number of fillings with entries in `{1..n}`, if it fits in `u64`.
pub fn filling_count(shape: &Partition, n: usize) -> Option<u64> {
    (n as u64).checked_pow(shape.size() as u32)
}

/// The `idx`-th filling in the canonical enumeration order.
///
/// Cells are read column by column, bottom to top; the last cell varies
/// fastest.
pub fn filling_from_index(shape: &Partition, n: usize, mut idx: u64) -> Filling {
    let mut cols: Vec<Vec<u32>> = shape.parts().iter().map(|&h| vec![0; h]).collect();
    for c in cols.iter_mut().rev() {
        for v in c.iter_mut().rev() {
            *v = (idx % n as u64) as u32 + 1;
            idx /= n as u64;
        }
    }
    Filling {
        shape: shape.clone(),
        cols,
    }
}

/// All `n^{|λ|}` fillings of `dg(λ)` with entries in `{1..n}`, each once.
pub fn enumerate_fillings(shape: &Partition, n: usize) -> impl Iterator<Item = Filling> + '_ {
    let total = filling_count(shape, n).expect("filling count overflows u64");
    (0..total).map(move |i| filling_from_index(shape, n, i))
}
