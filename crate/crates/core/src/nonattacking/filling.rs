use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::MPoly;
use crate::error::{Error, Result};
use crate::shapes::{Basement, Cell, Composition, Diagram, Permutation};

/// Two cells attack if they share a row, or sit in adjacent rows of
/// different columns with the higher cell strictly to the right.
pub fn attacks(c1: Cell, c2: Cell) -> bool {
    if c1 == c2 {
        return false;
    }
    if c1.row == c2.row {
        return true;
    }
    let (low, high) = if c1.row < c2.row { (c1, c2) } else { (c2, c1) };
    high.row == low.row + 1 && high.col > low.col
}

/// Coinversion test for type A and type B triples, with `a` the third cell,
/// `b` the upper and `c` the lower cell of the column pair.
pub fn is_coinversion_triple(a: u32, b: u32, c: u32) -> bool {
    (a <= c && c < b) || (c < b && b <= a) || (b <= a && a <= c)
}

/// Configuration of a triple in a composition diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TripleType {
    /// `(v,r), (u,r), (u,r−1)` with `v > u`.
    A,
    /// `(v,r−1), (u,r), (u,r−1)` with `v < u`.
    B,
    /// Row-1 pair `(u,1), (v,1)`, `u < v`, with no basement below.
    Degenerate,
}

/// A triple with its entries; `third` and `lower` are absent for degenerate pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaTriple {
    pub kind: TripleType,
    pub upper: Cell,
    pub lower: Option<Cell>,
    pub third: Cell,
    /// `(a, b, c)`: third, upper, lower. For degenerate pairs `a` is the
    /// right entry, `b` the left entry and `c` is unused.
    pub entries: (u32, u32, u32),
    pub coinversion: bool,
}

/// A filling of `dg(α)` with an optional permutation basement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AugmentedFilling {
    shape: Composition,
    basement: Option<Permutation>,
    cols: Vec<Vec<u32>>,
}

impl AugmentedFilling {
    /// Builds a filling from columns listed bottom to top.
    pub fn new(shape: Composition, basement: Option<Permutation>, cols: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(b) = &basement {
            Diagram::new(shape.clone(), Basement::Perm(b.clone()))?;
        }
        if cols.len() != shape.len() || cols.iter().zip(shape.parts()).any(|(c, &h)| c.len() != h) {
            return Err(Error::InvalidFilling("columns do not match the shape".into()));
        }
        if cols.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidFilling("entries must be positive".into()));
        }
        Ok(AugmentedFilling { shape, basement, cols })
    }

    /// Builds a filling from rows listed top row first, with `None` for
    /// positions outside the diagram. Every row has one slot per column.
    pub fn from_rows(shape: Composition, basement: Option<Permutation>, rows: &[Vec<Option<u32>>]) -> Result<Self> {
        let n = shape.len();
        let mut cols = vec![Vec::new(); n];
        for row in rows.iter().rev() {
            if row.len() != n {
                return Err(Error::InvalidFilling("row length differs from shape length".into()));
            }
            for (i, v) in row.iter().enumerate() {
                if let Some(v) = v {
                    cols[i].push(*v);
                }
            }
        }
        Self::new(shape, basement, cols)
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn basement(&self) -> Option<&Permutation> {
        self.basement.as_ref()
    }

    /// Columns, bottom to top.
    pub fn columns(&self) -> &[Vec<u32>] {
        &self.cols
    }

    /// Entry of a diagram cell or of a basement cell.
    pub fn entry(&self, c: Cell) -> Option<u32> {
        if c.col == 0 || c.col > self.shape.len() {
            return None;
        }
        if c.row == 0 {
            return self.basement.as_ref().map(|b| b.get(c.col) as u32);
        }
        self.cols[c.col - 1].get(c.row - 1).copied()
    }

    /// Rows top first, `None` outside the diagram.
    pub fn rows(&self) -> Vec<Vec<Option<u32>>> {
        (1..=self.shape.max_height())
            .rev()
            .map(|r| self.cols.iter().map(|c| c.get(r - 1).copied()).collect())
            .collect()
    }

    fn all_cells(&self) -> Vec<(Cell, u32)> {
        let mut out: Vec<(Cell, u32)> = Vec::new();
        if let Some(b) = &self.basement {
            out.extend(
                b.one_line()
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (Cell::new(i + 1, 0), v as u32)),
            );
        }
        for (i, c) in self.cols.iter().enumerate() {
            out.extend(c.iter().enumerate().map(|(k, &v)| (Cell::new(i + 1, k + 1), v)));
        }
        out
    }

    /// No two attacking cells, basement included, share an entry.
    pub fn is_nonattacking(&self) -> bool {
        let cells = self.all_cells();
        cells
            .iter()
            .enumerate()
            .all(|(k, &(c1, v1))| cells[k + 1..].iter().all(|&(c2, v2)| v1 != v2 || !attacks(c1, c2)))
    }

    /// Row-1 entries strictly decrease along runs of equal-height columns.
    ///
    /// Requires a weakly increasing shape.
    pub fn is_ordered(&self) -> Result<bool> {
        if !self.shape.is_weakly_increasing() {
            return Err(Error::NotWeaklyIncreasing);
        }
        Ok(self.row_one_ordered())
    }

    pub(crate) fn row_one_ordered(&self) -> bool {
        self.cols
            .windows(2)
            .all(|w| w[0].is_empty() || w[0].len() != w[1].len() || w[0][0] > w[1][0])
    }

    /// All type A, type B and degenerate triples.
    ///
    /// Basement cells can be the lower cell of a pair or the third cell of a
    /// type B triple; the upper cells always lie in the diagram. Degenerate
    /// pairs occur only when there is no basement.
    pub fn triples(&self) -> Vec<NaTriple> {
        let mut out = Vec::new();
        let n = self.shape.len();
        let h = |i: usize| self.shape.height(i);
        for u in 1..=n {
            for r in 1..=h(u) {
                let upper = Cell::new(u, r);
                let b = self.cols[u - 1][r - 1];
                let Some(c) = self.entry(Cell::new(u, r - 1)) else {
                    for v in u + 1..=n {
                        if h(v) >= 1 && h(v) <= h(u) {
                            let a = self.cols[v - 1][0];
                            out.push(NaTriple {
                                kind: TripleType::Degenerate,
                                upper,
                                lower: None,
                                third: Cell::new(v, 1),
                                entries: (a, b, 0),
                                coinversion: a >= b,
                            });
                        }
                    }
                    continue;
                };
                let lower = Some(Cell::new(u, r - 1));
                for v in u + 1..=n {
                    if h(v) >= r && h(v) <= h(u) {
                        let a = self.cols[v - 1][r - 1];
                        out.push(NaTriple {
                            kind: TripleType::A,
                            upper,
                            lower,
                            third: Cell::new(v, r),
                            entries: (a, b, c),
                            coinversion: is_coinversion_triple(a, b, c),
                        });
                    }
                }
                for v in 1..u {
                    if h(v) < h(u) {
                        if let Some(a) = self.entry(Cell::new(v, r - 1)) {
                            out.push(NaTriple {
                                kind: TripleType::B,
                                upper,
                                lower,
                                third: Cell::new(v, r - 1),
                                entries: (a, b, c),
                                coinversion: is_coinversion_triple(a, b, c),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn coinv(&self) -> usize {
        self.triples().iter().filter(|t| t.coinversion).count()
    }

    /// `Σ (leg(s) + 1)` over cells `s` above row 1 with `σ(s) > σ(South(s))`.
    pub fn maj_na(&self) -> usize {
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

    /// Row-1 cells whose entry exceeds the basement entry below.
    pub fn basement_descents(&self) -> usize {
        let Some(b) = &self.basement else { return 0 };
        self.cols
            .iter()
            .enumerate()
            .filter(|(i, c)| c.first().is_some_and(|&v| v as usize > b.get(i + 1)))
            .count()
    }

    /// Monomial `x^σ` over diagram cells (basement excluded).
    pub fn x_weight(&self, nvars: usize) -> Result<MPoly> {
        Ok(MPoly::from_exponents(nvars, self.x_exponents(nvars)?, BigInt::one()))
    }

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
}

#[derive(Serialize, Deserialize)]
struct AugmentedJson {
    shape: Vec<usize>,
    basement: Option<Vec<usize>>,
    rows: Vec<Vec<Option<u32>>>,
}

impl Serialize for AugmentedFilling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AugmentedJson {
            shape: self.shape.parts().to_vec(),
            basement: self.basement.as_ref().map(|b| b.one_line().to_vec()),
            rows: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AugmentedFilling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = AugmentedJson::deserialize(d)?;
        let basement = j
            .basement
            .map(Permutation::new)
            .transpose()
            .map_err(serde::de::Error::custom)?;
        AugmentedFilling::from_rows(Composition::new(j.shape), basement, &j.rows).map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Display for AugmentedFilling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fmt_row = |r: &[Option<u32>]| {
            r.iter()
                .map(|v| v.map_or(".".to_string(), |v| v.to_string()))
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut rows: Vec<String> = self.rows().iter().map(|r| fmt_row(r)).collect();
        if let Some(b) = &self.basement {
            let b: Vec<String> = b.one_line().iter().map(|v| v.to_string()).collect();
            rows.push(format!("[{}]", b.join(",")));
        }
        write!(f, "{}", rows.join("/"))
    }
}
