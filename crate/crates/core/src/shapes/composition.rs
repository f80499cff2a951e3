use std::str::FromStr;

use super::{parse_list, Cell, Permutation};
use crate::error::{Error, Result};

/// A weak composition `α = (α_1, …, α_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

/// The sorting data attached to a weak composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionStats {
    pub inc: Composition,
    pub dec: Composition,
    pub beta: Permutation,
    pub aplus: Composition,
    pub ell: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|α|`, the number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Height of column `i` (1-based); 0 outside the composition.
    pub fn height(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn max_height(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `α⁺`: the composition with zeros removed.
    pub fn plus(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// `ℓ(α)`, the number of nonzero parts.
    pub fn ell(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    pub fn inc(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable();
        Composition(v)
    }

    pub fn dec(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Composition(v)
    }

    /// `β(α)`: the longest permutation with `(α_{β(1)}, …, α_{β(n)}) = inc(α)`.
    ///
    /// Positions are listed by increasing value, and equal values by
    /// decreasing position, which reverses every run of equal parts.
    pub fn beta(&self) -> Permutation {
        let mut idx: Vec<usize> = (1..=self.len()).collect();
        idx.sort_by(|&a, &b| self.0[a - 1].cmp(&self.0[b - 1]).then(b.cmp(&a)));
        Permutation::new(idx).expect("sorted indices form a permutation")
    }

    pub fn stats(&self) -> CompositionStats {
        CompositionStats {
            inc: self.inc(),
            dec: self.dec(),
            beta: self.beta(),
            aplus: self.plus(),
            ell: self.ell(),
        }
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// `s_i α`, exchanging parts `i` and `i+1` (1-based).
    pub fn swap(&self, i: usize) -> Composition {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Composition(v)
    }

    /// Whether `c` is a cell of `dg(α)` (basement excluded).
    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.row <= self.height(c.col)
    }

    /// All cells of `dg(α)`, column by column, bottom to top.
    pub fn cells(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &h)| (1..=h).map(move |r| Cell::new(i + 1, r)))
            .collect()
    }

    fn check(&self, c: Cell) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::CellOutsideDiagram { col: c.col, row: c.row })
        }
    }

    /// Number of cells above `c` in its column.
    pub fn leg(&self, c: Cell) -> Result<usize> {
        self.check(c)?;
        Ok(self.height(c.col) - c.row)
    }

    /// Cells to the right in row `r` in columns of height at most `α_i`, plus
    /// cells to the left in row `r−1` in columns of height less than `α_i`.
    /// Basement cells are never counted.
    pub fn arm(&self, c: Cell) -> Result<usize> {
        self.check(c)?;
        let (i, r) = (c.col, c.row);
        let h = self.height(i);
        let right = (i + 1..=self.len())
            .filter(|&j| (r..=h).contains(&self.height(j)))
            .count();
        let left = if r >= 2 {
            (1..i)
                .filter(|&j| {
                    let hj = self.height(j);
                    hj >= r - 1 && hj < h
                })
                .count()
        } else {
            0
        };
        Ok(right + left)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).map(Composition)
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All weak compositions of `size` with exactly `len` parts, in lex order.
pub fn weak_compositions(size: usize, len: usize) -> Vec<Composition> {
    fn rec(rem: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if left == 0 {
            if rem == 0 {
                out.push(Composition(cur.clone()));
            }
            return;
        }
        let lo = if left == 1 { rem } else { 0 };
        for p in lo..=rem {
            cur.push(p);
            rec(rem - p, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, len, &mut Vec::new(), &mut out);
    out
}

/// All strong compositions of `size` (no zero parts), in lex order.
pub fn strong_compositions(size: usize) -> Vec<Composition> {
    fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            rec(rem - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, &mut Vec::new(), &mut out);
    out
}

/// All weak compositions `α` of length `n` with `α⁺ = γ`.
pub fn weak_with_plus(gamma: &Composition, n: usize) -> Vec<Composition> {
    fn rec(g: &[usize], slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 0 {
            if g.is_empty() {
                out.push(Composition(cur.clone()));
            }
            return;
        }
        if slots > g.len() {
            cur.push(0);
            rec(g, slots - 1, cur, out);
            cur.pop();
        }
        if let Some((&first, rest)) = g.split_first() {
            cur.push(first);
            rec(rest, slots - 1, cur, out);
            cur.pop();
        }
    }
    let g = gamma.plus();
    let mut out = Vec::new();
    if g.len() <= n {
        rec(g.parts(), n, &mut Vec::new(), &mut out);
    }
    out
}
