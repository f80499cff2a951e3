use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use crate::shapes::next_permutation;

use super::filling::{Filling, Rectangle};
use super::flip::flip;
use super::order::{sort_block, SortedTableau};
use super::pds::{pds, sym_tilde};

/// Blocks of row `r`: maximal runs of columns within a rectangle whose
/// entries agree in every row below `r`. Columns are 1-based.
pub fn block_decomposition(f: &Filling, r: usize) -> Vec<RangeInclusive<usize>> {
    f.rectangles()
        .iter()
        .filter(|rect| rect.height >= r)
        .flat_map(|rect| blocks_in(f, rect, r))
        .collect()
}

fn blocks_in(f: &Filling, rect: &Rectangle, r: usize) -> Vec<RangeInclusive<usize>> {
    let mut out = Vec::new();
    let mut start = rect.start;
    for i in rect.columns() {
        let last = i == *rect.columns().end();
        if last || f.column(i)[..r - 1] != f.column(i + 1)[..r - 1] {
            out.push(start..=i);
            start = i + 1;
        }
    }
    out
}

/// Edge of a family tree: `to = T_col^{(row)}(from)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FamilyEdge {
    pub from: usize,
    pub to: usize,
    pub col: usize,
    pub row: usize,
}

/// The family `𝓕(σ)` with the operator applications that generate it.
#[derive(Debug, Clone)]
pub struct FamilyTree {
    pub root: Filling,
    /// Members in canonical order.
    pub members: Vec<Filling>,
    pub edges: Vec<FamilyEdge>,
    produced: usize,
}

impl FamilyTree {
    /// Number of generated fillings, counted with repetition.
    pub fn produced(&self) -> usize {
        self.produced
    }

    /// DOT graph with edges labeled `T_i^(r)`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph family {\n  node [shape=box, fontname=monospace];\n");
        for (k, m) in self.members.iter().enumerate() {
            let label = m.to_string().replace('/', "\\n");
            let style = if *m == self.root { ", style=bold" } else { "" };
            s.push_str(&format!("  n{k} [label=\"{label}\"{style}];\n"));
        }
        for e in &self.edges {
            s.push_str(&format!(
                "  n{} -> n{} [label=\"T_{}^({})\"];\n",
                e.from, e.to, e.col, e.row
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// Row `r` of the columns of a rectangle.
fn row_segment(f: &Filling, rect: &Rectangle, r: usize) -> Vec<u32> {
    rect.columns().map(|i| f.column(i)[r - 1]).collect()
}

/// All rearrangements of `row` that permute entries only within blocks.
fn block_rearrangements(row: &[u32], blocks: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut out = vec![row.to_vec()];
    for &(lo, hi) in blocks {
        let mut letters = row[lo..=hi].to_vec();
        letters.sort_unstable();
        let mut arrangements = vec![letters.clone()];
        while next_permutation(&mut letters) {
            arrangements.push(letters.clone());
        }
        out = out
            .into_iter()
            .flat_map(|w| {
                arrangements.iter().map(move |a| {
                    let mut w = w.clone();
                    w[lo..=hi].copy_from_slice(a);
                    w
                })
            })
            .collect();
    }
    out
}

fn local_blocks(f: &Filling, rect: &Rectangle, r: usize) -> Vec<(usize, usize)> {
    blocks_in(f, rect, r)
        .into_iter()
        .map(|b| (b.start() - rect.start, b.end() - rect.start))
        .collect()
}

/// Applies `T_{i_k} ⋯ T_{i_1}` (rightmost letter first) in row `r`, shifting
/// letters by `offset` columns. Calls `step` after each application.
fn apply_word(
    f: &Filling,
    word: &[usize],
    offset: usize,
    r: usize,
    mut step: impl FnMut(&Filling, &Filling, usize),
) -> Filling {
    let mut cur = f.clone();
    for &i in word.iter().rev() {
        let (next, row) = flip(&cur, i + offset).expect("PDS letters act inside blocks");
        assert_eq!(row, r, "operator acted below the current row");
        step(&cur, &next, i + offset);
        cur = next;
    }
    cur
}

/// The family tree of a sorted tableau.
pub fn family_tree(s: &SortedTableau) -> FamilyTree {
    let root = s.filling().clone();
    let mut current = vec![root.clone()];
    let mut raw_edges: Vec<(Filling, Filling, usize, usize)> = Vec::new();
    for rect in root.rectangles() {
        for r in (1..=rect.height).rev() {
            let mut next = Vec::new();
            for tau in &current {
                let base = row_segment(tau, &rect, r);
                let blocks = local_blocks(tau, &rect, r);
                for w in block_rearrangements(&base, &blocks) {
                    let wt = sym_tilde(&base, &w).expect("rearrangement");
                    let word = pds(&wt);
                    let out = apply_word(tau, &word, rect.start - 1, r, |a, b, i| {
                        raw_edges.push((a.clone(), b.clone(), i, r));
                    });
                    debug_assert_eq!(row_segment(&out, &rect, r), w);
                    next.push(out);
                }
            }
            current = next;
        }
    }
    let produced = current.len();
    let mut members = current;
    members.sort();
    members.dedup();
    let index: BTreeMap<&Filling, usize> = members.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut edges: Vec<FamilyEdge> = raw_edges
        .iter()
        .filter_map(|(a, b, col, row)| {
            Some(FamilyEdge {
                from: *index.get(a)?,
                to: *index.get(b)?,
                col: *col,
                row: *row,
            })
        })
        .collect();
    edges.sort();
    edges.dedup();
    FamilyTree {
        root,
        members,
        edges,
        produced,
    }
}

/// The family `𝓕(σ)` in canonical order.
pub fn family(s: &SortedTableau) -> Vec<Filling> {
    family_tree(s).members
}

/// The unique sorted tableau whose family contains `f`.
///
/// Working bottom-up in each rectangle, row `r` is put in sorted order by
/// undoing the PDS operator word that would produce it.
pub fn sort_filling(f: &Filling) -> SortedTableau {
    let mut cur = f.clone();
    for rect in f.rectangles() {
        for r in 1..=rect.height {
            let row = row_segment(&cur, &rect, r);
            let mut target = row.clone();
            for (lo, hi) in local_blocks(&cur, &rect, r) {
                let support = (r >= 2).then(|| cur.column(rect.start + lo)[r - 2]);
                let sorted = sort_block(&row[lo..=hi], support);
                target[lo..=hi].copy_from_slice(&sorted);
            }
            let wt = sym_tilde(&target, &row).expect("rearrangement");
            let word = pds(&wt);
            for &i in &word {
                let (next, row_used) = flip(&cur, i + rect.start - 1).expect("inverse word is defined");
                assert_eq!(row_used, r);
                cur = next;
            }
            assert_eq!(row_segment(&cur, &rect, r), target);
        }
    }
    SortedTableau::new_unchecked(cur)
}
