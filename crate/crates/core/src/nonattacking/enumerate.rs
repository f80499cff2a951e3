use crate::shapes::{Composition, Permutation};

use super::filling::AugmentedFilling;

struct Search<'a> {
    heights: &'a [usize],
    basement: Option<&'a [usize]>,
    n: u32,
    ordered_only: bool,
    cells: Vec<(usize, usize)>,
    cols: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn allowed(&self, i: usize, r: usize, v: u32) -> bool {
        // Same row, to the left.
        if (0..i).any(|j| self.heights[j] >= r && self.cols[j][r - 1] == v) {
            return false;
        }
        // Row below, strictly to the left.
        let below_left = if r == 1 {
            self.basement.is_some_and(|b| b[..i].iter().any(|&x| x as u32 == v))
        } else {
            (0..i).any(|j| self.heights[j] >= r - 1 && self.cols[j][r - 2] == v)
        };
        if below_left {
            return false;
        }
        if self.ordered_only && r == 1 && i > 0 && self.heights[i - 1] == self.heights[i] {
            return self.cols[i - 1][0] > v;
        }
        true
    }

    fn run(&mut self, k: usize, out: &mut dyn FnMut(&[Vec<u32>])) {
        let Some(&(i, r)) = self.cells.get(k) else {
            out(&self.cols);
            return;
        };
        for v in 1..=self.n {
            if self.allowed(i, r, v) {
                self.cols[i].push(v);
                self.run(k + 1, out);
                self.cols[i].pop();
            }
        }
    }
}

/// Visits every nonattacking filling of `dg(α)` over `{1..n}` with the given
/// basement, passing its columns bottom to top.
///
/// Cells are filled row by row from the bottom, left to right. With
/// `ordered_only`, row-1 entries must strictly decrease across adjacent
/// columns of equal height.
pub fn for_each_na(
    shape: &Composition,
    basement: Option<&Permutation>,
    n: usize,
    ordered_only: bool,
    mut visit: impl FnMut(&[Vec<u32>]),
) {
    let heights = shape.parts();
    let cells = (1..=shape.max_height())
        .flat_map(|r| {
            heights
                .iter()
                .enumerate()
                .filter(move |(_, &h)| h >= r)
                .map(move |(i, _)| (i, r))
        })
        .collect();
    let mut search = Search {
        heights,
        basement: basement.map(Permutation::one_line),
        n: n as u32,
        ordered_only,
        cells,
        cols: vec![Vec::new(); heights.len()],
    };
    search.run(0, &mut visit);
}

/// All (ordered) nonattacking fillings of `dg(α)` over `{1..n}`.
pub fn enumerate_na(
    shape: &Composition,
    basement: Option<&Permutation>,
    n: usize,
    ordered_only: bool,
) -> Vec<AugmentedFilling> {
    let mut out = Vec::new();
    for_each_na(shape, basement, n, ordered_only, |cols| {
        out.push(
            AugmentedFilling::new(shape.clone(), basement.cloned(), cols.to_vec())
                .expect("enumerated columns fit the shape"),
        );
    });
    out
}
