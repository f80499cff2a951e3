use std::cmp::{Ordering, Reverse};
use std::collections::BTreeSet;

use macpoly::algebra::{t_multinomial, Binding};
use macpoly::shapes::{Cell, Partition, Permutation};
use macpoly::tableaux::*;
use macpoly::{Error, MPoly, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn filling(s: &str) -> Filling {
    s.parse().unwrap()
}

fn partition(s: &str) -> Partition {
    s.parse().unwrap()
}

fn partitions_up_to(max: usize) -> impl Iterator<Item = Partition> {
    (1..=max).flat_map(Partition::all)
}

/// Entry of a cell, with the basement row read as `∞`.
fn value(f: &Filling, c: Cell) -> u64 {
    if c.row == 0 {
        u64::MAX
    } else {
        f.entry(c).unwrap() as u64
    }
}

/// Orders three cells by entry, ties broken by reading order (higher rows
/// first, then left to right), and reports whether the path visiting them in
/// that order turns counterclockwise.
fn counterclockwise(f: &Filling, cells: [Cell; 3]) -> bool {
    let mut sorted = cells;
    sorted.sort_by_key(|&c| (value(f, c), Reverse(c.row), c.col));
    let p: Vec<(i64, i64)> = sorted.iter().map(|c| (c.col as i64, c.row as i64)).collect();
    let (dx1, dy1) = (p[1].0 - p[0].0, p[1].1 - p[0].1);
    let (dx2, dy2) = (p[2].0 - p[0].0, p[2].1 - p[0].1);
    dx1 * dy2 - dy1 * dx2 > 0
}

/// Counts inversions geometrically over all triples `(v,r), (u,r), (u,r−1)`.
fn inv_by_orientation(f: &Filling) -> usize {
    let lam = f.shape().as_composition();
    let mut count = 0;
    for left in lam.cells() {
        for v in left.col + 1..=lam.len() {
            let right = Cell::new(v, left.row);
            if lam.contains(right) && counterclockwise(f, [right, left, Cell::new(left.col, left.row - 1)]) {
                count += 1;
            }
        }
    }
    count
}

/// Major index from descents and column heights, without the library's loop.
fn maj_by_cells(f: &Filling) -> usize {
    let lam = f.shape().as_composition();
    lam.cells()
        .into_iter()
        .filter(|c| c.row >= 2 && f.entry(*c) > f.entry(Cell::new(c.col, c.row - 1)))
        .map(|c| lam.leg(c).unwrap() + 1)
        .sum()
}

fn random_filling(rng: &mut impl Rng) -> Filling {
    let m = rng.gen_range(1..=9);
    let shapes = Partition::all(m);
    let lam = shapes[rng.gen_range(0..shapes.len())].clone();
    let n = rng.gen_range(1..=5u32);
    let cols = lam
        .parts()
        .iter()
        .map(|&h| (0..h).map(|_| rng.gen_range(1..=n)).collect())
        .collect();
    Filling::new(lam, cols).unwrap()
}

fn columns_of_height(h: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..h {
        out = out
            .into_iter()
            .flat_map(|c| {
                (1..=n).map(move |v| {
                    let mut c = c.clone();
                    c.push(v);
                    c
                })
            })
            .collect();
    }
    out
}

#[test]
fn inv_matches_the_orientation_rule() {
    for lam in partitions_up_to(4) {
        for f in enumerate_fillings(&lam, 3) {
            assert_eq!(f.inv(), inv_by_orientation(&f), "{f}");
            assert_eq!(f.triples().iter().filter(|t| t.inversion).count(), f.inv(), "{f}");
            assert_eq!(f.maj(), maj_by_cells(&f), "{f}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2000 {
        let f = random_filling(&mut rng);
        assert_eq!(f.inv(), inv_by_orientation(&f), "{f}");
        assert_eq!(f.maj(), maj_by_cells(&f), "{f}");
    }
}

#[test]
fn inversion_triple_examples() {
    assert!(is_inversion_triple(1, 2, 3));
    assert!(is_inversion_triple(2, 3, 1));
    assert!(is_inversion_triple(3, 1, 2));
    assert!(!is_inversion_triple(3, 2, 1));
    assert!(is_inversion_triple(1, 2, 2));
    assert!(!is_inversion_triple(2, 2, 1));
    assert!(!is_inversion_triple(2, 2, 2));
}

#[test]
fn triple_kinds() {
    let f = filling("1,2/3,1,2");
    let triples = f.triples();
    assert_eq!(triples.len(), 4);
    assert_eq!(triples.iter().filter(|t| t.kind == TripleKind::Degenerate).count(), 3);
}

#[test]
fn column_order_is_total() {
    for h in 1..=3 {
        let cols = columns_of_height(h, 3);
        for a in &cols {
            for b in &cols {
                let ab = compare_columns(a, b).unwrap();
                assert_eq!(ab, compare_columns(b, a).unwrap().reverse(), "{a:?} {b:?}");
                assert_eq!(ab == Ordering::Equal, a == b);
            }
        }
        for a in &cols {
            for b in &cols {
                for c in &cols {
                    let less = |x: &Vec<u32>, y: &Vec<u32>| compare_columns(x, y).unwrap() == Ordering::Less;
                    if less(a, b) && less(b, c) {
                        assert!(less(a, c), "{a:?} {b:?} {c:?}");
                    }
                }
            }
        }
    }
    assert!(matches!(
        compare_columns(&[1], &[1, 2]),
        Err(Error::HeightMismatch(1, 2))
    ));
}

#[test]
fn column_order_examples() {
    assert_eq!(compare_columns(&[1, 5], &[2, 1]).unwrap(), Ordering::Less);
    // Above a shared 2, entries larger than 2 precede entries at most 2.
    assert_eq!(compare_columns(&[2, 3], &[2, 1]).unwrap(), Ordering::Less);
    assert_eq!(compare_columns(&[2, 1], &[2, 2]).unwrap(), Ordering::Less);
    assert_eq!(compare_columns(&[2, 2], &[2, 3]).unwrap(), Ordering::Greater);
}

#[test]
fn sorted_tableaux_are_the_sorted_fillings() {
    for lam in partitions_up_to(4) {
        for n in 1..=3 {
            let fast: BTreeSet<Filling> = enumerate_sorted(&lam, n)
                .into_iter()
                .map(SortedTableau::into_filling)
                .collect();
            let slow: BTreeSet<Filling> = enumerate_fillings(&lam, n).filter(is_sorted).collect();
            assert_eq!(fast, slow, "{lam} n={n}");
        }
    }
    assert!(SortedTableau::new(filling("2,1")).is_err());
    assert!(SortedTableau::new(filling("1,2")).is_ok());
}

#[test]
fn flip_example_climbs_two_rows() {
    let f = filling("3,3/2,4/3,4/2,5/1,4/3,3");
    let (g, r) = flip(&f, 1).unwrap();
    assert_eq!(r, 2);
    assert_eq!(g, filling("3,3/2,4/3,4/5,2/4,1/3,3"));
}

#[test]
fn flip_in_a_single_row() {
    let (g, r) = flip(&filling("1,2"), 1).unwrap();
    assert_eq!((g, r), (filling("2,1"), 1));
}

#[test]
fn flip_errors() {
    let f = filling("1/2,2,3");
    assert!(matches!(flip(&f, 1), Err(Error::HeightMismatch(2, 1))));
    assert!(flip(&f, 2).is_ok());
    assert!(matches!(flip(&filling("1,1"), 1), Err(Error::IdenticalColumns(1, 2))));
    assert!(matches!(flip(&f, 3), Err(Error::IndexOutOfRange { .. })));
    assert!(matches!(flip(&f, 0), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn flips_on_random_fillings() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 10_000 {
        let f = random_filling(&mut rng);
        let ncols = f.columns().len();
        if ncols < 2 {
            continue;
        }
        let i = rng.gen_range(1..ncols);
        if f.height(i) != f.height(i + 1) || f.column(i) == f.column(i + 1) {
            continue;
        }
        let (g, r) = flip(&f, i).unwrap();
        assert_eq!(flip(&g, i).unwrap(), (f.clone(), r), "{f}");
        assert_eq!(g.maj(), f.maj(), "{f}");
        let ccw = counterclockwise(&f, [Cell::new(i + 1, r), Cell::new(i, r), Cell::new(i, r - 1)]);
        let step = g.inv() as i64 - f.inv() as i64;
        assert_eq!(step, if ccw { -1 } else { 1 }, "{f} at {i}");
        for k in 1..r {
            assert_eq!(g.entry(Cell::new(i, k)), f.entry(Cell::new(i, k)));
        }
        checked += 1;
    }
}

#[test]
fn block_examples() {
    let f = filling("2,1,1/1,1,3");
    assert_eq!(block_decomposition(&f, 1), vec![1..=3]);
    assert_eq!(block_decomposition(&f, 2), vec![1..=2, 3..=3]);
    let mixed = filling("1/2,3/4,4");
    assert_eq!(block_decomposition(&mixed, 1), vec![1..=1, 2..=2]);
    assert_eq!(block_decomposition(&mixed, 3), vec![1..=1]);
}

#[test]
fn sort_block_examples() {
    assert_eq!(sort_block(&[7], Some(1)), vec![7]);
    assert_eq!(sort_block(&[2, 4, 1], Some(3)), vec![4, 1, 2]);
    assert_eq!(sort_block(&[1, 7], Some(4)), vec![7, 1]);
    assert_eq!(sort_block(&[3, 1, 2], None), vec![1, 2, 3]);
}

#[test]
fn family_example() {
    let s = SortedTableau::new(filling("2,1,1/1,1,3")).unwrap();
    let tree = family_tree(&s);
    assert_eq!(tree.members.len(), 6);
    assert_eq!(tree.produced(), tree.members.len());
    let mut weights: Vec<(usize, usize)> = tree.members.iter().map(|f| (f.maj(), f.inv())).collect();
    weights.sort();
    assert_eq!(weights, vec![(1, 0), (1, 1), (1, 1), (1, 2), (1, 2), (1, 3)]);
    assert!(tree.members.contains(&tree.root));
    let dot = tree.to_dot();
    assert!(dot.starts_with("digraph family {"));
    assert!(dot.contains("T_1^(2)") || dot.contains("T_2^(2)"), "{dot}");
    assert_eq!(dot.matches(" -> ").count(), tree.edges.len());
}

#[test]
fn constant_filling_has_a_singleton_family() {
    let s = SortedTableau::new(filling("2,2/2,2,2")).unwrap();
    assert_eq!(family(&s), vec![s.filling().clone()]);
    assert_eq!(perm_t(&s), MPoly::one(0));
}

#[test]
fn every_member_is_produced_once() {
    for lam in partitions_up_to(4) {
        for s in enumerate_sorted(&lam, 3) {
            let tree = family_tree(&s);
            assert_eq!(tree.produced(), tree.members.len(), "{}", s.filling());
            for m in &tree.members {
                assert_eq!(&sort_filling(m), &s, "{m}");
            }
        }
    }
}

/// Rearrangements of a word, each once.
fn arrangements(word: &[u32]) -> BTreeSet<Vec<u32>> {
    Permutation::all(word.len()).iter().map(|p| p.apply(word)).collect()
}

#[test]
fn two_row_inversions_equal_rearrangement_length() {
    for width in 1..=4 {
        for c in 1..=3u32 {
            for top in columns_of_height(width, 4) {
                let b = sort_block(&top, Some(c));
                if b != top {
                    continue;
                }
                for w in arrangements(&b) {
                    let shortest = Permutation::all(width)
                        .iter()
                        .filter(|p| p.apply(&b) == w)
                        .map(Permutation::length)
                        .min()
                        .unwrap();
                    let wt = sym_tilde(&b, &w).unwrap();
                    assert_eq!(wt.length(), shortest);
                    assert_eq!(wt.inverse().apply(&b), w);
                    let f = Filling::from_rows(&[w.clone(), vec![c; width]]).unwrap();
                    assert_eq!(f.inv(), shortest, "{f}");
                }
            }
        }
    }
}

#[test]
fn sym_tilde_rejects_other_letters() {
    assert!(sym_tilde(&[1, 2], &[1, 3]).is_none());
    assert!(sym_tilde(&[1, 2], &[1]).is_none());
    assert_eq!(sym_tilde(&[1, 1], &[1, 1]), Some(Permutation::identity(2)));
}

#[test]
fn pds_examples() {
    assert!(pds(&Permutation::identity(4)).is_empty());
    assert_eq!(pds(&Permutation::longest(3)).len(), 3);
    for n in 1..=5 {
        for v in Permutation::all(n) {
            let word = pds(&v);
            assert_eq!(word.len(), v.length());
            assert_eq!(Permutation::from_word(n, &word), v);
        }
    }
}

#[test]
fn htilde_is_symmetric_in_x() {
    for lam in Partition::all(4) {
        let h = htilde_compact(&lam, 3);
        for i in 1..3 {
            assert_eq!(h.swap_vars(i).unwrap(), h, "{lam}");
        }
    }
}

#[test]
fn htilde_swaps_q_and_t_under_conjugation() {
    let swap = [(Var::Q, Binding::Var(Var::T)), (Var::T, Binding::Var(Var::Q))];
    for m in 1..=5 {
        for lam in Partition::all(m) {
            let h = htilde_compact(&lam, 3);
            assert_eq!(h.specialize(&swap), htilde_compact(&lam.conjugate(), 3), "{lam}");
        }
    }
}

#[test]
fn htilde_counts_fillings_at_one() {
    let lam = partition("2,1,1");
    assert_eq!(htilde_compact(&lam, 3).eval(&[1, 1, 1], 1, 1), 81.into());
    assert_eq!(htilde_brute(&lam, 2), htilde_compact(&lam, 2));
    assert_eq!(htilde_brute(&partition("3,1"), 2), htilde_compact(&partition("3,1"), 2));
}

#[test]
fn perm_t_examples() {
    let distinct = filling("1,2,3");
    assert_eq!(perm_t(&distinct), t_multinomial(3, &[1, 1, 1]).unwrap());
    let two_rects = filling("2,1/1,1,3,3");
    assert_eq!(perm_t(&two_rects), t_multinomial(2, &[1, 1]).unwrap());
}

#[test]
fn rectangles_of_a_shape() {
    let rects = rectangles(&partition("3,3,1"));
    assert_eq!(rects.len(), 2);
    assert_eq!(rects[0].columns(), 1..=2);
    assert_eq!(rects[0].height, 3);
    assert_eq!(rects[1].columns(), 3..=3);
}

#[test]
fn filling_parsing_and_json() {
    let f = filling("3/1,2");
    assert_eq!(f.shape(), &partition("2,1"));
    assert_eq!(f.column(1), &[1, 3]);
    assert_eq!(f.to_string(), "3/1,2");
    let json = serde_json::to_string(&f).unwrap();
    assert_eq!(json, r#"{"shape":[2,1],"rows":[[3],[1,2]]}"#);
    assert_eq!(serde_json::from_str::<Filling>(&json).unwrap(), f);
    assert!(serde_json::from_str::<Filling>(r#"{"shape":[1,1],"rows":[[3],[1,2]]}"#).is_err());
    assert!("1,2/3".parse::<Filling>().is_err());
    assert!("0".parse::<Filling>().is_err());
    assert!("a".parse::<Filling>().is_err());
}

#[test]
fn x_weight_and_counts() {
    let f = filling("3/1,3");
    assert_eq!(f.x_weight(3).unwrap(), MPoly::x(3, 1) * MPoly::x(3, 3).pow(2));
    assert!(f.x_weight(2).is_err());
    assert_eq!(filling_count(&partition("2,1"), 3), Some(27));
    assert_eq!(filling_count(&partition("40"), 4), None);
    let all: Vec<Filling> = enumerate_fillings(&partition("2,1"), 2).collect();
    assert_eq!(all.len(), 8);
    assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), 8);
}
