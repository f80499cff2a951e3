use crate::shapes::{canonical_w0_word, Permutation};

/// Positive distinguished subexpression of `v` inside the canonical reduced
/// word of `w_0`, returned as a reduced word read left to right.
///
/// The canonical word is scanned from its right end; a letter `s_i` is kept
/// whenever right multiplication by it shortens the current permutation.
pub fn pds(v: &Permutation) -> Vec<usize> {
    let mut cur = v.clone();
    let mut chosen = Vec::new();
    for &i in canonical_w0_word(v.len()).iter().rev() {
        if cur.get(i) > cur.get(i + 1) {
            cur = cur.mul_simple_right(i);
            chosen.push(i);
        }
    }
    debug_assert_eq!(cur, Permutation::identity(v.len()));
    chosen.reverse();
    chosen
}

/// The shortest `w̃` with `(b_{w̃⁻¹(1)}, …, b_{w̃⁻¹(n)}) = w`.
///
/// Equal letters of `b` keep their relative order. Returns `None` when `w`
/// is not a rearrangement of `b`.
pub fn sym_tilde(b: &[u32], w: &[u32]) -> Option<Permutation> {
    if b.len() != w.len() {
        return None;
    }
    let mut used = vec![false; b.len()];
    let mut p = Vec::with_capacity(w.len());
    for &x in w {
        let k = (0..b.len()).find(|&k| !used[k] && b[k] == x)?;
        used[k] = true;
        p.push(k + 1);
    }
    Some(Permutation::new(p).ok()?.inverse())
}
