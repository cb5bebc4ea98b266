//! Weak ribbons, k-strong ribbons, and their spin statistics.
//!
//! Weak ribbons are the permutations stripped off by the annihilation
//! operators: reduced words with interval letter support avoiding the
//! patterns 2132 and 2312 (equal first and last letters). Strong ribbons
//! are the single-cycle chains of length-additive transpositions through a
//! fixed column `k`, grown by the creation operators.

use std::collections::{HashMap, HashSet};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::perm::{kbruhat_covers, kbruhat_cocovers, one_reduced_word, Permutation, Word};

/// A target basis permutation together with the sign `(-1)^spin` its
/// ribbon contributes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedNeighbor {
    pub target: Permutation,
    pub sign: i8,
}

/// Number of letters `k` such that some occurrence of `k` precedes some
/// occurrence of `k + 1`.
///
/// This is the reading of the spin statistic consistent with both worked
/// examples (`s1 s2 s1 s4 s3` has spin 2 and `s3 s2 s5 s4 s1` has spin 1);
/// the literal quantifier order printed alongside them matches only the
/// first.
pub fn word_spin(word: &Word) -> u32 {
    let letters = word.letters();
    let mut spin = 0;
    let distinct: HashSet<i64> = letters.iter().copied().collect();
    for &k in &distinct {
        if !distinct.contains(&(k + 1)) {
            continue;
        }
        let first_k = letters.iter().position(|&a| a == k).unwrap();
        let last_k1 = letters.iter().rposition(|&a| a == k + 1).unwrap();
        if first_k < last_k1 {
            spin += 1;
        }
    }
    spin
}

fn support_is_interval(letters: &[i64]) -> bool {
    if letters.is_empty() {
        return true;
    }
    let set: HashSet<i64> = letters.iter().copied().collect();
    let lo = *set.iter().min().unwrap();
    let hi = *set.iter().max().unwrap();
    (lo..=hi).all(|a| set.contains(&a))
}

/// Occurrence of 2132 or 2312: positions `i1 < i2 < i3 < i4` with equal
/// letters at `i1` and `i4`, and between them one strictly smaller and one
/// strictly larger letter in the pattern's order.
fn contains_forbidden_pattern(letters: &[i64]) -> bool {
    let n = letters.len();
    for i1 in 0..n {
        for i4 in i1 + 3..n {
            if letters[i1] != letters[i4] {
                continue;
            }
            let b = letters[i1];
            for i2 in i1 + 1..i4 {
                for i3 in i2 + 1..i4 {
                    let (x, y) = (letters[i2], letters[i3]);
                    if (x < b && y > b) || (x > b && y < b) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Weak-ribbon test on a single word, which must be reduced.
pub fn is_weak_ribbon_word(word: &Word) -> Result<bool> {
    if !crate::perm::is_reduced(word) {
        return Err(Error::NotReduced);
    }
    Ok(support_is_interval(word.letters()) && !contains_forbidden_pattern(word.letters()))
}

/// Weak-ribbon test on a permutation: one reduced word decides, and all
/// reduced words agree on the verdict and the spin. Returns the spin.
pub fn is_weak_ribbon(v: &Permutation, caps: &Caps) -> Result<Option<u32>> {
    if v.length() > caps.max_len {
        return Err(Error::BoundExceeded {
            what: "length",
            got: v.length(),
            cap: caps.max_len,
        });
    }
    let word = one_reduced_word(v);
    if support_is_interval(word.letters()) && !contains_forbidden_pattern(word.letters()) {
        Ok(Some(word_spin(&word)))
    } else {
        Ok(None)
    }
}

fn ribbon_of_word(word: &Word) -> Option<u32> {
    if support_is_interval(word.letters()) && !contains_forbidden_pattern(word.letters()) {
        Some(word_spin(word))
    } else {
        None
    }
}

/// All factorizations `w = v . u` with `l(v) = n` additive and `v` a weak
/// ribbon, as signed neighbors `u` with sign `(-1)^{spin(v)}`.
///
/// Enumeration strips `n` left descents of `w`; the stripped letters, in
/// stripping order, spell a reduced word of `v`. Endpoints are
/// deduplicated (the factor `v = w . u^{-1}` is determined by `u`).
pub fn ribbon_strips(w: &Permutation, n: usize) -> Vec<SignedNeighbor> {
    if n > w.length() {
        return Vec::new();
    }
    let mut seen: HashMap<Permutation, Word> = HashMap::new();
    let mut stack = vec![(w.clone(), Vec::new())];
    while let Some((cur, letters)) = stack.pop() {
        if letters.len() == n {
            seen.entry(cur).or_insert_with(|| Word(letters));
            continue;
        }
        for i in cur.left_descents() {
            let mut ls = letters.clone();
            ls.push(i);
            stack.push((cur.mul_simple_left(i), ls));
        }
    }
    let mut out = Vec::new();
    for (u, word) in seen {
        if let Some(spin) = ribbon_of_word(&word) {
            out.push(SignedNeighbor {
                target: u,
                sign: if spin % 2 == 0 { 1 } else { -1 },
            });
        }
    }
    out.sort_by(|a, b| a.target.cmp(&b.target));
    out
}

fn cycle_of_size(p: &Permutation, size: usize) -> bool {
    let supp = p.support();
    if supp.len() != size {
        return false;
    }
    let start = supp[0];
    let mut seen = 1;
    let mut cur = p.apply(start);
    while cur != start {
        seen += 1;
        cur = p.apply(cur);
    }
    seen == size
}

/// All `u` with `u = w . t_{a_1,b_1} ... t_{a_n,b_n}` length-additive,
/// `a_i <= k < b_i`, and `w^{-1} u` a single `(n+1)`-cycle, with sign
/// `(-1)^spin`, `spin = #{i <= k : (w^{-1}u)(i) != i} - 1`.
///
/// Endpoints are deduplicated: the ribbon is the coset datum, not the
/// chain.
pub fn strong_ribbon_grow(w: &Permutation, k: i64, n: usize) -> Vec<SignedNeighbor> {
    if n == 0 {
        return vec![SignedNeighbor {
            target: w.clone(),
            sign: 1,
        }];
    }
    let mut frontier: HashSet<Permutation> = HashSet::from([w.clone()]);
    for _ in 0..n {
        let mut next = HashSet::new();
        for p in &frontier {
            for (u, _, _) in kbruhat_covers(p, k) {
                next.insert(u);
            }
        }
        frontier = next;
    }
    let winv = w.inverse();
    let mut out = Vec::new();
    for u in frontier {
        let sigma = winv.compose(&u);
        if !cycle_of_size(&sigma, n + 1) {
            continue;
        }
        let moved_below = sigma.support().iter().filter(|&&i| i <= k).count();
        debug_assert!(moved_below >= 1);
        let spin = (moved_below - 1) as u32;
        out.push(SignedNeighbor {
            target: u,
            sign: if spin % 2 == 0 { 1 } else { -1 },
        });
    }
    out.sort_by(|a, b| a.target.cmp(&b.target));
    out
}

/// Endpoints below `w` reachable by `n` length-decreasing transpositions
/// through `k` whose product is an `(n+1)`-cycle; these are the `u` such
/// that `w` lies in `strong_ribbon_grow(u, k, n)`.
pub fn strong_ribbon_strips(w: &Permutation, k: i64, n: usize) -> Vec<Permutation> {
    let mut frontier: HashSet<Permutation> = HashSet::from([w.clone()]);
    for _ in 0..n {
        let mut next = HashSet::new();
        for p in &frontier {
            for (u, _, _) in kbruhat_cocovers(p, k) {
                next.insert(u);
            }
        }
        frontier = next;
    }
    let mut out: Vec<Permutation> = frontier
        .into_iter()
        .filter(|u| cycle_of_size(&u.inverse().compose(w), n + 1))
        .collect();
    out.sort();
    out
}

/// A strong ribbon `u / w` is *primitive* when additionally `u . w^{-1}`
/// is a weak ribbon (so one annihilation step undoes the growth).
pub fn is_primitive(w: &Permutation, u: &Permutation, k: i64, caps: &Caps) -> Result<bool> {
    if u.length() <= w.length() {
        return Err(Error::NotStrongRibbon);
    }
    let r = u.length() - w.length();
    if !strong_ribbon_grow(w, k, r).iter().any(|sn| &sn.target == u) {
        return Err(Error::NotStrongRibbon);
    }
    let v = u.compose(&w.inverse());
    Ok(is_weak_ribbon(&v, caps)?.is_some())
}

/// #(primitive growths of size `r` above `w`) minus #(primitive strips of
/// size `r` below `w`); always equal to `r`.
pub fn primitive_count_delta(w: &Permutation, k: i64, r: usize, caps: &Caps) -> Result<i64> {
    let mut grows = 0i64;
    for sn in strong_ribbon_grow(w, k, r) {
        if is_primitive(w, &sn.target, k, caps)? {
            grows += 1;
        }
    }
    let mut strips = 0i64;
    for u in strong_ribbon_strips(w, k, r) {
        if is_primitive(&u, w, k, caps)? {
            strips += 1;
        }
    }
    Ok(grows - strips)
}
