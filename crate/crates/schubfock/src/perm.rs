//! Finitely supported permutations of the integer line.
//!
//! A [`Permutation`] stores the minimal window on which it acts
//! nontrivially, so structural equality and hashing agree with equality of
//! bijections. Words in the simple reflections `s_i` (any `i`, including
//! nonpositive ones) multiply left to right, and right multiplication by
//! `s_i` swaps the values in one-line positions `i` and `i + 1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::caps::Caps;
use crate::error::{Error, Result};

/// A bijection of the integers moving finitely many points, in canonical
/// window form: `images[j]` is the image of `offset + j`, the window is
/// closed under the map, and neither endpoint of the window is fixed
/// (the identity has an empty window).
///
/// ```
/// use schubfock::perm::Permutation;
/// let s1 = Permutation::simple(1);
/// assert_eq!(s1.apply(1), 2);
/// assert_eq!(s1.compose(&s1), Permutation::identity());
/// ```
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    offset: i64,
    images: Vec<i64>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation {
            offset: 0,
            images: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    /// The simple reflection `s_i`, exchanging `i` and `i + 1`.
    pub fn simple(i: i64) -> Self {
        Permutation {
            offset: i,
            images: vec![i + 1, i],
        }
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(a: i64, b: i64) -> Self {
        assert!(a != b, "transposition needs two distinct points");
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let mut images: Vec<i64> = (a..=b).collect();
        images[0] = b;
        images[(b - a) as usize] = a;
        Permutation { offset: a, images }
    }

    /// Builds a permutation from a window of images; the window must be
    /// closed under the map. The result is canonicalized.
    pub fn from_window(offset: i64, images: Vec<i64>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < offset || v >= offset + n as i64 {
                return Err(Error::Parse(format!(
                    "image {v} falls outside window [{offset}, {}]",
                    offset + n as i64 - 1
                )));
            }
            let j = (v - offset) as usize;
            if seen[j] {
                return Err(Error::Parse(format!("value {v} repeated in window")));
            }
            seen[j] = true;
        }
        let mut p = Permutation { offset, images };
        p.canonicalize();
        Ok(p)
    }

    fn canonicalize(&mut self) {
        let mut lo = 0usize;
        let mut hi = self.images.len();
        while lo < hi && self.images[lo] == self.offset + lo as i64 {
            lo += 1;
        }
        while hi > lo && self.images[hi - 1] == self.offset + hi as i64 - 1 {
            hi -= 1;
        }
        self.images.drain(hi..);
        self.images.drain(..lo);
        self.offset += lo as i64;
        if self.images.is_empty() {
            self.offset = 0;
        }
    }

    pub fn apply(&self, i: i64) -> i64 {
        let j = i - self.offset;
        if j < 0 || j >= self.images.len() as i64 {
            i
        } else {
            self.images[j as usize]
        }
    }

    /// Smallest window containing the support, as `(start, end)` inclusive.
    /// The identity reports `None`.
    pub fn window(&self) -> Option<(i64, i64)> {
        if self.images.is_empty() {
            None
        } else {
            Some((self.offset, self.offset + self.images.len() as i64 - 1))
        }
    }

    pub fn window_width(&self) -> usize {
        self.images.len()
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn images(&self) -> &[i64] {
        &self.images
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<i64> {
        (0..self.images.len())
            .filter(|&j| self.images[j] != self.offset + j as i64)
            .map(|j| self.offset + j as i64)
            .collect()
    }

    /// Functional composition: `(p . q)(i) = p(q(i))`. Right
    /// multiplication by `s_i` therefore swaps one-line positions
    /// `i, i + 1`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        if self.is_identity() {
            return other.clone();
        }
        if other.is_identity() {
            return self.clone();
        }
        let (a0, a1) = self.window().unwrap();
        let (b0, b1) = other.window().unwrap();
        let lo = a0.min(b0);
        let hi = a1.max(b1);
        let images = (lo..=hi).map(|i| self.apply(other.apply(i))).collect();
        let mut p = Permutation { offset: lo, images };
        p.canonicalize();
        p
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0i64; self.images.len()];
        for (j, &v) in self.images.iter().enumerate() {
            images[(v - self.offset) as usize] = self.offset + j as i64;
        }
        Permutation {
            offset: self.offset,
            images,
        }
    }

    /// Coxeter length: the number of inversions inside the window.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Positions `i` with `w(i) > w(i + 1)`; all lie inside the window.
    pub fn right_descents(&self) -> Vec<i64> {
        let n = self.images.len();
        (0..n.saturating_sub(1))
            .filter(|&j| self.images[j] > self.images[j + 1])
            .map(|j| self.offset + j as i64)
            .collect()
    }

    /// Values `i` with `w^{-1}(i) > w^{-1}(i + 1)`, i.e. letters `i` with
    /// `l(s_i w) < l(w)`.
    pub fn left_descents(&self) -> Vec<i64> {
        self.inverse().right_descents()
    }

    /// `w . s_i` (swaps one-line positions `i, i + 1`).
    pub fn mul_simple_right(&self, i: i64) -> Permutation {
        self.compose(&Permutation::simple(i))
    }

    /// `s_i . w` (swaps the values `i, i + 1`).
    pub fn mul_simple_left(&self, i: i64) -> Permutation {
        Permutation::simple(i).compose(self)
    }

    /// Conjugate shift by `m`: the result sends `i + m` to `w(i) + m`.
    pub fn tau(&self, m: i64) -> Permutation {
        Permutation {
            offset: if self.images.is_empty() {
                0
            } else {
                self.offset + m
            },
            images: self.images.iter().map(|&v| v + m).collect(),
        }
    }

    /// True when every descent sits at position `k`.
    pub fn is_grassmannian(&self, k: i64) -> bool {
        self.right_descents().iter().all(|&d| d == k)
    }

    /// Membership in the subgroup avoiding `s_0`: no point crosses the
    /// 0/1 boundary.
    pub fn in_s_neq0(&self) -> bool {
        let n = self.images.len();
        (0..n).all(|j| {
            let i = self.offset + j as i64;
            (i <= 0) == (self.images[j] <= 0)
        })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "w[id]");
        }
        write!(f, "w[{}:", self.offset)?;
        for v in &self.images {
            write!(f, " {v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses the text format `w[offset: v0 v1 ...]` (and `w[id]`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix("w[")
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected w[offset: v0 v1 ...], got {s:?}")))?;
        if inner.trim() == "id" {
            return Ok(Permutation::identity());
        }
        let (off, rest) = inner
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
        let offset: i64 = off
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad offset {off:?}")))?;
        let images = rest
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad image {t:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        Permutation::from_window(offset, images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            offset: i64,
            images: &'a [i64],
        }
        Raw {
            offset: self.offset,
            images: &self.images,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            offset: i64,
            images: Vec<i64>,
        }
        let raw = Raw::deserialize(de)?;
        Permutation::from_window(raw.offset, raw.images).map_err(D::Error::custom)
    }
}

/// A word in the simple reflections; letter `i` stands for `s_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<i64>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[i64] {
        &self.0
    }

    /// Letterwise shift, matching [`Permutation::tau`].
    pub fn tau(&self, m: i64) -> Word {
        Word(self.0.iter().map(|&a| a + m).collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(|a| format!("s{a}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `s1 s2 s-1`; the empty word is `e` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word(Vec::new()));
        }
        let letters = s
            .split_whitespace()
            .map(|t| {
                t.strip_prefix('s')
                    .and_then(|n| n.parse::<i64>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad letter {t:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        Ok(Word(letters))
    }
}

/// Multiplies a word out, left to right.
pub fn product_word(word: &Word) -> Permutation {
    let mut p = Permutation::identity();
    for &a in &word.0 {
        p = p.mul_simple_right(a);
    }
    p
}

/// A word is reduced when its length matches the length of its product.
pub fn is_reduced(word: &Word) -> bool {
    product_word(word).length() == word.len()
}

/// One reduced word, built by repeatedly stripping the smallest right
/// descent.
pub fn one_reduced_word(p: &Permutation) -> Word {
    let mut letters = Vec::with_capacity(p.length());
    let mut cur = p.clone();
    while let Some(&i) = cur.right_descents().first() {
        cur = cur.mul_simple_right(i);
        letters.push(i);
    }
    letters.reverse();
    Word(letters)
}

/// All reduced words of `p`, by right-descent stripping with memoization
/// on canonical forms.
pub fn reduced_words(p: &Permutation, caps: &Caps) -> Result<Vec<Word>> {
    if p.length() > caps.max_len {
        return Err(Error::BoundExceeded {
            what: "length",
            got: p.length(),
            cap: caps.max_len,
        });
    }
    let mut memo: HashMap<Permutation, Vec<Word>> = HashMap::new();
    fn go(p: &Permutation, memo: &mut HashMap<Permutation, Vec<Word>>) -> Vec<Word> {
        if p.is_identity() {
            return vec![Word(Vec::new())];
        }
        if let Some(ws) = memo.get(p) {
            return ws.clone();
        }
        let mut out = Vec::new();
        for i in p.right_descents() {
            let q = p.mul_simple_right(i);
            for mut w in go(&q, memo) {
                w.0.push(i);
                out.push(w);
            }
        }
        memo.insert(p.clone(), out.clone());
        out
    }
    Ok(go(p, &mut memo))
}

/// Covers of `p` in the k-Bruhat order: all `u = p . t_{a,b}` with
/// `l(u) = l(p) + 1` and `a <= k < b`, reported with the transposition.
pub fn kbruhat_covers(p: &Permutation, k: i64) -> Vec<(Permutation, i64, i64)> {
    let (lo, hi) = match p.window() {
        Some((s, e)) => (s.min(k) - 1, e.max(k) + 1),
        None => (k - 1, k + 1),
    };
    let target = p.length() + 1;
    let mut out = Vec::new();
    for a in lo..=k {
        for b in (k + 1)..=hi {
            let u = p.compose(&Permutation::transposition(a, b));
            if u.length() == target {
                out.push((u, a, b));
            }
        }
    }
    out.sort();
    out
}

/// Covers *below* `p` in the k-Bruhat order: all `u = p . t_{a,b}` with
/// `l(u) = l(p) - 1` and `a <= k < b`.
pub fn kbruhat_cocovers(p: &Permutation, k: i64) -> Vec<(Permutation, i64, i64)> {
    if p.is_identity() {
        return Vec::new();
    }
    let (s, e) = p.window().unwrap();
    let (lo, hi) = (s.min(k) - 1, e.max(k) + 1);
    let target = p.length() - 1;
    let mut out = Vec::new();
    for a in lo..=k {
        for b in (k + 1)..=hi {
            let u = p.compose(&Permutation::transposition(a, b));
            if u.length() == target {
                out.push((u, a, b));
            }
        }
    }
    out.sort();
    out
}

/// Sorts the values at positions `<= k` and at positions `> k` into
/// ascending order; the result is k-Grassmannian.
pub fn grassmannian_sort(p: &Permutation, k: i64) -> Permutation {
    let (s, e) = match p.window() {
        Some(w) => w,
        None => return Permutation::identity(),
    };
    let lo = s.min(k + 1);
    let hi = e.max(k);
    let mut low_vals = Vec::new();
    let mut high_vals = Vec::new();
    for i in lo..=hi {
        if i <= k {
            low_vals.push(p.apply(i));
        } else {
            high_vals.push(p.apply(i));
        }
    }
    low_vals.sort_unstable();
    high_vals.sort_unstable();
    low_vals.extend(high_vals);
    Permutation::from_window(lo, low_vals).expect("sorted window is a permutation")
}

/// The partition of a k-Grassmannian permutation: `lambda_j =
/// u(k + 1 - j) - (k + 1 - j)`.
pub fn grassmannian_partition(u: &Permutation, k: i64) -> Result<crate::partition::Partition> {
    if !u.is_grassmannian(k) {
        return Err(Error::NotGrassmannian { k });
    }
    let mut parts = Vec::new();
    let mut j = 1i64;
    loop {
        let pos = k + 1 - j;
        let lam = u.apply(pos) - pos;
        debug_assert!(lam >= 0, "Grassmannian permutation gave a negative part");
        if lam == 0 {
            break;
        }
        parts.push(lam as u32);
        j += 1;
    }
    Ok(crate::partition::Partition::new(parts))
}

/// Inverse of [`grassmannian_partition`] for a fixed `k`.
pub fn grassmannian_from_partition(lambda: &crate::partition::Partition, k: i64) -> Permutation {
    let parts = lambda.parts();
    if parts.is_empty() {
        return Permutation::identity();
    }
    let rows = parts.len() as i64;
    let lo = k + 1 - rows;
    let hi = k + parts[0] as i64;
    let mut images: Vec<i64> = Vec::with_capacity((hi - lo + 1) as usize);
    let mut taken: Vec<i64> = Vec::new();
    for pos in lo..=k {
        let j = k + 1 - pos;
        let lam = parts[(j - 1) as usize] as i64;
        images.push(pos + lam);
        taken.push(pos + lam);
    }
    taken.sort_unstable();
    let mut rest: Vec<i64> = (lo..=hi).filter(|v| taken.binary_search(v).is_err()).collect();
    rest.sort_unstable();
    images.extend(rest);
    Permutation::from_window(lo, images).expect("partition data yields a permutation")
}

/// Projection to a partition through the k-Grassmannian:
/// `pi_k(w) = lambda(G_k(w^{-1}))`.
pub fn pi_k(w: &Permutation, k: i64) -> crate::partition::Partition {
    let sorted = grassmannian_sort(&w.inverse(), k);
    grassmannian_partition(&sorted, k).expect("grassmannian_sort output has one descent")
}

/// Decreasing reduced word of an *increasing* permutation (one admitting
/// a strictly decreasing reduced word), or `None`.
///
/// Such permutations are exactly the products of disjoint runs
/// `a -> b+1, i+1 -> i`, one per maximal interval of letters.
pub fn decreasing_word(v: &Permutation) -> Option<Word> {
    let (s, e) = match v.window() {
        Some(w) => w,
        None => return Some(Word(Vec::new())),
    };
    let mut blocks: Vec<(i64, i64)> = Vec::new();
    let mut i = s;
    while i <= e {
        let c = v.apply(i);
        if c == i {
            i += 1;
            continue;
        }
        if c < i {
            return None;
        }
        for j in i + 1..=c {
            if v.apply(j) != j - 1 {
                return None;
            }
        }
        blocks.push((i, c));
        i = c + 1;
    }
    let mut letters = Vec::new();
    for &(a, c) in blocks.iter().rev() {
        for b in (a..c).rev() {
            letters.push(b);
        }
    }
    Some(Word(letters))
}

/// True when the permutation admits a strictly decreasing reduced word.
pub fn is_increasing_perm(v: &Permutation) -> bool {
    decreasing_word(v).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(letters: &[i64]) -> Permutation {
        product_word(&Word(letters.to_vec()))
    }

    /// Oracle: build one-line vectors by applying position swaps.
    fn swap_oracle(letters: &[i64], lo: i64, hi: i64) -> Vec<i64> {
        let mut line: Vec<i64> = (lo..=hi).collect();
        for &a in letters {
            let j = (a - lo) as usize;
            line.swap(j, j + 1);
        }
        line
    }

    #[test]
    fn compose_matches_position_swaps() {
        assert_eq!(
            Permutation::simple(1).compose(&Permutation::simple(2)),
            Permutation::from_window(1, vec![2, 3, 1]).unwrap()
        );
        assert_eq!(
            Permutation::simple(2).compose(&Permutation::simple(1)),
            Permutation::from_window(1, vec![3, 1, 2]).unwrap()
        );
        assert_eq!(
            Permutation::identity().compose(&Permutation::identity()),
            Permutation::identity()
        );
        // longer random-ish words against the swap oracle
        for letters in [&[1, 2, 1][..], &[3, 1, 2, 3][..], &[0, -1, 0, 1][..]] {
            let p = pw(letters);
            let lo = *letters.iter().min().unwrap();
            let hi = *letters.iter().max().unwrap() + 1;
            let line = swap_oracle(letters, lo, hi);
            assert_eq!(p, Permutation::from_window(lo, line).unwrap());
        }
    }

    #[test]
    fn length_counts_inversions() {
        assert_eq!(Permutation::identity().length(), 0);
        assert_eq!(Permutation::simple(5).length(), 1);
        assert_eq!(
            Permutation::from_window(1, vec![3, 1, 2]).unwrap().length(),
            2
        );
    }

    #[test]
    fn words_and_reducedness() {
        assert_eq!(product_word(&Word(vec![])), Permutation::identity());
        assert!(!is_reduced(&Word(vec![1, 1])));
        assert!(is_reduced(&Word(vec![1, 2, 1, 4, 3])));
    }

    #[test]
    fn reduced_word_enumeration() {
        let caps = Caps::default();
        assert_eq!(
            reduced_words(&Permutation::identity(), &caps).unwrap(),
            vec![Word(vec![])]
        );
        let w = Permutation::from_window(1, vec![2, 3, 1]).unwrap();
        assert_eq!(reduced_words(&w, &caps).unwrap(), vec![Word(vec![1, 2])]);
        let w0 = pw(&[1, 2, 1]);
        let mut words = reduced_words(&w0, &caps).unwrap();
        words.sort();
        assert_eq!(words, vec![Word(vec![1, 2, 1]), Word(vec![2, 1, 2])]);
        let too_long = pw(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]);
        assert!(matches!(
            reduced_words(&too_long, &caps),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn kbruhat_cover_examples() {
        let id = Permutation::identity();
        assert_eq!(
            kbruhat_covers(&id, 1),
            vec![(Permutation::simple(1), 1, 2)]
        );
        assert_eq!(
            kbruhat_covers(&id, 0),
            vec![(Permutation::simple(0), 0, 1)]
        );
        let mut got = kbruhat_covers(&Permutation::simple(1), 1);
        got.sort();
        let mut want = vec![
            (pw(&[2, 1]), 1, 3),
            (pw(&[0, 1]), 0, 2),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn kbruhat_covers_against_exhaustive_oracle() {
        // every length-additive transposition through k in a wide window
        for w in [pw(&[1, 2]), pw(&[0, 2, 1]), pw(&[-1, 1, 0])] {
            for k in -2..=3 {
                let fast = kbruhat_covers(&w, k);
                let mut slow = Vec::new();
                for a in -6..=k {
                    for b in (k + 1)..=7 {
                        let u = w.compose(&Permutation::transposition(a, b));
                        if u.length() == w.length() + 1 {
                            slow.push((u, a, b));
                        }
                    }
                }
                slow.sort();
                assert_eq!(fast, slow, "w={w} k={k}");
            }
        }
    }

    #[test]
    fn tau_shifts() {
        assert_eq!(Permutation::identity().tau(5), Permutation::identity());
        assert_eq!(Permutation::simple(1).tau(1), Permutation::simple(2));
        let w = pw(&[1, 2, 1]);
        assert_eq!(w.tau(3).tau(-3), w);
        assert_eq!(w.tau(2).length(), w.length());
    }

    #[test]
    fn grassmannian_sort_paper_example() {
        let w = Permutation::from_window(1, vec![4, 2, 3, 5, 6, 1]).unwrap();
        let g = grassmannian_sort(&w, 3);
        assert_eq!(g, Permutation::from_window(1, vec![2, 3, 4, 1, 5, 6]).unwrap());
        assert!(g.is_grassmannian(3));
        assert_eq!(grassmannian_sort(&Permutation::identity(), 4), Permutation::identity());
        assert_eq!(grassmannian_sort(&Permutation::simple(2), 5), Permutation::identity());
    }

    #[test]
    fn grassmannian_partition_bijection() {
        use crate::partition::Partition;
        assert_eq!(
            grassmannian_partition(&Permutation::identity(), 3).unwrap(),
            Partition::empty()
        );
        let u = Permutation::from_window(0, vec![1, 2, 0]).unwrap();
        assert_eq!(
            grassmannian_partition(&u, 1).unwrap(),
            Partition::new(vec![1, 1])
        );
        let v = Permutation::from_window(1, vec![3, 1, 2]).unwrap();
        assert_eq!(
            grassmannian_partition(&v, 1).unwrap(),
            Partition::new(vec![2])
        );
        assert!(grassmannian_partition(&v, 2).is_err());
        // round trips
        for (parts, k) in [(vec![2u32, 1], 0), (vec![3, 1], 3), (vec![2, 2, 1], 2)] {
            let lam = Partition::new(parts);
            let u = grassmannian_from_partition(&lam, k);
            assert!(u.is_grassmannian(k));
            assert_eq!(grassmannian_partition(&u, k).unwrap(), lam);
        }
    }

    #[test]
    fn pi_k_examples() {
        use crate::partition::Partition;
        assert_eq!(pi_k(&Permutation::identity(), 2), Partition::empty());
        assert_eq!(pi_k(&Permutation::simple(1), 1), Partition::new(vec![1]));
        assert_eq!(pi_k(&Permutation::simple(1), 5), Partition::empty());
    }

    #[test]
    fn increasing_permutations() {
        assert!(is_increasing_perm(&Permutation::identity()));
        assert!(is_increasing_perm(&pw(&[2, 1])));
        assert!(!is_increasing_perm(&pw(&[1, 2])));
        assert_eq!(decreasing_word(&pw(&[4, 3, 1])), Some(Word(vec![4, 3, 1])));
        assert_eq!(decreasing_word(&pw(&[1, 2, 1])), None);
    }

    #[test]
    fn text_format_round_trip() {
        for s in ["w[0: 1 2 0]", "w[id]", "w[-2: -1 -2 0]"] {
            let p: Permutation = s.parse().unwrap();
            let back: Permutation = p.to_string().parse().unwrap();
            assert_eq!(p, back);
        }
        assert!("w[0: 1 1]".parse::<Permutation>().is_err());
        assert!("nope".parse::<Permutation>().is_err());
        let w: Word = "s1 s2 s-1".parse().unwrap();
        assert_eq!(w, Word(vec![1, 2, -1]));
    }

    #[test]
    fn json_round_trip() {
        let p = pw(&[0, 1, -1]);
        let js = serde_json::to_string(&p).unwrap();
        let q: Permutation = serde_json::from_str(&js).unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<Permutation>(r#"{"offset":0,"images":[5]}"#).is_err());
    }
}
