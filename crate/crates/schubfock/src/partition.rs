//! Integer partitions and the ribbon/strip moves used by the classical
//! correspondence.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Multiplicity of each part value, as `(value, count)` pairs.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Appends one part and re-sorts.
    pub fn with_part(&self, p: u32) -> Partition {
        let mut parts = self.0.clone();
        parts.push(p);
        Partition::new(parts)
    }

    /// Removes one copy of the part `p`, if present.
    pub fn without_part(&self, p: u32) -> Option<Partition> {
        let idx = self.0.iter().position(|&q| q == p)?;
        let mut parts = self.0.clone();
        parts.remove(idx);
        Some(Partition(parts))
    }

    /// Beta numbers `lambda_i - i` for `i = 1..=rows`.
    fn betas(&self, rows: usize) -> Vec<i64> {
        (0..rows)
            .map(|i| self.part(i) as i64 - (i as i64 + 1))
            .collect()
    }

    fn from_betas(mut betas: Vec<i64>) -> Partition {
        betas.sort_unstable_by(|a, b| b.cmp(a));
        let parts = betas
            .iter()
            .enumerate()
            .map(|(i, &b)| b + i as i64 + 1)
            .filter(|&p| p > 0)
            .map(|p| p as u32)
            .collect();
        Partition::new(parts)
    }

    /// All ways to remove an `m`-ribbon, as `(smaller, height - 1)`.
    pub fn remove_ribbons(&self, m: u32) -> Vec<(Partition, u32)> {
        let rows = self.len();
        let betas = self.betas(rows);
        let mut out = Vec::new();
        for (i, &b) in betas.iter().enumerate() {
            let nb = b - m as i64;
            if nb < -(rows as i64) || betas.contains(&nb) {
                continue;
            }
            let crossed = betas.iter().filter(|&&c| nb < c && c < b).count() as u32;
            let mut next = betas.clone();
            next[i] = nb;
            out.push((Partition::from_betas(next), crossed));
        }
        out.sort();
        out
    }

    /// All ways to add an `m`-ribbon, as `(larger, height - 1)`.
    pub fn add_ribbons(&self, m: u32) -> Vec<(Partition, u32)> {
        let rows = self.len() + m as usize;
        let betas = self.betas(rows);
        let mut out = Vec::new();
        for (i, &b) in betas.iter().enumerate() {
            let nb = b + m as i64;
            if betas.contains(&nb) {
                continue;
            }
            let crossed = betas.iter().filter(|&&c| b < c && c < nb).count() as u32;
            let mut next = betas.clone();
            next[i] = nb;
            out.push((Partition::from_betas(next), crossed));
        }
        out.sort();
        out
    }

    /// All `mu` contained in `self` with `self/mu` a horizontal strip
    /// (no two cells in a column), i.e. `self` and `mu` interlace.
    pub fn horizontal_strip_predecessors(&self) -> Vec<Partition> {
        fn go(lam: &Partition, row: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if row == lam.len() {
                out.push(Partition::new(acc.clone()));
                return;
            }
            let hi = lam.part(row);
            let lo = lam.part(row + 1);
            for v in lo..=hi {
                acc.push(v);
                go(lam, row + 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 0, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// True when `self/mu` is a horizontal strip.
    pub fn horizontal_strip_over(&self, mu: &Partition) -> Result<bool> {
        if !self.contains(mu) {
            return Err(Error::NotContained {
                inner: mu.to_string(),
                outer: self.to_string(),
            });
        }
        Ok((0..self.len()).all(|i| mu.part(i) >= self.part(i + 1)))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `3,1`, `(3,1)`, `[3,1]` or the empty partition as `-`/`()`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .or_else(|| s.strip_prefix('[').and_then(|t| t.strip_suffix(']')))
            .unwrap_or(s);
        let inner = inner.trim();
        if inner.is_empty() || inner == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for t in inner.split(',') {
            let p: u32 = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {t:?}")))?;
            parts.push(p);
        }
        let lam = Partition::new(parts.clone());
        if lam.parts() != parts {
            return Err(Error::Parse(format!(
                "parts not weakly decreasing: {s:?}"
            )));
        }
        Ok(lam)
    }
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(acc.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            acc.push(p as u32);
            go(rem - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_shape_ops() {
        let lam = Partition::new(vec![1, 3, 1]);
        assert_eq!(lam.parts(), &[3, 1, 1]);
        assert_eq!(lam.size(), 5);
        assert!(lam.contains(&Partition::new(vec![2, 1])));
        assert!(!lam.contains(&Partition::new(vec![4])));
    }

    #[test]
    fn ribbon_moves() {
        // two ways to add a 2-ribbon to the empty shape
        let out = Partition::empty().add_ribbons(2);
        assert_eq!(
            out,
            vec![
                (Partition::new(vec![1, 1]), 1),
                (Partition::new(vec![2]), 0),
            ]
        );
        // single removable 2-ribbon from (2)
        assert_eq!(
            Partition::new(vec![2]).remove_ribbons(2),
            vec![(Partition::empty(), 0)]
        );
        // (3,1): the only removable 2-ribbon is the tail of the first row
        // ((3,1)/(2) is disconnected), leaving (1,1) with height 1
        assert_eq!(
            Partition::new(vec![3, 1]).remove_ribbons(2),
            vec![(Partition::new(vec![1, 1]), 0)]
        );
        // (1,1) loses its column ribbon, height 2
        assert_eq!(
            Partition::new(vec![1, 1]).remove_ribbons(2),
            vec![(Partition::empty(), 1)]
        );
    }

    #[test]
    fn horizontal_strips() {
        let lam = Partition::new(vec![3, 1]);
        let mus = lam.horizontal_strip_predecessors();
        let want: Vec<Partition> = [
            vec![1],
            vec![2],
            vec![3],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
        ]
        .into_iter()
        .map(Partition::new)
        .collect();
        let mut want = want;
        want.sort();
        assert_eq!(mus, want);
        assert!(lam
            .horizontal_strip_over(&Partition::new(vec![1]))
            .unwrap());
        assert!(lam
            .horizontal_strip_over(&Partition::new(vec![4]))
            .is_err());
    }

    #[test]
    fn partition_listing() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(partitions_up_to(3).len(), 1 + 1 + 2 + 3);
    }

    #[test]
    fn parse_and_display() {
        let lam: Partition = "3,1".parse().unwrap();
        assert_eq!(lam, Partition::new(vec![3, 1]));
        let lam2: Partition = "(2,2,1)".parse().unwrap();
        assert_eq!(lam2.to_string(), "(2,2,1)");
        assert!("1,3".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }
}
