//! Maya diagrams: the particle/hole picture of partitions.
//!
//! A diagram colours every integer black (particle) or white (hole), with
//! cofinitely many blacks at the far left and whites at the far right.
//! Walking the boundary of a Young diagram and recording vertical edges as
//! particles recovers the bijection with partitions; the centre is the
//! main diagonal.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;

/// A two-coloured integer line, stored as the finite window where it can
/// deviate from "all black left, all white right".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MayaDiagram {
    start: i64,
    cells: Vec<bool>,
    center: i64,
}

impl MayaDiagram {
    /// Builds a diagram from the occupied positions inside
    /// `[start, start + len)`, with everything below `start` black and
    /// everything at or above `start + len` white. Validates the balance
    /// condition defining the centre.
    pub fn from_window(start: i64, cells: Vec<bool>, center: i64) -> Result<Self> {
        let d = MayaDiagram {
            start,
            cells,
            center,
        };
        let c = d.balance_center()?;
        if c != center {
            return Err(Error::MalformedMaya(format!(
                "declared center {center}, balance gives {c}"
            )));
        }
        Ok(d)
    }

    /// The unique `k` with #{holes <= k} = #{particles > k}.
    fn balance_center(&self) -> Result<i64> {
        let end = self.start + self.cells.len() as i64;
        // holes at or below position p, for p from start-1 up
        let holes_upto = |p: i64| -> i64 {
            (self.start..=p.min(end - 1))
                .filter(|&q| !self.is_black(q))
                .count() as i64
                + (p - end + 1).max(0)
        };
        let blacks_above = |p: i64| -> i64 {
            (p + 1..end)
                .filter(|&q| self.is_black(q))
                .count() as i64
        };
        for p in self.start - 1..=end {
            if holes_upto(p) == blacks_above(p) {
                return Ok(p);
            }
        }
        Err(Error::MalformedMaya(
            "no balance point found".to_string(),
        ))
    }

    pub fn is_black(&self, i: i64) -> bool {
        let j = i - self.start;
        if j < 0 {
            true
        } else if j >= self.cells.len() as i64 {
            false
        } else {
            self.cells[j as usize]
        }
    }

    pub fn center(&self) -> i64 {
        self.center
    }

    /// Window where the diagram is stored, inclusive; `None` when the
    /// window is empty (pure vacuum representation).
    pub fn window(&self) -> Option<(i64, i64)> {
        if self.cells.is_empty() {
            None
        } else {
            Some((self.start, self.start + self.cells.len() as i64 - 1))
        }
    }

    /// Occupied positions within the stored window.
    pub fn occupied(&self) -> BTreeSet<i64> {
        (0..self.cells.len())
            .filter(|&j| self.cells[j])
            .map(|j| self.start + j as i64)
            .collect()
    }
}

impl fmt::Display for MayaDiagram {
    /// Plain-text dump: `*` for particles, `.` for holes, `|` after the
    /// centre position.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = match self.window() {
            Some((s, e)) => (s.min(self.center) - 1, e.max(self.center) + 1),
            None => (self.center - 1, self.center + 1),
        };
        write!(f, "maya[{lo}..{hi}: ")?;
        for i in lo..=hi {
            write!(f, "{}", if self.is_black(i) { '*' } else { '.' })?;
            if i == self.center {
                write!(f, "|")?;
            }
        }
        write!(f, "]")
    }
}

/// The Maya diagram of `lambda` centred at `k`: particles sit at
/// `k + 1 - i + lambda_i` for `i = 1, 2, ...`.
pub fn maya_from_partition(lambda: &Partition, k: i64) -> MayaDiagram {
    if lambda.is_empty() {
        return MayaDiagram {
            start: k + 1,
            cells: Vec::new(),
            center: k,
        };
    }
    let rows = lambda.len() as i64;
    let lo = k + 1 - rows; // below this everything is black
    let hi = k + lambda.part(0) as i64;
    let mut cells = vec![false; (hi - lo + 1) as usize];
    for i in 1..=rows {
        let p = k + 1 - i + lambda.part((i - 1) as usize) as i64;
        cells[(p - lo) as usize] = true;
    }
    let mut d = MayaDiagram {
        start: lo,
        cells,
        center: k,
    };
    // trim the stored window to the deviating region
    while d.cells.first() == Some(&true) {
        d.cells.remove(0);
        d.start += 1;
    }
    while d.cells.last() == Some(&false) {
        d.cells.pop();
    }
    d
}

/// Reads the partition and centre back off a diagram.
pub fn partition_from_maya(d: &MayaDiagram) -> Result<(Partition, i64)> {
    let k = d.balance_center()?;
    if k != d.center {
        return Err(Error::MalformedMaya(format!(
            "stored center {} disagrees with balance {k}",
            d.center
        )));
    }
    let (lo, hi) = match d.window() {
        Some((s, e)) => (s.min(k), e.max(k)),
        None => return Ok((Partition::empty(), k)),
    };
    // the i-th particle from the right (starting below lo they are all
    // consecutive) sits at k + 1 - i + lambda_i
    let mut parts = Vec::new();
    let blacks: Vec<i64> = (lo..=hi).rev().filter(|&p| d.is_black(p)).collect();
    let mut i = 1i64;
    for &p in &blacks {
        let lam = p - (k + 1 - i);
        if lam < 0 {
            return Err(Error::MalformedMaya(format!(
                "negative part at particle {p}"
            )));
        }
        if lam > 0 {
            parts.push(lam as u32);
        }
        i += 1;
    }
    Ok((Partition::new(parts), k))
}

/// Labels the particles `..., k-1, k` and the holes `k+1, k+2, ...`, both
/// left to right; the resulting string of labels, read position by
/// position, is the one-line of the inverse k-Grassmannian permutation of
/// the diagram's partition.
pub fn one_line(d: &MayaDiagram) -> Permutation {
    let (k, (lo, hi)) = match d.window() {
        Some((s, e)) => (d.center, (s.min(d.center), e.max(d.center))),
        None => return Permutation::identity(),
    };
    let mut images = vec![0i64; (hi - lo + 1) as usize];
    let mut label = k;
    for p in (lo..=hi).rev().filter(|&p| d.is_black(p)) {
        images[(p - lo) as usize] = label;
        label -= 1;
    }
    let mut label = k + 1;
    for p in (lo..=hi).filter(|&p| !d.is_black(p)) {
        images[(p - lo) as usize] = label;
        label += 1;
    }
    Permutation::from_window(lo, images).expect("maya labels form a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::grassmannian_from_partition;

    #[test]
    fn vacuum() {
        let d = maya_from_partition(&Partition::empty(), 0);
        assert!(d.is_black(0));
        assert!(d.is_black(-3));
        assert!(!d.is_black(1));
        assert_eq!(d.center(), 0);
        assert_eq!(partition_from_maya(&d).unwrap(), (Partition::empty(), 0));
    }

    #[test]
    fn paper_reading_for_31() {
        let d = maya_from_partition(&Partition::new(vec![3, 1]), 3);
        // particles at 3 + 1 - i + lambda_i: 6, 3, 1, 0, -1, ...;
        // the stored window starts at the first hole
        assert_eq!(d.occupied(), BTreeSet::from([3, 6]));
        assert!(d.is_black(1));
        assert!(d.is_black(0));
        assert!(!d.is_black(2));
        let w = one_line(&d);
        // ... -1 0 1 4 2 5 6 3 7 8 ... as a window permutation
        assert_eq!(
            w,
            Permutation::from_window(2, vec![4, 2, 5, 6, 3]).unwrap()
        );
        // and it is the inverse of the 3-Grassmannian permutation of (3,1)
        let u = grassmannian_from_partition(&Partition::new(vec![3, 1]), 3);
        assert_eq!(w, u.inverse());
    }

    #[test]
    fn round_trip() {
        for (parts, k) in [
            (vec![2u32, 2, 1], 2),
            (vec![3, 1], 3),
            (vec![1], -2),
            (vec![5, 3, 3, 1], 0),
        ] {
            let lam = Partition::new(parts);
            let d = maya_from_partition(&lam, k);
            assert_eq!(partition_from_maya(&d).unwrap(), (lam.clone(), k));
            assert_eq!(one_line(&d), grassmannian_from_partition(&lam, k).inverse());
        }
    }

    #[test]
    fn malformed_center_rejected() {
        let d = maya_from_partition(&Partition::new(vec![1]), 0);
        let (s, e) = d.window().unwrap();
        let cells: Vec<bool> = (s..=e).map(|i| d.is_black(i)).collect();
        assert!(MayaDiagram::from_window(s, cells.clone(), 1).is_err());
        assert!(MayaDiagram::from_window(s, cells, 0).is_ok());
    }
}
