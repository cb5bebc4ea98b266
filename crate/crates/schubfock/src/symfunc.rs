//! Symmetric-function arithmetic in the power-sum basis, plus the Schur
//! oracles (tableau enumeration and Jacobi-Trudi) and the triangular
//! Schur expansion.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::{parse_coeff, MPoly, Monomial, Q};

/// An element of the ring of symmetric functions written in the power-sum
/// basis `p_alpha`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymP(BTreeMap<Partition, Q>);

impl SymP {
    pub fn zero() -> Self {
        SymP(BTreeMap::new())
    }

    pub fn one() -> Self {
        SymP(BTreeMap::from([(Partition::empty(), Q::one())]))
    }

    pub fn p(alpha: Partition) -> Self {
        SymP(BTreeMap::from([(alpha, Q::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.0.iter()
    }

    pub fn coeff(&self, alpha: &Partition) -> Q {
        self.0.get(alpha).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, alpha: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        let v = self.coeff(&alpha) + c;
        if v.is_zero() {
            self.0.remove(&alpha);
        } else {
            self.0.insert(alpha, v);
        }
    }

    pub fn add(&self, other: &SymP) -> SymP {
        let mut out = self.clone();
        for (a, c) in &other.0 {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> SymP {
        if c.is_zero() {
            return SymP::zero();
        }
        SymP(self.0.iter().map(|(a, v)| (a.clone(), v * c)).collect())
    }

    /// Product in the p-basis: concatenation of parts.
    pub fn mul(&self, other: &SymP) -> SymP {
        let mut out = SymP::zero();
        for (a, c) in &self.0 {
            for (b, d) in &other.0 {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::new(parts), c * d);
            }
        }
        out
    }

    /// Multiply by a single `p_n`.
    pub fn mul_p(&self, n: u32) -> SymP {
        let mut out = SymP::zero();
        for (a, c) in &self.0 {
            out.add_term(a.with_part(n), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|(a, c)| json!({"p": a.parts(), "coeff": c.to_string()}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<SymP> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("SymP JSON must be an array".into()))?;
        let mut out = SymP::zero();
        for t in arr {
            let parts: Vec<u32> = t
                .get("p")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("missing p".into()))?
                .iter()
                .map(|x| x.as_u64().map(|u| u as u32))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse("bad part".into()))?;
            out.add_term(Partition::new(parts), parse_coeff(t.get("coeff"))?);
        }
        Ok(out)
    }
}

impl fmt::Debug for SymP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, c) in &self.0 {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let v = c.abs();
            if a.is_empty() {
                write!(f, "{v}")?;
            } else if v.is_one() {
                write!(f, "p{a}")?;
            } else {
                write!(f, "{v}*p{a}")?;
            }
        }
        Ok(())
    }
}

/// Centralizer size `z_alpha = prod_i i^{m_i} m_i!`.
pub fn z(alpha: &Partition) -> u64 {
    let mut out: u64 = 1;
    for (value, mult) in alpha.multiplicities() {
        for _ in 0..mult {
            out *= value as u64;
        }
        for j in 1..=mult as u64 {
            out *= j;
        }
    }
    out
}

pub fn z_q(alpha: &Partition) -> Q {
    Q::from_integer(z(alpha).into())
}

/// Complete homogeneous `h_m` in the power-sum basis:
/// `h_m = sum_{alpha |- m} p_alpha / z_alpha`.
pub fn h_to_p(m: usize) -> SymP {
    let mut out = SymP::zero();
    for alpha in partitions_of(m) {
        let c = Q::one() / z_q(&alpha);
        out.add_term(alpha, c);
    }
    out
}

/// The polynomial `sum_{i in vars} x_i^n`.
pub fn power_sum_poly(n: u32, vars: &[i64]) -> MPoly {
    let mut out = MPoly::zero();
    for &i in vars {
        out.add_term(Monomial::var_pow(i, n), Q::one());
    }
    out
}

/// Evaluates a p-basis expression in the named variables.
pub fn p_expansion_to_poly(f: &SymP, vars: &[i64]) -> MPoly {
    let mut out = MPoly::zero();
    for (alpha, c) in f.terms() {
        let mut term = MPoly::constant(c.clone());
        for &part in alpha.parts() {
            term = &term * &power_sum_poly(part, vars);
        }
        out = &out + &term;
    }
    out
}

/// Schur polynomial by direct semistandard-tableau enumeration: rows
/// weakly increase, columns strictly increase, entries at most `nvars`.
pub fn schur_ssyt(lambda: &Partition, nvars: usize) -> MPoly {
    schur_ssyt_skew(lambda, &Partition::empty(), nvars).expect("empty shape is contained")
}

/// Skew Schur polynomial by tableau enumeration.
pub fn schur_ssyt_skew(lambda: &Partition, mu: &Partition, nvars: usize) -> Result<MPoly> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    let rows = lambda.len();
    let mut out = MPoly::zero();
    // fill cells row-major; grid holds entries, 0 = not yet filled
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|i| vec![0; lambda.part(i) as usize])
        .collect();
    fn go(
        lambda: &Partition,
        mu: &Partition,
        nvars: u32,
        grid: &mut Vec<Vec<u32>>,
        mut row: usize,
        mut col: usize,
        out: &mut MPoly,
    ) {
        // advance to the next cell of the skew shape
        loop {
            if row == lambda.len() {
                let mut m = Monomial::one();
                for r in grid.iter() {
                    for &e in r {
                        if e > 0 {
                            m = m.mul(&Monomial::var(e as i64));
                        }
                    }
                }
                out.add_term(m, Q::one());
                return;
            }
            if col >= lambda.part(row) as usize {
                row += 1;
                col = 0;
                continue;
            }
            if col < mu.part(row) as usize {
                col += 1;
                continue;
            }
            break;
        }
        let left = if col > 0 && col > mu.part(row) as usize {
            grid[row][col - 1]
        } else {
            0
        };
        let above = if row > 0 && col < lambda.part(row - 1) as usize && col >= mu.part(row - 1) as usize
        {
            grid[row - 1][col]
        } else {
            0
        };
        let lo = left.max(above + 1).max(1);
        for e in lo..=nvars {
            grid[row][col] = e;
            go(lambda, mu, nvars, grid, row, col + 1, out);
        }
        grid[row][col] = 0;
    }
    go(lambda, mu, nvars as u32, &mut grid, 0, 0, &mut out);
    Ok(out)
}

/// Complete homogeneous polynomial `h_m(x_1..x_n)` by multiset
/// enumeration.
pub fn h_poly(m: usize, nvars: usize) -> MPoly {
    let mut out = MPoly::zero();
    fn go(m: usize, from: usize, nvars: usize, acc: &mut Vec<i64>, out: &mut MPoly) {
        if m == 0 {
            let mut counts: BTreeMap<i64, u32> = BTreeMap::new();
            for &i in acc.iter() {
                *counts.entry(i).or_insert(0) += 1;
            }
            out.add_term(Monomial::from_exps(counts), Q::one());
            return;
        }
        for i in from..=nvars {
            acc.push(i as i64);
            go(m - 1, i, nvars, acc, out);
            acc.pop();
        }
    }
    go(m, 1, nvars, &mut Vec::new(), &mut out);
    out
}

/// Jacobi-Trudi determinant `det(h_{lambda_i - i + j})` in `nvars`
/// variables; the independent route to Schur polynomials.
pub fn jacobi_trudi(lambda: &Partition, nvars: usize) -> MPoly {
    let m = lambda.len();
    if m == 0 {
        return MPoly::one();
    }
    let entry = |i: usize, j: usize| -> MPoly {
        let e = lambda.part(i) as i64 - (i as i64 + 1) + (j as i64 + 1);
        if e < 0 {
            MPoly::zero()
        } else {
            h_poly(e as usize, nvars)
        }
    };
    // Laplace expansion over permutations; shapes stay small
    let mut out = MPoly::zero();
    let mut cols: Vec<usize> = (0..m).collect();
    fn perms(
        k: usize,
        cols: &mut Vec<usize>,
        sign: i32,
        acc: &MPoly,
        entry: &dyn Fn(usize, usize) -> MPoly,
        m: usize,
        out: &mut MPoly,
    ) {
        if k == m {
            let term = if sign > 0 { acc.clone() } else { -acc };
            *out = &*out + &term;
            return;
        }
        for idx in k..m {
            cols.swap(k, idx);
            let e = entry(k, cols[k]);
            if !e.is_zero() {
                let next = acc * &e;
                let s = if idx == k { sign } else { -sign };
                perms(k + 1, cols, s, &next, entry, m, out);
            }
            cols.swap(k, idx);
        }
    }
    perms(0, &mut cols, 1, &MPoly::one(), &entry, m, &mut out);
    out
}

/// Expands a symmetric polynomial in `x_1..x_nvars` into Schur
/// polynomials by repeatedly subtracting the Schur polynomial of the
/// graded-lex leading exponent.
pub fn schur_expand(f: &MPoly, nvars: usize) -> Result<BTreeMap<Partition, Q>> {
    let vars: Vec<i64> = (1..=nvars as i64).collect();
    if f.used_vars().iter().any(|v| !vars.contains(v)) {
        return Err(Error::NotSymmetric { nvars });
    }
    for i in 1..nvars as i64 {
        if f.swap_adjacent(i) != *f {
            return Err(Error::NotSymmetric { nvars });
        }
    }
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let (m, c) = rest
            .terms()
            .max_by(|(m1, _), (m2, _)| {
                let k1 = (m1.degree(), exp_vec(m1, nvars));
                let k2 = (m2.degree(), exp_vec(m2, nvars));
                k1.cmp(&k2)
            })
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero polynomial has a leading term");
        let exps = exp_vec(&m, nvars);
        if exps.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric { nvars });
        }
        let lambda = Partition::new(exps);
        rest = &rest - &schur_ssyt(&lambda, nvars).scale(&c);
        out.insert(lambda, c);
    }
    Ok(out)
}

fn exp_vec(m: &Monomial, nvars: usize) -> Vec<u32> {
    (1..=nvars as i64).map(|i| m.exponent(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q_int, q_ratio};

    #[test]
    fn centralizer_sizes() {
        assert_eq!(z(&Partition::empty()), 1);
        assert_eq!(z(&Partition::new(vec![1, 1])), 2);
        assert_eq!(z(&Partition::new(vec![2, 1])), 2);
        assert_eq!(z(&Partition::new(vec![3, 3, 2])), 36);
    }

    #[test]
    fn h_in_p_basis() {
        assert_eq!(h_to_p(1), SymP::p(Partition::new(vec![1])));
        let h2 = h_to_p(2);
        assert_eq!(h2.coeff(&Partition::new(vec![2])), q_ratio(1, 2));
        assert_eq!(h2.coeff(&Partition::new(vec![1, 1])), q_ratio(1, 2));
        let h3 = h_to_p(3);
        assert_eq!(h3.coeff(&Partition::new(vec![3])), q_ratio(1, 3));
        assert_eq!(h3.coeff(&Partition::new(vec![2, 1])), q_ratio(1, 2));
        assert_eq!(h3.coeff(&Partition::new(vec![1, 1, 1])), q_ratio(1, 6));
        // evaluated h_m matches the direct multiset enumeration
        for m in 1..=5 {
            let vars: Vec<i64> = (1..=3).collect();
            assert_eq!(p_expansion_to_poly(&h_to_p(m), &vars), h_poly(m, 3));
        }
    }

    #[test]
    fn p_evaluation() {
        let p1 = SymP::p(Partition::new(vec![1]));
        assert_eq!(
            p_expansion_to_poly(&p1, &[1, 2]),
            &MPoly::var(1) + &MPoly::var(2)
        );
        let mut f = SymP::zero();
        f.add_term(Partition::new(vec![2]), q_ratio(1, 2));
        f.add_term(Partition::new(vec![1, 1]), q_ratio(1, 2));
        assert_eq!(p_expansion_to_poly(&f, &[1, 2]), h_poly(2, 2));
        let mut g = SymP::p(Partition::new(vec![2]));
        g.add_term(Partition::new(vec![1, 1]), q_int(-1));
        assert_eq!(p_expansion_to_poly(&g, &[1]), MPoly::zero());
    }

    #[test]
    fn schur_small_cases() {
        assert_eq!(
            schur_ssyt(&Partition::new(vec![1]), 2),
            &MPoly::var(1) + &MPoly::var(2)
        );
        let s21 = schur_ssyt(&Partition::new(vec![2, 1]), 2);
        let want = &(&MPoly::var_pow(1, 2) * &MPoly::var(2))
            + &(&MPoly::var(1) * &MPoly::var_pow(2, 2));
        assert_eq!(s21, want);
        assert_eq!(schur_ssyt(&Partition::new(vec![1, 1, 1]), 2), MPoly::zero());
    }

    #[test]
    fn jacobi_trudi_matches_tableaux() {
        assert_eq!(jacobi_trudi(&Partition::empty(), 3), MPoly::one());
        assert_eq!(jacobi_trudi(&Partition::new(vec![2]), 2), h_poly(2, 2));
        assert_eq!(
            jacobi_trudi(&Partition::new(vec![1, 1]), 2),
            &MPoly::var(1) * &MPoly::var(2)
        );
        for lam in crate::partition::partitions_up_to(5) {
            for nvars in 1..=3 {
                assert_eq!(
                    jacobi_trudi(&lam, nvars),
                    schur_ssyt(&lam, nvars),
                    "lambda={lam} nvars={nvars}"
                );
            }
        }
    }

    #[test]
    fn schur_expansion() {
        let f = &MPoly::var(1) * &MPoly::var(2);
        let got = schur_expand(&f, 2).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[&Partition::new(vec![1, 1])], q_int(1));
        // p2 = s2 - s11
        let p2 = power_sum_poly(2, &[1, 2]);
        let got = schur_expand(&p2, 2).unwrap();
        assert_eq!(got[&Partition::new(vec![2])], q_int(1));
        assert_eq!(got[&Partition::new(vec![1, 1])], q_int(-1));
        // round trip on Schur polynomials themselves
        for lam in crate::partition::partitions_up_to(4) {
            if lam.len() > 3 {
                continue;
            }
            let got = schur_expand(&schur_ssyt(&lam, 3), 3).unwrap();
            assert_eq!(got.len(), 1, "lambda={lam}");
            assert_eq!(got[&lam], q_int(1));
        }
        assert!(schur_expand(&MPoly::var(1), 2).is_err());
    }

    #[test]
    fn skew_tableaux() {
        // (2,1)/(1): the two cells share no row or column, so every pair
        // of entries appears and the polynomial is (x1+x2)^2
        let s = schur_ssyt_skew(&Partition::new(vec![2, 1]), &Partition::new(vec![1]), 2).unwrap();
        let h1 = h_poly(1, 2);
        assert_eq!(s, &h1 * &h1);
        assert!(schur_ssyt_skew(&Partition::new(vec![1]), &Partition::new(vec![2]), 2).is_err());
    }
}
