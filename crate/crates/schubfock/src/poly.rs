//! Exact sparse polynomials in integer-indexed variables.
//!
//! Variable indices range over all of `Z` (negative indices appear in the
//! back-stable windows), exponents are positive, coefficients are exact
//! rationals. No floating point anywhere.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn q_ratio(num: i64, den: i64) -> Q {
    Q::new(num.into(), den.into())
}

/// A monomial: finitely many variables with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(BTreeMap<i64, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(i: i64) -> Self {
        Monomial(BTreeMap::from([(i, 1)]))
    }

    pub fn var_pow(i: i64, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(BTreeMap::from([(i, e)]))
        }
    }

    pub fn from_exps(exps: impl IntoIterator<Item = (i64, u32)>) -> Self {
        Monomial(exps.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponent(&self, i: i64) -> u32 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.0.iter().map(|(&i, &e)| (i, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (&i, &e) in &other.0 {
            *out.entry(i).or_insert(0) += e;
        }
        Monomial(out)
    }

    pub fn touches(&self, vars: &[i64]) -> bool {
        vars.iter().any(|v| self.0.contains_key(v))
    }

    pub fn map_vars(&self, f: impl Fn(i64) -> i64) -> Monomial {
        let mut out = BTreeMap::new();
        for (&i, &e) in &self.0 {
            let j = f(i);
            *out.entry(j).or_insert(0) += e;
        }
        Monomial(out)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&i, &e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if i < 0 {
                write!(f, "x({i})")?;
            } else {
                write!(f, "x{i}")?;
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with exact rational coefficients; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly(BTreeMap<Monomial, Q>);

impl MPoly {
    pub fn zero() -> Self {
        MPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        MPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MPoly(terms)
    }

    pub fn var(i: i64) -> Self {
        MPoly::monomial(Monomial::var(i), Q::one())
    }

    pub fn var_pow(i: i64, e: u32) -> Self {
        MPoly::monomial(Monomial::var_pow(i, e), Q::one())
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly(terms)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.0.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.0.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// True when every monomial has the same total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.0.keys().all(|m| m.degree() == d)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(m);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get() + c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn scale(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly(self.0.iter().map(|(m, v)| (m.clone(), v * c)).collect())
    }

    /// Kills every monomial touching one of `vars`.
    pub fn substitute_zero(&self, vars: &[i64]) -> MPoly {
        MPoly(
            self.0
                .iter()
                .filter(|(m, _)| !m.touches(vars))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    /// Drops monomials of total degree above `d`.
    pub fn truncate_degree(&self, d: u32) -> MPoly {
        MPoly(
            self.0
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    /// Keeps monomials supported on variables in `[lo, hi]`.
    pub fn retain_window(&self, lo: i64, hi: i64) -> MPoly {
        MPoly(
            self.0
                .iter()
                .filter(|(m, _)| m.exps().all(|(i, _)| lo <= i && i <= hi))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    /// Relabels variables; `f` must be injective on the used indices.
    pub fn map_vars(&self, f: impl Fn(i64) -> i64 + Copy) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.0 {
            out.add_term(m.map_vars(f), c.clone());
        }
        out
    }

    /// Swaps the variables `x_i` and `x_{i+1}`.
    pub fn swap_adjacent(&self, i: i64) -> MPoly {
        self.map_vars(|v| {
            if v == i {
                i + 1
            } else if v == i + 1 {
                i
            } else {
                v
            }
        })
    }

    /// Variables actually appearing.
    pub fn used_vars(&self) -> Vec<i64> {
        let mut vars: Vec<i64> = self
            .0
            .keys()
            .flat_map(|m| m.exps().map(|(i, _)| i))
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|(m, c)| {
                    let exps: serde_json::Map<String, Value> = m
                        .exps()
                        .map(|(i, e)| (i.to_string(), json!(e)))
                        .collect();
                    json!({"coeff": c.to_string(), "exps": exps})
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<MPoly> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("MPoly JSON must be an array".into()))?;
        let mut out = MPoly::zero();
        for t in arr {
            let c = parse_coeff(t.get("coeff"))?;
            let exps = t
                .get("exps")
                .and_then(Value::as_object)
                .ok_or_else(|| Error::Parse("missing exps".into()))?;
            let mut m = Vec::new();
            for (k, e) in exps {
                let i: i64 = k
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable index {k:?}")))?;
                let e = e
                    .as_u64()
                    .ok_or_else(|| Error::Parse("bad exponent".into()))? as u32;
                m.push((i, e));
            }
            out.add_term(Monomial::from_exps(m), c);
        }
        Ok(out)
    }
}

pub(crate) fn parse_coeff(v: Option<&Value>) -> Result<Q> {
    let s = v
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing coeff string".into()))?;
    Q::from_str(s).map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.0 {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.0 {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly(self.0.iter().map(|(m, c)| (m.clone(), -c.clone())).collect())
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &rhs.0 {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.0 {
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
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Exact divided difference `(f - s_i f) / (x_i - x_{i+1})`, computed
/// monomial by monomial via the telescoping identity
/// `(x^a y^b - x^b y^a)/(x - y) = x^b y^b (x^{a-b-1} + ... + y^{a-b-1})`
/// for `a > b`.
pub fn divided_difference(f: &MPoly, i: i64) -> MPoly {
    let mut out = MPoly::zero();
    for (m, c) in f.terms() {
        let a = m.exponent(i);
        let b = m.exponent(i + 1);
        if a == b {
            continue;
        }
        let rest = Monomial::from_exps(m.exps().filter(|&(v, _)| v != i && v != i + 1));
        let (lo, hi, sign) = if a > b { (b, a, 1) } else { (a, b, -1) };
        let span = hi - lo; // >= 1
        for t in 0..span {
            let m2 = rest.mul(&Monomial::from_exps([(i, lo + span - 1 - t), (i + 1, lo + t)]));
            let term = if sign > 0 { c.clone() } else { -c.clone() };
            out.add_term(m2, term);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_ops() {
        let x1 = MPoly::var(1);
        let x2 = MPoly::var(2);
        let lhs = &(&x1 + &x2) * &(&x1 - &x2);
        let rhs = &(&x1 * &x1) - &(&x2 * &x2);
        assert_eq!(lhs, rhs);
        let f = &(&x1 * &x2) + &x1;
        assert_eq!(f.substitute_zero(&[2]), x1);
        assert_eq!(f.truncate_degree(1), x1);
        assert_eq!(f.coeff(&Monomial::from_exps([(1, 1), (2, 1)])), q_int(1));
    }

    #[test]
    fn divided_difference_basics() {
        assert_eq!(divided_difference(&MPoly::var(1), 1), MPoly::one());
        let x1x2 = &MPoly::var(1) * &MPoly::var(2);
        assert_eq!(divided_difference(&x1x2, 1), MPoly::zero());
        assert_eq!(divided_difference(&x1x2, 2), MPoly::var(1));
        // del_i of x_{i+1} is -1
        assert_eq!(
            divided_difference(&MPoly::var(2), 1),
            MPoly::constant(q_int(-1))
        );
        // del squared is zero
        let f = &(&x1x2 * &MPoly::var(1)) + &MPoly::var_pow(2, 3);
        let once = divided_difference(&f, 1);
        assert_eq!(divided_difference(&once, 1), MPoly::zero());
    }

    #[test]
    fn json_round_trip() {
        let f = &(&MPoly::var(-1) * &MPoly::var(2)).scale(&q_ratio(3, 2)) - &MPoly::one();
        let js = f.to_json();
        assert_eq!(MPoly::from_json(&js).unwrap(), f);
    }

    #[test]
    fn display_reads_well() {
        let f = &(&MPoly::var(1) * &MPoly::var(1)) - &MPoly::var(-2);
        assert_eq!(f.to_string(), "-x(-2) + x1^2");
    }
}
