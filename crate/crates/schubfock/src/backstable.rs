//! Back-stable Schubert polynomials and the boson-fermion isomorphism.
//!
//! Elements of the back-symmetric ring are stored in the basis
//! `p_alpha^{<=0} (x) x^m`: a power-sum in the nonpositive variables times
//! an honest monomial. The back-stable Schubert polynomial of `w` sums
//! `F_u^{<=0} * S_v` over length-additive factorizations `w = u . v`
//! whose polynomial factor `v` avoids `s_0`; the map `w -> S̄_w`
//! intertwines the Heisenberg actions on the two sides.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::fock::{alpha_minus, alpha_plus, FockVector};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::poly::{parse_coeff, MPoly, Monomial, Q};
use crate::schubert::{schubert_poly, stanley_p};
use crate::symfunc::{p_expansion_to_poly, SymP};

/// Element of `Lambda^{<=0} (x) Q[x_Z]` in the basis
/// `p_alpha^{<=0} (x) x^m`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BSym(BTreeMap<(Partition, Monomial), Q>);

impl BSym {
    pub fn zero() -> Self {
        BSym(BTreeMap::new())
    }

    pub fn one() -> Self {
        BSym(BTreeMap::from([(
            (Partition::empty(), Monomial::one()),
            Q::one(),
        )]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Monomial), &Q)> {
        self.0.iter()
    }

    pub fn coeff(&self, alpha: &Partition, m: &Monomial) -> Q {
        self.0
            .get(&(alpha.clone(), m.clone()))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, alpha: Partition, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let key = (alpha, m);
        let v = self.0.get(&key).cloned().unwrap_or_else(Q::zero) + c;
        if v.is_zero() {
            self.0.remove(&key);
        } else {
            self.0.insert(key, v);
        }
    }

    pub fn add(&self, other: &BSym) -> BSym {
        let mut out = self.clone();
        for ((a, m), c) in &other.0 {
            out.add_term(a.clone(), m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> BSym {
        if c.is_zero() {
            return BSym::zero();
        }
        BSym(
            self.0
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        )
    }

    /// Product of a symmetric part (in the p-basis) and a finite
    /// polynomial, expanded into basis terms.
    pub fn from_parts(sym: &SymP, poly: &MPoly) -> BSym {
        let mut out = BSym::zero();
        for (alpha, c) in sym.terms() {
            for (m, d) in poly.terms() {
                out.add_term(alpha.clone(), m.clone(), c * d);
            }
        }
        out
    }

    /// Multiplies by `p_n^{<=0}` (appends a part).
    pub fn mul_p0(&self, n: u32) -> BSym {
        let mut out = BSym::zero();
        for ((a, m), c) in &self.0 {
            out.add_term(a.with_part(n), m.clone(), c.clone());
        }
        out
    }

    /// Multiplies by the monomial `x_i^n`.
    pub fn mul_var_pow(&self, i: i64, n: u32) -> BSym {
        let mut out = BSym::zero();
        let xm = Monomial::var_pow(i, n);
        for ((a, m), c) in &self.0 {
            out.add_term(a.clone(), m.mul(&xm), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|((a, m), c)| {
                    let exps: serde_json::Map<String, Value> = m
                        .exps()
                        .map(|(i, e)| (i.to_string(), json!(e)))
                        .collect();
                    json!({"p": a.parts(), "exps": exps, "coeff": c.to_string()})
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<BSym> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("BSym JSON must be an array".into()))?;
        let mut out = BSym::zero();
        for t in arr {
            let parts: Vec<u32> = t
                .get("p")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("missing p".into()))?
                .iter()
                .map(|x| x.as_u64().map(|u| u as u32))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse("bad part".into()))?;
            let exps = t
                .get("exps")
                .and_then(Value::as_object)
                .ok_or_else(|| Error::Parse("missing exps".into()))?;
            let mut mono = Vec::new();
            for (k, e) in exps {
                let i: i64 = k
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable index {k:?}")))?;
                let e = e
                    .as_u64()
                    .ok_or_else(|| Error::Parse("bad exponent".into()))? as u32;
                mono.push((i, e));
            }
            out.add_term(
                Partition::new(parts),
                Monomial::from_exps(mono),
                parse_coeff(t.get("coeff"))?,
            );
        }
        Ok(out)
    }
}

impl fmt::Debug for BSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, m), c) in &self.0 {
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
            let mut pieces: Vec<String> = Vec::new();
            if !v.is_one() || (a.is_empty() && m.is_one()) {
                pieces.push(v.to_string());
            }
            if !a.is_empty() {
                pieces.push(format!("p{a}"));
            }
            if !m.is_one() {
                pieces.push(m.to_string());
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

/// Conjugation by the mirror `i -> 1 - i`.
fn omega(v: &Permutation) -> Permutation {
    let (s, e) = match v.window() {
        Some(w) => w,
        None => return Permutation::identity(),
    };
    let images = (1 - e..=1 - s).map(|i| 1 - v.apply(1 - i)).collect();
    Permutation::from_window(1 - e, images).expect("mirror of a permutation window")
}

/// Splits a member of the subgroup avoiding `s_0` into its nonpositive
/// and positive parts.
pub fn split_s_neq0(v: &Permutation) -> Result<(Permutation, Permutation)> {
    if !v.in_s_neq0() {
        return Err(Error::NotInSNeq0);
    }
    let (s, e) = match v.window() {
        Some(w) => w,
        None => return Ok((Permutation::identity(), Permutation::identity())),
    };
    let minus = if s <= 0 {
        let hi = e.min(0);
        Permutation::from_window(s, (s..=hi).map(|i| v.apply(i)).collect())
            .expect("nonpositive part is a permutation")
    } else {
        Permutation::identity()
    };
    let plus = if e >= 1 {
        let lo = s.max(1);
        Permutation::from_window(lo, (lo..=e).map(|i| v.apply(i)).collect())
            .expect("positive part is a permutation")
    } else {
        Permutation::identity()
    };
    Ok((minus, plus))
}

/// Schubert polynomial of a member of the subgroup avoiding `s_0`. The
/// positive part uses ordinary Schubert polynomials; the nonpositive part
/// is mirrored through `i -> 1 - i`, relabelled `x_j -> x_{1-j}`, and
/// weighted by `(-1)^length`. The convention is pinned by the forced
/// value for `s_{-1}` and validated wholesale against the shift-limit
/// oracle.
pub fn schubert_neq0(v: &Permutation, caps: &Caps) -> Result<MPoly> {
    let (minus, plus) = split_s_neq0(v)?;
    let pos = schubert_poly(&plus, caps)?;
    let neg = schubert_poly(&omega(&minus), caps)?.map_vars(|j| 1 - j);
    let sign = if minus.length() % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    };
    Ok((&pos * &neg).scale(&sign))
}

/// All length-additive left factors `u` of `w` (each pairs with the
/// remainder `v = u^{-1} w`).
fn left_factors(w: &Permutation) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut stack = vec![w.clone()];
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        for i in cur.right_descents() {
            stack.push(cur.mul_simple_right(i));
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    out
}

/// Back-stable Schubert polynomial via the coproduct formula: over
/// factorizations `w = u . v` with `v` avoiding `s_0`, add
/// `F_u^{<=0} * S_v`.
pub fn backstable(w: &Permutation, caps: &Caps) -> Result<BSym> {
    let mut out = BSym::zero();
    for u in left_factors(w) {
        let v = u.inverse().compose(w);
        if !v.in_s_neq0() {
            continue;
        }
        let sym = stanley_p(&u, caps)?;
        let poly = schubert_neq0(&v, caps)?;
        out = out.add(&BSym::from_parts(&sym, &poly));
    }
    Ok(out)
}

/// Linear extension of [`backstable`] to vectors.
pub fn backstable_vec(v: &FockVector, caps: &Caps) -> Result<BSym> {
    let mut out = BSym::zero();
    for (w, c) in v.terms() {
        out = out.add(&backstable(w, caps)?.scale(c));
    }
    Ok(out)
}

/// Honest truncation: `p_alpha^{<=0}` evaluates in `x_{-N}..x_0`, and a
/// monomial survives only if supported in `[-N, M]`.
pub fn eval_window(f: &BSym, window_n: usize, window_m: usize) -> MPoly {
    let neg_vars: Vec<i64> = (-(window_n as i64)..=0).collect();
    let lo = -(window_n as i64);
    let hi = window_m as i64;
    let mut out = MPoly::zero();
    for ((alpha, m), c) in f.terms() {
        if !m.exps().all(|(i, _)| lo <= i && i <= hi) {
            continue;
        }
        let sym = p_expansion_to_poly(&SymP::p(alpha.clone()), &neg_vars);
        let term = &sym * &MPoly::monomial(m.clone(), c.clone());
        out = &out + &term;
    }
    out
}

/// Shift-limit oracle for back-stable polynomials: Schubert polynomials
/// of `tau^m(w)` relabelled back by `m`, truncated to the window, with
/// convergence declared after two consecutive agreements.
pub fn backstable_window_oracle(
    w: &Permutation,
    window_n: usize,
    window_m: usize,
    caps: &Caps,
) -> Result<MPoly> {
    let n = window_n as i64;
    let start_shift = match w.window() {
        Some((s, _)) => (n + 1).max(1 - s),
        None => n + 1,
    };
    let cutoff = start_shift + w.length() as i64 + 4;
    let mut prev: Option<MPoly> = None;
    let mut shift = start_shift;
    loop {
        if shift > cutoff {
            return Err(Error::NoConvergence { cutoff });
        }
        let poly = schubert_poly(&w.tau(shift), caps)?;
        let val = poly
            .map_vars(|j| j - shift)
            .retain_window(-n, window_m as i64);
        if prev.as_ref() == Some(&val) {
            return Ok(val);
        }
        prev = Some(val);
        shift += 1;
    }
}

/// Projection onto the symmetric tensor factor: keeps terms with empty
/// monomial.
pub fn eta0(f: &BSym) -> SymP {
    let mut out = SymP::zero();
    for ((alpha, m), c) in f.terms() {
        if m.is_one() {
            out.add_term(alpha.clone(), c.clone());
        }
    }
    out
}

/// `n * d/d(p_n^{<=0})` in the basis: a term with `c` copies of part `n`
/// maps to `n * c` times the term with one copy removed.
pub fn b_alpha_plus(n: u32, f: &BSym) -> BSym {
    let mut out = BSym::zero();
    for ((alpha, m), c) in f.terms() {
        let mult = alpha.parts().iter().filter(|&&p| p == n).count() as i64;
        if mult == 0 {
            continue;
        }
        let reduced = alpha.without_part(n).expect("part is present");
        out.add_term(
            reduced,
            m.clone(),
            c * Q::from_integer((n as i64 * mult).into()),
        );
    }
    out
}

/// Multiplication by `p_n^{<=k} = p_n^{<=0} + sum_{0 < i <= k} x_i^n`
/// (resp. minus the tail for `k < 0`).
pub fn b_alpha_minus(n: u32, k: i64, f: &BSym) -> BSym {
    let mut out = f.mul_p0(n);
    if k >= 0 {
        for i in 1..=k {
            out = out.add(&f.mul_var_pow(i, n));
        }
    } else {
        for i in (k + 1)..=0 {
            out = out.add(&f.mul_var_pow(i, n).scale(&-Q::one()));
        }
    }
    out
}

/// Checks that `w -> S̄_w` intertwines both Heisenberg actions at the
/// given mode `n` and column `k`.
pub fn psi_check(w: &Permutation, n: usize, k: i64, caps: &Caps) -> Result<bool> {
    let bw = backstable(w, caps)?;
    let basis = FockVector::basis(w.clone());

    let lhs_plus = backstable_vec(&alpha_plus(n, &basis), caps)?;
    let rhs_plus = b_alpha_plus(n as u32, &bw);
    if lhs_plus != rhs_plus {
        return Ok(false);
    }

    let lhs_minus = backstable_vec(&alpha_minus(n, k, &basis), caps)?;
    let rhs_minus = b_alpha_minus(n as u32, k, &bw);
    Ok(lhs_minus == rhs_minus)
}
