//! Fock spaces and the Heisenberg operators acting on them.
//!
//! The space spanned by finitely supported permutations carries two
//! families of operators: `alpha_plus(n)` strips weak ribbons of size `n`
//! (annihilation), and `alpha_minus(n, k)` grows k-strong ribbons of size
//! `n` (creation). Together they satisfy the relations of the enlarged
//! Heisenberg algebra, and the exponential of the positive half is the
//! transfer matrix of the fermionic time evolution.
//!
//! The classical story on partitions (ribbon operators, horizontal-strip
//! transfer, skew Schur functions) lives here too, acting on
//! [`YoungVector`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::{grassmannian_partition, Permutation};
use crate::poly::{parse_coeff, MPoly, Monomial, Q};
use crate::ribbon::{ribbon_strips, strong_ribbon_grow};
use crate::symfunc::z_q;

/// Finite rational linear combination of basis permutations.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FockVector(BTreeMap<Permutation, Q>);

impl FockVector {
    pub fn zero() -> Self {
        FockVector(BTreeMap::new())
    }

    pub fn basis(w: Permutation) -> Self {
        FockVector(BTreeMap::from([(w, Q::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Q)> {
        self.0.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> Q {
        self.0.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, w: Permutation, c: Q) {
        if c.is_zero() {
            return;
        }
        let v = self.coeff(&w) + c;
        if v.is_zero() {
            self.0.remove(&w);
        } else {
            self.0.insert(w, v);
        }
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (w, c) in &other.0 {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (w, c) in &other.0 {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> FockVector {
        if c.is_zero() {
            return FockVector::zero();
        }
        FockVector(self.0.iter().map(|(w, v)| (w.clone(), v * c)).collect())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|(w, c)| json!({"perm": w, "coeff": c.to_string()}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<FockVector> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("FockVector JSON must be an array".into()))?;
        let mut out = FockVector::zero();
        for t in arr {
            let w: Permutation = serde_json::from_value(
                t.get("perm")
                    .cloned()
                    .ok_or_else(|| Error::Parse("missing perm".into()))?,
            )
            .map_err(|e| Error::Parse(e.to_string()))?;
            out.add_term(w, parse_coeff(t.get("coeff"))?);
        }
        Ok(out)
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.0 {
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
            if a.is_one() {
                write!(f, "|{w}>")?;
            } else {
                write!(f, "{a}|{w}>")?;
            }
        }
        Ok(())
    }
}

/// Finite rational linear combination of partitions (the classical Fock
/// space).
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct YoungVector(BTreeMap<Partition, Q>);

impl YoungVector {
    pub fn zero() -> Self {
        YoungVector(BTreeMap::new())
    }

    pub fn basis(lambda: Partition) -> Self {
        YoungVector(BTreeMap::from([(lambda, Q::one())]))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.0.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Q {
        self.0.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        let v = self.coeff(&lambda) + c;
        if v.is_zero() {
            self.0.remove(&lambda);
        } else {
            self.0.insert(lambda, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// Annihilation: strips weak ribbons of size `n`, extended linearly.
pub fn alpha_plus(n: usize, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (w, c) in v.terms() {
        for sn in ribbon_strips(w, n) {
            out.add_term(sn.target, c * Q::from_integer(sn.sign.into()));
        }
    }
    out
}

/// Creation: grows k-strong ribbons of size `n`, extended linearly.
pub fn alpha_minus(n: usize, k: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (w, c) in v.terms() {
        for sn in strong_ribbon_grow(w, k, n) {
            out.add_term(sn.target, c * Q::from_integer(sn.sign.into()));
        }
    }
    out
}

/// The classical boson on partitions: `m > 0` removes `m`-ribbons,
/// `m < 0` adds `|m|`-ribbons, both signed by `(-1)^(height-1)`.
pub fn young_alpha(m: i64, v: &YoungVector) -> YoungVector {
    let mut out = YoungVector::zero();
    if m == 0 {
        return v.clone();
    }
    for (lam, c) in v.terms() {
        let moves = if m > 0 {
            lam.remove_ribbons(m as u32)
        } else {
            lam.add_ribbons((-m) as u32)
        };
        for (mu, crossed) in moves {
            let sign = if crossed % 2 == 0 { 1 } else { -1 };
            out.add_term(mu, c * Q::from_integer(sign.into()));
        }
    }
    out
}

/// One fermionic time step: entry `(u, d)` is 1 exactly when `w = v . u`
/// length-additively with `v` increasing of length `d`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedOperatorImage {
    rows: BTreeMap<(Permutation, u32), Q>,
}

impl GradedOperatorImage {
    pub fn entries(&self) -> impl Iterator<Item = (&(Permutation, u32), &Q)> {
        self.rows.iter()
    }

    pub fn entry(&self, u: &Permutation, d: u32) -> Q {
        self.rows
            .get(&(u.clone(), d))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    /// The image as polynomials in a single variable `x_var`.
    pub fn poly_map(&self, var: i64) -> BTreeMap<Permutation, MPoly> {
        let mut out: BTreeMap<Permutation, MPoly> = BTreeMap::new();
        for ((u, d), c) in &self.rows {
            out.entry(u.clone())
                .or_insert_with(MPoly::zero)
                .add_term(Monomial::var_pow(var, *d), c.clone());
        }
        out
    }
}

/// All factorizations `w = v . u` with `v` increasing, graded by
/// `l(v)`.
///
/// Strips left descents in strictly decreasing letter order; each
/// endpoint arises from exactly one increasing factor, so entries are
/// 0/1.
pub fn transfer_row(w: &Permutation) -> GradedOperatorImage {
    let mut rows = BTreeMap::new();
    let mut stack: Vec<(Permutation, Option<i64>, u32)> = vec![(w.clone(), None, 0)];
    while let Some((cur, last, depth)) = stack.pop() {
        let fresh = rows
            .insert((cur.clone(), depth), Q::one())
            .is_none();
        debug_assert!(fresh, "duplicate endpoint in transfer enumeration");
        for i in cur.left_descents() {
            if last.map_or(true, |l| i < l) {
                stack.push((cur.mul_simple_left(i), Some(i), depth + 1));
            }
        }
    }
    GradedOperatorImage { rows }
}

/// Iterated transfer with spectral variable `x_i` on row `i`: the
/// coefficient of `u` is the skew Stanley polynomial in `nvars`
/// variables.
pub fn skew_stanley_via_transfer(w: &Permutation, u: &Permutation, nvars: usize) -> MPoly {
    let mut state: BTreeMap<Permutation, MPoly> = BTreeMap::from([(w.clone(), MPoly::one())]);
    let mut cache: HashMap<Permutation, GradedOperatorImage> = HashMap::new();
    for j in 1..=nvars as i64 {
        let mut next: BTreeMap<Permutation, MPoly> = BTreeMap::new();
        for (p, poly) in &state {
            let image = cache
                .entry(p.clone())
                .or_insert_with(|| transfer_row(p));
            for ((t, d), c) in image.entries() {
                let contrib = poly.scale(c);
                let contrib = &contrib * &MPoly::var_pow(j, *d);
                let slot = next.entry(t.clone()).or_insert_with(MPoly::zero);
                *slot = &*slot + &contrib;
            }
        }
        state = next;
    }
    state.get(u).cloned().unwrap_or_else(MPoly::zero)
}

/// The degree-`d` coefficient operator of `exp(sum_i x^i/i alpha_i)`:
/// `sum_{sigma |- d} alpha_sigma / z_sigma`, exact because the series is
/// locally nilpotent in degree.
fn exp_layer(d: usize, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for sigma in partitions_of(d) {
        let mut cur = v.clone();
        for &part in sigma.parts() {
            cur = alpha_plus(part as usize, &cur);
            if cur.is_zero() {
                break;
            }
        }
        out = out.add(&cur.scale(&(Q::one() / z_q(&sigma))));
    }
    out
}

/// Applies `exp(sum_{i>0} x_j^i/i alpha_i)` for `j = 1..=nvars` to `|w>`,
/// returning the polynomial coefficient of every basis permutation.
pub fn exp_hamiltonian_apply(w: &Permutation, nvars: usize) -> BTreeMap<Permutation, MPoly> {
    let mut state: BTreeMap<Permutation, MPoly> = BTreeMap::from([(w.clone(), MPoly::one())]);
    for j in 1..=nvars as i64 {
        let mut next: BTreeMap<Permutation, MPoly> = BTreeMap::new();
        for (p, poly) in &state {
            for d in 0..=p.length() {
                let layer = exp_layer(d, &FockVector::basis(p.clone()));
                for (t, c) in layer.terms() {
                    let contrib = poly.scale(c);
                    let contrib = &contrib * &MPoly::var_pow(j, d as u32);
                    let slot = next.entry(t.clone()).or_insert_with(MPoly::zero);
                    *slot = &*slot + &contrib;
                }
            }
        }
        state = next;
    }
    state
}

/// Signed count of weak-ribbon factorizations of `w` with factor sizes
/// `alpha`; the character of the Stanley symmetric function.
pub fn chi(w: &Permutation, alpha: &Partition) -> Result<i64> {
    if alpha.size() != w.length() {
        return Err(Error::SizeMismatch {
            got: alpha.size(),
            expected: w.length(),
        });
    }
    let mut cur = FockVector::basis(w.clone());
    for &part in alpha.parts() {
        cur = alpha_plus(part as usize, &cur);
        if cur.is_zero() {
            return Ok(0);
        }
    }
    let c = cur.coeff(&Permutation::identity());
    debug_assert!(c.is_integer(), "chi must be an integer");
    Ok(i64::try_from(c.to_integer()).expect("chi fits in i64"))
}

/// The Stanley operator `F_w^(k) = sum_sigma chi_w^sigma / z_sigma
/// alpha_{-sigma,k}` applied to a vector.
pub fn stanley_op_apply(w: &Permutation, k: i64, v: &FockVector) -> Result<FockVector> {
    let mut out = FockVector::zero();
    for sigma in partitions_of(w.length()) {
        let x = chi(w, &sigma)?;
        if x == 0 {
            continue;
        }
        let mut cur = v.clone();
        for &part in sigma.parts() {
            cur = alpha_minus(part as usize, k, &cur);
        }
        out = out.add(&cur.scale(&(Q::from_integer(x.into()) / z_q(&sigma))));
    }
    Ok(out)
}

/// The adjoint Stanley operator, composed from positive modes.
pub fn stanley_adjoint_apply(w: &Permutation, v: &FockVector) -> Result<FockVector> {
    let mut out = FockVector::zero();
    for sigma in partitions_of(w.length()) {
        let x = chi(w, &sigma)?;
        if x == 0 {
            continue;
        }
        let mut cur = v.clone();
        for &part in sigma.parts() {
            cur = alpha_plus(part as usize, &cur);
        }
        out = out.add(&cur.scale(&(Q::from_integer(x.into()) / z_q(&sigma))));
    }
    Ok(out)
}

/// Edelman-Greene coefficients, read off `F_w^(k)|id>`: every surviving
/// basis vector must be k-Grassmannian with a nonnegative integer
/// coefficient.
pub fn eg_coeffs(w: &Permutation, k: i64) -> Result<BTreeMap<Partition, i64>> {
    let image = stanley_op_apply(w, k, &FockVector::basis(Permutation::identity()))?;
    let mut out = BTreeMap::new();
    for (u, c) in image.terms() {
        let lam = grassmannian_partition(u, k)
            .map_err(|_| Error::NonGrassmannianSupport(u.to_string()))?;
        if !c.is_integer() || c.is_negative() {
            return Err(Error::NonIntegralCoefficient(format!("{c} at {u}")));
        }
        out.insert(
            lam,
            i64::try_from(c.to_integer()).expect("EG coefficient fits in i64"),
        );
    }
    Ok(out)
}

/// Skew Schur polynomial by the classical five-vertex transfer matrix:
/// each step removes a horizontal strip with weight `x_i^(cells)`.
pub fn schur_via_fermions(lambda: &Partition, mu: &Partition, nvars: usize) -> Result<MPoly> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    let mut state: BTreeMap<Partition, MPoly> = BTreeMap::from([(lambda.clone(), MPoly::one())]);
    for j in 1..=nvars as i64 {
        let mut next: BTreeMap<Partition, MPoly> = BTreeMap::new();
        for (lam, poly) in &state {
            for pred in lam.horizontal_strip_predecessors() {
                let d = (lam.size() - pred.size()) as u32;
                let contrib = poly * &MPoly::var_pow(j, d);
                let slot = next.entry(pred).or_insert_with(MPoly::zero);
                *slot = &*slot + &contrib;
            }
        }
        state = next;
    }
    Ok(state.get(mu).cloned().unwrap_or_else(MPoly::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{product_word, Word};
    use crate::poly::q_int;

    fn pw(letters: &[i64]) -> Permutation {
        product_word(&Word(letters.to_vec()))
    }

    fn basis(letters: &[i64]) -> FockVector {
        FockVector::basis(pw(letters))
    }

    #[test]
    fn alpha_plus_examples() {
        assert_eq!(alpha_plus(1, &basis(&[1])), basis(&[]));
        assert_eq!(alpha_plus(2, &basis(&[1, 2])), basis(&[]).scale(&q_int(-1)));
        assert_eq!(alpha_plus(2, &basis(&[2, 1])), basis(&[]));
    }

    #[test]
    fn alpha_minus_examples() {
        assert_eq!(alpha_minus(1, 1, &basis(&[])), basis(&[1]));
        let got = alpha_minus(2, 1, &basis(&[]));
        let want = basis(&[2, 1]).sub(&basis(&[0, 1]));
        assert_eq!(got, want);
        assert_eq!(alpha_minus(1, 0, &basis(&[])), basis(&[0]));
    }

    #[test]
    fn young_ribbon_operators() {
        let vac = YoungVector::basis(Partition::empty());
        assert_eq!(
            young_alpha(-1, &vac),
            YoungVector::basis(Partition::new(vec![1]))
        );
        let two = young_alpha(-2, &vac);
        assert_eq!(two.coeff(&Partition::new(vec![2])), q_int(1));
        assert_eq!(two.coeff(&Partition::new(vec![1, 1])), q_int(-1));
        assert_eq!(
            young_alpha(2, &YoungVector::basis(Partition::new(vec![2]))),
            vac
        );
    }

    #[test]
    fn transfer_row_grading() {
        let id_row = transfer_row(&Permutation::identity());
        assert_eq!(id_row.entry(&Permutation::identity(), 0), q_int(1));
        assert_eq!(id_row.entries().count(), 1);

        // s2 s1 strips through s1 down to the identity
        let row = transfer_row(&pw(&[2, 1]));
        assert_eq!(row.entry(&pw(&[2, 1]), 0), q_int(1));
        assert_eq!(row.entry(&pw(&[1]), 1), q_int(1));
        assert_eq!(row.entry(&Permutation::identity(), 2), q_int(1));
        assert_eq!(row.entries().count(), 3);

        // s1 s2 has no increasing factor of size 2
        let row = transfer_row(&pw(&[1, 2]));
        assert_eq!(row.entry(&pw(&[1, 2]), 0), q_int(1));
        assert_eq!(row.entry(&pw(&[2]), 1), q_int(1));
        assert_eq!(row.entries().count(), 2);
    }

    #[test]
    fn skew_stanley_examples() {
        let w = pw(&[1, 2]);
        assert_eq!(skew_stanley_via_transfer(&w, &w, 2), MPoly::one());
        assert_eq!(
            skew_stanley_via_transfer(&pw(&[1, 2]), &Permutation::identity(), 2),
            &MPoly::var(1) * &MPoly::var(2)
        );
        let s2 = crate::symfunc::h_poly(2, 2);
        assert_eq!(
            skew_stanley_via_transfer(&pw(&[2, 1]), &Permutation::identity(), 2),
            s2
        );
    }

    #[test]
    fn exp_hamiltonian_examples() {
        let out = exp_hamiltonian_apply(&Permutation::identity(), 1);
        assert_eq!(out.len(), 1);
        assert_eq!(out[&Permutation::identity()], MPoly::one());

        let out = exp_hamiltonian_apply(&pw(&[1, 2]), 1);
        assert!(!out.contains_key(&Permutation::identity()));

        let out = exp_hamiltonian_apply(&pw(&[2, 1]), 1);
        assert_eq!(out[&Permutation::identity()], MPoly::var_pow(1, 2));
    }

    #[test]
    fn chi_values() {
        assert_eq!(chi(&Permutation::identity(), &Partition::empty()).unwrap(), 1);
        assert_eq!(chi(&pw(&[1, 2]), &Partition::new(vec![2])).unwrap(), -1);
        assert_eq!(chi(&pw(&[1, 2]), &Partition::new(vec![1, 1])).unwrap(), 1);
        assert_eq!(chi(&pw(&[2, 1]), &Partition::new(vec![2])).unwrap(), 1);
        assert!(chi(&pw(&[1]), &Partition::new(vec![2])).is_err());
    }

    #[test]
    fn stanley_operator_examples() {
        let id = FockVector::basis(Permutation::identity());
        assert_eq!(
            stanley_op_apply(&Permutation::identity(), 2, &id).unwrap(),
            id
        );
        assert_eq!(stanley_op_apply(&pw(&[1, 2]), 1, &id).unwrap(), basis(&[0, 1]));
        assert_eq!(stanley_op_apply(&pw(&[2, 1]), 1, &id).unwrap(), basis(&[2, 1]));
    }

    #[test]
    fn adjoint_examples() {
        let w = basis(&[2, 1]);
        assert_eq!(
            stanley_adjoint_apply(&Permutation::identity(), &w).unwrap(),
            w
        );
        assert_eq!(
            stanley_adjoint_apply(&pw(&[1, 2]), &basis(&[1, 2])).unwrap(),
            basis(&[])
        );
        // alpha_1 strips the left descent of s2 s1, landing on s1
        assert_eq!(
            stanley_adjoint_apply(&pw(&[1]), &basis(&[2, 1])).unwrap(),
            basis(&[1])
        );
    }

    #[test]
    fn eg_examples() {
        let got = eg_coeffs(&Permutation::identity(), 0).unwrap();
        assert_eq!(got, BTreeMap::from([(Partition::empty(), 1)]));
        assert_eq!(
            eg_coeffs(&pw(&[1, 2]), 1).unwrap(),
            BTreeMap::from([(Partition::new(vec![1, 1]), 1)])
        );
        assert_eq!(
            eg_coeffs(&pw(&[2, 1]), 1).unwrap(),
            BTreeMap::from([(Partition::new(vec![2]), 1)])
        );
    }

    #[test]
    fn classical_transfer() {
        let lam = Partition::new(vec![3, 1]);
        assert_eq!(
            schur_via_fermions(&lam, &lam, 2).unwrap(),
            MPoly::one()
        );
        let s = schur_via_fermions(&lam, &Partition::empty(), 2).unwrap();
        let fig5 = Monomial::from_exps([(1, 3), (2, 1)]);
        assert_eq!(s.coeff(&fig5), q_int(1));
        assert_eq!(
            schur_via_fermions(&Partition::new(vec![1, 1]), &Partition::empty(), 2).unwrap(),
            &MPoly::var(1) * &MPoly::var(2)
        );
        assert!(schur_via_fermions(&Partition::new(vec![1]), &Partition::new(vec![2]), 2).is_err());
    }

    #[test]
    fn fock_vector_json() {
        let v = basis(&[1, 2]).scale(&crate::poly::q_ratio(-3, 2)).add(&basis(&[0]));
        let js = v.to_json();
        assert_eq!(FockVector::from_json(&js).unwrap(), v);
    }
}
