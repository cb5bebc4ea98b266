//! Schubert polynomials and Stanley symmetric functions via increasing
//! factorizations.
//!
//! A permutation is *increasing* when it admits a strictly decreasing
//! reduced word. Schubert polynomials sum over factorizations
//! `w = v_1 ... v_{n-1}` with `v_i` increasing and fixing everything
//! below `i`; Stanley truncations drop the triangularity constraint.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::fock::chi;
use crate::partition::partitions_of;
use crate::perm::Permutation;
use crate::poly::{MPoly, Q};
use crate::ribbon::strong_ribbon_grow;
use crate::symfunc::{power_sum_poly, z_q, SymP};

fn check_len(w: &Permutation, caps: &Caps) -> Result<()> {
    if w.length() > caps.max_len {
        return Err(Error::BoundExceeded {
            what: "length",
            got: w.length(),
            cap: caps.max_len,
        });
    }
    Ok(())
}

/// Enumerates increasing left factors `v` of `u` (letters at least
/// `min_letter`), invoking `f(l(v), remainder)` once per factor.
///
/// Strips left descents in strictly decreasing letter order; every
/// increasing factor has exactly one decreasing reduced word, so each
/// `(v, remainder)` pair is visited once.
fn for_each_increasing_left_factor(
    u: &Permutation,
    min_letter: i64,
    f: &mut impl FnMut(u32, &Permutation),
) {
    fn go(
        cur: &Permutation,
        last: Option<i64>,
        depth: u32,
        min_letter: i64,
        f: &mut impl FnMut(u32, &Permutation),
    ) {
        f(depth, cur);
        for i in cur.left_descents() {
            if i >= min_letter && last.map_or(true, |l| i < l) {
                go(&cur.mul_simple_left(i), Some(i), depth + 1, min_letter, f);
            }
        }
    }
    go(u, None, 0, min_letter, f);
}

/// Schubert polynomial of a positively supported permutation, as the
/// generating function of constrained increasing factorizations.
pub fn schubert_poly(w: &Permutation, caps: &Caps) -> Result<MPoly> {
    if let Some((start, _)) = w.window() {
        if start <= 0 {
            return Err(Error::UnsupportedWindow);
        }
    }
    check_len(w, caps)?;
    let last_factor = match w.window() {
        Some((_, end)) => end - 1,
        None => 0,
    };
    let mut out = MPoly::zero();
    fn rec(i: i64, last_factor: i64, u: &Permutation, mono: &MPoly, out: &mut MPoly) {
        if u.is_identity() {
            *out = &*out + mono;
            return;
        }
        if i > last_factor {
            return;
        }
        for_each_increasing_left_factor(u, i, &mut |len, rest| {
            let scaled = mono * &MPoly::var_pow(i, len);
            rec(i + 1, last_factor, rest, &scaled, out);
        });
    }
    rec(1, last_factor, w, &MPoly::one(), &mut out);
    Ok(out)
}

/// Stanley symmetric polynomial truncated to `nvars` variables:
/// unconstrained increasing factorizations into exactly `nvars` factors.
pub fn stanley_trunc(w: &Permutation, nvars: usize, caps: &Caps) -> Result<MPoly> {
    check_len(w, caps)?;
    let mut out = MPoly::zero();
    fn rec(i: i64, nvars: i64, u: &Permutation, mono: &MPoly, out: &mut MPoly) {
        if u.is_identity() {
            *out = &*out + mono;
            return;
        }
        if i > nvars {
            return;
        }
        for_each_increasing_left_factor(u, i64::MIN, &mut |len, rest| {
            let scaled = mono * &MPoly::var_pow(i, len);
            rec(i + 1, nvars, rest, &scaled, out);
        });
    }
    rec(1, nvars as i64, w, &MPoly::one(), &mut out);
    Ok(out)
}

/// Stanley symmetric function in the power-sum basis:
/// `F_w = sum_alpha chi_w^alpha / z_alpha p_alpha`.
pub fn stanley_p(w: &Permutation, caps: &Caps) -> Result<SymP> {
    check_len(w, caps)?;
    let mut out = SymP::zero();
    for alpha in partitions_of(w.length()) {
        let x = chi(w, &alpha)?;
        if x != 0 {
            out.add_term(alpha.clone(), Q::from_integer(x.into()) / z_q(&alpha));
        }
    }
    Ok(out)
}

/// Dual Murnaghan-Nakayama identity, checked exactly in `nvars`
/// variables: `p_m F_w = sum (-1)^spin F_u` over k-strong-ribbon
/// growths `u` of size `m`.
pub fn dual_mn_check(
    w: &Permutation,
    m: usize,
    k: i64,
    nvars: usize,
    caps: &Caps,
) -> Result<bool> {
    let vars: Vec<i64> = (1..=nvars as i64).collect();
    let lhs_f = stanley_trunc(w, nvars, caps)?;
    let lhs = &power_sum_poly(m as u32, &vars) * &lhs_f;
    let mut rhs = MPoly::zero();
    for sn in strong_ribbon_grow(w, k, m) {
        let f = stanley_trunc(&sn.target, nvars, caps)?;
        rhs = if sn.sign > 0 { &rhs + &f } else { &rhs - &f };
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::perm::{product_word, Word};
    use crate::poly::q_ratio;

    fn pw(letters: &[i64]) -> Permutation {
        product_word(&Word(letters.to_vec()))
    }

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn schubert_small() {
        assert_eq!(
            schubert_poly(&Permutation::identity(), &caps()).unwrap(),
            MPoly::one()
        );
        assert_eq!(
            schubert_poly(&Permutation::simple(1), &caps()).unwrap(),
            MPoly::var(1)
        );
        assert_eq!(
            schubert_poly(&pw(&[2, 1]), &caps()).unwrap(),
            MPoly::var_pow(1, 2)
        );
        assert_eq!(
            schubert_poly(&pw(&[1, 2]), &caps()).unwrap(),
            &MPoly::var(1) * &MPoly::var(2)
        );
        assert!(schubert_poly(&Permutation::simple(0), &caps()).is_err());
    }

    #[test]
    fn schubert_s3_table() {
        // the full S_3 table against classical values
        let s2 = &MPoly::var(1) + &MPoly::var(2);
        assert_eq!(schubert_poly(&pw(&[2]), &caps()).unwrap(), s2);
        let w0 = pw(&[1, 2, 1]);
        let want = &MPoly::var_pow(1, 2) * &MPoly::var(2);
        assert_eq!(schubert_poly(&w0, &caps()).unwrap(), want);
    }

    #[test]
    fn stanley_truncations() {
        assert_eq!(
            stanley_trunc(&Permutation::identity(), 3, &caps()).unwrap(),
            MPoly::one()
        );
        assert_eq!(
            stanley_trunc(&pw(&[1, 2]), 2, &caps()).unwrap(),
            &MPoly::var(1) * &MPoly::var(2)
        );
        assert_eq!(
            stanley_trunc(&pw(&[2, 1]), 2, &caps()).unwrap(),
            crate::symfunc::h_poly(2, 2)
        );
    }

    #[test]
    fn stanley_p_values() {
        assert_eq!(
            stanley_p(&Permutation::identity(), &caps()).unwrap(),
            SymP::one()
        );
        let f = stanley_p(&pw(&[1, 2]), &caps()).unwrap();
        assert_eq!(f.coeff(&Partition::new(vec![1, 1])), q_ratio(1, 2));
        assert_eq!(f.coeff(&Partition::new(vec![2])), q_ratio(-1, 2));
        let g = stanley_p(&pw(&[2, 1]), &caps()).unwrap();
        assert_eq!(g.coeff(&Partition::new(vec![1, 1])), q_ratio(1, 2));
        assert_eq!(g.coeff(&Partition::new(vec![2])), q_ratio(1, 2));
    }

    #[test]
    fn dual_mn_witnesses() {
        assert!(dual_mn_check(&Permutation::identity(), 1, 1, 3, &caps()).unwrap());
        assert!(dual_mn_check(&Permutation::identity(), 2, 1, 3, &caps()).unwrap());
        assert!(dual_mn_check(&Permutation::simple(1), 2, 0, 3, &caps()).unwrap());
    }
}
