//! Closed forms of the Andrews-type family: the base q-Watson formula, the
//! two unity sums, the rearrangement relations, Theorems 1 and 2 and their
//! corollaries.
//!
//! Every function takes a `tw` exponent shift. It is zero for the faithful
//! formula; the mutation harness passes 1 to perturb one documented exponent.

use num_traits::{One, Zero};

use crate::error::EvalError;
use crate::exact::{
    choose2, div_one_minus, poch_fraction, qbinom, qp, qpoch_desc, sign_pow, Rational,
};
use crate::point::ParamPoint;
use crate::series::{phi_eval_checked, weighted_sum};

use super::lhs::andrews_inner_series;
use super::{Parity, ParityCase};

/// `c^s (q, q^2 a/c; q^2)_s / (q^2 a, qc; q^2)_s` for `n = 2s`, zero for odd `n`.
/// Mutation: `c^s -> c^{s+1}`.
pub(crate) fn andrews(p: &ParamPoint, tw: i64) -> Result<Rational, EvalError> {
    let ParityCase { s, parity } = ParityCase::of(p.n());
    if parity == Parity::Odd {
        return Ok(Rational::zero());
    }
    let (q, a, c) = (p.q(), p.a(), p.c());
    let q2 = q * q;
    Ok(qp(&c, s as i64 + tw)
        * poch_fraction(&[q.clone(), &q2 * &a / &c], &[&q2 * &a, q * &c], &q2, s)?)
}

/// Summand of the first unity sum at cutoff `k`.
/// Mutation: `q^{(i+eps-1)i} -> q^{(i+eps-1)i+1}`.
fn unity_a_term(p: &ParamPoint, k: usize, i: i64, tw: i64) -> Result<Rational, EvalError> {
    let binom = qbinom(k, i, p.q());
    if binom.is_zero() {
        return Ok(binom);
    }
    let (q, c) = (p.q(), p.c());
    let (e, iu) = (p.eps() as i64, i as usize);
    let k = k as i64;
    let mut t = binom * qp(q, (i + e - 1) * i + tw) * qp(&c, i);
    t *= poch_fraction(&[&c * qp(q, k + i)], &[&c * qp(q, i)], q, p.eps() - iu)?;
    if i > 0 {
        let num = Rational::one() - &c * qp(q, 2 * i - 1);
        t *= div_one_minus(num, &(&c * qp(q, i - 1)))?;
    }
    t *= poch_fraction(&[qp(q, -e)], &[qp(q, e) * &c], q, iu)?;
    Ok(t)
}

/// Summand of the second unity sum at cutoff `k`.
/// Mutation: `q^{eps + C(i,2)} -> q^{eps + C(i,2) + 1}`.
fn unity_b_term(p: &ParamPoint, k: usize, i: i64, tw: i64) -> Result<Rational, EvalError> {
    let (q, c, sc) = (p.q(), p.c(), p.sqrt_c());
    let (e, iu) = (p.eps() as i64, i as usize);
    let k = k as i64;
    let ascending = qpoch_desc(&qp(q, k), q, iu)?;
    if ascending.is_zero() {
        return Ok(ascending);
    }
    let mut t = sign_pow(i) * qp(q, e + choose2(i) + tw) * qp(sc, i - e);
    let num = Rational::one() - &c * qp(q, 2 * i - 1);
    t *= div_one_minus(num, &(&c * qp(q, i + e - 1)))?;
    t *= poch_fraction(&[qp(q, -e)], std::slice::from_ref(q), q, iu)?;
    t *= poch_fraction(&[qp(q, 1 - e) / sc], &[qp(q, 2 - e - i) / &c], q, p.eps())?;
    t *= ascending;
    t *= qpoch_desc(&(&c * qp(q, k + e - 1)), q, p.eps() - iu)?;
    t *= poch_fraction(&[], &[qp(q, k) * sc], q, p.eps())?;
    Ok(t)
}

pub(crate) fn unity_a(p: &ParamPoint, k: usize, tw: i64) -> Result<Rational, EvalError> {
    let gen = |p: &ParamPoint, i: i64| unity_a_term(p, k, i, tw);
    weighted_sum(&gen, p, 0, p.eps() as i64)
}

pub(crate) fn unity_b(p: &ParamPoint, k: usize, tw: i64) -> Result<Rational, EvalError> {
    let gen = |p: &ParamPoint, i: i64| unity_b_term(p, k, i, tw);
    weighted_sum(&gen, p, 0, p.eps() as i64)
}

/// `(q^{-eps}, q^{-n}, q^{1+n}a, C, -C; q)_i / (q, qA, -qA, q^eps c, q^{i-1}c; q)_i`.
fn shift_coefficient(p: &ParamPoint, i: usize) -> Result<Rational, EvalError> {
    let q = p.q();
    let (n, e, ii) = (p.n() as i64, p.eps() as i64, i as i64);
    let (sa, sc, c) = (p.sqrt_a(), p.sqrt_c(), p.c());
    poch_fraction(
        &[
            qp(q, -e),
            qp(q, -n),
            qp(q, 1 + n) * p.a(),
            sc.clone(),
            -sc.clone(),
        ],
        &[
            q.clone(),
            q * sa,
            -(q * sa),
            qp(q, e) * &c,
            qp(q, ii - 1) * &c,
        ],
        q,
        i,
    )
}

/// `chi(n-i even) (q, q^2 a/c; q^2)_{(n-i)/2} / (q^{2+2i}a, q^{1+2i}c; q^2)_{(n-i)/2}`.
fn parity_tail(p: &ParamPoint, i: usize) -> Result<Rational, EvalError> {
    let ParityCase { s, parity } = ParityCase::of(p.n() - i);
    if parity == Parity::Odd {
        return Ok(Rational::zero());
    }
    let (q, a, c) = (p.q(), p.a(), p.c());
    let ii = i as i64;
    let q2 = q * q;
    poch_fraction(
        &[q.clone(), &q2 * &a / &c],
        &[qp(q, 2 + 2 * ii) * &a, qp(q, 1 + 2 * ii) * &c],
        &q2,
        s,
    )
}

/// Which of the two Andrews-type families a sum belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Family {
    /// Upper parameters `sqrt(c), -sqrt(c)`.
    First,
    /// Upper parameters `q^eps sqrt(c), -sqrt(c)`.
    Second,
}

/// Per-`i` terms of the rearrangement relation: prefactor times the inner
/// shifted 4phi3, evaluated as a plain series. Terms with `i > n` vanish
/// through `(q^{-n}; q)_i`.
/// Mutation: the prefactor's leading power of `q` gains one.
pub(crate) fn relation_terms(
    p: &ParamPoint,
    family: Family,
    tw: i64,
) -> Result<Vec<Rational>, EvalError> {
    let (q, sc) = (p.q(), p.sqrt_c());
    let e = p.eps() as i64;
    let mut terms = vec![Rational::zero(); p.eps() + 1];
    let last = p.eps().min(p.n());
    for (i, slot) in terms.iter_mut().enumerate().take(last + 1) {
        let ii = i as i64;
        let lead = match family {
            Family::First => qp(q, (ii + e) * ii + tw) * qp(&p.c(), ii),
            Family::Second => sign_pow(ii) * qp(q, e * ii + choose2(ii + 1) + tw) * qp(sc, ii),
        };
        let inner = phi_eval_checked(&andrews_inner_series(p, i), q)?;
        *slot = lead * shift_coefficient(p, i)? * inner;
    }
    Ok(terms)
}

/// Per-`i` terms of Theorem 1 (`First`) or Theorem 2 (`Second`).
/// Odd `n - i` terms are zero and are not evaluated.
/// Mutation: the leading power `q^{(eps+n)i}` gains one.
pub(crate) fn theorem_terms(
    p: &ParamPoint,
    family: Family,
    tw: i64,
) -> Result<Vec<Rational>, EvalError> {
    let (q, sc) = (p.q(), p.sqrt_c());
    let (n, e) = (p.n() as i64, p.eps() as i64);
    let mut terms = vec![Rational::zero(); p.eps() + 1];
    let last = p.eps().min(p.n());
    for (i, slot) in terms.iter_mut().enumerate().take(last + 1) {
        if (p.n() - i) % 2 == 1 {
            continue;
        }
        let ii = i as i64;
        let lead = match family {
            Family::First => qp(q, (e + n) * ii + tw) * qp(sc, n + ii),
            Family::Second => sign_pow(ii) * qp(q, (e + n) * ii - choose2(ii) + tw) * qp(sc, n),
        };
        *slot = lead * shift_coefficient(p, i)? * parity_tail(p, i)?;
    }
    Ok(terms)
}

/// The brace `1 + lead (1-c)(1-q^{2s})(1-q^{1+2s}a) / ((1-q^2 c)(1-q^{1+2s}c)(1-q^{2s}a/c))`.
fn even_brace(p: &ParamPoint, s: usize, lead: Rational) -> Result<Rational, EvalError> {
    let (q, a, c) = (p.q(), p.a(), p.c());
    let s2 = 2 * s as i64;
    let one = Rational::one();
    let mut frac = lead * (&one - &c) * (&one - qp(q, s2)) * (&one - qp(q, 1 + s2) * &a);
    frac = div_one_minus(frac, &(q * q * &c))?;
    frac = div_one_minus(frac, &(qp(q, 1 + s2) * &c))?;
    frac = div_one_minus(frac, &(qp(q, s2) * &a / &c))?;
    Ok(one + frac)
}

/// `c^{1+s} (q; q^2)_{1+s} (q^2 a/c; q^2)_s / ((qc; q^2)_{1+s} (q^2 a; q^2)_s)` with
/// the power of `c` supplied by the caller.
fn odd_eps1_body(p: &ParamPoint, s: usize, c_power: Rational) -> Result<Rational, EvalError> {
    let (q, a, c) = (p.q(), p.a(), p.c());
    let q2 = q * q;
    Ok(c_power
        * poch_fraction(std::slice::from_ref(q), &[q * &c], &q2, s + 1)?
        * poch_fraction(&[&q2 * &a / &c], &[&q2 * &a], &q2, s)?)
}

/// `(q^3, q^2 a/c; q^2)_s / (q^2 a, q^3 c; q^2)_s`.
fn odd_eps2_body(p: &ParamPoint, s: usize) -> Result<Rational, EvalError> {
    let (q, a, c) = (p.q(), p.a(), p.c());
    let q2 = q * q;
    poch_fraction(
        &[qp(q, 3), &q2 * &a / &c],
        &[&q2 * &a, qp(q, 3) * &c],
        &q2,
        s,
    )
}

/// Corollary eps=1 of Theorem 1. Mutation: odd branch `c^{1+s} -> c^{2+s}`.
pub(crate) fn cor_a1(p: &ParamPoint, tw: i64) -> Result<Rational, EvalError> {
    let ParityCase { s, parity } = ParityCase::of(p.n());
    match parity {
        Parity::Even => andrews(p, 0),
        Parity::Odd => odd_eps1_body(p, s, qp(&p.c(), 1 + s as i64 + tw)),
    }
}

/// Corollary eps=2 of Theorem 1. Mutation: brace lead `q^2 c -> q^3 c`.
pub(crate) fn cor_a2(p: &ParamPoint, tw: i64) -> Result<Rational, EvalError> {
    let ParityCase { s, parity } = ParityCase::of(p.n());
    let (q, c) = (p.q(), p.c());
    match parity {
        Parity::Even => {
            let brace = even_brace(p, s, qp(q, 2 + tw) * &c)?;
            Ok(brace * andrews(&p.with_eps(0), 0)?)
        }
        Parity::Odd => {
            let lead = div_one_minus(Rational::one() - q * q, &(q * q * &c))?;
            Ok(lead * qp(&c, 1 + s as i64) * odd_eps2_body(p, s)?)
        }
    }
}

/// Corollary eps=1 of Theorem 2. Mutation: odd branch `c^{1/2+s} -> c^{1+s}`
/// (one more power of `C`).
pub(crate) fn cor_b1(p: &ParamPoint, tw: i64) -> Result<Rational, EvalError> {
    let ParityCase { s, parity } = ParityCase::of(p.n());
    match parity {
        Parity::Even => andrews(p, 0),
        Parity::Odd => {
            let c_half = qp(p.sqrt_c(), 1 + 2 * s as i64 + tw);
            Ok(-odd_eps1_body(p, s, c_half)?)
        }
    }
}

/// Corollary eps=2 of Theorem 2. Mutation: brace lead `q -> q^2`.
pub(crate) fn cor_b2(p: &ParamPoint, tw: i64) -> Result<Rational, EvalError> {
    let ParityCase { s, parity } = ParityCase::of(p.n());
    let (q, c) = (p.q(), p.c());
    match parity {
        Parity::Even => {
            let brace = even_brace(p, s, qp(q, 1 + tw))?;
            Ok(brace * andrews(&p.with_eps(0), 0)?)
        }
        Parity::Odd => {
            let lead = div_one_minus(q * q - Rational::one(), &(q * q * &c))?;
            Ok(lead * qp(p.sqrt_c(), 1 + 2 * s as i64) * odd_eps2_body(p, s)?)
        }
    }
}
