//! Closed forms of the Jain-type family. All of these need `sqrt(q)` to be
//! rational; callers check that through the identity constraints.

use num_traits::{One, Zero};

use crate::error::EvalError;
use crate::exact::{choose2, div_one_minus, poch_fraction, qp, sign_pow, Rational};
use crate::point::ParamPoint;
use crate::series::phi_eval_checked;

use super::andrews::Family;
use super::lhs::{jain_inner_series, sqrt_qac};

/// `(qa, qc; q^2)_n / (q, qac; q^2)_n`. Mutation: `qa -> q^2 a`.
pub(crate) fn jain(p: &ParamPoint, tw: i64) -> Result<Rational, EvalError> {
    let (q, a, c) = (p.q(), p.a(), p.c());
    poch_fraction(
        &[qp(q, 1 + tw) * &a, q * &c],
        &[q.clone(), q * &a * &c],
        &(q * q),
        p.n(),
    )
}

/// `(a, c; q^2)_n / (q, qac; q^2)_n`.
fn jain_shifted(p: &ParamPoint) -> Result<Rational, EvalError> {
    let (q, a, c) = (p.q(), p.a(), p.c());
    poch_fraction(
        &[a.clone(), c.clone()],
        &[q.clone(), q * &a * &c],
        &(q * q),
        p.n(),
    )
}

/// `(q^{-eps}, q^{-n}, -q^{-n}, a, c; q)_i / (q, sqrt(qac), -sqrt(qac), q^{eps-2n}, q^{i-1-2n}; q)_i`.
fn shift_coefficient(p: &ParamPoint, i: usize) -> Result<Rational, EvalError> {
    let q = p.q();
    let (n, e, ii) = (p.n() as i64, p.eps() as i64, i as i64);
    let r = sqrt_qac(p)?;
    poch_fraction(
        &[qp(q, -e), qp(q, -n), -qp(q, -n), p.a(), p.c()],
        &[
            q.clone(),
            r.clone(),
            -r,
            qp(q, e - 2 * n),
            qp(q, ii - 1 - 2 * n),
        ],
        q,
        i,
    )
}

/// `(q^{1+i}a, q^{1+i}c; q^2)_{n-i} / (q, q^{1+2i}ac; q^2)_{n-i}`.
fn theorem_tail(p: &ParamPoint, i: usize) -> Result<Rational, EvalError> {
    let (q, a, c) = (p.q(), p.a(), p.c());
    let ii = i as i64;
    poch_fraction(
        &[qp(q, 1 + ii) * &a, qp(q, 1 + ii) * &c],
        &[q.clone(), qp(q, 1 + 2 * ii) * &a * &c],
        &(q * q),
        p.n() - i,
    )
}

fn lead(p: &ParamPoint, family: Family, i: usize, tw: i64) -> Rational {
    let q = p.q();
    let (n, e, ii) = (p.n() as i64, p.eps() as i64, i as i64);
    match family {
        Family::First => qp(q, (ii + e - 2 * n) * ii + tw),
        Family::Second => sign_pow(ii) * qp(q, (e - n) * ii + choose2(ii + 1) + tw),
    }
}

fn require_eps_le_n(p: &ParamPoint) -> Result<(), EvalError> {
    if p.eps() > p.n() {
        return Err(EvalError::ConstraintViolated(format!(
            "Jain-type sums need eps <= n (eps={}, n={})",
            p.eps(),
            p.n()
        )));
    }
    Ok(())
}

/// Per-`i` terms of the substituted rearrangement relations.
/// Mutation: the leading power of `q` gains one.
pub(crate) fn relation_terms(
    p: &ParamPoint,
    family: Family,
    tw: i64,
) -> Result<Vec<Rational>, EvalError> {
    require_eps_le_n(p)?;
    (0..=p.eps())
        .map(|i| {
            let inner = phi_eval_checked(&jain_inner_series(p, i)?, p.q())?;
            Ok(lead(p, family, i, tw) * shift_coefficient(p, i)? * inner)
        })
        .collect()
}

/// Per-`i` terms of Theorem 3 (`First`) or Theorem 4 (`Second`).
/// Mutation: the leading power of `q` gains one.
pub(crate) fn theorem_terms(
    p: &ParamPoint,
    family: Family,
    tw: i64,
) -> Result<Vec<Rational>, EvalError> {
    require_eps_le_n(p)?;
    (0..=p.eps())
        .map(|i| Ok(lead(p, family, i, tw) * shift_coefficient(p, i)? * theorem_tail(p, i)?))
        .collect()
}

/// Corollary eps=1 of Theorem 3. Mutation: `(qa, qc; q^2)_n -> (q^2 a, qc; q^2)_n`.
pub(crate) fn cor_c1(p: &ParamPoint, tw: i64) -> Result<Rational, EvalError> {
    Ok(jain(p, tw)? + jain_shifted(p)?)
}

/// Corollary eps=2 of Theorem 3. Mutation: `(1+q) -> (1+q^2)`.
pub(crate) fn cor_c2(p: &ParamPoint, tw: i64) -> Result<Rational, EvalError> {
    let (q, a, c) = (p.q(), p.a(), p.c());
    let n = p.n() as i64;
    let one = Rational::one();
    let first = div_one_minus(
        (&one + qp(q, 1 + tw)) * (&one - qp(q, 1 - 2 * n)),
        &qp(q, 2 - 2 * n),
    )? * jain_shifted(p)?;
    let mut frac = q * (&one - &a) * (&one - &c) * (&one - qp(q, -2 * n));
    frac = div_one_minus(frac, &qp(q, 2 - 2 * n))?;
    frac = div_one_minus(frac, &(&a * qp(q, 2 * n - 1)))?;
    frac = div_one_minus(frac, &(&c * qp(q, 2 * n - 1)))?;
    Ok(first + (one + frac) * jain(p, 0)?)
}

/// Corollary eps=1 of Theorem 4. Mutation: `q^n -> q^{n+1}`.
pub(crate) fn cor_d1(p: &ParamPoint, tw: i64) -> Result<Rational, EvalError> {
    Ok(jain(p, 0)? - qp(p.q(), p.n() as i64 + tw) * jain_shifted(p)?)
}

/// Corollary eps=2 of Theorem 4. Mutation: brace `(1-q^{2n}) -> (1-q^{2n+1})`.
pub(crate) fn cor_d2(p: &ParamPoint, tw: i64) -> Result<Rational, EvalError> {
    let (q, a, c) = (p.q(), p.a(), p.c());
    let n = p.n() as i64;
    let one = Rational::one();
    let gap = qp(q, n - 1) - qp(q, 1 - n);
    if gap.is_zero() {
        return Err(EvalError::DegenerateDenominator {
            base: qp(q, 2 - 2 * n),
            index: 1,
        });
    }
    let first = (&one + q) * (&one - qp(q, 2 * n - 1)) / gap * jain_shifted(p)?;
    let mut frac = (&one - &a) * (&one - &c) * (&one - qp(q, 2 * n + tw));
    frac = div_one_minus(frac, &qp(q, 2 - 2 * n))?;
    frac = div_one_minus(frac, &(&a * qp(q, 2 * n - 1)))?;
    frac = div_one_minus(frac, &(&c * qp(q, 2 * n - 1)))?;
    Ok(first + (one - frac) * jain(p, 0)?)
}
