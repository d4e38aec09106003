//! Left-hand sides as plain defining series. Nothing here uses a summation
//! formula; each builder only places the parameters into a [`SeriesSpec`].

use num_traits::Zero;

use crate::error::EvalError;
use crate::exact::{qp, Rational};
use crate::point::ParamPoint;
use crate::series::{phi_eval_checked, SeriesSpec};

/// `4phi3[q^{-n}, q^{1+n}a, q^{top}C, -C; qA, -qA, q^{eps}c; q, q]`.
///
/// `top = 0` is the Andrews-type series, `top = eps` its second family.
pub fn andrews_type_series(p: &ParamPoint, top: usize, eps: usize) -> SeriesSpec {
    let q = p.q();
    let n = p.n() as i64;
    let (sa, sc) = (p.sqrt_a(), p.sqrt_c());
    SeriesSpec::new(
        vec![
            qp(q, -n),
            qp(q, 1 + n) * p.a(),
            qp(q, top as i64) * sc,
            -sc.clone(),
        ],
        vec![q * sa, -(q * sa), qp(q, eps as i64) * p.c()],
        q.clone(),
        p.n(),
    )
}

/// Inner series after shifting the summation index by `i`:
/// `4phi3[q^{i-n}, q^{1+n+i}a, q^i C, -q^i C; q^{1+i}A, -q^{1+i}A, q^{2i}c; q, q]`.
pub fn andrews_inner_series(p: &ParamPoint, i: usize) -> SeriesSpec {
    let q = p.q();
    let (n, i) = (p.n() as i64, i as i64);
    let qi = qp(q, i);
    SeriesSpec::new(
        vec![
            qp(q, i - n),
            qp(q, 1 + n + i) * p.a(),
            &qi * p.sqrt_c(),
            -(&qi * p.sqrt_c()),
        ],
        vec![
            qp(q, 1 + i) * p.sqrt_a(),
            -(qp(q, 1 + i) * p.sqrt_a()),
            qp(q, 2 * i) * p.c(),
        ],
        q.clone(),
        (n - i) as usize,
    )
}

/// `sqrt(qac) = sqrt(q) A C`.
pub(crate) fn sqrt_qac(p: &ParamPoint) -> Result<Rational, EvalError> {
    Ok(p.sqrt_q()? * p.sqrt_a() * p.sqrt_c())
}

/// `4phi3[a, c, q^{top-n}, -q^{-n}; sqrt(qac), -sqrt(qac), q^{eps-2n}; q, q]`.
///
/// `top = 0` is the Jain-type series, `top = eps` its second family.
pub fn jain_type_series(p: &ParamPoint, top: usize, eps: usize) -> Result<SeriesSpec, EvalError> {
    let q = p.q();
    let n = p.n() as i64;
    let r = sqrt_qac(p)?;
    Ok(SeriesSpec::new(
        vec![p.a(), p.c(), qp(q, top as i64 - n), -qp(q, -n)],
        vec![r.clone(), -r, qp(q, eps as i64 - 2 * n)],
        q.clone(),
        p.n(),
    ))
}

/// `4phi3[q^i a, q^i c, q^{i-n}, -q^{i-n}; q^i sqrt(qac), -q^i sqrt(qac), q^{2i-2n}; q, q]`.
pub fn jain_inner_series(p: &ParamPoint, i: usize) -> Result<SeriesSpec, EvalError> {
    let q = p.q();
    let (n, i) = (p.n() as i64, i as i64);
    let qi = qp(q, i);
    let r = &qi * sqrt_qac(p)?;
    Ok(SeriesSpec::new(
        vec![&qi * p.a(), &qi * p.c(), qp(q, i - n), -qp(q, i - n)],
        vec![r.clone(), -r, qp(q, 2 * i - 2 * n)],
        q.clone(),
        (n - i) as usize,
    ))
}

/// The very-well-poised terminating series
/// `6phi5[a, qA', -qA', b, c, q^{-eps}; A', -A', qa/b, qa/c, q^{1+eps}a; q, q^{1+eps}a/(bc)]`
/// with `A' = sqrt(a)` supplied by the caller.
pub fn phi65_series(
    sqrt_a: &Rational,
    b: &Rational,
    c: &Rational,
    q: &Rational,
    eps: usize,
) -> Result<SeriesSpec, EvalError> {
    if q.is_zero() {
        return Err(EvalError::DivisionByZero);
    }
    if b.is_zero() || c.is_zero() {
        return Err(EvalError::ConstraintViolated(
            "6phi5 parameters b and c must be nonzero".to_string(),
        ));
    }
    let a = sqrt_a * sqrt_a;
    let e = eps as i64;
    Ok(SeriesSpec::new(
        vec![
            a.clone(),
            q * sqrt_a,
            -(q * sqrt_a),
            b.clone(),
            c.clone(),
            qp(q, -e),
        ],
        vec![
            sqrt_a.clone(),
            -sqrt_a.clone(),
            q * &a / b,
            q * &a / c,
            qp(q, 1 + e) * &a,
        ],
        qp(q, 1 + e) * &a / (b * c),
        eps,
    ))
}

pub fn phi65_lhs(
    sqrt_a: &Rational,
    b: &Rational,
    c: &Rational,
    q: &Rational,
    eps: usize,
) -> Result<Rational, EvalError> {
    phi_eval_checked(&phi65_series(sqrt_a, b, c, q, eps)?, q)
}

/// The catalog's `(b, c)` for the 6phi5 entry: `b = C^2`, `c = A C`.
pub(crate) fn phi65_bc(p: &ParamPoint) -> (Rational, Rational) {
    (p.c(), p.sqrt_a() * p.sqrt_c())
}
