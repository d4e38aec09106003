//! Exact rational arithmetic and the q-factorial primitives.
//!
//! Every value in the crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. Nothing here
//! rounds.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{EvalError, ParseError};

pub type Rational = num_rational::BigRational;

/// Builds `p / r` from machine integers. Panics if `r == 0`.
pub fn rat(p: i64, r: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(r))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Human form: `p` for integers, `p/r` otherwise.
pub fn fmt_rational(x: &Rational) -> String {
    x.to_string()
}

/// Wire form used by the JSON report: always `p/r`.
pub fn fmt_fraction(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p`, `-p`, `p/r` or `-p/r`. Decimals are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let s = text.trim();
    let malformed = || ParseError::Malformed(text.to_string());
    let digits = |t: &str| -> Result<BigInt, ParseError> {
        let body = t.strip_prefix('-').unwrap_or(t);
        if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        BigInt::from_str(t).map_err(|_| malformed())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(digits(s)?)),
        Some((p, r)) => {
            if r.starts_with('-') {
                return Err(malformed());
            }
            let num = digits(p)?;
            let den = digits(r)?;
            if den.is_zero() {
                return Err(ParseError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Exact square root when `x` is the square of a rational; the
/// non-negative root is returned.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let root = |v: &BigInt| -> Option<BigInt> {
        let r = v.sqrt();
        (&r * &r == *v).then_some(r)
    };
    Some(Rational::new(root(x.numer())?, root(x.denom())?))
}

/// `q^m` where `q` is known to be nonzero (true at every `ParamPoint`).
pub(crate) fn qp(q: &Rational, m: i64) -> Rational {
    qpow(q, m).expect("nonzero base")
}

/// `q^m` for any integer `m`.
pub fn qpow(q: &Rational, m: i64) -> Result<Rational, EvalError> {
    if m < 0 {
        if q.is_zero() {
            return Err(EvalError::DivisionByZero);
        }
        Ok(num_traits::pow(q.recip(), m.unsigned_abs() as usize))
    } else {
        Ok(num_traits::pow(q.clone(), m as usize))
    }
}

/// The q-shifted factorial `(x; q)_n = prod_{i<n} (1 - x q^i)`.
pub fn qpoch(x: &Rational, q: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut xq = x.clone();
    for _ in 0..n {
        acc *= Rational::one() - &xq;
        if acc.is_zero() {
            return acc;
        }
        xq *= q;
    }
    acc
}

/// The descending factorial `<x; q>_n = prod_{i<n} (1 - x q^{-i})`.
pub fn qpoch_desc(x: &Rational, q: &Rational, n: usize) -> Result<Rational, EvalError> {
    if q.is_zero() {
        return Err(EvalError::DivisionByZero);
    }
    let step = q.recip();
    let mut acc = Rational::one();
    let mut xq = x.clone();
    for _ in 0..n {
        acc *= Rational::one() - &xq;
        xq *= &step;
    }
    Ok(acc)
}

/// Smallest `m <= n` with `(x; q)_m = 0`, if any.
pub(crate) fn first_vanishing(x: &Rational, q: &Rational, n: usize) -> Option<usize> {
    let mut xq = x.clone();
    for i in 0..n {
        if xq.is_one() {
            return Some(i + 1);
        }
        xq *= q;
    }
    None
}

/// The fraction form `prod (a; q)_n / prod (d; q)_n`.
pub fn poch_fraction(
    nums: &[Rational],
    dens: &[Rational],
    q: &Rational,
    n: usize,
) -> Result<Rational, EvalError> {
    let mut den = Rational::one();
    for d in dens {
        if let Some(index) = first_vanishing(d, q, n) {
            return Err(EvalError::degenerate(d.clone(), index));
        }
        den *= qpoch(d, q, n);
    }
    let mut num = Rational::one();
    for a in nums {
        num *= qpoch(a, q, n);
    }
    Ok(num / den)
}

/// Gaussian binomial `(q;q)_n / ((q;q)_k (q;q)_{n-k})`, zero outside `0 <= k <= n`.
///
/// Requires `q` outside `{0, 1, -1}` so that `(q;q)_m` never vanishes.
pub fn qbinom(n: usize, k: i64, q: &Rational) -> Rational {
    if k < 0 || k as usize > n {
        return Rational::zero();
    }
    let k = k as usize;
    let k = k.min(n - k);
    // prod_{j<k} (1 - q^{n-j}) / (1 - q^{j+1})
    let mut acc = Rational::one();
    let mut top = num_traits::pow(q.clone(), n - k + 1);
    let mut bottom = q.clone();
    for _ in 0..k {
        acc *= Rational::one() - &top;
        acc /= Rational::one() - &bottom;
        top *= q;
        bottom *= q;
    }
    acc
}

/// Integer binomial `C(i, 2) = i(i-1)/2`, valid for any integer `i`.
pub fn choose2(i: i64) -> i64 {
    i * (i - 1) / 2
}

/// `(-1)^i`.
pub fn sign_pow(i: i64) -> Rational {
    if i.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `num / (1 - x)`, reporting `(x; q)_1 = 0` when the factor vanishes.
pub fn div_one_minus(num: Rational, x: &Rational) -> Result<Rational, EvalError> {
    let den = Rational::one() - x;
    if den.is_zero() {
        return Err(EvalError::degenerate(x.clone(), 1));
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qpow_examples() {
        assert_eq!(qpow(&rat(1, 2), 0).unwrap(), int(1));
        assert_eq!(qpow(&rat(1, 2), -2).unwrap(), int(4));
        assert_eq!(qpow(&rat(2, 3), 3).unwrap(), rat(8, 27));
        assert_eq!(qpow(&int(0), -1), Err(EvalError::DivisionByZero));
        assert_eq!(qpow(&int(0), 0).unwrap(), int(1));
    }

    #[test]
    fn qpoch_examples() {
        assert_eq!(qpoch(&rat(7, 3), &rat(1, 9), 0), int(1));
        for q in [rat(1, 2), rat(-5, 3), int(7)] {
            assert_eq!(qpoch(&int(3), &q, 1), int(-2));
        }
        assert_eq!(qpoch(&rat(1, 2), &rat(1, 2), 2), rat(3, 8));
    }

    #[test]
    fn qpoch_desc_examples() {
        assert_eq!(qpoch_desc(&rat(4, 5), &rat(1, 3), 0).unwrap(), int(1));
        assert_eq!(qpoch_desc(&rat(1, 2), &rat(1, 2), 2).unwrap(), int(0));
        assert_eq!(qpoch_desc(&rat(1, 3), &rat(1, 2), 2).unwrap(), rat(2, 9));
        assert_eq!(
            qpoch_desc(&rat(1, 3), &int(0), 2),
            Err(EvalError::DivisionByZero)
        );
    }

    #[test]
    fn poch_fraction_examples() {
        let q = rat(2, 7);
        assert_eq!(
            poch_fraction(&[rat(3, 4)], &[rat(5, 6)], &q, 0).unwrap(),
            int(1)
        );
        assert_eq!(
            poch_fraction(&[rat(1, 2)], &[rat(1, 3)], &rat(1, 2), 1).unwrap(),
            rat(3, 4)
        );
        assert_eq!(
            poch_fraction(&[int(2)], &[int(1)], &q, 1),
            Err(EvalError::DegenerateDenominator {
                base: int(1),
                index: 1
            })
        );
    }

    #[test]
    fn poch_fraction_reports_first_vanishing_index() {
        // (1/4; 2)_3 = (1 - 1/4)(1 - 1/2)(1 - 1)
        let err = poch_fraction(&[], &[rat(1, 4)], &int(2), 5).unwrap_err();
        assert_eq!(
            err,
            EvalError::DegenerateDenominator {
                base: rat(1, 4),
                index: 3
            }
        );
    }

    #[test]
    fn qbinom_examples() {
        let q = rat(-3, 5);
        for n in 0..6 {
            assert_eq!(qbinom(n, 0, &q), int(1));
        }
        assert_eq!(qbinom(2, 1, &rat(1, 2)), rat(3, 2));
        assert_eq!(qbinom(3, 5, &q), int(0));
        assert_eq!(qbinom(3, -1, &q), int(0));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(parse_rational(" -2/8 ").unwrap(), rat(-1, 4));
        assert!(matches!(
            parse_rational("0.5"),
            Err(ParseError::Malformed(_))
        ));
        assert!(matches!(
            parse_rational("1/-2"),
            Err(ParseError::Malformed(_))
        ));
        assert!(matches!(parse_rational(""), Err(ParseError::Malformed(_))));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseError::ZeroDenominator(_))
        ));
        assert_eq!(fmt_fraction(&int(3)), "3/1");
        assert_eq!(fmt_fraction(&rat(-2, 4)), "-1/2");
        assert_eq!(fmt_rational(&int(0)), "0");
    }

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&rat(9, 49)), Some(rat(3, 7)));
        assert_eq!(rational_sqrt(&rat(1, 2)), None);
        assert_eq!(rational_sqrt(&rat(-1, 4)), None);
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
    }
}
