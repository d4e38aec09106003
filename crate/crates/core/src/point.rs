use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::EvalError;
use crate::exact::{fmt_fraction, fmt_rational, parse_rational, rational_sqrt, Rational};

/// An evaluation point `(q, A, C, n, eps)` with `a = A^2` and `c = C^2`.
///
/// `sqrt(a)` is always `+A` and `-sqrt(a)` is `-A` (likewise for `c`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamPoint {
    q: Rational,
    sqrt_a: Rational,
    sqrt_c: Rational,
    n: usize,
    eps: usize,
}

impl ParamPoint {
    pub fn new(
        q: Rational,
        sqrt_a: Rational,
        sqrt_c: Rational,
        n: usize,
        eps: usize,
    ) -> Result<Self, EvalError> {
        if q.is_zero() || q.abs().is_one() {
            return Err(EvalError::ConstraintViolated(format!(
                "q must avoid 0, 1 and -1 (got {})",
                fmt_rational(&q)
            )));
        }
        if sqrt_a.is_zero() || sqrt_c.is_zero() {
            return Err(EvalError::ConstraintViolated(
                "A and C must be nonzero".to_string(),
            ));
        }
        Ok(ParamPoint {
            q,
            sqrt_a,
            sqrt_c,
            n,
            eps,
        })
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// `A = sqrt(a)`.
    pub fn sqrt_a(&self) -> &Rational {
        &self.sqrt_a
    }

    /// `C = sqrt(c)`.
    pub fn sqrt_c(&self) -> &Rational {
        &self.sqrt_c
    }

    pub fn a(&self) -> Rational {
        &self.sqrt_a * &self.sqrt_a
    }

    pub fn c(&self) -> Rational {
        &self.sqrt_c * &self.sqrt_c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eps(&self) -> usize {
        self.eps
    }

    /// Exact `sqrt(q)`; only defined when `q` is a rational square.
    pub fn sqrt_q(&self) -> Result<Rational, EvalError> {
        rational_sqrt(&self.q).ok_or_else(|| {
            EvalError::ConstraintViolated(format!(
                "q = {} is not a perfect rational square, so sqrt(qac) is not rational",
                fmt_rational(&self.q)
            ))
        })
    }

    pub fn with_n(&self, n: usize) -> Self {
        ParamPoint { n, ..self.clone() }
    }

    pub fn with_eps(&self, eps: usize) -> Self {
        ParamPoint {
            eps,
            ..self.clone()
        }
    }

    pub fn flip_a(&self) -> Self {
        ParamPoint {
            sqrt_a: -self.sqrt_a.clone(),
            ..self.clone()
        }
    }

    pub fn flip_c(&self) -> Self {
        ParamPoint {
            sqrt_c: -self.sqrt_c.clone(),
            ..self.clone()
        }
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} A={} C={} n={} eps={}",
            fmt_rational(&self.q),
            fmt_rational(&self.sqrt_a),
            fmt_rational(&self.sqrt_c),
            self.n,
            self.eps
        )
    }
}

/// Serialized point: `{q, A, C, n, eps}` with rationals as `"p/r"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub q: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "C")]
    pub c: String,
    pub n: usize,
    pub eps: usize,
}

impl From<&ParamPoint> for PointRecord {
    fn from(p: &ParamPoint) -> Self {
        PointRecord {
            q: fmt_fraction(&p.q),
            a: fmt_fraction(&p.sqrt_a),
            c: fmt_fraction(&p.sqrt_c),
            n: p.n,
            eps: p.eps,
        }
    }
}

impl TryFrom<&PointRecord> for ParamPoint {
    type Error = EvalError;

    fn try_from(r: &PointRecord) -> Result<Self, EvalError> {
        let parse =
            |s: &str| parse_rational(s).map_err(|e| EvalError::ConstraintViolated(e.to_string()));
        ParamPoint::new(parse(&r.q)?, parse(&r.a)?, parse(&r.c)?, r.n, r.eps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn rejects_bad_q_and_zero_roots() {
        for q in [int(0), int(1), int(-1)] {
            assert!(ParamPoint::new(q, int(2), int(3), 1, 0).is_err());
        }
        assert!(ParamPoint::new(rat(1, 2), int(0), int(3), 1, 0).is_err());
        assert!(ParamPoint::new(rat(1, 2), int(2), int(0), 1, 0).is_err());
    }

    #[test]
    fn derived_squares() {
        let p = ParamPoint::new(rat(1, 4), rat(-1, 3), rat(2, 5), 3, 1).unwrap();
        assert_eq!(p.a(), rat(1, 9));
        assert_eq!(p.c(), rat(4, 25));
        assert_eq!(p.sqrt_q().unwrap(), rat(1, 2));
        let flipped = p.with_n(2).flip_c();
        assert!(flipped.sqrt_c().is_negative());
        assert_eq!(flipped.c(), p.c());
        let not_square = ParamPoint::new(rat(1, 2), int(2), int(3), 0, 0).unwrap();
        assert!(not_square.sqrt_q().is_err());
    }

    #[test]
    fn record_round_trip() {
        let p = ParamPoint::new(rat(-7, 3), rat(1, 3), int(5), 4, 2).unwrap();
        let r = PointRecord::from(&p);
        assert_eq!(r.q, "-7/3");
        assert_eq!(r.c, "5/1");
        assert_eq!(ParamPoint::try_from(&r).unwrap(), p);
    }
}
