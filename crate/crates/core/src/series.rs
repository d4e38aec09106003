//! Terminating basic hypergeometric series and finite weighted sums.

use num_traits::{One, Zero};

use crate::error::EvalError;
use crate::exact::{first_vanishing, Rational};
use crate::point::ParamPoint;

/// A fully evaluated terminating series
/// `sum_{k=0}^{bound} (a_0,..,a_r; q)_k / (q, b_1,..,b_s; q)_k z^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSpec {
    pub numer: Vec<Rational>,
    pub denom: Vec<Rational>,
    pub argument: Rational,
    /// Inclusive upper summation index.
    pub bound: usize,
}

impl SeriesSpec {
    pub fn new(
        numer: Vec<Rational>,
        denom: Vec<Rational>,
        argument: Rational,
        bound: usize,
    ) -> Self {
        SeriesSpec {
            numer,
            denom,
            argument,
            bound,
        }
    }
}

/// Evaluates a [`SeriesSpec`] by the term ratio
/// `t_{k+1} = t_k z prod(1 - a_i q^k) / ((1 - q^{k+1}) prod(1 - b_j q^k))`.
///
/// Once a numerator factor vanishes every later term is zero and the loop
/// stops, so denominator factors past that index are never inspected.
pub fn phi_eval(spec: &SeriesSpec, q: &Rational) -> Result<Rational, EvalError> {
    let one = Rational::one();
    let mut numer_q: Vec<Rational> = spec.numer.clone();
    let mut denom_q: Vec<Rational> = spec.denom.clone();
    let mut q_next = q.clone();
    let mut term = Rational::one();
    let mut total = Rational::one();

    for k in 0..spec.bound {
        let mut num = spec.argument.clone();
        for a in &numer_q {
            num *= &one - a;
        }
        if num.is_zero() {
            break;
        }
        let mut den = &one - &q_next;
        if den.is_zero() {
            return Err(EvalError::degenerate(q.clone(), k + 1));
        }
        for (b, b_k) in spec.denom.iter().zip(&denom_q) {
            let f = &one - b_k;
            if f.is_zero() {
                return Err(EvalError::degenerate(b.clone(), k + 1));
            }
            den *= f;
        }
        term = term * num / den;
        total += &term;

        for a in numer_q.iter_mut() {
            *a *= q;
        }
        for b in denom_q.iter_mut() {
            *b *= q;
        }
        q_next *= q;
    }
    Ok(total)
}

/// [`phi_eval`] under the side condition that no denominator factor vanishes
/// anywhere in `0..bound`, even past an early numerator truncation. A factor
/// pair `0/0` at the truncation index would otherwise be read as zero.
pub fn phi_eval_checked(spec: &SeriesSpec, q: &Rational) -> Result<Rational, EvalError> {
    for b in &spec.denom {
        if let Some(m) = first_vanishing(b, q, spec.bound) {
            return Err(EvalError::degenerate(b.clone(), m));
        }
    }
    phi_eval(spec, q)
}

/// Smallest `n <= max_probe` such that some numerator parameter equals `q^{-n}`.
pub fn terminating_bound(numer: &[Rational], q: &Rational, max_probe: usize) -> Option<usize> {
    if q.is_zero() {
        return numer.iter().any(|a| a.is_one()).then_some(0);
    }
    let step = q.recip();
    let mut target = Rational::one();
    for n in 0..=max_probe {
        if numer.contains(&target) {
            return Some(n);
        }
        target *= &step;
    }
    None
}

/// A rule producing the `i`-th summand of a finite sum at a point.
pub trait TermGenerator {
    fn term(&self, point: &ParamPoint, i: i64) -> Result<Rational, EvalError>;
}

impl<F> TermGenerator for F
where
    F: Fn(&ParamPoint, i64) -> Result<Rational, EvalError>,
{
    fn term(&self, point: &ParamPoint, i: i64) -> Result<Rational, EvalError> {
        self(point, i)
    }
}

/// `sum_{i=lo}^{hi} gen(point, i)`; an empty range gives zero.
pub fn weighted_sum<G: TermGenerator + ?Sized>(
    gen: &G,
    point: &ParamPoint,
    lo: i64,
    hi: i64,
) -> Result<Rational, EvalError> {
    let mut total = Rational::zero();
    for i in lo..=hi {
        total += gen.term(point, i)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, poch_fraction, rat};

    /// Term-by-term evaluation straight from the series definition.
    fn naive(spec: &SeriesSpec, q: &Rational) -> Result<Rational, EvalError> {
        let mut dens = spec.denom.clone();
        dens.push(q.clone());
        let mut total = Rational::zero();
        for k in 0..=spec.bound {
            let c = poch_fraction(&spec.numer, &dens, q, k)?;
            total += c * num_traits::pow(spec.argument.clone(), k);
        }
        Ok(total)
    }

    #[test]
    fn bound_zero_is_one() {
        let spec = SeriesSpec::new(vec![rat(3, 7), int(5)], vec![rat(1, 9)], rat(-4, 3), 0);
        assert_eq!(phi_eval(&spec, &rat(1, 2)).unwrap(), int(1));
    }

    #[test]
    fn unit_numerator_truncates_after_first_term() {
        let spec = SeriesSpec::new(vec![int(1), rat(2, 3)], vec![rat(5, 7)], rat(3, 2), 6);
        assert_eq!(phi_eval(&spec, &rat(1, 3)).unwrap(), int(1));
    }

    #[test]
    fn zero_argument_keeps_only_first_term() {
        let spec = SeriesSpec::new(vec![rat(3, 2), rat(2, 3)], vec![rat(5, 7)], int(0), 5);
        assert_eq!(phi_eval(&spec, &rat(1, 3)).unwrap(), int(1));
    }

    #[test]
    fn matches_naive_two_term_sum() {
        // 2phi1(1/2, 1/3; 1/5; q=1/2, z=1/7) to k=1
        let q = rat(1, 2);
        let spec = SeriesSpec::new(vec![rat(1, 2), rat(1, 3)], vec![rat(1, 5)], rat(1, 7), 1);
        let by_hand = int(1) + rat(1, 2) * rat(2, 3) / (rat(1, 2) * rat(4, 5)) * rat(1, 7);
        assert_eq!(phi_eval(&spec, &q).unwrap(), by_hand);
        assert_eq!(naive(&spec, &q).unwrap(), by_hand);
    }

    #[test]
    fn degenerate_denominator_before_truncation() {
        // denominator 4 = q^{-2} vanishes at k = 3 while the numerator survives
        let q = rat(1, 2);
        let spec = SeriesSpec::new(vec![rat(1, 3)], vec![int(4)], int(1), 4);
        assert_eq!(
            phi_eval(&spec, &q),
            Err(EvalError::DegenerateDenominator {
                base: int(4),
                index: 3
            })
        );
    }

    #[test]
    fn denominator_zero_after_truncation_is_ignored() {
        // q^{-1} = 2 truncates after k = 1; the denominator q^{-3} = 8 would vanish at k = 4
        let q = rat(1, 2);
        let spec = SeriesSpec::new(vec![int(2)], vec![int(8)], int(1), 6);
        let expected = int(1) + int(-1) / (rat(1, 2) * int(-7));
        assert_eq!(phi_eval(&spec, &q).unwrap(), expected);
    }

    #[test]
    fn checked_rejects_zero_over_zero_at_truncation() {
        // numerator 1 and denominator 1 both vanish at k = 0
        let q = rat(1, 2);
        let spec = SeriesSpec::new(vec![int(1), rat(1, 3)], vec![int(1)], int(1), 2);
        assert_eq!(phi_eval(&spec, &q).unwrap(), int(1));
        assert_eq!(
            phi_eval_checked(&spec, &q),
            Err(EvalError::DegenerateDenominator {
                base: int(1),
                index: 1
            })
        );
        // past the bound nothing is inspected
        let spec = SeriesSpec::new(vec![int(2)], vec![int(8)], int(1), 3);
        assert_eq!(phi_eval_checked(&spec, &q), phi_eval(&spec, &q));
    }

    #[test]
    fn terminating_bound_examples() {
        let q = rat(1, 2);
        assert_eq!(terminating_bound(&[rat(1, 3), int(8)], &q, 10), Some(3));
        assert_eq!(terminating_bound(&[int(5)], &q, 10), None);
        assert_eq!(terminating_bound(&[rat(2, 9), int(1)], &q, 10), Some(0));
        assert_eq!(terminating_bound(&[int(16)], &q, 3), None);
    }

    #[test]
    fn weighted_sum_examples() {
        let p = ParamPoint::new(rat(1, 2), int(2), int(3), 0, 0).unwrap();
        let one = |_: &ParamPoint, _: i64| Ok(int(1));
        assert_eq!(weighted_sum(&one, &p, 0, 3).unwrap(), int(4));
        assert_eq!(weighted_sum(&one, &p, 0, -1).unwrap(), int(0));
        let failing = |_: &ParamPoint, i: i64| {
            if i == 2 {
                Err(EvalError::degenerate(int(1), 1))
            } else {
                Ok(int(i))
            }
        };
        assert!(weighted_sum(&failing, &p, 0, 3)
            .unwrap_err()
            .is_degenerate());
    }
}
