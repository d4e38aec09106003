use num_traits::{One, Zero};
use proptest::prelude::*;

use qwatson::exact::{
    fmt_fraction, parse_rational, poch_fraction, qbinom, qpoch, qpoch_desc, qpow, rat,
    rational_sqrt,
};
use qwatson::Rational;

fn small() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=12).prop_map(|(p, r)| rat(p, r))
}

fn base() -> impl Strategy<Value = Rational> {
    small().prop_filter("q avoids 0 and +-1", |q| {
        !q.is_zero() && !q.is_one() && !(-q.clone()).is_one()
    })
}

proptest! {
    #[test]
    fn pochhammer_splits(x in small(), q in base(), m in 0usize..6, k in 0usize..6) {
        let tail = qpoch(&(&x * qpow(&q, m as i64).unwrap()), &q, k);
        prop_assert_eq!(qpoch(&x, &q, m + k), qpoch(&x, &q, m) * tail);
    }

    #[test]
    fn descending_is_ascending_from_the_bottom(x in small(), q in base(), n in 1usize..7) {
        let bottom = &x * qpow(&q, 1 - n as i64).unwrap();
        prop_assert_eq!(qpoch_desc(&x, &q, n).unwrap(), qpoch(&bottom, &q, n));
    }

    #[test]
    fn gaussian_binomial_symmetry(q in base(), n in 0usize..10, k in 0i64..10) {
        prop_assert_eq!(qbinom(n, k, &q), qbinom(n, n as i64 - k, &q));
    }

    #[test]
    fn q_pascal(q in base(), n in 1usize..10, k in 1i64..10) {
        let lhs = qbinom(n, k, &q);
        let rhs = qbinom(n - 1, k - 1, &q) + qpow(&q, k).unwrap() * qbinom(n - 1, k, &q);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gaussian_binomial_from_pochhammers(q in base(), n in 0usize..9, k in 0usize..9) {
        prop_assume!(k <= n);
        let expected = qpoch(&q, &q, n) / (qpoch(&q, &q, k) * qpoch(&q, &q, n - k));
        prop_assert_eq!(qbinom(n, k as i64, &q), expected);
    }

    #[test]
    fn fraction_matches_quotient(a in small(), d in small(), q in base(), n in 0usize..6) {
        let den = qpoch(&d, &q, n);
        match poch_fraction(std::slice::from_ref(&a), std::slice::from_ref(&d), &q, n) {
            Ok(v) => prop_assert_eq!(v, qpoch(&a, &q, n) / den),
            Err(e) => {
                prop_assert!(e.is_degenerate());
                prop_assert!(den.is_zero());
            }
        }
    }

    #[test]
    fn fraction_text_round_trips(x in small()) {
        prop_assert_eq!(parse_rational(&fmt_fraction(&x)).unwrap(), x);
    }

    #[test]
    fn square_roots_of_squares(x in small()) {
        let r = rational_sqrt(&(&x * &x)).unwrap();
        prop_assert_eq!(&r * &r, &x * &x);
        prop_assert!(r >= Rational::zero());
    }
}
