//! Field and Euclidean laws for the coefficient rings.

use maxord::ring::{gcd, FpPoly, Frac, Integer, Pid, Rational, RingOps};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=30)
        .prop_map(|(a, b)| Rational::new(Integer::from_i64(a), Integer::from_i64(b)))
}

fn poly<const P: u64>() -> impl Strategy<Value = FpPoly<P>> {
    prop::collection::vec(0..P, 0..6).prop_map(FpPoly::from_coeffs)
}

proptest! {
    #[test]
    fn rationals_form_a_field(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), Rational::zero());
        if !b.is_zero() {
            prop_assert_eq!(a.clone() * b.clone() / b.clone(), a.clone());
        }
    }

    #[test]
    fn fractions_are_reduced_and_reparse(a in rational()) {
        prop_assert!(gcd(a.num(), a.den()).is_unit());
        prop_assert!(*a.den() > Integer::zero());
        prop_assert_eq!(Rational::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn polynomial_division(a in poly::<5>(), b in poly::<5>()) {
        prop_assume!(!b.is_zero());
        let (qq, r) = a.div_rem(&b);
        prop_assert_eq!(qq * b.clone() + r.clone(), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn polynomial_fractions_reparse(a in poly::<3>(), b in poly::<3>()) {
        prop_assume!(!b.is_zero());
        let x = Frac::new(a, b);
        prop_assert_eq!(Frac::<FpPoly<3>>::parse(&x.to_string()).unwrap(), x.clone());
        prop_assert!(x.den().normalized() == x.den().clone());
    }

    #[test]
    fn factorizations_multiply_back(n in 2i64..5000) {
        let n = Integer::from_i64(n);
        let back = n.factor().iter().fold(Integer::one(), |acc, (p, e)| {
            (0..*e).fold(acc, |acc, _| acc * p.clone())
        });
        prop_assert_eq!(back, n);
    }

    #[test]
    fn polynomial_factorizations_multiply_back(a in poly::<2>()) {
        prop_assume!(!a.is_zero());
        let back = a.factor().iter().fold(FpPoly::<2>::one(), |acc, (p, e)| {
            (0..*e).fold(acc, |acc, _| acc * p.clone())
        });
        prop_assert_eq!(back, a.normalized());
        prop_assert!(a.factor().iter().all(|(p, _)| p.is_prime()));
    }
}
