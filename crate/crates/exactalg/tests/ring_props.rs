use exactalg::{expansion_det, ff_det, rat, LaurentPoly2, Rat};
use num::One;
use proptest::prelude::*;

type P = LaurentPoly2<Rat>;

fn poly() -> impl Strategy<Value = P> {
    prop::collection::vec(((-3i64..=3, -3i64..=3), -9i64..=9, 1i64..=4), 0..6)
        .prop_map(|ts| P::from_terms(ts.into_iter().map(|(e, n, d)| (e, rat(n, d)))))
}

fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<P>>> {
    prop::collection::vec(prop::collection::vec(poly(), n), n)
}

proptest! {
    #[test]
    fn associative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn distributive(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn commutative(a in poly(), b in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn no_stored_zeros(a in poly(), b in poly()) {
        let s = &(&a * &b) - &(&b * &a);
        prop_assert!(s.terms().is_empty());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), xn in 1i64..7, yn in -6i64..-1) {
        let (x, y) = (rat(xn, 3), rat(yn, 5));
        let pa = a.eval(&x, &y).unwrap();
        let pb = b.eval(&x, &y).unwrap();
        prop_assert_eq!((&a * &b).eval(&x, &y).unwrap(), &pa * &pb);
        prop_assert_eq!((&a - &b).eval(&x, &y).unwrap(), pa - pb);
    }

    #[test]
    fn bareiss_matches_expansion(m in (1usize..=4).prop_flat_map(matrix)) {
        prop_assert_eq!(ff_det(&m).unwrap(), expansion_det(&m, &Rat::one()).unwrap());
    }

    #[test]
    fn canonical_text_is_stable(a in poly()) {
        prop_assert_eq!(a.to_string(), a.clone().to_string());
        prop_assert_eq!(a.shift(2, -1).normalized(), a.normalized());
    }
}
