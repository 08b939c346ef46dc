mod common;

use std::cmp::Ordering;

use common::{random_poly, seeded, xy};
use curveloc::poly::{parse_poly, Monomial, MonomialOrder, Poly};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = Poly> {
    seeded(|rng| random_poly(rng, &xy(), 4, 5))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..6, 3).prop_map(Monomial::new)
}

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::Lex,
        MonomialOrder::GrevLex,
        MonomialOrder::WeightedGrevLex(vec![0, 1, 2]),
        MonomialOrder::Block(1),
        MonomialOrder::Block(2),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn degree_is_additive(a in small_poly(), b in small_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let product = &a * &b;
        prop_assert_eq!(product.total_degree(), Some(a.total_degree().unwrap() + b.total_degree().unwrap()));
    }

    #[test]
    fn printing_is_a_fixed_point(a in small_poly()) {
        let printed = a.to_string();
        let reparsed = parse_poly(&printed, &xy()).unwrap();
        prop_assert_eq!(&reparsed, &a);
        prop_assert_eq!(reparsed.to_string(), printed);
    }

    #[test]
    fn orders_are_total_multiplicative_and_start_at_one(a in monomial(), b in monomial(), c in monomial()) {
        let one = Monomial::one(3);
        for order in orders() {
            let ab = order.compare(&a, &b);
            prop_assert_eq!(ab.reverse(), order.compare(&b, &a));
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            let shifted = order.compare(&Monomial::new(a.exponents().iter().zip(c.exponents()).map(|(x, y)| x + y)),
                                        &Monomial::new(b.exponents().iter().zip(c.exponents()).map(|(x, y)| x + y)));
            prop_assert_eq!(shifted, ab);
            prop_assert_ne!(order.compare(&a, &one), Ordering::Less);
        }
    }
}
