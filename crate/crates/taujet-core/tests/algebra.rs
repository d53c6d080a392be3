//! Property-based checks of the algebraic laws the exact kernel relies on.
//!
//! Every analysis routine in this crate reduces to a handful of identities
//! on rationals, truncated power series, and dense polynomials: the ring
//! laws, the Leibniz rule, the logarithm turning products into sums, and
//! agreement between the truncated and dense representations.  These tests
//! exercise those laws on randomized inputs rather than hand-picked ones.

use proptest::prelude::*;
use taujet_core::{BigFloat, JetQ, PolyQ, Ratio};

const ORDER: usize = 6;

fn ratio_strategy() -> impl Strategy<Value = Ratio> {
    (-60i64..=60, 1i64..=24).prop_map(|(n, d)| Ratio::new(n, d))
}

fn nonzero_ratio_strategy() -> impl Strategy<Value = Ratio> {
    ratio_strategy().prop_filter("nonzero", |r| !r.is_zero())
}

fn poly_strategy() -> impl Strategy<Value = PolyQ> {
    prop::collection::vec(ratio_strategy(), 0..=5).prop_map(PolyQ::from_coeffs)
}

fn jet_strategy() -> impl Strategy<Value = JetQ> {
    prop::collection::vec(ratio_strategy(), ORDER + 1)
        .prop_map(|c| JetQ::from_coeffs(c, ORDER))
}

/// A jet with unit constant term, the domain of `log`.
fn unit_jet_strategy() -> impl Strategy<Value = JetQ> {
    prop::collection::vec(ratio_strategy(), ORDER).prop_map(|tail| {
        let mut coeffs = vec![Ratio::one()];
        coeffs.extend(tail);
        JetQ::from_coeffs(coeffs, ORDER)
    })
}

/// A jet with invertible (nonzero) constant term, the domain of `recip`.
fn invertible_jet_strategy() -> impl Strategy<Value = JetQ> {
    (nonzero_ratio_strategy(), prop::collection::vec(ratio_strategy(), ORDER))
        .prop_map(|(head, tail)| {
            let mut coeffs = vec![head];
            coeffs.extend(tail);
            JetQ::from_coeffs(coeffs, ORDER)
        })
}

proptest! {
    #[test]
    fn ratio_display_parse_round_trip(r in ratio_strategy()) {
        let rendered = r.to_string();
        prop_assert_eq!(Ratio::parse(&rendered).unwrap(), r);
    }

    #[test]
    fn ratio_pow_is_repeated_multiplication(r in ratio_strategy(), exp in 0u32..6) {
        let mut expect = Ratio::one();
        for _ in 0..exp {
            expect = &expect * &r;
        }
        prop_assert_eq!(r.pow(exp), expect);
    }

    #[test]
    fn ratio_recip_inverts(r in nonzero_ratio_strategy()) {
        let inv = r.recip().unwrap();
        prop_assert!((&r * &inv).is_one());
    }
}

proptest! {
    #[test]
    fn poly_mul_commutes(p in poly_strategy(), q in poly_strategy()) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn poly_mul_distributes_over_add(
        p in poly_strategy(),
        q in poly_strategy(),
        r in poly_strategy(),
    ) {
        let sum = &q + &r;
        let lhs = &p * &sum;
        let rhs = &(&p * &q) + &(&p * &r);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn poly_eval_is_a_ring_homomorphism(
        p in poly_strategy(),
        q in poly_strategy(),
        x in ratio_strategy(),
    ) {
        let product = &p * &q;
        prop_assert_eq!(product.eval(&x), &p.eval(&x) * &q.eval(&x));
        let sum = &p + &q;
        prop_assert_eq!(sum.eval(&x), &p.eval(&x) + &q.eval(&x));
    }

    #[test]
    fn poly_derivative_satisfies_the_product_rule(
        p in poly_strategy(),
        q in poly_strategy(),
    ) {
        let lhs = (&p * &q).derive();
        let rhs = &(&p.derive() * &q) + &(&p * &q.derive());
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #[test]
    fn jet_mul_agrees_with_truncated_poly_mul(
        p in poly_strategy(),
        q in poly_strategy(),
    ) {
        let dense = JetQ::from_poly(&(&p * &q), ORDER);
        let truncated = JetQ::from_poly(&p, ORDER).mul(&JetQ::from_poly(&q, ORDER));
        prop_assert_eq!(dense, truncated);
    }

    #[test]
    fn jet_recip_is_a_right_inverse(a in invertible_jet_strategy()) {
        let inv = a.recip().unwrap();
        prop_assert_eq!(a.mul(&inv), JetQ::one(ORDER));
    }

    #[test]
    fn jet_log_turns_products_into_sums(
        a in unit_jet_strategy(),
        b in unit_jet_strategy(),
    ) {
        let lhs = a.mul(&b).log().unwrap();
        let rhs = &a.log().unwrap() + &b.log().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jet_reflect_is_a_multiplicative_involution(
        a in jet_strategy(),
        b in jet_strategy(),
    ) {
        prop_assert_eq!(a.reflect().reflect(), a.clone());
        prop_assert_eq!(a.mul(&b).reflect(), a.reflect().mul(&b.reflect()));
    }
}

proptest! {
    #[test]
    fn float_rounding_preserves_order_of_well_separated_rationals(
        a in ratio_strategy(),
        b in ratio_strategy(),
    ) {
        // Inputs have denominators below 2^5 and magnitudes below 2^6, so
        // distinct values differ by at least 2^-10 while 256-bit rounding
        // moves each by at most 2^-248 of its magnitude.  Order survives.
        let fa = BigFloat::from_ratio(&a, 256);
        let fb = BigFloat::from_ratio(&b, 256);
        let diff = &a - &b;
        if diff.is_zero() {
            prop_assert_eq!(fa, fb);
        } else if diff.is_negative() {
            prop_assert!(fa < fb);
        } else {
            prop_assert!(fa > fb);
        }
    }

    #[test]
    fn float_round_trip_is_exact_on_integers(v in -1_000_000i64..=1_000_000) {
        let f = BigFloat::from_int(v, 64);
        prop_assert_eq!(f.to_ratio(), Ratio::from_int(v));
    }
}
