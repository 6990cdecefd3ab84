//! Property-based checks for the arithmetic layer and the convolution algebra.

use proptest::prelude::*;

use hopftwist::arith::{parse_ratexpr, rat, Monomial, RatExpr, SparsePoly, VarTable};
use hopftwist::hopf::{convolution, LinMap};
use hopftwist::presets::sweedler_symbolic;

fn poly_strategy() -> impl Strategy<Value = SparsePoly> {
    // up to 5 terms in 3 variables with small exponents and coefficients
    prop::collection::vec(
        (
            prop::collection::vec((0u32..3, 1u32..4), 0..3),
            -6i64..=6,
        ),
        0..5,
    )
    .prop_map(|terms| {
        let mut p = SparsePoly::zero();
        for (exps, c) in terms {
            p.add_term(Monomial::from_pairs(exps), rat(c));
        }
        p
    })
}

fn ratexpr_strategy() -> impl Strategy<Value = RatExpr> {
    (poly_strategy(), poly_strategy()).prop_map(|(n, d)| {
        if d.is_zero() {
            RatExpr::from_poly(n)
        } else {
            &RatExpr::from_poly(n) / &RatExpr::from_poly(d)
        }
    })
}

proptest! {
    #[test]
    fn poly_ring_axioms(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p - &p, SparsePoly::zero());
        prop_assert_eq!(&p * &SparsePoly::one(), p);
    }

    #[test]
    fn exact_division_inverts_multiplication(p in poly_strategy(), q in poly_strategy()) {
        prop_assume!(!q.is_zero());
        let prod = &p * &q;
        prop_assert_eq!(prod.div_exact(&q), Some(p));
    }

    #[test]
    fn fraction_equality_is_semantic(p in poly_strategy(), q in poly_strategy()) {
        prop_assume!(!q.is_zero());
        let a = &RatExpr::from_poly(p.clone()) / &RatExpr::from_poly(q.clone());
        // multiplying numerator and denominator by the same polynomial
        let scale = &q + &SparsePoly::one();
        prop_assume!(!scale.is_zero());
        let b = &RatExpr::from_poly(&p * &scale) / &RatExpr::from_poly(&q * &scale);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn field_axioms(a in ratexpr_strategy(), b in ratexpr_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv(), RatExpr::one());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a);
            }
        }
    }

    #[test]
    fn parse_print_round_trip(p in poly_strategy()) {
        let vars = VarTable::new(
            &["u".to_string(), "v".to_string(), "w".to_string()],
            &[],
        );
        let s = p.to_string_with(&vars);
        let back = parse_ratexpr(&s, &vars).unwrap();
        prop_assert_eq!(back, RatExpr::from_poly(p));
    }

    #[test]
    fn convolution_is_associative(
        f in prop::collection::vec(-4i64..=4, 4),
        g in prop::collection::vec(-4i64..=4, 4),
        h in prop::collection::vec(-4i64..=4, 4),
    ) {
        let (hopf, _) = sweedler_symbolic();
        let lm = |v: &[i64]| LinMap::new(v.iter().map(|&c| RatExpr::constant(rat(c))).collect());
        let (f, g, h) = (lm(&f), lm(&g), lm(&h));
        let c = &hopf.coalg;
        let left = convolution(c, &convolution(c, &f, &g), &h);
        let right = convolution(c, &f, &convolution(c, &g, &h));
        prop_assert_eq!(left.values, right.values);
        // eps eta is the convolution unit
        let unit = LinMap::counit_unit(c);
        prop_assert_eq!(convolution(c, &f, &unit).values, f.values.clone());
        prop_assert_eq!(convolution(c, &unit, &f).values, f.values);
    }
}
