mod common;

use common::{family, quintuple_pair, series, unit_led_series};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use quintrunc::qproducts::pochhammer_finite;
use quintrunc::{
    bilateral_series, lemma21_check, lemma21_generate, parse_product, theorem_series,
    FactorSign, FamilyExpansion, LaurentSeries, PochhammerFactor, ProductExpr, Theorem,
    TheoremFamily, TruncationWindow,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn addition_is_associative(a in series(), b in series(), c in series()) {
        prop_assert!((&(&a + &b) + &c).agrees_with(&(&a + &(&b + &c))));
    }

    #[test]
    fn multiplication_commutes(a in series(), b in series()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_distributes(a in series(), b in series(), c in series()) {
        prop_assert!((&a * &(&b + &c)).agrees_with(&(&(&a * &b) + &(&a * &c))));
    }

    #[test]
    fn multiplication_is_associative(a in series(), b in series(), c in series()) {
        prop_assert!((&(&a * &b) * &c).agrees_with(&(&a * &(&b * &c))));
    }

    #[test]
    fn additive_inverse(a in series()) {
        prop_assert!((&a + &(-&a)).is_zero());
    }
}

proptest! {
    #[test]
    fn valuations_add(a in series(), b in series()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = &a * &b;
        let v = a.valuation().unwrap() + b.valuation().unwrap();
        // the leading product may lie past the product's exact range
        prop_assume!(v <= p.bound());
        prop_assert_eq!(p.valuation(), Some(v));
        prop_assert_eq!(
            p.coefficient(v).unwrap(),
            &a.coeffs()[0] * &b.coeffs()[0]
        );
    }

    #[test]
    fn invert_round_trip(s in unit_led_series()) {
        let inv = s.invert().unwrap();
        let one = &s * &inv;
        prop_assert!(one.bound() >= 0);
        prop_assert_eq!(one, LaurentSeries::one(s.bound() - s.valuation().unwrap()));
        prop_assert!(inv.invert().unwrap().agrees_with(&s));
    }

    #[test]
    fn truncation_commutes_with_add_and_mul(a in series(), b in series(), m in -8i64..12) {
        let (ta, tb) = (a.truncate(m), b.truncate(m));
        prop_assert!((&ta + &tb).agrees_with(&(&a + &b).truncate(m)));
        prop_assert!((&ta * &tb).agrees_with(&(&a * &b)));
    }

    #[test]
    fn binomial_kernels_match_mul(s in series(), c in -3i64..=3, e in 1i64..6) {
        let binomial = LaurentSeries::from_terms([(0, 1), (e, c)], s.bound() + 10);
        prop_assert!(s.mul_binomial(c, e).agrees_with(&(&s * &binomial)));
        if c == 1 || c == -1 {
            prop_assert!(s.mul_binomial(c, e).div_binomial(c, e) == s);
        }
    }

    #[test]
    fn inflate_deflate_round_trip(s in series(), d in 1i64..5) {
        prop_assert_eq!(s.inflate(d).deflate(d).unwrap(), s);
    }

    #[test]
    fn json_round_trip(s in series()) {
        prop_assert_eq!(LaurentSeries::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn product_splits_at_any_factor(
        offset in -3i64..6,
        step in 1i64..5,
        n in 0u64..8,
        plus in prop::bool::ANY,
        bound in 0i64..60,
    ) {
        prop_assume!(offset != 0 && (offset + step * n as i64) != 0);
        let sign = if plus { FactorSign::Plus } else { FactorSign::Minus };
        let whole = ProductExpr::new().times(PochhammerFactor::infinite(sign, offset, step, 1).unwrap());
        let split = ProductExpr::new()
            .times(PochhammerFactor::finite(sign, offset, step, n, 1).unwrap())
            .times(PochhammerFactor::infinite(sign, offset + step * n as i64, step, 1).unwrap());
        prop_assert!(whole.expand(bound).unwrap().agrees_with(&split.expand(bound).unwrap()));
    }

    #[test]
    fn raising_the_bound_extends(
        offset in -3i64..6,
        step in 1i64..5,
        power in prop_oneof![-3i32..0, 1i32..4],
        bound in -4i64..40,
        extra in 0i64..30,
    ) {
        prop_assume!(offset % step != 0 || offset > 0);
        let p = ProductExpr::new()
            .times(PochhammerFactor::infinite(FactorSign::Minus, offset, step, power).unwrap())
            .times(PochhammerFactor::infinite(FactorSign::Plus, step, step, 1).unwrap());
        let low = p.expand(bound).unwrap();
        let high = p.expand(bound + extra).unwrap();
        prop_assert_eq!(high.truncate(bound), low);
    }

    #[test]
    fn display_parses_back(
        offset in -5i64..9,
        step in 1i64..6,
        count in prop::option::of(0u64..6),
        power in prop_oneof![-3i32..0, 1i32..4],
        plus in prop::bool::ANY,
    ) {
        let sign = if plus { FactorSign::Plus } else { FactorSign::Minus };
        let f = match count {
            Some(n) => PochhammerFactor::finite(sign, offset, step, n, power),
            None => PochhammerFactor::infinite(sign, offset, step, power),
        }.unwrap();
        let inv = f.inverse();
        let e = ProductExpr::new().times(f).times(inv);
        prop_assert_eq!(parse_product(&e.to_string()).unwrap(), e);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn terms_are_signed_by_index(f in family()) {
        let x = FamilyExpansion::new(f, 80).unwrap();
        for n in -8i64..=8 {
            let t = x.term(n);
            if n >= 0 {
                prop_assert!(t.terms().all(|(_, c)| !c.is_negative()), "{:?} n={}", f, n);
            } else {
                prop_assert!(t.terms().all(|(_, c)| !c.is_positive()), "{:?} n={}", f, n);
            }
        }
    }

    #[test]
    fn division_order_is_irrelevant(f in family(), a in -6i64..=6, b in -6i64..=6) {
        let x = FamilyExpansion::new(f, 60).unwrap();
        let w = TruncationWindow::new(a, b);
        prop_assert_eq!(x.bilateral(w), x.bilateral_summed_first(w));
    }

    #[test]
    fn windows_split_at_the_mirror(f in family(), a in -6i64..=-1, extra in 0i64..6) {
        let x = FamilyExpansion::new(f, 60).unwrap();
        let b = -a + extra;
        let whole = x.bilateral(TruncationWindow::new(a, b));
        let parts = x.bilateral(TruncationWindow::new(a, -a)).add(&x.partial_sum(-a + 1, b));
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn bilateral_reproduces_unilateral((r, s) in quintuple_pair(), k in 1i64..=5) {
        let f = TheoremFamily::QuintupleRS { r, s };
        let full = bilateral_series(f, TruncationWindow::new(-k, k), 80).unwrap();
        prop_assert_eq!(full, theorem_series(Theorem::Thm11 { r, s, k }, 80).unwrap());
        // Sg(-1) flips the left-leaning window; thm12 subtracts 1 instead
        let left = bilateral_series(f, TruncationWindow::new(-k, k - 1), 80).unwrap();
        let thm12 = theorem_series(Theorem::Thm12 { r, s, k }, 80).unwrap();
        prop_assert_eq!(left.negate().sub(&LaurentSeries::one(80)), thm12);
    }

    #[test]
    fn lemma21_holds_for_generated_functions(seed in any::<u64>(), k in 1i64..=12, magnitude in 0u64..1000) {
        let f = lemma21_generate(seed, k, magnitude).unwrap();
        prop_assert!(lemma21_check(&f).unwrap().passed());
    }
}

#[test]
fn euler_identity_through_300() {
    let plus = ProductExpr::new().times(PochhammerFactor::infinite(FactorSign::Plus, 1, 1, 1).unwrap());
    let odd = ProductExpr::new().times(PochhammerFactor::infinite(FactorSign::Minus, 1, 2, 1).unwrap());
    for n in [0, 1, 7, 50, 300] {
        let prod = &plus.expand(n).unwrap() * &odd.expand(n).unwrap();
        assert_eq!(prod, LaurentSeries::one(n));
    }
}

#[test]
fn pentagonal_product_splits() {
    // (q;q)_n (q^(n+1);q)_inf = (q;q)_inf, a concrete instance of the split
    let n = 5;
    let head = pochhammer_finite(FactorSign::Minus, 1, 1, n, 40).unwrap();
    let tail = parse_product("(q^6; q)_inf").unwrap().expand(40).unwrap();
    let full = parse_product("(q; q)_inf").unwrap().expand(40).unwrap();
    assert_eq!(&head * &tail, full);
    assert!(full.terms().all(|(_, c)| c.abs() <= BigInt::from(1) && !c.is_zero()));
}
