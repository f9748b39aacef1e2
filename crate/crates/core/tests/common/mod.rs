#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use quintrunc::{LaurentSeries, TheoremFamily};

/// Random Laurent series, bounds from one below the valuation upwards.
pub fn series() -> impl Strategy<Value = LaurentSeries> {
    (-6i64..6, prop::collection::vec(-20i64..20, 0..14), 0i64..4).prop_map(|(v, cs, extra)| {
        let bound = v + cs.len() as i64 - 1 + extra;
        LaurentSeries::from_coeffs(v, cs.into_iter().map(BigInt::from).collect(), bound)
    })
}

/// Random series whose leading coefficient is a unit.
pub fn unit_led_series() -> impl Strategy<Value = LaurentSeries> {
    (-6i64..6, prop::bool::ANY, prop::collection::vec(-20i64..20, 0..14)).prop_map(|(v, neg, rest)| {
        let mut cs = vec![BigInt::from(if neg { -1 } else { 1 })];
        cs.extend(rest.into_iter().map(BigInt::from));
        let bound = v + cs.len() as i64 - 1;
        LaurentSeries::from_coeffs(v, cs, bound)
    })
}

/// Admissible `(R, S)` with `R <= 12`.
pub fn quintuple_pair() -> impl Strategy<Value = (i64, i64)> {
    (3i64..=12).prop_flat_map(|r| (Just(r), 1..=(r - 1) / 2))
}

pub fn family() -> impl Strategy<Value = TheoremFamily> {
    prop_oneof![
        quintuple_pair().prop_map(|(r, s)| TheoremFamily::QuintupleRS { r, s }),
        Just(TheoremFamily::ThreeNPlusOne),
        Just(TheoremFamily::SixNPlusOne),
    ]
}

/// Every admissible `(R, S)` with `R <= 12`, in lexicographic order.
pub fn all_quintuple_pairs() -> Vec<(i64, i64)> {
    (3..=12)
        .flat_map(|r| (1..).take_while(move |s| 2 * s < r).map(move |s| (r, s)))
        .collect()
}
