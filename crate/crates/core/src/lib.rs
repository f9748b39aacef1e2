//! Exact truncated q-series arithmetic and sign checks for truncated
//! quintuple-product, `(3n+1)` and `(6n+1)` bilateral series.

pub mod combinatorics;
pub mod error;
pub mod identities;
pub mod qproducts;
pub mod report;
pub mod series;
pub mod truncation;

pub use error::{Error, Result};
pub use qproducts::{parse_product, FactorCount, FactorSign, PochhammerFactor, ProductExpr};
pub use report::{ParamValue, Params, Status, VerificationReport, Violation};
pub use series::{Direction, LaurentSeries};
pub use truncation::{
    bilateral_series, lemma21_check, lemma21_generate, sg, term_series, theorem_series,
    verify_truncated_theorem, FamilyExpansion, SignedF, Theorem, TheoremFamily, TruncationWindow,
};
pub use combinatorics::{
    check_corollary, check_corollary_consistency, check_euler_chain, check_op_generating_function,
    check_ppp_generating_function, enumerate_overpartitions, triplet_count, CorollaryOutcome,
    CountTable,
};
pub use identities::{
    check_consequence, check_decomposition_identity, check_part_sign, check_partial_sum_lemma,
    check_quintuple, check_tail_rewrite, consequence_sides, decomposition_series,
    quintuple_sides, ramanujan_entry_check, Consequence, DecompositionPart, Entry,
    IdentityInstance, PartTag, Split,
};
