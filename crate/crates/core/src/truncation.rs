//! Truncated and bilateral-truncated series of the three theorem families.
//!
//! Each family is a bilateral sum of signed monomials divided by a fixed
//! infinite product:
//!
//! * `QuintupleRS { r, s }`: `q^(n(3n+1)R/2) (q^(3nS) - q^(-(3n+1)S))` over
//!   `(q^-S, q^(R+S), q^R; q^R)_inf (q^(R-2S), q^(R+2S); q^2R)_inf`
//! * `ThreeNPlusOne`: `(3n+1) q^(3n^2+2n)` over `(q;q^2)^2 (q^2;q^2) (q^4;q^4)^2`
//! * `SixNPlusOne`: `(6n+1) q^(3n^2+n)` over `(q^2;q^2)^3 (q^2;q^4)^2`
//!
//! Terms are divided by the product one at a time, so the sign of every
//! single term can be inspected on its own.

use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qproducts::{FactorSign, PochhammerFactor, ProductExpr};
use crate::report::{VerificationReport, Violation};
use crate::series::{Direction, LaurentSeries};

/// `+1` for `x >= 0`, `-1` otherwise.
pub fn sg(x: i64) -> i64 {
    if x >= 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremFamily {
    QuintupleRS { r: i64, s: i64 },
    ThreeNPlusOne,
    SixNPlusOne,
}

impl TheoremFamily {
    pub fn quintuple(r: i64, s: i64) -> Result<Self> {
        let f = TheoremFamily::QuintupleRS { r, s };
        f.validate()?;
        Ok(f)
    }

    /// Enforces `1 <= S < R/2` for the quintuple family.
    pub fn validate(&self) -> Result<()> {
        match *self {
            TheoremFamily::QuintupleRS { r, s } if !(s >= 1 && 2 * s < r) => Err(
                Error::InvalidParameters(format!("need 1 <= S < R/2, got R={r}, S={s}")),
            ),
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TheoremFamily::QuintupleRS { .. } => "quintupleRS",
            TheoremFamily::ThreeNPlusOne => "threeNplusOne",
            TheoremFamily::SixNPlusOne => "sixNplusOne",
        }
    }

    pub fn annotate(&self, report: VerificationReport) -> VerificationReport {
        let report = report.param("family", self.name());
        match *self {
            TheoremFamily::QuintupleRS { r, s } => report.param("R", r).param("S", s),
            _ => report,
        }
    }

    /// The product side of the family's identity.
    pub fn denominator(&self) -> ProductExpr {
        use FactorSign::Minus;
        let inf = |offset, step, power| {
            PochhammerFactor::infinite(Minus, offset, step, power).expect("valid symbol")
        };
        match *self {
            TheoremFamily::QuintupleRS { r, s } => ProductExpr::from_factors(vec![
                inf(-s, r, 1),
                inf(r + s, r, 1),
                inf(r, r, 1),
                inf(r - 2 * s, 2 * r, 1),
                inf(r + 2 * s, 2 * r, 1),
            ]),
            TheoremFamily::ThreeNPlusOne => {
                ProductExpr::from_factors(vec![inf(1, 2, 2), inf(2, 2, 1), inf(4, 4, 2)])
            }
            TheoremFamily::SixNPlusOne => ProductExpr::from_factors(vec![inf(2, 2, 3), inf(2, 4, 2)]),
        }
    }

    /// Monomials `(exponent, coefficient)` of the n-th summand before division.
    pub fn numerator_terms(&self, n: i64) -> Vec<(i64, BigInt)> {
        match *self {
            TheoremFamily::QuintupleRS { r, s } => {
                let base = n * (3 * n + 1) / 2 * r;
                vec![
                    (base + 3 * n * s, BigInt::from(1)),
                    (base - (3 * n + 1) * s, BigInt::from(-1)),
                ]
            }
            TheoremFamily::ThreeNPlusOne => vec![(3 * n * n + 2 * n, BigInt::from(3 * n + 1))],
            TheoremFamily::SixNPlusOne => vec![(3 * n * n + n, BigInt::from(6 * n + 1))],
        }
    }

    /// Lowest numerator exponent over all `n`.
    fn numerator_floor(&self) -> i64 {
        match *self {
            TheoremFamily::QuintupleRS { s, .. } => -s,
            _ => 0,
        }
    }

    /// Valuation of the n-th summand after division by the product.
    pub fn term_valuation(&self, n: i64) -> i64 {
        match *self {
            TheoremFamily::QuintupleRS { r, s } => {
                let k = 3 * n + 1;
                if n >= 0 {
                    // (3n+1)(nR/2 - S) + S
                    n * k / 2 * r - k * s + s
                } else {
                    // (3n+1)(nR/2 + S)
                    n * k / 2 * r + k * s
                }
            }
            TheoremFamily::ThreeNPlusOne => 3 * n * n + 2 * n,
            TheoremFamily::SixNPlusOne => 3 * n * n + n,
        }
    }
}

/// Last index reached from `start` in steps of `step` whose valuation is at
/// most `bound`, or `None` if `start` already exceeds it. Valuations must be
/// nondecreasing along the walk; a decrease is reported as an error instead
/// of silently dropping terms.
pub(crate) fn last_index_within(
    start: i64,
    step: i64,
    bound: i64,
    valuation: impl Fn(i64) -> i64,
) -> Result<Option<i64>> {
    let mut idx = start;
    let mut v = valuation(idx);
    if v > bound {
        return Ok(None);
    }
    loop {
        let next = idx + step;
        let w = valuation(next);
        if w < v {
            return Err(Error::NonMonotone {
                index: next,
                from: v,
                to: w,
            });
        }
        if w > bound {
            return Ok(Some(idx));
        }
        idx = next;
        v = w;
    }
}

/// Inclusive bilateral summation window; `a > b` is the empty sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruncationWindow {
    pub a: i64,
    pub b: i64,
}

impl TruncationWindow {
    pub fn new(a: i64, b: i64) -> Self {
        TruncationWindow { a, b }
    }

    pub fn is_empty(&self) -> bool {
        self.a > self.b
    }

    pub fn sign(&self) -> i64 {
        sg(self.a + self.b)
    }
}

/// A family with its product inverted once through a fixed bound, ready to
/// produce any number of terms and windowed sums.
#[derive(Clone, Debug)]
pub struct FamilyExpansion {
    family: TheoremFamily,
    bound: i64,
    inverse_denominator: LaurentSeries,
    // n-range whose terms start at or below the bound
    support: Option<(i64, i64)>,
}

impl FamilyExpansion {
    pub fn new(family: TheoremFamily, bound: i64) -> Result<Self> {
        family.validate()?;
        let inverse_denominator = family
            .denominator()
            .reciprocal_factors()
            .expand(bound - family.numerator_floor())?;
        let valuation = |n| family.term_valuation(n);
        let support = match last_index_within(0, 1, bound, valuation)? {
            None => None,
            Some(hi) => {
                let lo = last_index_within(-1, -1, bound, valuation)?.unwrap_or(0);
                Some((lo, hi))
            }
        };
        Ok(FamilyExpansion {
            family,
            bound,
            inverse_denominator,
            support,
        })
    }

    pub fn family(&self) -> TheoremFamily {
        self.family
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// `1 / product`, exact through `bound - min numerator exponent`.
    pub fn inverse_denominator(&self) -> &LaurentSeries {
        &self.inverse_denominator
    }

    /// Summand `n` divided by the product, exact through the bound.
    pub fn term(&self, n: i64) -> LaurentSeries {
        if self.family.term_valuation(n) > self.bound {
            return LaurentSeries::zero(self.bound);
        }
        self.family
            .numerator_terms(n)
            .iter()
            .map(|(e, c)| self.inverse_denominator.shift(*e).scale(c))
            .fold(LaurentSeries::zero(self.bound), |acc, t| acc.add(&t))
            .truncate(self.bound)
    }

    /// `sum_{n=a}^{b}` of the divided terms (no sign prefactor).
    pub fn partial_sum(&self, a: i64, b: i64) -> LaurentSeries {
        let zero = LaurentSeries::zero(self.bound);
        let Some((lo, hi)) = self.support else {
            return zero;
        };
        (a.max(lo)..=b.min(hi)).fold(zero, |acc, n| acc.add(&self.term(n)))
    }

    /// `Sg(a+b) sum_{n=a}^{b}` of the divided terms.
    pub fn bilateral(&self, window: TruncationWindow) -> LaurentSeries {
        let sum = self.partial_sum(window.a, window.b);
        if window.sign() < 0 {
            sum.negate()
        } else {
            sum
        }
    }

    /// Same sum with the numerators added first and divided once.
    pub fn bilateral_summed_first(&self, window: TruncationWindow) -> LaurentSeries {
        let terms = (window.a..=window.b)
            .filter(|&n| self.family.term_valuation(n) <= self.bound)
            .flat_map(|n| self.family.numerator_terms(n))
            .map(|(e, c)| (e, c * window.sign()));
        let numerator = LaurentSeries::from_terms(terms, self.inverse_denominator.bound());
        numerator.mul(&self.inverse_denominator).truncate(self.bound)
    }
}

/// Summand `n` of `family` divided by its product, through `q^bound`.
pub fn term_series(family: TheoremFamily, n: i64, bound: i64) -> Result<LaurentSeries> {
    Ok(FamilyExpansion::new(family, bound)?.term(n))
}

pub fn bilateral_series(
    family: TheoremFamily,
    window: TruncationWindow,
    bound: i64,
) -> Result<LaurentSeries> {
    Ok(FamilyExpansion::new(family, bound)?.bilateral(window))
}

/// The seven coefficient-sign statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `sum_{-k}^{k}` over the quintuple product is nonnegative (`k >= 0`).
    Thm11 { r: i64, s: i64, k: i64 },
    /// `-1 + sum_{-k}^{k-1}` over the quintuple product is nonpositive (`k >= 1`).
    Thm12 { r: i64, s: i64, k: i64 },
    Thm13 { r: i64, s: i64, window: TruncationWindow },
    Thm14 { k: i64 },
    Thm15 { k: i64 },
    Thm16 { window: TruncationWindow },
    Thm17 { window: TruncationWindow },
}

impl Theorem {
    pub fn id(&self) -> &'static str {
        match self {
            Theorem::Thm11 { .. } => "thm11",
            Theorem::Thm12 { .. } => "thm12",
            Theorem::Thm13 { .. } => "thm13",
            Theorem::Thm14 { .. } => "thm14",
            Theorem::Thm15 { .. } => "thm15",
            Theorem::Thm16 { .. } => "thm16",
            Theorem::Thm17 { .. } => "thm17",
        }
    }

    pub fn family(&self) -> TheoremFamily {
        match *self {
            Theorem::Thm11 { r, s, .. } | Theorem::Thm12 { r, s, .. } | Theorem::Thm13 { r, s, .. } => {
                TheoremFamily::QuintupleRS { r, s }
            }
            Theorem::Thm14 { .. } | Theorem::Thm16 { .. } => TheoremFamily::ThreeNPlusOne,
            Theorem::Thm15 { .. } | Theorem::Thm17 { .. } => TheoremFamily::SixNPlusOne,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.family().validate()?;
        match *self {
            Theorem::Thm11 { k, .. } | Theorem::Thm14 { k } | Theorem::Thm15 { k } if k < 0 => {
                Err(Error::InvalidParameters(format!("{} needs k >= 0, got {k}", self.id())))
            }
            Theorem::Thm12 { k, .. } if k < 1 => {
                Err(Error::InvalidParameters(format!("thm12 needs k >= 1, got {k}")))
            }
            _ => Ok(()),
        }
    }

    fn window(&self) -> Option<TruncationWindow> {
        match *self {
            Theorem::Thm13 { window, .. } | Theorem::Thm16 { window } | Theorem::Thm17 { window } => {
                Some(window)
            }
            _ => None,
        }
    }

    fn truncation_k(&self) -> Option<i64> {
        match *self {
            Theorem::Thm11 { k, .. }
            | Theorem::Thm12 { k, .. }
            | Theorem::Thm14 { k }
            | Theorem::Thm15 { k } => Some(k),
            _ => None,
        }
    }

    /// The exact series the statement is about.
    pub fn series(&self, expansion: &FamilyExpansion) -> Result<LaurentSeries> {
        self.validate()?;
        if expansion.family() != self.family() {
            return Err(Error::InvalidParameters(format!(
                "{} is not a {} statement",
                self.id(),
                expansion.family().name()
            )));
        }
        Ok(match *self {
            Theorem::Thm11 { k, .. } | Theorem::Thm14 { k } | Theorem::Thm15 { k } => {
                expansion.partial_sum(-k, k)
            }
            Theorem::Thm12 { k, .. } => expansion
                .partial_sum(-k, k - 1)
                .sub(&LaurentSeries::one(expansion.bound())),
            Theorem::Thm13 { window, .. } | Theorem::Thm16 { window } | Theorem::Thm17 { window } => {
                expansion.bilateral(window)
            }
        })
    }

    /// Sign requirement and first exponent the statement covers for `series`.
    fn requirement(&self, series: &LaurentSeries) -> (Direction, i64) {
        let from = match self.window() {
            Some(_) => 1,
            None => series.valuation().unwrap_or(series.bound()),
        };
        let direction = match self {
            Theorem::Thm12 { .. } => Direction::Nonpos,
            _ => Direction::Nonneg,
        };
        (direction, from)
    }

    pub fn verify_with(&self, expansion: &FamilyExpansion) -> Result<VerificationReport> {
        let started = Instant::now();
        let series = self.series(expansion)?;
        let (direction, from) = self.requirement(&series);
        let mut report = self.family().annotate(VerificationReport::new(self.id()));
        if let Some(k) = self.truncation_k() {
            report = report.param("k", k);
        }
        if let Some(w) = self.window() {
            // outside the statement, reported only
            let constant = series.coefficient(0).unwrap_or_default();
            report = report
                .param("a", w.a)
                .param("b", w.b)
                .param("constant_term", constant.to_string());
        }
        Ok(report
            .param("N", expansion.bound())
            .conclude(series.first_sign_violation(from, direction), started))
    }
}

pub fn theorem_series(thm: Theorem, bound: i64) -> Result<LaurentSeries> {
    thm.validate()?;
    thm.series(&FamilyExpansion::new(thm.family(), bound)?)
}

/// Builds the series of `thm` and checks its coefficient signs. Bilateral
/// statements are checked from `q^1` on; the constant term is not covered.
pub fn verify_truncated_theorem(thm: Theorem, bound: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    thm.validate()?;
    let expansion = FamilyExpansion::new(thm.family(), bound)?;
    let mut report = thm.verify_with(&expansion)?;
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// An integer function on `[-K, K]` meeting both hypotheses of the
/// windowed-sum sign lemma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedF {
    k_max: i64,
    values: Vec<i64>,
}

impl SignedF {
    /// `values[i]` is `f(i - K)`.
    pub fn new(k_max: i64, values: Vec<i64>) -> Result<Self> {
        if k_max < 1 || values.len() as i64 != 2 * k_max + 1 {
            return Err(Error::MalformedSignedF(format!(
                "need K >= 1 and 2K+1 values, got K={k_max} with {} values",
                values.len()
            )));
        }
        Ok(SignedF { k_max, values })
    }

    pub fn k_max(&self) -> i64 {
        self.k_max
    }

    pub fn get(&self, n: i64) -> i64 {
        self.values[(n + self.k_max) as usize]
    }

    /// Checks `Sg(n) f(n) >= 0` and the two partial-sum restrictions.
    pub fn validate(&self) -> Result<()> {
        for n in -self.k_max..=self.k_max {
            if sg(n) * self.get(n) < 0 {
                return Err(Error::MalformedSignedF(format!(
                    "Sg({n}) f({n}) < 0 with f({n}) = {}",
                    self.get(n)
                )));
            }
        }
        let mut inner: i128 = self.get(0) as i128;
        for k in 1..=self.k_max {
            let s1 = inner + self.get(-k) as i128;
            if s1 > 0 {
                return Err(Error::MalformedSignedF(format!("sum_{{-{k}}}^{{{}}} f = {s1} > 0", k - 1)));
            }
            let s2 = s1 + self.get(k) as i128;
            if s2 < 0 {
                return Err(Error::MalformedSignedF(format!("sum_{{-{k}}}^{{{k}}} f = {s2} < 0")));
            }
            inner = s2;
        }
        Ok(())
    }
}

/// Constructs a [`SignedF`] by the forced schedule: `f(0) >= 0`, then for each
/// `k` pick `f(-k) <= -S2(k-1)` and `f(k) >= -S1(k)`, with slack drawn
/// uniformly from `[0, magnitude]`.
pub fn lemma21_generate(seed: u64, k_max: i64, magnitude: u64) -> Result<SignedF> {
    if k_max < 1 {
        return Err(Error::InvalidParameters(format!("K must be >= 1, got {k_max}")));
    }
    let magnitude = i64::try_from(magnitude)
        .map_err(|_| Error::InvalidParameters("magnitude does not fit in i64".into()))?;
    let overflow = || Error::InvalidParameters("generated values overflow i64".into());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = vec![0i64; (2 * k_max + 1) as usize];
    let centre = k_max as usize;
    values[centre] = rng.gen_range(0..=magnitude);
    let mut s2 = values[centre];
    for k in 1..=k_max as usize {
        let low = s2
            .checked_neg()
            .and_then(|v| v.checked_sub(rng.gen_range(0..=magnitude)))
            .ok_or_else(overflow)?;
        values[centre - k] = low;
        let s1 = s2.checked_add(low).ok_or_else(overflow)?;
        let high = s1
            .checked_neg()
            .and_then(|v| v.checked_add(rng.gen_range(0..=magnitude)))
            .ok_or_else(overflow)?;
        values[centre + k] = high;
        s2 = s1.checked_add(high).ok_or_else(overflow)?;
    }
    SignedF::new(k_max, values)
}

/// Checks `Sg(a+b) sum_{n=a}^{b} f(n) >= 0` for every window inside
/// `[-K, K]`, empty windows included. A failing window is reported with its
/// start as the position and its end as the `violation_b` parameter.
pub fn lemma21_check(f: &SignedF) -> Result<VerificationReport> {
    let started = Instant::now();
    f.validate()?;
    let k = f.k_max();
    // prefix[i] = sum of f over [-K, -K + i)
    let mut prefix = vec![0i128; (2 * k + 2) as usize];
    for n in -k..=k {
        let i = (n + k) as usize;
        prefix[i + 1] = prefix[i] + f.get(n) as i128;
    }
    let mut report = VerificationReport::new("lemma21").param("K", k);
    let mut violation = None;
    'outer: for a in -k..=k {
        for b in -k..=k {
            let sum = if a > b {
                0
            } else {
                prefix[(b + k + 1) as usize] - prefix[(a + k) as usize]
            };
            let signed = sg(a + b) as i128 * sum;
            if signed < 0 {
                violation = Some(Violation::new(a, &BigInt::from(signed)));
                report = report.param("violation_b", b);
                break 'outer;
            }
        }
    }
    Ok(report.conclude(violation, started))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn ints(s: &LaurentSeries, from: i64, to: i64) -> Vec<i64> {
        (from..=to)
            .map(|e| i64::try_from(s.coefficient(e).unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn sg_values() {
        assert_eq!(sg(0), 1);
        assert_eq!(sg(-3), -1);
        assert_eq!(sg(7), 1);
    }

    #[test]
    fn quintuple_hypothesis() {
        assert!(TheoremFamily::quintuple(3, 1).is_ok());
        assert!(TheoremFamily::quintuple(4, 2).is_err());
        assert!(TheoremFamily::quintuple(2, 1).is_err());
        assert!(TheoremFamily::quintuple(5, 0).is_err());
    }

    #[test]
    fn quintuple_term_zero() {
        let t = term_series(TheoremFamily::QuintupleRS { r: 3, s: 1 }, 0, 10).unwrap();
        assert_eq!(ints(&t, 0, 10), [1, 1, 2, 3, 5, 8, 12, 18, 26, 37, 53]);
    }

    #[test]
    fn three_n_plus_one_negative_term() {
        let t = term_series(TheoremFamily::ThreeNPlusOne, -1, 20).unwrap();
        assert_eq!(t.valuation(), Some(1));
        assert_eq!(ints(&t, 0, 10), [0, -2, -4, -8, -16, -32, -56, -96, -160, -266, -424]);
        assert!(t.terms().all(|(_, c)| !c.is_positive()));
    }

    #[test]
    fn far_terms_vanish() {
        for family in [
            TheoremFamily::QuintupleRS { r: 5, s: 2 },
            TheoremFamily::ThreeNPlusOne,
            TheoremFamily::SixNPlusOne,
        ] {
            assert!(term_series(family, 9, 30).unwrap().is_zero());
            assert!(term_series(family, -9, 30).unwrap().is_zero());
        }
    }

    #[test]
    fn term_valuations_match_expansion() {
        for family in [
            TheoremFamily::QuintupleRS { r: 7, s: 3 },
            TheoremFamily::QuintupleRS { r: 3, s: 1 },
            TheoremFamily::ThreeNPlusOne,
            TheoremFamily::SixNPlusOne,
        ] {
            let x = FamilyExpansion::new(family, 120).unwrap();
            for n in -5..=5 {
                let v = family.term_valuation(n);
                if v <= 120 {
                    assert_eq!(x.term(n).valuation(), Some(v), "{family:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn empty_window_is_zero() {
        for family in [TheoremFamily::ThreeNPlusOne, TheoremFamily::SixNPlusOne] {
            let s = bilateral_series(family, TruncationWindow::new(3, 1), 20).unwrap();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn single_term_windows() {
        let s = bilateral_series(TheoremFamily::ThreeNPlusOne, TruncationWindow::new(0, 0), 10).unwrap();
        assert_eq!(ints(&s, 0, 10), [1, 2, 4, 8, 16, 28, 48, 80, 133, 212, 332]);

        let s = bilateral_series(TheoremFamily::SixNPlusOne, TruncationWindow::new(-1, 0), 10).unwrap();
        assert_eq!(ints(&s, 0, 10), [-1, 0, 0, 0, 7, 0, 35, 0, 126, 0, 374]);
    }

    #[test]
    fn theorem_examples() {
        let r = verify_truncated_theorem(Theorem::Thm15 { k: 0 }, 50).unwrap();
        assert!(r.passed());
        let r = verify_truncated_theorem(
            Theorem::Thm13 { r: 5, s: 2, window: TruncationWindow::new(-3, 2) },
            100,
        )
        .unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_truncated_theorem(Theorem::Thm12 { r: 3, s: 1, k: 1 }, 100).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn theorem_hypotheses() {
        assert!(verify_truncated_theorem(Theorem::Thm12 { r: 3, s: 1, k: 0 }, 10).is_err());
        assert!(verify_truncated_theorem(Theorem::Thm11 { r: 3, s: 1, k: -1 }, 10).is_err());
        assert!(verify_truncated_theorem(Theorem::Thm11 { r: 3, s: 1, k: 0 }, 10).is_ok());
        assert!(verify_truncated_theorem(
            Theorem::Thm13 { r: 2, s: 1, window: TruncationWindow::new(0, 0) },
            10
        )
        .is_err());
    }

    #[test]
    fn bilateral_constant_term_can_be_negative() {
        // Sg(-1) * (n = -1 and n = 0 terms): constant -1, excluded from the check.
        let thm = Theorem::Thm17 { window: TruncationWindow::new(-1, 0) };
        let s = theorem_series(thm, 40).unwrap();
        assert_eq!(s.coefficient(0).unwrap(), BigInt::from(-1));
        assert!(verify_truncated_theorem(thm, 40).unwrap().passed());
    }

    #[test]
    fn unsigned_left_window_is_caught() {
        // without Sg(a+b) the window [-1, 0] has negative coefficients
        let x = FamilyExpansion::new(TheoremFamily::ThreeNPlusOne, 30).unwrap();
        let raw = x.partial_sum(-1, 0);
        assert!(raw.first_sign_violation(1, Direction::Nonneg).is_some());
        assert!(x.bilateral(TruncationWindow::new(-1, 0)).first_sign_violation(1, Direction::Nonneg).is_none());
    }

    #[test]
    fn monotone_walk_rejects_decrease() {
        let err = last_index_within(0, 1, 100, |n| 10 - n).unwrap_err();
        assert!(matches!(err, Error::NonMonotone { index: 1, .. }));
        assert_eq!(last_index_within(0, 1, 10, |n| n * n).unwrap(), Some(3));
        assert_eq!(last_index_within(0, 1, -1, |n| n * n).unwrap(), None);
    }

    #[test]
    fn lemma21_examples() {
        let zero = SignedF::new(3, vec![0; 7]).unwrap();
        assert!(lemma21_check(&zero).unwrap().passed());

        let f = SignedF::new(1, vec![-5, 5, 0]).unwrap();
        assert!(lemma21_check(&f).unwrap().passed());

        let bad = SignedF::new(1, vec![1, 0, 0]).unwrap();
        assert!(matches!(lemma21_check(&bad), Err(Error::MalformedSignedF(_))));
        let bad = SignedF::new(1, vec![-1, 0, 0]).unwrap();
        assert!(matches!(lemma21_check(&bad), Err(Error::MalformedSignedF(_))));
        assert!(SignedF::new(2, vec![0; 3]).is_err());
    }

    #[test]
    fn lemma21_generator_is_deterministic_and_valid() {
        let f = lemma21_generate(42, 12, 50).unwrap();
        assert_eq!(f, lemma21_generate(42, 12, 50).unwrap());
        assert_ne!(f, lemma21_generate(43, 12, 50).unwrap());
        f.validate().unwrap();
        assert!(lemma21_check(&f).unwrap().passed());
    }
}
