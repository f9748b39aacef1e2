//! Both sides of the closed identities, and exact-equality checkers for them.
//!
//! Covers the alternating quintuple product, its `(3n+1)` and `(6n+1)`
//! consequences, two Ramanujan entries specialised at `a = q^j`, and the
//! series `A, B, A1..A3, C, D, C1..C4` used to split the truncated sums.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::report::{VerificationReport, Violation};
use crate::series::{Direction, LaurentSeries};
use crate::truncation::{last_index_within, FamilyExpansion, TheoremFamily};

/// The two single-sum consequences of the quintuple product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Consequence {
    ThreeNPlusOne,
    SixNPlusOne,
}

impl Consequence {
    pub fn family(self) -> TheoremFamily {
        match self {
            Consequence::ThreeNPlusOne => TheoremFamily::ThreeNPlusOne,
            Consequence::SixNPlusOne => TheoremFamily::SixNPlusOne,
        }
    }

    pub fn name(self) -> &'static str {
        self.family().name()
    }
}

impl FromStr for Consequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "threeNplusOne" | "3n+1" => Ok(Consequence::ThreeNPlusOne),
            "sixNplusOne" | "6n+1" => Ok(Consequence::SixNPlusOne),
            _ => Err(Error::InvalidParameters(format!(
                "unknown family {s:?} (expected threeNplusOne or sixNplusOne)"
            ))),
        }
    }
}

/// Two sides of an identity, each exact through at least `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityInstance {
    pub name: String,
    pub lhs: LaurentSeries,
    pub rhs: LaurentSeries,
    pub bound: i64,
}

impl IdentityInstance {
    pub fn new(name: impl Into<String>, lhs: LaurentSeries, rhs: LaurentSeries, bound: i64) -> Result<Self> {
        for side in [&lhs, &rhs] {
            if side.bound() < bound {
                return Err(Error::BeyondTruncation {
                    exponent: bound,
                    bound: side.bound(),
                });
            }
        }
        Ok(IdentityInstance {
            name: name.into(),
            lhs,
            rhs,
            bound,
        })
    }

    /// First exponent `<= bound` where the sides differ, with `lhs - rhs`.
    pub fn first_violation(&self) -> Option<Violation> {
        self.lhs
            .truncate(self.bound)
            .first_difference(&self.rhs.truncate(self.bound))
            .map(|(e, d)| Violation::new(e, &d))
    }

    pub fn report(&self, started: Instant) -> VerificationReport {
        VerificationReport::new(self.name.clone())
            .param("N", self.bound)
            .conclude(self.first_violation(), started)
    }
}

/// Adds `term(n)` for `n = start, start + step, ...` while `valuation(n)`
/// stays at or below `bound`.
fn sum_while(
    start: i64,
    step: i64,
    bound: i64,
    valuation: impl Fn(i64) -> i64,
    mut term: impl FnMut(i64) -> LaurentSeries,
) -> Result<LaurentSeries> {
    let mut acc = LaurentSeries::zero(bound);
    if let Some(last) = last_index_within(start, step, bound, valuation)? {
        let mut n = start;
        loop {
            acc = acc.add(&term(n));
            if n == last {
                break;
            }
            n += step;
        }
    }
    Ok(acc)
}

/// Monomials summed over `n >= start` (or `n <= start` when `step < 0`).
fn monomial_sum(
    start: i64,
    step: i64,
    bound: i64,
    valuation: impl Fn(i64) -> i64,
    terms: impl Fn(i64) -> Vec<(i64, BigInt)>,
) -> Result<LaurentSeries> {
    let last = last_index_within(start, step, bound, valuation)?;
    let all = match last {
        None => Vec::new(),
        Some(last) => {
            let (lo, hi) = if step > 0 { (start, last) } else { (last, start) };
            (lo..=hi).flat_map(&terms).collect()
        }
    };
    Ok(LaurentSeries::from_terms(all, bound))
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `c q^e` through `bound`, or zero when `e > bound`.
fn mono(c: i64, e: i64, bound: i64) -> LaurentSeries {
    LaurentSeries::from_terms([(e, c)], bound)
}

/// Divides by `(-q^e0; q^step)_count`.
fn over_plus_pochhammer(s: LaurentSeries, e0: i64, step: i64, count: i64) -> LaurentSeries {
    (0..count).fold(s, |acc, i| acc.div_binomial(1, e0 + i * step))
}

/// Left side: the bilateral sum `sum_n q^(n(3n+1)R/2) (q^(3nS) - q^(-(3n+1)S))`.
/// Right side: the five-symbol product.
pub fn quintuple_sides(r: i64, s: i64, bound: i64) -> Result<(LaurentSeries, LaurentSeries)> {
    let family = TheoremFamily::quintuple(r, s)?;
    let low = |n: i64| {
        family
            .numerator_terms(n)
            .iter()
            .map(|(e, _)| *e)
            .min()
            .expect("two monomials")
    };
    let terms = |n| family.numerator_terms(n);
    let upper = monomial_sum(0, 1, bound, low, terms)?;
    let lower = monomial_sum(-1, -1, bound, low, terms)?;
    let lhs = upper.add(&lower);
    let rhs = family.denominator().expand(bound)?;
    Ok((lhs, rhs))
}

pub fn check_quintuple(r: i64, s: i64, bound: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    let (lhs, rhs) = quintuple_sides(r, s, bound)?;
    Ok(IdentityInstance::new("quintuple", lhs, rhs, bound)?
        .report(started)
        .param("R", r)
        .param("S", s))
}

/// Left side: `sum (3n+1) q^(3n^2+2n)` or `sum (6n+1) q^(3n^2+n)` over the
/// `n` whose exponent is at most `bound`. Right side: the matching product.
pub fn consequence_sides(which: Consequence, bound: i64) -> Result<(LaurentSeries, LaurentSeries)> {
    let family = which.family();
    let valuation = |n| family.term_valuation(n);
    let terms = |n| family.numerator_terms(n);
    let lhs = monomial_sum(0, 1, bound, valuation, terms)?.add(&monomial_sum(-1, -1, bound, valuation, terms)?);
    let rhs = family.denominator().expand(bound)?;
    Ok((lhs, rhs))
}

pub fn check_consequence(which: Consequence, bound: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    let (lhs, rhs) = consequence_sides(which, bound)?;
    Ok(IdentityInstance::new("consequence", lhs, rhs, bound)?
        .report(started)
        .param("family", which.name()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartTag {
    A,
    B,
    A1,
    A2,
    A3,
    C,
    D,
    C1,
    C2,
    C3,
    C4,
}

impl PartTag {
    pub const ALL: [PartTag; 11] = [
        PartTag::A,
        PartTag::B,
        PartTag::A1,
        PartTag::A2,
        PartTag::A3,
        PartTag::C,
        PartTag::D,
        PartTag::C1,
        PartTag::C2,
        PartTag::C3,
        PartTag::C4,
    ];

    /// The family whose product the part is divided by.
    pub fn family(self) -> TheoremFamily {
        match self {
            PartTag::A | PartTag::B | PartTag::A1 | PartTag::A2 | PartTag::A3 => {
                TheoremFamily::ThreeNPlusOne
            }
            _ => TheoremFamily::SixNPlusOne,
        }
    }

    /// Sign of the part divided by its family's product.
    pub fn direction(self) -> Direction {
        match self {
            PartTag::A | PartTag::B | PartTag::C | PartTag::D => Direction::Nonpos,
            _ => Direction::Nonneg,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PartTag::A => "A",
            PartTag::B => "B",
            PartTag::A1 => "A1",
            PartTag::A2 => "A2",
            PartTag::A3 => "A3",
            PartTag::C => "C",
            PartTag::D => "D",
            PartTag::C1 => "C1",
            PartTag::C2 => "C2",
            PartTag::C3 => "C3",
            PartTag::C4 => "C4",
        }
    }
}

impl fmt::Display for PartTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PartTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PartTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown part {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecompositionPart {
    pub tag: PartTag,
    pub k: i64,
}

impl DecompositionPart {
    pub fn new(tag: PartTag, k: i64) -> Result<Self> {
        check_k(k)?;
        Ok(DecompositionPart { tag, k })
    }
}

fn check_k(k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidParameters(format!("k must be >= 1, got {k}")));
    }
    Ok(())
}

/// Expansion of one part through `q^bound`.
pub fn decomposition_series(part: DecompositionPart, bound: i64) -> Result<LaurentSeries> {
    let k = part.k;
    check_k(k)?;
    let n_bound = bound;
    match part.tag {
        PartTag::A | PartTag::B => {
            let e_a = move |n: i64| 3 * n * n + 6 * n * k + 2 * n + 4 * k;
            let is_a = part.tag == PartTag::A;
            monomial_sum(0, 1, n_bound, e_a, move |n| {
                let e = e_a(n);
                let m = 2 * n + 2 * k + 1;
                if is_a {
                    vec![(e + m, big(3 * n + 3)), (e, big(-(3 * n + 3))), (e + m, big(1))]
                } else {
                    vec![(e + m, big(3 * k - 2)), (e, big(-(3 * k - 2)))]
                }
            })
        }
        PartTag::C | PartTag::D => {
            let e_c = move |n: i64| 3 * n * n + (6 * k + 1) * n + 2 * k;
            let is_c = part.tag == PartTag::C;
            monomial_sum(0, 1, n_bound, e_c, move |n| {
                let e = e_c(n);
                let m = 4 * n + 4 * k + 2;
                if is_c {
                    vec![(e + m, big(6 * n + 4)), (e, big(-(6 * n + 4))), (e + m, big(4))]
                } else {
                    vec![(e + m, big(6 * k - 3)), (e, big(-(6 * k - 3)))]
                }
            })
        }
        PartTag::A1 => {
            // n-th summand starts at q^(n^2+(4k+1)n+6k+1) through the i=0 inner term
            let val = move |n: i64| n * n + (4 * k + 1) * n + 6 * k + 1;
            sum_while(1, 1, bound, val, |n| {
                let sign = if n % 2 == 1 { 1 } else { -1 };
                let head = mono(sign, n * n + (4 * k + 1) * n + 6 * k, bound);
                let head = over_plus_pochhammer(head, 2 * k + 1, 2, n + 1);
                let inner = (0..=n).fold(LaurentSeries::zero(bound), |acc, i| {
                    acc.add(&mono(1, 2 * i + 1, bound).div_binomial(1, 2 * i + 2 * k + 1))
                });
                head.mul(&inner).truncate(bound)
            })
        }
        PartTag::A2 => {
            let val = move |n: i64| n * n + (4 * k + 1) * n + 4 * k;
            sum_while(2, 1, bound, val, |n| {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let head = mono(sign * (2 * n + 3), val(n), bound);
                over_plus_pochhammer(head, 2 * k + 1, 2, n + 1)
            })
        }
        PartTag::A3 => {
            let t1 = mono(-1, 6 * k + 1, bound)
                .div_binomial(1, 2 * k + 1)
                .div_binomial(1, 2 * k + 1);
            let t2 = mono(3, 4 * k, bound).div_binomial(1, 2 * k + 1);
            let t3 = mono(-5, 8 * k + 2, bound)
                .div_binomial(1, 2 * k + 1)
                .div_binomial(1, 2 * k + 3);
            Ok(t1.add(&t2).add(&t3))
        }
        PartTag::C1 | PartTag::C2 | PartTag::C3 => {
            let tag = part.tag;
            // lower bound for all three j-summands
            let val = move |j: i64| 8 * k * j + 8 * k + 4 * j * j + 6 * j + 2;
            sum_while(0, 1, bound, val, |j| {
                let x = over_plus_pochhammer(mono(1, val(j), bound), 2 * k + 2, 2, 2 * j + 2);
                let inner = |from: i64| {
                    (from..=2 * j + 1).fold(LaurentSeries::zero(bound), |acc, i| {
                        acc.add(&mono(1, 2 * i, bound).div_binomial(1, 2 * i + 2 * k))
                    })
                };
                let e = 2 * k + 4 * j + 4;
                let rest = match tag {
                    PartTag::C1 => inner(1).mul_binomial(-1, 4 * k + 4 * j + 4),
                    PartTag::C2 => inner(2).shift(e),
                    _ => mono(1, 2, bound)
                        .div_binomial(1, 2 * k + 2)
                        .sub(&mono(1, e, bound).div_binomial(1, e))
                        .shift(e),
                };
                x.mul(&rest).truncate(bound)
            })
        }
        PartTag::C4 => {
            let val = move |n: i64| 4 * k * n + 2 * k + n * n + n;
            sum_while(0, 1, bound, val, |n| {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let head = mono(sign * (2 * n + 2), val(n), bound);
                over_plus_pochhammer(head, 2 * k + 2, 2, n)
            })
        }
    }
}

/// Checks that `sum_{n=-k}^{k-1}` of the divided terms equals
/// `1 + q^(3k^2-2k) (A+B)/P` for `(3n+1)`, or `1 + q^(3k^2-k) (C+D)/P'`
/// for `(6n+1)`.
pub fn check_partial_sum_lemma(which: Consequence, k: i64, bound: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    check_k(k)?;
    let family = which.family();
    let lhs = FamilyExpansion::new(family, bound)?.partial_sum(-k, k - 1);

    let (shift, parts) = match which {
        Consequence::ThreeNPlusOne => (3 * k * k - 2 * k, [PartTag::A, PartTag::B]),
        Consequence::SixNPlusOne => (3 * k * k - k, [PartTag::C, PartTag::D]),
    };
    let one = LaurentSeries::one(bound);
    // past the bound the correction term cannot reach q^N
    let rhs = if shift > bound {
        one
    } else {
        let depth = bound - shift;
        let sum = parts.iter().try_fold(LaurentSeries::zero(depth), |acc, &tag| {
            Ok::<_, Error>(acc.add(&decomposition_series(DecompositionPart::new(tag, k)?, depth)?))
        })?;
        let inverse = family.denominator().reciprocal_factors().expand(depth)?;
        one.add(&sum.mul(&inverse).truncate(depth).shift(shift))
    };
    let name = match which {
        Consequence::ThreeNPlusOne => "lemma32",
        Consequence::SixNPlusOne => "lemma42",
    };
    Ok(IdentityInstance::new(name, lhs, rhs, bound)?
        .report(started)
        .param("family", which.name())
        .param("k", k))
}

/// The two linear relations between parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Split {
    /// `A = -(A1 + A2 + A3)`
    A,
    /// `-C = 2 (C1 + C2 + C3 + C4)`
    C,
}

pub fn check_decomposition_identity(which: Split, k: i64, bound: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    let part = |tag| decomposition_series(DecompositionPart::new(tag, k)?, bound);
    let sum = |tags: &[PartTag]| {
        tags.iter()
            .try_fold(LaurentSeries::zero(bound), |acc, &t| Ok::<_, Error>(acc.add(&part(t)?)))
    };
    let (name, lhs, rhs) = match which {
        Split::A => (
            "lemma33",
            part(PartTag::A)?,
            sum(&[PartTag::A1, PartTag::A2, PartTag::A3])?.negate(),
        ),
        Split::C => (
            "lemma43",
            part(PartTag::C)?.negate(),
            sum(&[PartTag::C1, PartTag::C2, PartTag::C3, PartTag::C4])?.scale(&big(2)),
        ),
    };
    Ok(IdentityInstance::new(name, lhs, rhs, bound)?
        .report(started)
        .param("k", k))
}

/// Divides the part by its family's product and checks the sign of every
/// coefficient from `q^0` through `q^bound`.
pub fn check_part_sign(part: DecompositionPart, bound: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    let series = decomposition_series(part, bound)?;
    let inverse = part.tag.family().denominator().reciprocal_factors().expand(bound)?;
    let quotient = series.mul(&inverse).truncate(bound);
    let direction = part.tag.direction();
    Ok(VerificationReport::new("partsign")
        .param("part", part.tag.as_str())
        .param("k", part.k)
        .param("N", bound)
        .param("direction", direction.as_str())
        .conclude(quotient.first_sign_violation(0, direction), started))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    /// `sum (-1)^n a^2n q^(n(n+1)) / (-aq;q^2)_(n+1) = sum a^3n q^(3n^2+2n) (1 - a q^(2n+1))`
    E951,
    /// `sum (-1)^n a^2n q^(n(n+1)) / (-aq^2;q^2)_n = sum a^3n q^(n(3n+1)) (1 - a^2 q^(4n+2))`
    E941,
}

impl Entry {
    pub fn name(self) -> &'static str {
        match self {
            Entry::E951 => "entry951",
            Entry::E941 => "entry941",
        }
    }
}

/// Both sides of an entry at `a = q^j`.
pub fn entry_sides(which: Entry, j: i64, bound: i64) -> Result<(LaurentSeries, LaurentSeries)> {
    if j < 1 {
        return Err(Error::InvalidParameters(format!("j must be >= 1, got {j}")));
    }
    let lhs_val = move |n: i64| 2 * j * n + n * (n + 1);
    let (lhs, rhs) = match which {
        Entry::E951 => {
            let lhs = sum_while(0, 1, bound, lhs_val, |n| {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                over_plus_pochhammer(mono(sign, lhs_val(n), bound), j + 1, 2, n + 1)
            })?;
            let e = move |n: i64| 3 * j * n + 3 * n * n + 2 * n;
            let rhs = monomial_sum(0, 1, bound, e, |n| {
                vec![(e(n), big(1)), (e(n) + j + 2 * n + 1, big(-1))]
            })?;
            (lhs, rhs)
        }
        Entry::E941 => {
            let lhs = sum_while(0, 1, bound, lhs_val, |n| {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                over_plus_pochhammer(mono(sign, lhs_val(n), bound), j + 2, 2, n)
            })?;
            let e = move |n: i64| 3 * j * n + n * (3 * n + 1);
            let rhs = monomial_sum(0, 1, bound, e, |n| {
                vec![(e(n), big(1)), (e(n) + 2 * j + 4 * n + 2, big(-1))]
            })?;
            (lhs, rhs)
        }
    };
    Ok((lhs, rhs))
}

pub fn ramanujan_entry_check(which: Entry, j: i64, bound: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    let (lhs, rhs) = entry_sides(which, j, bound)?;
    Ok(IdentityInstance::new(which.name(), lhs, rhs, bound)?
        .report(started)
        .param("j", j))
}

/// Checks the re-indexing of both tails of the consequence sums:
/// `sum_{n<=-k-1}` and `sum_{n>=k}` against their `n >= 0` rewrites.
pub fn check_tail_rewrite(which: Consequence, k: i64, bound: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    check_k(k)?;
    let family = which.family();
    let valuation = |n| family.term_valuation(n);
    let terms = |n| family.numerator_terms(n);
    let lower = monomial_sum(-k - 1, -1, bound, valuation, terms)?;
    let upper = monomial_sum(k, 1, bound, valuation, terms)?;

    let (lower_rw, upper_rw) = match which {
        Consequence::ThreeNPlusOne => {
            let el = move |n: i64| 3 * n * n + 3 * k * k + 6 * n * k + 4 * n + 4 * k + 1;
            let eu = move |n: i64| 3 * n * n + 6 * n * k + 3 * k * k + 2 * n + 2 * k;
            (
                monomial_sum(0, 1, bound, el, |n| vec![(el(n), big(-(3 * n + 3 * k + 2)))])?,
                monomial_sum(0, 1, bound, eu, |n| vec![(eu(n), big(3 * n + 3 * k + 1))])?,
            )
        }
        Consequence::SixNPlusOne => {
            let el = move |n: i64| 3 * n * n + 3 * k * k + 6 * n * k + 5 * n + 5 * k + 2;
            let eu = move |n: i64| 3 * n * n + 6 * n * k + 3 * k * k + n + k;
            (
                monomial_sum(0, 1, bound, el, |n| vec![(el(n), big(-(6 * n + 6 * k + 5)))])?,
                monomial_sum(0, 1, bound, eu, |n| vec![(eu(n), big(6 * n + 6 * k + 1))])?,
            )
        }
    };
    let lower_check = IdentityInstance::new("tailshift", lower, lower_rw, bound)?;
    let upper_check = IdentityInstance::new("tailshift", upper, upper_rw, bound)?;
    let (tail, violation) = match lower_check.first_violation() {
        Some(v) => ("lower", Some(v)),
        None => ("upper", upper_check.first_violation()),
    };
    let mut report = VerificationReport::new("tailshift")
        .param("family", which.name())
        .param("k", k)
        .param("N", bound);
    if violation.is_some() {
        report = report.param("tail", tail);
    }
    Ok(report.conclude(violation, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &LaurentSeries, from: i64, to: i64) -> Vec<i64> {
        (from..=to)
            .map(|e| i64::try_from(s.coefficient(e).unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn quintuple_examples() {
        let (l, r) = quintuple_sides(3, 1, 50).unwrap();
        assert!(l.agrees_with(&r));
        assert_eq!(l.bound(), 50);

        let (l, r) = quintuple_sides(5, 2, 0).unwrap();
        assert_eq!(l.coefficient(-2).unwrap(), big(-1));
        assert_eq!(r.coefficient(-2).unwrap(), big(-1));
        assert!(l.agrees_with(&r));

        assert!(quintuple_sides(4, 2, 10).is_err());
    }

    #[test]
    fn consequence_examples() {
        let (l, r) = consequence_sides(Consequence::SixNPlusOne, 4).unwrap();
        assert_eq!(ints(&l, 0, 4), [1, 0, -5, 0, 7]);
        assert_eq!(ints(&r, 0, 4), [1, 0, -5, 0, 7]);
        let (l, r) = consequence_sides(Consequence::ThreeNPlusOne, 0).unwrap();
        assert_eq!(ints(&l, 0, 0), [1]);
        assert_eq!(ints(&r, 0, 0), [1]);
        assert!(check_consequence(Consequence::ThreeNPlusOne, 200).unwrap().passed());
    }

    #[test]
    fn part_examples() {
        let a3 = decomposition_series(DecompositionPart::new(PartTag::A3, 1).unwrap(), 12).unwrap();
        assert_eq!(ints(&a3, 0, 12), [0, 0, 0, 0, 3, 0, 0, -4, 0, 0, 0, 0, 0]);

        let d = decomposition_series(DecompositionPart::new(PartTag::D, 1).unwrap(), 12).unwrap();
        assert_eq!(ints(&d, 0, 12), [0, 0, -3, 0, 0, 0, 0, 0, 3, 0, 0, 0, -3]);

        for tag in PartTag::ALL {
            let s = decomposition_series(DecompositionPart { tag, k: 2 }, 3).unwrap();
            assert!(s.is_zero(), "{tag}");
        }
        assert!(DecompositionPart::new(PartTag::A, 0).is_err());
    }

    #[test]
    fn lemma_examples() {
        assert!(check_partial_sum_lemma(Consequence::ThreeNPlusOne, 1, 100).unwrap().passed());
        assert!(check_partial_sum_lemma(Consequence::SixNPlusOne, 3, 100).unwrap().passed());
        assert!(check_partial_sum_lemma(Consequence::ThreeNPlusOne, 1, 0).unwrap().passed());
        assert!(check_partial_sum_lemma(Consequence::SixNPlusOne, 9, 40).unwrap().passed());
        assert!(check_decomposition_identity(Split::A, 1, 150).unwrap().passed());
        assert!(check_decomposition_identity(Split::C, 2, 150).unwrap().passed());
        assert!(check_decomposition_identity(Split::C, 5, 30).unwrap().passed());
    }

    #[test]
    fn part_sign_examples() {
        for (tag, k) in [(PartTag::A2, 1), (PartTag::B, 2), (PartTag::C4, 1)] {
            let r = check_part_sign(DecompositionPart::new(tag, k).unwrap(), 150).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn entry_examples() {
        assert!(ramanujan_entry_check(Entry::E951, 2, 120).unwrap().passed());
        assert!(ramanujan_entry_check(Entry::E941, 4, 120).unwrap().passed());
        let (l, r) = entry_sides(Entry::E951, 1, 0).unwrap();
        assert_eq!(ints(&l, 0, 0), [1]);
        assert_eq!(ints(&r, 0, 0), [1]);
        assert!(entry_sides(Entry::E941, 0, 5).is_err());
    }

    #[test]
    fn tail_rewrites() {
        for k in 1..=4 {
            for which in [Consequence::ThreeNPlusOne, Consequence::SixNPlusOne] {
                assert!(check_tail_rewrite(which, k, 200).unwrap().passed());
            }
        }
    }

    #[test]
    fn mismatched_sides_fail() {
        let a = LaurentSeries::one(5);
        let b = mono(1, 3, 5).add(&a);
        let r = IdentityInstance::new("t", a.clone(), b, 5).unwrap().report(Instant::now());
        assert_eq!(r.first_violation, Some(Violation::new(3, &big(-1))));
        assert!(IdentityInstance::new("t", a, LaurentSeries::one(4), 5).is_err());
    }
}
