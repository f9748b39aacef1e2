//! Counting oracles for partitions, overpartitions and partition triplets.
//!
//! Counts come from integer recurrences and explicit generation, never from
//! the series engine, so they can be used to cross-check it.

use std::io::Write;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::qproducts::{FactorSign, PochhammerFactor, ProductExpr};
use crate::report::{VerificationReport, Violation};
use crate::series::LaurentSeries;
use crate::truncation::{sg, FamilyExpansion, TheoremFamily, TruncationWindow};

/// Largest `n` accepted by [`enumerate_overpartitions`].
pub const OVERPARTITION_ENUMERATION_LIMIT: u64 = 24;
/// Largest `n` for which triplets are enumerated one by one.
pub const TRIPLET_ENUMERATION_LIMIT: u64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverPart {
    pub value: u64,
    pub overlined: bool,
}

/// Parts in non-increasing order; only the first occurrence of a value can
/// carry the overline.
pub type Overpartition = Vec<OverPart>;

/// All partitions of `n`, parts non-increasing.
pub fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for v in (1..=max.min(rest)).rev() {
            current.push(v);
            go(rest - v, v, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All overpartitions of `n`.
pub fn overpartitions(n: u64) -> Result<Vec<Overpartition>> {
    fn go(rest: u64, max: u64, current: &mut Overpartition, out: &mut Vec<Overpartition>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for v in (1..=max.min(rest)).rev() {
            for overlined in [false, true] {
                // v occurs m times; the first copy may be overlined
                for m in 1..=rest / v {
                    current.push(OverPart { value: v, overlined });
                    current.extend((1..m).map(|_| OverPart { value: v, overlined: false }));
                    go(rest - m * v, v - 1, current, out);
                    current.truncate(current.len() - m as usize);
                }
            }
        }
    }
    if n > OVERPARTITION_ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit {
            n,
            limit: OVERPARTITION_ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Number of overpartitions of `n`, by explicit generation.
pub fn enumerate_overpartitions(n: u64) -> Result<u64> {
    Ok(overpartitions(n)?.len() as u64)
}

/// Partition counts `p(0..=limit)` by the part-by-part recurrence.
fn partition_counts(limit: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); limit + 1];
    p[0] = BigInt::from(1);
    for part in 1..=limit {
        for n in part..=limit {
            let prev = p[n - part].clone();
            p[n] += prev;
        }
    }
    p
}

/// Counts of partitions into distinct parts.
fn distinct_counts(limit: usize) -> Vec<BigInt> {
    let mut d = vec![BigInt::zero(); limit + 1];
    d[0] = BigInt::from(1);
    for part in 1..=limit {
        for n in (part..=limit).rev() {
            let prev = d[n - part].clone();
            d[n] += prev;
        }
    }
    d
}

fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    (0..a.len().min(b.len()))
        .map(|n| (0..=n).map(|i| &a[i] * &b[n - i]).sum())
        .collect()
}

/// `p`, `op` and `ppp` for `0 <= n <= limit`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    limit: usize,
    pub p: Vec<BigInt>,
    pub op: Vec<BigInt>,
    pub ppp: Vec<BigInt>,
}

impl CountTable {
    /// An overpartition is a partition together with a subset of its distinct
    /// part values, so `op = distinct * p`; a triplet gives `ppp = p * op * op`.
    pub fn build(limit: usize) -> Self {
        let p = partition_counts(limit);
        let op = convolve(&distinct_counts(limit), &p);
        let ppp = convolve(&convolve(&p, &op), &op);
        CountTable { limit, p, op, ppp }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// `ppp(m)`, taken as zero for `m < 0`.
    pub fn ppp_at(&self, m: i64) -> Result<BigInt> {
        if m < 0 {
            return Ok(BigInt::zero());
        }
        self.ppp.get(m as usize).cloned().ok_or_else(|| {
            Error::InvalidParameters(format!("count table covers n <= {}, asked for {m}", self.limit))
        })
    }

    /// Writes `n,p,op,ppp`, one row per `n`.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let encoding = |e: csv::Error| Error::Encoding(e.to_string());
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["n", "p", "op", "ppp"]).map_err(encoding)?;
        for n in 0..=self.limit {
            w.write_record([
                n.to_string(),
                self.p[n].to_string(),
                self.op[n].to_string(),
                self.ppp[n].to_string(),
            ])
            .map_err(encoding)?;
        }
        w.flush().map_err(|e| Error::Encoding(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is ascii")
    }
}

/// Triplets `(partition, overpartition, overpartition)` of total size `n`,
/// counted one by one.
pub fn triplet_count_enumerated(n: u64) -> Result<u64> {
    if n > TRIPLET_ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit {
            n,
            limit: TRIPLET_ENUMERATION_LIMIT,
        });
    }
    let parts: Vec<Vec<Vec<u64>>> = (0..=n).map(partitions).collect();
    let overs = (0..=n).map(overpartitions).collect::<Result<Vec<_>>>()?;
    let mut count = 0u64;
    for i in 0..=n as usize {
        for j in 0..=n as usize - i {
            let k = n as usize - i - j;
            for _lambda in &parts[i] {
                for _alpha in &overs[j] {
                    count += overs[k].len() as u64;
                }
            }
        }
    }
    Ok(count)
}

/// `ppp(n)` by convolution; small `n` is also enumerated and must agree.
pub fn triplet_count(n: u64) -> BigInt {
    let value = CountTable::build(n as usize).ppp[n as usize].clone();
    if n <= TRIPLET_ENUMERATION_LIMIT {
        let listed = triplet_count_enumerated(n).expect("within the enumeration limit");
        assert_eq!(value, BigInt::from(listed), "triplet count mismatch at n = {n}");
    }
    value
}

fn euler_product(power: i32) -> ProductExpr {
    let minus = |offset, step| PochhammerFactor::infinite(FactorSign::Minus, offset, step, power);
    ProductExpr::from_factors(vec![minus(1, 1).expect("valid symbol")])
}

/// `1 / ((q;q)^3 (q;q^2)^2)`, the triplet generating function.
pub fn triplet_generating_function() -> ProductExpr {
    ProductExpr::from_factors(vec![
        PochhammerFactor::infinite(FactorSign::Minus, 1, 1, -3).expect("valid symbol"),
        PochhammerFactor::infinite(FactorSign::Minus, 1, 2, -2).expect("valid symbol"),
    ])
}

/// `(-q;q) / (q;q)`, the overpartition generating function.
pub fn overpartition_generating_function() -> ProductExpr {
    euler_product(-1)
        .times(PochhammerFactor::infinite(FactorSign::Plus, 1, 1, 1).expect("valid symbol"))
}

fn compare_counts(check: &str, series: &LaurentSeries, counts: &[BigInt], bound: i64) -> VerificationReport {
    let started = Instant::now();
    let violation = (0..=bound).find_map(|n| {
        let diff = series.coefficient(n).expect("within bound") - &counts[n as usize];
        (!diff.is_zero()).then(|| Violation::new(n, &diff))
    });
    VerificationReport::new(check)
        .param("N", bound)
        .conclude(violation, started)
}

/// Compares the product expansion with the convolution counts through `q^bound`.
pub fn check_ppp_generating_function(bound: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    if bound < 0 {
        return Err(Error::InvalidParameters(format!("N must be >= 0, got {bound}")));
    }
    let series = triplet_generating_function().expand(bound)?;
    let table = CountTable::build(bound as usize);
    let mut report = compare_counts("ppp_gf", &series, &table.ppp, bound);
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

pub fn check_op_generating_function(bound: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    if bound < 0 {
        return Err(Error::InvalidParameters(format!("N must be >= 0, got {bound}")));
    }
    let series = overpartition_generating_function().expand(bound)?;
    let table = CountTable::build(bound as usize);
    let mut report = compare_counts("op_gf", &series, &table.op, bound);
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// `Sg(a+b) sum_{i=a}^{b} (6i+1) ppp(n - i(3i+1)/2)` for `0 <= n <= n_max`.
pub fn corollary_values(table: &CountTable, n_max: u64, window: TruncationWindow) -> Result<Vec<BigInt>> {
    if n_max as usize > table.limit() {
        return Err(Error::InvalidParameters(format!(
            "count table covers n <= {}, need {n_max}",
            table.limit()
        )));
    }
    // |i| beyond this has i(3i+1)/2 > n_max
    let reach = (n_max as f64).sqrt() as i64 + 2;
    let lo = window.a.max(-reach);
    let hi = window.b.min(reach);
    let sign = BigInt::from(window.sign());
    (0..=n_max as i64)
        .map(|n| {
            let mut sum = BigInt::zero();
            for i in lo..=hi {
                let twice = i * (3 * i + 1);
                debug_assert!(twice % 2 == 0);
                sum += BigInt::from(6 * i + 1) * table.ppp_at(n - twice / 2)?;
            }
            Ok(&sign * sum)
        })
        .collect()
}

/// Corollary check result, with the `n = 0` value kept apart because it is
/// reported but not asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryOutcome {
    pub report: VerificationReport,
    pub n0_value: BigInt,
}

impl CorollaryOutcome {
    pub fn n0_negative(&self) -> bool {
        self.n0_value.is_negative()
    }
}

/// Asserts the windowed triplet sums are nonnegative for `1 <= n <= n_max`.
pub fn check_corollary(table: &CountTable, n_max: u64, window: TruncationWindow) -> Result<CorollaryOutcome> {
    let started = Instant::now();
    let values = corollary_values(table, n_max, window)?;
    let violation = values
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, v)| v.is_negative())
        .map(|(n, v)| Violation::new(n as i64, v));
    let n0_value = values[0].clone();
    let report = VerificationReport::new("corollary")
        .param("a", window.a)
        .param("b", window.b)
        .param("n_max", n_max)
        .param("n0_value", n0_value.to_string())
        .conclude(violation, started);
    Ok(CorollaryOutcome { report, n0_value })
}

/// The `(6n+1)` bilateral series in `q^2` with every exponent halved.
pub fn halved_bilateral(window: TruncationWindow, bound: i64) -> Result<LaurentSeries> {
    let expansion = FamilyExpansion::new(TheoremFamily::SixNPlusOne, 2 * bound + 1)?;
    expansion.bilateral(window).deflate(2)
}

/// Checks the triplet sums against the coefficients of the halved bilateral
/// series.
pub fn check_corollary_consistency(n_max: u64, window: TruncationWindow) -> Result<VerificationReport> {
    let started = Instant::now();
    let table = CountTable::build(n_max as usize);
    let values = corollary_values(&table, n_max, window)?;
    let series = halved_bilateral(window, n_max as i64)?;
    let violation = values.iter().enumerate().find_map(|(n, v)| {
        let diff = series.coefficient(n as i64).expect("within bound") - v;
        (!diff.is_zero()).then(|| Violation::new(n as i64, &diff))
    });
    Ok(VerificationReport::new("corollary_series")
        .param("a", window.a)
        .param("b", window.b)
        .param("n_max", n_max)
        .conclude(violation, started))
}

/// `Sg(a+b) / ((q;q)^3 (q;q^2)^2) sum_{n=a}^{b} (6n+1) q^(n(3n+1)/2)` built
/// directly in `q`, compared with the halved `(6n+1)` bilateral series.
pub fn check_euler_chain(window: TruncationWindow, bound: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    let gf = triplet_generating_function().expand(bound)?;
    let reach = ((bound.max(0) as f64).sqrt() as i64) + 2;
    let terms = (window.a.max(-reach)..=window.b.min(reach))
        .map(|n| (n * (3 * n + 1) / 2, (6 * n + 1) * sg(window.a + window.b)));
    let direct = LaurentSeries::from_terms(terms, bound).mul(&gf).truncate(bound);
    let halved = halved_bilateral(window, bound)?;
    let violation = direct.first_difference(&halved).map(|(e, d)| Violation::new(e, &d));
    Ok(VerificationReport::new("euler_chain")
        .param("a", window.a)
        .param("b", window.b)
        .param("N", bound)
        .conclude(violation, started))
}
