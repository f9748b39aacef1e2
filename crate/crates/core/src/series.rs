//! Exact truncated Laurent series over arbitrary-precision integers.
//!
//! A [`LaurentSeries`] stores a dense window of coefficients from its
//! valuation up to an inclusive truncation bound `N`: every coefficient of
//! `q^e` with `e <= N` is exact, nothing above `N` is known. Binary
//! operations propagate the bound so that every stored coefficient stays
//! exact:
//!
//! * `add`: `min(s.bound, t.bound)`
//! * `mul`: `min(s.bound + t.valuation, t.bound + s.valuation)`
//! * `invert`: `s.bound - 2 * s.valuation`
//!
//! The zero series keeps a bound too. Internally its valuation is stored as
//! `bound + 1` (the smallest exponent its true expansion could start at),
//! which lets the formulas above apply to it unchanged.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{VerificationReport, Violation};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SeriesRepr", try_from = "SeriesRepr")]
pub struct LaurentSeries {
    valuation: i64,
    bound: i64,
    // coeffs[i] is the coefficient of q^(valuation + i); len = bound - valuation + 1.
    coeffs: Vec<BigInt>,
}

/// Sign requirement for [`LaurentSeries::sign_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Nonneg,
    Nonpos,
}

impl Direction {
    pub fn admits(self, c: &BigInt) -> bool {
        match self {
            Direction::Nonneg => !c.is_negative(),
            Direction::Nonpos => !c.is_positive(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Nonneg => "nonneg",
            Direction::Nonpos => "nonpos",
        }
    }
}

impl LaurentSeries {
    /// The zero series, exact through `q^bound`.
    pub fn zero(bound: i64) -> Self {
        LaurentSeries {
            valuation: bound + 1,
            bound,
            coeffs: Vec::new(),
        }
    }

    /// `c * q^e`, exact through `q^bound`.
    pub fn monomial(c: impl Into<BigInt>, e: i64, bound: i64) -> Result<Self> {
        if bound < e {
            return Err(Error::ExponentAboveBound { exponent: e, bound });
        }
        let c = c.into();
        if c.is_zero() {
            return Ok(Self::zero(bound));
        }
        let mut coeffs = vec![BigInt::zero(); (bound - e + 1) as usize];
        coeffs[0] = c;
        Ok(LaurentSeries {
            valuation: e,
            bound,
            coeffs,
        })
    }

    /// The constant 1 through `q^bound`; zero when `bound < 0`.
    pub fn one(bound: i64) -> Self {
        Self::monomial(1, 0, bound).unwrap_or_else(|_| Self::zero(bound))
    }

    /// Builds a series from a coefficient window starting at `valuation`.
    /// Coefficients past `bound` are dropped; leading zeros are stripped.
    pub fn from_coeffs(valuation: i64, coeffs: Vec<BigInt>, bound: i64) -> Self {
        Self::normalized(valuation, coeffs, bound)
    }

    /// Sums `(exponent, coefficient)` pairs, dropping exponents above `bound`.
    pub fn from_terms<I, C>(terms: I, bound: i64) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms
            .into_iter()
            .filter(|(e, _)| *e <= bound)
            .map(|(e, c)| (e, c.into()))
            .collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero(bound);
        };
        let mut coeffs = vec![BigInt::zero(); (bound - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::normalized(lo, coeffs, bound)
    }

    fn normalized(valuation: i64, mut coeffs: Vec<BigInt>, bound: i64) -> Self {
        let keep = (bound - valuation + 1).max(0) as usize;
        coeffs.truncate(keep);
        let Some(first) = coeffs.iter().position(|c| !c.is_zero()) else {
            return Self::zero(bound);
        };
        coeffs.drain(..first);
        let valuation = valuation + first as i64;
        coeffs.resize((bound - valuation + 1) as usize, BigInt::zero());
        LaurentSeries {
            valuation,
            bound,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.valuation)
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Stored coefficient window, starting at the valuation.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact coefficient of `q^e`.
    pub fn coefficient(&self, e: i64) -> Result<BigInt> {
        if e > self.bound {
            return Err(Error::BeyondTruncation {
                exponent: e,
                bound: self.bound,
            });
        }
        Ok(self.coeff_unchecked(e))
    }

    fn coeff_unchecked(&self, e: i64) -> BigInt {
        if e < self.valuation {
            BigInt::zero()
        } else {
            self.coeffs[(e - self.valuation) as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.valuation + i as i64, c))
    }

    /// Forgets everything above `q^m` (no-op when `m >= bound`).
    pub fn truncate(&self, m: i64) -> Self {
        if m >= self.bound {
            return self.clone();
        }
        Self::normalized(self.valuation, self.coeffs.clone(), m)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        LaurentSeries {
            valuation: self.valuation + e,
            bound: self.bound + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.bound);
        }
        LaurentSeries {
            valuation: self.valuation,
            bound: self.bound,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        let lo = self.valuation.min(other.valuation);
        if lo > bound {
            return Self::zero(bound);
        }
        let mut coeffs = vec![BigInt::zero(); (bound - lo + 1) as usize];
        for s in [self, other] {
            for (i, c) in s.coeffs.iter().enumerate() {
                let e = s.valuation + i as i64;
                if e > bound {
                    break;
                }
                coeffs[(e - lo) as usize] += c;
            }
        }
        Self::normalized(lo, coeffs, bound)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        LaurentSeries {
            valuation: self.valuation,
            bound: self.bound,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product (schoolbook).
    pub fn mul(&self, other: &Self) -> Self {
        let valuation = self.valuation + other.valuation;
        let bound = (self.bound + other.valuation).min(other.bound + self.valuation);
        if self.is_zero() || other.is_zero() {
            return Self::zero(bound);
        }
        let len = (bound - valuation + 1) as usize;
        let mut coeffs = vec![BigInt::zero(); len];
        let rhs: Vec<(usize, &BigInt)> = other
            .coeffs
            .iter()
            .take(len)
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        LaurentSeries {
            valuation,
            bound,
            coeffs,
        }
    }

    /// Multiplicative inverse; the lowest coefficient must be `+1` or `-1`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let lead = &self.coeffs[0];
        if !lead.abs().is_one() {
            return Err(Error::NonUnitLeading(lead.to_string()));
        }
        let len = self.coeffs.len();
        let nonzero: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut inv: Vec<BigInt> = Vec::with_capacity(len);
        inv.push(lead.clone());
        for m in 1..len {
            let mut acc = BigInt::zero();
            for &(i, u) in &nonzero {
                if i > m {
                    break;
                }
                acc += u * &inv[m - i];
            }
            // lead is its own inverse
            inv.push(-(acc * lead));
        }
        Ok(LaurentSeries {
            valuation: -self.valuation,
            bound: self.bound - 2 * self.valuation,
            coeffs: inv,
        })
    }

    /// Integer power; negative exponents go through [`invert`](Self::invert).
    pub fn pow(&self, p: i32) -> Result<Self> {
        if p == 0 {
            return Ok(Self::one(self.bound));
        }
        let base = if p < 0 { self.invert()? } else { self.clone() };
        let mut acc = base.clone();
        for _ in 1..p.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Multiplies by the binomial `1 + c q^e` (`e >= 1`); the bound is kept.
    pub fn mul_binomial(&self, c: i64, e: i64) -> Self {
        assert!(e >= 1, "binomial exponent must be positive");
        let mut out = self.clone();
        mul_binomial_in_place(&mut out.coeffs, c, e as usize);
        out
    }

    /// Divides by the binomial `1 + c q^e` (`e >= 1`); the bound is kept.
    pub fn div_binomial(&self, c: i64, e: i64) -> Self {
        assert!(e >= 1, "binomial exponent must be positive");
        let mut out = self.clone();
        div_binomial_in_place(&mut out.coeffs, c, e as usize);
        out
    }

    /// Substitutes `q -> q^d` for `d >= 1`.
    pub fn inflate(&self, d: i64) -> Self {
        assert!(d >= 1, "inflation factor must be positive");
        let bound = d * (self.bound + 1) - 1;
        if self.is_zero() {
            return Self::zero(bound);
        }
        let terms = self.terms().map(|(e, c)| (e * d, c.clone()));
        Self::from_terms(terms, bound)
    }

    /// Substitutes `q^d -> q`; every stored exponent must be divisible by `d`.
    pub fn deflate(&self, d: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidParameters(format!("deflation factor {d} < 1")));
        }
        if let Some((e, _)) = self.terms().find(|(e, _)| e.rem_euclid(d) != 0) {
            return Err(Error::InvalidParameters(format!(
                "exponent {e} is not divisible by {d}"
            )));
        }
        let bound = self.bound.div_euclid(d);
        let terms = self.terms().map(|(e, c)| (e / d, c.clone()));
        Ok(Self::from_terms(terms, bound))
    }

    /// First exponent up to the common bound where the two series differ,
    /// with the difference `self - other` there.
    pub fn first_difference(&self, other: &Self) -> Option<(i64, BigInt)> {
        let bound = self.bound.min(other.bound);
        let lo = self.valuation.min(other.valuation);
        (lo..=bound).find_map(|e| {
            let d = self.coeff_unchecked(e) - other.coeff_unchecked(e);
            (!d.is_zero()).then_some((e, d))
        })
    }

    /// Coefficient-wise equality up to the common bound.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// Smallest exponent `e` in `[from, bound]` whose coefficient violates
    /// `direction`.
    pub fn first_sign_violation(&self, from: i64, direction: Direction) -> Option<Violation> {
        let start = from.max(self.valuation);
        (start..=self.bound).find_map(|e| {
            let c = &self.coeffs[(e - self.valuation) as usize];
            (!direction.admits(c)).then(|| Violation::new(e, c))
        })
    }

    /// Checks every coefficient of `q^e`, `from <= e <= bound`, against
    /// `direction`.
    pub fn sign_check(&self, from: i64, direction: Direction) -> VerificationReport {
        let started = std::time::Instant::now();
        VerificationReport::new("sign")
            .param("from", from)
            .param("N", self.bound)
            .param("direction", direction.as_str())
            .conclude(self.first_sign_violation(from, direction), started)
    }

    /// Canonical JSON rendering with decimal-string coefficients.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Encoding(e.to_string()))
    }
}

pub(crate) fn mul_binomial_in_place(coeffs: &mut [BigInt], c: i64, e: usize) {
    if c == 0 || e >= coeffs.len() {
        return;
    }
    let c = BigInt::from(c);
    for i in (e..coeffs.len()).rev() {
        let (lo, hi) = coeffs.split_at_mut(i);
        hi[0] += &lo[i - e] * &c;
    }
}

pub(crate) fn div_binomial_in_place(coeffs: &mut [BigInt], c: i64, e: usize) {
    if c == 0 || e >= coeffs.len() {
        return;
    }
    let c = BigInt::from(c);
    for i in e..coeffs.len() {
        let (lo, hi) = coeffs.split_at_mut(i);
        hi[0] -= &lo[i - e] * &c;
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.bound + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    valuation: i64,
    bound: i64,
    coeffs: Vec<String>,
}

impl From<LaurentSeries> for SeriesRepr {
    fn from(s: LaurentSeries) -> Self {
        SeriesRepr {
            valuation: s.valuation,
            bound: s.bound,
            coeffs: s.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl TryFrom<SeriesRepr> for LaurentSeries {
    type Error = Error;

    fn try_from(r: SeriesRepr) -> Result<Self> {
        let window = r.bound - r.valuation + 1;
        if (r.coeffs.len() as i64) > window.max(0) {
            return Err(Error::Encoding(format!(
                "{} coefficients do not fit between q^{} and q^{}",
                r.coeffs.len(),
                r.valuation,
                r.bound
            )));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| Error::Encoding(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::normalized(r.valuation, coeffs, r.bound))
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::add(self, rhs)
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::sub(self, rhs)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::mul(self, rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        self.negate()
    }
}
