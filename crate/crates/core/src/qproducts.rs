//! Finite and infinite q-Pochhammer products and their exact expansion.
//!
//! `(q^e; q^m)_n` is `(1 - q^e)(1 - q^(e+m)) ... (1 - q^(e+(n-1)m))`; the
//! plus-signed variant `(-q^e; q^m)_n` uses `(1 + q^...)` factors. A
//! [`ProductExpr`] is a monomial prefactor times integer powers of such
//! symbols.
//!
//! Expansion factors every binomial as `(1 -+ q^e) = u * q^v * (1 -+ q^|e|)`
//! with `v = min(e, 0)`, so the whole product is `c q^V` times a power series
//! with constant term `c`. Only binomials with `0 < |e| <= N - V` can touch a
//! coefficient at or below `q^N`; the rest are skipped.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{div_binomial_in_place, mul_binomial_in_place, LaurentSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorSign {
    /// `(1 - q^e)`
    Minus,
    /// `(1 + q^e)`
    Plus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorCount {
    Finite(u64),
    Infinite,
}

/// One symbol `(+-q^offset; q^step)_count ^ power`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PochhammerFactor {
    sign: FactorSign,
    offset: i64,
    step: i64,
    count: FactorCount,
    power: i32,
}

impl PochhammerFactor {
    pub fn new(
        sign: FactorSign,
        offset: i64,
        step: i64,
        count: FactorCount,
        power: i32,
    ) -> Result<Self> {
        if step < 1 {
            return Err(Error::InvalidParameters(format!("Pochhammer step {step} < 1")));
        }
        if power == 0 {
            return Err(Error::InvalidParameters("Pochhammer power must be nonzero".into()));
        }
        Ok(PochhammerFactor {
            sign,
            offset,
            step,
            count,
            power,
        })
    }

    pub fn infinite(sign: FactorSign, offset: i64, step: i64, power: i32) -> Result<Self> {
        Self::new(sign, offset, step, FactorCount::Infinite, power)
    }

    pub fn finite(sign: FactorSign, offset: i64, step: i64, n: u64, power: i32) -> Result<Self> {
        Self::new(sign, offset, step, FactorCount::Finite(n), power)
    }

    pub fn sign(&self) -> FactorSign {
        self.sign
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    pub fn count(&self) -> FactorCount {
        self.count
    }

    pub fn power(&self) -> i32 {
        self.power
    }

    /// Same symbol raised to `-power`.
    pub fn inverse(&self) -> Self {
        PochhammerFactor {
            power: -self.power,
            ..self.clone()
        }
    }

    /// Binomial exponents in order, stopping after the first one above `limit`.
    fn exponents_through(&self, limit: i64) -> impl Iterator<Item = i64> + '_ {
        let n = match self.count {
            FactorCount::Finite(n) => n,
            FactorCount::Infinite => u64::MAX,
        };
        (0..n)
            .map(move |i| self.offset + i as i64 * self.step)
            .take_while(move |&e| e <= limit)
    }
}

/// Monomial prefactor times a product of Pochhammer symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductExpr {
    factors: Vec<PochhammerFactor>,
    coefficient: BigInt,
    exponent: i64,
}

impl Default for ProductExpr {
    fn default() -> Self {
        Self::new()
    }
}

impl ProductExpr {
    /// The empty product 1.
    pub fn new() -> Self {
        ProductExpr {
            factors: Vec::new(),
            coefficient: BigInt::from(1),
            exponent: 0,
        }
    }

    pub fn from_factors(factors: Vec<PochhammerFactor>) -> Self {
        ProductExpr {
            factors,
            ..Self::new()
        }
    }

    pub fn with_monomial(mut self, coefficient: impl Into<BigInt>, exponent: i64) -> Self {
        self.coefficient = coefficient.into();
        self.exponent = exponent;
        self
    }

    pub fn times(mut self, factor: PochhammerFactor) -> Self {
        self.factors.push(factor);
        self
    }

    pub fn concat(mut self, other: &ProductExpr) -> Self {
        self.factors.extend(other.factors.iter().cloned());
        self.coefficient *= &other.coefficient;
        self.exponent += other.exponent;
        self
    }

    pub fn factors(&self) -> &[PochhammerFactor] {
        &self.factors
    }

    pub fn monomial(&self) -> (&BigInt, i64) {
        (&self.coefficient, self.exponent)
    }

    /// Reciprocal of the Pochhammer part; the monomial prefactor is kept.
    pub fn reciprocal_factors(&self) -> Self {
        ProductExpr {
            factors: self.factors.iter().map(PochhammerFactor::inverse).collect(),
            coefficient: self.coefficient.clone(),
            exponent: self.exponent,
        }
    }

    /// Exact expansion through `q^bound`.
    pub fn expand(&self, bound: i64) -> Result<LaurentSeries> {
        let mut coefficient = self.coefficient.clone();
        let mut valuation = self.exponent;
        // (sign coefficient of q^|e|, |e|, power) for every binomial with e < 0
        let mut reflected: Vec<(i64, i64, i32)> = Vec::new();

        for f in &self.factors {
            for e in f.exponents_through(0) {
                match (e, f.sign) {
                    (0, FactorSign::Minus) => {
                        if f.power < 0 {
                            return Err(Error::ZeroInverse);
                        }
                        return Ok(LaurentSeries::zero(bound));
                    }
                    (0, FactorSign::Plus) => {
                        if f.power < 0 {
                            return Err(Error::NonUnitLeading("2".into()));
                        }
                        coefficient *= BigInt::from(2).pow(f.power as u32);
                    }
                    (_, FactorSign::Minus) => {
                        // 1 - q^e = -q^e (1 - q^-e)
                        if f.power % 2 != 0 {
                            coefficient = -coefficient;
                        }
                        valuation += e * f.power as i64;
                        reflected.push((-1, -e, f.power));
                    }
                    (_, FactorSign::Plus) => {
                        // 1 + q^e = q^e (1 + q^-e)
                        valuation += e * f.power as i64;
                        reflected.push((1, -e, f.power));
                    }
                }
            }
        }

        let depth = bound - valuation;
        if coefficient.is_zero() || depth < 0 {
            return Ok(LaurentSeries::zero(bound));
        }
        let mut unit = vec![BigInt::zero(); depth as usize + 1];
        unit[0] = coefficient;

        let apply = |unit: &mut Vec<BigInt>, c: i64, e: i64, power: i32| {
            if e > depth {
                return;
            }
            for _ in 0..power.unsigned_abs() {
                if power > 0 {
                    mul_binomial_in_place(unit, c, e as usize);
                } else {
                    div_binomial_in_place(unit, c, e as usize);
                }
            }
        };

        for &(c, e, power) in &reflected {
            apply(&mut unit, c, e, power);
        }
        for f in &self.factors {
            let c = match f.sign {
                FactorSign::Minus => -1,
                FactorSign::Plus => 1,
            };
            for e in f.exponents_through(depth).filter(|&e| e > 0) {
                apply(&mut unit, c, e, f.power);
            }
        }
        Ok(LaurentSeries::from_coeffs(valuation, unit, bound))
    }
}

/// `(+-q^e0; q^step)_n` through `q^bound`.
pub fn pochhammer_finite(
    sign: FactorSign,
    e0: i64,
    step: i64,
    n: u64,
    bound: i64,
) -> Result<LaurentSeries> {
    ProductExpr::new()
        .times(PochhammerFactor::finite(sign, e0, step, n, 1)?)
        .expand(bound)
}

/// `(+-q^e0; q^step)_inf` through `q^bound`.
pub fn pochhammer_infinite(sign: FactorSign, e0: i64, step: i64, bound: i64) -> Result<LaurentSeries> {
    ProductExpr::new()
        .times(PochhammerFactor::infinite(sign, e0, step, 1)?)
        .expand(bound)
}

impl fmt::Display for PochhammerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            FactorSign::Minus => "",
            FactorSign::Plus => "-",
        };
        write!(f, "({sign}q^{}; q^{})_", self.offset, self.step)?;
        match self.count {
            FactorCount::Finite(n) => write!(f, "{n}")?,
            FactorCount::Infinite => f.write_str("inf")?,
        }
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

impl fmt::Display for ProductExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.coefficient != BigInt::from(1) || self.exponent != 0 {
            parts.push(format!("{}*q^{}", self.coefficient, self.exponent));
        }
        parts.extend(self.factors.iter().map(|p| p.to_string()));
        if parts.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&parts.join(" * "))
    }
}

/// Parses the product grammar `(sign? q^E ; q^M)_{N|inf}^P` with symbols
/// separated by `*`. A leading `-` inside the parentheses selects `(1 + ...)`
/// factors; `q` alone means `q^1`; `_{...}` and `^{...}` braces are optional.
pub fn parse_product(input: &str) -> Result<ProductExpr> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    let mut expr = ProductExpr::new();
    loop {
        expr = expr.times(p.factor()?);
        p.skip_ws();
        match p.peek() {
            None => return Ok(expr),
            Some(b'*') => p.pos += 1,
            Some(_) => return Err(p.error("expected '*' or end of input")),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_owned(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", b as char)))
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let braced = self.eat(b'{');
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        let value = text.parse::<i64>().map_err(|_| Error::Parse {
            position: start,
            message: "expected an integer".into(),
        })?;
        if braced {
            self.expect(b'}')?;
        }
        Ok(value)
    }

    /// `q` or `q^E`
    fn power_of_q(&mut self) -> Result<i64> {
        if !self.eat(b'q') {
            return Err(self.error("expected 'q'"));
        }
        if self.eat(b'^') {
            self.integer()
        } else {
            Ok(1)
        }
    }

    fn count(&mut self) -> Result<FactorCount> {
        self.skip_ws();
        let braced = self.eat(b'{');
        self.skip_ws();
        let count = if self.src[self.pos..].starts_with(b"inf") {
            self.pos += 3;
            FactorCount::Infinite
        } else {
            let at = self.pos;
            let n = self.integer()?;
            if n < 0 {
                self.pos = at;
                return Err(self.error("count must be nonnegative"));
            }
            FactorCount::Finite(n as u64)
        };
        if braced {
            self.expect(b'}')?;
        }
        Ok(count)
    }

    fn factor(&mut self) -> Result<PochhammerFactor> {
        self.expect(b'(')?;
        let sign = if self.eat(b'-') {
            FactorSign::Plus
        } else {
            FactorSign::Minus
        };
        let offset = self.power_of_q()?;
        self.expect(b';')?;
        let step_at = {
            self.skip_ws();
            self.pos
        };
        let step = self.power_of_q()?;
        if step < 1 {
            self.pos = step_at;
            return Err(self.error("step must be a positive power of q"));
        }
        self.expect(b')')?;
        self.expect(b'_')?;
        let count = self.count()?;
        let power_at = self.pos;
        let power = if self.eat(b'^') { self.integer()? } else { 1 };
        if power == 0 || i32::try_from(power).is_err() {
            self.pos = power_at;
            return Err(self.error("power must be a nonzero 32-bit integer"));
        }
        PochhammerFactor::new(sign, offset, step, count, power as i32)
    }
}
