//! First-significant-digit extraction and digit tallies.
//!
//! The first significant digit of a positive number `x` in base `b` is the
//! unique `d` with `d <= x * b^k < d + 1` for the integer `k` that places
//! `x * b^k` in `[1, b)`. Integral inputs are resolved with exact integer
//! arithmetic; everything else is normalized into `[1, b)` with a corrective
//! step so values just below a power of the base (e.g. `999.9999999`) are not
//! misclassified by log rounding. The digit of a non-integral value that sits
//! within a few ULP of a digit boundary (the f64 nearest to `7e300` really
//! does start with 6999...) follows the scaled approximation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest supported base.
pub const MIN_BASE: u32 = 2;
/// Largest supported base; keeps digits representable as single alphanumerics.
pub const MAX_BASE: u32 = 36;

pub(crate) fn check_base(base: u32) -> Result<()> {
    if (MIN_BASE..=MAX_BASE).contains(&base) {
        Ok(())
    } else {
        Err(Error::BaseOutOfRange(base))
    }
}

/// A first significant digit: an integer in `[1, base - 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Digit(u8);

impl Digit {
    pub fn new(value: u32, base: u32) -> Result<Self> {
        check_base(base)?;
        if value == 0 || value >= base {
            return Err(Error::DigitOutOfRange { digit: value, base });
        }
        Ok(Digit(value as u8))
    }

    pub fn value(self) -> u32 {
        u32::from(self.0)
    }

    /// Single-character form used in reports: `1`-`9`, then `a`-`z`.
    pub fn to_char(self) -> char {
        char::from_digit(u32::from(self.0), 36).expect("digit < 36")
    }
}

impl std::fmt::Display for Digit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// First significant digit of a positive finite number.
pub fn first_digit(x: f64, base: u32) -> Result<Digit> {
    check_base(base)?;
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::NonPositiveValue { value: x });
    }
    let d = if x == x.trunc() && x < u128::MAX as f64 {
        leading_digit_int(x as u128, base)
    } else {
        leading_digit_real(x, base)
    };
    Ok(Digit(d as u8))
}

/// First significant digit of a positive integer; exact for the whole `u64` range.
pub fn first_digit_of_int(n: u64, base: u32) -> Result<Digit> {
    check_base(base)?;
    if n == 0 {
        return Err(Error::NonPositiveValue { value: 0.0 });
    }
    Ok(Digit(leading_digit_int(u128::from(n), base) as u8))
}

fn leading_digit_int(mut n: u128, base: u32) -> u32 {
    let b = u128::from(base);
    while n >= b {
        n /= b;
    }
    n as u32
}

fn leading_digit_real(x: f64, base: u32) -> u32 {
    let b = f64::from(base);
    // Scale by the estimated exponent in two halves so neither factor leaves
    // the normal f64 range, then correct at most one step.
    let e = x.log(b).floor() as i32;
    let half = e / 2;
    let mut m = (x * b.powi(-half)) * b.powi(half - e);
    while m < 1.0 {
        m *= b;
    }
    while m >= b {
        m /= b;
    }
    m as u32
}

/// Observed counts of first significant digits for every digit of a base.
///
/// Counts are indexed by digit (entry `d - 1` holds the count for digit `d`),
/// zero-count digits are present explicitly, and the record total `n` always
/// equals the sum of the counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDistribution")]
pub struct DigitDistribution {
    base: u32,
    counts: Vec<u64>,
    n: u64,
}

#[derive(Deserialize)]
struct RawDistribution {
    base: u32,
    counts: Vec<u64>,
    n: u64,
}

impl TryFrom<RawDistribution> for DigitDistribution {
    type Error = Error;

    fn try_from(raw: RawDistribution) -> Result<Self> {
        let dist = DigitDistribution::from_counts(raw.base, raw.counts)?;
        if dist.n != raw.n {
            return Err(Error::TotalMismatch {
                observed: dist.n,
                expected: raw.n,
            });
        }
        Ok(dist)
    }
}

impl DigitDistribution {
    /// An empty distribution (all counts zero) over `base`.
    pub fn empty(base: u32) -> Result<Self> {
        check_base(base)?;
        Ok(DigitDistribution {
            base,
            counts: vec![0; (base - 1) as usize],
            n: 0,
        })
    }

    /// Builds a distribution from per-digit counts; `counts[d - 1]` is the
    /// count for digit `d` and must have exactly `base - 1` entries.
    pub fn from_counts(base: u32, counts: Vec<u64>) -> Result<Self> {
        check_base(base)?;
        if counts.len() != (base - 1) as usize {
            return Err(Error::Parse {
                origin: "digit counts".into(),
                message: format!(
                    "expected {} entries for base {}, got {}",
                    base - 1,
                    base,
                    counts.len()
                ),
            });
        }
        let n = counts.iter().sum();
        Ok(DigitDistribution { base, counts, n })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    /// Total number of records tallied.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Per-digit counts, indexed by `d - 1`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, digit: Digit) -> u64 {
        self.counts
            .get((digit.value() - 1) as usize)
            .copied()
            .unwrap_or(0)
    }

    /// Observed proportions `count(d) / n`; all zeros when the tally is empty.
    pub fn proportions(&self) -> Vec<f64> {
        if self.n == 0 {
            return vec![0.0; self.counts.len()];
        }
        let n = self.n as f64;
        self.counts.iter().map(|&c| c as f64 / n).collect()
    }

    pub fn digits(&self) -> impl Iterator<Item = Digit> + '_ {
        (1..self.base).map(|d| Digit(d as u8))
    }

    fn record(&mut self, digit: Digit) {
        self.counts[(digit.value() - 1) as usize] += 1;
        self.n += 1;
    }
}

/// Tallies the first significant digits of a sequence of positive reals.
pub fn tally<I>(values: I, base: u32) -> Result<DigitDistribution>
where
    I: IntoIterator<Item = f64>,
{
    let mut dist = DigitDistribution::empty(base)?;
    for (index, value) in values.into_iter().enumerate() {
        let digit = first_digit(value, base).map_err(|_| Error::InvalidValueAt { index, value })?;
        dist.record(digit);
    }
    Ok(dist)
}

/// Tallies the first significant digits of positive integers (exact path).
pub fn tally_ints<I>(values: I, base: u32) -> Result<DigitDistribution>
where
    I: IntoIterator<Item = u64>,
{
    let mut dist = DigitDistribution::empty(base)?;
    for (index, value) in values.into_iter().enumerate() {
        let digit = first_digit_of_int(value, base).map_err(|_| Error::InvalidValueAt {
            index,
            value: value as f64,
        })?;
        dist.record(digit);
    }
    Ok(dist)
}
