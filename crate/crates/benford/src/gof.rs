//! Goodness-of-fit machinery: expected counts with binomial error bars,
//! Pearson's chi-square statistic, tail probabilities, critical values and
//! conformity verdicts.

use serde::{Deserialize, Serialize};

use crate::digits::DigitDistribution;
use crate::error::{Error, Result};
use crate::models::DigitLawModel;
use crate::special;

/// Largest degrees of freedom the tail inversion is specified for.
pub const MAX_DF: u32 = 200;

/// Expected-count threshold below which the chi-square approximation gets a
/// non-fatal warning attached.
pub const LOW_EXPECTED_THRESHOLD: f64 = 5.0;

/// Expected digit counts `N * P(d)` with binomial RMS errors
/// `sqrt(N * P(d) * (1 - P(d)))` for a model and record total.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpectedDistribution {
    model: DigitLawModel,
    n: u64,
    expected: Vec<f64>,
    errors: Vec<f64>,
}

impl ExpectedDistribution {
    pub fn model(&self) -> &DigitLawModel {
        &self.model
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Expected counts, indexed by `d - 1`. Full precision, never rounded.
    pub fn expected(&self) -> &[f64] {
        &self.expected
    }

    /// Binomial RMS errors, indexed by `d - 1`.
    pub fn errors(&self) -> &[f64] {
        &self.errors
    }
}

/// Expected counts and error bars for `n` records under `model`.
pub fn expected_counts(model: &DigitLawModel, n: u64) -> Result<ExpectedDistribution> {
    if n == 0 {
        return Err(Error::NoRecords);
    }
    let nf = n as f64;
    let probs = model.probabilities();
    let expected: Vec<f64> = probs.iter().map(|p| nf * p).collect();
    let errors: Vec<f64> = probs.iter().map(|p| (nf * p * (1.0 - p)).sqrt()).collect();
    Ok(ExpectedDistribution {
        model: *model,
        n,
        expected,
        errors,
    })
}

fn check_compatible(observed: &DigitDistribution, expected: &ExpectedDistribution) -> Result<()> {
    if observed.base() != expected.model.base() {
        return Err(Error::BaseMismatch {
            observed: observed.base(),
            expected: expected.model.base(),
        });
    }
    if observed.n() != expected.n {
        return Err(Error::TotalMismatch {
            observed: observed.n(),
            expected: expected.n,
        });
    }
    Ok(())
}

/// Pearson's chi-square statistic `Σ (N_obs - N_exp)^2 / N_exp`.
pub fn chi_square(observed: &DigitDistribution, expected: &ExpectedDistribution) -> Result<f64> {
    check_compatible(observed, expected)?;
    let mut stat = 0.0;
    for (i, (&obs, &exp)) in observed
        .counts()
        .iter()
        .zip(expected.expected.iter())
        .enumerate()
    {
        if exp <= 0.0 {
            return Err(Error::ZeroExpectedCell {
                digit: i as u32 + 1,
            });
        }
        let diff = obs as f64 - exp;
        stat += diff * diff / exp;
    }
    Ok(stat)
}

/// Per-digit standardized deviations `(N_obs - N_exp) / ΔN`.
pub fn digit_deviations(
    observed: &DigitDistribution,
    expected: &ExpectedDistribution,
) -> Result<Vec<f64>> {
    check_compatible(observed, expected)?;
    Ok(observed
        .counts()
        .iter()
        .zip(expected.expected.iter().zip(expected.errors.iter()))
        .map(|(&obs, (&exp, &err))| (obs as f64 - exp) / err)
        .collect())
}

/// Upper-tail probability of a chi-square statistic: `Q(df/2, chi2/2)`.
pub fn p_value(chi2: f64, df: u32) -> Result<f64> {
    if df == 0 || df > MAX_DF {
        return Err(Error::DegreesOfFreedomOutOfRange(df));
    }
    if !chi2.is_finite() || chi2 < 0.0 {
        return Err(Error::InvalidStatistic(chi2));
    }
    Ok(special::reg_gamma_q(f64::from(df) / 2.0, chi2 / 2.0))
}

/// Critical value: the `x` with upper-tail probability `alpha` for `df`
/// degrees of freedom, found by bracketed bisection of the tail function.
pub fn chi_square_critical(df: u32, alpha: f64) -> Result<f64> {
    if df == 0 || df > MAX_DF {
        return Err(Error::DegreesOfFreedomOutOfRange(df));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let a = f64::from(df) / 2.0;
    let tail = |x: f64| special::reg_gamma_q(a, x / 2.0);
    let mut hi = f64::from(df) + 10.0;
    while tail(hi) > alpha {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if tail(mid) > alpha {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-10 * hi.max(1.0) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Conformity verdict of a chi-square test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Conforms,
    Rejects,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Conforms => write!(f, "conforms"),
            Verdict::Rejects => write!(f, "rejects"),
        }
    }
}

/// Non-fatal warnings attached to a test result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "warning", rename_all = "snake_case")]
pub enum GofWarning {
    /// An expected cell count fell below [`LOW_EXPECTED_THRESHOLD`].
    LowExpectedCount { digit: u32, expected: f64 },
}

impl std::fmt::Display for GofWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GofWarning::LowExpectedCount { digit, expected } => write!(
                f,
                "expected count for digit {digit} is {expected:.2} (< {LOW_EXPECTED_THRESHOLD}); \
                 the chi-square approximation may be unreliable"
            ),
        }
    }
}

/// Outcome of a conformity test.
///
/// The verdict uses the strict comparison `chi2 < critical`; a statistic
/// exactly on the critical value rejects. The p-value route agrees with the
/// critical-value route by construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GofResult {
    pub chi2: f64,
    pub df: u32,
    pub alpha: f64,
    pub critical: f64,
    pub p_value: f64,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<GofWarning>,
}

/// Runs the full chi-square conformity test of `observed` against `model`.
pub fn conformity_test(
    observed: &DigitDistribution,
    model: &DigitLawModel,
    alpha: f64,
) -> Result<GofResult> {
    if observed.n() == 0 {
        return Err(Error::NoRecords);
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    if model.base() < 3 {
        return Err(Error::DegenerateDigitSpace);
    }
    let expected = expected_counts(model, observed.n())?;
    let chi2 = chi_square(observed, &expected)?;
    let df = model.base() - 2;
    let critical = chi_square_critical(df, alpha)?;
    let p = p_value(chi2, df)?;
    let verdict = if chi2 < critical {
        Verdict::Conforms
    } else {
        Verdict::Rejects
    };
    let warnings = expected
        .expected()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e < LOW_EXPECTED_THRESHOLD)
        .map(|(i, &e)| GofWarning::LowExpectedCount {
            digit: i as u32 + 1,
            expected: e,
        })
        .collect();
    Ok(GofResult {
        chi2,
        df,
        alpha,
        critical,
        p_value: p,
        verdict,
        warnings,
    })
}
