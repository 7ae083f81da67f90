//! Digit-probability models.
//!
//! Three parametric laws over the digits `1..base-1`:
//!
//! * classical logarithmic law, `P(d) = log_base(1 + 1/d)`;
//! * generalized power-law with exponent `beta > 0`,
//!   `P(d) = ((d+1)^(1-beta) - d^(1-beta)) / (base^(1-beta) - 1)`,
//!   which reduces to the classical law as `beta -> 1`;
//! * uniform null, `P(d) = 1 / (base - 1)`.
//!
//! The generalized form is the digit law of a continuous power-law density
//! `~ x^-beta` truncated to a whole number of decades, which is what the
//! `synth` module samples from.

use serde::{Deserialize, Serialize};

use crate::digits::{check_base, Digit};
use crate::error::{Error, Result};

/// Width of the band around `beta = 1` inside which the generalized law is
/// evaluated through the classical branch (the generic formula divides by
/// zero at exactly one).
pub const BETA_UNIT_BAND: f64 = 1e-9;

/// Which digit law a model evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LawKind {
    ClassicalBenford,
    GeneralizedBenford { beta: f64 },
    Uniform,
}

/// A digit-probability model over a fixed base.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawModel")]
pub struct DigitLawModel {
    #[serde(flatten)]
    kind: LawKind,
    base: u32,
}

#[derive(Deserialize)]
struct RawModel {
    #[serde(flatten)]
    kind: LawKind,
    base: u32,
}

impl TryFrom<RawModel> for DigitLawModel {
    type Error = Error;

    fn try_from(raw: RawModel) -> Result<Self> {
        match raw.kind {
            LawKind::ClassicalBenford => DigitLawModel::classical(raw.base),
            LawKind::GeneralizedBenford { beta } => DigitLawModel::generalized(raw.base, beta),
            LawKind::Uniform => DigitLawModel::uniform(raw.base),
        }
    }
}

impl DigitLawModel {
    /// Classical logarithmic law in `base`.
    pub fn classical(base: u32) -> Result<Self> {
        check_base(base)?;
        Ok(DigitLawModel {
            kind: LawKind::ClassicalBenford,
            base,
        })
    }

    /// Generalized power-law with exponent `beta > 0` in `base`.
    pub fn generalized(base: u32, beta: f64) -> Result<Self> {
        check_base(base)?;
        if !beta.is_finite() || beta <= 0.0 {
            return Err(Error::InvalidBeta { beta });
        }
        Ok(DigitLawModel {
            kind: LawKind::GeneralizedBenford { beta },
            base,
        })
    }

    /// Uniform null model in `base`.
    pub fn uniform(base: u32) -> Result<Self> {
        check_base(base)?;
        Ok(DigitLawModel {
            kind: LawKind::Uniform,
            base,
        })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn kind(&self) -> LawKind {
        self.kind
    }

    /// Human-readable name used in report headers.
    pub fn name(&self) -> String {
        match self.kind {
            LawKind::ClassicalBenford => format!("Benford (base {})", self.base),
            LawKind::GeneralizedBenford { beta } => {
                format!("generalized Benford (base {}, beta {})", self.base, beta)
            }
            LawKind::Uniform => format!("uniform (base {})", self.base),
        }
    }

    /// Probability of `digit` appearing as first significant digit.
    pub fn probability(&self, digit: Digit) -> Result<f64> {
        let d = digit.value();
        if d == 0 || d >= self.base {
            return Err(Error::DigitOutOfRange {
                digit: d,
                base: self.base,
            });
        }
        Ok(self.prob_unchecked(d))
    }

    /// Probabilities for every digit; entry `d - 1` corresponds to digit `d`.
    pub fn probabilities(&self) -> Vec<f64> {
        (1..self.base).map(|d| self.prob_unchecked(d)).collect()
    }

    fn prob_unchecked(&self, d: u32) -> f64 {
        let b = f64::from(self.base);
        match self.kind {
            LawKind::ClassicalBenford => classical_prob(d, b),
            LawKind::Uniform => 1.0 / (b - 1.0),
            LawKind::GeneralizedBenford { beta } => {
                if (beta - 1.0).abs() < BETA_UNIT_BAND {
                    classical_prob(d, b)
                } else {
                    generalized_prob(d, b, beta)
                }
            }
        }
    }
}

fn classical_prob(d: u32, base: f64) -> f64 {
    (1.0 / f64::from(d)).ln_1p() / base.ln()
}

// ((d+1)^t - d^t) / (base^t - 1) with t = 1 - beta, written with expm1/ln_1p
// so it stays fully accurate arbitrarily close to beta = 1.
fn generalized_prob(d: u32, base: f64, beta: f64) -> f64 {
    let t = 1.0 - beta;
    let d = f64::from(d);
    let numerator = (t * d.ln()).exp() * (t * (1.0 / d).ln_1p()).exp_m1();
    let denominator = (t * base.ln()).exp_m1();
    numerator / denominator
}
