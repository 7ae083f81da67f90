//! First-significant-digit conformity analysis.
//!
//! This crate tests whether numeric datasets (citation-count snapshots in
//! particular) follow Benford's law. It covers the full pipeline: digit
//! extraction in any base from 2 to 36, three digit-probability models
//! (classical Benford, a generalized power-law with exponent `beta`, and the
//! uniform null), expected counts with binomial error bars, Pearson
//! chi-square statistics with critical values and p-values, conformity
//! verdicts, citation-snapshot bookkeeping, seeded synthetic generators, and
//! report/chart emission. The published reference tables for the Google
//! Scholar citation data of Newcomb (1881) and Benford (1938) are bundled
//! and can be recomputed with [`report::reproduce`].
//!
//! ```
//! use benford::{analyze, tally_ints, DigitLawModel, Verdict};
//!
//! let counts = [118u64, 234, 342, 15, 27, 41, 88, 93, 12, 66];
//! let observed = tally_ints(counts.iter().copied(), 10)?;
//! let model = DigitLawModel::classical(10)?;
//! let report = analyze("inline demo", observed, &model, 0.05, None)?;
//! assert_eq!(report.gof.verdict, Verdict::Conforms);
//! # Ok::<(), benford::Error>(())
//! ```
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p benford --example first_digits
//! cargo run -p benford --example digit_models
//! cargo run -p benford --example conformity_test
//! cargo run -p benford --example generate_samples
//! cargo run -p benford --example citation_series
//! cargo run -p benford --example reproduce_tables
//! cargo run -p benford --example render_chart
//! ```
//!
//! A thin `benford` binary exposes the same pipeline as subcommands
//! (`analyze`, `series`, `synth`, `chart`, `reproduce`, `validate`); see the
//! README for the file formats and exit-code convention.

pub mod chart;
pub mod dataset;
pub mod digits;
mod error;
pub mod gof;
pub mod io;
pub mod models;
pub mod report;
mod special;
pub mod synth;
pub mod tables;

pub use chart::render_chart;
pub use dataset::{
    filter_uncited, snapshot_to_distribution, span, validate_series, validate_snapshot,
    CitationSnapshot, NestingMode, SeriesKind, SnapshotSeries, SpanReport, ValidationIssue,
};
pub use digits::{first_digit, first_digit_of_int, tally, tally_ints, Digit, DigitDistribution};
pub use error::{Error, Result};
pub use gof::{
    chi_square, chi_square_critical, conformity_test, digit_deviations, expected_counts, p_value,
    ExpectedDistribution, GofResult, GofWarning, Verdict,
};
pub use models::{DigitLawModel, LawKind};
pub use report::{
    analyze, analyze_series, render_analysis, render_reproduction, render_series, reproduce,
    AnalysisReport, OutputFormat, Reproduction, SeriesReport,
};
pub use synth::{generate, GeneratorSpec, SynthLaw, Xorshift64Star};
pub use tables::TableId;
