//! Citation snapshots and snapshot series.
//!
//! A snapshot is the set of citation counts of every article citing a seed
//! paper, collected on one date (live "cited-by" data) or for one cumulative
//! publication-year window (frozen "custom-range" data). Uncited articles are
//! counted but excluded from the records; bookkeeping requires
//! `total = uncited + len(records)`. Series add monotonically non-decreasing
//! totals, and frozen series additionally require each snapshot's record
//! multiset to be contained in the next one's (a window never loses or
//! changes a record, it only gains new ones).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::digits::{tally_ints, DigitDistribution};
use crate::error::{Error, Result};

/// A dated (or windowed) collection of citation counts for the articles
/// citing a seed paper.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitationSnapshot {
    /// Seed paper identifier, e.g. `newcomb1881` or `benford1938`.
    pub seed: String,
    /// Opaque ordered label: a collection date or a year range.
    pub label: String,
    /// Total number of citing articles, cited and uncited.
    pub total_citations: u64,
    /// Citing articles that are themselves uncited.
    pub uncited: u64,
    /// Citation counts of the cited citing articles; every entry >= 1.
    pub records: Vec<u64>,
}

impl CitationSnapshot {
    /// Builds a snapshot with `total_citations` derived from the parts.
    pub fn new(
        seed: impl Into<String>,
        label: impl Into<String>,
        uncited: u64,
        records: Vec<u64>,
    ) -> Self {
        CitationSnapshot {
            seed: seed.into(),
            label: label.into(),
            total_citations: uncited + records.len() as u64,
            uncited,
            records,
        }
    }
}

/// How a series was collected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    /// Snapshots taken on successive dates; individual counts drift.
    LiveCitedBy,
    /// Cumulative year windows read on a single date; counts are frozen.
    FrozenCustomRange,
}

impl std::fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeriesKind::LiveCitedBy => write!(f, "live_cited_by"),
            SeriesKind::FrozenCustomRange => write!(f, "frozen_custom_range"),
        }
    }
}

/// An ordered sequence of snapshots of one kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnapshotSeries {
    pub kind: SeriesKind,
    pub snapshots: Vec<CitationSnapshot>,
}

/// Magnitude span of a record set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpanReport {
    pub min_record: u64,
    pub max_record: u64,
    /// `log10(max / min)`.
    pub orders_of_magnitude: f64,
}

/// A single validation failure; validation reports all of them, not just the
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "issue", rename_all = "snake_case")]
pub enum ValidationIssue {
    TotalMismatch {
        label: String,
        total: u64,
        uncited: u64,
        cited: u64,
    },
    ZeroRecord {
        label: String,
        index: usize,
    },
    EmptySeries,
    NonMonotonicTotal {
        prev_label: String,
        prev_total: u64,
        label: String,
        total: u64,
    },
    NestingViolation {
        prev_label: String,
        label: String,
        value: u64,
        prev_count: usize,
        count: usize,
    },
}

impl std::fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ValidationIssue::TotalMismatch {
                label,
                total,
                uncited,
                cited,
            } => write!(
                f,
                "{label}: total ≠ uncited + cited ({total} ≠ {})",
                uncited + cited
            ),
            ValidationIssue::ZeroRecord { label, index } => {
                write!(
                    f,
                    "{label}: record at index {index} is zero; records must be >= 1"
                )
            }
            ValidationIssue::EmptySeries => write!(f, "series contains no snapshots"),
            ValidationIssue::NonMonotonicTotal {
                prev_label,
                prev_total,
                label,
                total,
            } => write!(
                f,
                "total citations decreased from {prev_total} ({prev_label}) to {total} ({label})"
            ),
            ValidationIssue::NestingViolation {
                prev_label,
                label,
                value,
                prev_count,
                count,
            } => write!(
                f,
                "frozen window {label} lost records: value {value} appears {prev_count} time(s) \
                 in {prev_label} but {count} time(s) in {label}"
            ),
        }
    }
}

/// Whether frozen-series nesting violations are errors or warnings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NestingMode {
    #[default]
    Strict,
    Warn,
}

/// Outcome of series validation: hard errors plus downgraded warnings.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeriesValidation {
    pub errors: Vec<ValidationIssue>,
    pub warnings: Vec<ValidationIssue>,
}

impl SeriesValidation {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }
}

fn snapshot_issues(snapshot: &CitationSnapshot) -> Vec<ValidationIssue> {
    let mut issues = Vec::new();
    let cited = snapshot.records.len() as u64;
    if snapshot.total_citations != snapshot.uncited + cited {
        issues.push(ValidationIssue::TotalMismatch {
            label: snapshot.label.clone(),
            total: snapshot.total_citations,
            uncited: snapshot.uncited,
            cited,
        });
    }
    for (index, &record) in snapshot.records.iter().enumerate() {
        if record == 0 {
            issues.push(ValidationIssue::ZeroRecord {
                label: snapshot.label.clone(),
                index,
            });
        }
    }
    issues
}

/// Checks snapshot bookkeeping; returns the complete list of violations.
pub fn validate_snapshot(
    snapshot: &CitationSnapshot,
) -> std::result::Result<(), Vec<ValidationIssue>> {
    let issues = snapshot_issues(snapshot);
    if issues.is_empty() {
        Ok(())
    } else {
        Err(issues)
    }
}

fn record_multiset(records: &[u64]) -> BTreeMap<u64, usize> {
    let mut map = BTreeMap::new();
    for &r in records {
        *map.entry(r).or_insert(0) += 1;
    }
    map
}

/// Validates every snapshot, total monotonicity, and (for frozen series)
/// record-multiset nesting between consecutive windows.
pub fn validate_series(series: &SnapshotSeries, nesting: NestingMode) -> SeriesValidation {
    let mut validation = SeriesValidation::default();
    if series.snapshots.is_empty() {
        validation.errors.push(ValidationIssue::EmptySeries);
        return validation;
    }
    for snapshot in &series.snapshots {
        validation.errors.extend(snapshot_issues(snapshot));
    }
    for pair in series.snapshots.windows(2) {
        let (prev, next) = (&pair[0], &pair[1]);
        if next.total_citations < prev.total_citations {
            validation.errors.push(ValidationIssue::NonMonotonicTotal {
                prev_label: prev.label.clone(),
                prev_total: prev.total_citations,
                label: next.label.clone(),
                total: next.total_citations,
            });
        }
        if series.kind == SeriesKind::FrozenCustomRange {
            let prev_set = record_multiset(&prev.records);
            let next_set = record_multiset(&next.records);
            for (&value, &prev_count) in &prev_set {
                let count = next_set.get(&value).copied().unwrap_or(0);
                if count < prev_count {
                    let issue = ValidationIssue::NestingViolation {
                        prev_label: prev.label.clone(),
                        label: next.label.clone(),
                        value,
                        prev_count,
                        count,
                    };
                    match nesting {
                        NestingMode::Strict => validation.errors.push(issue),
                        NestingMode::Warn => validation.warnings.push(issue),
                    }
                }
            }
        }
    }
    validation
}

/// Splits raw citation counts into positive records and a count of zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredCounts {
    pub records: Vec<u64>,
    pub uncited: u64,
}

/// Filters uncited (zero) entries out of raw counts, preserving order.
pub fn filter_uncited(raw_counts: &[i64]) -> Result<FilteredCounts> {
    let mut records = Vec::with_capacity(raw_counts.len());
    let mut uncited = 0;
    for (index, &value) in raw_counts.iter().enumerate() {
        if value < 0 {
            return Err(Error::NegativeCount { index, value });
        }
        if value == 0 {
            uncited += 1;
        } else {
            records.push(value as u64);
        }
    }
    Ok(FilteredCounts { records, uncited })
}

/// Magnitude span of a non-empty record set.
pub fn span(records: &[u64]) -> Result<SpanReport> {
    if records.is_empty() {
        return Err(Error::EmptyRecords);
    }
    let min_record = *records.iter().min().expect("non-empty");
    let max_record = *records.iter().max().expect("non-empty");
    Ok(SpanReport {
        min_record,
        max_record,
        orders_of_magnitude: (max_record as f64 / min_record as f64).log10(),
    })
}

/// First-digit distribution of a snapshot's records.
pub fn snapshot_to_distribution(
    snapshot: &CitationSnapshot,
    base: u32,
) -> Result<DigitDistribution> {
    if snapshot.records.is_empty() {
        return Err(Error::NoCitedRecords);
    }
    tally_ints(snapshot.records.iter().copied(), base)
}
