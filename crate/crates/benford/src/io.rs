//! File formats.
//!
//! Three UTF-8 input formats are supported, all documented in the README:
//!
//! * **Snapshot file**: one JSON document per snapshot with fields `seed`,
//!   `label`, optional `kind`, optional `total_citations`, optional
//!   `uncited`, and `records` (array of positive integers). Omitted totals
//!   are derived; present ones must reconcile.
//! * **Series file**: JSON with `kind` (`live_cited_by` or
//!   `frozen_custom_range`) and `snapshots`, an array of snapshot documents.
//! * **Distribution fixture**: JSON with `base`, `counts` (exactly
//!   `base - 1` non-negative integers), `n`, and a free-form `provenance`
//!   string.
//! * **Plain list**: one non-negative integer per line; blank lines and
//!   `#` comments are skipped, zeros are filtered out and reported.
//!
//! `read_input` sniffs the format: JSON documents are told apart by their
//! fields, anything else is parsed as a plain list.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::dataset::{filter_uncited, CitationSnapshot, SeriesKind, SnapshotSeries};
use crate::digits::DigitDistribution;
use crate::error::{Error, Result};

/// A digit distribution together with where it came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionFixture {
    pub distribution: DigitDistribution,
    pub provenance: String,
}

/// A parsed plain list: positive records plus the count of filtered zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainList {
    pub records: Vec<u64>,
    pub uncited: u64,
}

/// Any of the supported input documents.
#[derive(Debug, Clone, PartialEq)]
pub enum InputDocument {
    Snapshot(CitationSnapshot),
    Series(SnapshotSeries),
    Distribution(DistributionFixture),
    PlainList(PlainList),
}

#[derive(Deserialize)]
struct SnapshotDoc {
    seed: String,
    label: String,
    #[serde(default)]
    #[allow(dead_code)]
    kind: Option<SeriesKind>,
    #[serde(default)]
    total_citations: Option<u64>,
    #[serde(default)]
    uncited: Option<u64>,
    records: Vec<i64>,
}

#[derive(Deserialize)]
struct SeriesDoc {
    kind: SeriesKind,
    snapshots: Vec<SnapshotDoc>,
}

#[derive(Deserialize)]
struct FixtureDoc {
    base: u32,
    counts: Vec<u64>,
    n: u64,
    provenance: String,
}

fn parse_error(origin: &str, message: impl std::fmt::Display) -> Error {
    Error::Parse {
        origin: origin.to_string(),
        message: message.to_string(),
    }
}

fn resolve_snapshot(doc: SnapshotDoc, origin: &str) -> Result<CitationSnapshot> {
    let mut records = Vec::with_capacity(doc.records.len());
    for (index, &value) in doc.records.iter().enumerate() {
        if value <= 0 {
            return Err(parse_error(
                origin,
                format!(
                    "snapshot '{}': record at index {index} must be a positive integer, got {value}",
                    doc.label
                ),
            ));
        }
        records.push(value as u64);
    }
    let cited = records.len() as u64;
    let (total_citations, uncited) = match (doc.total_citations, doc.uncited) {
        (Some(total), Some(uncited)) => (total, uncited),
        (Some(total), None) => {
            let uncited = total.checked_sub(cited).ok_or_else(|| {
                parse_error(
                    origin,
                    format!(
                        "snapshot '{}': total_citations {} is smaller than the {} records",
                        doc.label, total, cited
                    ),
                )
            })?;
            (total, uncited)
        }
        (None, Some(uncited)) => (uncited + cited, uncited),
        (None, None) => (cited, 0),
    };
    Ok(CitationSnapshot {
        seed: doc.seed,
        label: doc.label,
        total_citations,
        uncited,
        records,
    })
}

/// Parses a snapshot JSON document.
pub fn parse_snapshot(text: &str, origin: &str) -> Result<CitationSnapshot> {
    let doc: SnapshotDoc = serde_json::from_str(text).map_err(|e| parse_error(origin, e))?;
    resolve_snapshot(doc, origin)
}

/// Parses a series JSON document.
pub fn parse_series(text: &str, origin: &str) -> Result<SnapshotSeries> {
    let doc: SeriesDoc = serde_json::from_str(text).map_err(|e| parse_error(origin, e))?;
    let snapshots = doc
        .snapshots
        .into_iter()
        .map(|s| resolve_snapshot(s, origin))
        .collect::<Result<Vec<_>>>()?;
    Ok(SnapshotSeries {
        kind: doc.kind,
        snapshots,
    })
}

/// Parses a distribution fixture JSON document.
pub fn parse_distribution_fixture(text: &str, origin: &str) -> Result<DistributionFixture> {
    let doc: FixtureDoc = serde_json::from_str(text).map_err(|e| parse_error(origin, e))?;
    let distribution =
        DigitDistribution::from_counts(doc.base, doc.counts).map_err(|e| parse_error(origin, e))?;
    if distribution.n() != doc.n {
        return Err(parse_error(
            origin,
            format!(
                "field 'n' is {} but the counts sum to {}",
                doc.n,
                distribution.n()
            ),
        ));
    }
    Ok(DistributionFixture {
        distribution,
        provenance: doc.provenance,
    })
}

/// Parses a plain list of non-negative integers, one per line.
pub fn parse_plain_list(text: &str, origin: &str) -> Result<PlainList> {
    let mut raw = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let value: i64 = line.parse().map_err(|_| {
            parse_error(
                &format!("{origin}:{}", lineno + 1),
                format!("expected a non-negative integer, got '{line}'"),
            )
        })?;
        if value < 0 {
            return Err(parse_error(
                &format!("{origin}:{}", lineno + 1),
                format!("negative citation count {value}"),
            ));
        }
        raw.push(value);
    }
    let filtered = filter_uncited(&raw)?;
    Ok(PlainList {
        records: filtered.records,
        uncited: filtered.uncited,
    })
}

/// Parses any supported document, sniffing the format.
pub fn parse_input(text: &str, origin: &str) -> Result<InputDocument> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| parse_error(origin, e))?;
        let object = value
            .as_object()
            .ok_or_else(|| parse_error(origin, "expected a JSON object"))?;
        if object.contains_key("snapshots") {
            parse_series(text, origin).map(InputDocument::Series)
        } else if object.contains_key("counts") {
            parse_distribution_fixture(text, origin).map(InputDocument::Distribution)
        } else if object.contains_key("records") {
            parse_snapshot(text, origin).map(InputDocument::Snapshot)
        } else {
            Err(parse_error(
                origin,
                "unrecognized JSON document: expected a 'records', 'counts' or 'snapshots' field",
            ))
        }
    } else {
        parse_plain_list(text, origin).map(InputDocument::PlainList)
    }
}

fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_snapshot(path: &Path) -> Result<CitationSnapshot> {
    parse_snapshot(&read_to_string(path)?, &path.display().to_string())
}

pub fn read_series(path: &Path) -> Result<SnapshotSeries> {
    parse_series(&read_to_string(path)?, &path.display().to_string())
}

pub fn read_distribution_fixture(path: &Path) -> Result<DistributionFixture> {
    parse_distribution_fixture(&read_to_string(path)?, &path.display().to_string())
}

pub fn read_plain_list(path: &Path) -> Result<PlainList> {
    parse_plain_list(&read_to_string(path)?, &path.display().to_string())
}

pub fn read_input(path: &Path) -> Result<InputDocument> {
    parse_input(&read_to_string(path)?, &path.display().to_string())
}

/// Writes a plain list, one integer per line with a trailing newline.
pub fn write_plain_list(path: &Path, values: &[u64]) -> Result<()> {
    let mut text = String::with_capacity(values.len() * 8);
    for v in values {
        text.push_str(&v.to_string());
        text.push('\n');
    }
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snapshot_with_explicit_totals() {
        let snap = parse_snapshot(
            r#"{"seed":"newcomb1881","label":"2013-09-30","kind":"live_cited_by",
                "total_citations":7,"uncited":4,"records":[118,234,342]}"#,
            "<test>",
        )
        .unwrap();
        assert_eq!(snap.total_citations, 7);
        assert_eq!(snap.uncited, 4);
        assert_eq!(snap.records, vec![118, 234, 342]);
    }

    #[test]
    fn snapshot_derives_missing_fields() {
        let derived_uncited = parse_snapshot(
            r#"{"seed":"s","label":"l","total_citations":10,"records":[5,6,7]}"#,
            "<test>",
        )
        .unwrap();
        assert_eq!(derived_uncited.uncited, 7);

        let derived_total = parse_snapshot(
            r#"{"seed":"s","label":"l","uncited":2,"records":[5,6,7]}"#,
            "<test>",
        )
        .unwrap();
        assert_eq!(derived_total.total_citations, 5);

        let bare = parse_snapshot(r#"{"seed":"s","label":"l","records":[5]}"#, "<test>").unwrap();
        assert_eq!(bare.total_citations, 1);
        assert_eq!(bare.uncited, 0);
    }

    #[test]
    fn snapshot_rejects_impossible_total() {
        let err = parse_snapshot(
            r#"{"seed":"s","label":"l","total_citations":2,"records":[5,6,7]}"#,
            "<test>",
        )
        .unwrap_err();
        assert!(err.to_string().contains("smaller than the 3 records"));
    }

    #[test]
    fn snapshot_rejects_nonpositive_records() {
        let err =
            parse_snapshot(r#"{"seed":"s","label":"l","records":[5,0,7]}"#, "<test>").unwrap_err();
        assert!(err.to_string().contains("index 1"));
        let err =
            parse_snapshot(r#"{"seed":"s","label":"l","records":[5,-2]}"#, "<test>").unwrap_err();
        assert!(err.to_string().contains("-2"));
    }

    #[test]
    fn fixture_round_trip_and_validation() {
        let text = r#"{"base":10,"counts":[78,53,29,22,15,11,11,6,6],"n":231,
                       "provenance":"Table 2, SN, 2013-09-30"}"#;
        let fixture = parse_distribution_fixture(text, "<test>").unwrap();
        assert_eq!(fixture.distribution.n(), 231);
        assert_eq!(fixture.provenance, "Table 2, SN, 2013-09-30");

        let bad_n = text.replace("231", "230");
        let err = parse_distribution_fixture(&bad_n, "<test>").unwrap_err();
        assert!(err.to_string().contains("counts sum to 231"));

        let bad_len = r#"{"base":10,"counts":[1,2,3],"n":6,"provenance":"x"}"#;
        assert!(parse_distribution_fixture(bad_len, "<test>").is_err());
    }

    #[test]
    fn plain_list_parses_and_filters() {
        let list = parse_plain_list("# demo\n118\n0\n234\n\n342\n0\n", "<test>").unwrap();
        assert_eq!(list.records, vec![118, 234, 342]);
        assert_eq!(list.uncited, 2);
    }

    #[test]
    fn plain_list_diagnostics_name_the_line() {
        let err = parse_plain_list("118\nabc\n", "input.txt").unwrap_err();
        assert_eq!(
            err.to_string(),
            "input.txt:2: expected a non-negative integer, got 'abc'"
        );
        let err = parse_plain_list("118\n-4\n", "input.txt").unwrap_err();
        assert!(err.to_string().starts_with("input.txt:2:"));
    }

    #[test]
    fn input_sniffing() {
        let snap = parse_input(r#"{"seed":"s","label":"l","records":[5]}"#, "<t>").unwrap();
        assert!(matches!(snap, InputDocument::Snapshot(_)));

        let series = parse_input(
            r#"{"kind":"live_cited_by","snapshots":[{"seed":"s","label":"l","records":[5]}]}"#,
            "<t>",
        )
        .unwrap();
        assert!(matches!(series, InputDocument::Series(_)));

        let fixture = parse_input(
            r#"{"base":10,"counts":[1,0,0,0,0,0,0,0,0],"n":1,"provenance":"x"}"#,
            "<t>",
        )
        .unwrap();
        assert!(matches!(fixture, InputDocument::Distribution(_)));

        let list = parse_input("1\n2\n3\n", "<t>").unwrap();
        assert!(matches!(list, InputDocument::PlainList(_)));

        assert!(parse_input(r#"{"what":1}"#, "<t>").is_err());
    }

    #[test]
    fn series_parses_kinds() {
        let text = r#"{"kind":"frozen_custom_range","snapshots":[
            {"seed":"s","label":"w0","records":[3]},
            {"seed":"s","label":"w1","records":[3,14]}]}"#;
        let series = parse_series(text, "<test>").unwrap();
        assert_eq!(series.kind, SeriesKind::FrozenCustomRange);
        assert_eq!(series.snapshots.len(), 2);

        assert!(parse_series(r#"{"kind":"sideways","snapshots":[]}"#, "<t>").is_err());
    }
}
