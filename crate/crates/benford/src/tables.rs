//! Bundled reference data: the published first-digit tables for Google
//! Scholar citation snapshots of the articles citing Newcomb (1881) and
//! Benford (1938), as printed in the source study.
//!
//! Tables 2 and 5 carry full digit distributions (with the study's rounded
//! expected counts and error bars); Tables 3, 4, 6 and 7 carry per-snapshot
//! bookkeeping totals and chi-square statistics only, since their raw digit
//! counts were never published. All values are transcribed verbatim,
//! including any rounding quirks or arithmetic slips in the originals; the
//! `report::reproduce` machinery recomputes and diffs rather than trusting
//! them.

use crate::dataset::SeriesKind;
use crate::error::{Error, Result};

/// Classical first-digit proportions as printed (3 decimal places).
pub const BENFORD_PROPORTIONS_3DP: [f64; 9] = [
    0.301, 0.176, 0.125, 0.097, 0.079, 0.067, 0.058, 0.051, 0.046,
];

/// Identifier of a published table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    Two,
    Three,
    Four,
    Five,
    Six,
    Seven,
}

impl TableId {
    pub const ALL: [TableId; 6] = [
        TableId::Two,
        TableId::Three,
        TableId::Four,
        TableId::Five,
        TableId::Six,
        TableId::Seven,
    ];

    pub fn number(self) -> u8 {
        match self {
            TableId::Two => 2,
            TableId::Three => 3,
            TableId::Four => 4,
            TableId::Five => 5,
            TableId::Six => 6,
            TableId::Seven => 7,
        }
    }
}

impl std::fmt::Display for TableId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl std::str::FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "2" => Ok(TableId::Two),
            "3" => Ok(TableId::Three),
            "4" => Ok(TableId::Four),
            "5" => Ok(TableId::Five),
            "6" => Ok(TableId::Six),
            "7" => Ok(TableId::Seven),
            other => Err(Error::UnknownTable(other.to_string())),
        }
    }
}

/// One column of a published digit-distribution table: observed counts plus
/// the printed expected counts, error bars and chi-square statistic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceDigitTable {
    pub seed: &'static str,
    pub label: &'static str,
    pub n: u64,
    pub observed: [u64; 9],
    /// Expected counts as printed, rounded to one decimal place.
    pub expected_printed: [f64; 9],
    /// Binomial RMS errors as printed, rounded to one decimal place.
    pub errors_printed: [f64; 9],
    pub chi2_printed: f64,
    pub provenance: &'static str,
}

/// One row of a published bookkeeping table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceSeriesRow {
    pub label: &'static str,
    pub total: u64,
    pub uncited: u64,
    pub cited: u64,
    /// Chi-square statistic as printed; the digit counts behind it were not
    /// published.
    pub chi2_printed: f64,
}

/// A published bookkeeping table: one seed paper, several snapshots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceSeriesTable {
    pub seed: &'static str,
    pub kind: SeriesKind,
    pub rows: &'static [ReferenceSeriesRow],
    pub provenance: &'static str,
}

const fn row(
    label: &'static str,
    total: u64,
    uncited: u64,
    cited: u64,
    chi2_printed: f64,
) -> ReferenceSeriesRow {
    ReferenceSeriesRow {
        label,
        total,
        uncited,
        cited,
        chi2_printed,
    }
}

/// Table 2, first column: digits of the 1881 seed's snapshot on 2013-09-30.
pub const TABLE2_SN: ReferenceDigitTable = ReferenceDigitTable {
    seed: "newcomb1881",
    label: "2013-09-30",
    n: 231,
    observed: [78, 53, 29, 22, 15, 11, 11, 6, 6],
    expected_printed: [69.5, 40.7, 28.9, 22.4, 18.3, 15.5, 13.4, 11.8, 10.6],
    errors_printed: [7.0, 5.8, 5.0, 4.5, 4.1, 3.8, 3.5, 3.3, 3.2],
    chi2_printed: 11.919,
    provenance: "Table 2, SN, 2013-09-30",
};

/// Table 2, second column: digits of the 1938 seed's snapshot on 2013-09-30.
pub const TABLE2_FB: ReferenceDigitTable = ReferenceDigitTable {
    seed: "benford1938",
    label: "2013-09-30",
    n: 449,
    observed: [140, 90, 54, 47, 33, 27, 28, 13, 17],
    expected_printed: [135.2, 79.1, 56.1, 43.5, 35.5, 30.1, 26.0, 23.0, 20.5],
    errors_printed: [9.7, 8.1, 7.0, 6.3, 5.7, 5.3, 4.9, 4.7, 4.4],
    chi2_printed: 7.623,
    provenance: "Table 2, FB, 2013-09-30",
};

/// Table 5, first column: digits of the 1881 seed's 1881-2015 window.
pub const TABLE5_SN: ReferenceDigitTable = ReferenceDigitTable {
    seed: "newcomb1881",
    label: "1881-2015",
    n: 333,
    observed: [112, 59, 36, 39, 24, 18, 23, 13, 9],
    expected_printed: [100.2, 58.6, 41.6, 32.3, 26.4, 22.3, 19.3, 17.0, 15.2],
    errors_printed: [8.4, 6.9, 6.0, 5.4, 4.9, 4.6, 4.3, 4.0, 3.8],
    chi2_printed: 8.792,
    provenance: "Table 5, SN, 1881-2015",
};

/// Table 5, second column: digits of the 1938 seed's 1938-2015 window.
pub const TABLE5_FB: ReferenceDigitTable = ReferenceDigitTable {
    seed: "benford1938",
    label: "1938-2015",
    n: 635,
    observed: [206, 104, 76, 69, 48, 39, 44, 27, 22],
    expected_printed: [191.2, 111.8, 79.3, 61.5, 50.3, 42.5, 36.8, 32.5, 29.1],
    errors_printed: [11.6, 9.6, 8.3, 7.4, 6.8, 6.3, 5.9, 5.5, 5.3],
    chi2_printed: 7.176,
    provenance: "Table 5, FB, 1938-2015",
};

/// Table 3: dated cited-by snapshots of the 1881 seed.
pub const TABLE3: ReferenceSeriesTable = ReferenceSeriesTable {
    seed: "newcomb1881",
    kind: SeriesKind::LiveCitedBy,
    rows: &[
        row("2012-09-30", 342, 146, 196, 14.531),
        row("2013-09-30", 410, 179, 231, 11.919),
        row("2015-09-30", 544, 226, 318, 7.968),
    ],
    provenance: "Table 3, SN cited-by snapshots",
};

/// Table 4: dated cited-by snapshots of the 1938 seed.
pub const TABLE4: ReferenceSeriesTable = ReferenceSeriesTable {
    seed: "benford1938",
    kind: SeriesKind::LiveCitedBy,
    rows: &[
        row("2012-09-30", 617, 250, 367, 14.891),
        row("2013-09-30", 748, 299, 449, 7.623),
        row("2015-09-30", 1011, 412, 599, 9.311),
    ],
    provenance: "Table 4, FB cited-by snapshots",
};

/// Table 6: cumulative custom-range windows of the 1881 seed.
///
/// Transcribed as printed; note the 1881-2011 row does not reconcile
/// (331 ≠ 110 + 229) in the original.
pub const TABLE6: ReferenceSeriesTable = ReferenceSeriesTable {
    seed: "newcomb1881",
    kind: SeriesKind::FrozenCustomRange,
    rows: &[
        row("1881-2006", 129, 39, 90, 8.563),
        row("1881-2007", 151, 42, 109, 9.815),
        row("1881-2008", 183, 47, 136, 5.812),
        row("1881-2009", 232, 63, 169, 5.339),
        row("1881-2010", 278, 81, 197, 5.058),
        row("1881-2011", 331, 110, 229, 5.798),
        row("1881-2012", 393, 130, 263, 4.068),
        row("1881-2013", 437, 152, 285, 5.572),
        row("1881-2014", 498, 177, 321, 7.417),
        row("1881-2015", 558, 225, 333, 8.792),
        row("1881-2016", 567, 231, 336, 9.636),
    ],
    provenance: "Table 6, SN yearly custom-range windows",
};

/// Table 7: cumulative custom-range windows of the 1938 seed.
pub const TABLE7: ReferenceSeriesTable = ReferenceSeriesTable {
    seed: "benford1938",
    kind: SeriesKind::FrozenCustomRange,
    rows: &[
        row("1938-1999", 103, 13, 90, 9.107),
        row("1938-2000", 111, 15, 96, 10.295),
        row("1938-2001", 131, 22, 109, 9.235),
        row("1938-2002", 150, 30, 120, 7.057),
        row("1938-2003", 172, 36, 136, 4.976),
        row("1938-2004", 206, 48, 158, 5.136),
        row("1938-2005", 236, 53, 183, 6.322),
        row("1938-2006", 274, 66, 208, 7.196),
        row("1938-2007", 321, 80, 241, 9.945),
        row("1938-2008", 381, 94, 287, 4.685),
        row("1938-2009", 451, 114, 337, 3.438),
        row("1938-2010", 520, 139, 381, 3.194),
        row("1938-2011", 616, 179, 437, 4.37),
        row("1938-2012", 719, 219, 500, 2.163),
        row("1938-2013", 813, 265, 548, 5.549),
        row("1938-2014", 931, 322, 609, 6.5),
        row("1938-2015", 1040, 405, 635, 7.176),
        row("1938-2016", 1060, 421, 639, 7.904),
    ],
    provenance: "Table 7, FB yearly custom-range windows",
};

/// The two digit tables behind a digit-distribution table id, if it is one.
pub fn digit_tables(id: TableId) -> Option<[&'static ReferenceDigitTable; 2]> {
    match id {
        TableId::Two => Some([&TABLE2_SN, &TABLE2_FB]),
        TableId::Five => Some([&TABLE5_SN, &TABLE5_FB]),
        _ => None,
    }
}

/// The bookkeeping table behind a series table id, if it is one.
pub fn series_table(id: TableId) -> Option<&'static ReferenceSeriesTable> {
    match id {
        TableId::Three => Some(&TABLE3),
        TableId::Four => Some(&TABLE4),
        TableId::Six => Some(&TABLE6),
        TableId::Seven => Some(&TABLE7),
        _ => None,
    }
}

/// Every published bookkeeping row across Tables 3, 4, 6 and 7.
pub fn all_series_rows(
) -> impl Iterator<Item = (&'static ReferenceSeriesTable, &'static ReferenceSeriesRow)> {
    [&TABLE3, &TABLE4, &TABLE6, &TABLE7]
        .into_iter()
        .flat_map(|table| table.rows.iter().map(move |row| (table, row)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_table_totals_match_counts() {
        for table in [&TABLE2_SN, &TABLE2_FB, &TABLE5_SN, &TABLE5_FB] {
            assert_eq!(
                table.observed.iter().sum::<u64>(),
                table.n,
                "{}",
                table.provenance
            );
        }
    }

    #[test]
    fn series_row_count() {
        assert_eq!(all_series_rows().count(), 3 + 3 + 11 + 18);
    }

    #[test]
    fn table_ids_parse() {
        for id in TableId::ALL {
            let parsed: TableId = id.number().to_string().parse().unwrap();
            assert_eq!(parsed, id);
        }
        assert!("1".parse::<TableId>().is_err());
        assert!("eight".parse::<TableId>().is_err());
    }

    #[test]
    fn digit_tables_and_series_tables_partition_ids() {
        for id in TableId::ALL {
            assert_ne!(digit_tables(id).is_some(), series_table(id).is_some());
        }
    }
}
