//! Building, validating and analyzing citation snapshot series.
//!
//! ```bash
//! cargo run -p benford --example citation_series
//! ```

use std::path::Path;

use benford::{
    analyze_series, io, render_series, validate_series, CitationSnapshot, DigitLawModel,
    NestingMode, OutputFormat, SeriesKind, SnapshotSeries,
};

fn main() -> Result<(), benford::Error> {
    // A frozen custom-range series from the shipped demo fixture: cumulative
    // windows whose record multisets nest.
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/demo_series.json");
    let series = io::read_series(&path)?;
    let model = DigitLawModel::classical(10)?;
    let report = analyze_series(&series, &model, 0.05, NestingMode::Strict)?;
    print!("{}", render_series(&report, OutputFormat::Table));

    // Validation catches broken bookkeeping. This constructed series loses a
    // record between windows and its totals decrease.
    let broken = SnapshotSeries {
        kind: SeriesKind::FrozenCustomRange,
        snapshots: vec![
            CitationSnapshot::new("demo", "1990-2000", 3, vec![12, 7, 7, 210]),
            CitationSnapshot::new("demo", "1990-2001", 0, vec![12, 7, 210]),
        ],
    };
    let validation = validate_series(&broken, NestingMode::Strict);
    println!("\nconstructed series, strict validation:");
    for issue in &validation.errors {
        println!("  error: {issue}");
    }

    // The nesting check can be downgraded for exports that deduplicate
    // differently between windows; monotonicity violations stay fatal.
    let relaxed = validate_series(&broken, NestingMode::Warn);
    println!(
        "relaxed validation: {} error(s), {} warning(s)",
        relaxed.errors.len(),
        relaxed.warnings.len()
    );
    Ok(())
}
