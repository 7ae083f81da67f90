//! Emitting the observed-vs-model bar chart as a standalone SVG file.
//!
//! ```bash
//! cargo run -p benford --example render_chart
//! ```

use std::path::Path;

use benford::{analyze, io, render_chart, DigitLawModel};

fn main() -> Result<(), benford::Error> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/table2_fb.json");
    let fixture = io::read_distribution_fixture(&path)?;
    let model = DigitLawModel::classical(10)?;
    let report = analyze(fixture.provenance, fixture.distribution, &model, 0.05, None)?;

    let svg = render_chart(&report)?;
    let out = std::env::temp_dir().join("benford_chart.svg");
    std::fs::write(&out, &svg).map_err(|source| benford::Error::Io {
        path: out.clone(),
        source,
    })?;
    println!(
        "wrote {} ({} bytes): grouped observed/model bars with the uniform reference line",
        out.display(),
        svg.len()
    );
    Ok(())
}
