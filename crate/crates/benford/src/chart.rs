//! Static SVG bar charts of observed vs. model digit proportions.
//!
//! Layout constants are fixed (640x420 canvas, 56/20/36/48 margins); output
//! is plain SVG text built deterministically, so identical reports yield
//! byte-identical files. Each digit gets a pair of bars, observed proportion
//! next to model proportion, and a dashed horizontal line marks the uniform
//! reference `1 / (base - 1)` (the "equal proportion" null).

use crate::error::{Error, Result};
use crate::report::{digit_labels, AnalysisReport};

pub const WIDTH: f64 = 640.0;
pub const HEIGHT: f64 = 420.0;
pub const MARGIN_LEFT: f64 = 56.0;
pub const MARGIN_RIGHT: f64 = 20.0;
pub const MARGIN_TOP: f64 = 36.0;
pub const MARGIN_BOTTOM: f64 = 48.0;

const OBSERVED_FILL: &str = "#4682b4";
const MODEL_FILL: &str = "#ff8c00";
const UNIFORM_STROKE: &str = "#555555";

fn fmt(x: f64) -> String {
    format!("{x:.2}")
}

/// Renders the grouped bar chart for a report as an SVG document.
pub fn render_chart(report: &AnalysisReport) -> Result<String> {
    if report.observed.n() == 0 {
        return Err(Error::EmptyDistribution);
    }
    let observed = report.observed.proportions();
    let model_probs = report.expected.model().probabilities();
    let digits = digit_labels(&report.observed);
    let uniform = 1.0 / (observed.len()) as f64;

    let max_prop = observed
        .iter()
        .chain(model_probs.iter())
        .chain(std::iter::once(&uniform))
        .fold(0.0f64, |a, &b| a.max(b));
    // Headroom, snapped up to the next 0.05 so tick labels stay tidy.
    let y_max = ((max_prop * 1.15) / 0.05).ceil() * 0.05;

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let x0 = MARGIN_LEFT;
    let y0 = MARGIN_TOP + plot_h;
    let y_of = |p: f64| y0 - p / y_max * plot_h;

    let mut svg = String::new();
    svg.push_str(&format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<text x="{}" y="22" font-family="sans-serif" font-size="14">first-digit proportions: {} ({})</text>"#,
        fmt(x0),
        xml_escape(&report.source),
        xml_escape(&report.expected.model().name()),
    ));
    svg.push('\n');

    // Horizontal grid lines and y-axis tick labels, five steps.
    for step in 0..=5 {
        let p = y_max * f64::from(step) / 5.0;
        let y = y_of(p);
        svg.push_str(&format!(
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#dddddd" stroke-width="1"/>"##,
            fmt(x0),
            fmt(y),
            fmt(x0 + plot_w),
            fmt(y)
        ));
        svg.push('\n');
        svg.push_str(&format!(
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11" text-anchor="end">{:.3}</text>"#,
            fmt(x0 - 6.0),
            fmt(y + 4.0),
            p
        ));
        svg.push('\n');
    }

    // Grouped bars: observed on the left of each slot, model on the right.
    let slot = plot_w / digits.len() as f64;
    let bar = slot * 0.34;
    for (i, &label) in digits.iter().enumerate() {
        let center = x0 + slot * (i as f64 + 0.5);
        let obs_h = observed[i] / y_max * plot_h;
        let model_h = model_probs[i] / y_max * plot_h;
        svg.push_str(&format!(
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{OBSERVED_FILL}"/>"#,
            fmt(center - bar),
            fmt(y0 - obs_h),
            fmt(bar),
            fmt(obs_h)
        ));
        svg.push('\n');
        svg.push_str(&format!(
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{MODEL_FILL}"/>"#,
            fmt(center),
            fmt(y0 - model_h),
            fmt(bar),
            fmt(model_h)
        ));
        svg.push('\n');
        svg.push_str(&format!(
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{label}</text>"#,
            fmt(center),
            fmt(y0 + 16.0)
        ));
        svg.push('\n');
    }

    // Uniform reference line.
    let y_uniform = y_of(uniform);
    svg.push_str(&format!(
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{UNIFORM_STROKE}" stroke-width="1.5" stroke-dasharray="6,4"/>"#,
        fmt(x0),
        fmt(y_uniform),
        fmt(x0 + plot_w),
        fmt(y_uniform)
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11" fill="{UNIFORM_STROKE}">uniform {:.3}</text>"#,
        fmt(x0 + plot_w - 80.0),
        fmt(y_uniform - 5.0),
        uniform
    ));
    svg.push('\n');

    // Axes and legend.
    svg.push_str(&format!(
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
        fmt(x0),
        fmt(MARGIN_TOP),
        fmt(x0),
        fmt(y0)
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
        fmt(x0),
        fmt(y0),
        fmt(x0 + plot_w),
        fmt(y0)
    ));
    svg.push('\n');
    let legend_x = x0 + 10.0;
    svg.push_str(&format!(
        r#"<rect x="{}" y="{}" width="12" height="12" fill="{OBSERVED_FILL}"/>"#,
        fmt(legend_x),
        fmt(MARGIN_TOP + 4.0)
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11">observed</text>"#,
        fmt(legend_x + 16.0),
        fmt(MARGIN_TOP + 14.0)
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<rect x="{}" y="{}" width="12" height="12" fill="{MODEL_FILL}"/>"#,
        fmt(legend_x + 86.0),
        fmt(MARGIN_TOP + 4.0)
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11">model</text>"#,
        fmt(legend_x + 102.0),
        fmt(MARGIN_TOP + 14.0)
    ));
    svg.push('\n');
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
