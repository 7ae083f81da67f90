//! Thin command-line front end over the `benford` library.
//!
//! Exit codes follow the conformity convention: 0 when the data conforms
//! (or the command simply succeeded), 2 when the verdict is `rejects`, a
//! validation fails or a reproduction mismatches, and 1 on any error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use benford::io::{self, InputDocument};
use benford::{
    dataset, render_chart, tables, AnalysisReport, DigitLawModel, Error, NestingMode, OutputFormat,
    SynthLaw, Verdict,
};

#[derive(Parser)]
#[command(
    name = "benford",
    version,
    about = "First-significant-digit conformity analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test one dataset against a digit law and print the analysis.
    Analyze {
        /// Snapshot JSON, distribution fixture JSON, or plain list file.
        input: PathBuf,
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        test: TestArgs,
        /// Write the rendered report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze every snapshot of a series file.
    Series {
        /// Series JSON file.
        input: PathBuf,
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        test: TestArgs,
        /// Treat frozen-series nesting violations as errors (false downgrades
        /// them to warnings).
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        strict_nesting: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a seeded synthetic sample as a plain list.
    Synth {
        #[command(flatten)]
        model: ModelArgs,
        /// Number of values to draw.
        #[arg(long, default_value_t = 1000)]
        n: usize,
        /// Orders of magnitude the sample spans.
        #[arg(long, default_value_t = 3)]
        span: u32,
        /// PRNG seed; identical seeds reproduce identical samples.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render an SVG bar chart of observed vs. model proportions.
    Chart {
        input: PathBuf,
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        test: TestArgs,
        /// Output SVG path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Recompute a published table (2, 3, 4, 5, 6 or 7) and diff it.
    Reproduce {
        /// Table id: 2 or 5 (digit tables), 3, 4, 6 or 7 (verdict tables).
        table: String,
    },
    /// Validate a snapshot or series file without analyzing it.
    Validate {
        input: PathBuf,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        strict_nesting: bool,
    },
}

#[derive(Args)]
struct ModelArgs {
    /// Digit law to test against (or to sample from, for `synth`).
    #[arg(long, value_enum, default_value_t = ModelArg::Benford)]
    model: ModelArg,
    /// Exponent for the generalized law; required with --model generalized.
    #[arg(long)]
    beta: Option<f64>,
    /// Positional base of the digits.
    #[arg(long, default_value_t = 10)]
    base: u32,
}

#[derive(Args)]
struct TestArgs {
    /// Significance level of the chi-square test.
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Benford,
    Uniform,
    Generalized,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(arg: FormatArg) -> Self {
        match arg {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

impl ModelArgs {
    fn to_model(&self) -> Result<DigitLawModel, Error> {
        match (self.model, self.beta) {
            (ModelArg::Benford, None) => DigitLawModel::classical(self.base),
            (ModelArg::Uniform, None) => DigitLawModel::uniform(self.base),
            (ModelArg::Generalized, Some(beta)) => DigitLawModel::generalized(self.base, beta),
            (ModelArg::Generalized, None) => Err(Error::Parse {
                origin: "--model generalized".into(),
                message: "requires --beta".into(),
            }),
            (_, Some(_)) => Err(Error::Parse {
                origin: "--beta".into(),
                message: "only applies to --model generalized".into(),
            }),
        }
    }

    fn to_synth_law(&self) -> Result<SynthLaw, Error> {
        match (self.model, self.beta) {
            (ModelArg::Benford, None) => Ok(SynthLaw::BenfordExact),
            (ModelArg::Uniform, None) => Ok(SynthLaw::UniformDigit),
            (ModelArg::Generalized, Some(beta)) => Ok(SynthLaw::Zipf { beta }),
            (ModelArg::Generalized, None) => Err(Error::Parse {
                origin: "--model generalized".into(),
                message: "requires --beta".into(),
            }),
            (_, Some(_)) => Err(Error::Parse {
                origin: "--beta".into(),
                message: "only applies to --model generalized".into(),
            }),
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict_code(verdict: Verdict) -> ExitCode {
    match verdict {
        Verdict::Conforms => ExitCode::SUCCESS,
        Verdict::Rejects => ExitCode::from(2),
    }
}

fn load_report(input: &Path, model: &DigitLawModel, alpha: f64) -> Result<AnalysisReport, Error> {
    let source = input.display().to_string();
    match io::read_input(input)? {
        InputDocument::PlainList(list) => {
            let observed = benford::tally_ints(list.records.iter().copied(), model.base())?;
            let span = dataset::span(&list.records).ok();
            let mut report = benford::analyze(source, observed, model, alpha, span)?;
            if list.uncited > 0 {
                report.notes.push(format!(
                    "filtered {} uncited (zero) record(s)",
                    list.uncited
                ));
            }
            Ok(report)
        }
        InputDocument::Snapshot(snapshot) => {
            benford::validate_snapshot(&snapshot).map_err(Error::SnapshotInvalid)?;
            let observed = benford::snapshot_to_distribution(&snapshot, model.base())?;
            let span = dataset::span(&snapshot.records).ok();
            let source = format!("{} [{} / {}]", source, snapshot.seed, snapshot.label);
            benford::analyze(source, observed, model, alpha, span)
        }
        InputDocument::Distribution(fixture) => {
            let source = format!("{} [{}]", source, fixture.provenance);
            benford::analyze(source, fixture.distribution, model, alpha, None)
        }
        InputDocument::Series(_) => Err(Error::Parse {
            origin: source,
            message: "input is a series file; use the `series` subcommand".into(),
        }),
    }
}

fn run() -> Result<ExitCode, Error> {
    match Cli::parse().command {
        Command::Analyze {
            input,
            model,
            test,
            out,
        } => {
            let model = model.to_model()?;
            let report = load_report(&input, &model, test.alpha)?;
            emit(
                &benford::render_analysis(&report, test.format.into()),
                out.as_ref(),
            )?;
            Ok(verdict_code(report.gof.verdict))
        }
        Command::Series {
            input,
            model,
            test,
            strict_nesting,
            out,
        } => {
            let model = model.to_model()?;
            let nesting = if strict_nesting {
                NestingMode::Strict
            } else {
                NestingMode::Warn
            };
            let series = io::read_series(&input)?;
            let report = benford::analyze_series(&series, &model, test.alpha, nesting)?;
            emit(
                &benford::render_series(&report, test.format.into()),
                out.as_ref(),
            )?;
            Ok(if report.all_conform() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Synth {
            model,
            n,
            span,
            seed,
            out,
        } => {
            let spec = benford::GeneratorSpec {
                law: model.to_synth_law()?,
                n,
                base: model.base,
                span_decades: span,
                seed,
            };
            let values = benford::generate(&spec)?;
            // Truncation to integers preserves every first digit because the
            // values live in [1, base^span).
            let records: Vec<u64> = values.iter().map(|&v| v as u64).collect();
            match out {
                Some(path) => io::write_plain_list(&path, &records)?,
                None => {
                    let mut text = String::new();
                    for r in &records {
                        text.push_str(&r.to_string());
                        text.push('\n');
                    }
                    print!("{text}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chart {
            input,
            model,
            test,
            out,
        } => {
            let model = model.to_model()?;
            let report = load_report(&input, &model, test.alpha)?;
            let svg = render_chart(&report)?;
            emit(&svg, Some(&out))?;
            eprintln!("chart written to {}", out.display());
            Ok(verdict_code(report.gof.verdict))
        }
        Command::Reproduce { table } => {
            let id: tables::TableId = table.parse()?;
            let reproduction = benford::reproduce(id)?;
            print!("{}", benford::render_reproduction(&reproduction));
            Ok(if reproduction.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Validate {
            input,
            strict_nesting,
        } => {
            let nesting = if strict_nesting {
                NestingMode::Strict
            } else {
                NestingMode::Warn
            };
            match io::read_input(&input)? {
                InputDocument::Snapshot(snapshot) => match benford::validate_snapshot(&snapshot) {
                    Ok(()) => {
                        println!(
                            "snapshot '{}': ok ({} records, {} uncited, total {})",
                            snapshot.label,
                            snapshot.records.len(),
                            snapshot.uncited,
                            snapshot.total_citations
                        );
                        Ok(ExitCode::SUCCESS)
                    }
                    Err(issues) => {
                        for issue in &issues {
                            println!("invalid: {issue}");
                        }
                        Ok(ExitCode::from(2))
                    }
                },
                InputDocument::Series(series) => {
                    let validation = benford::validate_series(&series, nesting);
                    for warning in &validation.warnings {
                        println!("warning: {warning}");
                    }
                    if validation.is_ok() {
                        println!("series: ok ({} snapshots)", series.snapshots.len());
                        Ok(ExitCode::SUCCESS)
                    } else {
                        for issue in &validation.errors {
                            println!("invalid: {issue}");
                        }
                        Ok(ExitCode::from(2))
                    }
                }
                InputDocument::PlainList(list) => {
                    println!(
                        "plain list: ok ({} records, {} uncited filtered)",
                        list.records.len(),
                        list.uncited
                    );
                    Ok(ExitCode::SUCCESS)
                }
                InputDocument::Distribution(fixture) => {
                    println!(
                        "distribution fixture: ok (N = {}, {})",
                        fixture.distribution.n(),
                        fixture.provenance
                    );
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::FAILURE
        }
    }
}
