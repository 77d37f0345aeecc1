//! CSV-driven front end for `sdtest-core`.
//!
//! [`run`] turns parsed flags into a [`ReportBundle`]: the printed report,
//! the machine record and, when requested, the curve table. [`execute`] also
//! writes the requested files.

mod args;
mod error;
mod ingest;
mod record;
mod report;

pub use args::Args;
pub use error::{CliError, Result};
pub use ingest::{ingest, Ingested, InputSpec};
pub use record::{from_record, to_record};
pub use report::{curves_csv, export_curves, order_name, render};

use sdtest_core::{procedures, Approach, TestResult};

#[derive(Debug, Clone)]
pub struct ReportBundle {
    pub result: TestResult,
    pub report: String,
    pub record: String,
    pub curves: Option<String>,
}

/// Ingests the input and runs the configured test without touching the
/// filesystem beyond reading the input.
pub fn run(args: &Args) -> Result<ReportBundle> {
    let config = args.config()?;
    let data = ingest(&args.input_spec()?)?;
    let result = match config.approach {
        Approach::Maximality => procedures::test_maximality(&data.samples, &config)?,
        _ => procedures::run(&data.samples[0], &data.samples[1], &config)?,
    };
    Ok(ReportBundle {
        report: render(&result, data.dropped),
        record: to_record(&result),
        curves: args.curves_out.as_ref().map(|_| curves_csv(&result)),
        result,
    })
}

/// [`run`], then writes `--machine-out` and `--curves-out` and prints the
/// report unless `--quiet`.
pub fn execute(args: &Args) -> Result<ReportBundle> {
    let bundle = run(args)?;
    if let Some(path) = &args.machine_out {
        report::write_file(path, &bundle.record)?;
    }
    if let (Some(path), Some(curves)) = (&args.curves_out, &bundle.curves) {
        report::write_file(path, curves)?;
    }
    if !args.quiet {
        print!("{}", bundle.report);
    }
    Ok(bundle)
}
