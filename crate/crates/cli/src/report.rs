//! Human-readable report and curve export.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use sdtest_core::{Approach, Method, TestResult};

use crate::error::{CliError, Result};

const RULE: &str = "#-------------------------------------------#";
const WIDTH: usize = 26;

/// "first", "second", "third", then "4th", "5th", ...
pub fn order_name(s: u32) -> String {
    match s {
        1 => "first".into(),
        2 => "second".into(),
        3 => "third".into(),
        n => format!("{n}th"),
    }
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "* {key:<WIDTH$}= {value}");
}

/// Renders the block report. `dropped` is the number of missing cells skipped
/// on ingestion and is only shown when positive.
pub fn render(result: &TestResult, dropped: usize) -> String {
    let cfg = &result.config;
    let mut out = String::new();
    out.push_str("#--- Testing for Stochastic Dominance  -----#\n\n");
    if result.approach == Approach::Maximality {
        let _ = writeln!(
            out,
            "* H0 : some of {} is {} order SD by another",
            result.labels.join(", "),
            order_name(cfg.s)
        );
        out.push_str("* Stochastic Maximality\n");
    } else {
        let _ = writeln!(
            out,
            "* H0 : {} {} order SD {}",
            result.labels[0],
            order_name(cfg.s),
            result.labels[1]
        );
        match result.approach {
            Approach::Contact => out.push_str("* Contact Set Approach\n"),
            Approach::SelectiveRecentering => out.push_str("* Selective Recentering Approach\n"),
            Approach::NumericalDelta => {
                out.push_str("* Numerical Delta Method\n");
                let _ = writeln!(out, "* {} Type Test Statistic", cfg.functional.as_str().to_uppercase());
            }
            _ => {}
        }
    }
    let _ = write!(out, "\n{RULE}\n\n*** Test Setting ***\n");
    line(&mut out, "Resampling method", cfg.plan.method);
    line(&mut out, "SD order", format_args!("{:>6}", cfg.s));
    for (label, n) in result.labels.iter().zip(&result.sizes) {
        line(&mut out, &format!("# of ({label})"), format_args!("{n:>6}"));
    }
    if cfg.plan.method == Method::Subsampling {
        line(&mut out, "# of subsample (b1)", format_args!("{:>6}", cfg.plan.b1.unwrap_or(0)));
        line(&mut out, "# of subsample (b2)", format_args!("{:>6}", cfg.plan.b2.unwrap_or(0)));
        line(&mut out, "# of block pairs", format_args!("{:>6}", result.resampled.len()));
    } else {
        line(&mut out, "# of bootstrapping", format_args!("{:>6}", cfg.plan.nboot));
    }
    line(&mut out, "# of grid points", format_args!("{:>6}", result.grid.len()));
    line(&mut out, "Seed", cfg.plan.seed);
    if dropped > 0 {
        line(&mut out, "Missing cells dropped", format_args!("{dropped:>6}"));
    }

    let mut tuning = String::new();
    match result.approach {
        Approach::Contact => {
            line(&mut tuning, "c", format_args!("{:.4}", cfg.c));
            if let Some(cs) = &result.tuning.contact {
                line(&mut tuning, "c_N", format_args!("{:.4}", cs.threshold));
                line(
                    &mut tuning,
                    "Contact set size",
                    format_args!("{} of {}", cs.count(), cs.members.len()),
                );
            }
        }
        Approach::SelectiveRecentering => {
            line(&mut tuning, "a", format_args!("{:.4}", cfg.a));
            line(&mut tuning, "eta", cfg.eta);
        }
        Approach::NumericalDelta => {
            if let Some(eps) = result.tuning.epsilon {
                line(&mut tuning, "epsilon", format_args!("{eps:.4}"));
            }
        }
        _ => {}
    }
    if !tuning.is_empty() {
        out.push_str("\n# Tuning parameter -------\n");
        out.push_str(&tuning);
    }

    let _ = write!(out, "\n{RULE}\n\n*** Test Result ***\n");
    line(&mut out, "Test statistic", format_args!("{:.4}", result.statistic));
    line(&mut out, "Significance level", format_args!("{:>5.2}", cfg.alpha));
    line(&mut out, "Critical-value", format_args!("{:.4}", result.critical_value));
    line(&mut out, "P-value", format_args!("{:.4}", result.p_value));
    line(&mut out, "Reject H0", if result.reject() { "yes" } else { "no" });
    line(&mut out, "Time elapsed", format_args!("{:>5.2} Sec", result.elapsed));
    out
}

/// Curve table as CSV text: `grid,F1,F2,D`, or `grid,F1,...,FK,D` for the
/// K-sample test where `D` is the pointwise minimum over ordered pairs.
pub fn curves_csv(result: &TestResult) -> String {
    let k = result.curves.integrated.len();
    let mut out = String::from("grid");
    for j in 1..=k {
        let _ = write!(out, ",F{j}");
    }
    out.push_str(",D\n");
    for (i, x) in result.grid.points().iter().enumerate() {
        let _ = write!(out, "{x:?}");
        for c in &result.curves.integrated {
            let _ = write!(out, ",{:?}", c.values[i]);
        }
        let _ = writeln!(out, ",{:?}", result.curves.difference.values[i]);
    }
    out
}

pub fn export_curves(result: &TestResult, path: &Path) -> Result<()> {
    write_file(path, &curves_csv(result))
}

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<()> {
    let io = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    let mut w = BufWriter::new(File::create(path).map_err(io)?);
    w.write_all(contents.as_bytes()).map_err(io)?;
    w.flush().map_err(io)
}
