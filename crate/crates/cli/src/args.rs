//! Command-line flags and their translation into a test configuration.

use std::path::PathBuf;

use clap::Parser;
use sdtest_core::{Approach, Functional, Method, ResamplingPlan, TestConfig, WeightSpec, DEFAULT_SEED};

use crate::error::{CliError, Result};
use crate::ingest::InputSpec;

/// Test whether sample 1 stochastically dominates sample 2 at order s.
#[derive(Debug, Clone, Parser)]
#[command(name = "sdtest", version, about)]
pub struct Args {
    /// CSV file with the samples (header row required).
    #[arg(long)]
    pub input: PathBuf,

    /// Second CSV file; its first column (or the second --columns entry) is sample 2.
    #[arg(long)]
    pub input2: Option<PathBuf>,

    /// Group column splitting a long-format file into samples.
    #[arg(long)]
    pub by: Option<String>,

    /// Value columns to read, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub columns: Vec<String>,

    /// Swap sample 1 and sample 2.
    #[arg(long)]
    pub switch: bool,

    /// Treat cells as prices and test their log returns.
    #[arg(long)]
    pub prices: bool,

    /// Stochastic dominance order.
    #[arg(long, default_value_t = 1)]
    pub s: u32,

    /// Number of grid points.
    #[arg(long, default_value_t = 100)]
    pub ngrid: usize,

    #[arg(long, default_value = "bootstrap",
          value_parser = ["bootstrap", "pooled", "paired", "subsampling", "multiplier"])]
    pub resampling: String,

    #[arg(long, default_value = "lfc",
          value_parser = ["lfc", "contact", "sr", "ndm", "maximality"])]
    pub approach: String,

    /// Functional for the numerical delta method [default: l1].
    #[arg(long, value_parser = ["ks", "l1", "l2", "KS", "L1", "L2"])]
    pub functional: Option<String>,

    /// Subsample size for sample 1.
    #[arg(long)]
    pub b1: Option<usize>,

    /// Subsample size for sample 2.
    #[arg(long)]
    pub b2: Option<usize>,

    /// Number of bootstrap replicates.
    #[arg(long, default_value_t = 200)]
    pub nboot: usize,

    /// Contact-set constant [default: 0.75].
    #[arg(long)]
    pub c: Option<f64>,

    /// Selective-recentering constant [default: 0.1].
    #[arg(long)]
    pub a: Option<f64>,

    /// Floor on the selective-recentering critical value [default: 1e-6].
    #[arg(long)]
    pub eta: Option<f64>,

    /// Numerical delta method step size [default: lambda^(-1/16)].
    #[arg(long)]
    pub epsilon: Option<f64>,

    /// Use the three-point second difference for the L2 delta method.
    #[arg(long)]
    pub three_point: bool,

    /// Contact-set weight parameters z1,z2,a,delta.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub q_weight: Option<Vec<f64>>,

    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Write grid and integrated CDF curves to this CSV file.
    #[arg(long)]
    pub curves_out: Option<PathBuf>,

    /// Write the machine-readable record to this file.
    #[arg(long)]
    pub machine_out: Option<PathBuf>,

    /// Do not print the report.
    #[arg(long)]
    pub quiet: bool,
}

fn conflict(flag: &str, needs: &str) -> CliError {
    CliError::Config(format!("--{flag} is only valid with {needs}"))
}

impl Args {
    pub fn input_spec(&self) -> Result<InputSpec> {
        if self.by.is_some() && self.input2.is_some() {
            return Err(CliError::Config("--by and --input2 cannot be combined".into()));
        }
        Ok(InputSpec {
            input: self.input.clone(),
            input2: self.input2.clone(),
            by: self.by.clone(),
            switch: self.switch,
            prices: self.prices,
            columns: self.columns.clone(),
            all_columns: self.approach()? == Approach::Maximality,
        })
    }

    pub fn approach(&self) -> Result<Approach> {
        self.approach.parse().map_err(|e: sdtest_core::SdError| CliError::Config(e.to_string()))
    }

    /// Builds the configuration, rejecting flags that do not apply to the
    /// chosen approach or resampling method.
    pub fn config(&self) -> Result<TestConfig> {
        let approach = self.approach()?;
        let method: Method = self
            .resampling
            .parse()
            .map_err(|e: sdtest_core::SdError| CliError::Config(e.to_string()))?;
        let subsampling = method == Method::Subsampling;

        if subsampling {
            if self.b1.is_none() {
                return Err(CliError::Config("--resampling subsampling requires --b1".into()));
            }
            if self.b2.is_none() {
                return Err(CliError::Config("--resampling subsampling requires --b2".into()));
            }
            if approach != Approach::Lfc {
                return Err(conflict("resampling subsampling", "--approach lfc"));
            }
        } else {
            if self.b1.is_some() {
                return Err(conflict("b1", "--resampling subsampling"));
            }
            if self.b2.is_some() {
                return Err(conflict("b2", "--resampling subsampling"));
            }
        }
        if approach == Approach::Maximality
            && !matches!(method, Method::RecenteredBootstrap | Method::PairedBootstrap)
        {
            return Err(CliError::Config(format!(
                "--approach maximality supports --resampling bootstrap or paired, not {method}"
            )));
        }
        if approach != Approach::NumericalDelta {
            if self.functional.is_some() {
                return Err(conflict("functional", "--approach ndm"));
            }
            if self.epsilon.is_some() {
                return Err(conflict("epsilon", "--approach ndm"));
            }
            if self.three_point {
                return Err(conflict("three-point", "--approach ndm"));
            }
        }
        if approach != Approach::Contact {
            if self.c.is_some() {
                return Err(conflict("c", "--approach contact"));
            }
            if self.q_weight.is_some() {
                return Err(conflict("q-weight", "--approach contact"));
            }
        }
        if approach != Approach::SelectiveRecentering {
            if self.a.is_some() {
                return Err(conflict("a", "--approach sr"));
            }
            if self.eta.is_some() {
                return Err(conflict("eta", "--approach sr"));
            }
        }

        let defaults = TestConfig::default();
        let functional = match &self.functional {
            Some(f) => f
                .parse::<Functional>()
                .map_err(|e| CliError::Config(e.to_string()))?,
            None => defaults.functional,
        };
        if self.three_point && functional != Functional::L2 {
            return Err(conflict("three-point", "--functional l2"));
        }
        let weight = match &self.q_weight {
            Some(w) if w.len() != 4 => {
                return Err(CliError::Config(format!(
                    "--q-weight takes 4 values z1,z2,a,delta, got {}",
                    w.len()
                )))
            }
            Some(w) => WeightSpec {
                z1: w[0],
                z2: w[1],
                a: w[2],
                delta: w[3],
                enabled: true,
            },
            None => WeightSpec::default(),
        };
        let plan = ResamplingPlan {
            method,
            nboot: self.nboot,
            b1: self.b1,
            b2: self.b2,
            seed: self.seed,
        };
        let config = TestConfig {
            s: self.s,
            ngrid: self.ngrid,
            alpha: self.alpha,
            plan,
            approach,
            functional,
            c: self.c.unwrap_or(defaults.c),
            a: self.a.unwrap_or(defaults.a),
            eta: self.eta.unwrap_or(defaults.eta),
            epsilon: self.epsilon,
            weight,
            ndm_three_point: self.three_point,
        };
        config.validate().map_err(|e| CliError::Config(e.to_string()))?;
        if plan.nboot == 0 && !subsampling {
            return Err(CliError::Config("--nboot must be positive".into()));
        }
        Ok(config)
    }
}
