//! Inference procedures for pairwise and K-sample stochastic dominance.
//!
//! All two-sample procedures test `H0: sample1 s-th order SD sample2`, i.e.
//! `F1^(s)(x) <= F2^(s)(x)` for all `x`, and reject for large values of a
//! functional of `D = F1^(s) - F2^(s)`.

mod config;
mod contact;
mod lfc;
mod maximality;
mod ndm;
mod sr;

use std::time::Instant;

pub use config::{Approach, Functional, TestConfig};
pub use contact::{contact_replicate, contact_set, contact_threshold, test_sd_contact, ContactSet};
pub use lfc::{scan_subsample_size, test_sd, ScanRow, SubsampleScan};
pub use maximality::test_maximality;
pub use ndm::{default_epsilon, ndm_functional, test_sd_ndm};
pub use sr::{recentering_curve, sr_threshold, test_sd_sr, RecenteringCurve};

use crate::distfn::{self, Curve, Grid, Sample};
use crate::error::Result;
use crate::statistics::{quantile, ResampledDistribution, ScaleFactor};

/// Integrated ECDFs behind a test and the difference curve it was built on.
///
/// For two samples `difference` is `F1 - F2`; for the K-sample test it is the
/// pointwise minimum over ordered pairs of `F_k - F_l`.
#[derive(Debug, Clone, PartialEq)]
pub struct Curves {
    pub integrated: Vec<Curve>,
    pub difference: Curve,
}

/// Tuning values a procedure actually used.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Tuning {
    pub contact: Option<ContactSet>,
    pub recentering: Option<RecenteringCurve>,
    pub epsilon: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestResult {
    pub approach: Approach,
    pub statistic: f64,
    pub critical_value: f64,
    pub p_value: f64,
    pub resampled: ResampledDistribution,
    pub grid: Grid,
    pub curves: Curves,
    pub labels: Vec<String>,
    pub sizes: Vec<usize>,
    pub lambda: f64,
    pub config: TestConfig,
    pub tuning: Tuning,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

impl TestResult {
    pub fn reject(&self) -> bool {
        self.statistic > self.critical_value
    }
}

/// Dispatches a two-sample test on `config.approach`.
pub fn run(sample1: &Sample, sample2: &Sample, config: &TestConfig) -> Result<TestResult> {
    match config.approach {
        Approach::Lfc => test_sd(sample1, sample2, config),
        Approach::Contact => test_sd_contact(sample1, sample2, config),
        Approach::SelectiveRecentering => test_sd_sr(sample1, sample2, config),
        Approach::NumericalDelta => test_sd_ndm(sample1, sample2, config),
        Approach::Maximality => test_maximality(&[sample1.clone(), sample2.clone()], config),
    }
}

/// State shared by the two-sample procedures.
struct Prepared {
    started: Instant,
    grid: Grid,
    f1: Curve,
    f2: Curve,
    d: Vec<f64>,
    scale: ScaleFactor,
}

impl Prepared {
    fn new(sample1: &Sample, sample2: &Sample, config: &TestConfig) -> Result<Self> {
        let started = Instant::now();
        config.validate()?;
        config.plan.validate(sample1.len(), sample2.len())?;
        let grid = distfn::set_grid(&[sample1.clone(), sample2.clone()], config.ngrid)?;
        let f1 = distfn::integrated_ecdf(sample1, &grid, config.s)?;
        let f2 = distfn::integrated_ecdf(sample2, &grid, config.s)?;
        let d = distfn::difference(&f1, &f2).values;
        let scale = ScaleFactor::two_sample(sample1.len(), sample2.len())?;
        Ok(Self {
            started,
            grid,
            f1,
            f2,
            d,
            scale,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn finish(
        self,
        approach: Approach,
        sample1: &Sample,
        sample2: &Sample,
        config: &TestConfig,
        statistic: f64,
        critical_value: f64,
        p_value: f64,
        replicates: Vec<f64>,
        tuning: Tuning,
    ) -> TestResult {
        let order = config.s;
        TestResult {
            approach,
            statistic,
            critical_value,
            p_value,
            resampled: ResampledDistribution {
                values: replicates,
                method: config.plan.method,
            },
            grid: self.grid,
            curves: Curves {
                integrated: vec![self.f1, self.f2],
                difference: Curve {
                    values: self.d,
                    order,
                },
            },
            labels: vec![sample1.label().to_owned(), sample2.label().to_owned()],
            sizes: vec![sample1.len(), sample2.len()],
            lambda: self.scale.lambda,
            config: config.clone(),
            tuning,
            elapsed: self.started.elapsed().as_secs_f64(),
        }
    }
}

/// `(1 - alpha)` quantile of the replicates.
fn critical_value(replicates: &[f64], alpha: f64) -> Result<f64> {
    quantile(replicates, 1.0 - alpha)
}
