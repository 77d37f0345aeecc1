//! Contact-set approach with the one-sided L2 (Cramér-von Mises) statistic.

use crate::distfn::{weight_q, Grid, Sample};
use crate::error::{bad_arg, Result};
use crate::resampling::{par_replicates, TwoSampleResampler};
use crate::statistics::{l2_statistic, p_value, ScaleFactor};

use super::{critical_value, Approach, Prepared, TestConfig, TestResult, Tuning};

/// Grid points where the weighted difference is within `threshold` of zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ContactSet {
    pub members: Vec<bool>,
    pub threshold: f64,
}

impl ContactSet {
    /// Whether the estimated set has positive measure on the grid.
    pub fn lebesgue_positive(&self) -> bool {
        self.members.iter().any(|&m| m)
    }

    pub fn count(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }
}

/// `c_N = c log(log N) / sqrt(N)` with `N = (n1 + n2) / 2`.
pub fn contact_threshold(c: f64, n1: usize, n2: usize) -> f64 {
    let n = (n1 + n2) as f64 / 2.0;
    c * n.ln().ln() / n.sqrt()
}

/// `{x : q(x) |D(x)| < c_N}`.
pub fn contact_set(d: &[f64], q: &[f64], threshold: f64) -> ContactSet {
    ContactSet {
        members: d.iter().zip(q).map(|(d, q)| q * d.abs() < threshold).collect(),
        threshold,
    }
}

/// One resampled L2 value: `lambda^2 sum max(q nu, 0)^2 dx` over the contact
/// set, or over the whole grid when the contact set is empty.
pub fn contact_replicate(
    nu: &[f64],
    q: &[f64],
    contact: &ContactSet,
    grid: &Grid,
    scale: ScaleFactor,
) -> f64 {
    let everywhere = !contact.lebesgue_positive();
    let area: f64 = nu
        .iter()
        .zip(q)
        .zip(&contact.members)
        .filter(|(_, &m)| everywhere || m)
        .map(|((v, w), _)| {
            let p = (w * v).max(0.0);
            p * p
        })
        .sum();
    scale.lambda * scale.lambda * area * grid.spacing()
}

pub fn test_sd_contact(sample1: &Sample, sample2: &Sample, config: &TestConfig) -> Result<TestResult> {
    if !config.plan.method.is_bootstrap_family() {
        return bad_arg("the contact-set approach needs a bootstrap-family resampling plan");
    }
    let prep = Prepared::new(sample1, sample2, config)?;
    let q = weight_q(&prep.grid, config.s, &config.weight)?.values;
    let statistic = l2_statistic(&prep.d, &prep.grid, &q, prep.scale);

    let c_n = contact_threshold(config.c, sample1.len(), sample2.len());
    let contact = contact_set(&prep.d, &q, c_n);

    let resampler = TwoSampleResampler::new(sample1, sample2, &prep.grid, config.s, config.plan)?;
    let replicates = par_replicates(config.plan.nboot, |k| {
        contact_replicate(&resampler.difference(k), &q, &contact, &prep.grid, prep.scale)
    });

    let crit = critical_value(&replicates, config.alpha)?;
    let p = p_value(&replicates, statistic);
    let tuning = Tuning {
        contact: Some(contact),
        ..Tuning::default()
    };
    Ok(prep.finish(
        Approach::Contact,
        sample1,
        sample2,
        config,
        statistic,
        crit,
        p,
        replicates,
        tuning,
    ))
}
