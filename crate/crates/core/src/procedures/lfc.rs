//! Least-favorable-case test with bootstrap, multiplier or subsampling
//! critical values.

use crate::distfn::{self, Sample};
use crate::error::{bad_arg, Result};
use crate::resampling::{par_replicates, subsample_blocks, Method, TwoSampleResampler};
use crate::statistics::{ks_statistic, p_value, quantile, ScaleFactor};

use super::{critical_value, Approach, Prepared, TestConfig, TestResult, Tuning};

/// KS-type test of `H0: sample1 s-th order SD sample2`.
///
/// Bootstrap-family plans use the supremum of the resampled difference
/// process; subsampling recomputes the statistic on paired contiguous blocks
/// with the block-size normalization `sqrt(b1 b2 / (b1 + b2))`.
pub fn test_sd(sample1: &Sample, sample2: &Sample, config: &TestConfig) -> Result<TestResult> {
    let prep = Prepared::new(sample1, sample2, config)?;
    let statistic = ks_statistic(&prep.d, prep.scale);

    let replicates = if config.plan.method == Method::Subsampling {
        subsample_statistics(sample1, sample2, &prep, config)?
    } else {
        let resampler = TwoSampleResampler::new(sample1, sample2, &prep.grid, config.s, config.plan)?;
        let scale = prep.scale;
        par_replicates(config.plan.nboot, |k| ks_statistic(&resampler.difference(k), scale))
    };

    let crit = critical_value(&replicates, config.alpha)?;
    let p = p_value(&replicates, statistic);
    Ok(prep.finish(
        Approach::Lfc,
        sample1,
        sample2,
        config,
        statistic,
        crit,
        p,
        replicates,
        Tuning::default(),
    ))
}

fn subsample_statistics(
    sample1: &Sample,
    sample2: &Sample,
    prep: &Prepared,
    config: &TestConfig,
) -> Result<Vec<f64>> {
    let (b1, b2) = config.plan.block_sizes()?;
    let blocks1 = subsample_blocks(sample1.len(), b1)?;
    let blocks2 = subsample_blocks(sample2.len(), b2)?;
    let count = blocks1.len().min(blocks2.len());
    let scale = ScaleFactor::two_sample(b1, b2)?;
    let (x1, x2) = (sample1.values(), sample2.values());
    let stats = par_replicates(count, |i| {
        let s1 = Sample::new("", x1[blocks1[i].clone()].to_vec()).expect("block of a valid sample");
        let s2 = Sample::new("", x2[blocks2[i].clone()].to_vec()).expect("block of a valid sample");
        let d = distfn::ecdf_difference(&s1, &s2, &prep.grid, config.s).expect("validated order");
        ks_statistic(&d.values, scale)
    });
    Ok(stats)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub b: usize,
    pub critical_value: f64,
    pub p_value: f64,
}

/// Subsampling results over a set of candidate block sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsampleScan {
    pub statistic: f64,
    pub rows: Vec<ScanRow>,
    /// Row whose critical value varies least over its 3-candidate window.
    pub min_volatility: usize,
    pub mean_critical_value: f64,
    pub median_critical_value: f64,
}

impl SubsampleScan {
    pub fn min_volatility_row(&self) -> &ScanRow {
        &self.rows[self.min_volatility]
    }
}

/// Runs the subsampling test once per candidate `b` (used for both samples).
pub fn scan_subsample_size(
    sample1: &Sample,
    sample2: &Sample,
    config: &TestConfig,
    candidates: &[usize],
) -> Result<SubsampleScan> {
    if candidates.is_empty() {
        return bad_arg("no subsample size candidates");
    }
    let mut rows = Vec::with_capacity(candidates.len());
    let mut statistic = 0.0;
    for &b in candidates {
        let mut cfg = config.clone();
        cfg.plan.method = Method::Subsampling;
        cfg.plan.b1 = Some(b);
        cfg.plan.b2 = Some(b);
        let result = test_sd(sample1, sample2, &cfg)?;
        statistic = result.statistic;
        rows.push(ScanRow {
            b,
            critical_value: result.critical_value,
            p_value: result.p_value,
        });
    }
    let crits: Vec<f64> = rows.iter().map(|r| r.critical_value).collect();
    Ok(SubsampleScan {
        statistic,
        min_volatility: min_volatility_index(&crits),
        mean_critical_value: crits.iter().sum::<f64>() / crits.len() as f64,
        median_critical_value: quantile(&crits, 0.5)?,
        rows,
    })
}

/// Index of the interior candidate whose centered window of three critical
/// values has the smallest standard deviation; the first candidate when
/// there are fewer than three.
pub(crate) fn min_volatility_index(crits: &[f64]) -> usize {
    if crits.len() < 3 {
        return 0;
    }
    let mut best = (1, f64::INFINITY);
    for i in 1..crits.len() - 1 {
        let w = &crits[i - 1..=i + 1];
        let mean = w.iter().sum::<f64>() / 3.0;
        let sd = (w.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / 3.0).sqrt();
        if sd < best.1 {
            best = (i, sd);
        }
    }
    best.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resampling::ResamplingPlan;

    #[test]
    fn min_volatility_examples() {
        assert_eq!(min_volatility_index(&[3.0]), 0);
        assert_eq!(min_volatility_index(&[1.0, 1.0, 1.0, 5.0, 5.0]), 1);
        assert_eq!(min_volatility_index(&[5.0, 1.0, 3.0, 3.1, 3.0, 9.0]), 3);
    }

    #[test]
    fn point_masses() {
        let a = Sample::new("a", vec![0.0; 50]).unwrap();
        let b = Sample::new("b", vec![1.0; 50]).unwrap();
        let config = TestConfig {
            plan: ResamplingPlan::bootstrap(99, 5),
            ..Default::default()
        };
        let r = test_sd(&a, &b, &config).unwrap();
        assert!((r.statistic - 5.0).abs() < 1e-12);
        assert_eq!(r.p_value, 0.0);
        assert!(r.reject());
    }

    #[test]
    fn subsampling_counts_and_missing_sizes() {
        let a = Sample::new("a", (0..30).map(|i| (i as f64 * 0.37).sin()).collect()).unwrap();
        let b = Sample::new("b", (0..30).map(|i| (i as f64 * 0.71).cos()).collect()).unwrap();
        let config = TestConfig {
            plan: ResamplingPlan::subsampling(10, 10),
            ..Default::default()
        };
        let r = test_sd(&a, &b, &config).unwrap();
        assert_eq!(r.resampled.len(), 21);
        let missing = TestConfig {
            plan: ResamplingPlan {
                method: Method::Subsampling,
                ..Default::default()
            },
            ..Default::default()
        };
        assert_eq!(
            test_sd(&a, &b, &missing).unwrap_err(),
            crate::SdError::MissingSubsampleSize
        );
    }

    #[test]
    fn scan_single_candidate() {
        let a = Sample::new("a", (0..40).map(|i| (i as f64 * 0.37).sin()).collect()).unwrap();
        let b = Sample::new("b", (0..40).map(|i| (i as f64 * 0.71).cos()).collect()).unwrap();
        let scan = scan_subsample_size(&a, &b, &TestConfig::default(), &[10]).unwrap();
        assert_eq!(scan.min_volatility, 0);
        assert_eq!(scan.mean_critical_value, scan.rows[0].critical_value);
        assert_eq!(scan.median_critical_value, scan.rows[0].critical_value);
        let scan = scan_subsample_size(&a, &b, &TestConfig::default(), &[8, 10, 12, 14]).unwrap();
        assert_eq!(scan.rows.len(), 4);
        assert!(scan_subsample_size(&a, &b, &TestConfig::default(), &[]).is_err());
    }
}
