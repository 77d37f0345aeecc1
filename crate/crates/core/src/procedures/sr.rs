//! Selective recentering of the bootstrap process.

use crate::distfn::Sample;
use crate::error::{bad_arg, Result};
use crate::resampling::{par_replicates, TwoSampleResampler};
use crate::statistics::{ks_statistic, p_value};

use super::{critical_value, Approach, Prepared, TestConfig, TestResult, Tuning};

/// Thresholded estimate of `min(D, 0)`: `D(x)` where `D(x) < threshold`,
/// zero elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct RecenteringCurve {
    pub values: Vec<f64>,
    pub threshold: f64,
}

/// `a_N / sqrt(N)` with `a_N = -a sqrt(log(log N))` and `N = n1 + n2`.
pub fn sr_threshold(a: f64, n1: usize, n2: usize) -> f64 {
    let n = (n1 + n2) as f64;
    -a * n.ln().ln().sqrt() / n.sqrt()
}

pub fn recentering_curve(d: &[f64], threshold: f64) -> RecenteringCurve {
    RecenteringCurve {
        values: d.iter().map(|&v| if v < threshold { v } else { 0.0 }).collect(),
        threshold,
    }
}

/// KS test whose replicates are `lambda * sup(nu* + mu)` with `mu` the
/// recentering curve, and whose critical value is floored at `eta`.
///
/// The p-value is taken against the replicates floored at `eta` as well, so
/// a statistic at or below the floor never has a p-value under alpha.
pub fn test_sd_sr(sample1: &Sample, sample2: &Sample, config: &TestConfig) -> Result<TestResult> {
    if !config.plan.method.is_bootstrap_family() {
        return bad_arg("selective recentering needs a bootstrap-family resampling plan");
    }
    let prep = Prepared::new(sample1, sample2, config)?;
    let statistic = ks_statistic(&prep.d, prep.scale);
    let mu = recentering_curve(&prep.d, sr_threshold(config.a, sample1.len(), sample2.len()));

    let resampler = TwoSampleResampler::new(sample1, sample2, &prep.grid, config.s, config.plan)?;
    let replicates = par_replicates(config.plan.nboot, |k| {
        let mut nu = resampler.difference(k);
        nu.iter_mut().zip(&mu.values).for_each(|(v, m)| *v += m);
        ks_statistic(&nu, prep.scale)
    });

    let crit = critical_value(&replicates, config.alpha)?.max(config.eta);
    let floored: Vec<f64> = replicates.iter().map(|r| r.max(config.eta)).collect();
    let p = p_value(&floored, statistic);
    let tuning = Tuning {
        recentering: Some(mu),
        ..Tuning::default()
    };
    Ok(prep.finish(
        Approach::SelectiveRecentering,
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

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn threshold_formula() {
        let a_n = -0.1 * 1000f64.ln().ln().sqrt();
        assert_abs_diff_eq!(a_n, -0.1390, epsilon = 1e-4);
        assert_abs_diff_eq!(sr_threshold(0.1, 500, 500), a_n / 1000f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(sr_threshold(0.1, 500, 500), -0.004397, epsilon = 1e-6);
    }

    #[test]
    fn recentering_keeps_only_clearly_negative_points() {
        let mu = recentering_curve(&[-0.5, -0.001, 0.0, 0.3], -0.01);
        assert_eq!(mu.values, vec![-0.5, 0.0, 0.0, 0.0]);
        let zero = recentering_curve(&[0.0; 5], -0.01);
        assert!(zero.values.iter().all(|&v| v == 0.0));
    }
}
