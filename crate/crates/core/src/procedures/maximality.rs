//! K-sample test of stochastic maximality.
//!
//! `H0: min_{k != l} D_kl(x) <= 0 for all x` (some prospect dominates
//! another) against its negation, with statistic
//! `lambda * min_{k != l} sup_x D_kl(x)` and recentered bootstrap replicates.

use std::time::Instant;

use crate::distfn::{self, Curve, Sample};
use crate::error::{bad_arg, Result};
use crate::resampling::{par_replicates, KSampleResampler};
use crate::statistics::{minmax_statistic, p_value, ResampledDistribution, ScaleFactor};

use super::{critical_value, Approach, Curves, TestConfig, TestResult, Tuning};

fn ordered_pairs(k: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(k * (k - 1));
    for a in 0..k {
        for b in a + 1..k {
            pairs.push((a, b));
            pairs.push((b, a));
        }
    }
    pairs
}

pub fn test_maximality(samples: &[Sample], config: &TestConfig) -> Result<TestResult> {
    let started = Instant::now();
    if samples.len() < 2 {
        return bad_arg(format!("the maximality test needs at least 2 samples, got {}", samples.len()));
    }
    config.validate()?;
    let grid = distfn::set_grid(samples, config.ngrid)?;
    let curves = samples
        .iter()
        .map(|x| distfn::integrated_ecdf(x, &grid, config.s))
        .collect::<Result<Vec<Curve>>>()?;
    let sizes: Vec<usize> = samples.iter().map(Sample::len).collect();
    let scale = ScaleFactor::k_sample(&sizes)?;
    let pairs = ordered_pairs(samples.len());

    let diffs: Vec<Vec<f64>> = pairs
        .iter()
        .map(|&(a, b)| distfn::difference(&curves[a], &curves[b]).values)
        .collect();
    let statistic = minmax_statistic(&diffs, scale)?;

    let resampler = KSampleResampler::new(samples, &grid, config.s, config.plan)?;
    let replicates = par_replicates(config.plan.nboot, |k| {
        let boot = resampler.integrated(k);
        let recentered: Vec<Vec<f64>> = pairs
            .iter()
            .map(|&(a, b)| {
                let (fa, fb) = (&curves[a].values, &curves[b].values);
                (0..grid.len())
                    .map(|i| (boot[a][i] - fa[i]) - (boot[b][i] - fb[i]))
                    .collect()
            })
            .collect();
        minmax_statistic(&recentered, scale).expect("at least one pair")
    });

    let crit = critical_value(&replicates, config.alpha)?;
    let p = p_value(&replicates, statistic);
    let pointwise_min = (0..grid.len())
        .map(|i| diffs.iter().map(|d| d[i]).fold(f64::INFINITY, f64::min))
        .collect();
    Ok(TestResult {
        approach: Approach::Maximality,
        statistic,
        critical_value: crit,
        p_value: p,
        resampled: ResampledDistribution {
            values: replicates,
            method: config.plan.method,
        },
        grid,
        curves: Curves {
            integrated: curves,
            difference: Curve {
                values: pointwise_min,
                order: config.s,
            },
        },
        labels: samples.iter().map(|x| x.label().to_owned()).collect(),
        sizes,
        lambda: scale.lambda,
        config: config.clone(),
        tuning: Tuning::default(),
        elapsed: started.elapsed().as_secs_f64(),
    })
}
