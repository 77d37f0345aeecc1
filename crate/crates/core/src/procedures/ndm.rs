//! Numerical delta method: resampled distribution of a directional
//! derivative approximated by finite differences of the functional.

use crate::distfn::{Grid, Sample};
use crate::error::{bad_arg, Result};
use crate::resampling::{par_replicates, TwoSampleResampler};
use crate::statistics::{p_value, ScaleFactor};

use super::{critical_value, Approach, Functional, Prepared, TestConfig, TestResult, Tuning};

/// `lambda^(-1/16)`.
pub fn default_epsilon(scale: ScaleFactor) -> f64 {
    scale.lambda.powf(-1.0 / 16.0)
}

/// Unscaled functional of a difference curve: `sup max(D, 0)`,
/// `sum max(D, 0) dx`, or `sum max(D, 0)^2 dx`.
pub fn ndm_functional(functional: Functional, d: &[f64], grid: &Grid) -> f64 {
    match functional {
        Functional::Ks => d.iter().copied().fold(0.0, f64::max),
        Functional::L1 => d.iter().map(|v| v.max(0.0)).sum::<f64>() * grid.spacing(),
        Functional::L2 => d.iter().map(|v| v.max(0.0).powi(2)).sum::<f64>() * grid.spacing(),
    }
}

/// Tests with `lambda phi(D)` (KS, L1) or `lambda^2 phi(D)` (L2). With
/// `Z = lambda nu*`, replicates are `(phi(D + eps Z) - phi(D)) / eps` for KS
/// and L1 and `(phi(D + eps Z) - phi(D)) / eps^2` for L2; the three-point
/// option uses `(phi(D + 2 eps Z) - 2 phi(D + eps Z) + phi(D)) / (2 eps^2)`.
pub fn test_sd_ndm(sample1: &Sample, sample2: &Sample, config: &TestConfig) -> Result<TestResult> {
    if !config.plan.method.is_bootstrap_family() {
        return bad_arg("the numerical delta method needs a bootstrap-family resampling plan");
    }
    let prep = Prepared::new(sample1, sample2, config)?;
    let functional = config.functional;
    let grid = &prep.grid;
    let lambda = prep.scale.lambda;
    let eps = config.epsilon.unwrap_or_else(|| default_epsilon(prep.scale));

    let base = ndm_functional(functional, &prep.d, grid);
    let statistic = match functional {
        Functional::L2 => lambda * lambda * base,
        _ => lambda * base,
    };

    let resampler = TwoSampleResampler::new(sample1, sample2, grid, config.s, config.plan)?;
    let d = &prep.d;
    let shifted = |nu: &[f64], step: f64| -> f64 {
        let moved: Vec<f64> = d.iter().zip(nu).map(|(d, v)| d + step * lambda * v).collect();
        ndm_functional(functional, &moved, grid)
    };
    let replicates = par_replicates(config.plan.nboot, |k| {
        let nu = resampler.difference(k);
        match functional {
            Functional::L2 if config.ndm_three_point => {
                (shifted(&nu, 2.0 * eps) - 2.0 * shifted(&nu, eps) + base) / (2.0 * eps * eps)
            }
            Functional::L2 => (shifted(&nu, eps) - base) / (eps * eps),
            _ => (shifted(&nu, eps) - base) / eps,
        }
    });

    let crit = critical_value(&replicates, config.alpha)?;
    let p = p_value(&replicates, statistic);
    let tuning = Tuning {
        epsilon: Some(eps),
        ..Tuning::default()
    };
    Ok(prep.finish(
        Approach::NumericalDelta,
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
