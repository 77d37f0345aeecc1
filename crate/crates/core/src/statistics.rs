//! Scalar functionals of difference curves, quantiles and p-values.

use crate::distfn::Grid;
use crate::error::{bad_arg, Result};
use crate::resampling::Method;

/// Normalization `sqrt(n1 n2 / (n1 + n2))` applied to difference curves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleFactor {
    pub lambda: f64,
    pub n1: usize,
    pub n2: usize,
}

impl ScaleFactor {
    pub fn two_sample(n1: usize, n2: usize) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return bad_arg("scale factor needs nonempty samples");
        }
        let (a, b) = (n1 as f64, n2 as f64);
        Ok(Self {
            lambda: (a * b / (a + b)).sqrt(),
            n1,
            n2,
        })
    }

    /// K-sample version: the two-sample formula at the harmonic mean size,
    /// which reduces to [`ScaleFactor::two_sample`] for two samples.
    pub fn k_sample(sizes: &[usize]) -> Result<Self> {
        if sizes.len() < 2 || sizes.contains(&0) {
            return bad_arg("K-sample scale factor needs at least two nonempty samples");
        }
        if sizes.len() == 2 {
            return Self::two_sample(sizes[0], sizes[1]);
        }
        let k = sizes.len() as f64;
        let harmonic = k / sizes.iter().map(|&n| 1.0 / n as f64).sum::<f64>();
        Ok(Self {
            lambda: (harmonic / 2.0).sqrt(),
            n1: sizes[0],
            n2: sizes[1],
        })
    }

    /// Wraps an explicit normalization, e.g. for subsample blocks.
    pub fn with_lambda(lambda: f64) -> Self {
        Self {
            lambda,
            n1: 0,
            n2: 0,
        }
    }
}

/// Replicates of a statistic under a resampling scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct ResampledDistribution {
    pub values: Vec<f64>,
    pub method: Method,
}

impl ResampledDistribution {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn sup(values: &[f64]) -> f64 {
    values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

/// `lambda * max_x D(x)`.
pub fn ks_statistic(d: &[f64], scale: ScaleFactor) -> f64 {
    scale.lambda * sup(d)
}

/// `lambda * sum_x max(D, 0) * dx` over every grid point.
pub fn l1_statistic(d: &[f64], grid: &Grid, scale: ScaleFactor) -> f64 {
    let area: f64 = d.iter().map(|v| v.max(0.0)).sum();
    scale.lambda * area * grid.spacing()
}

/// `lambda^2 * sum_x max(q D, 0)^2 * dx` over every grid point.
pub fn l2_statistic(d: &[f64], grid: &Grid, q: &[f64], scale: ScaleFactor) -> f64 {
    let area: f64 = d
        .iter()
        .zip(q)
        .map(|(v, w)| {
            let p = (w * v).max(0.0);
            p * p
        })
        .sum();
    scale.lambda * scale.lambda * area * grid.spacing()
}

/// `lambda * min over curves of max_x D(x)`.
pub fn minmax_statistic<C: AsRef<[f64]>>(curves: &[C], scale: ScaleFactor) -> Result<f64> {
    if curves.is_empty() {
        return bad_arg("minmax statistic needs at least one curve");
    }
    let m = curves
        .iter()
        .map(|c| sup(c.as_ref()))
        .fold(f64::INFINITY, f64::min);
    Ok(scale.lambda * m)
}

/// Empirical quantile, linearly interpolated at 0-based rank `p (n - 1)`.
pub fn quantile(values: &[f64], p: f64) -> Result<f64> {
    if values.is_empty() {
        return bad_arg("quantile of an empty set");
    }
    if !(0.0..=1.0).contains(&p) {
        return bad_arg(format!("quantile level {p} outside [0, 1]"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok(quantile_sorted(&sorted, p))
}

pub(crate) fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    let h = p * (sorted.len() - 1) as f64;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    let frac = h - lo as f64;
    if frac == 0.0 {
        sorted[lo]
    } else {
        sorted[lo] + frac * (sorted[hi] - sorted[lo])
    }
}

/// Fraction of replicates at or above `stat`.
pub fn p_value(resampled: &[f64], stat: f64) -> f64 {
    if resampled.is_empty() {
        return f64::NAN;
    }
    resampled.iter().filter(|&&r| r >= stat).count() as f64 / resampled.len() as f64
}
