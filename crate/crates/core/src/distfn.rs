//! Samples, evaluation grids and empirical integrated CDFs.
//!
//! The integrated ECDF of order `s` at `x` is
//! `(1 / (n (s-1)!)) * sum_i (x - X_i)^(s-1) 1{X_i <= x}`, with the order-one
//! case reducing to the right-continuous ECDF. Curves are only ever evaluated
//! on a [`Grid`].

use crate::error::{bad_arg, Result, SdError};

/// Largest supported dominance order; `(s-1)!` stays exact in `f64` up to here.
pub const MAX_ORDER: u32 = 20;

/// A labelled one-dimensional sample of finite observations.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
    label: String,
}

impl Sample {
    pub fn new(label: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return bad_arg(format!(
                "a sample needs at least 2 observations, got {}",
                values.len()
            ));
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(SdError::NonFinite { index, value });
        }
        Ok(Self {
            values,
            label: label.into(),
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Equally spaced evaluation points spanning the pooled support.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<f64>,
    spacing: f64,
}

impl Grid {
    /// `ngrid` equally spaced points from `lo` to `hi`, both inclusive.
    pub fn linspace(lo: f64, hi: f64, ngrid: usize) -> Result<Self> {
        if ngrid < 2 {
            return bad_arg(format!("ngrid must be at least 2, got {ngrid}"));
        }
        if !lo.is_finite() || !hi.is_finite() {
            return bad_arg("grid bounds must be finite");
        }
        if hi <= lo {
            return Err(SdError::DegenerateSupport(lo));
        }
        let spacing = (hi - lo) / (ngrid - 1) as f64;
        let mut points: Vec<f64> = (0..ngrid).map(|i| lo + i as f64 * spacing).collect();
        points[ngrid - 1] = hi;
        if points.windows(2).any(|w| w[1] <= w[0]) {
            return bad_arg("grid spacing underflows; support too narrow for ngrid");
        }
        Ok(Self { points, spacing })
    }

    /// Rebuilds a grid from stored points, checking the grid invariants.
    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return bad_arg("a grid needs at least 2 points");
        }
        if points.iter().any(|p| !p.is_finite()) || points.windows(2).any(|w| w[1] <= w[0]) {
            return bad_arg("grid points must be finite and strictly increasing");
        }
        let spacing = (points[points.len() - 1] - points[0]) / (points.len() - 1) as f64;
        Ok(Self { points, spacing })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Nominal spacing `(max - min) / (ngrid - 1)`.
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Builds the common grid from the pooled minimum to the pooled maximum.
pub fn set_grid(samples: &[Sample], ngrid: usize) -> Result<Grid> {
    if samples.is_empty() {
        return bad_arg("set_grid needs at least one sample");
    }
    if ngrid < 2 {
        return bad_arg(format!("ngrid must be at least 2, got {ngrid}"));
    }
    let lo = samples.iter().map(Sample::min).fold(f64::INFINITY, f64::min);
    let hi = samples.iter().map(Sample::max).fold(f64::NEG_INFINITY, f64::max);
    Grid::linspace(lo, hi, ngrid)
}

/// A function evaluated on a grid, aligned index for index.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub values: Vec<f64>,
    pub order: u32,
}

impl Curve {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Returns `(s-1)!` after validating the order.
pub fn order_factorial(s: u32) -> Result<f64> {
    if s < 1 {
        return bad_arg("SD order s must be at least 1");
    }
    if s > MAX_ORDER {
        return bad_arg(format!("SD order s = {s} exceeds the supported maximum {MAX_ORDER}"));
    }
    Ok((1..s).map(f64::from).product())
}

/// Observations sorted ascending, remembering where each came from.
#[derive(Debug, Clone)]
pub struct SortedSample {
    values: Vec<f64>,
    /// `origin[p]` is the index in the unsorted sample of sorted position `p`.
    origin: Vec<usize>,
}

impl SortedSample {
    pub fn new(values: &[f64]) -> Self {
        let mut origin: Vec<usize> = (0..values.len()).collect();
        origin.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let values = origin.iter().map(|&i| values[i]).collect();
        Self { values, origin }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn origin(&self) -> &[usize] {
        &self.origin
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Reorders per-observation weights (indexed like the unsorted sample)
    /// into sorted order.
    pub fn sorted_weights(&self, weights: &[f64]) -> Vec<f64> {
        self.origin.iter().map(|&i| weights[i]).collect()
    }

    /// `sum_i w_i (x - X_i)^power 1{X_i <= x}` at every grid point.
    ///
    /// `weights` are in sorted order; `None` means unit weights.
    pub fn power_sums(&self, weights: Option<&[f64]>, grid: &Grid, power: usize) -> Vec<f64> {
        power_sums(&self.values, weights, grid.points(), power)
    }
}

/// Sweeps the grid once, carrying the truncated moments
/// `m_j(x) = sum_{X_i <= x} w_i (x - X_i)^j` for `j <= power`.
///
/// Moving from `x` to `x + d` uses the binomial shift
/// `m_k(x + d) = sum_{j <= k} C(k, j) d^(k-j) m_j(x)`, after which newly
/// covered observations are added. With nonnegative weights every term is
/// nonnegative, so nothing cancels.
pub(crate) fn power_sums(
    sorted: &[f64],
    weights: Option<&[f64]>,
    grid: &[f64],
    power: usize,
) -> Vec<f64> {
    debug_assert!(weights.is_none_or(|w| w.len() == sorted.len()));
    let binom = binomial_table(power);
    let mut moments = vec![0.0; power + 1];
    let mut dpow = vec![1.0; power + 1];
    let mut out = Vec::with_capacity(grid.len());
    let mut next = 0;
    let mut prev: Option<f64> = None;

    for &x in grid {
        if let Some(p) = prev {
            let delta = x - p;
            if power > 0 && delta != 0.0 {
                for j in 1..=power {
                    dpow[j] = dpow[j - 1] * delta;
                }
                for k in (1..=power).rev() {
                    let mut acc = moments[k];
                    for j in 0..k {
                        acc += binom[k][j] * dpow[k - j] * moments[j];
                    }
                    moments[k] = acc;
                }
            }
        }
        while next < sorted.len() && sorted[next] <= x {
            let w = weights.map_or(1.0, |w| w[next]);
            if w != 0.0 {
                let d = x - sorted[next];
                let mut term = w;
                moments[0] += term;
                for m in moments.iter_mut().skip(1) {
                    term *= d;
                    *m += term;
                }
            }
            next += 1;
        }
        out.push(moments[power]);
        prev = Some(x);
    }
    out
}

fn binomial_table(n: usize) -> Vec<Vec<f64>> {
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut row = vec![1.0; k + 1];
        for j in 1..k {
            row[j] = rows[k - 1][j - 1] + rows[k - 1][j];
        }
        rows.push(row);
    }
    rows
}

/// Integrated ECDF of order `s` of `sample` on `grid`.
pub fn integrated_ecdf(sample: &Sample, grid: &Grid, s: u32) -> Result<Curve> {
    let sorted = SortedSample::new(sample.values());
    integrated_ecdf_sorted(&sorted, grid, s)
}

pub(crate) fn integrated_ecdf_sorted(sorted: &SortedSample, grid: &Grid, s: u32) -> Result<Curve> {
    let fact = order_factorial(s)?;
    let norm = 1.0 / (sorted.len() as f64 * fact);
    let mut values = sorted.power_sums(None, grid, (s - 1) as usize);
    values.iter_mut().for_each(|v| *v *= norm);
    Ok(Curve { values, order: s })
}

/// Pointwise difference `F1^(s) - F2^(s)` on `grid`.
pub fn ecdf_difference(sample1: &Sample, sample2: &Sample, grid: &Grid, s: u32) -> Result<Curve> {
    let f1 = integrated_ecdf(sample1, grid, s)?;
    let f2 = integrated_ecdf(sample2, grid, s)?;
    Ok(difference(&f1, &f2))
}

pub(crate) fn difference(f1: &Curve, f2: &Curve) -> Curve {
    Curve {
        values: f1.values.iter().zip(&f2.values).map(|(a, b)| a - b).collect(),
        order: f1.order,
    }
}

/// Parameters of the tail-damping weight used by the L2 contact-set statistic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSpec {
    pub z1: f64,
    pub z2: f64,
    pub a: f64,
    pub delta: f64,
    pub enabled: bool,
}

impl Default for WeightSpec {
    fn default() -> Self {
        Self {
            z1: 0.0,
            z2: 1.0,
            a: 1.0,
            delta: 1.0,
            enabled: false,
        }
    }
}

impl WeightSpec {
    pub fn validate(&self) -> Result<()> {
        if !self.enabled {
            return Ok(());
        }
        if self.z1.is_nan() || self.z2.is_nan() || self.z1 >= self.z2 {
            return bad_arg("weight requires z1 < z2");
        }
        if self.a.is_nan() || self.a <= 0.0 || self.delta.is_nan() || self.delta <= 0.0 {
            return bad_arg("weight requires a > 0 and delta > 0");
        }
        Ok(())
    }
}

/// `q(x)`: one on `[z1, z2]`, `a / (a + |x - z|^p)` outside with
/// `p = max(s - 1, 1 + delta)` and `z` the nearer endpoint.
pub fn weight_q(grid: &Grid, s: u32, spec: &WeightSpec) -> Result<Curve> {
    spec.validate()?;
    order_factorial(s)?;
    let values = if spec.enabled {
        let p = f64::from(s - 1).max(1.0 + spec.delta);
        grid.points()
            .iter()
            .map(|&x| {
                if x > spec.z2 {
                    spec.a / (spec.a + (x - spec.z2).abs().powf(p))
                } else if x < spec.z1 {
                    spec.a / (spec.a + (x - spec.z1).abs().powf(p))
                } else {
                    1.0
                }
            })
            .collect()
    } else {
        vec![1.0; grid.len()]
    };
    Ok(Curve { values, order: s })
}

/// Log returns `ln(P_{t+1} / P_t)`.
pub fn log_returns(prices: &[f64]) -> Result<Vec<f64>> {
    if prices.len() < 2 {
        return bad_arg(format!("log returns need at least 2 prices, got {}", prices.len()));
    }
    if let Some((index, &value)) = prices.iter().enumerate().find(|(_, p)| p.is_nan() || **p <= 0.0) {
        return Err(SdError::NonPositivePrice { index, value });
    }
    Ok(prices.windows(2).map(|w| (w[1] / w[0]).ln()).collect())
}
