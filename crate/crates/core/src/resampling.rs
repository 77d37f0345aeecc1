//! Seeded resampling: bootstrap index sets, subsample blocks and multiplier
//! draws.
//!
//! Replicate `k` always draws from its own ChaCha substream `(seed, k)`, so a
//! replicate vector does not depend on evaluation order or thread count.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use rand::distr::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::distfn::{order_factorial, Grid, Sample, SortedSample};
use crate::error::{bad_arg, Result, SdError};
use crate::statistics::{ResampledDistribution, ScaleFactor};

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Default number of bootstrap replicates.
pub const DEFAULT_NBOOT: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Each sample resampled from itself, curves recentered at the sample curves.
    RecenteredBootstrap,
    /// Both bootstrap samples drawn from the pooled sample.
    PooledBootstrap,
    /// One shared index row per replicate, recentered.
    PairedBootstrap,
    /// Contiguous overlapping blocks.
    Subsampling,
    /// Gaussian multiplier process.
    Multiplier,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::RecenteredBootstrap,
        Method::PooledBootstrap,
        Method::PairedBootstrap,
        Method::Subsampling,
        Method::Multiplier,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::RecenteredBootstrap => "bootstrap",
            Method::PooledBootstrap => "pooled",
            Method::PairedBootstrap => "paired",
            Method::Subsampling => "subsampling",
            Method::Multiplier => "multiplier",
        }
    }

    pub fn is_bootstrap_family(self) -> bool {
        self != Method::Subsampling
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = SdError;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| SdError::BadArgument(format!("unknown resampling method '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResamplingPlan {
    pub method: Method,
    pub nboot: usize,
    pub b1: Option<usize>,
    pub b2: Option<usize>,
    pub seed: u64,
}

impl Default for ResamplingPlan {
    fn default() -> Self {
        Self {
            method: Method::RecenteredBootstrap,
            nboot: DEFAULT_NBOOT,
            b1: None,
            b2: None,
            seed: DEFAULT_SEED,
        }
    }
}

impl ResamplingPlan {
    pub fn bootstrap(nboot: usize, seed: u64) -> Self {
        Self {
            nboot,
            seed,
            ..Self::default()
        }
    }

    pub fn subsampling(b1: usize, b2: usize) -> Self {
        Self {
            method: Method::Subsampling,
            b1: Some(b1),
            b2: Some(b2),
            ..Self::default()
        }
    }

    pub fn with_method(self, method: Method) -> Self {
        Self { method, ..self }
    }

    /// Checks the plan against the sample sizes it will be applied to.
    pub fn validate(&self, n1: usize, n2: usize) -> Result<()> {
        match self.method {
            Method::Subsampling => {
                let (b1, b2) = self.block_sizes()?;
                for (b, n) in [(b1, n1), (b2, n2)] {
                    if b < 2 || b > n {
                        return bad_arg(format!("subsample size {b} must lie in [2, {n}]"));
                    }
                }
            }
            Method::PairedBootstrap if n1 != n2 => {
                return Err(SdError::LengthMismatch { n1, n2 });
            }
            _ => {}
        }
        if self.method.is_bootstrap_family() && self.nboot == 0 {
            return bad_arg("nboot must be positive");
        }
        Ok(())
    }

    pub fn block_sizes(&self) -> Result<(usize, usize)> {
        match (self.b1, self.b2) {
            (Some(b1), Some(b2)) => Ok((b1, b2)),
            _ => Err(SdError::MissingSubsampleSize),
        }
    }

    /// Number of replicates this plan yields for samples of the given sizes.
    pub fn replicate_count(&self, n1: usize, n2: usize) -> Result<usize> {
        if self.method == Method::Subsampling {
            let (b1, b2) = self.block_sizes()?;
            Ok((n1 + 1).saturating_sub(b1).min((n2 + 1).saturating_sub(b2)))
        } else {
            Ok(self.nboot)
        }
    }
}

/// Independent generator for replicate `k` under `seed`.
pub fn substream(seed: u64, k: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    rng
}

fn draw_indices<R: Rng>(rng: &mut R, n: usize, range: usize) -> Vec<usize> {
    (0..n).map(|_| rng.random_range(0..range)).collect()
}

/// Multiplicities of `n` uniform draws from `0..range`; the draw sequence is
/// the same as [`draw_indices`].
fn draw_counts<R: Rng>(rng: &mut R, n: usize, range: usize) -> Vec<f64> {
    let mut counts = vec![0.0; range];
    for _ in 0..n {
        counts[rng.random_range(0..range)] += 1.0;
    }
    counts
}

fn check_nboot(nboot: usize) -> Result<()> {
    if nboot == 0 {
        return bad_arg("nboot must be positive");
    }
    Ok(())
}

/// `nboot x n` matrix of uniform draws from `0..n`.
pub fn bootstrap_indices(n: usize, nboot: usize, seed: u64) -> Result<Vec<Vec<usize>>> {
    if n < 2 {
        return bad_arg(format!("bootstrap needs n >= 2, got {n}"));
    }
    check_nboot(nboot)?;
    Ok((0..nboot)
        .map(|k| draw_indices(&mut substream(seed, k), n, n))
        .collect())
}

/// One index vector per replicate.
pub type IndexMatrix = Vec<Vec<usize>>;

/// Index matrices into the pooled array `sample1 ++ sample2`.
pub fn pooled_bootstrap_indices(
    n1: usize,
    n2: usize,
    nboot: usize,
    seed: u64,
) -> Result<(IndexMatrix, IndexMatrix)> {
    if n1 < 2 || n2 < 2 {
        return bad_arg("pooled bootstrap needs both samples of size >= 2");
    }
    check_nboot(nboot)?;
    Ok((0..nboot)
        .map(|k| {
            let mut rng = substream(seed, k);
            let first = draw_indices(&mut rng, n1, n1 + n2);
            let second = draw_indices(&mut rng, n2, n1 + n2);
            (first, second)
        })
        .unzip())
}

/// One index row per replicate, applied to both samples jointly.
pub fn paired_bootstrap_indices(
    n1: usize,
    n2: usize,
    nboot: usize,
    seed: u64,
) -> Result<Vec<Vec<usize>>> {
    if n1 != n2 {
        return Err(SdError::LengthMismatch { n1, n2 });
    }
    bootstrap_indices(n1, nboot, seed)
}

/// The `n - b + 1` contiguous blocks `i..i + b`.
pub fn subsample_blocks(n: usize, b: usize) -> Result<Vec<Range<usize>>> {
    if b < 2 || b > n {
        return bad_arg(format!("block length {b} must lie in [2, {n}]"));
    }
    Ok((0..=n - b).map(|i| i..i + b).collect())
}

fn standard_normals<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let normal = Normal::standard();
    (0..n)
        .map(|_| normal.inverse_cdf(rng.sample::<f64, _>(Open01)))
        .collect()
}

/// Standard normal multipliers for replicate `k`: `n1` for the first sample,
/// then `n2` for the second.
pub fn multiplier_draws(n1: usize, n2: usize, seed: u64, k: usize) -> (Vec<f64>, Vec<f64>) {
    let mut rng = substream(seed, k);
    let u1 = standard_normals(&mut rng, n1);
    let u2 = standard_normals(&mut rng, n2);
    (u1, u2)
}

/// Multiplier process of one sample on the grid, without the root-n factor:
/// `(1 / (n (s-1)!)) sum_i [h_i(x) - mean_j h_j(x)] u_i`,
/// `h_i(x) = (x - X_i)^(s-1) 1{X_i <= x}`.
///
/// `ecdf` is the sample's integrated ECDF of order `s` on the same grid and
/// `multipliers` are indexed like the unsorted sample.
pub fn multiplier_curve(
    sample: &SortedSample,
    ecdf: &[f64],
    grid: &Grid,
    s: u32,
    multipliers: &[f64],
) -> Result<Vec<f64>> {
    let fact = order_factorial(s)?;
    if multipliers.len() != sample.len() || ecdf.len() != grid.len() {
        return bad_arg("multiplier curve inputs are misaligned");
    }
    let n = sample.len() as f64;
    let weights = sample.sorted_weights(multipliers);
    let total: f64 = multipliers.iter().sum::<f64>() / n;
    let sums = sample.power_sums(Some(&weights), grid, (s - 1) as usize);
    Ok(sums
        .iter()
        .zip(ecdf)
        .map(|(w, f)| w / (n * fact) - f * total)
        .collect())
}

/// Runs `replicate` for every index in `0..count` in parallel, in index order.
pub(crate) fn par_replicates<F>(count: usize, replicate: F) -> Vec<f64>
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    (0..count).into_par_iter().map(replicate).collect()
}

/// Precomputed state for drawing resampled difference curves of two samples.
///
/// [`TwoSampleResampler::difference`] returns the unscaled process whose
/// supremum mimics the null distribution under the least favorable case:
/// recentered `(F1* - F1) - (F2* - F2)` for the recentered and paired
/// bootstraps, `F1* - F2*` for the pooled bootstrap, and the multiplier
/// process difference for the multiplier method.
#[derive(Debug, Clone)]
pub struct TwoSampleResampler {
    sorted1: SortedSample,
    sorted2: SortedSample,
    pooled: Option<SortedSample>,
    f1: Vec<f64>,
    f2: Vec<f64>,
    grid: Grid,
    s: u32,
    norm: f64,
    plan: ResamplingPlan,
}

impl TwoSampleResampler {
    pub fn new(sample1: &Sample, sample2: &Sample, grid: &Grid, s: u32, plan: ResamplingPlan) -> Result<Self> {
        let norm = 1.0 / order_factorial(s)?;
        plan.validate(sample1.len(), sample2.len())?;
        if !plan.method.is_bootstrap_family() {
            return bad_arg("subsampling has no bootstrap difference process");
        }
        let sorted1 = SortedSample::new(sample1.values());
        let sorted2 = SortedSample::new(sample2.values());
        let pooled = (plan.method == Method::PooledBootstrap).then(|| {
            let mut all = sample1.values().to_vec();
            all.extend_from_slice(sample2.values());
            SortedSample::new(&all)
        });
        let f1 = crate::distfn::integrated_ecdf_sorted(&sorted1, grid, s)?.values;
        let f2 = crate::distfn::integrated_ecdf_sorted(&sorted2, grid, s)?.values;
        Ok(Self {
            sorted1,
            sorted2,
            pooled,
            f1,
            f2,
            grid: grid.clone(),
            s,
            norm,
            plan,
        })
    }

    pub fn sample_curves(&self) -> (&[f64], &[f64]) {
        (&self.f1, &self.f2)
    }

    pub fn plan(&self) -> &ResamplingPlan {
        &self.plan
    }

    fn weighted_ecdf(&self, sorted: &SortedSample, counts: &[f64], n: usize) -> Vec<f64> {
        let scale = self.norm / n as f64;
        let mut v = sorted.power_sums(Some(&sorted.sorted_weights(counts)), &self.grid, (self.s - 1) as usize);
        v.iter_mut().for_each(|x| *x *= scale);
        v
    }

    fn recentered(&self, b1: &[f64], b2: &[f64]) -> Vec<f64> {
        (0..b1.len())
            .map(|i| (b1[i] - self.f1[i]) - (b2[i] - self.f2[i]))
            .collect()
    }

    /// Unscaled resampled difference curve for replicate `k`.
    pub fn difference(&self, k: usize) -> Vec<f64> {
        let (n1, n2) = (self.sorted1.len(), self.sorted2.len());
        let seed = self.plan.seed;
        match self.plan.method {
            Method::RecenteredBootstrap => {
                let mut rng = substream(seed, k);
                let c1 = draw_counts(&mut rng, n1, n1);
                let c2 = draw_counts(&mut rng, n2, n2);
                let b1 = self.weighted_ecdf(&self.sorted1, &c1, n1);
                let b2 = self.weighted_ecdf(&self.sorted2, &c2, n2);
                self.recentered(&b1, &b2)
            }
            Method::PairedBootstrap => {
                let c = draw_counts(&mut substream(seed, k), n1, n1);
                let b1 = self.weighted_ecdf(&self.sorted1, &c, n1);
                let b2 = self.weighted_ecdf(&self.sorted2, &c, n2);
                self.recentered(&b1, &b2)
            }
            Method::PooledBootstrap => {
                let pooled = self.pooled.as_ref().expect("pooled sample prepared");
                let mut rng = substream(seed, k);
                let c1 = draw_counts(&mut rng, n1, n1 + n2);
                let c2 = draw_counts(&mut rng, n2, n1 + n2);
                let b1 = self.weighted_ecdf(pooled, &c1, n1);
                let b2 = self.weighted_ecdf(pooled, &c2, n2);
                b1.iter().zip(&b2).map(|(a, b)| a - b).collect()
            }
            Method::Multiplier => {
                let (u1, u2) = multiplier_draws(n1, n2, seed, k);
                self.multiplier_difference(&u1, &u2)
            }
            Method::Subsampling => unreachable!("rejected in TwoSampleResampler::new"),
        }
    }

    /// Multiplier process difference for explicit multipliers.
    pub fn multiplier_difference(&self, u1: &[f64], u2: &[f64]) -> Vec<f64> {
        let j1 = multiplier_curve(&self.sorted1, &self.f1, &self.grid, self.s, u1)
            .expect("aligned multiplier inputs");
        let j2 = multiplier_curve(&self.sorted2, &self.f2, &self.grid, self.s, u2)
            .expect("aligned multiplier inputs");
        j1.iter().zip(&j2).map(|(a, b)| a - b).collect()
    }
}

/// Supremum-type replicates of the multiplier process,
/// `lambda * sup_x (J1(x) - J2(x))`.
pub fn multiplier_replicates(
    sample1: &Sample,
    sample2: &Sample,
    grid: &Grid,
    s: u32,
    nboot: usize,
    seed: u64,
) -> Result<ResampledDistribution> {
    let plan = ResamplingPlan {
        method: Method::Multiplier,
        nboot,
        seed,
        ..ResamplingPlan::default()
    };
    let resampler = TwoSampleResampler::new(sample1, sample2, grid, s, plan)?;
    let scale = ScaleFactor::two_sample(sample1.len(), sample2.len())?;
    let values = par_replicates(nboot, |k| {
        crate::statistics::ks_statistic(&resampler.difference(k), scale)
    });
    Ok(ResampledDistribution {
        values,
        method: Method::Multiplier,
    })
}

/// Recentered or paired bootstrap for any number of samples: replicate `k`
/// draws each sample's indices in turn from substream `(seed, k)`.
#[derive(Debug, Clone)]
pub struct KSampleResampler {
    sorted: Vec<SortedSample>,
    grid: Grid,
    s: u32,
    norm: f64,
    plan: ResamplingPlan,
}

impl KSampleResampler {
    pub fn new(samples: &[Sample], grid: &Grid, s: u32, plan: ResamplingPlan) -> Result<Self> {
        let norm = 1.0 / order_factorial(s)?;
        match plan.method {
            Method::RecenteredBootstrap => {}
            Method::PairedBootstrap => {
                if let Some(w) = samples.windows(2).find(|w| w[0].len() != w[1].len()) {
                    return Err(SdError::LengthMismatch {
                        n1: w[0].len(),
                        n2: w[1].len(),
                    });
                }
            }
            other => {
                return bad_arg(format!(
                    "the K-sample test supports bootstrap and paired resampling, not {other}"
                ))
            }
        }
        check_nboot(plan.nboot)?;
        Ok(Self {
            sorted: samples.iter().map(|s| SortedSample::new(s.values())).collect(),
            grid: grid.clone(),
            s,
            norm,
            plan,
        })
    }

    /// Bootstrap integrated ECDFs of every sample for replicate `k`.
    pub fn integrated(&self, k: usize) -> Vec<Vec<f64>> {
        let mut rng = substream(self.plan.seed, k);
        let power = (self.s - 1) as usize;
        let shared = (self.plan.method == Method::PairedBootstrap).then(|| {
            let n = self.sorted[0].len();
            draw_counts(&mut rng, n, n)
        });
        self.sorted
            .iter()
            .map(|sorted| {
                let n = sorted.len();
                let counts = match &shared {
                    Some(c) => c.clone(),
                    None => draw_counts(&mut rng, n, n),
                };
                let scale = self.norm / n as f64;
                let mut v = sorted.power_sums(Some(&sorted.sorted_weights(&counts)), &self.grid, power);
                v.iter_mut().for_each(|x| *x *= scale);
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bootstrap_indices_are_seeded_and_in_range() {
        let a = bootstrap_indices(3, 2, 7).unwrap();
        assert_eq!(a, bootstrap_indices(3, 2, 7).unwrap());
        assert_ne!(bootstrap_indices(50, 2, 7).unwrap(), bootstrap_indices(50, 2, 8).unwrap());
        assert!(a.iter().flatten().all(|&i| i < 3));
        assert_eq!(a.len(), 2);
        assert!(a.iter().all(|r| r.len() == 3));
        assert!(bootstrap_indices(1, 2, 7).is_err());
    }

    #[test]
    fn bootstrap_index_mean() {
        let n = 1000usize;
        let row = &bootstrap_indices(n, 1, 99).unwrap()[0];
        let mean = row.iter().sum::<usize>() as f64 / n as f64;
        let nf = n as f64;
        // standard error of the mean of n uniform draws on {0..n-1}
        let se = ((nf * nf - 1.0) / 12.0 / nf).sqrt();
        assert!((mean - (nf - 1.0) / 2.0).abs() < 3.0 * se, "mean {mean}");
    }

    #[test]
    fn pooled_indices() {
        let (a, b) = pooled_bootstrap_indices(40, 40, 50, 3).unwrap();
        assert_eq!((a.clone(), b.clone()), pooled_bootstrap_indices(40, 40, 50, 3).unwrap());
        let all: Vec<usize> = a.iter().chain(&b).flatten().copied().collect();
        assert!(all.iter().all(|&i| i < 80));
        assert!(all.iter().any(|&i| i < 40) && all.iter().any(|&i| i >= 40));
        let from_first = all.iter().filter(|&&i| i < 40).count() as f64;
        let total = all.len() as f64;
        // binomial(total, 1/2) proportion, 4 standard errors
        let se = (0.25 / total).sqrt();
        assert!((from_first / total - 0.5).abs() < 4.0 * se);
    }

    #[test]
    fn paired_indices() {
        assert_eq!(
            paired_bootstrap_indices(5, 6, 3, 1),
            Err(SdError::LengthMismatch { n1: 5, n2: 6 })
        );
        let p = paired_bootstrap_indices(5, 5, 3, 1).unwrap();
        assert_eq!(p, bootstrap_indices(5, 3, 1).unwrap());
    }

    #[test]
    fn blocks() {
        assert_eq!(subsample_blocks(5, 3).unwrap(), vec![0..3, 1..4, 2..5]);
        assert_eq!(subsample_blocks(5, 5).unwrap(), vec![0..5]);
        assert!(subsample_blocks(5, 6).is_err());
        assert!(subsample_blocks(5, 1).is_err());
        for (n, b) in [(10, 2), (17, 5), (9, 9)] {
            let blocks = subsample_blocks(n, b).unwrap();
            assert_eq!(blocks.len(), n - b + 1);
            assert!((0..n).all(|i| blocks.iter().any(|r| r.contains(&i))));
        }
    }

    #[test]
    fn plan_validation() {
        let plan = ResamplingPlan::subsampling(40, 40);
        assert!(plan.validate(100, 100).is_ok());
        assert_eq!(plan.replicate_count(100, 120).unwrap(), 61);
        assert!(ResamplingPlan::subsampling(101, 2).validate(100, 100).is_err());
        let missing = ResamplingPlan {
            method: Method::Subsampling,
            ..ResamplingPlan::default()
        };
        assert_eq!(missing.validate(10, 10), Err(SdError::MissingSubsampleSize));
        let paired = ResamplingPlan::default().with_method(Method::PairedBootstrap);
        assert!(matches!(paired.validate(3, 4), Err(SdError::LengthMismatch { .. })));
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("jackknife".parse::<Method>().is_err());
    }

    fn normals(n: usize, seed: u64) -> Vec<f64> {
        standard_normals(&mut substream(seed, 0), n)
    }

    #[test]
    fn zero_multipliers_give_zero_replicates() {
        let s1 = Sample::new("a", normals(30, 1)).unwrap();
        let s2 = Sample::new("b", normals(25, 2)).unwrap();
        let grid = crate::distfn::set_grid(&[s1.clone(), s2.clone()], 20).unwrap();
        let plan = ResamplingPlan::default().with_method(Method::Multiplier);
        for s in 1..=3 {
            let r = TwoSampleResampler::new(&s1, &s2, &grid, s, plan).unwrap();
            let d = r.multiplier_difference(&[0.0; 30], &[0.0; 25]);
            assert!(d.iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn multiplier_replicates_are_deterministic() {
        let s1 = Sample::new("a", normals(40, 3)).unwrap();
        let s2 = Sample::new("b", normals(40, 4)).unwrap();
        let grid = crate::distfn::set_grid(&[s1.clone(), s2.clone()], 30).unwrap();
        let a = multiplier_replicates(&s1, &s2, &grid, 1, 50, 11).unwrap();
        let b = multiplier_replicates(&s1, &s2, &grid, 1, 50, 11).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
    }

    #[test]
    fn multiplier_process_is_centered() {
        let s1 = Sample::new("a", normals(100, 5)).unwrap();
        let s2 = Sample::new("b", normals(100, 6)).unwrap();
        let grid = crate::distfn::set_grid(&[s1.clone(), s2.clone()], 21).unwrap();
        let plan = ResamplingPlan::bootstrap(2000, 17).with_method(Method::Multiplier);
        let r = TwoSampleResampler::new(&s1, &s2, &grid, 1, plan).unwrap();
        let x = 10;
        let draws: Vec<f64> = (0..2000).map(|k| r.difference(k)[x]).collect();
        let n = draws.len() as f64;
        let mean = draws.iter().sum::<f64>() / n;
        let var = draws.iter().map(|d| (d - mean).powi(2)).sum::<f64>() / (n - 1.0);
        assert!(mean.abs() < 3.0 * (var / n).sqrt(), "mean {mean}");
        assert!(var > 0.0);
    }

    #[test]
    fn recentered_draws_follow_public_indices() {
        let v1 = normals(12, 7);
        let v2 = normals(9, 8);
        let s1 = Sample::new("a", v1.clone()).unwrap();
        let s2 = Sample::new("b", v2.clone()).unwrap();
        let grid = crate::distfn::set_grid(&[s1.clone(), s2.clone()], 15).unwrap();
        let r = TwoSampleResampler::new(&s1, &s2, &grid, 2, ResamplingPlan::bootstrap(4, 21)).unwrap();
        let rows = bootstrap_indices(12, 4, 21).unwrap();
        for (k, row) in rows.iter().enumerate() {
            let boot = Sample::new("a*", row.iter().map(|&i| v1[i]).collect()).unwrap();
            let f = crate::distfn::integrated_ecdf(&boot, &grid, 2).unwrap();
            let mut rng = substream(21, k);
            let first = draw_indices(&mut rng, 12, 12);
            assert_eq!(&first, row);
            let second = draw_indices(&mut rng, 9, 9);
            let boot2 = Sample::new("b*", second.iter().map(|&i| v2[i]).collect()).unwrap();
            let f2 = crate::distfn::integrated_ecdf(&boot2, &grid, 2).unwrap();
            let (g1, g2) = r.sample_curves();
            let d = r.difference(k);
            for i in 0..grid.len() {
                let expect = (f.values[i] - g1[i]) - (f2.values[i] - g2[i]);
                assert!((d[i] - expect).abs() < 1e-12);
            }
        }
    }
}
