//! Stochastic dominance testing.
//!
//! Empirical integrated CDFs of arbitrary order on a common grid, scalar
//! functionals of their differences, seeded resampling, and five inference
//! procedures: least-favorable-case bootstrap, subsampling, contact-set
//! estimation, selective recentering and the numerical delta method, plus a
//! K-sample test of stochastic maximality.
//!
//! ```
//! use sdtest_core::{test_sd, Sample, TestConfig};
//!
//! let a = Sample::new("a", vec![0.1, 0.4, 0.35, 0.8, 0.55, 0.2]).unwrap();
//! let b = Sample::new("b", vec![0.3, 0.9, 0.65, 1.1, 0.7, 0.5]).unwrap();
//! let result = test_sd(&a, &b, &TestConfig::default()).unwrap();
//! assert!((0.0..=1.0).contains(&result.p_value));
//! ```

pub mod distfn;
mod error;
pub mod procedures;
pub mod resampling;
pub mod statistics;

pub use distfn::{
    ecdf_difference, integrated_ecdf, log_returns, set_grid, weight_q, Curve, Grid, Sample, WeightSpec,
};
pub use error::{Result, SdError};
pub use procedures::{
    run, scan_subsample_size, test_maximality, test_sd, test_sd_contact, test_sd_ndm, test_sd_sr, Approach,
    Curves, Functional, SubsampleScan, TestConfig, TestResult, Tuning,
};
pub use resampling::{Method, ResamplingPlan, DEFAULT_SEED};
pub use statistics::{ResampledDistribution, ScaleFactor};
