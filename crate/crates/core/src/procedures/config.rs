use std::fmt;
use std::str::FromStr;

use crate::distfn::{order_factorial, WeightSpec};
use crate::error::{bad_arg, Result, SdError};
use crate::resampling::ResamplingPlan;

/// How the null distribution is approximated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Approach {
    /// Least favorable case: KS statistic against resampled suprema.
    Lfc,
    /// Contact-set estimation with the one-sided L2 statistic.
    Contact,
    /// Selective recentering of the bootstrap process.
    SelectiveRecentering,
    /// Numerical directional derivative of the chosen functional.
    NumericalDelta,
    /// K-sample test of stochastic maximality (min over pairs of sup).
    Maximality,
}

impl Approach {
    pub const ALL: [Approach; 5] = [
        Approach::Lfc,
        Approach::Contact,
        Approach::SelectiveRecentering,
        Approach::NumericalDelta,
        Approach::Maximality,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Approach::Lfc => "lfc",
            Approach::Contact => "contact",
            Approach::SelectiveRecentering => "sr",
            Approach::NumericalDelta => "ndm",
            Approach::Maximality => "maximality",
        }
    }
}

impl fmt::Display for Approach {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Approach {
    type Err = SdError;

    fn from_str(s: &str) -> Result<Self> {
        Approach::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| SdError::BadArgument(format!("unknown approach '{s}'")))
    }
}

/// Functional of the difference curve used by the numerical delta method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Functional {
    Ks,
    L1,
    L2,
}

impl Functional {
    pub fn as_str(self) -> &'static str {
        match self {
            Functional::Ks => "ks",
            Functional::L1 => "l1",
            Functional::L2 => "l2",
        }
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Functional {
    type Err = SdError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ks" => Ok(Functional::Ks),
            "l1" => Ok(Functional::L1),
            "l2" => Ok(Functional::L2),
            _ => Err(SdError::BadArgument(format!("unknown functional '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestConfig {
    /// SD order.
    pub s: u32,
    pub ngrid: usize,
    pub alpha: f64,
    pub plan: ResamplingPlan,
    pub approach: Approach,
    /// NDM only.
    pub functional: Functional,
    /// Contact-set constant in `c_N = c log(log N) / sqrt(N)`.
    pub c: f64,
    /// Selective-recentering constant in `a_N = -a sqrt(log(log N))`.
    pub a: f64,
    /// Floor on the selective-recentering critical value.
    pub eta: f64,
    /// NDM step size; `None` means `lambda^(-1/16)`.
    pub epsilon: Option<f64>,
    /// Contact-set weight `q(x)`; off by default.
    pub weight: WeightSpec,
    /// Use the three-point second difference for NDM-L2.
    pub ndm_three_point: bool,
}

impl Default for TestConfig {
    fn default() -> Self {
        Self {
            s: 1,
            ngrid: 100,
            alpha: 0.05,
            plan: ResamplingPlan::default(),
            approach: Approach::Lfc,
            functional: Functional::L1,
            c: 0.75,
            a: 0.1,
            eta: 1e-6,
            epsilon: None,
            weight: WeightSpec::default(),
            ndm_three_point: false,
        }
    }
}

impl TestConfig {
    pub fn validate(&self) -> Result<()> {
        order_factorial(self.s)?;
        if self.ngrid < 2 {
            return bad_arg(format!("ngrid must be at least 2, got {}", self.ngrid));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return bad_arg(format!("alpha must lie in (0, 1), got {}", self.alpha));
        }
        for (name, v) in [("c", self.c), ("a", self.a), ("eta", self.eta)] {
            if !(v > 0.0 && v.is_finite()) {
                return bad_arg(format!("{name} must be positive, got {v}"));
            }
        }
        if let Some(eps) = self.epsilon {
            if !(eps > 0.0 && eps.is_finite()) {
                return bad_arg(format!("epsilon must be positive, got {eps}"));
            }
        }
        self.weight.validate()
    }
}
