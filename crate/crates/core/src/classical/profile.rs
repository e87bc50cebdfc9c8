use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Relative phase `f(θ)` accumulated between the arms, with `f(0) = 0`.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum PhaseProfile {
    #[default]
    Zero,
    /// `f(θ) = slope · θ`.
    Linear { slope: f64 },
    /// Piecewise-linear interpolation of tabulated values.
    Tabulated(TabulatedProfile),
}

/// Samples of a phase profile on a strictly increasing grid covering `[0, π]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedProfile {
    thetas: Vec<f64>,
    values: Vec<f64>,
}

impl TabulatedProfile {
    pub fn new(thetas: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if thetas.len() != values.len() || thetas.len() < 2 {
            return Err(Error::InvalidProfile(
                "need at least two (theta, value) pairs of equal length".into(),
            ));
        }
        if thetas.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidProfile("grid is not strictly increasing".into()));
        }
        if thetas[0] != 0.0 || (thetas[thetas.len() - 1] - PI).abs() > 1e-12 {
            return Err(Error::InvalidProfile("grid must span [0, pi]".into()));
        }
        if values[0] != 0.0 {
            return Err(Error::InvalidProfile("f(0) must be 0".into()));
        }
        Ok(Self { thetas, values })
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn eval(&self, theta: f64) -> f64 {
        let idx = self.thetas.partition_point(|&t| t <= theta);
        let hi = idx.clamp(1, self.thetas.len() - 1);
        let lo = hi - 1;
        let (t0, t1) = (self.thetas[lo], self.thetas[hi]);
        let w = (theta - t0) / (t1 - t0);
        self.values[lo] + w * (self.values[hi] - self.values[lo])
    }
}

impl PhaseProfile {
    pub fn linear(slope: f64) -> Self {
        Self::Linear { slope }
    }

    pub fn tabulated(thetas: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        TabulatedProfile::new(thetas, values).map(Self::Tabulated)
    }

    pub fn eval(&self, theta: f64) -> f64 {
        match self {
            Self::Zero => 0.0,
            Self::Linear { slope } => slope * theta,
            Self::Tabulated(t) => t.eval(theta),
        }
    }
}

/// Phase function `g(θ) = profile(θ) + offset` labelling a member of the
/// two-level operator family.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OperatorPhase {
    pub profile: PhaseProfile,
    pub offset: f64,
}

impl OperatorPhase {
    /// `g ≡ δ`.
    pub fn constant(offset: f64) -> Self {
        Self {
            profile: PhaseProfile::Zero,
            offset,
        }
    }

    /// `g = f + δ`, the operator tracking the accumulated relative phase.
    pub fn tracking(f: &PhaseProfile, offset: f64) -> Self {
        Self {
            profile: f.clone(),
            offset,
        }
    }

    pub fn eval(&self, theta: f64) -> f64 {
        self.profile.eval(theta) + self.offset
    }
}
