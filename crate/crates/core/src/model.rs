//! Stochastic weights, confidence levels and the bi-objective space.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::normal;

/// A Normally distributed weight `N(mu, var)` with `mu ≥ 1` and `var ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "(f64, f64)", into = "(f64, f64)")]
pub struct StochItem {
    mu: f64,
    var: f64,
}

impl StochItem {
    pub fn new(mu: f64, var: f64) -> Result<Self> {
        if !mu.is_finite() || !var.is_finite() {
            return Err(Error::domain(format!("non-finite weight ({mu}, {var})")));
        }
        if mu < 1.0 || var < 1.0 {
            return Err(Error::domain(format!(
                "weight ({mu}, {var}) violates mu >= 1 and var >= 1"
            )));
        }
        Ok(StochItem { mu, var })
    }

    /// Like [`new`](Self::new) but only requires non-negative parameters.
    ///
    /// The negatively correlated dominating-set setting draws expectations
    /// from `{0, …, n²}` and therefore produces zero weights.
    pub fn relaxed(mu: f64, var: f64) -> Result<Self> {
        if !(mu.is_finite() && var.is_finite() && mu >= 0.0 && var >= 0.0) {
            return Err(Error::domain(format!(
                "weight ({mu}, {var}) must be finite and non-negative"
            )));
        }
        Ok(StochItem { mu, var })
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu
    }

    #[inline]
    pub fn var(&self) -> f64 {
        self.var
    }

    /// The item's own parameters as a point in objective space.
    #[inline]
    pub fn as_point(&self) -> ObjectiveVector {
        ObjectiveVector::new(self.mu, self.var)
    }
}

impl TryFrom<(f64, f64)> for StochItem {
    type Error = Error;

    fn try_from((mu, var): (f64, f64)) -> Result<Self> {
        StochItem::new(mu, var)
    }
}

impl From<StochItem> for (f64, f64) {
    fn from(item: StochItem) -> Self {
        (item.mu, item.var)
    }
}

/// A confidence level `α` together with its cached fractile `K_α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Confidence {
    alpha: f64,
    k_alpha: f64,
}

impl Confidence {
    pub fn new(alpha: f64) -> Result<Self> {
        let k_alpha = normal::k_alpha(alpha)?;
        Ok(Confidence { alpha, k_alpha })
    }

    /// Confidence `α = 1 − β`. `K_α` is solved from the tail probability
    /// directly, so tiny `β` keep full precision.
    pub fn from_beta(beta: f64) -> Result<Self> {
        let k_alpha = normal::upper_tail_quantile(beta)?;
        Ok(Confidence {
            alpha: 1.0 - beta,
            k_alpha,
        })
    }

    /// The confidence whose fractile is exactly `k_alpha`.
    pub fn from_k_alpha(k_alpha: f64) -> Result<Self> {
        if !(k_alpha >= 0.0 && k_alpha.is_finite()) {
            return Err(Error::domain(format!("fractile {k_alpha} must be finite and >= 0")));
        }
        let alpha = normal::cdf(k_alpha);
        if alpha >= 1.0 {
            return Err(Error::domain(format!("fractile {k_alpha} maps to alpha = 1")));
        }
        Ok(Confidence { alpha, k_alpha })
    }

    #[inline]
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    #[inline]
    pub fn k_alpha(&self) -> f64 {
        self.k_alpha
    }
}

/// Penalized `(μ(x), v(x))` pair of a search point.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
pub struct ObjectiveVector {
    pub mu: f64,
    pub var: f64,
}

impl ObjectiveVector {
    #[inline]
    pub fn new(mu: f64, var: f64) -> Self {
        debug_assert!(mu.is_finite() && var.is_finite(), "({mu}, {var})");
        ObjectiveVector { mu, var }
    }

    pub fn scale(&self, factor: f64) -> Self {
        ObjectiveVector::new(self.mu * factor, self.var * factor)
    }
}

/// Deterministic equivalent `μ + K_α·sqrt(v)` of the chance constraint.
#[inline]
pub fn g_value(mu_total: f64, var_total: f64, conf: &Confidence) -> f64 {
    debug_assert!(mu_total >= 0.0 && var_total >= 0.0);
    mu_total + conf.k_alpha * var_total.sqrt()
}

/// Weighted sum `λ·μ + (1 − λ)·v`.
#[inline]
pub fn f_lambda(point: &ObjectiveVector, lambda: f64) -> f64 {
    lambda * point.mu + (1.0 - lambda) * point.var
}

/// Weak dominance: `a` is no worse than `b` in both objectives.
#[inline]
pub fn dominates(a: &ObjectiveVector, b: &ObjectiveVector) -> bool {
    a.mu <= b.mu && a.var <= b.var
}

/// Weak dominance with a strict improvement in at least one objective.
#[inline]
pub fn strongly_dominates(a: &ObjectiveVector, b: &ObjectiveVector) -> bool {
    dominates(a, b) && (a.mu < b.mu || a.var < b.var)
}
