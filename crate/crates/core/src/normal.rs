//! Standard Normal distribution: CDF, upper tail, density and the
//! fractile `K_α` used by the deterministic-equivalent objective.
//!
//! `erf` is evaluated with its positive-term Taylor series for small
//! arguments and `erfc` with a Lentz-evaluated continued fraction in the
//! tail, so neither path suffers from cancellation.

use crate::error::{Error, Result};

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
const SQRT_2: f64 = std::f64::consts::SQRT_2;
const SERIES_CUTOFF: f64 = 1e-15;
/// Switch from the series to the continued fraction above this argument.
const TAIL_SWITCH: f64 = 2.5;

/// `erf(x) = 2/sqrt(pi) * exp(-x^2) * sum_n 2^n x^(2n+1) / (1*3*...*(2n+1))`.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut n = 0.0;
    loop {
        n += 1.0;
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if term <= SERIES_CUTOFF * sum {
            break;
        }
    }
    FRAC_2_SQRT_PI * (-x2).exp() * sum
}

/// Continued fraction `erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))`.
fn erfc_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = x;
    let mut c = f;
    let mut d = 0.0;
    for i in 1..10_000 {
        let a = i as f64 / 2.0;
        d = x + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = x + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x * x).exp() / (std::f64::consts::PI.sqrt() * f)
}

pub fn erf(x: f64) -> f64 {
    if x < 0.0 {
        -erf(-x)
    } else if x < TAIL_SWITCH {
        erf_series(x)
    } else {
        1.0 - erfc_continued_fraction(x)
    }
}

pub fn erfc(x: f64) -> f64 {
    if x < 0.0 {
        2.0 - erfc(-x)
    } else if x < TAIL_SWITCH {
        1.0 - erf_series(x)
    } else {
        erfc_continued_fraction(x)
    }
}

/// Standard Normal CDF `Φ(z)`.
pub fn cdf(z: f64) -> f64 {
    0.5 * erfc(-z / SQRT_2)
}

/// Upper tail `1 − Φ(z)`, accurate far into the tail.
pub fn upper_tail(z: f64) -> f64 {
    0.5 * erfc(z / SQRT_2)
}

pub fn pdf(z: f64) -> f64 {
    (-0.5 * z * z).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Returns `K ≥ 0` with `1 − Φ(K) = beta` for `beta ∈ (0, 1/2]`.
///
/// Bisection on `[0, 40]` to an interval width of 1e-12 followed by two
/// Newton steps, each kept only if it stays inside the final bracket.
pub fn upper_tail_quantile(beta: f64) -> Result<f64> {
    if !(beta > 0.0 && beta <= 0.5) {
        return Err(Error::domain(format!(
            "tail probability {beta} outside (0, 0.5]"
        )));
    }
    if beta == 0.5 {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (0.0_f64, 40.0_f64);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if upper_tail(mid) > beta {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut k = 0.5 * (lo + hi);
    for _ in 0..2 {
        let density = pdf(k);
        if density <= 0.0 {
            break;
        }
        let next = k + (upper_tail(k) - beta) / density;
        if next >= lo - 1e-12 && next <= hi + 1e-12 {
            k = next;
        }
    }
    Ok(k.max(0.0))
}

/// The α-fractile `K_α` of the standard Normal distribution for `α ∈ [1/2, 1)`.
pub fn k_alpha(alpha: f64) -> Result<f64> {
    if !(0.5..1.0).contains(&alpha) {
        return Err(Error::domain(format!(
            "confidence level {alpha} outside [0.5, 1)"
        )));
    }
    // 1 - alpha is exact for alpha >= 1/2.
    upper_tail_quantile(1.0 - alpha)
}
