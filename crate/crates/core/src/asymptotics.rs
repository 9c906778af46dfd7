//! Large-`n` behaviour of the normal-sample range and of the simplex mean
//! width.
//!
//! The centring sequence `a_n` solves `2π a² e^{a²} = n²`, so
//! `a_n = √W(n²/(2π))`. After centring by `2a_n` and scaling by `√(2 ln n)`
//! the range converges to the convolution of two Gumbel laws, whose density
//! is `2 e^{−y} K0(2 e^{−y/2})`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::quad::{integrate, integrate_real_line, QuadConfig, QuadResult};
use crate::specfn::{bessel_k0_scaled, lambert_w0, EULER_GAMMA};

/// Truncation window for the limit-density moments; the density is below
/// `1e-18` outside it.
pub const DENSITY_WINDOW: (f64, f64) = (-12.0, 60.0);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticEval {
    pub n: f64,
    pub a_n: f64,
    pub mu_approx: f64,
    pub mean_width_approx: f64,
    pub inscaled_approx: f64,
}

impl AsymptoticEval {
    pub fn at(n: f64) -> Result<Self> {
        Ok(Self {
            n,
            a_n: a_n(n)?,
            mu_approx: mu_asymptotic(n)?,
            mean_width_approx: simplex_mean_width_asymptotic(n)?,
            inscaled_approx: inscaled_mean_width_asymptotic(n)?,
        })
    }
}

fn check_n(n: f64, min: f64) -> Result<()> {
    if n.is_finite() && n >= min {
        Ok(())
    } else {
        domain(format!("asymptotic formulas need n >= {min}, got {n}"))
    }
}

/// Positive root of `2π a² exp(a²) = n²`. Real `n >= 2` is accepted.
pub fn a_n(n: f64) -> Result<f64> {
    check_n(n, 2.0)?;
    Ok(lambert_w0(n * n / (2.0 * PI))?.sqrt())
}

/// `|2π a² e^{a²} − n²| / n²` at the computed `a_n`.
pub fn a_n_residual(n: f64) -> Result<f64> {
    let a = a_n(n)?;
    let a2 = a * a;
    // 2π a² e^{a²} / n² − 1, rearranged so e^{a²} never overflows
    let log_ratio = (2.0 * PI * a2).ln() + a2 - 2.0 * n.ln();
    Ok(log_ratio.exp_m1().abs())
}

/// `√(2 ln n) − (ln ln n + ln 4π) / (2√(2 ln n))`.
pub fn a_n_expansion(n: f64) -> Result<f64> {
    check_n(n, 3.0)?;
    let l = n.ln();
    let s = (2.0 * l).sqrt();
    Ok(s - 0.5 * (l.ln() + (4.0 * PI).ln()) / s)
}

/// Limit density of `√(2 ln n)(r_n − 2a_n)`.
pub fn limit_range_density(y: f64) -> f64 {
    let x = 2.0 * (-0.5 * y).exp();
    if x.is_infinite() {
        return 0.0;
    }
    match bessel_k0_scaled(x) {
        Ok(k) => 2.0 * (-y - x).exp() * k,
        Err(_) => 0.0,
    }
}

/// The same density as the convolution of two standard Gumbel densities.
pub fn limit_range_density_convolution(y: f64, cfg: QuadConfig) -> Result<f64> {
    let r = integrate_real_line(|x| (-y - (-x).exp() - (x - y).exp()).exp(), cfg)?;
    Ok(r.value)
}

/// `∫ y^k p(y) dy` over [`DENSITY_WINDOW`].
pub fn limit_density_moment(k: u32, cfg: QuadConfig) -> Result<QuadResult> {
    let (lo, hi) = DENSITY_WINDOW;
    integrate(|y| y.powi(k as i32) * limit_range_density(y), lo, hi, cfg)
}

pub fn limit_mean() -> f64 {
    2.0 * EULER_GAMMA
}

pub fn limit_second_moment() -> f64 {
    PI * PI / 3.0 + 4.0 * EULER_GAMMA * EULER_GAMMA
}

/// `μ_n ≈ 2(a_n + γ/√(2 ln n))`.
pub fn mu_asymptotic(n: f64) -> Result<f64> {
    check_n(n, 3.0)?;
    Ok(2.0 * (a_n(n)? + EULER_GAMMA / (2.0 * n.ln()).sqrt()))
}

/// `E(w_n) ≈ 2√(ln n / n) − (ln ln n + ln 4π − 2γ) / (2√(n ln n))`.
pub fn simplex_mean_width_asymptotic(n: f64) -> Result<f64> {
    check_n(n, 3.0)?;
    let l = n.ln();
    Ok(2.0 * (l / n).sqrt()
        - (l.ln() + (4.0 * PI).ln() - 2.0 * EULER_GAMMA) / (2.0 * (n * l).sqrt()))
}

/// Leading term `2√(ln n / n)` alone.
pub fn simplex_mean_width_leading(n: f64) -> Result<f64> {
    check_n(n, 3.0)?;
    Ok(2.0 * (n.ln() / n).sqrt())
}

/// `E(ŵ_n) ≈ 2√(2 n ln n)` for the simplex rescaled to unit inradius.
pub fn inscaled_mean_width_asymptotic(n: f64) -> Result<f64> {
    check_n(n, 3.0)?;
    Ok(2.0 * (2.0 * n * n.ln()).sqrt())
}
