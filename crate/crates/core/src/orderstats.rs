//! Moments of the range of `n` independent standard normal variables.
//!
//! `μ_n = E(r_n)` and `ν_n = E(r_n²)` are available by quadrature for
//! `2 <= n <= 500` and in closed form for `2 <= n <= 7`. The closed forms use
//! the constants `S_k`, `T_k`, `U` and `V` defined below.

use std::f64::consts::{FRAC_PI_4, PI};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::quad::{integrate, integrate_2d, integrate_real_line, QuadConfig, Region};
use crate::specfn::{arcsec, normal_cdf};

/// Largest sample size accepted by the quadrature routes; beyond it the
/// integrand powers underflow and the asymptotic expansions take over.
pub const MAX_QUADRATURE_N: u64 = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentMethod {
    Quadrature,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RangeMoments {
    pub n: u64,
    pub mu: f64,
    pub nu: f64,
    pub method: MomentMethod,
}

impl RangeMoments {
    pub fn variance(&self) -> f64 {
        self.nu - self.mu * self.mu
    }
}

pub fn range_moments(n: u64, method: MomentMethod, cfg: QuadConfig) -> Result<RangeMoments> {
    let (mu, nu) = match method {
        MomentMethod::Quadrature => (mu_quadrature(n, cfg)?, nu_quadrature(n, cfg)?),
        MomentMethod::ClosedForm => (mu_closed(n)?, nu_closed(n)?),
    };
    Ok(RangeMoments { n, mu, nu, method })
}

fn check_quadrature_n(n: u64) -> Result<()> {
    if n == 0 {
        return domain("sample size must be at least 1");
    }
    if n > MAX_QUADRATURE_N {
        return domain(format!(
            "sample size {n} exceeds the quadrature cap of {MAX_QUADRATURE_N}; use the asymptotic expansion"
        ));
    }
    Ok(())
}

// 1 − (1 − q)^n without cancellation for small q.
fn one_minus_pow(q: f64, n: i32) -> f64 {
    if q >= 1.0 {
        1.0
    } else {
        -(n as f64 * (-q).ln_1p()).exp_m1()
    }
}

/// Integrand of `μ_n`: `1 − F(x)^n − (1 − F(x))^n`, even in `x`.
fn range_mean_kernel(x: f64, n: i32) -> f64 {
    let tail = normal_cdf(-x.abs());
    one_minus_pow(tail, n) - tail.powi(n)
}

/// `P(min < x, max > y)` for `x < y`, i.e.
/// `1 − F(y)^n − (1 − F(x))^n + (F(y) − F(x))^n`.
fn range_square_kernel(x: f64, y: f64, n: i32) -> f64 {
    let lower = normal_cdf(x);
    let upper = normal_cdf(-y);
    // factor out the rarer of the two tail events
    let (small, rest) = if lower <= upper {
        (lower, normal_cdf(y))
    } else {
        (upper, normal_cdf(-x))
    };
    if rest <= 0.0 {
        return one_minus_pow(small, n);
    }
    let k = one_minus_pow(small, n) - rest.powi(n) * one_minus_pow((small / rest).min(1.0), n);
    k.max(0.0)
}

/// `E(r_n)` by quadrature over the real line.
pub fn mu_quadrature(n: u64, cfg: QuadConfig) -> Result<f64> {
    check_quadrature_n(n)?;
    if n == 1 {
        return Ok(0.0);
    }
    let n = n as i32;
    Ok(integrate_real_line(|x| range_mean_kernel(x, n), cfg)?.value)
}

/// `E(r_n²)` by iterated quadrature over `{x < y}`.
pub fn nu_quadrature(n: u64, cfg: QuadConfig) -> Result<f64> {
    check_quadrature_n(n)?;
    if n == 1 {
        return Ok(0.0);
    }
    let n = n as i32;
    let r = integrate_2d(
        |x, y| range_square_kernel(x, y, n),
        Region::BelowDiagonal,
        cfg,
    )?;
    Ok(2.0 * r.value)
}

fn check_k(k: f64) -> Result<()> {
    if k.is_finite() && k >= 0.0 {
        Ok(())
    } else {
        domain(format!("k must be finite and nonnegative, got {k}"))
    }
}

/// `S_k = arcsec(k+1) / (2π)`.
pub fn s_k(k: f64) -> Result<f64> {
    check_k(k)?;
    Ok(arcsec(k + 1.0)? / (2.0 * PI))
}

/// `S_k` from its defining integral `(√k/π) ∫_0^{π/4} dx / √(k + sec²x)`.
pub fn s_k_integral(k: f64, cfg: QuadConfig) -> Result<f64> {
    check_k(k)?;
    let r = integrate(|x| 1.0 / (k + sec2(x)).sqrt(), 0.0, FRAC_PI_4, cfg)?;
    Ok(k.sqrt() / PI * r.value)
}

fn sec2(x: f64) -> f64 {
    let c = x.cos();
    1.0 / (c * c)
}

/// `T_k` through the one-dimensional reduction
/// `(1/2π²) ∫_0^{π S_k} arcsec(1 + k(k+1)/(k − tan²z)) dz`.
pub fn t_k(k: f64, cfg: QuadConfig) -> Result<f64> {
    check_k(k)?;
    if k == 0.0 {
        return Ok(0.0);
    }
    let upper = PI * s_k(k)?;
    let t = upper.tan();
    if !(t * t < k) {
        return Err(Error::Consistency(format!(
            "T_{k}: tan² of the upper limit ({}) reaches k",
            t * t
        )));
    }
    let r = integrate(
        |z| {
            let t = z.tan();
            let arg = 1.0 + k * (k + 1.0) / (k - t * t);
            (1.0 / arg).acos()
        },
        0.0,
        upper,
        cfg,
    )?;
    Ok(r.value / (2.0 * PI * PI))
}

/// `T_k` from its double-integral definition over `[0, π/4]²`.
pub fn t_k_double(k: f64, cfg: QuadConfig) -> Result<f64> {
    check_k(k)?;
    let r = integrate_2d(
        |x, y| 1.0 / (k + sec2(x) + sec2(y)).sqrt(),
        Region::Rectangle {
            x: (0.0, FRAC_PI_4),
            y: (0.0, FRAC_PI_4),
        },
        cfg,
    )?;
    Ok(k.sqrt() / (PI * PI) * r.value)
}

pub fn u_integrand(t: f64) -> f64 {
    let s = 2.0 * t * t;
    (1.0 / (s + 4.0)).acos() / ((s + 1.0) * (s + 3.0).sqrt()) / (PI * PI)
}

pub fn v_integrand(t: f64) -> f64 {
    let s = t * t;
    (1.0 / (s + 5.0)).acos() / ((s + 2.0) * (s + 4.0).sqrt()) / (PI * PI)
}

pub fn u_const(cfg: QuadConfig) -> Result<f64> {
    Ok(integrate(u_integrand, 0.0, 1.0, cfg)?.value)
}

pub fn v_const(cfg: QuadConfig) -> Result<f64> {
    Ok(integrate(v_integrand, 0.0, 1.0, cfg)?.value)
}

/// The constants entering the closed-form table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RangeConstants {
    pub s_half: f64,
    pub s2: f64,
    pub s3: f64,
    pub t2: f64,
    pub t3: f64,
    pub u: f64,
    pub v: f64,
}

impl RangeConstants {
    pub fn compute(cfg: QuadConfig) -> Result<Self> {
        Ok(Self {
            s_half: s_k(0.5)?,
            s2: s_k(2.0)?,
            s3: s_k(3.0)?,
            t2: t_k(2.0, cfg)?,
            t3: t_k(3.0, cfg)?,
            u: u_const(cfg)?,
            v: v_const(cfg)?,
        })
    }
}

/// Tolerance used for the memoized constants.
pub fn constants_config() -> QuadConfig {
    QuadConfig {
        abs_tol: 1e-15,
        rel_tol: 5e-14,
        max_subdivisions: 2000,
    }
}

/// Memoized [`RangeConstants`] at [`constants_config`] accuracy.
pub fn constants() -> Result<RangeConstants> {
    static CACHE: OnceLock<std::result::Result<RangeConstants, Error>> = OnceLock::new();
    CACHE
        .get_or_init(|| RangeConstants::compute(constants_config()))
        .clone()
}

fn check_closed_n(n: u64) -> Result<()> {
    if (2..=7).contains(&n) {
        Ok(())
    } else {
        domain(format!("closed forms exist only for 2 <= n <= 7, got {n}"))
    }
}

/// `E(r_n)` from the exact expressions, `2 <= n <= 7`.
pub fn mu_closed(n: u64) -> Result<f64> {
    check_closed_n(n)?;
    let rsp = 1.0 / PI.sqrt();
    Ok(match n {
        2 => 2.0 * rsp,
        3 => 3.0 * rsp,
        4 => 6.0 * rsp * (1.0 - 2.0 * s_k(2.0)?),
        5 => 10.0 * rsp * (1.0 - 3.0 * s_k(2.0)?),
        _ => {
            let c = constants()?;
            if n == 6 {
                15.0 * rsp * (1.0 - 4.0 * c.s2 + 2.0 * c.t2)
            } else {
                21.0 * rsp * (1.0 - 5.0 * c.s2 + 5.0 * c.t2)
            }
        }
    })
}

/// `E(r_n²)` from the exact expressions, `2 <= n <= 7`.
pub fn nu_closed(n: u64) -> Result<f64> {
    check_closed_n(n)?;
    let r3 = 3f64.sqrt();
    let inner = match n {
        2 => 0.0,
        3 => 3.0 * r3 / (2.0 * PI),
        4 => (3.0 + r3) / PI,
        5 => 5.0 * r3 / (2.0 * PI) + 30.0 / PI * s_k(0.5)? - 5.0 * r3 / PI * s_k(3.0)?,
        6 => {
            5.0 * (9.0 + 2.0 * r3) / (2.0 * PI) - 90.0 / PI * s_k(2.0)? - 15.0 * r3 / PI * s_k(3.0)?
        }
        _ => {
            let c = constants()?;
            35.0 * r3 / (4.0 * PI) + 210.0 / PI * c.s_half
                - 105.0 / PI * c.s2
                - 35.0 * r3 / PI * c.s3
                + 35.0 * r3 / (2.0 * PI) * c.t3
                + 210.0 / PI * c.u
                - 420.0 / PI * c.v
        }
    };
    Ok(2.0 * (1.0 + inner))
}
