//! The regular octahedron, worked through the six-ball model.
//!
//! The diamond has vertices `±e_i` and edge `√2`. Replacing it by the union of
//! the six balls of radius ½ centred at `±e_i/2` leaves its diameters along
//! lines through the origin unchanged. `g(u)` is the squared diameter along
//! `u`, so the unit-edge width is `√(g/2)`.

use std::cell::Cell;
use std::f64::consts::{FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use super::VertexSet;
use crate::error::{domain, Error, Result};
use crate::quad::{integrate, integrate_2d, integrate_pieces, QuadConfig, QuadResult, Region};

const UNIT_TOL: f64 = 1e-9;

/// Vertices `±e_1, ±e_2, ±e_3`.
pub fn diamond_vertices() -> VertexSet {
    let mut vertices = Vec::with_capacity(6);
    for i in 0..3 {
        for s in [1.0, -1.0] {
            let mut v = vec![0.0; 3];
            v[i] = s;
            vertices.push(v);
        }
    }
    VertexSet {
        dimension: 3,
        vertices,
    }
}

/// Squared distances between the six line/ball intersection points, one per
/// distinct pair class, in the order `g_1 … g_9`.
pub fn octa_g_terms(a: f64, b: f64, c: f64) -> [f64; 9] {
    [
        4.0 * a * a,
        1.0 - 2.0 * a * b - c * c,
        1.0 + 2.0 * a * b - c * c,
        1.0 - 2.0 * a * c - b * b,
        1.0 + 2.0 * a * c - b * b,
        4.0 * b * b,
        (b - c) * (b - c),
        (b + c) * (b + c),
        4.0 * c * c,
    ]
}

fn g_unchecked(a: f64, b: f64, c: f64) -> f64 {
    octa_g_terms(a, b, c)
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Squared diameter of the six-ball union along the unit vector `(a, b, c)`.
pub fn octa_g(a: f64, b: f64, c: f64) -> Result<f64> {
    let norm2 = a * a + b * b + c * c;
    if !((norm2 - 1.0).abs() <= UNIT_TOL) {
        return domain(format!(
            "octa_g needs a unit vector, got squared norm {norm2}"
        ));
    }
    Ok(g_unchecked(a, b, c))
}

/// `(3/π) arccos(1/3)`.
pub fn octa_mean_width_exact() -> f64 {
    3.0 / PI * (1.0f64 / 3.0).acos()
}

/// `(2/3)(1 + 2√3/π)`.
pub fn octa_mean_sq_width_exact() -> f64 {
    2.0 / 3.0 * (1.0 + 2.0 * 3f64.sqrt() / PI)
}

/// Average of `f(a, b, c)` over the unit sphere in polar coordinates,
/// `θ ∈ [0, 2π]` outer and `φ ∈ [0, π]` inner.
pub fn sphere_average<F: Fn(f64, f64, f64) -> f64>(f: F, cfg: QuadConfig) -> Result<QuadResult> {
    let r = integrate_2d(
        |phi, theta| {
            let (sp, cp) = phi.sin_cos();
            let (st, ct) = theta.sin_cos();
            f(ct * sp, st * sp, cp) * sp
        },
        Region::Rectangle {
            x: (0.0, PI),
            y: (0.0, 2.0 * PI),
        },
        cfg,
    )?;
    let scale = 1.0 / (4.0 * PI);
    Ok(QuadResult {
        value: r.value * scale,
        error_estimate: r.error_estimate * scale,
        evaluations: r.evaluations,
    })
}

/// Sphere average of `(g/2)^{power/2}`: the mean width for `power = 1`, the
/// mean square width for `power = 2`.
///
/// `g` is only piecewise smooth. For each `θ` the inner `φ` range is cut at
/// the places where the largest of the nine terms changes, located by a grid
/// scan and bisection, and `θ` is cut at multiples of `π/4`.
pub fn octa_sphere_integral(power: u32, cfg: QuadConfig) -> Result<QuadResult> {
    let surface = match power {
        1 => |g: f64| (0.5 * g).sqrt(),
        2 => |g: f64| 0.5 * g,
        p => {
            return domain(format!(
                "octahedron sphere integral power must be 1 or 2, got {p}"
            ))
        }
    };
    cfg.validate()?;
    let inner_cfg = cfg.tighter(10.0);
    let failure: Cell<Option<Error>> = Cell::new(None);
    let inner_evals = Cell::new(0usize);
    let inner = |theta: f64| -> f64 {
        let (st, ct) = theta.sin_cos();
        let f = |phi: f64| {
            let (sp, cp) = phi.sin_cos();
            surface(g_unchecked(ct * sp, st * sp, cp)) * sp
        };
        match integrate_pieces(f, &phi_breaks(theta), inner_cfg) {
            Ok(r) => {
                inner_evals.set(inner_evals.get() + r.evaluations);
                r.value
            }
            Err(e) => {
                failure.set(Some(e));
                0.0
            }
        }
    };
    let theta_breaks: Vec<f64> = (0..=8).map(|k| k as f64 * FRAC_PI_4).collect();
    let outer = integrate_pieces(inner, &theta_breaks, cfg);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let outer = outer?;
    let scale = 1.0 / (4.0 * PI);
    Ok(QuadResult {
        value: outer.value * scale,
        error_estimate: outer.error_estimate * scale,
        evaluations: inner_evals.into_inner(),
    })
}

fn active_term(theta: f64, phi: f64) -> usize {
    let t = octa_g_terms(theta.cos() * phi.sin(), theta.sin() * phi.sin(), phi.cos());
    (0..9).fold(0, |best, k| if t[k] > t[best] { k } else { best })
}

/// `0`, `π` and every `φ` where the active term of `g` switches along the
/// meridian at `θ`.
fn phi_breaks(theta: f64) -> Vec<f64> {
    const GRID: usize = 64;
    let mut breaks = vec![0.0];
    let mut prev = (0.0, active_term(theta, 0.0));
    for i in 1..=GRID {
        let phi = PI * i as f64 / GRID as f64;
        let k = active_term(theta, phi);
        if k != prev.1 {
            let (mut lo, mut hi) = (prev.0, phi);
            while hi - lo > 1e-15 * PI {
                let mid = 0.5 * (lo + hi);
                if active_term(theta, mid) == prev.1 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            breaks.push(0.5 * (lo + hi));
        }
        prev = (phi, k);
    }
    breaks.push(PI);
    breaks
}

fn check_sector_theta(theta: f64) -> Result<()> {
    if (0.0..=FRAC_PI_4).contains(&theta) {
        Ok(())
    } else {
        domain(format!("sector angle must lie in [0, π/4], got {theta}"))
    }
}

/// `h(θ) = cos θ + √((3 + cos 2θ)/2)`.
pub fn octa_h(theta: f64) -> Result<f64> {
    check_sector_theta(theta)?;
    Ok(theta.cos() + ((3.0 + (2.0 * theta).cos()) / 2.0).sqrt())
}

/// Upper edge `φ(θ) = 2 arctan h(θ)` of the sector where `g = g_1`.
pub fn octa_phi_boundary(theta: f64) -> Result<f64> {
    Ok(2.0 * octa_h(theta)?.atan())
}

/// `(1/8π) ∫_{π/2}^{φ(θ)} g_1 sin φ dφ`
/// `= (h⁴ + 4h² + 1)(h² − 1)(1 + cos 2θ) / (6π (1 + h²)³)`.
pub fn octa_sector_value(theta: f64) -> Result<f64> {
    let h = octa_h(theta)?;
    let h2 = h * h;
    Ok(
        (h2 * h2 + 4.0 * h2 + 1.0) * (h2 - 1.0) * (1.0 + (2.0 * theta).cos())
            / (6.0 * PI * (1.0 + h2).powi(3)),
    )
}

/// Antiderivative in `φ` of `g_1 sin φ / 8π`.
pub fn octa_sector_antiderivative(theta: f64, phi: f64) -> f64 {
    (1.0 + (2.0 * theta).cos()) * ((3.0 * phi).cos() - 9.0 * phi.cos()) / (48.0 * PI)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectorReconstruction {
    pub sector_integral: f64,
    pub error_estimate: f64,
    pub symmetry_factor: u32,
    pub value: f64,
}

/// Integrates the sector value over `θ ∈ [0, π/4]` and scales it back to the
/// whole sphere. The factor is the integer nearest `exact / sector`; the
/// reconstruction must then land within `1e-10` of the exact mean square.
pub fn octa_sector_mean_sq(cfg: QuadConfig) -> Result<SectorReconstruction> {
    let r = integrate(
        |t| octa_sector_value(t).unwrap_or(f64::NAN),
        0.0,
        FRAC_PI_4,
        cfg,
    )?;
    let exact = octa_mean_sq_width_exact();
    let ratio = exact / r.value;
    if !(ratio.is_finite() && ratio >= 0.5) {
        return Err(Error::Consistency(format!(
            "sector integral {} cannot be scaled to the exact mean square",
            r.value
        )));
    }
    let factor = ratio.round();
    let value = factor * r.value;
    if (value - exact).abs() > 1e-10 {
        return Err(Error::Consistency(format!(
            "sector reconstruction {value} with factor {factor} misses the exact mean square {exact}"
        )));
    }
    Ok(SectorReconstruction {
        sector_integral: r.value,
        error_estimate: r.error_estimate,
        symmetry_factor: factor as u32,
        value,
    })
}

/// Unit-edge octahedron width along the unit vector `(a, b, c)`.
pub fn octa_width(a: f64, b: f64, c: f64) -> Result<f64> {
    Ok((octa_g(a, b, c)? / 2.0).sqrt())
}
