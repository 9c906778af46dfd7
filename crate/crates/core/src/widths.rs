//! Mean width and mean square width of the unit-edge regular simplex,
//! cube and crosspolytope.
//!
//! The simplex values come from the range of `n + 1` normal samples:
//! `E(w_n) = ½ Γ(n/2)/Γ((n+1)/2) μ_{n+1}` and `E(w_n²) = ν_{n+1}/(2n)`.
//! An independent single-integral route ([`simplex_mean_width_hz`]) checks
//! the first of these.

use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::orderstats::{mu_closed, mu_quadrature, nu_closed, nu_quadrature};
use crate::quad::{integrate_real_line, integrate_semi_infinite, QuadConfig};
use crate::specfn::{erfc, gamma_ratio_half};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Simplex,
    Cube,
    Crosspolytope,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Simplex => "simplex",
            Family::Cube => "cube",
            Family::Crosspolytope => "crosspolytope",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simplex" => Ok(Family::Simplex),
            "cube" => Ok(Family::Cube),
            "crosspolytope" | "cross" => Ok(Family::Crosspolytope),
            other => domain(format!("unknown family '{other}'")),
        }
    }
}

/// Whether a value rests on a proved identity, on a relation the source
/// literature only conjectures, or on simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Theorem,
    PaperConjecture,
    MonteCarlo,
}

/// Where the range moments feeding the simplex formulas come from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Source {
    Closed,
    Quadrature(QuadConfig),
}

impl Source {
    pub fn quadrature() -> Self {
        Source::Quadrature(QuadConfig::default())
    }

    fn mu(self, m: u64) -> Result<f64> {
        match self {
            Source::Closed => mu_closed(m),
            Source::Quadrature(cfg) => mu_quadrature(m, cfg),
        }
    }

    fn nu(self, m: u64) -> Result<f64> {
        match self {
            Source::Closed => nu_closed(m),
            Source::Quadrature(cfg) => nu_quadrature(m, cfg),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scaling {
    Circumradius,
    Inradius,
}

fn check_n(n: u64, min: u64, what: &str) -> Result<()> {
    if n < min {
        domain(format!("{what} requires n >= {min}, got {n}"))
    } else {
        Ok(())
    }
}

pub fn simplex_circumradius(n: u64) -> Result<f64> {
    check_n(n, 1, "simplex")?;
    let n = n as f64;
    Ok((n / (2.0 * (n + 1.0))).sqrt())
}

pub fn simplex_inradius(n: u64) -> Result<f64> {
    check_n(n, 1, "simplex")?;
    let n = n as f64;
    Ok((1.0 / (2.0 * n * (n + 1.0))).sqrt())
}

/// `E(w_n) = ½ Γ(n/2)/Γ((n+1)/2) μ_{n+1}`.
pub fn simplex_mean_width(n: u64, source: Source) -> Result<f64> {
    check_n(n, 1, "simplex")?;
    Ok(0.5 * gamma_ratio_half(n)? * source.mu(n + 1)?)
}

/// Mean width from `n(n+1)/(√2π) Γ(n/2)/Γ((n+1)/2) ∫ e^{−2x²} ((1+erf x)/2)^{n−1} dx`.
pub fn simplex_mean_width_hz(n: u64, cfg: QuadConfig) -> Result<f64> {
    check_n(n, 1, "simplex")?;
    let p = (n - 1) as i32;
    let r = integrate_real_line(
        |x| {
            let e = (-2.0 * x * x).exp();
            if e == 0.0 {
                return 0.0;
            }
            e * (0.5 * erfc(-x)).powi(p)
        },
        cfg,
    )?;
    let nf = n as f64;
    Ok(nf * (nf + 1.0) / (SQRT_2 * PI) * gamma_ratio_half(n)? * r.value)
}

/// `E(w_n²) = ν_{n+1} / (2n)`.
pub fn simplex_mean_sq_width(n: u64, source: Source) -> Result<f64> {
    check_n(n, 1, "simplex")?;
    Ok(source.nu(n + 1)? / (2.0 * n as f64))
}

/// The mean-square relation is confirmed only up to dimension six.
pub fn simplex_mean_sq_provenance(n: u64) -> Provenance {
    if n <= 6 {
        Provenance::Theorem
    } else {
        Provenance::PaperConjecture
    }
}

/// Mean width after rescaling the simplex to unit circumradius or inradius.
pub fn simplex_scaled_mean_width(n: u64, scaling: Scaling, source: Source) -> Result<f64> {
    let w = simplex_mean_width(n, source)?;
    let r = match scaling {
        Scaling::Circumradius => simplex_circumradius(n)?,
        Scaling::Inradius => simplex_inradius(n)?,
    };
    Ok(w / r)
}

/// `E(w) = (n/√π) Γ(n/2)/Γ((n+1)/2)` for the unit cube `[0,1]^n`.
pub fn cube_mean_width(n: u64) -> Result<f64> {
    check_n(n, 1, "cube")?;
    Ok(n as f64 / PI.sqrt() * gamma_ratio_half(n)?)
}

/// `E(w²) = 1 + 2(n−1)/π`.
pub fn cube_mean_sq_width(n: u64) -> Result<f64> {
    check_n(n, 1, "cube")?;
    Ok(1.0 + 2.0 * (n - 1) as f64 / PI)
}

/// `E(w) = 2√2 n(n−1)/π · Γ(n/2)/Γ((n+1)/2) ∫_0^∞ e^{−2x²} erf(x)^{n−2} dx`.
///
/// The segment `n = 1` is excluded: the formula degenerates to zero there.
pub fn crosspolytope_mean_width(n: u64, cfg: QuadConfig) -> Result<f64> {
    if n < 2 {
        return domain(format!(
            "crosspolytope mean-width formula requires n >= 2 (it vanishes at n = 1), got {n}"
        ));
    }
    let p = n - 2;
    let r = if n > 60 {
        let pf = p as f64;
        integrate_semi_infinite(
            |x| {
                let t = -2.0 * x * x + pf * (-erfc(x)).ln_1p();
                if t.is_nan() {
                    0.0
                } else {
                    t.exp()
                }
            },
            0.0,
            cfg,
        )?
    } else {
        let p = p as i32;
        integrate_semi_infinite(|x| (-2.0 * x * x).exp() * (1.0 - erfc(x)).powi(p), 0.0, cfg)?
    };
    let nf = n as f64;
    Ok(2.0 * SQRT_2 * nf * (nf - 1.0) / PI * gamma_ratio_half(n)? * r.value)
}

pub fn circumradius(family: Family, n: u64) -> Result<f64> {
    match family {
        Family::Simplex => simplex_circumradius(n),
        Family::Cube => {
            check_n(n, 1, "cube")?;
            Ok(0.5 * (n as f64).sqrt())
        }
        Family::Crosspolytope => {
            check_n(n, 1, "crosspolytope")?;
            Ok(1.0 / SQRT_2)
        }
    }
}

pub fn inradius(family: Family, n: u64) -> Result<f64> {
    match family {
        Family::Simplex => simplex_inradius(n),
        Family::Cube => {
            check_n(n, 1, "cube")?;
            Ok(0.5)
        }
        Family::Crosspolytope => {
            check_n(n, 1, "crosspolytope")?;
            Ok(1.0 / (2.0 * n as f64).sqrt())
        }
    }
}

/// Everything known about one unit-edge polytope.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WidthReport {
    pub family: Family,
    pub n: u64,
    pub mean_width: f64,
    pub mean_sq_width: Option<f64>,
    pub mean_sq_provenance: Option<Provenance>,
    pub circumradius: f64,
    pub inradius: f64,
    pub mean_width_circumscaled: f64,
    pub mean_width_inscaled: f64,
}

impl WidthReport {
    /// Simplex and cube take their moments from `source`; the crosspolytope
    /// always integrates with the configuration inside `source` (or the
    /// default one for `Source::Closed`).
    pub fn compute(family: Family, n: u64, source: Source) -> Result<Self> {
        let (mean_width, mean_sq) = match family {
            Family::Simplex => (
                simplex_mean_width(n, source)?,
                Some((
                    simplex_mean_sq_width(n, source)?,
                    simplex_mean_sq_provenance(n),
                )),
            ),
            Family::Cube => (
                cube_mean_width(n)?,
                Some((cube_mean_sq_width(n)?, Provenance::PaperConjecture)),
            ),
            Family::Crosspolytope => {
                let cfg = match source {
                    Source::Closed => QuadConfig::default(),
                    Source::Quadrature(cfg) => cfg,
                };
                (crosspolytope_mean_width(n, cfg)?, None)
            }
        };
        let circumradius = circumradius(family, n)?;
        let inradius = inradius(family, n)?;
        Ok(Self {
            family,
            n,
            mean_width,
            mean_sq_width: mean_sq.map(|m| m.0),
            mean_sq_provenance: mean_sq.map(|m| m.1),
            circumradius,
            inradius,
            mean_width_circumscaled: mean_width / circumradius,
            mean_width_inscaled: mean_width / inradius,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MEAN: [f64; 5] = [
        0.954929658551372,
        0.912260171954089,
        0.874843256085440,
        0.842274297659162,
        0.813743951590337,
    ];
    const MEAN_SQ: [f64; 5] = [
        0.913496671566344,
        0.835419517991054,
        0.769572883591771,
        0.714241915072694,
        0.667314714095430,
    ];

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn radii() {
        assert_eq!(simplex_circumradius(1).unwrap(), 0.5);
        assert!((simplex_circumradius(3).unwrap() - 0.612_372_435_695_794_5).abs() < 1e-15);
        assert!((simplex_inradius(3).unwrap() - 0.204_124_145_231_931_54).abs() < 1e-15);
        assert!(simplex_inradius(0).is_err());
    }

    #[test]
    fn printed_simplex_values() {
        for n in 2..=6u64 {
            let i = (n - 2) as usize;
            assert!(
                (simplex_mean_width(n, Source::Closed).unwrap() - MEAN[i]).abs() < 1e-12,
                "n = {n}"
            );
            assert!(
                (simplex_mean_sq_width(n, Source::Closed).unwrap() - MEAN_SQ[i]).abs() < 1e-12,
                "n = {n}"
            );
        }
        assert!((simplex_mean_width(2, Source::Closed).unwrap() - 3.0 / PI).abs() < 1e-15);
        assert!((simplex_mean_width(1, Source::Closed).unwrap() - 1.0).abs() < 1e-15);
        assert!((simplex_mean_sq_width(1, Source::Closed).unwrap() - 1.0).abs() < 1e-15);
        assert!(simplex_mean_width(7, Source::Closed).is_err());
    }

    #[test]
    fn hz_route() {
        assert!((simplex_mean_width_hz(1, cfg()).unwrap() - 1.0).abs() < 1e-13);
        assert!((simplex_mean_width_hz(3, cfg()).unwrap() - MEAN[1]).abs() < 1e-12);
        assert!((simplex_mean_width_hz(4, cfg()).unwrap() - MEAN[2]).abs() < 1e-12);
        for n in 1..=50u64 {
            let a = simplex_mean_width(n, Source::quadrature()).unwrap();
            let b = simplex_mean_width_hz(n, cfg()).unwrap();
            assert!((a - b).abs() <= 1e-10, "n = {n}: {a} vs {b}");
        }
    }

    #[test]
    fn quadrature_matches_closed() {
        for n in 1..=6u64 {
            let a = simplex_mean_sq_width(n, Source::Closed).unwrap();
            let b = simplex_mean_sq_width(n, Source::quadrature()).unwrap();
            assert!((a - b).abs() < 1e-9, "n = {n}");
        }
    }

    #[test]
    fn scaled_widths() {
        let c2 = simplex_scaled_mean_width(2, Scaling::Circumradius, Source::Closed).unwrap();
        assert!((c2 - 3.0 * 3f64.sqrt() / PI).abs() < 1e-14);
        let c3 = simplex_scaled_mean_width(3, Scaling::Circumradius, Source::Closed).unwrap();
        assert!((c3 - MEAN[1] / (3.0f64 / 8.0).sqrt()).abs() < 1e-12);
        for n in 1..=6u64 {
            let i = simplex_scaled_mean_width(n, Scaling::Inradius, Source::Closed).unwrap();
            let c = simplex_scaled_mean_width(n, Scaling::Circumradius, Source::Closed).unwrap();
            assert!((i / c - n as f64).abs() < 1e-13);
        }
    }

    #[test]
    fn cube_values() {
        assert!((cube_mean_width(1).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(cube_mean_sq_width(1).unwrap(), 1.0);
        assert!((cube_mean_width(3).unwrap() - 1.5).abs() < 1e-15);
        assert!((cube_mean_sq_width(2).unwrap() - 1.636_619_772_367_581_4).abs() < 1e-15);
    }

    #[test]
    fn planar_cauchy() {
        // perimeter / π
        assert!((simplex_mean_width(2, Source::Closed).unwrap() - 3.0 / PI).abs() < 1e-14);
        assert!((cube_mean_width(2).unwrap() - 4.0 / PI).abs() < 1e-14);
        assert!((crosspolytope_mean_width(2, cfg()).unwrap() - 4.0 / PI).abs() < 1e-13);
    }

    #[test]
    fn crosspolytope_values() {
        let w3 = crosspolytope_mean_width(3, cfg()).unwrap();
        assert!((w3 - 3.0 / PI * (1.0f64 / 3.0).acos()).abs() < 1e-12);
        assert!((w3 - 1.175_479_656_091_821_8).abs() < 1e-12);
        assert!(crosspolytope_mean_width(1, cfg()).is_err());
        // the two integrand forms agree where they overlap
        let direct = |n: u64| {
            let p = (n - 2) as i32;
            let r = integrate_semi_infinite(
                |x| (-2.0 * x * x).exp() * (1.0 - erfc(x)).powi(p),
                0.0,
                cfg(),
            )
            .unwrap();
            let nf = n as f64;
            2.0 * SQRT_2 * nf * (nf - 1.0) / PI * gamma_ratio_half(n).unwrap() * r.value
        };
        for n in [61u64, 80, 200] {
            let a = crosspolytope_mean_width(n, cfg()).unwrap();
            assert!((a - direct(n)).abs() < 1e-11, "n = {n}");
        }
    }

    #[test]
    fn simplex_decreasing() {
        for n in 2..6u64 {
            assert!(
                simplex_mean_width(n, Source::Closed).unwrap()
                    > simplex_mean_width(n + 1, Source::Closed).unwrap()
            );
        }
    }

    #[test]
    fn jensen_everywhere() {
        for n in 1..=20u64 {
            let r = WidthReport::compute(Family::Simplex, n, Source::quadrature()).unwrap();
            assert!(
                r.mean_sq_width.unwrap() >= r.mean_width * r.mean_width,
                "simplex {n}"
            );
            let r = WidthReport::compute(Family::Cube, n, Source::Closed).unwrap();
            assert!(
                r.mean_sq_width.unwrap() >= r.mean_width * r.mean_width,
                "cube {n}"
            );
        }
    }

    #[test]
    fn report_provenance() {
        let r = WidthReport::compute(Family::Simplex, 4, Source::Closed).unwrap();
        assert_eq!(r.mean_sq_provenance, Some(Provenance::Theorem));
        let r = WidthReport::compute(Family::Simplex, 8, Source::quadrature()).unwrap();
        assert_eq!(r.mean_sq_provenance, Some(Provenance::PaperConjecture));
        let r = WidthReport::compute(Family::Cube, 3, Source::Closed).unwrap();
        assert_eq!(r.mean_sq_provenance, Some(Provenance::PaperConjecture));
        let r = WidthReport::compute(Family::Crosspolytope, 3, Source::Closed).unwrap();
        assert!(r.mean_sq_width.is_none());
        assert!((r.mean_width_inscaled / r.mean_width_circumscaled - 3f64.sqrt()).abs() < 1e-14);
        assert!("tesseract".parse::<Family>().is_err());
    }
}
