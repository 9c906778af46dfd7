//! Scalar special functions: the standard normal law, `arcsec`, the
//! principal Lambert W branch, the modified Bessel function `K0`, and
//! gamma-function ratios that stay finite for very large arguments.
//!
//! `erf`, `erfc` and `lgamma` come from the `libm` port of the musl/FreeBSD
//! math library; everything else is evaluated here.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use crate::error::{domain, Error, Result};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_61;

const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_677_94;

/// Standard normal density.
pub fn normal_pdf(x: f64) -> f64 {
    FRAC_1_SQRT_2PI * (-0.5 * x * x).exp()
}

/// Standard normal distribution function `½ erf(x/√2) + ½`.
///
/// Evaluated as `½ erfc(−x/√2)` so the lower tail keeps full relative
/// precision; use `normal_cdf(-x)` for an accurate upper tail.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
}

pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// Principal `arcsec` on `[1, ∞)`, i.e. `arccos(1/x)`.
pub fn arcsec(x: f64) -> Result<f64> {
    if x.is_nan() || x < 1.0 {
        return domain(format!("arcsec requires x >= 1, got {x}"));
    }
    Ok((1.0 / x).acos())
}

const LAMBERT_MAX_ITER: usize = 50;

/// Principal branch `W0` of the Lambert W function on `x >= 0`.
///
/// Halley iteration seeded with `ln(1+x)` below `e` and with
/// `ln x − ln ln x + ln ln x / ln x` above it.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return domain(format!("lambert_w0 requires x >= 0, got {x}"));
    }
    if x.is_infinite() {
        return domain("lambert_w0 requires a finite argument");
    }
    if x == 0.0 {
        return Ok(0.0);
    }

    let mut w = if x < std::f64::consts::E {
        x.ln_1p()
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };

    for _ in 0..LAMBERT_MAX_ITER {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w.abs() {
            return Ok(w);
        }
    }
    Err(Error::NotConverged {
        what: format!("lambert_w0({x})"),
        value: w,
        error_estimate: f64::NAN,
    })
}

/// Modified Bessel function of the second kind, order zero.
pub fn bessel_k0(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return domain(format!("bessel_k0 requires x > 0, got {x}"));
    }
    if x <= 2.0 {
        Ok(k0_series(x))
    } else {
        Ok(k0_scaled_cf(x) * (-x).exp())
    }
}

/// `e^x K0(x)`, finite for every `x > 0`.
pub fn bessel_k0_scaled(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return domain(format!("bessel_k0_scaled requires x > 0, got {x}"));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x <= 2.0 {
        Ok(k0_series(x) * x.exp())
    } else {
        Ok(k0_scaled_cf(x))
    }
}

// K0(x) = −(ln(x/2) + γ) I0(x) + Σ_{k≥1} H_k (x²/4)^k / (k!)²
fn k0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut i0 = 1.0;
    let mut tail = 0.0;
    let mut harmonic = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        tail += term * harmonic;
        if term * harmonic < f64::EPSILON * tail.abs().max(1e-300) {
            break;
        }
    }
    -((0.5 * x).ln() + EULER_GAMMA) * i0 + tail
}

// Steed's continued fraction (Temme's CF2) for K_0, x >= 2; returns e^x K0(x).
fn k0_scaled_cf(x: f64) -> f64 {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < f64::EPSILON {
            break;
        }
    }
    (PI / (2.0 * x)).sqrt() / s
}

/// Natural log of `Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return domain(format!("log_gamma requires x > 0, got {x}"));
    }
    Ok(libm::lgamma(x))
}

/// `Γ(n/2) / Γ((n+1)/2)` for `n >= 1`, safe for `n` in the billions.
pub fn gamma_ratio_half(n: u64) -> Result<f64> {
    if n == 0 {
        return domain("gamma_ratio_half requires n >= 1");
    }
    Ok((-log_gamma_half_step(0.5 * n as f64)).exp())
}

// ln Γ(z + ½) − ln Γ(z). Stirling's series is differenced analytically for
// large z so no large logarithms cancel.
fn log_gamma_half_step(z: f64) -> f64 {
    if z < 60.0 {
        return (libm::tgamma(z + 0.5) / libm::tgamma(z)).ln();
    }
    const COEFFS: [f64; 4] = [1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0];
    let zh = z + 0.5;
    let mut corr = 0.0;
    for (k, c) in COEFFS.iter().enumerate() {
        let p = (2 * k + 1) as i32;
        corr += c * (zh.powi(-p) - z.powi(-p));
    }
    0.5 * z.ln() + (z * (0.5 / z).ln_1p() - 0.5) + corr
}

/// Mean of the chi distribution with `n` degrees of freedom,
/// `√2 Γ((n+1)/2) / Γ(n/2)`.
pub fn chi_mean(n: u64) -> Result<f64> {
    Ok(SQRT_2 / gamma_ratio_half(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate, integrate_real_line, integrate_semi_infinite, QuadConfig};

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn pdf_values() {
        assert!((normal_pdf(0.0) - 0.398_942_280_401_432_7).abs() < 1e-16);
        assert_eq!(normal_pdf(1.0), normal_pdf(-1.0));
        assert!(rel(normal_pdf(2.0), 0.053_990_966_513_188_06) < 1e-15);
        assert_eq!(normal_pdf(1e3), 0.0);
    }

    #[test]
    fn cdf_values() {
        assert_eq!(normal_cdf(0.0), 0.5);
        assert_eq!(normal_cdf(f64::INFINITY), 1.0);
        assert_eq!(normal_cdf(f64::NEG_INFINITY), 0.0);
        // oracle: quadrature of the density up to 1
        let oracle = integrate_semi_infinite(|t| normal_pdf(1.0 - t), 0.0, QuadConfig::default())
            .unwrap()
            .value;
        assert!((oracle - 0.841_344_746_068_542_9).abs() < 1e-14);
        assert!((normal_cdf(1.0) - oracle).abs() < 1e-14);
    }

    #[test]
    fn cdf_symmetry() {
        let mut x = -8.0;
        while x <= 8.0 {
            assert!(
                (normal_cdf(x) + normal_cdf(-x) - 1.0).abs() <= 1e-15,
                "x = {x}"
            );
            x += 0.01;
        }
    }

    #[test]
    fn cdf_monotone() {
        let mut prev = 0.0;
        for i in -4000..=4000 {
            let v = normal_cdf(i as f64 * 0.002);
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn arcsec_values() {
        assert_eq!(arcsec(1.0).unwrap(), 0.0);
        assert!((arcsec(2.0).unwrap() - PI / 3.0).abs() < 1e-15);
        assert!((arcsec(3.0).unwrap() - 1.230_959_417_340_774_7).abs() < 1e-15);
        assert!(matches!(arcsec(0.5), Err(Error::Domain(_))));
        let mut prev = -1.0;
        for i in 0..1000 {
            let v = arcsec(1.0 + i as f64 * 0.37).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    fn bisect_w(x: f64) -> f64 {
        let (mut lo, mut hi) = (0.0_f64, x.max(1.0));
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid * mid.exp() < x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn lambert_values() {
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        assert!((lambert_w0(std::f64::consts::E).unwrap() - 1.0).abs() < 1e-15);
        let oracle = bisect_w(10.0);
        assert!((oracle - 1.745_528_002_740_699_4).abs() < 1e-14);
        assert!(rel(lambert_w0(10.0).unwrap(), oracle) < 1e-15);
        assert!(matches!(lambert_w0(-0.1), Err(Error::Domain(_))));
    }

    #[test]
    fn lambert_round_trip() {
        for i in 0..=56 {
            let x = 10f64.powf(-6.0 + 0.25 * i as f64);
            let w = lambert_w0(x).unwrap();
            assert!(rel(w * w.exp(), x) <= 1e-13, "x = {x}");
            assert!(rel(w, bisect_w(x)) < 1e-12, "x = {x}");
        }
    }

    // K0(x) = ∫_0^∞ exp(−x cosh t) dt; the integrand underflows past `upper`.
    fn k0_oracle(x: f64) -> f64 {
        let cfg = QuadConfig::new(1e-300, 5e-14, 4000).unwrap();
        let upper = (1600.0 / x).ln() + 1.0;
        integrate(|t| (-x * t.cosh()).exp(), 0.0, upper, cfg)
            .unwrap()
            .value
    }

    #[test]
    fn k0_values() {
        assert!(rel(bessel_k0(1.0).unwrap(), 0.421_024_438_240_708_34) < 1e-14);
        assert!(rel(bessel_k0(0.1).unwrap(), 2.427_069_024_702_016_6) < 1e-14);
        assert!(matches!(bessel_k0(0.0), Err(Error::Domain(_))));
        for x in [1e-3, 1e-6, 1e-9] {
            let lead = bessel_k0(x).unwrap() + (0.5 * x).ln() + EULER_GAMMA;
            assert!(lead.abs() < 2.0 * x, "x = {x}");
        }
    }

    #[test]
    fn k0_matches_integral() {
        for i in 0..20 {
            let x = 0.1 + (10.0 - 0.1) * i as f64 / 19.0;
            let o = k0_oracle(x);
            assert!(rel(bessel_k0(x).unwrap(), o) < 1e-10, "x = {x}");
        }
    }

    #[test]
    fn k0_accuracy_across_split() {
        for &x in &[1e-6, 0.01, 0.5, 1.9, 2.0, 2.1, 3.0, 7.5, 15.0, 30.0, 50.0] {
            let o = k0_oracle(x);
            assert!(rel(bessel_k0(x).unwrap(), o) < 1e-12, "x = {x}");
            let s = bessel_k0_scaled(x).unwrap() * (-x).exp();
            assert!(rel(s, o) < 1e-12, "scaled x = {x}");
        }
    }

    #[test]
    fn gamma_ratio_small() {
        assert!(rel(gamma_ratio_half(1).unwrap(), PI.sqrt()) < 1e-15);
        assert!(rel(gamma_ratio_half(2).unwrap(), 2.0 / PI.sqrt()) < 1e-15);
        assert!(gamma_ratio_half(0).is_err());
        assert!(log_gamma(0.0).is_err());
        assert!((log_gamma(5.0).unwrap() - 24f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn gamma_ratio_recurrence_across_switch() {
        // Γ(z)/Γ(z+½) · Γ(z+½)/Γ(z+1) = 1/z
        for n in 1..140u64 {
            let r = gamma_ratio_half(n).unwrap() * gamma_ratio_half(n + 1).unwrap();
            assert!(rel(r, 2.0 / n as f64) < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn gamma_ratio_stirling() {
        let n = 1_000_000u64;
        let r = gamma_ratio_half(n).unwrap() * (n as f64 / 2.0).sqrt();
        assert!((r - 1.0).abs() < 1e-6);
        // Γ(z)/Γ(z+½) ≈ z^{-½}(1 + 1/(8z) + 1/(128z²))
        for n in [1_000u64, 1_000_000, 10_000_000] {
            let z = n as f64 / 2.0;
            let oracle = z.powf(-0.5) * (1.0 + 1.0 / (8.0 * z) + 1.0 / (128.0 * z * z));
            assert!(rel(gamma_ratio_half(n).unwrap(), oracle) < 1e-10, "n = {n}");
        }
    }

    #[test]
    fn chi_mean_values() {
        assert!(rel(chi_mean(1).unwrap(), (2.0 / PI).sqrt()) < 1e-15);
        assert!(rel(chi_mean(2).unwrap(), (PI / 2.0).sqrt()) < 1e-15);
        let c = chi_mean(100).unwrap();
        assert!(c > 99f64.sqrt() && c < 10.0);
        for n in 1..2000u64 {
            let p = chi_mean(n).unwrap() * gamma_ratio_half(n).unwrap();
            assert!((p - SQRT_2).abs() <= 1e-14, "n = {n}");
        }
    }

    #[test]
    fn chi_mean_monte_carlo() {
        use rand::SeedableRng;
        use rand_distr::{Distribution, StandardNormal};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let n = 100;
        let draws = 200_000;
        let (mut s, mut s2) = (0.0, 0.0);
        for _ in 0..draws {
            let r: f64 = (0..n)
                .map(|_| {
                    let z: f64 = StandardNormal.sample(&mut rng);
                    z * z
                })
                .sum::<f64>()
                .sqrt();
            s += r;
            s2 += r * r;
        }
        let mean = s / draws as f64;
        let sd = (s2 / draws as f64 - mean * mean).sqrt();
        let se = sd / (draws as f64).sqrt();
        assert!((mean - chi_mean(n).unwrap()).abs() < 4.0 * se);
    }

    #[test]
    fn pdf_integrates_to_one() {
        let r = integrate_real_line(normal_pdf, QuadConfig::default()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-13);
        let r = integrate(normal_pdf, -1.0, 1.0, QuadConfig::default()).unwrap();
        assert!((r.value - libm::erf(FRAC_1_SQRT_2)).abs() < 1e-14);
    }
}
