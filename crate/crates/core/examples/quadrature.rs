//! The adaptive Gauss-Kronrod integrator on finite, semi-infinite,
//! doubly infinite and two-dimensional domains.

use std::f64::consts::PI;

use meanwidth::quad::{
    integrate, integrate_2d, integrate_pieces, integrate_real_line, integrate_semi_infinite,
    QuadConfig, Region,
};

fn main() -> meanwidth::Result<()> {
    let cfg = QuadConfig::default();
    let r = integrate(|x| x.sin(), 0.0, PI, cfg)?;
    println!(
        "∫_0^π sin          = {:.17} (± {:.1e}, {} evaluations)",
        r.value, r.error_estimate, r.evaluations
    );
    let r = integrate_semi_infinite(|x| (-x).exp(), 0.0, cfg)?;
    println!("∫_0^∞ e^-x         = {:.17}", r.value);
    let r = integrate_real_line(|x| (-x * x).exp(), cfg)?;
    println!(
        "∫ e^-x²            = {:.17} (√π = {:.17})",
        r.value,
        PI.sqrt()
    );
    let r = integrate_pieces(|x: f64| (x - 0.3).abs(), &[0.0, 0.3, 1.0], cfg)?;
    println!("∫_0^1 |x - 0.3|    = {:.17} (split at the kink)", r.value);
    let r = integrate_2d(
        |x, y| x * y,
        Region::Rectangle {
            x: (0.0, 1.0),
            y: (0.0, 2.0),
        },
        cfg,
    )?;
    println!("∫∫ xy on [0,1]×[0,2] = {:.17}", r.value);
    let r = integrate_2d(
        |x, y| (-(x * x + y * y) / 2.0).exp() / (2.0 * PI),
        Region::BelowDiagonal,
        cfg,
    )?;
    println!("P(X < Y), X, Y iid normal = {:.17}", r.value);
    Ok(())
}
