//! Support-function sampling against the width formulas.
//!
//! `cargo run --release --example monte_carlo -- 1000000 42` sets the
//! sample count and seed.

use meanwidth::geom::mc_width_moments;
use meanwidth::quad::QuadConfig;
use meanwidth::widths::{
    crosspolytope_mean_width, cube_mean_sq_width, cube_mean_width, simplex_mean_sq_width,
    simplex_mean_width, Family, Source,
};

fn main() -> meanwidth::Result<()> {
    let mut args = std::env::args().skip(1);
    let samples: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(200_000);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let cfg = QuadConfig::default();
    println!("{samples} directions per body, seed {seed}");
    println!(
        "{:<14}{:>3}{:>14}{:>14}{:>8}{:>14}{:>14}{:>8}",
        "body", "n", "E(w) mc", "formula", "z", "E(w^2) mc", "formula", "z"
    );
    for family in [Family::Simplex, Family::Cube, Family::Crosspolytope] {
        for n in 2..=8u64 {
            let (w, w2) = mc_width_moments(family, n as usize, samples, seed)?;
            let (f1, f2) = match family {
                Family::Simplex => {
                    let src = if n <= 6 {
                        Source::Closed
                    } else {
                        Source::Quadrature(cfg)
                    };
                    (
                        simplex_mean_width(n, src)?,
                        Some(simplex_mean_sq_width(n, src)?),
                    )
                }
                Family::Cube => (cube_mean_width(n)?, Some(cube_mean_sq_width(n)?)),
                Family::Crosspolytope => (crosspolytope_mean_width(n, cfg)?, None),
            };
            let z1 = (w.mean - f1) / w.stderr;
            let second = match f2 {
                Some(f) => format!(
                    "{:>14.6}{:>14.6}{:>8.2}",
                    w2.mean,
                    f,
                    (w2.mean - f) / w2.stderr
                ),
                None => format!("{:>14.6}{:>14}{:>8}", w2.mean, "-", "-"),
            };
            println!(
                "{:<14}{n:>3}{:>14.6}{f1:>14.6}{z1:>8.2}{second}",
                family.name(),
                w.mean
            );
        }
    }
    Ok(())
}
