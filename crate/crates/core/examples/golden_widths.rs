//! Mean widths of the unit-edge simplex, cube and crosspolytope.
//!
//! `cargo run --example golden_widths -- 12` prints dimensions up to 12.

use meanwidth::quad::QuadConfig;
use meanwidth::widths::{Family, Source, WidthReport};

fn main() -> meanwidth::Result<()> {
    let max_n: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    println!(
        "{:<14}{:>4}{:>20}{:>20}{:>18}",
        "family", "n", "E(w)", "E(w^2)", "provenance"
    );
    for family in [Family::Simplex, Family::Cube, Family::Crosspolytope] {
        for n in 1..=max_n {
            if family == Family::Crosspolytope && n == 1 {
                continue;
            }
            let source = if family == Family::Simplex && n > 6 {
                Source::Quadrature(QuadConfig::default())
            } else {
                Source::Closed
            };
            let r = WidthReport::compute(family, n, source)?;
            let sq = r
                .mean_sq_width
                .map(|v| format!("{v:.15}"))
                .unwrap_or_else(|| "-".into());
            let prov = r
                .mean_sq_provenance
                .map(|p| format!("{p:?}"))
                .unwrap_or_default();
            println!(
                "{:<14}{n:>4}{:>20.15}{sq:>20}{prov:>18}",
                family.name(),
                r.mean_width
            );
        }
    }

    println!("\nsimplex rescaled to unit circumradius / unit inradius");
    for n in [2u64, 3, 5, 10, 50, 200] {
        let r = WidthReport::compute(
            Family::Simplex,
            n,
            Source::Quadrature(QuadConfig::default()),
        )?;
        println!(
            "{n:>4}{:>20.12}{:>20.12}",
            r.mean_width_circumscaled, r.mean_width_inscaled
        );
    }
    Ok(())
}
