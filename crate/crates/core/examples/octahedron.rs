//! The regular octahedron: exact constants, sphere quadrature of the
//! six-ball diameter function, and the sector reconstruction.

use std::f64::consts::FRAC_PI_4;

use meanwidth::geom::{
    octa_g, octa_mean_sq_width_exact, octa_mean_width_exact, octa_phi_boundary,
    octa_sector_mean_sq, octa_sphere_integral,
};
use meanwidth::quad::QuadConfig;
use meanwidth::widths::crosspolytope_mean_width;

fn main() -> meanwidth::Result<()> {
    let cfg = QuadConfig::default();
    let w = octa_sphere_integral(1, cfg)?;
    let w2 = octa_sphere_integral(2, cfg)?;
    println!(
        "mean width   exact {:.17}  sphere {:.17}  crosspolytope {:.17}",
        octa_mean_width_exact(),
        w.value,
        crosspolytope_mean_width(3, cfg)?
    );
    println!(
        "mean square  exact {:.17}  sphere {:.17}",
        octa_mean_sq_width_exact(),
        w2.value
    );

    let s = octa_sector_mean_sq(cfg)?;
    println!(
        "sector: integral {:.17}, factor {}, reconstruction {:.17}",
        s.sector_integral, s.symmetry_factor, s.value
    );
    println!(
        "phi(0) = {:.10}, phi(pi/4) = {:.10}",
        octa_phi_boundary(0.0)?,
        octa_phi_boundary(FRAC_PI_4)?
    );

    let r = 1.0 / 3f64.sqrt();
    println!(
        "\nwidth toward a vertex {:.15}",
        (octa_g(1.0, 0.0, 0.0)? / 2.0).sqrt()
    );
    println!(
        "width toward a face   {:.15}",
        (octa_g(r, r, r)? / 2.0).sqrt()
    );
    println!(
        "width toward an edge  {:.15}",
        (octa_g(0.5f64.sqrt(), 0.5f64.sqrt(), 0.0)? / 2.0).sqrt()
    );
    Ok(())
}
