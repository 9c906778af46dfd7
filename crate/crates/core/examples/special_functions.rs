//! The scalar special functions underneath everything else.

use meanwidth::specfn::{
    arcsec, bessel_k0, chi_mean, gamma_ratio_half, lambert_w0, normal_cdf, normal_pdf,
};

fn main() -> meanwidth::Result<()> {
    for x in [-8.0, -2.0, 0.0, 1.0, 2.0, 8.0] {
        println!(
            "x = {x:>5}: pdf {:.16e}  cdf {:.16e}",
            normal_pdf(x),
            normal_cdf(x)
        );
    }
    println!("arcsec(4) = {:.17}", arcsec(4.0)?);
    for x in [0.1, 1.0, std::f64::consts::E, 1e3, 1e20] {
        let w = lambert_w0(x)?;
        println!(
            "W({x:e}) = {w:.16}  (relative residual {:.1e})",
            w * w.exp() / x - 1.0
        );
    }
    for x in [0.01, 0.5, 2.0, 2.0000001, 10.0, 50.0] {
        println!("K0({x}) = {:.16e}", bessel_k0(x)?);
    }
    for n in [1u64, 2, 3, 10, 100, 10_000] {
        let r = gamma_ratio_half(n)?;
        println!(
            "n = {n:>6}: Γ(n/2)/Γ((n+1)/2) = {r:.16e}, chi mean = {:.16}",
            chi_mean(n)?
        );
    }
    Ok(())
}
