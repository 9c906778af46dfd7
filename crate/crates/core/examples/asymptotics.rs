//! Large-n expansions against exact values, and the limit law of the range.

use meanwidth::asymptotics::{
    a_n, a_n_expansion, a_n_residual, limit_density_moment, limit_mean, limit_range_density,
    limit_second_moment, mu_asymptotic, simplex_mean_width_asymptotic, simplex_mean_width_leading,
};
use meanwidth::orderstats::mu_quadrature;
use meanwidth::quad::QuadConfig;
use meanwidth::widths::{simplex_mean_width, Source};

fn main() -> meanwidth::Result<()> {
    let cfg = QuadConfig::default();
    println!(
        "{:>6}{:>14}{:>14}{:>14}{:>14}",
        "n", "a_n", "expansion", "mu err", "E(w) err"
    );
    for n in [10u64, 20, 50, 100, 200, 400] {
        let nf = n as f64;
        let mu_err = mu_asymptotic(nf)? / mu_quadrature(n, cfg)? - 1.0;
        let w_err = simplex_mean_width_asymptotic(nf)?
            / simplex_mean_width(n, Source::Quadrature(cfg))?
            - 1.0;
        println!(
            "{n:>6}{:>14.8}{:>14.8}{mu_err:>14.4e}{w_err:>14.4e}",
            a_n(nf)?,
            a_n_expansion(nf)?
        );
    }
    println!("\nlarge n (expansions only)");
    for n in [1e4, 1e6, 1e9, 1e12] {
        println!(
            "n = {n:e}: a_n = {:.10} (residual {:.1e}), E(w) ~ {:.6e}, leading {:.6e}",
            a_n(n)?,
            a_n_residual(n)?,
            simplex_mean_width_asymptotic(n)?,
            simplex_mean_width_leading(n)?
        );
    }
    let tight = QuadConfig::new(1e-14, 1e-13, 2000)?;
    println!("\nlimit density 2e^-y K0(2e^-y/2)");
    println!("mass   {:.15}", limit_density_moment(0, tight)?.value);
    println!(
        "mean   {:.15}  (2 gamma = {:.15})",
        limit_density_moment(1, tight)?.value,
        limit_mean()
    );
    println!(
        "second {:.15}  (pi^2/3 + 4 gamma^2 = {:.15})",
        limit_density_moment(2, tight)?.value,
        limit_second_moment()
    );
    for y in [-2.0, 0.0, 1.0, 2.0, 5.0, 10.0] {
        println!("p({y:>5}) = {:.12}", limit_range_density(y));
    }
    Ok(())
}
