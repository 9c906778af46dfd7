//! First and second moments of the range of `n` standard normal samples.

use meanwidth::orderstats::{range_moments, MomentMethod};
use meanwidth::quad::QuadConfig;

fn main() -> meanwidth::Result<()> {
    let cfg = QuadConfig::default();
    println!(
        "{:>4}{:>22}{:>22}{:>14}{:>14}",
        "n", "mu_n", "nu_n", "|closed-mu|", "|closed-nu|"
    );
    for n in 2..=12u64 {
        let q = range_moments(n, MomentMethod::Quadrature, cfg)?;
        let (dm, dv) = match range_moments(n, MomentMethod::ClosedForm, cfg) {
            Ok(c) => (
                format!("{:.1e}", (c.mu - q.mu).abs()),
                format!("{:.1e}", (c.nu - q.nu).abs()),
            ),
            Err(_) => ("-".into(), "-".into()),
        };
        println!("{n:>4}{:>22.16}{:>22.16}{dm:>14}{dv:>14}", q.mu, q.nu);
    }
    let big = range_moments(500, MomentMethod::Quadrature, cfg)?;
    println!(
        "\nn = 500: mu = {:.12}, standard deviation = {:.12}",
        big.mu,
        big.variance().sqrt()
    );
    Ok(())
}
