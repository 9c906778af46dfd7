//! The constants in the closed forms of the range moments, each by two routes.

use meanwidth::orderstats::{
    constants_config, s_k, s_k_integral, t_k, t_k_double, u_const, v_const, RangeConstants,
};
use meanwidth::quad::QuadConfig;

fn main() -> meanwidth::Result<()> {
    let cfg = constants_config();
    let c = RangeConstants::compute(cfg)?;
    for (name, k) in [("S_1/2", 0.5), ("S_2", 2.0), ("S_3", 3.0)] {
        println!(
            "{name:<6} arcsec {:.17}  integral {:.17}",
            s_k(k)?,
            s_k_integral(k, cfg)?
        );
    }
    for (name, k) in [("T_2", 2.0), ("T_3", 3.0)] {
        // the iterated double integral cannot reach the constants tolerance
        let double = t_k_double(k, QuadConfig::default())?;
        println!(
            "{name:<6} single {:.17}  double   {double:.17}",
            t_k(k, cfg)?
        );
    }
    println!("U      {:.17}", u_const(cfg)?);
    println!("V      {:.17}", v_const(cfg)?);
    println!("\n{c:#?}");
    Ok(())
}
