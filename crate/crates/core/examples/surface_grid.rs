//! Writes the octahedron width surface `sqrt(g/2)` over `[0, 2π] × [0, π]`
//! as CSV, through the same code path as `meanwidth surface-grid`.
//!
//! `cargo run --example surface_grid -- 145 73 > surface.csv`

fn main() {
    let mut args = std::env::args().skip(1);
    let theta_steps = args.next().unwrap_or_else(|| "73".into());
    let phi_steps = args.next().unwrap_or_else(|| "37".into());
    let argv = [
        "meanwidth",
        "surface-grid",
        "--theta-steps",
        theta_steps.as_str(),
        "--phi-steps",
        phi_steps.as_str(),
    ];
    let code = meanwidth::cli::run(argv, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
