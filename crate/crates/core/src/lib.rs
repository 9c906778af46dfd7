//! Mean widths of regular polytopes and the normal-sample range.
//!
//! The mean width of a regular `n`-simplex with unit edges equals
//! `½ · Γ(n/2)/Γ((n+1)/2) · μ_{n+1}`, where `μ_m` is the expected range of
//! `m` independent standard normal variables. This crate evaluates that
//! bridge in three mutually checking ways:
//!
//! * closed forms for the range moments up to seven samples ([`orderstats`]),
//! * adaptive quadrature of the integral representations ([`quad`], [`widths`]),
//! * Monte Carlo sampling of support-function widths ([`geom`]).
//!
//! It also covers the `n`-cube, the `n`-crosspolytope, the regular
//! octahedron in detail, and the large-`n` behaviour of the range and of the
//! simplex mean width ([`asymptotics`]).
//!
//! ```
//! use meanwidth::widths::{simplex_mean_width, Source};
//!
//! let w2 = simplex_mean_width(2, Source::Closed).unwrap();
//! assert!((w2 - 3.0 / std::f64::consts::PI).abs() < 1e-14);
//! ```
//!
//! The `examples/` directory has one runnable program per area:
//! `golden_widths`, `range_moments`, `constants`, `asymptotics`,
//! `octahedron`, `monte_carlo`, `surface_grid`, `special_functions` and
//! `quadrature`. The `meanwidth` binary is a thin wrapper over [`cli::run`].

pub mod asymptotics;
pub mod cli;
pub mod error;
pub mod geom;
pub mod orderstats;
pub mod quad;
pub mod specfn;
pub mod widths;

pub use error::{Error, Result};
