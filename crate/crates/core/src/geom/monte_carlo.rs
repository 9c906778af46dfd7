//! Support-function sampling of `E(w)` and `E(w²)`.
//!
//! Samples are cut into fixed chunks. Chunk `k` draws from ChaCha8 seeded
//! with `seed` on stream `k`, and the chunk accumulators are merged in chunk
//! order, so the estimate does not depend on the number of worker threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{cube_width, fill_direction, vertices, width_along, VertexSet};
use crate::error::{domain, Result};
use crate::widths::Family;

pub const MIN_SAMPLES: u64 = 1000;
pub const CHUNK_SAMPLES: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub mean: f64,
    /// Sample standard deviation over `√samples`.
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, Default)]
struct Welford {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Welford {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let d = x - self.mean;
        self.mean += d / self.count as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, other: Self) -> Self {
        if self.count == 0 {
            return other;
        }
        let count = self.count + other.count;
        let d = other.mean - self.mean;
        let w = other.count as f64 / count as f64;
        Self {
            count,
            mean: self.mean + d * w,
            m2: self.m2 + other.m2 + d * d * self.count as f64 * w,
        }
    }

    fn estimate(self, seed: u64) -> McEstimate {
        let var = self.m2 / (self.count - 1) as f64;
        McEstimate {
            mean: self.mean,
            stderr: (var / self.count as f64).sqrt(),
            samples: self.count,
            seed,
        }
    }
}

enum Body {
    Cube,
    Vertices(VertexSet),
}

impl Body {
    fn width(&self, u: &[f64]) -> f64 {
        match self {
            Body::Cube => cube_width(u),
            Body::Vertices(vs) => width_along(vs, u),
        }
    }
}

/// Estimates of `E(w)` and `E(w²)` for the unit-edge body from `samples`
/// uniform directions.
pub fn mc_width_moments(
    family: Family,
    n: usize,
    samples: u64,
    seed: u64,
) -> Result<(McEstimate, McEstimate)> {
    if samples < MIN_SAMPLES {
        return domain(format!(
            "Monte Carlo needs at least {MIN_SAMPLES} samples, got {samples}"
        ));
    }
    let body = match family {
        Family::Cube if n >= 1 => Body::Cube,
        Family::Cube => return domain("cube dimension must be at least 1"),
        _ => Body::Vertices(vertices(family, n)?),
    };
    let chunks = samples.div_ceil(CHUNK_SAMPLES);
    let parts: Vec<(Welford, Welford)> = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k);
            let count = CHUNK_SAMPLES.min(samples - k * CHUNK_SAMPLES);
            let mut u = vec![0.0; n];
            let (mut w1, mut w2) = (Welford::default(), Welford::default());
            for _ in 0..count {
                fill_direction(&mut u, &mut rng);
                let w = body.width(&u);
                w1.push(w);
                w2.push(w * w);
            }
            (w1, w2)
        })
        .collect();
    let (w1, w2) = parts.into_iter().fold(
        (Welford::default(), Welford::default()),
        |(a1, a2), (b1, b2)| (a1.merge(b1), a2.merge(b2)),
    );
    Ok((w1.estimate(seed), w2.estimate(seed)))
}
