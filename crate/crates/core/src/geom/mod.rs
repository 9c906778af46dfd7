//! Explicit polytopes in `R^n` and their widths along unit directions.
//!
//! All bodies use unit edge length and are centred at the origin.

mod monte_carlo;
mod octahedron;

pub use monte_carlo::{mc_width_moments, McEstimate, CHUNK_SAMPLES, MIN_SAMPLES};
pub use octahedron::{
    diamond_vertices, octa_g, octa_g_terms, octa_h, octa_mean_sq_width_exact,
    octa_mean_width_exact, octa_phi_boundary, octa_sector_antiderivative, octa_sector_mean_sq,
    octa_sector_value, octa_sphere_integral, octa_width, sphere_average, SectorReconstruction,
};

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{domain, Result};
use crate::widths::Family;

/// Largest cube dimension for which all `2^n` vertices are enumerated.
pub const MAX_CUBE_ENUMERATION: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct VertexSet {
    pub dimension: usize,
    pub vertices: Vec<Vec<f64>>,
}

impl VertexSet {
    pub fn centroid(&self) -> Vec<f64> {
        let mut c = vec![0.0; self.dimension];
        for v in &self.vertices {
            for (ci, vi) in c.iter_mut().zip(v) {
                *ci += vi;
            }
        }
        let k = self.vertices.len() as f64;
        c.iter_mut().for_each(|ci| *ci /= k);
        c
    }

    /// Largest vertex distance from the centroid.
    pub fn circumradius(&self) -> f64 {
        let c = self.centroid();
        self.vertices
            .iter()
            .map(|v| distance(v, &c))
            .fold(0.0, f64::max)
    }

    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                d = d.max(distance(a, b));
            }
        }
        d
    }

    /// Shortest distance between two distinct vertices.
    pub fn min_edge(&self) -> f64 {
        let mut d = f64::INFINITY;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                d = d.min(distance(a, b));
            }
        }
        d
    }
}

pub(crate) fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Unit-edge regular `n`-simplex.
///
/// The points `e_i/√2` of `R^{n+1}` are expressed in the orthonormal
/// Helmert basis of the hyperplane `Σx = 0`, which drops the centroid to the
/// origin without changing any distance.
pub fn simplex_vertices(n: usize) -> Result<VertexSet> {
    if n == 0 {
        return domain("simplex dimension must be at least 1");
    }
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let vertices = (0..=n)
        .map(|i| {
            (1..=n)
                .map(|k| {
                    let norm = ((k * (k + 1)) as f64).sqrt();
                    let h = if i < k {
                        1.0
                    } else if i == k {
                        -(k as f64)
                    } else {
                        0.0
                    };
                    scale * h / norm
                })
                .collect()
        })
        .collect();
    Ok(VertexSet {
        dimension: n,
        vertices,
    })
}

/// Unit-edge `n`-crosspolytope, vertices `±e_i/√2`.
pub fn crosspolytope_vertices(n: usize) -> Result<VertexSet> {
    if n == 0 {
        return domain("crosspolytope dimension must be at least 1");
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut vertices = Vec::with_capacity(2 * n);
    for i in 0..n {
        for sign in [1.0, -1.0] {
            let mut v = vec![0.0; n];
            v[i] = sign * s;
            vertices.push(v);
        }
    }
    Ok(VertexSet {
        dimension: n,
        vertices,
    })
}

/// Unit cube `[−½, ½]^n`, all `2^n` vertices.
pub fn cube_vertices(n: usize) -> Result<VertexSet> {
    if n == 0 || n > MAX_CUBE_ENUMERATION {
        return domain(format!(
            "cube vertex enumeration supports 1 <= n <= {MAX_CUBE_ENUMERATION}, got {n}"
        ));
    }
    let vertices = (0..1usize << n)
        .map(|mask| {
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { 0.5 } else { -0.5 })
                .collect()
        })
        .collect();
    Ok(VertexSet {
        dimension: n,
        vertices,
    })
}

pub fn vertices(family: Family, n: usize) -> Result<VertexSet> {
    match family {
        Family::Simplex => simplex_vertices(n),
        Family::Cube => cube_vertices(n),
        Family::Crosspolytope => crosspolytope_vertices(n),
    }
}

/// A point on the unit sphere `S^{n−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Direction(Vec<f64>);

impl Direction {
    /// Normalizes `v`; fails on the zero vector.
    pub fn new(v: Vec<f64>) -> Result<Self> {
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return domain("direction must be a finite nonzero vector");
        }
        Ok(Self(v.into_iter().map(|x| x / norm).collect()))
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }
}

/// Uniform direction on `S^{n−1}` from `n` normalized standard normals.
pub fn sample_direction<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Direction {
    assert!(n > 0, "sphere dimension must be positive");
    let mut buf = vec![0.0; n];
    fill_direction(&mut buf, rng);
    Direction(buf)
}

pub(crate) fn fill_direction<R: Rng + ?Sized>(buf: &mut [f64], rng: &mut R) {
    loop {
        let mut s = 0.0;
        for x in buf.iter_mut() {
            *x = rng.sample(StandardNormal);
            s += *x * *x;
        }
        if s > 0.0 {
            let inv = 1.0 / s.sqrt();
            buf.iter_mut().for_each(|x| *x *= inv);
            return;
        }
    }
}

/// Distance between the two supporting hyperplanes orthogonal to `u`.
pub fn support_width(vs: &VertexSet, u: &Direction) -> Result<f64> {
    if vs.dimension != u.dimension() {
        return domain(format!(
            "direction has dimension {} but the body lives in R^{}",
            u.dimension(),
            vs.dimension
        ));
    }
    Ok(width_along(vs, u.components()))
}

pub(crate) fn width_along(vs: &VertexSet, u: &[f64]) -> f64 {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in &vs.vertices {
        let p: f64 = v.iter().zip(u).map(|(a, b)| a * b).sum();
        lo = lo.min(p);
        hi = hi.max(p);
    }
    hi - lo
}

/// Width of `[−½, ½]^n` along `u`: its support function is `½ Σ|u_i|`.
pub fn cube_width(u: &[f64]) -> f64 {
    u.iter().map(|x| x.abs()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::widths::{inradius, simplex_circumradius, simplex_inradius};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn simplex_geometry() {
        let s1 = simplex_vertices(1).unwrap();
        assert_eq!(s1.vertices.len(), 2);
        assert!((distance(&s1.vertices[0], &s1.vertices[1]) - 1.0).abs() < 1e-15);
        for n in 1..=12 {
            let s = simplex_vertices(n).unwrap();
            assert_eq!(s.vertices.len(), n + 1);
            for (i, a) in s.vertices.iter().enumerate() {
                for b in &s.vertices[i + 1..] {
                    assert!((distance(a, b) - 1.0).abs() < 1e-12);
                }
            }
            assert!(s.centroid().iter().all(|c| c.abs() < 1e-15));
            assert!((s.circumradius() - simplex_circumradius(n as u64).unwrap()).abs() < 1e-12);
        }
        let t = simplex_vertices(3).unwrap();
        assert!((t.circumradius() - (3.0f64 / 8.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn crosspolytope_and_cube_geometry() {
        for n in 2..=8 {
            let c = crosspolytope_vertices(n).unwrap();
            assert!((c.min_edge() - 1.0).abs() < 1e-15);
            assert!((c.diameter() - 2f64.sqrt()).abs() < 1e-15);
            let q = cube_vertices(n).unwrap();
            assert!((q.min_edge() - 1.0).abs() < 1e-15);
            assert!((q.diameter() - (n as f64).sqrt()).abs() < 1e-14);
        }
        assert!(cube_vertices(21).is_err());
    }

    #[test]
    fn directions_are_unit_and_centered() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let draws = 100_000;
        let mut sum = [0.0; 3];
        let mut abs_first = (0.0, 0.0);
        for _ in 0..draws {
            let d = sample_direction(3, &mut rng);
            let norm: f64 = d.components().iter().map(|x| x * x).sum();
            assert!((norm.sqrt() - 1.0).abs() < 1e-12);
            for (s, x) in sum.iter_mut().zip(d.components()) {
                *s += x;
            }
            let a = d.components()[0].abs();
            abs_first.0 += a;
            abs_first.1 += a * a;
        }
        let t = draws as f64;
        // each component has variance 1/3
        let se = (1.0 / 3.0 / t).sqrt();
        assert!(sum.iter().all(|s| (s / t).abs() < 4.0 * se));
        let m = abs_first.0 / t;
        let se_abs = ((abs_first.1 / t - m * m) / t).sqrt();
        assert!((m - 0.5).abs() < 4.0 * se_abs);
    }

    #[test]
    fn support_width_examples() {
        let seg = simplex_vertices(1).unwrap();
        assert!(
            (support_width(&seg, &Direction::new(vec![1.0]).unwrap()).unwrap() - 1.0).abs() < 1e-15
        );

        let t = simplex_vertices(3).unwrap();
        let toward = Direction::new(t.vertices[0].clone()).unwrap();
        let w = support_width(&t, &toward).unwrap();
        let want = simplex_circumradius(3).unwrap() + simplex_inradius(3).unwrap();
        assert!((w - want).abs() < 1e-15);

        let q = cube_vertices(4).unwrap();
        let axis = Direction::new(vec![0.0, 0.0, 1.0, 0.0]).unwrap();
        assert!((support_width(&q, &axis).unwrap() - 1.0).abs() < 1e-15);

        assert!(support_width(&q, &Direction::new(vec![1.0, 0.0]).unwrap()).is_err());
        assert!(Direction::new(vec![0.0, 0.0]).is_err());
    }

    #[test]
    fn cube_closed_width_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..=10 {
            let q = cube_vertices(n).unwrap();
            for _ in 0..200 {
                let u = sample_direction(n, &mut rng);
                let a = cube_width(u.components());
                let b = support_width(&q, &u).unwrap();
                assert!((a - b).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn width_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for family in [Family::Simplex, Family::Cube, Family::Crosspolytope] {
            for n in 2..=8usize {
                let vs = vertices(family, n).unwrap();
                let lo = 2.0 * inradius(family, n as u64).unwrap();
                let hi = vs.diameter();
                for _ in 0..10_000 {
                    let u = sample_direction(n, &mut rng);
                    let w = support_width(&vs, &u).unwrap();
                    assert!(
                        w >= lo - 1e-12 && w <= hi + 1e-12,
                        "{family:?} {n}: {w} not in [{lo}, {hi}]"
                    );
                }
            }
        }
    }
}
