//! Globally adaptive Gauss-Kronrod (G10/K21) integration on finite,
//! semi-infinite and doubly infinite intervals, plus iterated integration
//! over rectangles and the region below the diagonal.

use std::cell::RefCell;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_subdivisions: 2000,
        }
    }
}

impl QuadConfig {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let cfg = Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Same absolute and relative tolerance, default budget.
    pub fn with_tol(tol: f64) -> Result<Self> {
        Self::new(tol, tol, Self::default().max_subdivisions)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::Domain(format!(
                "tolerances must be strictly positive (abs {}, rel {})",
                self.abs_tol, self.rel_tol
            )));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::Domain("max_subdivisions must be at least 1".into()));
        }
        Ok(())
    }

    /// The configuration scaled down by `factor` in both tolerances.
    pub fn tighter(&self, factor: f64) -> Self {
        Self {
            abs_tol: self.abs_tol / factor,
            rel_tol: self.rel_tol / factor,
            max_subdivisions: self.max_subdivisions,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

// Kronrod abscissae on [0, 1); odd indices are the 10-point Gauss nodes.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_600_525_478_318,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    // too narrow to bisect further
    exhausted: bool,
}

fn gk21<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    if !fc.is_finite() {
        return Err(Error::NonFinite { at: center });
    }
    let mut res_k = fc * WGK[10];
    let mut res_g = 0.0;
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let (x1, x2) = (center - dx, center + dx);
        let f1 = f(x1);
        let f2 = f(x2);
        if !f1.is_finite() {
            return Err(Error::NonFinite { at: x1 });
        }
        if !f2.is_finite() {
            return Err(Error::NonFinite { at: x2 });
        }
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let result = res_k * half;
    res_abs *= half.abs();
    res_asc *= half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok((result, err))
}

fn adaptive<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!(
            "finite limits required, got [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }
    if a > b {
        let r = adaptive(f, b, a, cfg)?;
        return Ok(QuadResult {
            value: -r.value,
            ..r
        });
    }

    let (value, error) = gk21(&mut f, a, b)?;
    let mut evaluations = 21;
    let mut segments = vec![Segment {
        a,
        b,
        value,
        error,
        exhausted: false,
    }];

    loop {
        let total: f64 = segments.iter().map(|s| s.value).sum();
        let err: f64 = segments.iter().map(|s| s.error).sum();
        let target = cfg.abs_tol.max(cfg.rel_tol * total.abs());
        if err <= target {
            return Ok(QuadResult {
                value: total,
                error_estimate: err,
                evaluations,
            });
        }

        let worst = segments
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.exhausted)
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i);
        let Some(i) = worst else {
            return Err(Error::NotConverged {
                what: "adaptive quadrature (round-off limited)".into(),
                value: total,
                error_estimate: err,
            });
        };
        if segments.len() >= cfg.max_subdivisions {
            return Err(Error::NotConverged {
                what: format!("adaptive quadrature ({} subdivisions)", segments.len()),
                value: total,
                error_estimate: err,
            });
        }

        let s = segments[i];
        let mid = 0.5 * (s.a + s.b);
        if !(mid > s.a && mid < s.b)
            || (s.b - s.a) < 1e3 * f64::EPSILON * mid.abs().max(f64::MIN_POSITIVE)
        {
            segments[i].exhausted = true;
            continue;
        }
        let (v1, e1) = gk21(&mut f, s.a, mid)?;
        let (v2, e2) = gk21(&mut f, mid, s.b)?;
        evaluations += 42;
        segments[i] = Segment {
            a: s.a,
            b: mid,
            value: v1,
            error: e1,
            exhausted: false,
        };
        segments.push(Segment {
            a: mid,
            b: s.b,
            value: v2,
            error: e2,
            exhausted: false,
        });
    }
}

/// Integrates `f` over the finite interval `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: QuadConfig) -> Result<QuadResult> {
    adaptive(f, a, b, &cfg)
}

/// Sum of [`integrate`] over consecutive pieces `[breaks[i], breaks[i+1]]`.
/// Put the breaks where `f` has kinks or jumps.
pub fn integrate_pieces<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    cfg: QuadConfig,
) -> Result<QuadResult> {
    let mut total = QuadResult {
        value: 0.0,
        error_estimate: 0.0,
        evaluations: 0,
    };
    for w in breaks.windows(2) {
        let r = adaptive(&f, w[0], w[1], &cfg)?;
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.evaluations += r.evaluations;
    }
    Ok(total)
}

/// Integrates `f` over `[a, ∞)` through `x = a + t/(1−t)`, `t ∈ (0, 1)`.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    cfg: QuadConfig,
) -> Result<QuadResult> {
    if !a.is_finite() {
        return Err(Error::Domain(format!(
            "finite lower limit required, got {a}"
        )));
    }
    let g = |t: f64| {
        let om = 1.0 - t;
        let x = a + t / om;
        if !x.is_finite() {
            return 0.0;
        }
        let fx = f(x);
        if fx == 0.0 {
            0.0
        } else {
            fx / (om * om)
        }
    };
    adaptive(g, 0.0, 1.0, &cfg)
}

/// Integrates `f` over the whole real line through `x = t/(1−t²)`, `t ∈ (−1, 1)`.
///
/// Meant for integrands with at least Gaussian-like decay.
pub fn integrate_real_line<F: Fn(f64) -> f64>(f: F, cfg: QuadConfig) -> Result<QuadResult> {
    let g = |t: f64| {
        let om = 1.0 - t * t;
        let x = t / om;
        if !x.is_finite() {
            return 0.0;
        }
        let fx = f(x);
        if fx == 0.0 {
            0.0
        } else {
            fx * (1.0 + t * t) / (om * om)
        }
    };
    adaptive(g, -1.0, 1.0, &cfg)
}

/// Integration domains for [`integrate_2d`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    /// `[x0, x1] × [y0, y1]`.
    Rectangle { x: (f64, f64), y: (f64, f64) },
    /// `{(x, y) ∈ ℝ² : x < y}`; the inner variable is written `x = y − s`, `s > 0`.
    BelowDiagonal,
}

/// Iterated integral of `f(x, y)`: outer over `y`, inner over `x` with
/// tolerances ten times tighter than `cfg`.
pub fn integrate_2d<F: Fn(f64, f64) -> f64>(
    f: F,
    region: Region,
    cfg: QuadConfig,
) -> Result<QuadResult> {
    cfg.validate()?;
    let inner_cfg = cfg.tighter(10.0);
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let inner_evals = RefCell::new(0usize);

    let inner = |y: f64| -> f64 {
        if failure.borrow().is_some() {
            return 0.0;
        }
        let r = match region {
            Region::Rectangle { x, .. } => integrate(|xv| f(xv, y), x.0, x.1, inner_cfg),
            Region::BelowDiagonal => integrate_semi_infinite(|s| f(y - s, y), 0.0, inner_cfg),
        };
        match r {
            Ok(r) => {
                *inner_evals.borrow_mut() += r.evaluations;
                r.value
            }
            Err(e) => {
                *failure.borrow_mut() = Some(e);
                0.0
            }
        }
    };

    let outer = match region {
        Region::Rectangle { y, .. } => integrate(inner, y.0, y.1, cfg),
        Region::BelowDiagonal => integrate_real_line(inner, cfg),
    };
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let outer = outer?;
    Ok(QuadResult {
        evaluations: inner_evals.into_inner(),
        ..outer
    })
}
