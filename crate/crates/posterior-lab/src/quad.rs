//! Adaptive numerical integration over finite and infinite intervals.
//!
//! A 15-point Gauss–Kronrod panel rule is applied per segment and the
//! segment with the largest error estimate is bisected until the summed
//! estimate drops below the requested tolerance. All abscissae are strictly
//! interior to the panel, so integrands with integrable singularities at
//! interval endpoints (a `log` blowing up at a support boundary, say) are
//! never evaluated at the singular point.
//!
//! Infinite intervals are reduced to finite ones by algebraic substitution
//! before any panel is laid down:
//!
//! ```text
//! (-inf, inf):  x = t / (1 - t^2),   dx = (1 + t^2) / (1 - t^2)^2 dt,  t in (-1, 1)
//! (a,   inf):   x = a + t / (1 - t), dx = dt / (1 - t)^2,              t in (0, 1)
//! (-inf, b):    x = b - t / (1 - t), dx = dt / (1 - t)^2,              t in (0, 1)
//! ```
//!
//! The requested tolerance is relative to `max(1, |integral|)`, so it acts
//! as an absolute tolerance for integrals near zero.

use std::collections::BinaryHeap;

use thiserror::Error;

/// Outcome of a converged integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    /// Estimated absolute error; at most `rel_tol * max(1, |value|)` on success.
    pub abs_error_estimate: f64,
    /// Number of integrand evaluations performed.
    pub evaluations: u64,
}

#[derive(Debug, Error)]
pub enum QuadError {
    #[error("relative tolerance {0:e} outside (0, 1e-2]")]
    BadTolerance(f64),
    #[error("empty or inverted interval [{lo}, {hi}]")]
    BadInterval { lo: f64, hi: f64 },
    #[error("integrand returned a non-finite value on panel ({lo:e}, {hi:e})")]
    NonFiniteIntegrand { lo: f64, hi: f64 },
    #[error(
        "no convergence after {max_panels} panels; partial value {} (err {:e})",
        partial.value, partial.abs_error_estimate
    )]
    NonConvergence {
        max_panels: usize,
        partial: IntegralResult,
    },
}

impl QuadError {
    /// The best estimate available when integration stopped early.
    pub fn partial(&self) -> Option<IntegralResult> {
        match self {
            QuadError::NonConvergence { partial, .. } => Some(*partial),
            _ => None,
        }
    }
}

const MAX_PANELS: usize = 4096;

// 15-point Kronrod abscissae (positive half) with the embedded 7-point
// Gauss rule on the odd-indexed nodes. Standard QUADPACK qk15 tables.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

/// GSL-style error rescaling for the |K15 - G7| difference.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let min_err = 50.0 * f64::EPSILON * res_abs;
        if min_err > scaled {
            scaled = min_err;
        }
    }
    scaled
}

/// One 15-point Gauss–Kronrod panel on [a, b]: (value, error estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let abs_half = half.abs();

    let mut fv1 = [0.0_f64; 7];
    let mut fv2 = [0.0_f64; 7];

    let f_center = f(center);
    let mut res_gauss = f_center * WG[3];
    let mut res_kron = f_center * WGK[7];
    let mut res_abs = res_kron.abs();

    for j in 0..3 {
        let jtw = j * 2 + 1;
        let abscissa = half * XGK[jtw];
        let fval1 = f(center - abscissa);
        let fval2 = f(center + abscissa);
        fv1[jtw] = fval1;
        fv2[jtw] = fval2;
        res_gauss += WG[j] * (fval1 + fval2);
        res_kron += WGK[jtw] * (fval1 + fval2);
        res_abs += WGK[jtw] * (fval1.abs() + fval2.abs());
    }

    for j in 0..4 {
        let jtwm1 = j * 2;
        let abscissa = half * XGK[jtwm1];
        let fval1 = f(center - abscissa);
        let fval2 = f(center + abscissa);
        fv1[jtwm1] = fval1;
        fv2[jtwm1] = fval2;
        res_kron += WGK[jtwm1] * (fval1 + fval2);
        res_abs += WGK[jtwm1] * (fval1.abs() + fval2.abs());
    }

    let mean = res_kron * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let err = (res_kron - res_gauss) * half;
    let value = res_kron * half;
    let res_abs = res_abs * abs_half;
    let res_asc = res_asc * abs_half;

    (value, rescale_error(err, res_abs, res_asc))
}

struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Adaptive integration of `f` over a finite `[lo, hi]`, pre-split at the
/// given interior points.
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    interior: &[f64],
    rel_tol: f64,
) -> Result<IntegralResult, QuadError> {
    let mut edges = Vec::with_capacity(interior.len() + 2);
    edges.push(lo);
    edges.extend(interior.iter().copied().filter(|&x| x > lo && x < hi));
    edges.push(hi);
    edges.sort_by(f64::total_cmp);
    edges.dedup();

    let mut heap = BinaryHeap::new();
    let mut total_value = 0.0;
    let mut total_err = 0.0;
    let mut evaluations = 0u64;
    let mut panels = 0usize;

    let mut push = |heap: &mut BinaryHeap<Segment>,
                    total_value: &mut f64,
                    total_err: &mut f64,
                    evaluations: &mut u64,
                    a: f64,
                    b: f64|
     -> Result<(), QuadError> {
        let (value, err) = gk15(f, a, b);
        if value.is_nan() {
            return Err(QuadError::NonFiniteIntegrand { lo: a, hi: b });
        }
        *evaluations += 15;
        *total_value += value;
        *total_err += err;
        heap.push(Segment {
            lo: a,
            hi: b,
            value,
            err,
        });
        Ok(())
    };

    for pair in edges.windows(2) {
        push(
            &mut heap,
            &mut total_value,
            &mut total_err,
            &mut evaluations,
            pair[0],
            pair[1],
        )?;
        panels += 1;
    }

    loop {
        if !total_value.is_finite() {
            let worst = heap.peek().expect("heap non-empty");
            return Err(QuadError::NonFiniteIntegrand {
                lo: worst.lo,
                hi: worst.hi,
            });
        }
        let tol = rel_tol * total_value.abs().max(1.0);
        if total_err <= tol {
            return Ok(IntegralResult {
                value: total_value,
                abs_error_estimate: total_err,
                evaluations,
            });
        }
        let partial = IntegralResult {
            value: total_value,
            abs_error_estimate: total_err,
            evaluations,
        };
        if panels >= MAX_PANELS {
            return Err(QuadError::NonConvergence {
                max_panels: MAX_PANELS,
                partial,
            });
        }
        let worst = heap.pop().expect("heap non-empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            // Interval too narrow to bisect in f64; further refinement is impossible.
            return Err(QuadError::NonConvergence {
                max_panels: panels,
                partial,
            });
        }
        total_value -= worst.value;
        total_err -= worst.err;
        push(
            &mut heap,
            &mut total_value,
            &mut total_err,
            &mut evaluations,
            worst.lo,
            mid,
        )?;
        push(
            &mut heap,
            &mut total_value,
            &mut total_err,
            &mut evaluations,
            mid,
            worst.hi,
        )?;
        panels += 1;
    }
}

/// Integrate `f` over `[lo, hi]`; either endpoint may be infinite.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    rel_tol: f64,
) -> Result<IntegralResult, QuadError> {
    integrate_split(f, lo, hi, &[], rel_tol)
}

/// Integrate `f` over `[lo, hi]`, additionally splitting panels at the given
/// interior breakpoints (discontinuities or kinks of the integrand).
pub fn integrate_split<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    breakpoints: &[f64],
    rel_tol: f64,
) -> Result<IntegralResult, QuadError> {
    if !(rel_tol > 0.0 && rel_tol <= 1e-2) {
        return Err(QuadError::BadTolerance(rel_tol));
    }
    if !(lo < hi) || lo.is_nan() || hi.is_nan() {
        return Err(QuadError::BadInterval { lo, hi });
    }

    match (lo.is_infinite(), hi.is_infinite()) {
        (false, false) => adaptive(&f, lo, hi, breakpoints, rel_tol),
        (true, true) => {
            // x = t / (1 - t^2) over t in (-1, 1)
            let g = |t: f64| {
                let s = 1.0 - t * t;
                let x = t / s;
                let v = f(x);
                if v == 0.0 {
                    0.0
                } else {
                    v * (1.0 + t * t) / (s * s)
                }
            };
            let mapped: Vec<f64> = breakpoints
                .iter()
                .filter(|x| x.is_finite())
                .map(|&x| {
                    if x == 0.0 {
                        0.0
                    } else {
                        (-1.0 + (1.0 + 4.0 * x * x).sqrt()) / (2.0 * x)
                    }
                })
                .collect();
            adaptive(&g, -1.0, 1.0, &mapped, rel_tol)
        }
        (false, true) => {
            // x = lo + t / (1 - t) over t in (0, 1)
            let g = |t: f64| {
                let s = 1.0 - t;
                let v = f(lo + t / s);
                if v == 0.0 {
                    0.0
                } else {
                    v / (s * s)
                }
            };
            let mapped: Vec<f64> = breakpoints
                .iter()
                .filter(|&&x| x.is_finite() && x > lo)
                .map(|&x| (x - lo) / (1.0 + (x - lo)))
                .collect();
            adaptive(&g, 0.0, 1.0, &mapped, rel_tol)
        }
        (true, false) => {
            // x = hi - t / (1 - t) over t in (0, 1)
            let g = |t: f64| {
                let s = 1.0 - t;
                let v = f(hi - t / s);
                if v == 0.0 {
                    0.0
                } else {
                    v / (s * s)
                }
            };
            let mapped: Vec<f64> = breakpoints
                .iter()
                .filter(|&&x| x.is_finite() && x < hi)
                .map(|&x| (hi - x) / (1.0 + (hi - x)))
                .collect();
            adaptive(&g, 0.0, 1.0, &mapped, rel_tol)
        }
    }
}
