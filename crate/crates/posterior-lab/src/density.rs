//! Parametric one-dimensional probability densities with log-space
//! evaluation and seed-deterministic i.i.d. sampling.
//!
//! A [`Density`] is immutable after construction and validated at
//! construction: scale-type parameters must be strictly positive, mixture
//! weights must be non-negative and sum to one, and the density must be
//! strictly positive on the interior of its declared support (so the
//! log-density is finite there and `-inf` exactly outside).
//!
//! Sampling follows a counter-based contract: a draw is a pure function of
//! `(seed, stream, draw sequence)`, where distinct streams are fully
//! independent ChaCha substreams. Replicated experiments give each
//! replicate its own stream, so parallel scheduling cannot change results.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp, Normal};
use thiserror::Error;

use crate::logspace::log_sum_exp;
use crate::quad::{self, QuadError};

/// Closed interval with optionally infinite endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Support {
    pub lo: f64,
    pub hi: f64,
}

impl Support {
    pub const REAL_LINE: Support = Support {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    /// Interval containment: every point of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Support) -> bool {
        self.lo >= other.lo && self.hi <= other.hi
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DensityError {
    #[error("{family}: parameter {name} = {value} must be finite")]
    NonFiniteParameter {
        family: &'static str,
        name: &'static str,
        value: f64,
    },
    #[error("{family}: parameter {name} = {value} must be strictly positive")]
    NonPositiveParameter {
        family: &'static str,
        name: &'static str,
        value: f64,
    },
    #[error("uniform: empty interval [{lo}, {hi}]")]
    EmptyInterval { lo: f64, hi: f64 },
    #[error("mixture: {weights} weights for {components} components")]
    WeightCountMismatch { weights: usize, components: usize },
    #[error("mixture: needs at least one component with positive weight")]
    EmptyMixture,
    #[error("mixture: weight {0} is negative")]
    NegativeWeight(f64),
    #[error("mixture: weights sum to {0}, not 1 (tolerance 1e-12)")]
    WeightSum(f64),
    #[error("mixture: components may not themselves be mixtures")]
    NestedMixture,
    #[error("mixture: density vanishes on ({gap_lo}, {gap_hi}) inside its support")]
    GappedSupport { gap_lo: f64, gap_hi: f64 },
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Gaussian { mean: f64, stdev: f64 },
    Exponential { rate: f64 },
    Laplace { location: f64, scale: f64 },
    Uniform { lo: f64, hi: f64 },
    Mixture { weights: Vec<f64>, components: Vec<Density> },
}

/// An evaluable, sampleable 1-D probability density with declared support.
#[derive(Debug, Clone, PartialEq)]
pub struct Density {
    kind: Kind,
}

/// A reproducible i.i.d. sample: regenerating with the same seed and stream
/// yields the identical vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub values: Vec<f64>,
    pub source_id: String,
    pub seed: u64,
    pub stream: u64,
}

fn require_finite(
    family: &'static str,
    name: &'static str,
    value: f64,
) -> Result<(), DensityError> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(DensityError::NonFiniteParameter {
            family,
            name,
            value,
        })
    }
}

fn require_positive(
    family: &'static str,
    name: &'static str,
    value: f64,
) -> Result<(), DensityError> {
    require_finite(family, name, value)?;
    if value > 0.0 {
        Ok(())
    } else {
        Err(DensityError::NonPositiveParameter {
            family,
            name,
            value,
        })
    }
}

impl Density {
    pub fn gaussian(mean: f64, stdev: f64) -> Result<Self, DensityError> {
        require_finite("gaussian", "mean", mean)?;
        require_positive("gaussian", "stdev", stdev)?;
        Ok(Density {
            kind: Kind::Gaussian { mean, stdev },
        })
    }

    pub fn exponential(rate: f64) -> Result<Self, DensityError> {
        require_positive("exponential", "rate", rate)?;
        Ok(Density {
            kind: Kind::Exponential { rate },
        })
    }

    pub fn laplace(location: f64, scale: f64) -> Result<Self, DensityError> {
        require_finite("laplace", "location", location)?;
        require_positive("laplace", "scale", scale)?;
        Ok(Density {
            kind: Kind::Laplace { location, scale },
        })
    }

    pub fn uniform(lo: f64, hi: f64) -> Result<Self, DensityError> {
        require_finite("uniform", "lo", lo)?;
        require_finite("uniform", "hi", hi)?;
        if !(lo < hi) {
            return Err(DensityError::EmptyInterval { lo, hi });
        }
        Ok(Density {
            kind: Kind::Uniform { lo, hi },
        })
    }

    /// A finite mixture of base-family components. Weights must be
    /// non-negative and sum to 1 within 1e-12; the union of the
    /// positive-weight component supports must be a single interval, so the
    /// mixture density is positive on the interior of its support.
    pub fn mixture(weights: Vec<f64>, components: Vec<Density>) -> Result<Self, DensityError> {
        if weights.len() != components.len() {
            return Err(DensityError::WeightCountMismatch {
                weights: weights.len(),
                components: components.len(),
            });
        }
        for c in &components {
            if matches!(c.kind, Kind::Mixture { .. }) {
                return Err(DensityError::NestedMixture);
            }
        }
        for &w in &weights {
            if !(w >= 0.0) {
                return Err(DensityError::NegativeWeight(w));
            }
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(DensityError::WeightSum(sum));
        }

        let mut spans: Vec<Support> = weights
            .iter()
            .zip(&components)
            .filter(|(w, _)| **w > 0.0)
            .map(|(_, c)| c.support())
            .collect();
        if spans.is_empty() {
            return Err(DensityError::EmptyMixture);
        }
        spans.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        let mut reach = spans[0].hi;
        for s in &spans[1..] {
            if s.lo > reach {
                return Err(DensityError::GappedSupport {
                    gap_lo: reach,
                    gap_hi: s.lo,
                });
            }
            reach = reach.max(s.hi);
        }

        Ok(Density {
            kind: Kind::Mixture {
                weights,
                components,
            },
        })
    }

    pub fn family(&self) -> &'static str {
        match &self.kind {
            Kind::Gaussian { .. } => "gaussian",
            Kind::Exponential { .. } => "exponential",
            Kind::Laplace { .. } => "laplace",
            Kind::Uniform { .. } => "uniform",
            Kind::Mixture { .. } => "mixture",
        }
    }

    pub fn params(&self) -> Vec<f64> {
        match &self.kind {
            Kind::Gaussian { mean, stdev } => vec![*mean, *stdev],
            Kind::Exponential { rate } => vec![*rate],
            Kind::Laplace { location, scale } => vec![*location, *scale],
            Kind::Uniform { lo, hi } => vec![*lo, *hi],
            Kind::Mixture { weights, .. } => weights.clone(),
        }
    }

    /// Mixture components, if any.
    pub fn components(&self) -> Option<&[Density]> {
        match &self.kind {
            Kind::Mixture { components, .. } => Some(components),
            _ => None,
        }
    }

    pub fn support(&self) -> Support {
        match &self.kind {
            Kind::Gaussian { .. } | Kind::Laplace { .. } => Support::REAL_LINE,
            Kind::Exponential { .. } => Support {
                lo: 0.0,
                hi: f64::INFINITY,
            },
            Kind::Uniform { lo, hi } => Support { lo: *lo, hi: *hi },
            Kind::Mixture {
                weights,
                components,
            } => {
                let mut lo = f64::INFINITY;
                let mut hi = f64::NEG_INFINITY;
                for (w, c) in weights.iter().zip(components) {
                    if *w > 0.0 {
                        let s = c.support();
                        lo = lo.min(s.lo);
                        hi = hi.max(s.hi);
                    }
                }
                Support { lo, hi }
            }
        }
    }

    /// Natural log of the density at `x`: finite on the interior of the
    /// support, exactly `-inf` outside it, never NaN.
    pub fn log_density(&self, x: f64) -> f64 {
        match &self.kind {
            Kind::Gaussian { mean, stdev } => {
                let z = (x - mean) / stdev;
                -0.5 * z * z - stdev.ln() - HALF_LN_2PI
            }
            Kind::Exponential { rate } => {
                if x < 0.0 {
                    f64::NEG_INFINITY
                } else {
                    rate.ln() - rate * x
                }
            }
            Kind::Laplace { location, scale } => -(x - location).abs() / scale - (2.0 * scale).ln(),
            Kind::Uniform { lo, hi } => {
                if x >= *lo && x <= *hi {
                    -(hi - lo).ln()
                } else {
                    f64::NEG_INFINITY
                }
            }
            Kind::Mixture {
                weights,
                components,
            } => {
                if !self.support().contains(x) {
                    return f64::NEG_INFINITY;
                }
                let terms: Vec<f64> = weights
                    .iter()
                    .zip(components)
                    .map(|(w, c)| {
                        if *w > 0.0 {
                            w.ln() + c.log_density(x)
                        } else {
                            f64::NEG_INFINITY
                        }
                    })
                    .collect();
                log_sum_exp(&terms)
            }
        }
    }

    /// Density at `x`; zero outside the support.
    pub fn density(&self, x: f64) -> f64 {
        self.log_density(x).exp()
    }

    /// Interior points where the density is discontinuous or kinked; used
    /// to pre-split quadrature panels.
    pub fn breakpoints(&self) -> Vec<f64> {
        match &self.kind {
            Kind::Gaussian { .. } | Kind::Exponential { .. } | Kind::Uniform { .. } => Vec::new(),
            Kind::Laplace { location, .. } => vec![*location],
            Kind::Mixture {
                weights,
                components,
            } => {
                let own = self.support();
                let mut pts = Vec::new();
                for (w, c) in weights.iter().zip(components) {
                    if *w == 0.0 {
                        continue;
                    }
                    let s = c.support();
                    pts.extend([s.lo, s.hi]);
                    pts.extend(c.breakpoints());
                }
                pts.retain(|&x| x.is_finite() && x > own.lo && x < own.hi);
                pts.sort_by(f64::total_cmp);
                pts.dedup();
                pts
            }
        }
    }

    pub fn mean(&self) -> f64 {
        match &self.kind {
            Kind::Gaussian { mean, .. } => *mean,
            Kind::Exponential { rate } => 1.0 / rate,
            Kind::Laplace { location, .. } => *location,
            Kind::Uniform { lo, hi } => 0.5 * (lo + hi),
            Kind::Mixture {
                weights,
                components,
            } => weights
                .iter()
                .zip(components)
                .map(|(w, c)| w * c.mean())
                .sum(),
        }
    }

    pub fn variance(&self) -> f64 {
        match &self.kind {
            Kind::Gaussian { stdev, .. } => stdev * stdev,
            Kind::Exponential { rate } => 1.0 / (rate * rate),
            Kind::Laplace { scale, .. } => 2.0 * scale * scale,
            Kind::Uniform { lo, hi } => (hi - lo) * (hi - lo) / 12.0,
            Kind::Mixture {
                weights,
                components,
            } => {
                let m = self.mean();
                let second: f64 = weights
                    .iter()
                    .zip(components)
                    .map(|(w, c)| w * (c.variance() + c.mean() * c.mean()))
                    .sum();
                second - m * m
            }
        }
    }

    /// One draw from the density. Consumes the RNG sequentially; with a
    /// fixed RNG state the result is fully determined.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match &self.kind {
            Kind::Gaussian { mean, stdev } => {
                Normal::new(*mean, *stdev).expect("validated").sample(rng)
            }
            Kind::Exponential { rate } => Exp::new(*rate).expect("validated").sample(rng),
            Kind::Laplace { location, scale } => {
                let t = rng.random::<f64>() - 0.5;
                // Inverse CDF; the max() keeps the draw finite when the
                // uniform lands exactly on 0.
                let w = (1.0 - 2.0 * t.abs()).max(f64::MIN_POSITIVE);
                location - scale * t.signum() * w.ln()
            }
            Kind::Uniform { lo, hi } => rng.random_range(*lo..*hi),
            Kind::Mixture {
                weights,
                components,
            } => {
                let u = rng.random::<f64>();
                let mut cum = 0.0;
                let mut chosen = None;
                for (w, c) in weights.iter().zip(components) {
                    cum += w;
                    if u < cum && *w > 0.0 {
                        chosen = Some(c);
                        break;
                    }
                }
                let c = chosen.unwrap_or_else(|| {
                    // u landed past the last cumulative weight (rounding);
                    // fall back to the last positive-weight component.
                    weights
                        .iter()
                        .zip(components)
                        .rev()
                        .find(|(w, _)| **w > 0.0)
                        .map(|(_, c)| c)
                        .expect("validated: at least one positive weight")
                });
                c.draw(rng)
            }
        }
    }

    /// `n` i.i.d. draws on substream 0.
    pub fn sample(&self, seed: u64, n: usize) -> Sample {
        self.sample_stream(seed, 0, n)
    }

    /// `n` i.i.d. draws on the given substream. Distinct streams are
    /// statistically independent; the same `(seed, stream, n)` always
    /// reproduces the identical vector.
    pub fn sample_stream(&self, seed: u64, stream: u64, n: usize) -> Sample {
        let mut rng = replicate_rng(seed, stream);
        let values = (0..n).map(|_| self.draw(&mut rng)).collect();
        Sample {
            values,
            source_id: self.to_string(),
            seed,
            stream,
        }
    }

    /// `|integral of the density - 1|`, by adaptive quadrature over the
    /// declared support.
    pub fn normalization_defect(&self, rel_tol: f64) -> Result<f64, QuadError> {
        let s = self.support();
        let r = quad::integrate_split(|x| self.density(x), s.lo, s.hi, &self.breakpoints(), rel_tol)?;
        Ok((r.value - 1.0).abs())
    }

    pub(crate) fn kind_tag(&self) -> KindTag<'_> {
        match &self.kind {
            Kind::Gaussian { mean, stdev } => KindTag::Gaussian {
                mean: *mean,
                stdev: *stdev,
            },
            Kind::Exponential { rate } => KindTag::Exponential { rate: *rate },
            Kind::Laplace { location, scale } => KindTag::Laplace {
                location: *location,
                scale: *scale,
            },
            Kind::Uniform { lo, hi } => KindTag::Uniform { lo: *lo, hi: *hi },
            Kind::Mixture {
                weights,
                components,
            } => KindTag::Mixture {
                weights,
                components,
            },
        }
    }
}

/// Read-only view of the family and parameters, for closed-form dispatch.
pub(crate) enum KindTag<'a> {
    Gaussian { mean: f64, stdev: f64 },
    Exponential { rate: f64 },
    Laplace { location: f64, scale: f64 },
    Uniform { lo: f64, hi: f64 },
    Mixture {
        weights: &'a [f64],
        components: &'a [Density],
    },
}

/// The RNG for one replicate: ChaCha keyed by the scenario seed, with the
/// replicate index selecting an independent substream.
pub fn replicate_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub(crate) const HALF_LN_2PI: f64 = 0.918_938_533_204_672_7;

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Gaussian { mean, stdev } => write!(f, "gaussian({mean}, {stdev})"),
            Kind::Exponential { rate } => write!(f, "exponential({rate})"),
            Kind::Laplace { location, scale } => write!(f, "laplace({location}, {scale})"),
            Kind::Uniform { lo, hi } => write!(f, "uniform({lo}, {hi})"),
            Kind::Mixture {
                weights,
                components,
            } => {
                write!(f, "mixture(")?;
                for (i, (w, c)) in weights.iter().zip(components).enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{w}*{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_parameters() {
        assert!(Density::gaussian(0.0, 0.0).is_err());
        assert!(Density::gaussian(0.0, -1.0).is_err());
        assert!(Density::gaussian(f64::NAN, 1.0).is_err());
        assert!(Density::exponential(0.0).is_err());
        assert!(Density::laplace(0.0, 0.0).is_err());
        assert!(Density::uniform(1.0, 1.0).is_err());
        assert!(Density::uniform(2.0, 1.0).is_err());
    }

    #[test]
    fn mixture_validation() {
        let g = |m: f64| Density::gaussian(m, 1.0).unwrap();
        assert!(Density::mixture(vec![0.5, 0.5], vec![g(-1.0), g(1.0)]).is_ok());
        assert!(matches!(
            Density::mixture(vec![0.5, 0.6], vec![g(-1.0), g(1.0)]),
            Err(DensityError::WeightSum(_))
        ));
        assert!(matches!(
            Density::mixture(vec![1.5, -0.5], vec![g(-1.0), g(1.0)]),
            Err(DensityError::NegativeWeight(_))
        ));
        let u = |a: f64, b: f64| Density::uniform(a, b).unwrap();
        assert!(matches!(
            Density::mixture(vec![0.5, 0.5], vec![u(0.0, 1.0), u(2.0, 3.0)]),
            Err(DensityError::GappedSupport { .. })
        ));
        // Touching supports are fine.
        assert!(Density::mixture(vec![0.5, 0.5], vec![u(0.0, 1.0), u(1.0, 2.0)]).is_ok());
        // Zero-weight components are ignored for support purposes.
        assert!(Density::mixture(
            vec![0.5, 0.5, 0.0],
            vec![u(0.0, 1.0), u(0.5, 2.0), u(5.0, 6.0)]
        )
        .is_ok());
        let inner = Density::mixture(vec![1.0], vec![g(0.0)]).unwrap();
        assert!(matches!(
            Density::mixture(vec![1.0], vec![inner]),
            Err(DensityError::NestedMixture)
        ));
    }

    #[test]
    fn log_density_values() {
        let u = Density::uniform(0.0, 1.0).unwrap();
        assert_eq!(u.log_density(0.5), 0.0);
        assert_eq!(u.log_density(1.5), f64::NEG_INFINITY);
        assert_eq!(u.log_density(-0.1), f64::NEG_INFINITY);

        let g = Density::gaussian(0.0, 1.0).unwrap();
        assert!((g.log_density(0.0) - (-0.918_938_533_204_672_7)).abs() < 1e-12);

        let e = Density::exponential(2.0).unwrap();
        assert!((e.log_density(0.0) - 2.0f64.ln()).abs() < 1e-15);
        assert_eq!(e.log_density(-0.01), f64::NEG_INFINITY);

        let l = Density::laplace(1.0, 0.5).unwrap();
        assert!((l.log_density(1.0) - -(1.0f64.ln())).abs() < 1e-15);
    }

    #[test]
    fn log_density_never_nan() {
        let densities = [
            Density::gaussian(0.0, 1.0).unwrap(),
            Density::exponential(1.0).unwrap(),
            Density::laplace(0.0, 1.0).unwrap(),
            Density::uniform(-1.0, 1.0).unwrap(),
            Density::mixture(
                vec![0.5, 0.5],
                vec![
                    Density::gaussian(-1.0, 1.0).unwrap(),
                    Density::gaussian(1.0, 1.0).unwrap(),
                ],
            )
            .unwrap(),
        ];
        let probes = [
            0.0,
            1.0,
            -1.0,
            1e300,
            -1e300,
            f64::INFINITY,
            f64::NEG_INFINITY,
        ];
        for d in &densities {
            for &x in &probes {
                assert!(!d.log_density(x).is_nan(), "{d} at {x}");
            }
        }
    }

    #[test]
    fn mixture_log_density_stays_finite_in_deep_tails() {
        let m = Density::mixture(
            vec![0.5, 0.5],
            vec![
                Density::gaussian(-1.0, 1.0).unwrap(),
                Density::gaussian(1.0, 1.0).unwrap(),
            ],
        )
        .unwrap();
        // Far in the tail both component densities underflow linearly, but
        // the log-space evaluation must stay finite.
        let v = m.log_density(60.0);
        assert!(v.is_finite(), "got {v}");
        assert!(v < -1000.0);
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let d = Density::gaussian(0.0, 1.0).unwrap();
        let a = d.sample(42, 100);
        let b = d.sample(42, 100);
        assert_eq!(a.values, b.values);
        let c = d.sample(43, 100);
        assert_ne!(a.values, c.values);
    }

    #[test]
    fn streams_are_distinct_and_stable() {
        let d = Density::uniform(0.0, 1.0).unwrap();
        let s0 = d.sample_stream(7, 0, 50);
        let s1 = d.sample_stream(7, 1, 50);
        assert_ne!(s0.values, s1.values);
        assert_eq!(s1.values, d.sample_stream(7, 1, 50).values);
    }

    #[test]
    fn draws_lie_in_support() {
        let cases = [
            Density::uniform(0.0, 1.0).unwrap(),
            Density::exponential(1.5).unwrap(),
            Density::mixture(
                vec![0.3, 0.7],
                vec![
                    Density::uniform(0.0, 1.0).unwrap(),
                    Density::uniform(0.5, 2.0).unwrap(),
                ],
            )
            .unwrap(),
        ];
        for d in &cases {
            let s = d.support();
            for &x in &d.sample(11, 1000).values {
                assert!(s.contains(x), "{d}: {x} outside {s}");
            }
        }
    }

    #[test]
    fn empirical_moments_match_closed_forms() {
        // Mean within 5 standard errors, variance loosely.
        let n = 100_000;
        let cases = [
            Density::gaussian(0.0, 1.0).unwrap(),
            Density::gaussian(3.0, 2.0).unwrap(),
            Density::exponential(0.5).unwrap(),
            Density::laplace(-1.0, 2.0).unwrap(),
            Density::uniform(-2.0, 5.0).unwrap(),
            Density::mixture(
                vec![0.5, 0.5],
                vec![
                    Density::gaussian(-1.0, 1.0).unwrap(),
                    Density::gaussian(1.0, 1.0).unwrap(),
                ],
            )
            .unwrap(),
        ];
        for d in &cases {
            let xs = d.sample(271_828, n).values;
            let nf = n as f64;
            let mean = xs.iter().sum::<f64>() / nf;
            let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (nf - 1.0);
            let se_mean = (d.variance() / nf).sqrt();
            assert!(
                (mean - d.mean()).abs() <= 5.0 * se_mean,
                "{d}: mean {mean} vs {} (se {se_mean})",
                d.mean()
            );
            assert!(
                (var - d.variance()).abs() <= 0.05 * d.variance().max(1.0),
                "{d}: var {var} vs {}",
                d.variance()
            );
        }
    }

    #[test]
    fn gaussian_sample_mean_within_clt_band() {
        let n = 100_000;
        let xs = Density::gaussian(0.0, 1.0).unwrap().sample(9, n).values;
        let mean = xs.iter().sum::<f64>() / n as f64;
        assert!(mean.abs() < 4.0 / (n as f64).sqrt(), "mean {mean}");
    }

    #[test]
    fn normalization_defects_are_tiny() {
        assert!(
            Density::uniform(0.0, 1.0)
                .unwrap()
                .normalization_defect(1e-9)
                .unwrap()
                <= 1e-12
        );
        assert!(
            Density::gaussian(3.0, 2.0)
                .unwrap()
                .normalization_defect(1e-9)
                .unwrap()
                <= 1e-8
        );
        let m = Density::mixture(
            vec![0.5, 0.5],
            vec![
                Density::gaussian(-1.0, 1.0).unwrap(),
                Density::gaussian(1.0, 1.0).unwrap(),
            ],
        )
        .unwrap();
        assert!(m.normalization_defect(1e-9).unwrap() <= 1e-8);
    }

    #[test]
    fn display_round_trips_parameters() {
        let d = Density::gaussian(0.5, 1.25).unwrap();
        assert_eq!(d.to_string(), "gaussian(0.5, 1.25)");
    }
}
