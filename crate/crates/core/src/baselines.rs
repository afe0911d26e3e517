//! Reference gamma samplers used for accuracy and throughput comparison.
//!
//! Two competitors are frozen here behind [`BaselineKind`] tags so that
//! benchmark reports are self-describing. The Ahrens–Dieter GS sampler is
//! deliberately kept on the natural scale, where draws below the smallest
//! positive normal double come back as exact zeros; the Marsaglia–Tsang
//! sampler is given a log-scale boost so the comparison includes a fair
//! log-scale competitor.

use std::fmt;

use crate::error::Result;
use crate::gof;
use crate::rng::UniformSource;
use crate::sampler::{SamplerStats, ShapeParam};

/// Identifies one of the frozen reference samplers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaselineKind {
    AhrensDieterGs,
    MarsagliaTsangLog,
}

impl BaselineKind {
    pub const ALL: [BaselineKind; 2] = [
        BaselineKind::AhrensDieterGs,
        BaselineKind::MarsagliaTsangLog,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            BaselineKind::AhrensDieterGs => "ahrens-dieter-gs",
            BaselineKind::MarsagliaTsangLog => "marsaglia-tsang-log",
        }
    }
}

impl fmt::Display for BaselineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One natural-scale draw from `Gam(α, 1)` by the Ahrens–Dieter GS method.
///
/// `b = 1 + α/e`; with `P = b·U₁`: for `P ≤ 1` propose `x = P^{1/α}` and
/// accept when `U₂ ≤ e^{−x}`, otherwise propose `x = −log((b−P)/α)` and
/// accept when `U₂ ≤ x^{α−1}`. Proposed values whose true magnitude falls
/// below the smallest positive normal double underflow to exactly 0.
pub fn ahrens_dieter_gs(shape: ShapeParam, src: &mut UniformSource) -> f64 {
    ahrens_dieter_gs_counted(shape, src, &mut SamplerStats::default())
}

/// [`ahrens_dieter_gs`] with proposal/accept counters for benchmarking.
pub fn ahrens_dieter_gs_counted(
    shape: ShapeParam,
    src: &mut UniformSource,
    stats: &mut SamplerStats,
) -> f64 {
    let alpha = shape.alpha();
    let b = 1.0 + alpha / std::f64::consts::E;
    loop {
        stats.proposals += 1;
        let p = b * src.next_unit();
        if p <= 1.0 {
            let x = flush_subnormal(p.powf(1.0 / alpha));
            if src.next_unit() <= (-x).exp() {
                stats.accepts += 1;
                return x;
            }
        } else {
            let x = -((b - p) / alpha).ln();
            if src.next_unit() <= x.powf(alpha - 1.0) {
                stats.accepts += 1;
                return x;
            }
        }
    }
}

fn flush_subnormal(x: f64) -> f64 {
    if x < f64::MIN_POSITIVE {
        0.0
    } else {
        x
    }
}

/// One log-scale draw of `log Y`, `Y ~ Gam(α, 1)`, by the Marsaglia–Tsang
/// squeeze method with the small-shape boost.
///
/// Draws `Y′ ~ Gam(α+1, 1)` with `d = (α+1) − 1/3`, `c = 1/(3√d)`, then
/// returns `log Y = log Y′ + log(U)/α` for an independent uniform `U`.
/// Unlike the natural-scale GS sampler this stays finite for tiny α.
pub fn marsaglia_tsang_log(shape: ShapeParam, src: &mut UniformSource) -> f64 {
    marsaglia_tsang_log_counted(shape, src, &mut SamplerStats::default())
}

/// [`marsaglia_tsang_log`] with proposal/accept counters for benchmarking.
pub fn marsaglia_tsang_log_counted(
    shape: ShapeParam,
    src: &mut UniformSource,
    stats: &mut SamplerStats,
) -> f64 {
    let alpha = shape.alpha();
    let d = (alpha + 1.0) - 1.0 / 3.0;
    let c = 1.0 / (3.0 * d.sqrt());
    loop {
        stats.proposals += 1;
        let x = standard_normal(src);
        let t = 1.0 + c * x;
        if t <= 0.0 {
            continue;
        }
        let v = t * t * t;
        let u = src.next_unit();
        let squeeze = 1.0 - 0.0331 * (x * x) * (x * x);
        if u < squeeze || u.ln() < 0.5 * x * x + d * (1.0 - v + v.ln()) {
            stats.accepts += 1;
            return (d * v).ln() + src.next_unit().ln() / alpha;
        }
    }
}

/// Standard normal draw via the Box–Muller transform (two uniforms).
fn standard_normal(src: &mut UniformSource) -> f64 {
    let u1 = src.next_unit();
    let u2 = src.next_unit();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Predicted fraction of natural-scale draws that underflow to exact zero:
/// `P(Y < realmin) = 1 − F_Z(α·L)` with `L = −log(realmin)` and `F_Z` the
/// exact CDF of `Z = −α·log Y`.
pub fn underflow_fraction_prediction(shape: ShapeParam) -> Result<f64> {
    let l = -f64::MIN_POSITIVE.ln();
    Ok(1.0 - gof::exact_cdf_z(shape.alpha() * l, shape)?)
}
