//! Acceptance–rejection sampler for gamma variates with shape α ∈ (0, 1),
//! generated on the log scale.
//!
//! The sampler targets the normalized variate `Z = −α·log Y` with
//! `Y ~ Gam(α, 1)`. Its density is proportional to
//! `h(z) = exp(−z − e^{−z/α})`, which is bounded by a two-sided exponential
//! envelope: `e^{−z}` on `z ≥ 0` and `wλ·e^{λz}` on `z < 0`, with
//! `λ = 1/α − 1` and `w = α/(e(1−α))`. Proposals come from the matching
//! mixture of two oppositely-oriented exponentials and are accepted with
//! probability `h/η`, evaluated in the log domain so that the inner
//! exponential `e^{−z/α}` never overflows the test. Accepted draws map to
//! `log Y = −z/α`, which stays finite for shapes far below the point where
//! natural-scale samplers start returning exact zeros.

use crate::error::{Error, Result};
use crate::rng::UniformSource;

/// Validated shape parameter, restricted to the open interval (0, 1).
///
/// The envelope construction needs `λ = 1/α − 1 > 0` and `w > 0`, so shapes
/// at or above 1 are rejected; standard samplers cover that range well.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShapeParam {
    alpha: f64,
}

impl ShapeParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha < 1.0 {
            Ok(Self { alpha })
        } else {
            Err(Error::Domain(format!(
                "shape parameter must lie in the open interval (0, 1), got {alpha}"
            )))
        }
    }

    pub fn alpha(self) -> f64 {
        self.alpha
    }
}

/// Precomputed envelope constants for one shape value.
#[derive(Clone, Copy, Debug)]
pub struct EnvelopeParams {
    alpha: f64,
    lambda: f64,
    w: f64,
    r: f64,
}

impl EnvelopeParams {
    pub fn new(shape: ShapeParam) -> Self {
        let alpha = shape.alpha();
        // One shared rounding of (1 - alpha) keeps the identity
        // w * lambda = 1/e exact to a few ulp across the whole shape range.
        let one_minus = 1.0 - alpha;
        let lambda = one_minus / alpha;
        let w = alpha / (std::f64::consts::E * one_minus);
        let r = 1.0 / (1.0 + w);
        Self {
            alpha,
            lambda,
            w,
            r,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Rate of the left (negative) exponential branch, `1/α − 1`.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Mass ratio of the left branch, `α/(e(1−α))`. Satisfies `wλ = 1/e`.
    pub fn w(&self) -> f64 {
        self.w
    }

    /// Right-branch proposal probability and envelope mass ratio, `1/(1+w)`.
    ///
    /// This is the classical closed form quoted for the sampler's
    /// efficiency. Note it treats the target's un-normalized mass as one;
    /// the rejection loop's actual per-proposal acceptance probability
    /// carries that mass as an extra factor — see
    /// [`acceptance_probability`](Self::acceptance_probability).
    pub fn r(&self) -> f64 {
        self.r
    }

    /// Per-proposal acceptance probability of the rejection loop,
    /// `Γ(α+1)/(1+w)`.
    ///
    /// The un-normalized target `e^{−z − e^{−z/α}}` integrates to `Γ(α+1)`
    /// while the envelope integrates to `1+w`, so this — not `r` — is what
    /// empirical accepts/proposals converges to. The two agree in the
    /// α → 0 limit (`Γ(α+1) → 1`); at α = 0.1 they already differ by 0.047.
    pub fn acceptance_probability(&self) -> f64 {
        crate::specfun::log_gamma_raw(self.alpha + 1.0).exp() * self.r
    }
}

/// The classical acceptance-rate formula for a given shape, exact and
/// first-order.
#[derive(Clone, Copy, Debug)]
pub struct AcceptanceRate {
    /// `{1 + α/(e(1−α))}⁻¹`.
    pub exact: f64,
    /// First-order expansion `1 − α/e`, accurate to O(α²).
    pub approx: f64,
}

/// The closed-form rate `r(α)` and its first-order approximation.
///
/// Both converge to 1 as α → 0. For the probability the loop accepts a
/// given proposal, which differs by the target-mass factor `Γ(α+1)`, see
/// [`EnvelopeParams::acceptance_probability`].
pub fn acceptance_rate(shape: ShapeParam) -> AcceptanceRate {
    AcceptanceRate {
        exact: EnvelopeParams::new(shape).r,
        approx: 1.0 - shape.alpha() / std::f64::consts::E,
    }
}

/// Proposal and acceptance counters for one sampling run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SamplerStats {
    /// Envelope draws attempted.
    pub proposals: u64,
    /// Draws accepted (equals the number of returned variates).
    pub accepts: u64,
    /// Proposals taken from the right, Exp(1), branch (`U ≤ r`).
    pub right_branch: u64,
}

impl SamplerStats {
    pub fn merge(&mut self, other: &SamplerStats) {
        self.proposals += other.proposals;
        self.accepts += other.accepts;
        self.right_branch += other.right_branch;
    }

    /// Empirical proposals per accepted draw, the inverse acceptance rate.
    pub fn proposals_per_accept(&self) -> f64 {
        self.proposals as f64 / self.accepts as f64
    }
}

/// Log of the un-normalized target density: `−z − e^{−z/α}`.
///
/// Total on finite inputs: deep in the right tail the inner exponential
/// underflows harmlessly to 0, and deep in the left tail the value saturates
/// at −∞ where the density is effectively zero.
pub fn log_h(z: f64, shape: ShapeParam) -> f64 {
    -z - (-z / shape.alpha()).exp()
}

/// Log of the un-normalized envelope: `−z` for `z ≥ 0`, `−1 + λz` for
/// `z < 0` (the identity `wλ = 1/e` is applied exactly).
pub fn log_eta(z: f64, params: &EnvelopeParams) -> f64 {
    if z >= 0.0 {
        -z
    } else {
        -1.0 + params.lambda * z
    }
}

/// Closed-form log acceptance ratio `log h − log η`, always ≤ 0.
///
/// Right branch: `−e^{−z/α}`. Left branch, with `t = e^{−z/α} > 1`:
/// `1 + log t − t = 1 − z/α − e^{−z/α}`. Only the already-exponentiated `t`
/// can be large and it enters negatively, so the ratio never overflows.
pub fn log_accept_ratio(z: f64, params: &EnvelopeParams) -> f64 {
    let scaled = -z / params.alpha;
    if z >= 0.0 {
        -scaled.exp()
    } else {
        // Clamped: near the tangency point the true value is -t^2/2 for
        // t = e^{-z/alpha} - 1, smaller than one rounding of the sum.
        (1.0 + scaled - scaled.exp()).min(0.0)
    }
}

/// One accepted draw from the normalized density of `Z = −α·log Y`.
///
/// Follows the rejection loop exactly: draw `U`; if `U ≤ r` propose from the
/// right branch reusing `U` via inversion (`z = −log(U/r)`), otherwise
/// propose `z = log(U′)/λ` from the left branch; accept when
/// `log U″ < log h − log η`. The loop terminates with probability one since
/// the acceptance rate is strictly positive for every α ∈ (0, 1).
pub fn sample_z(params: &EnvelopeParams, src: &mut UniformSource, stats: &mut SamplerStats) -> f64 {
    loop {
        stats.proposals += 1;
        let u = src.next_unit();
        let z = if u <= params.r {
            stats.right_branch += 1;
            -(u / params.r).ln()
        } else {
            src.next_unit().ln() / params.lambda
        };
        if src.next_unit().ln() < log_accept_ratio(z, params) {
            stats.accepts += 1;
            return z;
        }
    }
}

/// A batch of `n` independent draws of `log Y`, `Y ~ Gam(α, 1)`, in
/// generation order, together with the run's counters.
///
/// Deterministic given the source's `(seed, stream_id)`. Output is on the
/// log scale; see [`natural_scale`] for the exponentiated values.
pub fn sample_log_gamma(
    shape: ShapeParam,
    n: usize,
    src: &mut UniformSource,
) -> (Vec<f64>, SamplerStats) {
    let params = EnvelopeParams::new(shape);
    let mut stats = SamplerStats::default();
    let alpha = shape.alpha();
    let samples = (0..n)
        .map(|_| -sample_z(&params, src, &mut stats) / alpha)
        .collect();
    (samples, stats)
}

/// Convenience accessor mapping log-scale draws to the natural scale.
///
/// Values below the smallest positive normal double come back as exact
/// zeros (subnormals are flushed, so the cutoff is `log Y < −708.396`) —
/// the failure mode the log-scale output exists to avoid. For α ≲ 0.01
/// this affects a large fraction of every batch.
pub fn natural_scale(log_samples: &[f64]) -> Vec<f64> {
    log_samples
        .iter()
        .map(|&ly| {
            let y = ly.exp();
            if y < f64::MIN_POSITIVE {
                0.0
            } else {
                y
            }
        })
        .collect()
}
