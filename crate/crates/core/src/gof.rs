//! Statistical verification: the exact distribution of `Z = −α·log Y`,
//! Kolmogorov–Smirnov testing, moment identities, and convergence of the
//! characteristic function to the unit-exponential limit.

use crate::error::{Error, Result};
use crate::rng::UniformSource;
use crate::sampler::{sample_z, EnvelopeParams, SamplerStats, ShapeParam};
use crate::specfun::{
    digamma, log_gamma, log_gamma_complex, log_gamma_raw, trigamma, ComplexValue,
};

/// Exact CDF of `Z = −α·log Y`: `P(Z ≤ z) = P(Y ≥ e^{−z/α}) = Q(α, e^{−z/α})`.
///
/// Accepts ±∞. The inner argument is handed to the incomplete gamma
/// function in log form: for small α the tail `x^α = e^{−z}` matters long
/// after `x = e^{−z/α}` itself has underflowed, so exponentiating first
/// would pin the CDF to 1 across most of the right tail.
pub fn exact_cdf_z(z: f64, shape: ShapeParam) -> Result<f64> {
    if z.is_nan() {
        return Err(Error::Domain("exact_cdf_z requires z != NaN".into()));
    }
    crate::specfun::reg_inc_gamma_pair_logx(shape.alpha(), -z / shape.alpha()).map(|(_, q)| q)
}

/// Two-sided Kolmogorov–Smirnov statistic and asymptotic p-value of a
/// sample against a reference CDF.
///
/// `D_n = sup_x |ECDF(x) − F(x)|` from the sorted-sample formula; the
/// p-value is the Kolmogorov series at `√n·D_n`.
pub fn ks_test<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> Result<(f64, f64)> {
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut sorted = samples.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("samples must not contain NaN"));
    let n = sorted.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        let above = (i + 1) as f64 / n - f;
        let below = f - i as f64 / n;
        d = d.max(above).max(below);
    }
    Ok((d, kolmogorov_p(n.sqrt() * d)))
}

/// Upper tail of the asymptotic Kolmogorov distribution,
/// `P(√n·D_n > x) = 2 Σ_{k≥1} (−1)^{k−1} e^{−2k²x²}`, truncated once terms
/// fall below 1e-12 and clamped to [0, 1].
pub fn kolmogorov_p(x: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..10_000u64 {
        let term = (-2.0 * (k * k) as f64 * x * x).exp();
        sum += sign * term;
        if term < 1e-12 {
            break;
        }
        sign = -sign;
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Sample moments of `Z` against the closed forms
/// `E(Z) = 1 − α·f₁(α+1)` and `V(Z) = 1 + α²·f₂(α+1)`.
#[derive(Clone, Copy, Debug)]
pub struct MomentSummary {
    pub mean_observed: f64,
    pub mean_theory: f64,
    /// `(mean_observed − mean_theory)` over the standard error `s/√n`.
    pub mean_discrepancy: f64,
    pub var_observed: f64,
    pub var_theory: f64,
    /// `(var_observed − var_theory)` over the large-sample standard error
    /// `√((m₄ − s⁴)/n)`.
    pub var_discrepancy: f64,
}

/// Compare sample mean and variance of a `Z`-batch with the digamma and
/// trigamma moment identities, reporting standardized discrepancies.
pub fn moment_check(samples: &[f64], shape: ShapeParam) -> Result<MomentSummary> {
    if samples.len() < 2 {
        return Err(Error::InsufficientSample {
            min: 2,
            len: samples.len(),
        });
    }
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let mut m2 = 0.0;
    let mut m4 = 0.0;
    for &x in samples {
        let d = x - mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    let var = m2 / (n - 1.0);
    m4 /= n;

    let alpha = shape.alpha();
    let mean_theory = 1.0 - alpha * digamma(alpha + 1.0)?;
    let var_theory = 1.0 + alpha * alpha * trigamma(alpha + 1.0)?;
    let mean_se = (var / n).sqrt();
    let var_se = ((m4 - var * var) / n).sqrt();
    Ok(MomentSummary {
        mean_observed: mean,
        mean_theory,
        mean_discrepancy: (mean - mean_theory) / mean_se,
        var_observed: var,
        var_theory,
        var_discrepancy: (var - var_theory) / var_se,
    })
}

/// Characteristic function of `Z`: `φ_α(t) = Γ(α − iαt)/Γ(α)`, evaluated as
/// `exp(log Γ(α − iαt) − log Γ(α))`.
pub fn cf_exact(shape: ShapeParam, t: f64) -> Result<ComplexValue> {
    let alpha = shape.alpha();
    let num = log_gamma_complex(ComplexValue::new(alpha, -alpha * t))?;
    let den = log_gamma(alpha)?;
    Ok((num - ComplexValue::new(den, 0.0)).exp())
}

/// Maximum distance over a `t`-grid between `φ_α` and the unit-exponential
/// characteristic function `1/(1 − it)`.
pub fn cf_limit_check(shape: ShapeParam, t_grid: &[f64]) -> Result<f64> {
    let one = ComplexValue::new(1.0, 0.0);
    let mut worst = 0.0f64;
    for &t in t_grid {
        let limit = one / ComplexValue::new(1.0, -t);
        let err = (cf_exact(shape, t)? - limit).modulus();
        worst = worst.max(err);
    }
    Ok(worst)
}

/// Default grid for characteristic-function comparisons: t ∈ [−5, 5] in
/// steps of 0.5. The limit CF has scale-1 decay, so this covers the
/// informative region.
pub fn default_t_grid() -> Vec<f64> {
    (-10..=10).map(|k| k as f64 * 0.5).collect()
}

/// Normalized log density of `Z`: `log h(z) − log Γ(α+1)`; integrates to 1.
pub fn normalized_log_density(z: f64, shape: ShapeParam) -> f64 {
    crate::sampler::log_h(z, shape) - log_gamma_raw(shape.alpha() + 1.0)
}

/// Goodness-of-fit results for one sampled batch.
#[derive(Clone, Copy, Debug)]
pub struct GofReport {
    pub alpha: f64,
    pub n: usize,
    /// KS distance against the exact CDF `Q(α, e^{−z/α})`.
    pub ks_stat_exact: f64,
    /// KS distance against the unit-exponential CDF.
    pub ks_stat_exp1: f64,
    /// Asymptotic KS p-value for the exact-CDF test.
    pub p_value_exact: f64,
    pub mean_observed: f64,
    pub mean_theory: f64,
    pub var_observed: f64,
    pub var_theory: f64,
    /// Max over the t-grid of `|φ_α(t) − 1/(1−it)|`.
    pub cf_max_abs_err: f64,
    pub accept_rate_observed: f64,
    pub accept_rate_theory: f64,
}

/// Field names of [`GofReport`] in serialization order.
pub const REPORT_FIELDS: [&str; 12] = [
    "alpha",
    "n",
    "ks_stat_exact",
    "ks_stat_exp1",
    "p_value_exact",
    "mean_observed",
    "mean_theory",
    "var_observed",
    "var_theory",
    "cf_max_abs_err",
    "accept_rate_observed",
    "accept_rate_theory",
];

impl GofReport {
    fn values(&self) -> [String; 12] {
        [
            format!("{}", self.alpha),
            format!("{}", self.n),
            format!("{}", self.ks_stat_exact),
            format!("{}", self.ks_stat_exp1),
            format!("{}", self.p_value_exact),
            format!("{}", self.mean_observed),
            format!("{}", self.mean_theory),
            format!("{}", self.var_observed),
            format!("{}", self.var_theory),
            format!("{}", self.cf_max_abs_err),
            format!("{}", self.accept_rate_observed),
            format!("{}", self.accept_rate_theory),
        ]
    }

    /// Flat key-value rendering, one `name value` line per field.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        for (name, value) in REPORT_FIELDS.iter().zip(self.values()) {
            out.push_str(name);
            out.push(' ');
            out.push_str(&value);
            out.push('\n');
        }
        out
    }

    /// Structured-object rendering: one JSON document on a single line.
    pub fn to_json(&self) -> String {
        let body = REPORT_FIELDS
            .iter()
            .zip(self.values())
            .map(|(name, value)| format!("\"{name}\":{value}"))
            .collect::<Vec<_>>()
            .join(",");
        format!("{{{body}}}")
    }

    pub fn csv_header() -> String {
        REPORT_FIELDS.join(",")
    }

    pub fn to_csv_row(&self) -> String {
        self.values().join(",")
    }
}

/// A [`GofReport`] plus the pieces its pass/fail thresholds need.
#[derive(Clone, Copy, Debug)]
pub struct GofChecks {
    pub report: GofReport,
    pub moments: MomentSummary,
    pub stats: SamplerStats,
}

/// Sample `n` draws of `Z` and run the full battery of checks on them.
///
/// Deterministic given the source's seed and stream. Requires `n ≥ 100`.
pub fn run_checks(shape: ShapeParam, n: usize, src: &mut UniformSource) -> Result<GofChecks> {
    run_checks_with_grid(shape, n, src, &default_t_grid())
}

/// [`run_checks`] with an explicit characteristic-function grid.
pub fn run_checks_with_grid(
    shape: ShapeParam,
    n: usize,
    src: &mut UniformSource,
    t_grid: &[f64],
) -> Result<GofChecks> {
    if n < 100 {
        return Err(Error::InsufficientSample { min: 100, len: n });
    }
    let params = EnvelopeParams::new(shape);
    let mut stats = SamplerStats::default();
    let z: Vec<f64> = (0..n).map(|_| sample_z(&params, src, &mut stats)).collect();

    let (ks_exact, p_exact) = ks_test(&z, |v| {
        exact_cdf_z(v, shape).expect("validated shape admits every finite z")
    })?;
    let (ks_exp1, _) = ks_test(&z, exp1_cdf)?;
    let moments = moment_check(&z, shape)?;
    let cf_max_abs_err = cf_limit_check(shape, t_grid)?;

    let report = GofReport {
        alpha: shape.alpha(),
        n,
        ks_stat_exact: ks_exact,
        ks_stat_exp1: ks_exp1,
        p_value_exact: p_exact,
        mean_observed: moments.mean_observed,
        mean_theory: moments.mean_theory,
        var_observed: moments.var_observed,
        var_theory: moments.var_theory,
        cf_max_abs_err,
        accept_rate_observed: stats.accepts as f64 / stats.proposals as f64,
        accept_rate_theory: params.acceptance_probability(),
    };
    Ok(GofChecks {
        report,
        moments,
        stats,
    })
}

/// Sample `n` draws of `Z` and produce the goodness-of-fit report.
pub fn run_report(shape: ShapeParam, n: usize, src: &mut UniformSource) -> Result<GofReport> {
    run_checks(shape, n, src).map(|c| c.report)
}

/// CDF of the unit-rate exponential distribution.
pub fn exp1_cdf(z: f64) -> f64 {
    if z <= 0.0 {
        0.0
    } else {
        -(-z).exp_m1()
    }
}
