//! Shared test-only oracles, kept deliberately independent of the library's
//! computation paths: step-halving Simpson quadrature plus exact
//! alternating series, so golden values and implementations check each
//! other honestly.

#![allow(dead_code)]

use smallgamma::ComplexValue;

/// Simpson quadrature with panel doubling until the estimate is stable to
/// the requested relative tolerance.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64) -> f64 {
    let mut panels = 64usize;
    let mut prev = composite_simpson(f, a, b, panels);
    loop {
        panels *= 2;
        let cur = composite_simpson(f, a, b, panels);
        if (cur - prev).abs() <= rel_tol * cur.abs() + 1e-300 || panels >= (1 << 22) {
            return cur;
        }
        prev = cur;
    }
}

fn composite_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut sum = f(a) + f(b);
    for i in 1..panels {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += weight * f(a + h * i as f64);
    }
    sum * h / 3.0
}

/// Upper incomplete gamma integral `∫_x^∞ t^{a−1} e^{−t} dt` by quadrature,
/// for `x ≥ ~0.5` where the integrand is regular. The cutoff leaves a tail
/// far below the quadrature tolerance.
pub fn gamma_upper_integral(a: f64, x: f64) -> f64 {
    let integrand = |t: f64| ((a - 1.0) * t.ln() - t).exp();
    let cutoff = x.max(1.0) + 80.0 + 8.0 * a;
    adaptive_simpson(&integrand, x, cutoff, 1e-14)
}

/// Lower incomplete gamma `γ(a, x)` for `x ≤ 1` via the exact alternating
/// series `x^a Σ (−1)^n xⁿ / (n! (a+n))` obtained by expanding `e^{−t}`.
pub fn gamma_lower_series(a: f64, x: f64) -> f64 {
    let mut sum = 0.0;
    let mut coeff = 1.0; // (-1)^n x^n / n!
    for n in 0..120u32 {
        let term = coeff / (a + n as f64);
        sum += term;
        coeff *= -x / (n + 1) as f64;
        if term.abs() < 1e-20 * sum.abs() {
            break;
        }
    }
    (a * x.ln()).exp() * sum
}

/// Complete gamma function assembled from the two independent halves at
/// the split point 1: `Γ(a) = γ(a, 1) + Γ(a, 1)`.
pub fn gamma_complete(a: f64) -> f64 {
    gamma_lower_series(a, 1.0) + gamma_upper_integral(a, 1.0)
}

/// Regularized upper incomplete gamma `Q(a, x)` by quadrature and series
/// only: the independent oracle for the library's series/continued-fraction
/// implementation.
pub fn q_oracle(a: f64, x: f64) -> f64 {
    let total = gamma_complete(a);
    if x >= 1.0 {
        gamma_upper_integral(a, x) / total
    } else {
        1.0 - gamma_lower_series(a, x) / total
    }
}

/// Euler–Mascheroni constant from `γ = −∫_0^∞ e^{−t} ln t dt`, split as an
/// exact series on [0, 1] plus quadrature on [1, ∞).
pub fn euler_gamma_oracle() -> f64 {
    // ∫_0^1 e^{-t} ln t dt = -Σ (-1)^n / (n! (n+1)^2)
    let mut series = 0.0;
    let mut coeff = 1.0; // (-1)^n / n!
    for n in 0..60u32 {
        let np1 = (n + 1) as f64;
        series += coeff / (np1 * np1);
        coeff /= -np1;
    }
    let tail = adaptive_simpson(&|t: f64| (-t).exp() * t.ln(), 1.0, 60.0, 1e-14);
    series - tail
}

/// Complex gamma function `Γ(z)` for `z.re > 0` and moderate `|z.im|`,
/// from the same split: exact series for `γ(z, 1)` plus componentwise
/// quadrature for `Γ(z, 1)`.
pub fn gamma_complex_oracle(z: ComplexValue) -> ComplexValue {
    let mut series = ComplexValue::new(0.0, 0.0);
    let mut coeff = 1.0; // (-1)^n / n!
    for n in 0..80u32 {
        let term = ComplexValue::new(coeff, 0.0) / (z + ComplexValue::new(n as f64, 0.0));
        series = series + term;
        coeff /= -((n + 1) as f64);
        if term.modulus() < 1e-20 * series.modulus() {
            break;
        }
    }

    // Γ(z, 1) = ∫_1^∞ exp((z-1) ln t - t) dt
    let zm1 = z - ComplexValue::new(1.0, 0.0);
    let upper = |t: f64| (zm1 * t.ln() - ComplexValue::new(t, 0.0)).exp();
    let re_part = adaptive_simpson(&|t: f64| upper(t).re, 1.0, 80.0, 1e-13);
    let im_part = adaptive_simpson(&|t: f64| upper(t).im, 1.0, 80.0, 1e-13);
    series + ComplexValue::new(re_part, im_part)
}

/// Two-sample Kolmogorov–Smirnov statistic and asymptotic p-value.
pub fn ks_two_sample(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let mut xs = xs.to_vec();
    let mut ys = ys.to_vec();
    xs.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    ys.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let (n, m) = (xs.len(), ys.len());
    let mut i = 0usize;
    let mut j = 0usize;
    let mut d = 0.0f64;
    while i < n && j < m {
        let x = xs[i];
        let y = ys[j];
        if x <= y {
            i += 1;
        }
        if y <= x {
            j += 1;
        }
        let gap = (i as f64 / n as f64 - j as f64 / m as f64).abs();
        d = d.max(gap);
    }
    let n_eff = (n * m) as f64 / (n + m) as f64;
    (d, smallgamma::gof::kolmogorov_p(n_eff.sqrt() * d))
}
