//! Gamma random-variate generation for small shape parameters.
//!
//! When the shape α of a `Gam(α, 1)` distribution sits near zero, sampling
//! on the natural scale breaks down: typical variates fall below the
//! smallest positive double and come back as exact zeros. This crate
//! generates `log Y` directly through an acceptance–rejection sampler for
//! the normalized variate `Z = −α·log Y`, whose distribution approaches
//! `Exp(1)` as α → 0, so the acceptance rate approaches one exactly where
//! natural-scale methods fail.
//!
//! The crate ships four pieces:
//!
//! * [`sampler`] — the log-scale sampler itself, with its envelope
//!   constants and acceptance accounting;
//! * [`specfun`] — the special functions behind the density, the moments,
//!   the exact CDF, and the characteristic function;
//! * [`gof`] — goodness-of-fit machinery (exact CDF, KS tests, moment
//!   identities, CF convergence) used to validate the sampler;
//! * [`baselines`] — reference samplers for accuracy and throughput
//!   comparison, including the natural-scale one that demonstrates the
//!   underflow failure.
//!
//! ```
//! use smallgamma::{sample_log_gamma, ShapeParam, UniformSource};
//!
//! let shape = ShapeParam::new(0.001).unwrap();
//! let mut src = UniformSource::new(42, 0);
//! let (log_y, stats) = sample_log_gamma(shape, 1000, &mut src);
//! assert!(log_y.iter().all(|v| v.is_finite()));
//! assert_eq!(stats.accepts, 1000);
//! ```

pub mod baselines;
pub mod error;
pub mod gof;
pub mod rng;
pub mod sampler;
pub mod specfun;

pub use error::{Error, Result};
pub use gof::{GofChecks, GofReport, MomentSummary};
pub use rng::{UniformSource, DEFAULT_SEED};
pub use sampler::{
    acceptance_rate, sample_log_gamma, sample_z, AcceptanceRate, EnvelopeParams, SamplerStats,
    ShapeParam,
};
pub use specfun::ComplexValue;
