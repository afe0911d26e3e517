//! Subcommand implementations.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use smallgamma::baselines::{ahrens_dieter_gs_counted, marsaglia_tsang_log_counted, BaselineKind};
use smallgamma::gof::{run_checks_with_grid, GofReport};
use smallgamma::sampler::{
    natural_scale, sample_log_gamma, sample_z, EnvelopeParams, SamplerStats,
};
use smallgamma::{ShapeParam, UniformSource};

use crate::args::{
    linspace, parse_alpha_list, parse_point_grid, parse_step_grid, BenchArgs, CurvesArgs, Format,
    SampleArgs, Scale, ValidateArgs,
};

/// Draws per stream chunk. Chunk `c` always comes from stream id `c`,
/// regardless of how many workers process the chunks, so output bytes are
/// a function of `(alpha, n, seed, scale)` alone.
pub const CHUNK_LEN: u64 = 65_536;

/// Tag under which the acceptance–rejection log-scale sampler appears in
/// benchmark output, alongside the [`BaselineKind`] tags.
pub const LOG_AR_TAG: &str = "log-ar";

pub enum CmdError {
    /// Exit 1: the output sink failed.
    Io(io::Error),
    /// Exit 2: arguments were syntactically or semantically invalid.
    InvalidArgs(String),
    /// Exit 3: validation thresholds were not met.
    ValidationFailed(usize),
}

impl From<io::Error> for CmdError {
    fn from(e: io::Error) -> Self {
        CmdError::Io(e)
    }
}

fn open_output(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn single_alpha(raw: &str) -> Result<ShapeParam, CmdError> {
    let list = parse_alpha_list(raw).map_err(CmdError::InvalidArgs)?;
    if list.len() != 1 {
        return Err(CmdError::InvalidArgs(format!(
            "this subcommand takes exactly one shape parameter, got {}",
            list.len()
        )));
    }
    Ok(list[0])
}

/// Generate `n` log-scale draws split over fixed-size stream chunks.
///
/// Chunk `c` covers draws `[c*CHUNK_LEN, (c+1)*CHUNK_LEN)` and is produced
/// from `UniformSource::new(seed, c)`; workers pick chunks round-robin and
/// the result is concatenated in chunk order, so any worker count yields
/// identical output. Stats merge by summation.
pub fn sample_chunked(
    shape: ShapeParam,
    n: u64,
    seed: u64,
    workers: u32,
) -> (Vec<f64>, SamplerStats) {
    let chunk_count = n.div_ceil(CHUNK_LEN);
    let workers = (workers as u64).min(chunk_count.max(1)) as usize;
    let mut chunks: Vec<(u64, Vec<f64>, SamplerStats)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|worker| {
                scope.spawn(move || {
                    let mut produced = Vec::new();
                    let mut chunk = worker as u64;
                    while chunk < chunk_count {
                        let len = CHUNK_LEN.min(n - chunk * CHUNK_LEN) as usize;
                        let mut src = UniformSource::new(seed, chunk);
                        let (samples, stats) = sample_log_gamma(shape, len, &mut src);
                        produced.push((chunk, samples, stats));
                        chunk += workers as u64;
                    }
                    produced
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sampler workers do not panic"))
            .collect()
    });
    chunks.sort_unstable_by_key(|(idx, _, _)| *idx);

    let mut all = Vec::with_capacity(n as usize);
    let mut stats = SamplerStats::default();
    for (_, samples, chunk_stats) in chunks {
        all.extend(samples);
        stats.merge(&chunk_stats);
    }
    (all, stats)
}

pub fn cmd_sample(args: &SampleArgs) -> Result<(), CmdError> {
    let shape = single_alpha(&args.alpha)?;
    let (log_samples, _) = sample_chunked(shape, args.n, args.seed, args.workers);
    let mut out = open_output(args.out.as_deref())?;
    match args.scale {
        Scale::Log => {
            for v in &log_samples {
                writeln!(out, "{v}")?;
            }
        }
        Scale::Natural => {
            for v in natural_scale(&log_samples) {
                writeln!(out, "{v}")?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

pub fn cmd_validate(args: &ValidateArgs) -> Result<(), CmdError> {
    let shapes = parse_alpha_list(&args.alpha).map_err(CmdError::InvalidArgs)?;
    let t_grid = parse_step_grid(&args.t_grid).map_err(CmdError::InvalidArgs)?;
    if args.n < 100 {
        return Err(CmdError::InvalidArgs(format!(
            "validation needs n >= 100, got {}",
            args.n
        )));
    }

    let mut failures = 0usize;
    let mut out = open_output(args.out.as_deref())?;
    if args.format == Format::Csv {
        writeln!(out, "{}", GofReport::csv_header())?;
    }
    for (index, &shape) in shapes.iter().enumerate() {
        let mut src = UniformSource::new(args.seed, index as u64);
        let checks = run_checks_with_grid(shape, args.n as usize, &mut src, &t_grid)
            .expect("arguments were validated");
        let report = checks.report;
        match args.format {
            Format::Csv => writeln!(out, "{}", report.to_csv_row())?,
            Format::Obj => writeln!(out, "{}", report.to_json())?,
        }
        if !report_passes(&report, &checks) {
            failures += 1;
        }
    }
    out.flush()?;
    if failures > 0 {
        return Err(CmdError::ValidationFailed(failures));
    }
    Ok(())
}

/// Thresholds behind validate's exit status: KS p-value above 1%,
/// standardized moment discrepancies inside ±4, acceptance rate within
/// four binomial standard errors of its envelope value.
fn report_passes(report: &GofReport, checks: &smallgamma::GofChecks) -> bool {
    let accept_se = (report.accept_rate_theory * (1.0 - report.accept_rate_theory)
        / checks.stats.proposals as f64)
        .sqrt();
    report.p_value_exact > 0.01
        && checks.moments.mean_discrepancy.abs() < 4.0
        && checks.moments.var_discrepancy.abs() < 4.0
        && (report.accept_rate_observed - report.accept_rate_theory).abs() < 4.0 * accept_se
}

pub fn cmd_bench(args: &BenchArgs) -> Result<(), CmdError> {
    let shapes = parse_alpha_list(&args.alpha).map_err(CmdError::InvalidArgs)?;
    let n = args.n as usize;
    let mut out = open_output(args.out.as_deref())?;
    writeln!(
        out,
        "sampler,alpha,n,draws_per_sec,proposals_per_accept,underflow_frac"
    )?;
    for (index, &shape) in shapes.iter().enumerate() {
        let base_stream = 3 * index as u64;

        let mut src = UniformSource::new(args.seed, base_stream);
        let params = EnvelopeParams::new(shape);
        let mut stats = SamplerStats::default();
        let started = Instant::now();
        for _ in 0..n {
            std::hint::black_box(sample_z(&params, &mut src, &mut stats));
        }
        write_bench_row(&mut out, LOG_AR_TAG, shape, n, started, &stats, 0.0)?;

        let mut src = UniformSource::new(args.seed, base_stream + 1);
        let mut stats = SamplerStats::default();
        let started = Instant::now();
        let mut zeros = 0usize;
        for _ in 0..n {
            zeros += (ahrens_dieter_gs_counted(shape, &mut src, &mut stats) == 0.0) as usize;
        }
        write_bench_row(
            &mut out,
            BaselineKind::AhrensDieterGs.tag(),
            shape,
            n,
            started,
            &stats,
            zeros as f64 / n as f64,
        )?;

        let mut src = UniformSource::new(args.seed, base_stream + 2);
        let mut stats = SamplerStats::default();
        let started = Instant::now();
        for _ in 0..n {
            marsaglia_tsang_log_counted(shape, &mut src, &mut stats);
        }
        write_bench_row(
            &mut out,
            BaselineKind::MarsagliaTsangLog.tag(),
            shape,
            n,
            started,
            &stats,
            0.0,
        )?;
    }
    out.flush()?;
    Ok(())
}

fn write_bench_row(
    out: &mut dyn Write,
    sampler: &str,
    shape: ShapeParam,
    n: usize,
    started: Instant,
    stats: &SamplerStats,
    underflow_frac: f64,
) -> io::Result<()> {
    let elapsed = started.elapsed().as_secs_f64();
    writeln!(
        out,
        "{sampler},{},{n},{},{},{underflow_frac}",
        shape.alpha(),
        n as f64 / elapsed,
        stats.proposals_per_accept(),
    )
}

pub fn cmd_curves(args: &CurvesArgs) -> Result<(), CmdError> {
    let shapes = parse_alpha_list(&args.alpha).map_err(CmdError::InvalidArgs)?;
    let shape = shapes[0];
    let alpha_max = shapes.iter().map(|s| s.alpha()).fold(0.0f64, f64::max);

    let z_grid = match &args.z_grid {
        Some(raw) => parse_point_grid(raw).map_err(CmdError::InvalidArgs)?,
        None => linspace(-6.0 * shape.alpha() * std::f64::consts::LN_10, 8.0, 400),
    };

    let params = EnvelopeParams::new(shape);
    let mut out = open_output(args.out.as_deref())?;

    // Section (a): un-normalized target and envelope for the first shape.
    writeln!(out, "z,h,eta")?;
    for &z in &z_grid {
        let h = smallgamma::sampler::log_h(z, shape).exp();
        let eta = smallgamma::sampler::log_eta(z, &params).exp();
        writeln!(out, "{z},{h},{eta}")?;
    }

    // Section (b): acceptance-rate curve over (0, alpha_max].
    writeln!(out)?;
    writeln!(out, "alpha,r,approx")?;
    let points = 200;
    for k in 1..=points {
        let alpha = alpha_max * k as f64 / points as f64;
        let rate = smallgamma::acceptance_rate(ShapeParam::new(alpha).expect("grid within (0,1)"));
        writeln!(out, "{alpha},{},{}", rate.exact, rate.approx)?;
    }
    out.flush()?;
    Ok(())
}
