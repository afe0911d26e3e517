//! End-to-end tests of the binary: exit codes, determinism across runs and
//! worker counts, and round-trippable CSV output.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smallgamma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

/// Re-emit every numeric CSV cell from its parsed value; full round-trip
/// formatting means the bytes must not change.
fn assert_csv_round_trips(text: &str) {
    for line in text.lines() {
        for cell in line.split(',') {
            if let Ok(value) = cell.parse::<f64>() {
                assert_eq!(
                    format!("{value}"),
                    cell,
                    "cell {cell:?} does not round-trip"
                );
            }
        }
    }
}

#[test]
fn sample_is_deterministic_across_runs_and_workers() {
    let base = ["sample", "--alpha", "0.001", "--n", "100000", "--seed", "7"];
    let first = stdout_of(&base);
    let second = stdout_of(&base);
    assert_eq!(first, second, "re-run changed output");
    let mut with_workers = base.to_vec();
    with_workers.extend(["--workers", "4"]);
    let parallel = stdout_of(&with_workers);
    assert_eq!(first, parallel, "worker count changed output");
    assert_eq!(first.lines().count(), 100000);
    for line in first.lines() {
        let v: f64 = line.parse().expect("numeric line");
        assert!(v.is_finite());
    }
}

#[test]
fn sample_rejects_out_of_range_shape_with_exit_2() {
    for bad in ["1.5", "0", "1", "-0.2", "nan"] {
        let out = run(&["sample", "--alpha", bad, "--n", "5"]);
        assert_eq!(out.status.code(), Some(2), "alpha {bad}");
        assert!(out.stdout.is_empty(), "no rows on invalid alpha {bad}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(
            err.contains("(0, 1)") || err.contains("cannot parse"),
            "{err}"
        );
    }
}

#[test]
fn sample_supports_empty_batches() {
    let text = stdout_of(&["sample", "--alpha", "0.5", "--n", "0"]);
    assert!(text.is_empty());
}

#[test]
fn sample_natural_scale_underflows_at_the_predicted_rate() {
    let text = stdout_of(&[
        "sample", "--alpha", "0.001", "--n", "100000", "--scale", "natural",
    ]);
    let zeros = text.lines().filter(|l| *l == "0").count();
    let frac = zeros as f64 / 100000.0;
    // Golden prediction P(Y < realmin) at alpha = 0.001 is 0.49272.
    assert!((frac - 0.49272).abs() < 0.0066, "zero fraction {frac}");
}

#[test]
fn validate_passes_on_default_ladder_and_emits_round_trip_csv() {
    let text = stdout_of(&["validate"]);
    let mut lines = text.lines();
    let header = lines.next().expect("header");
    assert_eq!(
        header,
        "alpha,n,ks_stat_exact,ks_stat_exp1,p_value_exact,mean_observed,mean_theory,\
         var_observed,var_theory,cf_max_abs_err,accept_rate_observed,accept_rate_theory"
    );
    assert_eq!(lines.count(), 4, "one row per ladder shape");
    assert_csv_round_trips(&text);
}

#[test]
fn validate_obj_format_emits_one_document_per_report() {
    let text = stdout_of(&[
        "validate", "--alpha", "0.1,0.5", "--n", "2000", "--seed", "3",
    ]);
    // CSV is the default; obj emits JSON objects instead.
    assert!(text.starts_with("alpha,"));
    let text = stdout_of(&[
        "validate", "--alpha", "0.1,0.5", "--n", "2000", "--seed", "3", "--format", "obj",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        assert!(line.starts_with('{') && line.ends_with('}'));
        for field in [
            "\"alpha\":",
            "\"p_value_exact\":",
            "\"accept_rate_theory\":",
        ] {
            assert!(line.contains(field), "missing {field} in {line}");
        }
    }
}

#[test]
fn validate_rejects_tiny_samples_with_exit_2() {
    let out = run(&["validate", "--n", "50"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_output_is_reproducible() {
    let args = [
        "validate", "--alpha", "0.1,0.01", "--n", "5000", "--seed", "11",
    ];
    let baseline = stdout_of(&args);
    assert_eq!(baseline, stdout_of(&args));
    let mut with_workers = args.to_vec();
    with_workers.extend(["--workers", "4"]);
    assert_eq!(baseline, stdout_of(&with_workers));
}

#[test]
fn every_subcommand_accepts_workers() {
    assert!(
        run(&["bench", "--alpha", "0.5", "--n", "1000", "--workers", "4"])
            .status
            .success()
    );
    assert!(run(&["curves", "--workers", "4", "--z-grid", "0:1:4"])
        .status
        .success());
}

#[test]
fn validate_accepts_custom_cf_grid() {
    let narrow = stdout_of(&[
        "validate", "--alpha", "0.1", "--n", "1000", "--t-grid", "-1:1:0.5",
    ]);
    let wide = stdout_of(&["validate", "--alpha", "0.1", "--n", "1000"]);
    let cf_col = |text: &str| -> f64 {
        text.lines()
            .nth(1)
            .unwrap()
            .split(',')
            .nth(9)
            .unwrap()
            .parse()
            .unwrap()
    };
    // The CF error grows with |t|, so the narrow grid reports a smaller max.
    assert!(cf_col(&narrow) < cf_col(&wide));
}

#[test]
fn bench_emits_expected_columns_and_sane_rows() {
    let text = stdout_of(&["bench", "--alpha", "0.5,0.1,0.01", "--n", "50000"]);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "sampler,alpha,n,draws_per_sec,proposals_per_accept,underflow_frac"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 9, "three samplers, three shapes");
    let mut log_ar_ppa = Vec::new();
    for row in &rows {
        let sampler = row[0];
        let ppa: f64 = row[4].parse().unwrap();
        let underflow: f64 = row[5].parse().unwrap();
        assert!(ppa >= 1.0, "{sampler} proposals/accept {ppa}");
        match sampler {
            "log-ar" | "marsaglia-tsang-log" => {
                assert_eq!(underflow, 0.0, "{sampler} is on the log scale")
            }
            "ahrens-dieter-gs" => assert!((0.0..1.0).contains(&underflow)),
            other => panic!("unexpected sampler tag {other}"),
        }
        if sampler == "log-ar" {
            log_ar_ppa.push(ppa);
        }
    }
    // Efficiency improves as the shape shrinks: 0.5 -> 0.1 -> 0.01.
    assert!(log_ar_ppa[0] > log_ar_ppa[1] && log_ar_ppa[1] > log_ar_ppa[2]);
    assert_csv_round_trips(&text);
    // At alpha = 0.01 the proposals-per-accept column sits within 1% of the
    // inverse closed-form rate 1 + w.
    let w = 0.01 / (std::f64::consts::E * 0.99);
    assert!(
        (log_ar_ppa[2] * (1.0 / (1.0 + w)) - 1.0).abs() < 0.01,
        "ppa {} vs 1/r {}",
        log_ar_ppa[2],
        1.0 + w
    );
}

#[test]
fn curves_envelope_dominates_and_sections_round_trip() {
    let text = stdout_of(&["curves", "--alpha", "0.1", "--z-grid", "0:8:81"]);
    let sections: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(sections.len(), 2, "two CSV sections");

    let mut envelope = sections[0].lines();
    assert_eq!(envelope.next().unwrap(), "z,h,eta");
    let mut first_row = true;
    for row in envelope {
        let cells: Vec<f64> = row.split(',').map(|c| c.parse().unwrap()).collect();
        let (z, h, eta) = (cells[0], cells[1], cells[2]);
        assert!(eta >= h, "eta {eta} < h {h} at z = {z}");
        if first_row {
            // At z = 0 the target sits exactly e^{-1} below the envelope.
            assert!((h - eta * (-1.0f64).exp()).abs() < 1e-15);
            first_row = false;
        }
    }

    let mut rate = sections[1].lines();
    assert_eq!(rate.next().unwrap(), "alpha,r,approx");
    let rows: Vec<Vec<f64>> = rate
        .map(|row| row.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 200);
    assert!(rows[0][1] > 0.999, "r at tiny alpha should approach 1");
    for pair in rows.windows(2) {
        assert!(pair[0][1] > pair[1][1], "r must decrease in alpha");
    }
    assert_csv_round_trips(&text);
}

#[test]
fn curves_writes_to_files() {
    let dir = std::env::temp_dir().join(format!("smallgamma-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("curves.csv");
    let out = run(&["curves", "--alpha", "0.1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("z,h,eta\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unwritable_output_path_exits_1() {
    let out = run(&[
        "sample",
        "--alpha",
        "0.5",
        "--n",
        "1",
        "--out",
        "/nonexistent-dir/never/out.txt",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_flags_exit_2() {
    let out = run(&["sample", "--alpha", "0.5", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
