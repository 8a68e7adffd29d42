//! End-to-end CLI behavior: exit codes, output formats, and determinism
//! details not covered by the acceptance suite.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_statecmp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn usage_errors_exit_2() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["universal", "--dim", "1"],
        vec!["universal", "--dim", "9"],
        vec!["universal", "--same-fraction", "1.5"],
        vec!["twostate", "--theta", "2.0"],
        vec!["twostate", "--theta", "-0.1"],
        vec!["twostate", "--theta", "0", "--strategy", "collective_unambiguous"],
        vec!["twostate", "--theta", "0", "--strategy", "all"],
        vec!["twostate", "--theta", "0.2", "--trials", "10"],
        vec!["bounds", "--theta-grid", "1:0:5"],
        vec!["bounds", "--theta-grid", "0:0.7:5"],
        vec!["bounds", "--theta-grid", "nonsense"],
        vec!["bounds", "--theta-grid", "0.1:0.2"],
        vec!["refute", "--dim", "12"],
        vec!["unknown-subcommand"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {}", stdout(&out));
    }
}

#[test]
fn theta_zero_min_error_is_fine() {
    let out = run(&["twostate", "--theta", "0", "--strategy", "individual_min_error", "--trials", "2000"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"closed_form\": 0.5"));
}

#[test]
fn theta_quarter_pi_decimal_accepted() {
    // A 10-digit decimal of π/4 overshoots the boundary by ~3e-11 and must
    // still be accepted; all error/inconclusive columns are zero there.
    let out = run(&[
        "twostate", "--theta", "0.7853981634", "--strategy", "all", "--trials", "2000",
        "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let closed_form: f64 = cells[2].parse().unwrap();
        let empirical: f64 = cells[3].parse().unwrap();
        assert!(closed_form.abs() < 1e-12, "line {line}");
        assert!(empirical.abs() < 1e-12, "line {line}");
    }
}

#[test]
fn same_fraction_one_detects_nothing() {
    let out = run(&["universal", "--same-fraction", "1", "--trials", "5000"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"metric\": \"different\""));
    assert!(text.contains("\"empirical\": 0,"));
    assert!(!text.contains("detection_given_different"));
}

#[test]
fn csv_cells_round_trip_through_json() {
    let args = ["bounds", "--theta-grid", "0.1:0.7:7"];
    let json = stdout(&run(&args.iter().chain(&["--format", "json"]).copied().collect::<Vec<_>>()));
    let csv = stdout(&run(&args.iter().chain(&["--format", "csv"]).copied().collect::<Vec<_>>()));
    let mut lines = csv.lines();
    let header = lines.next().unwrap();
    assert_eq!(
        header,
        "theta,single_min_error,single_inconclusive,individual_error,individual_inconclusive,\
         collective_error,collective_inconclusive,helstrom"
    );
    let mut cells_checked = 0;
    for line in lines {
        for cell in line.split(',') {
            assert!(json.contains(cell), "cell {cell} missing from JSON output");
            cells_checked += 1;
        }
    }
    assert_eq!(cells_checked, 7 * 8);
}

#[test]
fn twostate_pi_8_reports_expected_values() {
    let out = run(&[
        "twostate", "--theta", "0.3926990817", "--strategy", "all", "--trials", "50000",
        "--seed", "3", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut found_quarter = 0;
    let mut found_sqrt_half = 0;
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let closed_form: f64 = cells[2].parse().unwrap();
        if (closed_form - 0.25).abs() < 1e-9 {
            found_quarter += 1;
        }
        if (closed_form - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9 {
            found_sqrt_half += 1;
        }
    }
    assert_eq!(found_quarter, 2, "both minimum-error strategies cost 1/4");
    assert_eq!(found_sqrt_half, 1, "collective unambiguous fails with sqrt(2)/2");
}

#[test]
fn bounds_single_point_matches_twostate() {
    let bounds = stdout(&run(&[
        "bounds", "--theta-grid", "0.3926990816987241:0.3926990816987241:1", "--format", "csv",
    ]));
    let row = bounds.lines().nth(1).unwrap();
    let cells: Vec<&str> = row.split(',').collect();
    let individual_error: f64 = cells[3].parse().unwrap();
    let collective_inconclusive: f64 = cells[6].parse().unwrap();
    assert!((individual_error - 0.25).abs() < 1e-10);
    assert!((collective_inconclusive - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
}

#[test]
fn out_flag_writes_file_and_keeps_stdout_empty() {
    let dir = std::env::temp_dir().join(format!("statecmp-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "universal", "--trials", "2000", "--seed", "2", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("\"command\": \"universal\""));
    let direct = stdout(&run(&["universal", "--trials", "2000", "--seed", "2"]));
    assert_eq!(written, direct);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn unwritable_out_path_is_usage_error() {
    let out = run(&["bounds", "--out", "/nonexistent-dir/report.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn under_constrained_refute_warns_but_runs() {
    let out = run(&["refute", "--constraint-samples", "20", "--seed", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("under-constrained"), "stderr: {err}");
}

#[test]
fn different_seeds_differ() {
    let a = stdout(&run(&["universal", "--trials", "5000", "--seed", "1"]));
    let b = stdout(&run(&["universal", "--trials", "5000", "--seed", "2"]));
    assert_ne!(a, b);
}

#[test]
fn refute_csv_has_metrics() {
    let out = run(&["refute", "--constraint-samples", "150", "--seed", "8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("metric,value\n"));
    for metric in [
        "best_feasible_trace",
        "sampled_max_residual",
        "held_out_max_residual",
        "psd_min_eigenvalue",
        "cap_min_eigenvalue",
    ] {
        assert!(text.contains(metric), "missing {metric}");
    }
}
