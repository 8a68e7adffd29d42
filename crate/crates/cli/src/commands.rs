//! The four subcommand implementations. Each returns the filled envelope and
//! whether its verification gate passed; usage problems surface as
//! [`CliError::Usage`].

use statecmp::error::Error;
use statecmp::twostate::{make_scenario, run_strategy, Strategy};
use statecmp::verify::{
    bound_sweep, refute_same_detector, simulate_strategy, simulate_universal, OptimizerConfig,
};

use crate::report::{Envelope, Json, Row};

/// Sigma gate on every statistical comparison.
const GATE_SIGMAS: f64 = 5.0;
/// Reporting flag threshold; looser than the gate so near misses are visible.
const FLAG_SIGMAS: f64 = 3.0;
/// Feasible-trace gate of the refutation search.
const REFUTE_TRACE_GATE: f64 = 1e-4;
/// Below this many constraint pairs the refutation is under-constrained; the
/// run proceeds with a warning.
const REFUTE_MIN_SAMPLES: usize = 100;

#[derive(Debug)]
pub enum CliError {
    /// Invalid flags or domain errors; exit code 2.
    Usage(String),
    /// A computation that could not finish; exit code 1.
    Failure(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Failure(msg) => write!(f, "{msg}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

fn usage(err: Error) -> CliError {
    CliError::Usage(err.to_string())
}

/// Statistical comparison row fields: the binomial standard error is taken
/// at the closed-form rate, and a zero standard error demands exact
/// agreement.
struct GateCell {
    std_error: f64,
    z: f64,
    pass: bool,
}

fn gate_cell(empirical: f64, closed_form: f64, n: usize) -> GateCell {
    let std_error = (closed_form * (1.0 - closed_form) / n as f64).sqrt();
    if std_error == 0.0 {
        let pass = empirical == closed_form;
        GateCell { std_error, z: if pass { 0.0 } else { f64::INFINITY }, pass }
    } else {
        let z = (empirical - closed_form) / std_error;
        GateCell { std_error, z, pass: z.abs() <= GATE_SIGMAS }
    }
}

fn comparison_row(
    head: Vec<(&'static str, Json)>,
    closed_form: f64,
    empirical: f64,
    n: usize,
) -> (Row, bool) {
    let cell = gate_cell(empirical, closed_form, n);
    let mut row = head;
    row.extend([
        ("closed_form", Json::Float(closed_form)),
        ("empirical", Json::Float(empirical)),
        ("std_error", Json::Float(cell.std_error)),
        ("z_score", Json::Float(cell.z)),
        ("within_3sigma", Json::Bool(cell.z.abs() <= FLAG_SIGMAS)),
    ]);
    (row, cell.pass)
}

pub struct UniversalArgs {
    pub dim: usize,
    pub trials: usize,
    pub same_fraction: f64,
    pub seed: u64,
}

/// Unknown-state comparison: analytic Haar-average rates against a Monte
/// Carlo run. Gate: every row within 5σ.
pub fn cmd_universal(args: &UniversalArgs) -> Result<(Envelope, bool), CliError> {
    if !(0.0..=1.0).contains(&args.same_fraction) {
        return Err(CliError::Usage(format!(
            "--same-fraction {} outside [0, 1]",
            args.same_fraction
        )));
    }
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be positive".into()));
    }
    let sim =
        simulate_universal(args.dim, args.same_fraction, args.trials, args.seed).map_err(usage)?;

    // Haar average of the detection probability over independent pairs is
    // (1 − 1/d)/2; mixing in same-state preparations scales it by (1 − f).
    let haar_detection = 0.5 * (1.0 - 1.0 / args.dim as f64);
    let marginal_detection = (1.0 - args.same_fraction) * haar_detection;

    let mut results = Vec::new();
    let mut pass = true;
    for (metric, closed_form, empirical) in [
        ("different", marginal_detection, sim.detection.rate),
        ("inconclusive", 1.0 - marginal_detection, sim.inconclusive.rate),
    ] {
        let (row, ok) = comparison_row(
            vec![("metric", Json::Str(metric.into()))],
            closed_form,
            empirical,
            args.trials,
        );
        results.push(row);
        pass &= ok;
    }
    if let Some(conditional) = &sim.detection_given_different {
        let (row, ok) = comparison_row(
            vec![("metric", Json::Str("detection_given_different".into()))],
            haar_detection,
            conditional.rate,
            conditional.n,
        );
        results.push(row);
        pass &= ok;
    }

    let envelope = Envelope {
        command: "universal",
        parameters: vec![
            ("dim", Json::UInt(args.dim as u64)),
            ("trials", Json::UInt(args.trials as u64)),
            ("same_fraction", Json::Float(args.same_fraction)),
            ("seed", Json::UInt(args.seed)),
        ],
        results,
        seed: Some(args.seed),
        n: Some(args.trials as u64),
    };
    Ok((envelope, pass))
}

pub struct TwostateArgs {
    pub theta: f64,
    pub strategy: Option<Strategy>,
    pub strategy_name: String,
    pub trials: usize,
    pub seed: u64,
}

/// Known-state comparison: closed-form error/inconclusive rates of each
/// strategy against a Monte Carlo run. Gate: every row within 5σ.
pub fn cmd_twostate(args: &TwostateArgs) -> Result<(Envelope, bool), CliError> {
    let scenario = make_scenario(args.theta).map_err(usage)?;
    if args.trials < 1_000 {
        return Err(CliError::Usage("--trials must be at least 1000".into()));
    }
    let strategies: Vec<Strategy> = match args.strategy {
        Some(s) => vec![s],
        None => Strategy::ALL.to_vec(),
    };
    if scenario.theta() == 0.0 && strategies.iter().any(Strategy::is_unambiguous) {
        return Err(usage(Error::DegenerateTheta));
    }

    let mut results = Vec::new();
    let mut pass = true;
    for strategy in strategies {
        let closed = run_strategy(&scenario, strategy).map_err(usage)?;
        let sim = simulate_strategy(strategy, &scenario, args.trials, args.seed).map_err(usage)?;
        for (metric, closed_form, empirical) in [
            ("error", closed.p_error.unwrap_or(0.0), sim.error.rate),
            ("inconclusive", closed.p_inconclusive.unwrap_or(0.0), sim.inconclusive.rate),
        ] {
            let (row, ok) = comparison_row(
                vec![
                    ("strategy", Json::Str(strategy.name().into())),
                    ("metric", Json::Str(metric.into())),
                ],
                closed_form,
                empirical,
                args.trials,
            );
            results.push(row);
            pass &= ok;
        }
    }

    let envelope = Envelope {
        command: "twostate",
        parameters: vec![
            ("theta", Json::Float(args.theta)),
            ("strategy", Json::Str(args.strategy_name.clone())),
            ("trials", Json::UInt(args.trials as u64)),
            ("seed", Json::UInt(args.seed)),
        ],
        results,
        seed: Some(args.seed),
        n: Some(args.trials as u64),
    };
    Ok((envelope, pass))
}

pub struct BoundsArgs {
    pub theta_grid: String,
}

/// Parses "start:stop:count" into an inclusive linear grid.
fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, count] = parts[..] else {
        return Err(CliError::Usage(format!(
            "--theta-grid {spec:?} is not of the form start:stop:count"
        )));
    };
    let start: f64 = start
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid grid start {start:?}")))?;
    let stop: f64 = stop
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid grid stop {stop:?}")))?;
    let count: usize = count
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid grid count {count:?}")))?;
    if count == 0 {
        return Err(CliError::Usage("grid count must be positive".into()));
    }
    if !start.is_finite() || !stop.is_finite() || start > stop {
        return Err(CliError::Usage(format!("grid start {start} must not exceed stop {stop}")));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let step = (stop - start) / (count - 1) as f64;
    Ok((0..count).map(|k| start + k as f64 * step).collect())
}

/// Closed-form sweep over a θ grid. Gate: the collective error equals the
/// mixed-state bound within 1e-10 and the collective inconclusive rate never
/// exceeds the individual one, on every row.
pub fn cmd_bounds(args: &BoundsArgs) -> Result<(Envelope, bool), CliError> {
    let grid = parse_grid(&args.theta_grid)?;
    let rows = bound_sweep(&grid).map_err(usage)?;
    let pass = rows.iter().all(|r| r.consistent());
    let results = rows
        .iter()
        .map(|r| {
            statecmp::verify::BoundRow::COLUMNS
                .iter()
                .zip(r.values())
                .map(|(name, value)| (*name, Json::Float(value)))
                .collect()
        })
        .collect();
    let envelope = Envelope {
        command: "bounds",
        parameters: vec![("theta_grid", Json::Str(args.theta_grid.clone()))],
        results,
        seed: None,
        n: None,
    };
    Ok((envelope, pass))
}

pub struct RefuteArgs {
    pub dim: usize,
    pub constraint_samples: usize,
    pub seed: u64,
}

/// Trace-ascent search for a "states are identical" certifier. Gate: the
/// best feasible trace stays at or below 1e-4.
pub fn cmd_refute(args: &RefuteArgs) -> Result<(Envelope, bool), CliError> {
    if args.constraint_samples == 0 {
        return Err(CliError::Usage("--constraint-samples must be positive".into()));
    }
    if args.constraint_samples < REFUTE_MIN_SAMPLES {
        eprintln!(
            "warning: {} constraint pairs is under-constrained (recommended >= {})",
            args.constraint_samples, REFUTE_MIN_SAMPLES
        );
    }
    let cfg = OptimizerConfig { seed: args.seed, max_iters: 400, ..Default::default() };
    let refutation = refute_same_detector(args.dim, &cfg, args.constraint_samples).map_err(|e| {
        match e {
            Error::NotConverged => CliError::Failure(e.to_string()),
            other => usage(other),
        }
    })?;
    let pass = refutation.best_feasible_trace <= REFUTE_TRACE_GATE;
    let results = vec![
        vec![
            ("metric", Json::Str("best_feasible_trace".into())),
            ("value", Json::Float(refutation.best_feasible_trace)),
        ],
        vec![
            ("metric", Json::Str("sampled_max_residual".into())),
            ("value", Json::Float(refutation.sampled_max_residual)),
        ],
        vec![
            ("metric", Json::Str("held_out_max_residual".into())),
            ("value", Json::Float(refutation.held_out_max_residual)),
        ],
        vec![
            ("metric", Json::Str("psd_min_eigenvalue".into())),
            ("value", Json::Float(refutation.psd_min_eigenvalue)),
        ],
        vec![
            ("metric", Json::Str("cap_min_eigenvalue".into())),
            ("value", Json::Float(refutation.cap_min_eigenvalue)),
        ],
        vec![
            ("metric", Json::Str("iterations".into())),
            ("value", Json::Float(refutation.history.len() as f64)),
        ],
    ];
    let envelope = Envelope {
        command: "refute",
        parameters: vec![
            ("dim", Json::UInt(args.dim as u64)),
            ("constraint_samples", Json::UInt(args.constraint_samples as u64)),
            ("seed", Json::UInt(args.seed)),
        ],
        results,
        seed: Some(args.seed),
        n: Some(args.constraint_samples as u64),
    };
    Ok((envelope, pass))
}
