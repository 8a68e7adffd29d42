//! Independent verification: Monte Carlo estimation of every strategy's
//! statistics, a projected-gradient optimizer that recovers the all-ones
//! optimum of the detector family, and a penalized trace-ascent search that
//! demonstrates numerically that no measurement outcome can certify two
//! unknown states as identical.
//!
//! Randomness discipline: trial `t` of a run seeded with `s` always draws
//! from `CounterRng::stream(s, 0).substream(t)`, so tallies are independent
//! of execution order and can be merged from parallel workers bit-identically.

use crate::error::{Error, Result};
use crate::hilbert::{make_bipartite, product_state, random_pure_from, PureState};
use crate::numerics::{eig_hermitian, CMatrix, C64};
use crate::povm::{project_update, Povm};
use crate::rng::CounterRng;
use crate::twostate::{
    self, build_collective, collective_min_error, collective_unambiguous, helstrom_bound,
    individual_min_error, individual_unambiguous, make_scenario, min_error_discrimination,
    unambiguous_discrimination, CollectiveMeasurement, CollectiveMode, ComparisonScenario,
    Strategy, LABEL_S2_DIFFERENT, LABEL_S2_ERROR, LABEL_S2_INCONCLUSIVE, LABEL_S2_SAME,
};
use crate::universal::{build_universal, LABEL_DIFFERENT, LABEL_INCONCLUSIVE};

/// How a trial was prepared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preparation {
    /// Known-state pair (i, j) with i, j ∈ {1, 2}.
    Known(u8, u8),
    /// One Haar state used on both systems.
    HaarSame,
    /// Two independent Haar states.
    HaarDifferent,
}

impl Preparation {
    pub fn is_same(&self) -> bool {
        matches!(self, Preparation::Known(i, j) if i == j) || matches!(self, Preparation::HaarSame)
    }
}

/// Verdict of a single trial against its preparation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Correctness {
    Correct,
    Error,
    Inconclusive,
}

/// One Monte Carlo trial.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub preparation: Preparation,
    /// Terminal outcome label, drawn from the same alphabet as the
    /// strategy's `StrategyResult::breakdown`.
    pub outcome: &'static str,
    pub correct: Correctness,
}

/// An empirical rate with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateEstimate {
    pub n: usize,
    pub rate: f64,
    pub std_error: f64,
}

impl RateEstimate {
    pub fn from_count(count: usize, n: usize) -> Self {
        assert!(n >= 1);
        let rate = count as f64 / n as f64;
        Self { n, rate, std_error: (rate * (1.0 - rate) / n as f64).sqrt() }
    }
}

/// Tally of a strategy simulation.
#[derive(Debug, Clone)]
pub struct StrategySimulation {
    pub strategy: Strategy,
    pub n: usize,
    pub records: Vec<TrialRecord>,
    /// Label → rate, in lexicographic label order.
    pub outcome_rates: Vec<(&'static str, RateEstimate)>,
    pub error: RateEstimate,
    pub inconclusive: RateEstimate,
}

fn tally(strategy: Strategy, records: Vec<TrialRecord>) -> StrategySimulation {
    let n = records.len();
    let mut counts: std::collections::BTreeMap<&'static str, usize> = Default::default();
    let mut errors = 0;
    let mut fails = 0;
    for r in &records {
        *counts.entry(r.outcome).or_insert(0) += 1;
        match r.correct {
            Correctness::Error => errors += 1,
            Correctness::Inconclusive => fails += 1,
            Correctness::Correct => {}
        }
    }
    let outcome_rates = counts
        .into_iter()
        .map(|(label, count)| (label, RateEstimate::from_count(count, n)))
        .collect();
    StrategySimulation {
        strategy,
        n,
        records,
        outcome_rates,
        error: RateEstimate::from_count(errors, n),
        inconclusive: RateEstimate::from_count(fails, n),
    }
}

fn draw_preparation(rng: &mut CounterRng) -> (u8, u8) {
    (1 + rng.below(2) as u8, 1 + rng.below(2) as u8)
}

fn classify_conclusive(verdict_same: bool, truth_same: bool) -> Correctness {
    if verdict_same == truth_same {
        Correctness::Correct
    } else {
        Correctness::Error
    }
}

/// Simulates `n` trials of the given strategy: the preparation (i, j) is
/// drawn uniformly from {1, 2}², then the full (possibly two-stage)
/// measurement runs by sequential outcome sampling with projective state
/// updates. Deterministic for a fixed seed.
pub fn simulate_strategy(
    strategy: Strategy,
    scenario: &ComparisonScenario,
    n: usize,
    seed: u64,
) -> Result<StrategySimulation> {
    assert!(n >= 1_000, "statistical contract requires at least 1e3 trials");
    let records = match strategy {
        Strategy::IndividualMinError => {
            let povm = min_error_discrimination(scenario.psi1(), scenario.psi2(), "state1", "state2")?;
            simulate_individual(scenario, &povm, false, n, seed)?
        }
        Strategy::IndividualUnambiguous => {
            let povm = unambiguous_discrimination(
                scenario.psi1(),
                scenario.psi2(),
                "state1",
                "state2",
                "fail",
            )?;
            simulate_individual(scenario, &povm, true, n, seed)?
        }
        Strategy::CollectiveMinError => {
            let m = build_collective(scenario, CollectiveMode::MinError)?;
            simulate_collective(scenario, &m, n, seed)?
        }
        Strategy::CollectiveUnambiguous => {
            let m = build_collective(scenario, CollectiveMode::Unambiguous)?;
            simulate_collective(scenario, &m, n, seed)?
        }
    };
    Ok(tally(strategy, records))
}

fn simulate_individual(
    scenario: &ComparisonScenario,
    povm: &Povm,
    unambiguous: bool,
    n: usize,
    seed: u64,
) -> Result<Vec<TrialRecord>> {
    let dists = [
        povm.distribution_pure(scenario.psi1())?,
        povm.distribution_pure(scenario.psi2())?,
    ];
    let fail_index = 2; // only present in the unambiguous POVM
    let base = CounterRng::stream(seed, 0);
    let mut records = Vec::with_capacity(n);
    for t in 0..n {
        let mut rng = base.substream(t as u64);
        let (i, j) = draw_preparation(&mut rng);
        let truth_same = i == j;
        let r1 = dists[(i - 1) as usize].sample_index(&mut rng);
        let r2 = dists[(j - 1) as usize].sample_index(&mut rng);
        let (outcome, correct) = if unambiguous && (r1 == fail_index || r2 == fail_index) {
            ("inconclusive", Correctness::Inconclusive)
        } else {
            let verdict_same = r1 == r2;
            let correct = classify_conclusive(verdict_same, truth_same);
            let outcome = match (verdict_same, correct) {
                (true, Correctness::Correct) => "same:correct",
                (true, _) => "same:error",
                (false, Correctness::Correct) => "different:correct",
                (false, _) => "different:error",
            };
            (outcome, correct)
        };
        records.push(TrialRecord { preparation: Preparation::Known(i, j), outcome, correct });
    }
    Ok(records)
}

fn simulate_collective(
    scenario: &ComparisonScenario,
    m: &CollectiveMeasurement,
    n: usize,
    seed: u64,
) -> Result<Vec<TrialRecord>> {
    let stage2_labels: Vec<&str> = m.stage2().labels().collect();
    let base = CounterRng::stream(seed, 0);
    let mut records = Vec::with_capacity(n);
    for t in 0..n {
        let mut rng = base.substream(t as u64);
        let (i, j) = draw_preparation(&mut rng);
        let truth_same = i == j;
        let joint = scenario.joint_state(i, j);
        let stage1 = m.stage1().distribution_pure(&joint)?;
        let o1 = stage1.sample_index(&mut rng);
        let (outcome, correct) = match o1 {
            0 => (twostate::LABEL_ANTI, classify_conclusive(false, truth_same)),
            1 => (twostate::LABEL_SYM, classify_conclusive(true, truth_same)),
            _ => {
                let (_, post) = project_update(m.residual_projector(), &joint)?;
                let post = post.expect("sampled residual outcome has positive probability");
                let reduced = m.reduce(&post);
                let stage2 = m.stage2().distribution_pure(&reduced)?;
                let o2 = stage2.sample_index(&mut rng);
                match stage2_labels[o2] {
                    LABEL_S2_SAME => match classify_conclusive(true, truth_same) {
                        Correctness::Correct => (LABEL_S2_SAME, Correctness::Correct),
                        _ => (LABEL_S2_ERROR, Correctness::Error),
                    },
                    LABEL_S2_DIFFERENT => match classify_conclusive(false, truth_same) {
                        Correctness::Correct => (LABEL_S2_DIFFERENT, Correctness::Correct),
                        _ => (LABEL_S2_ERROR, Correctness::Error),
                    },
                    _ => (LABEL_S2_INCONCLUSIVE, Correctness::Inconclusive),
                }
            }
        };
        records.push(TrialRecord { preparation: Preparation::Known(i, j), outcome, correct });
    }
    Ok(records)
}

/// Tally of a universal-comparison simulation on Haar-random preparations.
#[derive(Debug, Clone)]
pub struct UniversalSimulation {
    pub n: usize,
    pub records: Vec<TrialRecord>,
    pub detection: RateEstimate,
    pub inconclusive: RateEstimate,
    /// Detection rate among trials whose preparation really differed;
    /// `None` when no such trial occurred.
    pub detection_given_different: Option<RateEstimate>,
}

/// Simulates the optimal unknown-state comparison: each trial prepares one
/// Haar state on both systems (probability `same_fraction`) or two
/// independent Haar states, then samples the two-outcome symmetry
/// measurement.
pub fn simulate_universal(
    d: usize,
    same_fraction: f64,
    n: usize,
    seed: u64,
) -> Result<UniversalSimulation> {
    assert!((0.0..=1.0).contains(&same_fraction), "same_fraction must lie in [0, 1]");
    assert!(n >= 1);
    let comparator = build_universal(d)?;
    let p_anti = comparator.space().p_anti().clone();
    let base = CounterRng::stream(seed, 0);
    let mut records = Vec::with_capacity(n);
    let mut detections = 0usize;
    let mut different_trials = 0usize;
    let mut detections_given_different = 0usize;
    for t in 0..n {
        let mut rng = base.substream(t as u64);
        let same = rng.uniform() < same_fraction;
        let (preparation, joint) = if same {
            let psi = random_pure_from(&mut rng, d);
            (Preparation::HaarSame, product_state(&psi, &psi)?)
        } else {
            let psi = random_pure_from(&mut rng, d);
            let phi = random_pure_from(&mut rng, d);
            (Preparation::HaarDifferent, product_state(&psi, &phi)?)
        };
        let p_detect = p_anti.expectation(joint.amplitudes()).clamp(0.0, 1.0);
        let detected = rng.uniform_open() <= p_detect;
        if detected {
            detections += 1;
        }
        if !same {
            different_trials += 1;
            if detected {
                detections_given_different += 1;
            }
        }
        let (outcome, correct) = if detected {
            (LABEL_DIFFERENT, if same { Correctness::Error } else { Correctness::Correct })
        } else {
            (LABEL_INCONCLUSIVE, Correctness::Inconclusive)
        };
        records.push(TrialRecord { preparation, outcome, correct });
    }
    let detection = RateEstimate::from_count(detections, n);
    let inconclusive = RateEstimate::from_count(n - detections, n);
    let detection_given_different = (different_trials > 0)
        .then(|| RateEstimate::from_count(detections_given_different, different_trials));
    Ok(UniversalSimulation { n, records, detection, inconclusive, detection_given_different })
}

/// Configuration of the gradient drivers.
#[derive(Debug, Clone, Copy)]
pub struct OptimizerConfig {
    pub step_size: f64,
    pub max_iters: usize,
    pub constraint_penalty: f64,
    pub convergence_tol: f64,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            step_size: 0.5,
            max_iters: 2_000,
            constraint_penalty: 1.0,
            convergence_tol: 1e-9,
            seed: 1,
        }
    }
}

impl OptimizerConfig {
    fn validate(&self) {
        assert!(self.step_size > 0.0, "step_size must be positive");
        assert!(self.max_iters >= 1, "max_iters must be at least 1");
        assert!(self.convergence_tol > 0.0, "convergence_tol must be positive");
    }
}

/// Result of the detector-coefficient ascent.
#[derive(Debug, Clone)]
pub struct EmuOptimum {
    pub coefficients: Vec<f64>,
    pub objective: f64,
    pub history: Vec<f64>,
}

/// Projected-gradient ascent of the mean detection probability over the
/// given state pairs, starting from coefficients drawn uniformly from
/// [0, 1] using `cfg.seed`.
pub fn optimize_emu(
    d: usize,
    objective_pairs: &[(PureState, PureState)],
    cfg: &OptimizerConfig,
) -> Result<EmuOptimum> {
    let count = d * (d - 1) / 2;
    let mut rng = CounterRng::new(cfg.seed);
    let start: Vec<f64> = (0..count).map(|_| rng.uniform()).collect();
    optimize_emu_from(d, objective_pairs, &start, cfg)
}

/// As [`optimize_emu`] with an explicit starting point.
///
/// The objective is linear with nonnegative gradient, so every coefficient
/// that any pair overlaps is driven to 1; coefficients no pair touches keep
/// their starting value (they do not affect the objective).
pub fn optimize_emu_from(
    d: usize,
    objective_pairs: &[(PureState, PureState)],
    start: &[f64],
    cfg: &OptimizerConfig,
) -> Result<EmuOptimum> {
    cfg.validate();
    assert!(!objective_pairs.is_empty(), "need at least one objective pair");
    let basis = crate::hilbert::antisym_basis(d)?;
    assert_eq!(start.len(), basis.len(), "coefficient count must be d(d-1)/2");
    for (psi, phi) in objective_pairs {
        assert!(
            !psi.same_up_to_phase(phi, 1e-12),
            "objective pairs must consist of distinct states"
        );
    }

    // Mean squared overlap of each antisymmetric basis direction with the
    // pair products; the objective is e · gradient.
    let mut gradient = vec![0.0; basis.len()];
    for (psi, phi) in objective_pairs {
        let joint = product_state(psi, phi)?;
        for (g, a) in gradient.iter_mut().zip(&basis) {
            *g += a.overlap_sq(&joint);
        }
    }
    for g in &mut gradient {
        *g /= objective_pairs.len() as f64;
    }

    let objective = |e: &[f64]| e.iter().zip(&gradient).map(|(e, g)| e * g).sum::<f64>();
    let mut e: Vec<f64> = start.iter().map(|x| x.clamp(0.0, 1.0)).collect();
    let mut history = vec![objective(&e)];
    for _ in 0..cfg.max_iters {
        let mut max_change = 0.0f64;
        for (ek, gk) in e.iter_mut().zip(&gradient) {
            let next = (*ek + cfg.step_size * gk).clamp(0.0, 1.0);
            max_change = max_change.max((next - *ek).abs());
            *ek = next;
        }
        history.push(objective(&e));
        if max_change <= cfg.convergence_tol {
            return Ok(EmuOptimum { coefficients: e, objective: *history.last().unwrap(), history });
        }
    }
    Err(Error::NotConverged)
}

/// Outcome of the search for a "states are identical" certifier.
#[derive(Debug, Clone)]
pub struct Refutation {
    /// Largest trace of any iterate that satisfied every sampled constraint.
    pub best_feasible_trace: f64,
    /// The operator achieving it.
    pub best_candidate: CMatrix,
    /// Trace of the iterate after every accepted step, across all penalty
    /// rounds.
    pub history: Vec<f64>,
    /// Largest sampled-constraint expectation at the reported operator.
    pub sampled_max_residual: f64,
    /// Largest expectation over fresh Haar pairs at the reported operator.
    pub held_out_max_residual: f64,
    /// Smallest eigenvalue of the reported operator (PSD check).
    pub psd_min_eigenvalue: f64,
    /// Smallest eigenvalue of 1 − operator (the ≼ 1 check).
    pub cap_min_eigenvalue: f64,
    pub constraint_samples: usize,
}

/// Feasibility threshold on every sampled constraint ⟨ψ⊗φ|Π|ψ⊗φ⟩.
pub const CONSTRAINT_TOL: f64 = 1e-8;

/// Number of fresh pairs used for the held-out residual check.
pub const HELD_OUT_PAIRS: usize = 200;

const PENALTY_ROUNDS: usize = 5;
const PENALTY_GROWTH: f64 = 10.0;

fn haar_product_pair(rng: &mut CounterRng, d: usize) -> PureState {
    let psi = random_pure_from(rng, d);
    let phi = random_pure_from(rng, d);
    product_state(&psi, &phi).expect("equal dims")
}

/// Projects a Hermitian candidate onto {Π : 0 ≼ Π ≼ 1} by eigenvalue
/// clipping; returns the projected operator, its PSD square root, and its
/// trace.
fn clip_to_operator_interval(candidate: &CMatrix) -> Result<(CMatrix, CMatrix, f64)> {
    let eig = eig_hermitian(&candidate.symmetrized())?;
    let n = candidate.rows();
    let mut projected = CMatrix::zeros(n, n);
    let mut root = CMatrix::zeros(n, n);
    let mut trace = 0.0;
    for (lambda, v) in eig.eigenvalues.iter().zip(&eig.eigenvectors) {
        let clipped = lambda.clamp(0.0, 1.0);
        if clipped > 0.0 {
            let proj = CMatrix::outer(v);
            projected = projected.add(&proj.scale_re(clipped));
            root = root.add(&proj.scale_re(clipped.sqrt()));
            trace += clipped;
        }
    }
    Ok((projected, root, trace))
}

fn max_expectation(pi: &CMatrix, vectors: &[PureState]) -> f64 {
    vectors
        .iter()
        .map(|v| pi.expectation(v.amplitudes()))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Searches for a measurement operator with the largest possible trace that
/// (i) stays between 0 and 1 and (ii) never fires on sampled products of two
/// distinct Haar states. The candidate is kept positive by construction,
/// Π = M†M for a general complex matrix M; the penalized objective
/// tr(M†M) − w Σ_k ⟨v_k|M†M|v_k⟩ = tr(M†M G) with G = 1 − w·C has Wirtinger
/// gradient M·G, so the ascent is M ← M + η·M·G followed by eigenvalue
/// clipping whenever Π escapes Π ≼ 1, with the penalty w growing ×10 per
/// round.
///
/// Such an operator cannot exist with nonzero trace — the sampled product
/// vectors span the whole space — so the reported best feasible trace
/// collapses toward zero; the run is the numerical witness of that fact.
pub fn refute_same_detector(
    d: usize,
    cfg: &OptimizerConfig,
    constraint_samples: usize,
) -> Result<Refutation> {
    cfg.validate();
    assert!(constraint_samples >= 1, "need at least one constraint pair");
    let space = make_bipartite(d)?;
    let dim = space.dim();
    let master = CounterRng::stream(cfg.seed, 0);
    let constraints: Vec<PureState> = (0..constraint_samples)
        .map(|k| haar_product_pair(&mut master.substream(k as u64), d))
        .collect();
    let held_out: Vec<PureState> = (0..HELD_OUT_PAIRS)
        .map(|k| haar_product_pair(&mut master.substream((constraint_samples + k) as u64), d))
        .collect();

    let mut constraint_matrix = CMatrix::zeros(dim, dim);
    for v in &constraints {
        constraint_matrix = constraint_matrix.add(&CMatrix::outer(v.amplitudes()));
    }
    let c_max = eig_hermitian(&constraint_matrix.symmetrized())?.eigenvalues[0];

    let mut init_rng = master.substream((constraint_samples + HELD_OUT_PAIRS) as u64);
    let scale = 1.0 / (dim as f64).sqrt();
    let mut m_mat = CMatrix::from_fn(dim, dim, |_, _| {
        C64::new(init_rng.normal() * scale, init_rng.normal() * scale)
    });
    let mut pi = m_mat.adjoint().matmul(&m_mat);

    let mut best: Option<(f64, CMatrix)> = None;
    let mut history = Vec::new();
    let mut penalty = cfg.constraint_penalty;
    for _round in 0..PENALTY_ROUNDS {
        // The step size is capped so no eigendirection of 1 + η·G flips
        // sign, which keeps the multiplicative update stable.
        let step = cfg.step_size.min(1.0 / (penalty * c_max + 1.0));
        let gradient = CMatrix::identity(dim).sub(&constraint_matrix.scale_re(penalty));
        for _ in 0..cfg.max_iters {
            m_mat = m_mat.add(&m_mat.matmul(&gradient).scale_re(step));
            let mut next = m_mat.adjoint().matmul(&m_mat);
            let top = eig_hermitian(&next.symmetrized())?.eigenvalues[0];
            if top > 1.0 {
                let (clipped, root, _) = clip_to_operator_interval(&next)?;
                next = clipped;
                m_mat = root;
            }
            let trace = next.trace().re;
            let delta = next.max_abs_diff(&pi);
            pi = next;
            history.push(trace);
            if max_expectation(&pi, &constraints) <= CONSTRAINT_TOL
                && best.as_ref().is_none_or(|(t, _)| trace > *t)
            {
                best = Some((trace, pi.clone()));
            }
            if delta <= cfg.convergence_tol {
                break;
            }
        }
        penalty *= PENALTY_GROWTH;
    }

    let (best_feasible_trace, best_candidate) = best.ok_or(Error::NotConverged)?;
    let sampled_max_residual = max_expectation(&best_candidate, &constraints);
    let held_out_max_residual = max_expectation(&best_candidate, &held_out);
    let psd_min_eigenvalue = crate::numerics::min_eigenvalue(&best_candidate.symmetrized())?;
    let cap = CMatrix::identity(dim).sub(&best_candidate);
    let cap_min_eigenvalue = crate::numerics::min_eigenvalue(&cap.symmetrized())?;
    Ok(Refutation {
        best_feasible_trace,
        best_candidate,
        history,
        sampled_max_residual,
        held_out_max_residual,
        psd_min_eigenvalue,
        cap_min_eigenvalue,
        constraint_samples,
    })
}

/// Sanity control for [`refute_same_detector`]: the same ascent with the
/// constraint set empty, which must saturate at Π = 1 and reach trace d².
pub fn unconstrained_trace_ascent(d: usize, cfg: &OptimizerConfig) -> Result<f64> {
    cfg.validate();
    let space = make_bipartite(d)?;
    let dim = space.dim();
    let mut init_rng = CounterRng::stream(cfg.seed, 0).substream(0);
    let scale = 1.0 / (dim as f64).sqrt();
    let mut m_mat = CMatrix::from_fn(dim, dim, |_, _| {
        C64::new(init_rng.normal() * scale, init_rng.normal() * scale)
    });
    let mut pi = m_mat.adjoint().matmul(&m_mat);
    let step = cfg.step_size.min(1.0);
    let mut best = f64::NEG_INFINITY;
    for _ in 0..cfg.max_iters {
        // Unconstrained gradient is the identity: M ← M(1 + η).
        m_mat = m_mat.scale_re(1.0 + step);
        let mut next = m_mat.adjoint().matmul(&m_mat);
        let top = eig_hermitian(&next.symmetrized())?.eigenvalues[0];
        if top > 1.0 {
            let (clipped, root, _) = clip_to_operator_interval(&next)?;
            next = clipped;
            m_mat = root;
        }
        let trace = next.trace().re;
        let delta = next.max_abs_diff(&pi);
        pi = next;
        best = best.max(trace);
        if delta <= cfg.convergence_tol {
            break;
        }
    }
    Ok(best)
}

/// One row of the closed-form bound sweep.
#[derive(Debug, Clone, Copy)]
pub struct BoundRow {
    pub theta: f64,
    /// Minimum error probability of one single-system measurement.
    pub single_min_error: f64,
    /// Inconclusive probability of one single-system unambiguous measurement.
    pub single_inconclusive: f64,
    /// Comparison error from separate minimum-error measurements.
    pub individual_error: f64,
    /// Comparison inconclusive rate from separate unambiguous measurements.
    pub individual_inconclusive: f64,
    /// Comparison error of the collective two-stage measurement.
    pub collective_error: f64,
    /// Comparison inconclusive rate of the collective unambiguous strategy.
    pub collective_inconclusive: f64,
    /// Mixed-state discrimination bound on the comparison error.
    pub helstrom: f64,
}

impl BoundRow {
    /// Column names, in emission order.
    pub const COLUMNS: [&'static str; 8] = [
        "theta",
        "single_min_error",
        "single_inconclusive",
        "individual_error",
        "individual_inconclusive",
        "collective_error",
        "collective_inconclusive",
        "helstrom",
    ];

    pub fn values(&self) -> [f64; 8] {
        [
            self.theta,
            self.single_min_error,
            self.single_inconclusive,
            self.individual_error,
            self.individual_inconclusive,
            self.collective_error,
            self.collective_inconclusive,
            self.helstrom,
        ]
    }

    /// The two cross-route identities the sweep must satisfy: the collective
    /// error equals the mixed-state bound, and the collective inconclusive
    /// rate never exceeds the individual one.
    pub fn consistent(&self) -> bool {
        (self.collective_error - self.helstrom).abs() <= 1e-10
            && self.collective_inconclusive <= self.individual_inconclusive + 1e-12
    }
}

/// Evaluates every strategy plus the mixed-state bound on a θ grid. The grid
/// must lie in (0, π/4]: the unambiguous columns are undefined at θ = 0.
pub fn bound_sweep(theta_grid: &[f64]) -> Result<Vec<BoundRow>> {
    let mut rows = Vec::with_capacity(theta_grid.len());
    for &theta in theta_grid {
        if theta <= 0.0 {
            return Err(Error::ThetaOutOfRange { theta });
        }
        let s = make_scenario(theta)?;
        let individual_me = individual_min_error(&s);
        let individual_ua = individual_unambiguous(&s);
        let collective_me = collective_min_error(&s);
        let collective_ua = collective_unambiguous(&s)?;
        rows.push(BoundRow {
            theta: s.theta(),
            single_min_error: s.single_min_error_prob(),
            single_inconclusive: s.single_unambiguous_failure_prob(),
            individual_error: individual_me.p_error.unwrap_or(0.0),
            individual_inconclusive: individual_ua.p_inconclusive.unwrap_or(0.0),
            collective_error: collective_me.p_error.unwrap_or(0.0),
            collective_inconclusive: collective_ua.p_inconclusive.unwrap_or(0.0),
            helstrom: helstrom_bound(&s),
        });
    }
    Ok(rows)
}
