//! Comparison when each system carries one of two known qubit states.
//!
//! The pair is parameterized by an angle θ ∈ [0, π/4]:
//!
//! ```text
//! |ψ1⟩ = cosθ|+⟩ + sinθ|−⟩        |ψ2⟩ = cosθ|+⟩ − sinθ|−⟩
//! ```
//!
//! with ⟨ψ1|ψ2⟩ = cos2θ and equal prior probability 1/2 on each state of each
//! system. Four strategies are implemented: measuring each system separately
//! (minimum-error or unambiguous) and the collective two-stage measurement on
//! the pair, which first tests for the two symmetry-protected product
//! components and then discriminates the residual states Φ±. The basis
//! (|+⟩, |−⟩) maps to computational indices 0 and 1, so a two-copy product
//! state lives at flat indices (|++⟩, |+−⟩, |−+⟩, |−−⟩) = (0, 1, 2, 3).

use crate::error::{Error, Result};
use crate::hilbert::{product_state, DensityOperator, PureState};
use crate::numerics::{eig_hermitian, trace_norm, C64, CMatrix, CVector};
use crate::povm::Povm;

/// Inputs this close to the boundaries of [0, π/4] are clamped onto them, so
/// decimal renderings of π/4 stay in range.
pub const THETA_EDGE_TOL: f64 = 1e-9;

/// Eigenvalues of the discrimination operator smaller than this count as
/// degenerate and are assigned to the first outcome.
const SPECTRUM_TIE_TOL: f64 = 1e-12;

/// Stage-1 outcome labels of the collective measurement.
pub const LABEL_ANTI: &str = "anti:different";
pub const LABEL_SYM: &str = "sym:same";
pub const LABEL_RESIDUAL: &str = "residual";

/// Stage-2 / terminal outcome labels.
pub const LABEL_S2_SAME: &str = "stage2:same";
pub const LABEL_S2_DIFFERENT: &str = "stage2:different";
pub const LABEL_S2_INCONCLUSIVE: &str = "stage2:inconclusive";
pub const LABEL_S2_ERROR: &str = "stage2:error";

/// The four comparison strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    IndividualMinError,
    IndividualUnambiguous,
    CollectiveMinError,
    CollectiveUnambiguous,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::IndividualMinError,
        Strategy::IndividualUnambiguous,
        Strategy::CollectiveMinError,
        Strategy::CollectiveUnambiguous,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Strategy::IndividualMinError => "individual_min_error",
            Strategy::IndividualUnambiguous => "individual_unambiguous",
            Strategy::CollectiveMinError => "collective_min_error",
            Strategy::CollectiveUnambiguous => "collective_unambiguous",
        }
    }

    /// True for the strategies that forbid errors and may instead fail.
    pub fn is_unambiguous(&self) -> bool {
        matches!(self, Strategy::IndividualUnambiguous | Strategy::CollectiveUnambiguous)
    }
}

/// The two-known-states setup at a fixed θ, priors 1/2 each.
#[derive(Debug, Clone)]
pub struct ComparisonScenario {
    theta: f64,
    psi1: PureState,
    psi2: PureState,
}

impl ComparisonScenario {
    pub fn new(theta: f64) -> Result<Self> {
        let max = std::f64::consts::FRAC_PI_4;
        if !theta.is_finite() || theta < -THETA_EDGE_TOL || theta > max + THETA_EDGE_TOL {
            return Err(Error::ThetaOutOfRange { theta });
        }
        let theta = theta.clamp(0.0, max);
        let (sin, cos) = theta.sin_cos();
        let psi1 = PureState::new(CVector::from_reals(&[cos, sin]))?;
        let psi2 = PureState::new(CVector::from_reals(&[cos, -sin]))?;
        Ok(Self { theta, psi1, psi2 })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn psi1(&self) -> &PureState {
        &self.psi1
    }

    pub fn psi2(&self) -> &PureState {
        &self.psi2
    }

    /// ⟨ψ1|ψ2⟩ = cos2θ.
    pub fn overlap(&self) -> f64 {
        (2.0 * self.theta).cos()
    }

    pub fn state(&self, which: u8) -> &PureState {
        match which {
            1 => &self.psi1,
            2 => &self.psi2,
            _ => panic!("state index must be 1 or 2"),
        }
    }

    /// |ψ_i⟩⊗|ψ_j⟩ on the four-dimensional pair space.
    pub fn joint_state(&self, i: u8, j: u8) -> PureState {
        product_state(self.state(i), self.state(j)).expect("equal dims")
    }

    /// Minimum error probability for identifying a single system's state:
    /// (1 − sin2θ)/2.
    pub fn single_min_error_prob(&self) -> f64 {
        0.5 * (1.0 - (2.0 * self.theta).sin())
    }

    /// Minimum inconclusive probability for unambiguously identifying a
    /// single system's state: cos2θ.
    pub fn single_unambiguous_failure_prob(&self) -> f64 {
        self.overlap()
    }
}

/// Builds a scenario; θ within [`THETA_EDGE_TOL`] of the range edges is
/// clamped.
pub fn make_scenario(theta: f64) -> Result<ComparisonScenario> {
    ComparisonScenario::new(theta)
}

/// Closed-form or constructed probabilities of one strategy, averaged over
/// the four equiprobable preparations.
#[derive(Debug, Clone)]
pub struct StrategyResult {
    pub strategy: Strategy,
    pub p_error: Option<f64>,
    pub p_inconclusive: Option<f64>,
    /// Terminal outcome label → probability; sums to 1.
    pub breakdown: Vec<(&'static str, f64)>,
}

impl StrategyResult {
    pub fn breakdown_sum(&self) -> f64 {
        self.breakdown.iter().map(|(_, p)| p).sum()
    }

    pub fn breakdown_prob(&self, label: &str) -> f64 {
        self.breakdown.iter().find(|(l, _)| *l == label).map_or(0.0, |(_, p)| *p)
    }
}

/// Minimum-error (Helstrom) measurement for two equiprobable pure states:
/// outcome `label_a` on the nonnegative eigenspace of (|a⟩⟨a| − |b⟩⟨b|)/2,
/// `label_b` on the negative one.
pub fn min_error_discrimination(
    a: &PureState,
    b: &PureState,
    label_a: &str,
    label_b: &str,
) -> Result<Povm> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    let w = CMatrix::outer(a.amplitudes())
        .sub(&CMatrix::outer(b.amplitudes()))
        .scale_re(0.5)
        .symmetrized();
    let eig = eig_hermitian(&w)?;
    let n = a.dim();
    let mut pi_a = CMatrix::zeros(n, n);
    let mut pi_b = CMatrix::zeros(n, n);
    for (lambda, v) in eig.eigenvalues.iter().zip(&eig.eigenvectors) {
        let proj = CMatrix::outer(v);
        if *lambda < -SPECTRUM_TIE_TOL {
            pi_b = pi_b.add(&proj);
        } else {
            // Positive eigenvalues and degenerate directions both report a.
            pi_a = pi_a.add(&proj);
        }
    }
    Povm::new(vec![(label_a.into(), pi_a), (label_b.into(), pi_b)])
}

fn perp_qubit(v: &PureState) -> PureState {
    let amps = v.amplitudes();
    let w = CVector::new(vec![-amps.get(1).conj(), amps.get(0).conj()]).expect("finite");
    PureState::new(w).expect("unit norm is preserved")
}

/// Equal-prior unambiguous discrimination of two pure qubit states. The
/// conclusive elements are the scaled projectors onto the orthogonal
/// complements |b⊥⟩⟨b⊥|/(1+o) and |a⊥⟩⟨a⊥|/(1+o) with o = |⟨a|b⟩|, which
/// makes the failure element proportional to the projector onto the common
/// overlap direction and the failure probability equal to o on both inputs.
pub fn unambiguous_discrimination(
    a: &PureState,
    b: &PureState,
    label_a: &str,
    label_b: &str,
    label_fail: &str,
) -> Result<Povm> {
    if a.dim() != 2 || b.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: a.dim().max(b.dim()) });
    }
    let overlap = a.overlap(b).norm();
    if overlap >= 1.0 - 1e-12 {
        return Err(Error::DegenerateTheta);
    }
    let scale = 1.0 / (1.0 + overlap);
    let pi_a = CMatrix::outer(perp_qubit(b).amplitudes()).scale_re(scale);
    let pi_b = CMatrix::outer(perp_qubit(a).amplitudes()).scale_re(scale);
    let fail = CMatrix::identity(2).sub(&pi_a).sub(&pi_b);
    Povm::new(vec![
        (label_a.into(), pi_a),
        (label_b.into(), pi_b),
        (label_fail.into(), fail),
    ])
}

/// Which stage-2 discrimination the collective measurement runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CollectiveMode {
    MinError,
    Unambiguous,
}

/// The two-stage collective measurement on the pair space.
///
/// Stage 1 projects onto the singlet (certifies "different"), onto
/// (|+−⟩+|−+⟩)/√2 (certifies "same"), or onto the residual plane spanned by
/// |++⟩ and |−−⟩. A residual outcome leaves the pair in Φ₊ (same
/// preparation) or Φ₋ (different), and stage 2 discriminates those two
/// states in the residual coordinates.
#[derive(Debug, Clone)]
pub struct CollectiveMeasurement {
    mode: CollectiveMode,
    stage1: Povm,
    phi_plus: PureState,
    phi_minus: PureState,
    residual_basis: [PureState; 2],
    stage2: Povm,
}

impl CollectiveMeasurement {
    pub fn mode(&self) -> CollectiveMode {
        self.mode
    }

    pub fn stage1(&self) -> &Povm {
        &self.stage1
    }

    /// Stage-2 POVM in the two-dimensional residual coordinates.
    pub fn stage2(&self) -> &Povm {
        &self.stage2
    }

    pub fn phi_plus(&self) -> &PureState {
        &self.phi_plus
    }

    pub fn phi_minus(&self) -> &PureState {
        &self.phi_minus
    }

    pub fn residual_projector(&self) -> &CMatrix {
        self.stage1.element(LABEL_RESIDUAL).expect("stage 1 has a residual element")
    }

    /// Coordinates of a pair state in the residual basis (|++⟩, |−−⟩); the
    /// input must lie in that plane.
    pub fn reduce(&self, state: &PureState) -> PureState {
        let coords = CVector::new(vec![
            self.residual_basis[0].overlap(state),
            self.residual_basis[1].overlap(state),
        ])
        .expect("finite");
        PureState::normalized(coords).expect("state lies in the residual plane")
    }
}

/// Builds the collective measurement. Unambiguous mode requires θ > 0: at
/// θ = 0 the residual states coincide and no unambiguous discrimination
/// exists.
pub fn build_collective(s: &ComparisonScenario, mode: CollectiveMode) -> Result<CollectiveMeasurement> {
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut singlet = CVector::zeros(4);
    singlet.set(1, C64::new(inv_sqrt2, 0.0));
    singlet.set(2, C64::new(-inv_sqrt2, 0.0));
    let mut triplet = CVector::zeros(4);
    triplet.set(1, C64::new(inv_sqrt2, 0.0));
    triplet.set(2, C64::new(inv_sqrt2, 0.0));

    let anti_proj = CMatrix::outer(&singlet);
    let sym_proj = CMatrix::outer(&triplet);
    let residual_proj = CMatrix::identity(4).sub(&anti_proj).sub(&sym_proj);
    let stage1 = Povm::new(vec![
        (LABEL_ANTI.into(), anti_proj),
        (LABEL_SYM.into(), sym_proj),
        (LABEL_RESIDUAL.into(), residual_proj),
    ])?;

    let (sin, cos) = s.theta().sin_cos();
    let c2 = cos * cos;
    let s2 = sin * sin;
    let mut plus = CVector::zeros(4);
    plus.set(0, C64::new(c2, 0.0));
    plus.set(3, C64::new(s2, 0.0));
    let mut minus = CVector::zeros(4);
    minus.set(0, C64::new(c2, 0.0));
    minus.set(3, C64::new(-s2, 0.0));
    let phi_plus = PureState::normalized(plus)?;
    let phi_minus = PureState::normalized(minus)?;

    let residual_basis = [PureState::basis_state(4, 0), PureState::basis_state(4, 3)];
    let reduced_plus = PureState::normalized(CVector::new(vec![
        residual_basis[0].overlap(&phi_plus),
        residual_basis[1].overlap(&phi_plus),
    ])?)?;
    let reduced_minus = PureState::normalized(CVector::new(vec![
        residual_basis[0].overlap(&phi_minus),
        residual_basis[1].overlap(&phi_minus),
    ])?)?;

    let stage2 = match mode {
        CollectiveMode::MinError => {
            min_error_discrimination(&reduced_plus, &reduced_minus, LABEL_S2_SAME, LABEL_S2_DIFFERENT)?
        }
        CollectiveMode::Unambiguous => unambiguous_discrimination(
            &reduced_plus,
            &reduced_minus,
            LABEL_S2_SAME,
            LABEL_S2_DIFFERENT,
            LABEL_S2_INCONCLUSIVE,
        )?,
    };

    Ok(CollectiveMeasurement { mode, stage1, phi_plus, phi_minus, residual_basis, stage2 })
}

/// Comparison by optimal minimum-error measurements on each system
/// separately. Each measurement errs with probability p = (1 − sin2θ)/2 and
/// the verdict is wrong when exactly one of them errs, so the comparison
/// error is 2p(1−p) = cos²(2θ)/2.
pub fn individual_min_error(s: &ComparisonScenario) -> StrategyResult {
    let p = s.single_min_error_prob();
    let both_consistent = (1.0 - p) * (1.0 - p) + p * p;
    let one_wrong = 2.0 * p * (1.0 - p);
    StrategyResult {
        strategy: Strategy::IndividualMinError,
        p_error: Some(one_wrong),
        p_inconclusive: Some(0.0),
        breakdown: vec![
            ("same:correct", 0.5 * both_consistent),
            ("same:error", 0.5 * one_wrong),
            ("different:correct", 0.5 * both_consistent),
            ("different:error", 0.5 * one_wrong),
        ],
    }
}

/// Comparison by unambiguous measurements on each system separately. Each
/// fails with probability q = cos2θ; the comparison is inconclusive when
/// either fails, with probability q(2−q), and never errs.
pub fn individual_unambiguous(s: &ComparisonScenario) -> StrategyResult {
    let q = s.single_unambiguous_failure_prob();
    let conclusive = (1.0 - q) * (1.0 - q);
    StrategyResult {
        strategy: Strategy::IndividualUnambiguous,
        p_error: Some(0.0),
        p_inconclusive: Some(1.0 - conclusive),
        breakdown: vec![
            ("same:correct", 0.5 * conclusive),
            ("different:correct", 0.5 * conclusive),
            ("inconclusive", 1.0 - conclusive),
        ],
    }
}

/// Exact outcome probabilities of the two-stage measurement, averaged over
/// the four equiprobable preparations.
fn collective_outcome_probs(
    s: &ComparisonScenario,
    measurement: &CollectiveMeasurement,
) -> Result<StrategyResult> {
    let mut anti = 0.0;
    let mut sym = 0.0;
    let mut s2_same = 0.0;
    let mut s2_diff = 0.0;
    let mut s2_fail = 0.0;
    let mut s2_err = 0.0;
    let mut p_error = 0.0;

    let stage2_labels: Vec<&str> = measurement.stage2.labels().collect();
    for i in [1u8, 2] {
        for j in [1u8, 2] {
            let weight = 0.25;
            let truth_same = i == j;
            let joint = s.joint_state(i, j);
            let stage1 = measurement.stage1.distribution_pure(&joint)?;
            let probs = stage1.probabilities();
            anti += weight * probs[0];
            sym += weight * probs[1];
            // Stage-1 conclusive outcomes that contradict the preparation are
            // errors; their probability is zero up to rounding dust.
            if truth_same {
                p_error += weight * probs[0];
            } else {
                p_error += weight * probs[1];
            }
            let p_residual = probs[2];
            if p_residual <= 0.0 {
                continue;
            }
            let (_, post) = crate::povm::project_update(measurement.residual_projector(), &joint)?;
            let post = post.expect("residual probability is positive");
            let reduced = measurement.reduce(&post);
            let stage2 = measurement.stage2.distribution_pure(&reduced)?;
            for (label, &p) in stage2_labels.iter().zip(stage2.probabilities()) {
                let mass = weight * p_residual * p;
                match (*label, truth_same) {
                    (LABEL_S2_SAME, true) => s2_same += mass,
                    (LABEL_S2_DIFFERENT, false) => s2_diff += mass,
                    (LABEL_S2_INCONCLUSIVE, _) => s2_fail += mass,
                    // Conclusive stage-2 verdict against the preparation.
                    _ => {
                        s2_err += mass;
                        p_error += mass;
                    }
                }
            }
        }
    }

    let mut breakdown = vec![
        (LABEL_ANTI, anti),
        (LABEL_SYM, sym),
        (LABEL_S2_SAME, s2_same),
        (LABEL_S2_DIFFERENT, s2_diff),
    ];
    let p_inconclusive = match measurement.mode {
        CollectiveMode::MinError => {
            breakdown.push((LABEL_S2_ERROR, s2_err));
            0.0
        }
        CollectiveMode::Unambiguous => {
            breakdown.push((LABEL_S2_INCONCLUSIVE, s2_fail));
            breakdown.push((LABEL_S2_ERROR, s2_err));
            s2_fail
        }
    };
    let strategy = match measurement.mode {
        CollectiveMode::MinError => Strategy::CollectiveMinError,
        CollectiveMode::Unambiguous => Strategy::CollectiveUnambiguous,
    };
    Ok(StrategyResult {
        strategy,
        p_error: Some(p_error),
        p_inconclusive: Some(p_inconclusive),
        breakdown,
    })
}

/// Collective comparison with minimum-error stage 2; the total error
/// probability equals cos²(2θ)/2, the same value the separate-measurement
/// strategy attains, but here the stage-1 outcomes are error-free.
pub fn collective_min_error(s: &ComparisonScenario) -> StrategyResult {
    let m = build_collective(s, CollectiveMode::MinError).expect("min-error mode has no degenerate θ");
    collective_outcome_probs(s, &m).expect("constructed measurement is valid")
}

/// Collective comparison with unambiguous stage 2; never errs and is
/// inconclusive with probability cos2θ. Fails with [`Error::DegenerateTheta`]
/// at θ = 0.
pub fn collective_unambiguous(s: &ComparisonScenario) -> Result<StrategyResult> {
    let m = build_collective(s, CollectiveMode::Unambiguous)?;
    collective_outcome_probs(s, &m)
}

/// Runs the named strategy.
pub fn run_strategy(s: &ComparisonScenario, strategy: Strategy) -> Result<StrategyResult> {
    Ok(match strategy {
        Strategy::IndividualMinError => individual_min_error(s),
        Strategy::IndividualUnambiguous => individual_unambiguous(s),
        Strategy::CollectiveMinError => collective_min_error(s),
        Strategy::CollectiveUnambiguous => collective_unambiguous(s)?,
    })
}

/// Minimum error probability for telling "both systems prepared alike" from
/// "prepared differently", computed through the mixed-state route: the two
/// hypotheses are the equal mixtures ρ_s of {ψ1ψ1, ψ2ψ2} and ρ_a of
/// {ψ1ψ2, ψ2ψ1}, and the bound is (1 − ‖ρ_s − ρ_a‖₁/2)/2 via the Hermitian
/// eigendecomposition.
pub fn helstrom_bound(s: &ComparisonScenario) -> f64 {
    let rho_s = DensityOperator::mixture(&[s.joint_state(1, 1), s.joint_state(2, 2)]);
    let rho_a = DensityOperator::mixture(&[s.joint_state(1, 2), s.joint_state(2, 1)]);
    let diff = rho_s.matrix().sub(rho_a.matrix());
    let distance = trace_norm(&diff).expect("difference of density operators is Hermitian");
    0.5 * (1.0 - 0.5 * distance)
}

/// True iff `candidate_p_inconclusive` respects the universal lower bound
/// cos2θ (within 1e-10) that every unambiguous comparison must obey.
pub fn unambiguous_lower_bound_check(s: &ComparisonScenario, candidate_p_inconclusive: f64) -> bool {
    assert!(
        (0.0..=1.0).contains(&candidate_p_inconclusive),
        "candidate probability outside [0, 1]"
    );
    candidate_p_inconclusive >= s.overlap() - 1e-10
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::povm::project_update;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6, FRAC_PI_8};

    const TOL: f64 = 1e-12;

    #[test]
    fn scenario_states() {
        let s = make_scenario(0.0).unwrap();
        assert!(s.psi1().same_up_to_phase(s.psi2(), TOL));
        let s = make_scenario(FRAC_PI_4).unwrap();
        assert!(s.psi1().overlap(s.psi2()).norm() < TOL);
        let s = make_scenario(FRAC_PI_8).unwrap();
        assert!((s.psi1().overlap(s.psi2()).re - (2.0f64).sqrt() / 2.0).abs() < TOL);
        assert!((s.overlap() - (2.0 * FRAC_PI_8).cos()).abs() < TOL);
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn scenario_range_and_clamping() {
        assert!(matches!(make_scenario(-0.1), Err(Error::ThetaOutOfRange { .. })));
        assert!(matches!(make_scenario(1.0), Err(Error::ThetaOutOfRange { .. })));
        // A 10-digit decimal rendering of π/4 lands just above the boundary.
        let s = make_scenario(0.7853981634).unwrap();
        assert_eq!(s.theta(), FRAC_PI_4);
    }

    #[test]
    fn joint_state_structure() {
        let s = make_scenario(FRAC_PI_8).unwrap();
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        // (1,1) has no singlet component; (1,2) no triplet component.
        let v11 = s.joint_state(1, 1);
        let singlet_amp = (v11.amplitudes().get(1) - v11.amplitudes().get(2)).norm() * inv_sqrt2;
        assert!(singlet_amp < TOL);
        let v12 = s.joint_state(1, 2);
        let triplet_amp = (v12.amplitudes().get(1) + v12.amplitudes().get(2)).norm() * inv_sqrt2;
        assert!(triplet_amp < TOL);
        // (1,2) singlet amplitude magnitude is sin2θ/√2 = 1/2 at θ = π/8.
        let singlet_12 = (v12.amplitudes().get(1) - v12.amplitudes().get(2)).norm() * inv_sqrt2;
        assert!((singlet_12 - 0.5).abs() < TOL);
    }

    #[test]
    fn joint_state_coefficients() {
        let theta = 0.3;
        let s = make_scenario(theta).unwrap();
        let (sin, cos) = theta.sin_cos();
        for (i, j) in [(1u8, 1u8), (1, 2), (2, 1), (2, 2)] {
            let v = s.joint_state(i, j);
            let sign_i = if i == 1 { 1.0 } else { -1.0 };
            let sign_j = if j == 1 { 1.0 } else { -1.0 };
            let expected = [
                cos * cos,
                cos * sin * sign_j,
                sin * cos * sign_i,
                sin * sin * sign_i * sign_j,
            ];
            for (k, want) in expected.iter().enumerate() {
                assert!((v.amplitudes().get(k).re - want).abs() < TOL);
                assert!(v.amplitudes().get(k).im.abs() < TOL);
            }
        }
    }

    #[test]
    fn individual_min_error_values() {
        let cases = [
            (FRAC_PI_4, 0.0),
            (0.0, 0.5),
            (FRAC_PI_8, 0.25),
        ];
        for (theta, want) in cases {
            let s = make_scenario(theta).unwrap();
            let r = individual_min_error(&s);
            assert!((r.p_error.unwrap() - want).abs() < TOL, "theta {theta}");
            assert_eq!(r.p_inconclusive, Some(0.0));
            assert!((r.breakdown_sum() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn individual_unambiguous_values() {
        let s = make_scenario(FRAC_PI_4).unwrap();
        assert!((individual_unambiguous(&s).p_inconclusive.unwrap() - 0.0).abs() < TOL);
        let s = make_scenario(0.0).unwrap();
        assert!((individual_unambiguous(&s).p_inconclusive.unwrap() - 1.0).abs() < TOL);
        let s = make_scenario(FRAC_PI_8).unwrap();
        let q = (2.0f64).sqrt() / 2.0;
        let want = q * (2.0 - q);
        let r = individual_unambiguous(&s);
        assert!((r.p_inconclusive.unwrap() - want).abs() < TOL);
        assert_eq!(r.p_error, Some(0.0));
        assert!((r.breakdown_sum() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn single_system_povms_match_closed_forms() {
        for theta in [0.1, FRAC_PI_8, 0.6] {
            let s = make_scenario(theta).unwrap();
            let helstrom = min_error_discrimination(s.psi1(), s.psi2(), "1", "2").unwrap();
            let p1 = helstrom.distribution_pure(s.psi1()).unwrap();
            assert!((p1.probabilities()[1] - s.single_min_error_prob()).abs() < 1e-12);
            let p2 = helstrom.distribution_pure(s.psi2()).unwrap();
            assert!((p2.probabilities()[0] - s.single_min_error_prob()).abs() < 1e-12);

            let idp = unambiguous_discrimination(s.psi1(), s.psi2(), "1", "2", "?").unwrap();
            assert!(idp.validate().pass());
            let d1 = idp.distribution_pure(s.psi1()).unwrap();
            assert!(d1.probabilities()[1] < 1e-12, "no misidentification");
            assert!((d1.probabilities()[2] - s.overlap()).abs() < 1e-12);
            let d2 = idp.distribution_pure(s.psi2()).unwrap();
            assert!(d2.probabilities()[0] < 1e-12);
            assert!((d2.probabilities()[2] - s.overlap()).abs() < 1e-12);
        }
    }

    #[test]
    fn idp_at_theta_zero_is_always_inconclusive() {
        let s = make_scenario(0.0).unwrap();
        let idp = unambiguous_discrimination(s.psi1(), s.psi2(), "1", "2", "?").unwrap_err();
        assert_eq!(idp, Error::DegenerateTheta);
        // Individual strategy still reports failure probability 1 via the
        // closed form; only the collective construction needs the POVM.
        assert!((individual_unambiguous(&s).p_inconclusive.unwrap() - 1.0).abs() < TOL);
    }

    #[test]
    fn stage1_hit_probabilities() {
        let theta = FRAC_PI_8;
        let s = make_scenario(theta).unwrap();
        let m = build_collective(&s, CollectiveMode::MinError).unwrap();
        let half_sin_sq = 0.5 * (2.0 * theta).sin().powi(2);
        let diff = m.stage1().distribution_pure(&s.joint_state(1, 2)).unwrap();
        assert!((diff.probabilities()[0] - half_sin_sq).abs() < TOL);
        let same = m.stage1().distribution_pure(&s.joint_state(1, 1)).unwrap();
        assert!((same.probabilities()[1] - half_sin_sq).abs() < TOL);
        // Stage 1 never errs.
        assert!(same.probabilities()[0] < 1e-12);
        assert!(diff.probabilities()[1] < 1e-12);
    }

    #[test]
    fn residual_states_and_overlap() {
        let theta = FRAC_PI_8;
        let s = make_scenario(theta).unwrap();
        let m = build_collective(&s, CollectiveMode::MinError).unwrap();
        let overlap = m.phi_plus().overlap(m.phi_minus()).re;
        let expected = 2.0 * (2.0f64).sqrt() / 3.0;
        assert!((overlap - expected).abs() < TOL);
        let general = s.overlap() / (1.0 - 0.5 * (2.0 * theta).sin().powi(2));
        assert!((overlap - general).abs() < TOL);

        // Projecting ψ1⊗ψ1 onto the residual plane leaves Φ₊.
        let (_, post) = project_update(m.residual_projector(), &s.joint_state(1, 1)).unwrap();
        assert!(post.unwrap().same_up_to_phase(m.phi_plus(), 1e-10));
        let (_, post) = project_update(m.residual_projector(), &s.joint_state(1, 2)).unwrap();
        assert!(post.unwrap().same_up_to_phase(m.phi_minus(), 1e-10));
    }

    #[test]
    fn collective_min_error_values() {
        let s = make_scenario(FRAC_PI_4).unwrap();
        assert!(collective_min_error(&s).p_error.unwrap() < TOL);
        let s = make_scenario(FRAC_PI_8).unwrap();
        let r = collective_min_error(&s);
        assert!((r.p_error.unwrap() - 0.25).abs() < 1e-10);
        assert!((r.p_error.unwrap() - individual_min_error(&s).p_error.unwrap()).abs() < 1e-10);
        assert!((r.breakdown_sum() - 1.0).abs() < 1e-10);
        assert_eq!(r.breakdown.len(), 5);
        // Closed-form route through the residual overlap.
        let m = build_collective(&s, CollectiveMode::MinError).unwrap();
        let o = m.phi_plus().overlap(m.phi_minus()).norm();
        let prefactor = 1.0 - 0.5 * (2.0 * s.theta()).sin().powi(2);
        let formula = prefactor * 0.5 * (1.0 - (1.0 - o * o).sqrt());
        assert!((r.p_error.unwrap() - formula).abs() < 1e-12);
    }

    #[test]
    fn collective_min_error_at_theta_zero_guesses() {
        let s = make_scenario(0.0).unwrap();
        let r = collective_min_error(&s);
        assert!((r.p_error.unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn collective_unambiguous_values() {
        let s = make_scenario(FRAC_PI_4).unwrap();
        assert!(collective_unambiguous(&s).unwrap().p_inconclusive.unwrap() < TOL);
        let s = make_scenario(FRAC_PI_8).unwrap();
        let r = collective_unambiguous(&s).unwrap();
        assert!((r.p_inconclusive.unwrap() - (2.0f64).sqrt() / 2.0).abs() < 1e-10);
        assert!(r.p_error.unwrap() < 1e-12);
        assert!((r.breakdown_sum() - 1.0).abs() < 1e-10);
        let individual = individual_unambiguous(&s).p_inconclusive.unwrap();
        assert!(r.p_inconclusive.unwrap() < individual);
        let s = make_scenario(FRAC_PI_6).unwrap();
        let r = collective_unambiguous(&s).unwrap();
        assert!((r.p_inconclusive.unwrap() - 0.5).abs() < 1e-10);
    }

    #[test]
    fn collective_unambiguous_rejects_theta_zero() {
        let s = make_scenario(0.0).unwrap();
        assert_eq!(collective_unambiguous(&s).unwrap_err(), Error::DegenerateTheta);
        assert!(build_collective(&s, CollectiveMode::Unambiguous).is_err());
    }

    #[test]
    fn helstrom_bound_matches_closed_form() {
        let cases = [
            (FRAC_PI_4, 0.0),
            (0.0, 0.5),
            (FRAC_PI_8, 0.25),
        ];
        for (theta, want) in cases {
            let s = make_scenario(theta).unwrap();
            assert!((helstrom_bound(&s) - want).abs() < 1e-10, "theta {theta}");
        }
        // The underlying trace distance at π/8: the two hypothesis mixtures
        // sit at trace norm 1, i.e. 2·sin²(2θ).
        let s = make_scenario(FRAC_PI_8).unwrap();
        let rho_s = DensityOperator::mixture(&[s.joint_state(1, 1), s.joint_state(2, 2)]);
        let rho_a = DensityOperator::mixture(&[s.joint_state(1, 2), s.joint_state(2, 1)]);
        let tn = trace_norm(&rho_s.matrix().sub(rho_a.matrix())).unwrap();
        assert!((tn - 1.0).abs() < 1e-10);
        for k in 1..=10 {
            let theta = k as f64 * FRAC_PI_4 / 11.0;
            let s = make_scenario(theta).unwrap();
            let closed = 0.5 * (2.0 * s.theta()).cos().powi(2);
            assert!((helstrom_bound(&s) - closed).abs() < 1e-10);
            assert!((collective_min_error(&s).p_error.unwrap() - closed).abs() < 1e-10);
        }
    }

    #[test]
    fn lower_bound_check_cases() {
        let s = make_scenario(FRAC_PI_8).unwrap();
        let collective = collective_unambiguous(&s).unwrap().p_inconclusive.unwrap();
        assert!(unambiguous_lower_bound_check(&s, collective));
        let individual = individual_unambiguous(&s).p_inconclusive.unwrap();
        assert!(unambiguous_lower_bound_check(&s, individual));
        assert!(individual > s.overlap() + 1e-6);
        assert!(!unambiguous_lower_bound_check(&s, 0.9 * s.overlap()));
    }
}
