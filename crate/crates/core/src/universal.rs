//! Comparison of two completely unknown pure states.
//!
//! No measurement can ever certify that two unknown pure states are the same;
//! the best one can do is sometimes certify that they differ. The optimal
//! detector is the projector onto the antisymmetric subspace, and the
//! `EmuFamily` type spans the full family of no-false-positive detectors it
//! dominates: Π_n = Σ_μ e_μ |a_μ⟩⟨a_μ| with coefficients in [0, 1] over the
//! antisymmetric basis.

use crate::error::{Error, Result};
use crate::hilbert::{antisym_basis, make_bipartite, product_state, random_pure_from, BipartiteSpace, PureState};
use crate::numerics::CMatrix;
use crate::povm::Povm;
use crate::rng::CounterRng;

/// Label of the conclusive "the states differ" outcome.
pub const LABEL_DIFFERENT: &str = "different";
/// Label of the inconclusive outcome.
pub const LABEL_INCONCLUSIVE: &str = "inconclusive";

/// The optimal two-outcome comparison measurement for unknown states.
#[derive(Debug, Clone)]
pub struct UniversalComparator {
    space: BipartiteSpace,
    povm: Povm,
}

impl UniversalComparator {
    pub fn space(&self) -> &BipartiteSpace {
        &self.space
    }

    pub fn povm(&self) -> &Povm {
        &self.povm
    }

    /// Probability of the conclusive "different" outcome on |psi⟩⊗|phi⟩;
    /// equals (1 − |⟨psi|phi⟩|²)/2.
    pub fn difference_detection_prob(&self, psi: &PureState, phi: &PureState) -> Result<f64> {
        let joint = product_state(psi, phi)?;
        if joint.dim() != self.space.dim() {
            return Err(Error::DimensionMismatch { expected: self.space.dim(), found: joint.dim() });
        }
        Ok(self.space.p_anti().expectation(joint.amplitudes()))
    }
}

/// Builds the comparator {Π_different = P_anti, Π_inconclusive = P_sym}.
pub fn build_universal(d: usize) -> Result<UniversalComparator> {
    let space = make_bipartite(d)?;
    let povm = Povm::new(vec![
        (LABEL_DIFFERENT.into(), space.p_anti().clone()),
        (LABEL_INCONCLUSIVE.into(), space.p_sym().clone()),
    ])?;
    Ok(UniversalComparator { space, povm })
}

/// A coefficient vector e ∈ [0, 1]^{d(d−1)/2} selecting a no-false-positive
/// detector supported on the antisymmetric subspace.
#[derive(Debug, Clone)]
pub struct EmuFamily {
    space: BipartiteSpace,
    basis: Vec<PureState>,
    coefficients: Vec<f64>,
}

impl EmuFamily {
    pub fn new(d: usize, coefficients: Vec<f64>) -> Result<Self> {
        let space = make_bipartite(d)?;
        let basis = antisym_basis(d)?;
        if coefficients.len() != basis.len() {
            return Err(Error::DimensionMismatch { expected: basis.len(), found: coefficients.len() });
        }
        for (index, &value) in coefficients.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::CoefficientOutOfRange { index, value });
            }
        }
        Ok(Self { space, basis, coefficients })
    }

    /// All-ones coefficients: the optimal member, identical to
    /// [`build_universal`]'s detector.
    pub fn all_ones(d: usize) -> Result<Self> {
        let count = d * (d - 1) / 2;
        Self::new(d, vec![1.0; count])
    }

    pub fn subsystem_dim(&self) -> usize {
        self.space.subsystem_dim()
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// The detector Σ_μ e_μ |a_μ⟩⟨a_μ|.
    pub fn detector(&self) -> CMatrix {
        let dim = self.space.dim();
        let mut m = CMatrix::zeros(dim, dim);
        for (e, a) in self.coefficients.iter().zip(&self.basis) {
            if *e != 0.0 {
                m = m.add(&CMatrix::outer(a.amplitudes()).scale_re(*e));
            }
        }
        m
    }

    /// Detection probability of this family on |psi⟩⊗|phi⟩, evaluated
    /// per-coefficient: Σ_μ e_μ |⟨a_μ|psi⊗phi⟩|².
    pub fn detection_prob(&self, psi: &PureState, phi: &PureState) -> Result<f64> {
        let joint = product_state(psi, phi)?;
        if joint.dim() != self.space.dim() {
            return Err(Error::DimensionMismatch { expected: self.space.dim(), found: joint.dim() });
        }
        Ok(self
            .coefficients
            .iter()
            .zip(&self.basis)
            .map(|(e, a)| e * a.overlap_sq(&joint))
            .sum())
    }
}

/// The two-outcome POVM {Π_n, 1 − Π_n} of an [`EmuFamily`], in the fixed
/// label order ("different", "inconclusive").
pub fn emu_povm(family: &EmuFamily) -> Povm {
    let detector = family.detector();
    let complement = CMatrix::identity(family.space.dim()).sub(&detector);
    Povm::new(vec![
        (LABEL_DIFFERENT.into(), detector),
        (LABEL_INCONCLUSIVE.into(), complement),
    ])
    .expect("coefficients in [0, 1] always yield a valid POVM")
}

/// Samples `trials` Haar states ψ and returns the largest value of
/// ⟨ψ⊗ψ| Π_n |ψ⊗ψ⟩ observed. The contract for any member of the family is
/// that this never exceeds 1e-10: same-state products carry no antisymmetric
/// component, so the detector can never fire on them.
pub fn no_false_positive_check(family: &EmuFamily, trials: usize, seed: u64) -> f64 {
    assert!(trials >= 1);
    let detector = family.detector();
    let d = family.subsystem_dim();
    let rng = CounterRng::new(seed);
    let mut worst = 0.0f64;
    for t in 0..trials {
        let mut stream = rng.substream(t as u64);
        let psi = random_pure_from(&mut stream, d);
        let joint = product_state(&psi, &psi).expect("equal dims");
        worst = worst.max(detector.expectation(joint.amplitudes()));
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::random_pure;

    #[test]
    fn universal_detector_is_antisymmetric_projector() {
        let comp = build_universal(2).unwrap();
        let detector = comp.povm().element(LABEL_DIFFERENT).unwrap();
        assert!(detector.max_abs_diff(comp.space().p_anti()) < 1e-12);
        // d=2: the singlet projector, trace 1.
        assert!((detector.trace().re - 1.0).abs() < 1e-12);
        let comp3 = build_universal(3).unwrap();
        let d3 = comp3.povm().element(LABEL_DIFFERENT).unwrap();
        assert!((d3.trace().re - 3.0).abs() < 1e-12);
        assert!(comp3.povm().validate().pass());
    }

    #[test]
    fn detection_probability_matches_overlap_formula() {
        let comp = build_universal(4).unwrap();
        for k in 0..20u64 {
            let psi = random_pure(4, 100 + k);
            let phi = random_pure(4, 200 + k);
            let p = comp.difference_detection_prob(&psi, &phi).unwrap();
            let expected = (1.0 - psi.overlap_sq(&phi)) / 2.0;
            assert!((p - expected).abs() < 1e-10);
        }
    }

    #[test]
    fn detection_edge_cases() {
        let comp = build_universal(2).unwrap();
        let psi = random_pure(2, 3);
        assert!(comp.difference_detection_prob(&psi, &psi).unwrap() < 1e-12);
        let zero = PureState::basis_state(2, 0);
        let one = PureState::basis_state(2, 1);
        let p = comp.difference_detection_prob(&zero, &one).unwrap();
        assert!((p - 0.5).abs() < 1e-12);
    }

    #[test]
    fn all_ones_family_equals_universal() {
        for d in [2usize, 3] {
            let family = EmuFamily::all_ones(d).unwrap();
            let povm = emu_povm(&family);
            let comp = build_universal(d).unwrap();
            let lhs = povm.element(LABEL_DIFFERENT).unwrap();
            let rhs = comp.povm().element(LABEL_DIFFERENT).unwrap();
            assert!(lhs.max_abs_diff(rhs) < 1e-12);
        }
    }

    #[test]
    fn zero_family_never_concludes() {
        let family = EmuFamily::new(2, vec![0.0]).unwrap();
        let povm = emu_povm(&family);
        assert!(povm.element(LABEL_DIFFERENT).unwrap().max_abs() < 1e-15);
        let psi = random_pure(2, 1);
        let phi = random_pure(2, 2);
        assert!(family.detection_prob(&psi, &phi).unwrap() < 1e-15);
    }

    #[test]
    fn half_coefficient_halves_detection() {
        let family = EmuFamily::new(2, vec![0.5]).unwrap();
        let zero = PureState::basis_state(2, 0);
        let one = PureState::basis_state(2, 1);
        let p = family.detection_prob(&zero, &one).unwrap();
        assert!((p - 0.25).abs() < 1e-12);
        assert!(emu_povm(&family).validate().pass());
    }

    #[test]
    fn coefficient_bounds_enforced() {
        assert!(matches!(
            EmuFamily::new(2, vec![1.5]),
            Err(Error::CoefficientOutOfRange { index: 0, .. })
        ));
        assert!(matches!(
            EmuFamily::new(2, vec![-0.1]),
            Err(Error::CoefficientOutOfRange { .. })
        ));
        assert!(matches!(EmuFamily::new(3, vec![1.0]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn no_false_positives_at_d2_and_d5() {
        let f2 = EmuFamily::new(2, vec![0.7]).unwrap();
        assert!(no_false_positive_check(&f2, 1000, 11) <= 1e-10);
        let f5 = EmuFamily::all_ones(5).unwrap();
        assert!(no_false_positive_check(&f5, 1000, 12) <= 1e-10);
    }

    #[test]
    fn corrupted_detector_fires_on_same_states() {
        // Injected fault: leak 0.01·P_sym into the detector and watch it fire.
        let family = EmuFamily::all_ones(2).unwrap();
        let space = make_bipartite(2).unwrap();
        let corrupted = family.detector().add(&space.p_sym().scale_re(0.01));
        let rng = CounterRng::new(13);
        let mut worst = 0.0f64;
        for t in 0..200u64 {
            let mut stream = rng.substream(t);
            let psi = random_pure_from(&mut stream, 2);
            let joint = product_state(&psi, &psi).unwrap();
            worst = worst.max(corrupted.expectation(joint.amplitudes()));
        }
        assert!(worst > 1e-4, "negative control failed: {worst}");
    }

    #[test]
    fn outcome_probabilities_complementary() {
        let family = EmuFamily::new(3, vec![0.2, 0.9, 0.5]).unwrap();
        let povm = emu_povm(&family);
        let psi = random_pure(3, 41);
        let phi = random_pure(3, 42);
        let joint = product_state(&psi, &phi).unwrap();
        let dist = povm.distribution_pure(&joint).unwrap();
        assert!((dist.probabilities()[0] + dist.probabilities()[1] - 1.0).abs() < 1e-10);
        assert!((dist.probabilities()[0] - family.detection_prob(&psi, &phi).unwrap()).abs() < 1e-10);
    }
}
