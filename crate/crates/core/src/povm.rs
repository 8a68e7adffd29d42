//! POVM representation, validation, outcome distributions, sampling, and the
//! projective post-measurement update used by the two-stage strategies.

use crate::error::{Error, Result};
use crate::hilbert::{DensityOperator, PureState};
use crate::numerics::{min_eigenvalue, C64, CMatrix};
use crate::rng::CounterRng;

/// Validation tolerance for POVM elements and completeness.
pub const POVM_TOL: f64 = 1e-9;

/// Probabilities this far below 0 or above 1 are clamped; anything worse is a
/// construction bug and is reported as an error.
pub const PROB_CLAMP: f64 = 1e-12;

/// An ordered, labeled positive operator-valued measure.
#[derive(Debug, Clone)]
pub struct Povm {
    dim: usize,
    elements: Vec<(String, CMatrix)>,
}

impl Povm {
    /// Builds a POVM and verifies Hermiticity, positivity, completeness, and
    /// label uniqueness at [`POVM_TOL`].
    pub fn new(elements: Vec<(String, CMatrix)>) -> Result<Self> {
        let povm = Self::new_unchecked(elements)?;
        let report = povm.validate();
        if !report.pass() {
            return Err(Error::InvalidPovm(report.summary()));
        }
        Ok(povm)
    }

    /// Builds without operator checks (labels and shapes are still enforced).
    /// Intended for constructing deliberately invalid candidates to feed
    /// through [`Povm::validate`].
    pub fn new_unchecked(elements: Vec<(String, CMatrix)>) -> Result<Self> {
        let Some((_, first)) = elements.first() else {
            return Err(Error::InvalidPovm("empty element list".into()));
        };
        let dim = first.rows();
        for (label, m) in &elements {
            if !m.is_square() || m.rows() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: m.rows().max(m.cols()) });
            }
            if elements.iter().filter(|(l, _)| l == label).count() > 1 {
                return Err(Error::InvalidPovm(format!("duplicate label {label:?}")));
            }
        }
        Ok(Self { dim, elements })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.elements.iter().map(|(l, _)| l.as_str())
    }

    pub fn elements(&self) -> &[(String, CMatrix)] {
        &self.elements
    }

    pub fn element(&self, label: &str) -> Option<&CMatrix> {
        self.elements.iter().find(|(l, _)| l == label).map(|(_, m)| m)
    }

    /// Per-element Hermiticity/positivity deviations and the completeness
    /// deviation from the identity.
    pub fn validate(&self) -> ValidationReport {
        let mut element_checks = Vec::with_capacity(self.elements.len());
        let mut sum = CMatrix::zeros(self.dim, self.dim);
        for (label, m) in &self.elements {
            sum = sum.add(m);
            let hermiticity_deviation = m.hermiticity_deviation();
            let min_eig = if hermiticity_deviation <= POVM_TOL {
                min_eigenvalue(&m.symmetrized()).unwrap_or(f64::NEG_INFINITY)
            } else {
                f64::NEG_INFINITY
            };
            element_checks.push(ElementCheck {
                label: label.clone(),
                hermiticity_deviation,
                min_eigenvalue: min_eig,
            });
        }
        let completeness_deviation = sum.max_abs_diff(&CMatrix::identity(self.dim));
        ValidationReport { element_checks, completeness_deviation, tolerance: POVM_TOL }
    }

    /// Outcome probabilities Tr(ρ Π_k), clamped to [0, 1] and renormalized.
    pub fn distribution(&self, rho: &DensityOperator) -> Result<OutcomeDistribution> {
        if rho.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: rho.dim() });
        }
        let raw = self
            .elements
            .iter()
            .map(|(_, m)| m.matmul(rho.matrix()).trace().re)
            .collect::<Vec<_>>();
        OutcomeDistribution::from_raw(raw)
    }

    /// Fast path for pure states: probabilities ⟨ψ|Π_k|ψ⟩.
    pub fn distribution_pure(&self, psi: &PureState) -> Result<OutcomeDistribution> {
        if psi.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: psi.dim() });
        }
        let raw = self
            .elements
            .iter()
            .map(|(_, m)| m.expectation(psi.amplitudes()))
            .collect::<Vec<_>>();
        OutcomeDistribution::from_raw(raw)
    }

    /// `n` i.i.d. outcome draws by inverse-CDF over the cumulative sums in
    /// element order; deterministic for a fixed seed.
    pub fn sample(&self, rho: &DensityOperator, rng_seed: u64, n: usize) -> Result<Vec<String>> {
        let indices = self.sample_indices(rho, rng_seed, n)?;
        Ok(indices.into_iter().map(|i| self.elements[i].0.clone()).collect())
    }

    /// As [`Povm::sample`] but returning element indices.
    pub fn sample_indices(&self, rho: &DensityOperator, rng_seed: u64, n: usize) -> Result<Vec<usize>> {
        assert!(n >= 1, "sample size must be positive");
        let dist = self.distribution(rho)?;
        let mut rng = CounterRng::new(rng_seed);
        Ok((0..n).map(|_| dist.sample_index(&mut rng)).collect())
    }
}

/// Outcome of [`Povm::validate`].
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub element_checks: Vec<ElementCheck>,
    pub completeness_deviation: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone)]
pub struct ElementCheck {
    pub label: String,
    pub hermiticity_deviation: f64,
    pub min_eigenvalue: f64,
}

impl ElementCheck {
    pub fn pass(&self, tol: f64) -> bool {
        self.hermiticity_deviation <= tol && self.min_eigenvalue >= -tol
    }
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.completeness_deviation <= self.tolerance
            && self.element_checks.iter().all(|c| c.pass(self.tolerance))
    }

    pub fn summary(&self) -> String {
        let mut issues = Vec::new();
        if self.completeness_deviation > self.tolerance {
            issues.push(format!("completeness deviation {:.3e}", self.completeness_deviation));
        }
        for c in &self.element_checks {
            if c.hermiticity_deviation > self.tolerance {
                issues.push(format!("{}: Hermiticity deviation {:.3e}", c.label, c.hermiticity_deviation));
            }
            if c.min_eigenvalue < -self.tolerance {
                issues.push(format!("{}: min eigenvalue {:.3e}", c.label, c.min_eigenvalue));
            }
        }
        if issues.is_empty() {
            "ok".into()
        } else {
            issues.join("; ")
        }
    }
}

/// Probabilities aligned with the POVM's element order.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDistribution {
    probabilities: Vec<f64>,
}

impl OutcomeDistribution {
    fn from_raw(raw: Vec<f64>) -> Result<Self> {
        let mut probabilities = Vec::with_capacity(raw.len());
        for p in raw {
            if !(-PROB_CLAMP..=1.0 + PROB_CLAMP).contains(&p) {
                return Err(Error::InvalidPovm(format!("outcome probability {p} outside [0, 1]")));
            }
            probabilities.push(p.clamp(0.0, 1.0));
        }
        let sum: f64 = probabilities.iter().sum();
        if (sum - 1.0).abs() > POVM_TOL {
            return Err(Error::InvalidPovm(format!("probabilities sum to {sum}")));
        }
        for p in &mut probabilities {
            *p /= sum;
        }
        Ok(Self { probabilities })
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    /// Inverse-CDF draw; u ∈ (0, 1] maps to the first index whose cumulative
    /// probability reaches u.
    pub fn sample_index(&self, rng: &mut CounterRng) -> usize {
        let u = rng.uniform_open();
        let mut acc = 0.0;
        for (i, p) in self.probabilities.iter().enumerate() {
            acc += p;
            if u <= acc {
                return i;
            }
        }
        self.probabilities.len() - 1
    }
}

/// Lüders update for an orthogonal projector on a pure state: returns the
/// outcome probability and the renormalized post-measurement state (None if
/// the probability vanishes).
pub fn project_update(proj: &CMatrix, psi: &PureState) -> Result<(f64, Option<PureState>)> {
    if !proj.is_square() || proj.rows() != psi.dim() {
        return Err(Error::DimensionMismatch { expected: psi.dim(), found: proj.rows() });
    }
    let herm = proj.hermiticity_deviation();
    let idem = proj.matmul(proj).max_abs_diff(proj);
    let deviation = herm.max(idem);
    if deviation > POVM_TOL {
        return Err(Error::NotProjector { deviation });
    }
    let projected = proj.mul_vec(psi.amplitudes());
    let probability = psi.amplitudes().inner(&projected).re.clamp(0.0, 1.0);
    if probability <= PROB_CLAMP {
        return Ok((0.0, None));
    }
    let post = projected.scale(C64::new(1.0 / probability.sqrt(), 0.0));
    Ok((probability, Some(PureState::normalized(post).expect("projected state is nonzero"))))
}
