//! States, density operators, and the bipartite symmetric/antisymmetric
//! structure: the swap operator, the projectors onto its ±1 eigenspaces, and
//! the explicit antisymmetric basis.
//!
//! Composite indices follow the tensor convention of [`crate::numerics`]:
//! the product basis vector |i⟩⊗|j⟩ sits at flat index `i * d + j`.

use crate::error::{Error, Result};
use crate::numerics::{min_eigenvalue, C64, CMatrix, CVector, HERMITICITY_TOL};
use crate::rng::CounterRng;

/// Normalization tolerance for pure states.
pub const NORM_TOL: f64 = 1e-12;

/// Subsystem dimensions supported by the bipartite constructions.
pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 8;

/// A normalized pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: CVector,
}

impl PureState {
    /// Wraps an amplitude vector, requiring unit norm within [`NORM_TOL`].
    pub fn new(amplitudes: CVector) -> Result<Self> {
        let deviation = (amplitudes.norm() - 1.0).abs();
        if deviation > NORM_TOL {
            return Err(Error::NotNormalized { deviation });
        }
        Ok(Self { amplitudes })
    }

    /// Rescales an arbitrary nonzero vector to unit norm.
    pub fn normalized(amplitudes: CVector) -> Result<Self> {
        let norm = amplitudes.norm();
        if norm < 1e-300 {
            return Err(Error::NotNormalized { deviation: 1.0 });
        }
        Ok(Self { amplitudes: amplitudes.scale(C64::new(1.0 / norm, 0.0)) })
    }

    /// Computational basis state |index⟩.
    pub fn basis_state(dim: usize, index: usize) -> Self {
        Self { amplitudes: CVector::basis(dim, index) }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.dim()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    /// ⟨self|other⟩.
    pub fn overlap(&self, other: &Self) -> C64 {
        self.amplitudes.inner(&other.amplitudes)
    }

    /// |⟨self|other⟩|².
    pub fn overlap_sq(&self, other: &Self) -> f64 {
        self.overlap(other).norm_sqr()
    }

    /// True iff the states agree up to a global phase.
    pub fn same_up_to_phase(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim() && (self.overlap(other).norm() - 1.0).abs() <= tol
    }
}

/// A Hermitian, positive semidefinite, unit-trace operator.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: CMatrix,
}

impl DensityOperator {
    /// Validates Hermiticity, positivity, and unit trace (all at 1e-10).
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidDensity("matrix is not square".into()));
        }
        let herm = matrix.hermiticity_deviation();
        if herm > HERMITICITY_TOL {
            return Err(Error::InvalidDensity(format!("Hermiticity deviation {herm:.3e}")));
        }
        let min_eig = min_eigenvalue(&matrix)?;
        if min_eig < -HERMITICITY_TOL {
            return Err(Error::InvalidDensity(format!("negative eigenvalue {min_eig:.3e}")));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > HERMITICITY_TOL || trace.im.abs() > HERMITICITY_TOL {
            return Err(Error::InvalidDensity(format!("trace {trace} != 1")));
        }
        Ok(Self { matrix })
    }

    /// The maximally mixed state 1/dim.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self { matrix: CMatrix::identity(dim).scale_re(1.0 / dim as f64) }
    }

    /// Equal-weight mixture of pure states. Panics if `states` is empty or
    /// dimensions disagree.
    pub fn mixture(states: &[PureState]) -> Self {
        assert!(!states.is_empty());
        let dim = states[0].dim();
        let weight = 1.0 / states.len() as f64;
        let mut m = CMatrix::zeros(dim, dim);
        for s in states {
            assert_eq!(s.dim(), dim);
            m = m.add(&CMatrix::outer(s.amplitudes()).scale_re(weight));
        }
        Self { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }
}

/// The two-copy Hilbert space of a d-dimensional system: swap operator and
/// the projectors onto the symmetric and antisymmetric subspaces.
#[derive(Debug, Clone)]
pub struct BipartiteSpace {
    d: usize,
    p_sym: CMatrix,
    p_anti: CMatrix,
    swap: CMatrix,
}

impl BipartiteSpace {
    pub fn subsystem_dim(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.d * self.d
    }

    pub fn p_sym(&self) -> &CMatrix {
        &self.p_sym
    }

    pub fn p_anti(&self) -> &CMatrix {
        &self.p_anti
    }

    pub fn swap(&self) -> &CMatrix {
        &self.swap
    }
}

fn check_dim(d: usize) -> Result<()> {
    if !(MIN_DIM..=MAX_DIM).contains(&d) {
        return Err(Error::DimensionOutOfRange { dim: d, min: MIN_DIM, max: MAX_DIM });
    }
    Ok(())
}

/// Builds the swap operator and the (1 ± swap)/2 projectors for subsystem
/// dimension `d` (2 ..= 8).
pub fn make_bipartite(d: usize) -> Result<BipartiteSpace> {
    check_dim(d)?;
    let dim = d * d;
    let mut swap = CMatrix::zeros(dim, dim);
    for i in 0..d {
        for j in 0..d {
            // swap |i⟩⊗|j⟩ = |j⟩⊗|i⟩
            swap.set(j * d + i, i * d + j, C64::new(1.0, 0.0));
        }
    }
    let identity = CMatrix::identity(dim);
    let p_sym = identity.add(&swap).scale_re(0.5);
    let p_anti = identity.sub(&swap).scale_re(0.5);
    Ok(BipartiteSpace { d, p_sym, p_anti, swap })
}

/// The orthonormal antisymmetric basis (|i⟩⊗|j⟩ − |j⟩⊗|i⟩)/√2 for i < j,
/// as states on the d²-dimensional space.
pub fn antisym_basis(d: usize) -> Result<Vec<PureState>> {
    check_dim(d)?;
    let dim = d * d;
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut basis = Vec::with_capacity(d * (d - 1) / 2);
    for i in 0..d {
        for j in (i + 1)..d {
            let mut v = CVector::zeros(dim);
            v.set(i * d + j, C64::new(inv_sqrt2, 0.0));
            v.set(j * d + i, C64::new(-inv_sqrt2, 0.0));
            basis.push(PureState { amplitudes: v });
        }
    }
    Ok(basis)
}

/// Tensor product |psi⟩⊗|phi⟩ of two states of equal subsystem dimension.
pub fn product_state(psi: &PureState, phi: &PureState) -> Result<PureState> {
    if psi.dim() != phi.dim() {
        return Err(Error::DimensionMismatch { expected: psi.dim(), found: phi.dim() });
    }
    Ok(PureState { amplitudes: psi.amplitudes.tensor(&phi.amplitudes) })
}

/// Rank-1 density operator |psi⟩⟨psi|.
pub fn pure_to_density(psi: &PureState) -> DensityOperator {
    DensityOperator { matrix: CMatrix::outer(psi.amplitudes()) }
}

/// Haar-distributed pure state: d complex amplitudes with independent
/// standard-normal parts, normalized. Deterministic for a fixed seed.
pub fn random_pure(d: usize, seed: u64) -> PureState {
    let mut rng = CounterRng::new(seed);
    random_pure_from(&mut rng, d)
}

/// Haar sampling from a caller-managed stream; used by the Monte Carlo
/// drivers so that each trial owns a substream.
pub fn random_pure_from(rng: &mut CounterRng, d: usize) -> PureState {
    assert!(d >= 1);
    let mut v = CVector::zeros(d);
    for i in 0..d {
        let (re, im) = rng.normal_pair();
        v.set(i, C64::new(re, im));
    }
    PureState::normalized(v).expect("Gaussian vector is nonzero almost surely")
}
