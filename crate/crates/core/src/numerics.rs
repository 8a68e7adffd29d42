//! Dense complex linear algebra over small matrices (dimension <= ~64).
//!
//! Everything is stored row-major as `Complex<f64>` and treated as immutable
//! after construction. The eigensolver is a cyclic Jacobi iteration for
//! Hermitian matrices, which is accurate to near machine precision at these
//! sizes and gives fully deterministic output (descending eigenvalues, first
//! significant eigenvector component made real-positive).

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type C64 = Complex64;

/// Hermiticity tolerance (max-entry norm) used by the spectral operations.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Off-diagonal convergence target for the Jacobi sweep, relative to the
/// Frobenius norm of the input.
const JACOBI_TOL: f64 = 1e-14;

/// Hard cap on Jacobi sweeps; reaching it means the input was pathological.
const MAX_SWEEPS: usize = 100;

/// Threshold below which an eigenvector component is treated as zero when
/// fixing the overall phase.
const PHASE_FIX_TOL: f64 = 1e-8;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<C64>,
}

impl CMatrix {
    /// Builds a matrix from row-major entries, rejecting NaN/Inf.
    pub fn new(rows: usize, cols: usize, entries: Vec<C64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Rank-1 outer product v v†.
    pub fn outer(v: &CVector) -> Self {
        let n = v.dim();
        Self::from_fn(n, n, |i, j| v.get(i) * v.get(j).conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: C64) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Self { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Self { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, factor: C64) -> Self {
        let entries = self.entries.iter().map(|a| a * factor).collect();
        Self { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(C64::new(factor, 0.0))
    }

    /// Matrix product self * other.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch in matmul");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> C64 {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Matrix-vector product self * v.
    pub fn mul_vec(&self, v: &CVector) -> CVector {
        assert_eq!(self.cols, v.dim(), "dimension mismatch in mul_vec");
        let entries = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v.get(j)).sum())
            .collect();
        CVector { entries }
    }

    /// Quadratic form ⟨v| self |v⟩ (real part; the imaginary part is rounding
    /// noise for Hermitian inputs).
    pub fn expectation(&self, v: &CVector) -> f64 {
        v.inner(&self.mul_vec(v)).re
    }

    /// Max-entry norm of self − self†.
    pub fn hermiticity_deviation(&self) -> f64 {
        assert!(self.is_square(), "hermiticity of a non-square matrix");
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    /// Max-entry norm of the difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Kronecker product; the composite index convention is
    /// (i_a, i_b) ↦ i_a * rows(b) + i_b.
    pub fn tensor(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self.get(ia, ja);
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for ib in 0..other.rows {
                    for jb in 0..other.cols {
                        out.set(ia * other.rows + ib, ja * other.cols + jb, a * other.get(ib, jb));
                    }
                }
            }
        }
        out
    }

    /// (self + self†)/2, used to shed accumulated rounding drift before
    /// spectral operations.
    pub fn symmetrized(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * 0.5
        })
    }
}

/// Dense complex vector.
#[derive(Debug, Clone, PartialEq)]
pub struct CVector {
    entries: Vec<C64>,
}

impl CVector {
    pub fn new(entries: Vec<C64>) -> Result<Self> {
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { entries })
    }

    pub fn zeros(dim: usize) -> Self {
        Self { entries: vec![C64::new(0.0, 0.0); dim] }
    }

    /// Computational basis vector e_index.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut v = Self::zeros(dim);
        v.entries[index] = C64::new(1.0, 0.0);
        v
    }

    pub fn from_reals(reals: &[f64]) -> Self {
        Self { entries: reals.iter().map(|&r| C64::new(r, 0.0)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize) -> C64 {
        self.entries[i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: C64) {
        self.entries[i] = value;
    }

    /// Inner product ⟨self|other⟩ = Σ conj(self_i) · other_i.
    pub fn inner(&self, other: &Self) -> C64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in inner");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self { entries: self.entries.iter().map(|z| z * factor).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect() }
    }

    /// Kronecker product of vectors, same index convention as `CMatrix::tensor`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut entries = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a * b);
            }
        }
        Self { entries }
    }
}

/// Eigendecomposition of a Hermitian matrix: eigenvalues descending,
/// eigenvectors orthonormal and phase-fixed.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<CVector>,
}

impl HermitianEigen {
    /// Rebuilds Σ λ_i v_i v_i†, the reconstruction oracle used in tests.
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.eigenvectors[0].dim();
        let mut m = CMatrix::zeros(n, n);
        for (lambda, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            m = m.add(&CMatrix::outer(v).scale_re(*lambda));
        }
        m
    }
}

fn require_hermitian(m: &CMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
    }
    let deviation = m.hermiticity_deviation();
    if deviation > HERMITICITY_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(())
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a.get(p, q).norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input must be Hermitian within [`HERMITICITY_TOL`]; it is symmetrized
/// internally so that rounding drift from repeated products does not leak
/// into the spectrum. Eigenvalues are sorted descending and each eigenvector
/// has its first component of magnitude > 1e-8 rotated to the positive real
/// axis, so the output is deterministic.
pub fn eig_hermitian(m: &CMatrix) -> Result<HermitianEigen> {
    require_hermitian(m)?;
    let n = m.rows();
    let mut a = m.symmetrized();
    let mut v = CMatrix::identity(n);
    let target = JACOBI_TOL * a.frobenius_norm().max(1.0);

    let mut converged = n <= 1 || off_diagonal_norm(&a) <= target;
    for _sweep in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                let beta = apq.norm();
                if beta == 0.0 {
                    continue;
                }
                // Unit phase that makes the pivot real, then a real Givens
                // rotation that annihilates it.
                let phase = apq.conj() / beta;
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let tau = (aqq - app) / (2.0 * beta);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let s_phase = phase * s;
                // Columns p, q of A and of the eigenvector accumulator.
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, akp * c - akq * s_phase);
                    a.set(k, q, akp * s + akq * (phase * c));
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, vkp * c - vkq * s_phase);
                    v.set(k, q, vkp * s + vkq * (phase * c));
                }
                // Rows p, q of A (conjugated coefficients).
                let phase_c = phase.conj();
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, apk * c - aqk * (phase_c * s));
                    a.set(q, k, apk * s + aqk * (phase_c * c));
                }
            }
        }
        converged = off_diagonal_norm(&a) <= target;
    }
    if !converged {
        return Err(Error::NoConvergence);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a.get(j, j).re.partial_cmp(&a.get(i, i).re).expect("finite eigenvalues")
    });

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = Vec::with_capacity(n);
    for &idx in &order {
        eigenvalues.push(a.get(idx, idx).re);
        let mut vec = CVector::zeros(n);
        for k in 0..n {
            vec.set(k, v.get(k, idx));
        }
        // Phase fix: first significant component made real-positive.
        if let Some(lead) = vec.entries().iter().find(|z| z.norm() > PHASE_FIX_TOL) {
            let unit = lead.conj() / lead.norm();
            vec = vec.scale(unit);
        }
        eigenvectors.push(vec);
    }
    Ok(HermitianEigen { eigenvalues, eigenvectors })
}

/// Trace norm Σ |λ_i| over the Hermitian spectrum.
pub fn trace_norm(m: &CMatrix) -> Result<f64> {
    let eig = eig_hermitian(m)?;
    Ok(eig.eigenvalues.iter().map(|l| l.abs()).sum())
}

/// True iff the smallest eigenvalue is ≥ −tol.
pub fn is_psd(m: &CMatrix, tol: f64) -> Result<bool> {
    let eig = eig_hermitian(m)?;
    Ok(eig.eigenvalues.last().is_none_or(|&min| min >= -tol))
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(m: &CMatrix) -> Result<f64> {
    let eig = eig_hermitian(m)?;
    Ok(*eig.eigenvalues.last().expect("non-empty matrix"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::CounterRng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn random_matrix(rng: &mut CounterRng, n: usize) -> CMatrix {
        CMatrix::from_fn(n, n, |_, _| c(rng.normal(), rng.normal()))
    }

    fn random_hermitian(rng: &mut CounterRng, n: usize) -> CMatrix {
        random_matrix(rng, n).symmetrized()
    }

    #[test]
    fn tensor_identity_case() {
        let i2 = CMatrix::identity(2);
        assert_eq!(i2.tensor(&i2), CMatrix::identity(4));
    }

    #[test]
    fn tensor_basis_bookkeeping() {
        // e1 e1^T ⊗ e2 e2^T at 2x2 each: single 1 at flat index 0*2+1 = 1.
        let p0 = CMatrix::outer(&CVector::basis(2, 0));
        let p1 = CMatrix::outer(&CVector::basis(2, 1));
        let t = p0.tensor(&p1);
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == 1 && j == 1 { 1.0 } else { 0.0 };
                assert_eq!(t.get(i, j), c(expected, 0.0));
            }
        }
    }

    #[test]
    fn tensor_expectation_factorizes() {
        let mut rng = CounterRng::new(17);
        for _ in 0..20 {
            let a = random_hermitian(&mut rng, 3);
            let b = random_hermitian(&mut rng, 2);
            let mut psi = CVector::new((0..3).map(|_| c(rng.normal(), rng.normal())).collect()).unwrap();
            let mut phi = CVector::new((0..2).map(|_| c(rng.normal(), rng.normal())).collect()).unwrap();
            psi = psi.scale(c(1.0 / psi.norm(), 0.0));
            phi = phi.scale(c(1.0 / phi.norm(), 0.0));
            let lhs = a.tensor(&b).expectation(&psi.tensor(&phi));
            let rhs = a.expectation(&psi) * b.expectation(&phi);
            assert!((lhs - rhs).abs() < 1e-12, "lhs {lhs} rhs {rhs}");
        }
    }

    #[test]
    fn tensor_associative() {
        let mut rng = CounterRng::new(3);
        let a = random_matrix(&mut rng, 2);
        let b = random_matrix(&mut rng, 3);
        let m = random_matrix(&mut rng, 2);
        let lhs = a.tensor(&b).tensor(&m);
        let rhs = a.tensor(&b.tensor(&m));
        assert!(lhs.max_abs_diff(&rhs) < 1e-14);
    }

    #[test]
    fn eig_diagonal() {
        let m = CMatrix::new(2, 2, vec![c(3.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let eig = eig_hermitian(&m).unwrap();
        assert_eq!(eig.eigenvalues, vec![3.0, 1.0]);
        assert!((eig.eigenvectors[0].get(0) - c(1.0, 0.0)).norm() < 1e-14);
        assert!((eig.eigenvectors[1].get(1) - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn eig_pauli_x() {
        let m = CMatrix::new(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let eig = eig_hermitian(&m).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((eig.eigenvalues[1] + 1.0).abs() < 1e-12);
        // Phase fix makes both leading components positive real.
        assert!(eig.eigenvectors[0].get(0).re > 0.0);
        assert!(eig.eigenvectors[1].get(0).re > 0.0);
    }

    #[test]
    fn eig_reconstructs_random_hermitian() {
        let mut rng = CounterRng::new(99);
        for &n in &[2usize, 3, 6, 16, 32] {
            let m = random_hermitian(&mut rng, n);
            let eig = eig_hermitian(&m).unwrap();
            assert!(eig.reconstruct().max_abs_diff(&m) < 1e-10, "reconstruction at n={n}");
            for i in 0..n {
                for j in 0..n {
                    let g = eig.eigenvectors[i].inner(&eig.eigenvectors[j]).norm();
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((g - want).abs() < 1e-10, "orthonormality at n={n}");
                }
            }
            for w in eig.eigenvalues.windows(2) {
                assert!(w[0] >= w[1], "descending order");
            }
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = CMatrix::new(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(matches!(eig_hermitian(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn eig_deterministic() {
        let mut rng = CounterRng::new(7);
        let m = random_hermitian(&mut rng, 8);
        let a = eig_hermitian(&m).unwrap();
        let b = eig_hermitian(&m).unwrap();
        assert_eq!(a.eigenvalues, b.eigenvalues);
        for (x, y) in a.eigenvectors.iter().zip(&b.eigenvectors) {
            assert_eq!(x.entries(), y.entries());
        }
    }

    #[test]
    fn trace_norm_cases() {
        assert_eq!(trace_norm(&CMatrix::zeros(3, 3)).unwrap(), 0.0);
        let d = CMatrix::new(2, 2, vec![c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-3.0, 0.0)]).unwrap();
        assert!((trace_norm(&d).unwrap() - 5.0).abs() < 1e-14);
    }

    #[test]
    fn trace_norm_negation_and_unitary_invariance() {
        let mut rng = CounterRng::new(21);
        let m = random_hermitian(&mut rng, 5);
        let tn = trace_norm(&m).unwrap();
        assert!((trace_norm(&m.scale_re(-1.0)).unwrap() - tn).abs() < 1e-10);
        // Unitary built from the eigenvectors of another random Hermitian.
        let u_src = eig_hermitian(&random_hermitian(&mut rng, 5)).unwrap();
        let u = CMatrix::from_fn(5, 5, |i, j| u_src.eigenvectors[j].get(i));
        let conj = u.matmul(&m).matmul(&u.adjoint());
        assert!((trace_norm(&conj.symmetrized()).unwrap() - tn).abs() < 1e-9);
    }

    #[test]
    fn trace_norm_triangle_inequality() {
        let mut rng = CounterRng::new(5);
        for _ in 0..10 {
            let a = random_hermitian(&mut rng, 4);
            let b = random_hermitian(&mut rng, 4);
            let lhs = trace_norm(&a.add(&b)).unwrap();
            let rhs = trace_norm(&a).unwrap() + trace_norm(&b).unwrap();
            assert!(lhs <= rhs + 1e-9);
        }
    }

    #[test]
    fn psd_checks() {
        assert!(is_psd(&CMatrix::identity(3), 1e-9).unwrap());
        let d = CMatrix::new(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-0.5, 0.0)]).unwrap();
        assert!(!is_psd(&d, 1e-9).unwrap());
        let mut rng = CounterRng::new(11);
        let mut v = CVector::new((0..4).map(|_| c(rng.normal(), rng.normal())).collect()).unwrap();
        v = v.scale(c(1.0 / v.norm(), 0.0));
        assert!(is_psd(&CMatrix::outer(&v), 1e-9).unwrap());
    }
}
