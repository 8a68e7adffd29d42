//! Benchmark helpers shared by the criterion targets.

use statecmp::numerics::{C64, CMatrix};
use statecmp::rng::CounterRng;

/// Deterministic random Hermitian matrix of the given size.
pub fn random_hermitian(seed: u64, n: usize) -> CMatrix {
    let mut rng = CounterRng::new(seed);
    CMatrix::from_fn(n, n, |_, _| C64::new(rng.normal(), rng.normal())).symmetrized()
}
