//! Quantum state comparison: can two systems be certified to hold the same
//! state, or different ones?
//!
//! The crate provides two settings and the machinery to verify both:
//!
//! - **Unknown states** ([`universal`]): the optimal two-outcome measurement
//!   that sometimes certifies "different" and never errs, plus the full
//!   coefficient family it dominates. Certifying "same" is impossible, and
//!   [`verify`] demonstrates that numerically with a constrained optimizer.
//! - **Two known qubit states** ([`twostate`]): individual and collective
//!   strategies in both minimum-error and unambiguous flavors, with their
//!   closed-form probabilities, the explicit two-stage measurement, and the
//!   mixed-state discrimination bound.
//!
//! Supporting layers: dense complex linear algebra ([`numerics`]), states and
//! the bipartite symmetric/antisymmetric structure ([`hilbert`]), POVM
//! validation and sampling ([`povm`]), and seedable Monte Carlo plus
//! optimization drivers ([`verify`], [`rng`]).

pub mod error;
pub mod hilbert;
pub mod numerics;
pub mod povm;
pub mod rng;
pub mod twostate;
pub mod verify;
pub mod universal;

pub use error::{Error, Result};
pub use hilbert::{BipartiteSpace, DensityOperator, PureState};
pub use numerics::{C64, CMatrix, CVector};
pub use povm::{OutcomeDistribution, Povm, ValidationReport};
pub use rng::CounterRng;
pub use twostate::{CollectiveMeasurement, ComparisonScenario, Strategy, StrategyResult};
pub use universal::{EmuFamily, UniversalComparator};
pub use verify::{BoundRow, OptimizerConfig, RateEstimate, TrialRecord};
