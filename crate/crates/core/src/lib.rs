//! Rational-inattention analysis of binary guessing tasks.
//!
//! An agent guesses a binary state after optimally buying information at a
//! posterior-separable cost. This crate solves that attention problem in
//! closed form via its concavification structure, computes the induced
//! expected accuracy and effort, locates the acquisition thresholds, and
//! decides the robust complexity order ("more complex" = weakly less
//! accurate at every extrinsic reward). A grid-concavification oracle
//! provides an independent route against which every closed form is
//! checked, and the analysis module packages the constructive results:
//! the more-complex-but-less-effort construction, effort-reversal
//! witnesses, and seeded property harnesses for the order.

pub mod analysis;
pub mod error;
pub mod grid;
pub mod model;
pub mod oracle;
pub mod order;
pub mod solver;
pub mod thresholds;

pub use error::{Error, Result};
pub use model::{
    canonical_prior, signal_cost, Agent, BoundarySlope, CostSpec, CostValidation, Signal,
    SolveReport, TabulatedCost, Task, UtilityFamily,
};
pub use order::{ComparisonDetails, ComparisonResult, Verdict};
