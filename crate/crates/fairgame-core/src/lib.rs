//! Analytic engine for classification problems with behavioral feedback.
//!
//! The engine models a population of agents who choose a behavior, emit a
//! noisy signal, and receive a decision from a (possibly group-conditioned)
//! stochastic algorithm. On top of that chain it computes:
//!
//! * exact confusion statistics and Bayesian posteriors ([`stats`]),
//! * individual best responses and equilibrium prevalences when behavior is
//!   endogenous ([`equilibrium`]),
//! * statistical fairness predicates — error rate balance, accuracy balance,
//!   predictive parity ([`statistical`]),
//! * welfare-based fairness predicates — equal opportunity, envy freeness,
//!   prejudice freeness, equal consequences ([`welfare`]),
//! * the downstream reviewer model and its fairness notions ([`reviewer`]),
//! * feasibility scans over algorithm space ([`search`]), and
//! * self-contained verification cases for the equivalence and impossibility
//!   phenomena the model exhibits ([`verify`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`); all floating point
//! goes through `libm` so results are identical across targets. Everything is
//! an immutable value after construction and all computations are pure, so
//! types can be shared freely across threads.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod equilibrium;
pub mod math;
pub mod model;
pub mod report;
pub mod reviewer;
pub mod rng;
pub mod search;
pub mod statistical;
pub mod stats;
pub mod verify;
pub mod welfare;

/// Structural tolerance for probability mass checks (row sums, distribution
/// totals). Anything further from 1 than this is a modeling error, not noise.
pub const STRUCT_TOL: f64 = 1e-12;

/// Default tolerance for analytic equality checks in predicate reports.
pub const ANALYTIC_TOL: f64 = 1e-9;

/// Decisions (or behaviors) with probability below this are treated as
/// unreachable: conditionals on them are undefined and comparisons skip them.
pub const REACH_EPS: f64 = 1e-12;

/// Default indifference tolerance for best-response argmax sets.
pub const TIE_EPS: f64 = 1e-9;
