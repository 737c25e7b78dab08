//! Indirect-method trajectory optimization for quadrotor landing.
//!
//! The crate solves minimum-time/minimum-effort landing problems by turning
//! the first-order optimality conditions into a two-point boundary value
//! problem and solving it with piecewise-cubic collocation. Three warm-start
//! strategies (zero initialization, fixed-terminal-time warm start, and
//! space-marching continuation) plus learned terminal-time predictors make
//! the solve reliable from cold starts.
//!
//! Modules:
//! - [`quad`]: rigid-body model, Hamiltonian, optimal control, costate equations
//! - [`bvp`]: general collocation TPBVP solver with adaptive mesh refinement
//! - [`landing`]: landing problem assembly, warm-start algorithms, diagnostics
//! - [`predictor`]: dataset generation and terminal-time models (constant/linear/MLP)
//! - [`bench`]: sampling, benchmark harness, and result aggregation

pub mod quad;
