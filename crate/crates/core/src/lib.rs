//! Explicit similarity solutions for three-phase melting of a semi-infinite
//! slab heated at its face by a convective, a prescribed-temperature or a
//! prescribed-flux condition.
//!
//! ```
//! use stefan3::{model::presets, solve_parameters, verify::{verify, VerifyOptions}};
//!
//! let sol = solve_parameters(&presets::robin()).unwrap();
//! let (inner, outer) = sol.free_boundaries(60.0);
//! assert!(0.0 < inner && inner < outer);
//! assert!(verify(&sol, &VerifyOptions::default()).unwrap().passed);
//! ```

// `!(a < b)` routes NaN into the rejecting branch throughout the crate
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod equivalence;
pub mod error;
pub mod field;
pub mod model;
pub mod solver;
pub mod specfun;
pub mod transcendental;
pub mod verify;

pub use error::{Error, Result};
pub use model::{BoundaryKind, BoundarySpec, MaterialProperties, ParameterSet, PhaseTemps};
pub use solver::{
    classify_regime, solve, solve_dirichlet, solve_neumann, solve_parameters, solve_robin, thresholds, Regime,
    ThreePhaseSolution, Thresholds,
};
pub use transcendental::ProblemContext;
