use thiserror::Error;

use crate::model::{BoundaryKind, Violation};
use crate::solver::Regime;
use crate::transcendental::RootError;

/// Errors raised by the solver, the mappings and the CLI front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid problem data: {}", format_violations(.0))]
    Validation(Vec<Violation>),

    #[error("{kind} datum {datum} gives regime {regime} (three-phase requires > {threshold})")]
    Regime {
        kind: BoundaryKind,
        regime: Regime,
        datum: f64,
        threshold: f64,
    },

    #[error(transparent)]
    Root(#[from] RootError),

    #[error("hypothesis `{name}` fails (lhs = {lhs}, rhs = {rhs})")]
    Hypothesis { name: String, lhs: f64, rhs: f64 },

    #[error("missing boundary datum: {0}")]
    MissingBoundaryDatum(&'static str),

    #[error("stencil at x = {x} leaves phase {phase} (region [{lo}, {hi}])")]
    StencilCrossesFront { phase: u8, x: f64, lo: f64, hi: f64 },

    #[error("malformed configuration: {0}")]
    Config(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for this error, as used by the `stefan3` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_)
            | Error::Validation(_)
            | Error::MissingBoundaryDatum(_)
            | Error::StencilCrossesFront { .. }
            | Error::Config(_) => 1,
            Error::Regime { .. } => 2,
            Error::Root(_) => 3,
            Error::Hypothesis { .. } => 4,
            Error::Io(_) => 5,
        }
    }

    pub(crate) fn violation(code: &'static str, message: impl Into<String>) -> Self {
        Error::Validation(vec![Violation::new(code, message)])
    }
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| format!("{}: {}", v.code, v.message))
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
