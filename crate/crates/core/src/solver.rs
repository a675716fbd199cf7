//! Regime thresholds and the explicit three-phase solutions.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{validate, validate_boundary, BoundaryKind, BoundarySpec, ParameterSet};
use crate::specfun::{erf, erfc};
use crate::transcendental::ProblemContext;

/// Points within this relative distance past a front belong to the phase on
/// its left.
const FRONT_BAND: f64 = 1e-14;

/// Beyond this value of `x/(2√(α₁t))` the temperature is exactly `D`.
const FAR_FIELD_ETA: f64 = 38.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// Heat conduction in the initial phase only.
    SinglePhase,
    TwoPhase,
    ThreePhase,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::SinglePhase => "single_phase",
            Regime::TwoPhase => "two_phase",
            Regime::ThreePhase => "three_phase",
        })
    }
}

/// Critical boundary data separating the regimes.
///
/// `h1`, `h2` depend on the Robin bulk temperature and are absent without it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    pub z0: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h2: Option<f64>,
    pub q1: f64,
    pub q2: f64,
}

impl Thresholds {
    /// `(h1, h2)`, or an error when no bulk temperature was supplied.
    pub fn robin(&self) -> Result<(f64, f64)> {
        match (self.h1, self.h2) {
            (Some(h1), Some(h2)) => Ok((h1, h2)),
            _ => Err(Error::MissingBoundaryDatum("Robin thresholds need A_inf")),
        }
    }
}

/// `h₂` for bulk temperature `a_inf`: the smallest Robin coefficient giving
/// three phases.
pub fn h2_threshold(ctx: &ProblemContext, a_inf: f64) -> f64 {
    let p = ctx.props();
    let t = ctx.temps();
    let alpha3 = ctx.alpha().alpha3;
    (t.b - t.c) / (a_inf - t.b) * (p.k2 * p.k3 * p.c2 / (PI * p.c3 * alpha3)).sqrt() / ctx.erf_z0()
}

/// `h₁`: below it the face never reaches `C`.
pub fn h1_threshold(ctx: &ProblemContext, a_inf: f64) -> f64 {
    let t = ctx.temps();
    ctx.props().k1 / (PI * ctx.alpha().alpha1).sqrt() * (t.c - t.d) / (a_inf - t.c)
}

/// `q₂`: the smallest Neumann flux giving three phases.
pub fn q2_threshold(ctx: &ProblemContext) -> f64 {
    let t = ctx.temps();
    ctx.props().k2 * (t.b - t.c) / ((ctx.alpha().alpha2 * PI).sqrt() * ctx.erf_z0())
}

pub fn q1_threshold(ctx: &ProblemContext) -> f64 {
    let t = ctx.temps();
    ctx.props().k1 * (t.c - t.d) / (PI * ctx.alpha().alpha1).sqrt()
}

pub fn thresholds(ctx: &ProblemContext, a_inf: Option<f64>) -> Thresholds {
    Thresholds {
        z0: ctx.z0(),
        h1: a_inf.map(|a| h1_threshold(ctx, a)),
        h2: a_inf.map(|a| h2_threshold(ctx, a)),
        q1: q1_threshold(ctx),
        q2: q2_threshold(ctx),
    }
}

fn classify(datum: f64, low: f64, high: f64) -> Regime {
    if datum <= low {
        Regime::SinglePhase
    } else if datum <= high {
        Regime::TwoPhase
    } else {
        Regime::ThreePhase
    }
}

/// Regime selected by the face datum. Dirichlet data with `A > B` are always
/// three-phase.
pub fn classify_regime(ctx: &ProblemContext, bc: &BoundarySpec) -> Regime {
    match *bc {
        BoundarySpec::Robin { h0, a_inf } => classify(h0, h1_threshold(ctx, a_inf), h2_threshold(ctx, a_inf)),
        BoundarySpec::Neumann { q0 } => classify(q0, q1_threshold(ctx), q2_threshold(ctx)),
        BoundarySpec::Dirichlet { .. } => Regime::ThreePhase,
    }
}

/// Phase index: 3 next to the face, 1 the undisturbed far field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Phase {
    Outer = 1,
    Middle = 2,
    Inner = 3,
}

/// Constants of the closed-form temperature, fixed when the solution is built.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Field {
    /// `erf(coef1·√(α₁/α₂))`
    erf_outer_2: f64,
    /// `erf(coef2·√(α₁/α₂))`
    erf_inner_2: f64,
    /// `erfc(coef1)`
    erfc_outer_1: f64,
    /// Phase 3 is `surface − slope·erf(x/(2√(α₃t)))`.
    surface: f64,
    slope: f64,
}

/// An explicit three-phase solution for one face condition.
///
/// The fronts are `x = 2·coef·√(α₁t)` with `coef1` the outer (`C`) front and
/// `coef2` the inner (`B`) front.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreePhaseSolution {
    ctx: ProblemContext,
    boundary: BoundarySpec,
    coef1: f64,
    coef2: f64,
    field: Field,
}

/// Face temperature and `k₃·∂Φ/∂x` at `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceValues {
    /// Constant in time.
    pub temperature: f64,
    /// `c` in `k₃·∂Φ/∂x(0,t) = −c/√t`.
    pub flux_coefficient: f64,
    /// `k₃·∂Φ/∂x(0,t)`, W/m².
    pub flux: f64,
}

pub fn solve_robin(ctx: &ProblemContext, h0: f64, a_inf: f64) -> Result<ThreePhaseSolution> {
    solve(ctx, &BoundarySpec::Robin { h0, a_inf })
}

pub fn solve_dirichlet(ctx: &ProblemContext, a: f64) -> Result<ThreePhaseSolution> {
    solve(ctx, &BoundarySpec::Dirichlet { a })
}

pub fn solve_neumann(ctx: &ProblemContext, q0: f64) -> Result<ThreePhaseSolution> {
    solve(ctx, &BoundarySpec::Neumann { q0 })
}

/// Builds the three-phase solution for any face condition.
///
/// Fails with [`Error::Regime`] when the datum does not give three phases.
pub fn solve(ctx: &ProblemContext, bc: &BoundarySpec) -> Result<ThreePhaseSolution> {
    let violations = validate_boundary(ctx.temps(), bc);
    if !violations.is_empty() {
        return Err(Error::Validation(violations));
    }
    let regime = classify_regime(ctx, bc);
    if regime != Regime::ThreePhase {
        let (datum, threshold) = match *bc {
            BoundarySpec::Robin { h0, a_inf } => (h0, h2_threshold(ctx, a_inf)),
            BoundarySpec::Neumann { q0 } => (q0, q2_threshold(ctx)),
            BoundarySpec::Dirichlet { a } => (a, ctx.temps().b),
        };
        return Err(Error::Regime {
            kind: bc.kind(),
            regime,
            datum,
            threshold,
        });
    }
    let coef1 = ctx.solve_outer(bc)?;
    let coef2 = ctx.inner_coefficient(coef1)?;
    log::debug!("{} solution: coef1 = {coef1}, coef2 = {coef2}", bc.kind());
    Ok(ThreePhaseSolution::from_coefficients(*ctx, *bc, coef1, coef2))
}

/// Validates a full parameter set and solves it.
pub fn solve_parameters(set: &ParameterSet) -> Result<ThreePhaseSolution> {
    let violations = validate(&set.props, &set.temps, &set.boundary);
    if !violations.is_empty() {
        return Err(Error::Validation(violations));
    }
    let ctx = ProblemContext::new(set.props, set.temps)?;
    solve(&ctx, &set.boundary)
}

impl ThreePhaseSolution {
    /// Assembles the closed-form field from given front coefficients.
    ///
    /// No equation is checked here; use [`solve`] to obtain the actual
    /// solution.
    pub fn from_coefficients(ctx: ProblemContext, boundary: BoundarySpec, coef1: f64, coef2: f64) -> Self {
        let temps = *ctx.temps();
        let props = *ctx.props();
        let erf_inner_3 = erf(coef2 * ctx.r13());
        let sqrt_pi_a3 = (PI * ctx.alpha().alpha3).sqrt();
        let (slope, surface) = match boundary {
            BoundarySpec::Robin { h0, a_inf } => {
                let slope = (a_inf - temps.b) / (props.k3 / (h0 * sqrt_pi_a3) + erf_inner_3);
                (slope, temps.b + slope * erf_inner_3)
            }
            BoundarySpec::Dirichlet { a } => ((a - temps.b) / erf_inner_3, a),
            BoundarySpec::Neumann { q0 } => {
                let slope = q0 * sqrt_pi_a3 / props.k3;
                (slope, temps.b + slope * erf_inner_3)
            }
        };
        ThreePhaseSolution {
            ctx,
            boundary,
            coef1,
            coef2,
            field: Field {
                erf_outer_2: erf(coef1 * ctx.r12()),
                erf_inner_2: erf(coef2 * ctx.r12()),
                erfc_outer_1: erfc(coef1),
                surface,
                slope,
            },
        }
    }

    /// Copy with shifted front coefficients and the temperature field left
    /// untouched. Diagnostic hook for negative controls.
    #[doc(hidden)]
    pub fn perturbed(&self, d_coef1: f64, d_coef2: f64) -> Self {
        ThreePhaseSolution {
            coef1: self.coef1 + d_coef1,
            coef2: self.coef2 + d_coef2,
            ..*self
        }
    }

    pub fn kind(&self) -> BoundaryKind {
        self.boundary.kind()
    }

    pub fn boundary(&self) -> &BoundarySpec {
        &self.boundary
    }

    pub fn ctx(&self) -> &ProblemContext {
        &self.ctx
    }

    /// Outer front coefficient (`ξ₁`, `μ₁` or `λ₁`).
    pub fn coef1(&self) -> f64 {
        self.coef1
    }

    /// Inner front coefficient (`ξ₂`, `μ₂` or `λ₂`).
    pub fn coef2(&self) -> f64 {
        self.coef2
    }

    pub fn coefficients(&self) -> (f64, f64) {
        (self.coef1, self.coef2)
    }

    /// Positions `(x2, x1)` of the inner and outer fronts at time `t`.
    pub fn free_boundaries(&self, t: f64) -> (f64, f64) {
        let scale = 2.0 * (self.ctx.alpha().alpha1 * t).sqrt();
        (self.coef2 * scale, self.coef1 * scale)
    }

    /// Phase holding point `x` at time `t`.
    pub fn phase_at(&self, x: f64, t: f64) -> Phase {
        let (x2, x1) = self.free_boundaries(t);
        if x <= x2 * (1.0 + FRONT_BAND) {
            Phase::Inner
        } else if x <= x1 * (1.0 + FRONT_BAND) {
            Phase::Middle
        } else {
            Phase::Outer
        }
    }

    /// Temperature at `x ≥ 0`, `t > 0`.
    pub fn evaluate_temperature(&self, x: f64, t: f64) -> f64 {
        if x / (2.0 * (self.ctx.alpha().alpha1 * t).sqrt()) > FAR_FIELD_ETA {
            return self.ctx.temps().d;
        }
        self.phase_temperature(self.phase_at(x, t), x, t)
    }

    /// Closed form of one phase, evaluated at any `x` regardless of where
    /// the fronts are. Used to compare both sides of an interface.
    pub fn phase_temperature(&self, phase: Phase, x: f64, t: f64) -> f64 {
        let temps = self.ctx.temps();
        match phase {
            Phase::Inner => self.field.surface + self.phase_profile(phase, x, t),
            Phase::Middle => {
                let f = &self.field;
                let e = erf(x / (2.0 * (self.ctx.alpha().alpha2 * t).sqrt()));
                temps.c + (temps.b - temps.c) * (f.erf_outer_2 - e) / (f.erf_outer_2 - f.erf_inner_2)
            }
            Phase::Outer => temps.d + self.phase_profile(phase, x, t),
        }
    }

    /// The `x`, `t` dependent part of one phase's closed form: the
    /// temperature minus a constant.
    ///
    /// Finite differences of this quantity avoid the rounding carried by the
    /// absolute temperature.
    pub fn phase_profile(&self, phase: Phase, x: f64, t: f64) -> f64 {
        let alpha = self.ctx.alpha();
        let temps = self.ctx.temps();
        let f = &self.field;
        match phase {
            Phase::Inner => -f.slope * erf(x / (2.0 * (alpha.alpha3 * t).sqrt())),
            Phase::Middle => {
                let e = erf(x / (2.0 * (alpha.alpha2 * t).sqrt()));
                -(temps.b - temps.c) * e / (f.erf_outer_2 - f.erf_inner_2)
            }
            Phase::Outer => {
                let eta1 = x / (2.0 * (alpha.alpha1 * t).sqrt());
                (temps.c - temps.d) * erfc(eta1) / f.erfc_outer_1
            }
        }
    }

    /// Face temperature and conductive flux.
    pub fn surface_values(&self, t: f64) -> SurfaceValues {
        let sqrt_pi_a3 = (PI * self.ctx.alpha().alpha3).sqrt();
        let flux_coefficient = self.ctx.props().k3 * self.field.slope / sqrt_pi_a3;
        SurfaceValues {
            temperature: self.field.surface,
            flux_coefficient,
            flux: -flux_coefficient / t.sqrt(),
        }
    }

    pub fn surface_temperature(&self) -> f64 {
        self.field.surface
    }

    pub fn thresholds(&self) -> Thresholds {
        thresholds(&self.ctx, self.boundary.a_inf())
    }

    pub fn parameters(&self) -> ParameterSet {
        ParameterSet {
            props: *self.ctx.props(),
            temps: *self.ctx.temps(),
            boundary: self.boundary,
        }
    }

    pub fn report(&self) -> SolutionReport {
        let surface = self.surface_values(1.0);
        SolutionReport {
            kind: self.kind(),
            regime: Regime::ThreePhase,
            coef1: self.coef1,
            coef2: self.coef2,
            z0: self.ctx.z0(),
            thresholds: self.thresholds(),
            surface_temperature: surface.temperature,
            surface_flux_coefficient: surface.flux_coefficient,
            input: self.parameters(),
        }
    }
}

/// JSON view of a solution: coefficients, regime data and the input echo.
#[derive(Debug, Clone, Serialize)]
pub struct SolutionReport {
    pub kind: BoundaryKind,
    pub regime: Regime,
    pub coef1: f64,
    pub coef2: f64,
    pub z0: f64,
    pub thresholds: Thresholds,
    pub surface_temperature: f64,
    pub surface_flux_coefficient: f64,
    pub input: ParameterSet,
}
