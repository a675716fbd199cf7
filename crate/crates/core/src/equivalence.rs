//! Mappings between the convective, temperature and flux problems.
//!
//! Two problems are equivalent when their data are related so that both admit
//! the same temperature field and fronts. Every mapping first solves the
//! source problem, because the related datum depends on its inner front
//! coefficient. The target condition is only accepted when the stated
//! hypothesis holds, so the target problem is again three-phase.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{codes, BoundaryKind, BoundarySpec};
use crate::solver::{h2_threshold, q2_threshold, solve, SolutionReport, ThreePhaseSolution};
use crate::specfun::erf;
use crate::transcendental::ProblemContext;
use crate::transcendental::{find_root_monotone, UpperBracket};

pub mod names {
    pub const TEMPERATURE_ABOVE_B: &str = "temperature_above_b";
    pub const H0_FROM_TEMPERATURE: &str = "h0_from_temperature_above_h2";
    pub const Q0_FROM_TEMPERATURE: &str = "q0_from_temperature_above_q2";
    pub const Q0_FROM_CONVECTION: &str = "q0_from_convection_above_q2";
    pub const H0_FROM_FLUX: &str = "h0_from_flux_above_h2";
    pub const MU2_BOUND: &str = "mu2_bound";
    pub const MU2_BOUND_LIMIT: &str = "mu2_bound_limit";
    pub const MU2_FLUX_BOUND: &str = "mu2_flux_bound";
    pub const A_ABOVE_B: &str = "a_above_b";
    pub const A_BELOW_A_INF: &str = "a_below_a_inf";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = ">")]
    Greater,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Less => "<",
            Relation::Greater => ">",
        })
    }
}

/// One named inequality `lhs relation rhs` with both sides evaluated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityCheck {
    pub name: &'static str,
    pub lhs: f64,
    pub relation: Relation,
    pub rhs: f64,
    pub holds: bool,
}

impl InequalityCheck {
    pub fn new(name: &'static str, lhs: f64, relation: Relation, rhs: f64) -> Self {
        let holds = match relation {
            Relation::Less => lhs < rhs,
            Relation::Greater => lhs > rhs,
        };
        InequalityCheck {
            name,
            lhs,
            relation,
            rhs,
            holds,
        }
    }

    fn into_result(self) -> Result<Self> {
        if self.holds {
            Ok(self)
        } else {
            Err(Error::Hypothesis {
                name: self.name.to_string(),
                lhs: self.lhs,
                rhs: self.rhs,
            })
        }
    }
}

/// Target condition produced from a source solution, with the hypotheses
/// that were checked on the way.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mapping {
    pub target: BoundarySpec,
    pub datum: f64,
    pub hypotheses: Vec<InequalityCheck>,
}

fn erf_inner_3(sol: &ThreePhaseSolution) -> f64 {
    erf(sol.coef2() * sol.ctx().r13())
}

fn sqrt_pi_alpha3(ctx: &ProblemContext) -> f64 {
    (PI * ctx.alpha().alpha3).sqrt()
}

fn require_a_inf(a_inf: Option<f64>) -> Result<f64> {
    a_inf.ok_or_else(|| Error::violation(codes::MISSING_A_INF, "a Robin target needs A_inf"))
}

fn check_a_inf(ctx: &ProblemContext, a_inf: f64, lower: f64) -> Result<()> {
    let b = ctx.temps().b;
    if !a_inf.is_finite() || a_inf <= b {
        return Err(Error::violation(
            codes::ROBIN_A_INF,
            format!("A_inf = {a_inf} must exceed B = {b}"),
        ));
    }
    if a_inf <= lower {
        return Err(Error::violation(
            codes::A_INF_NOT_ABOVE_A,
            format!("A_inf = {a_inf} must exceed the face temperature {lower}"),
        ));
    }
    Ok(())
}

fn temperature_target(sol: &ThreePhaseSolution, a: f64) -> Result<Mapping> {
    let check = InequalityCheck::new(names::TEMPERATURE_ABOVE_B, a, Relation::Greater, sol.ctx().temps().b);
    Ok(Mapping {
        target: BoundarySpec::Dirichlet { a },
        datum: a,
        hypotheses: vec![check.into_result()?],
    })
}

fn expect_kind(sol: &ThreePhaseSolution, kind: BoundaryKind) -> Result<()> {
    if sol.kind() == kind {
        Ok(())
    } else {
        Err(Error::violation(
            codes::BAD_ARGUMENT,
            format!("expected a {kind} solution, got {}", sol.kind()),
        ))
    }
}

/// Face temperature `A` of the temperature problem sharing a convective
/// solution.
pub fn map_robin_to_dirichlet(sol: &ThreePhaseSolution) -> Result<Mapping> {
    expect_kind(sol, BoundaryKind::Robin)?;
    let BoundarySpec::Robin { h0, a_inf } = *sol.boundary() else {
        unreachable!()
    };
    let ctx = sol.ctx();
    let b = ctx.temps().b;
    let e3 = erf_inner_3(sol);
    let k = ctx.props().k3 / (h0 * sqrt_pi_alpha3(ctx));
    let a = (k * b + a_inf * e3) / (k + e3);
    temperature_target(sol, a)
}

/// Convective coefficient `h0` for a chosen bulk temperature `a_inf > A`.
pub fn map_dirichlet_to_robin(sol: &ThreePhaseSolution, a_inf: f64) -> Result<Mapping> {
    expect_kind(sol, BoundaryKind::Dirichlet)?;
    let BoundarySpec::Dirichlet { a } = *sol.boundary() else {
        unreachable!()
    };
    let ctx = sol.ctx();
    check_a_inf(ctx, a_inf, a)?;
    let (p, t) = (ctx.props(), ctx.temps());
    let e3 = erf_inner_3(sol);
    let lhs = (a - t.b) / ((a_inf - a) * e3);
    let rhs = (t.b - t.c) / (a_inf - t.b) * (p.k2 * p.c2 / (p.k3 * p.c3)).sqrt() / ctx.erf_z0();
    let check = InequalityCheck::new(names::H0_FROM_TEMPERATURE, lhs, Relation::Greater, rhs).into_result()?;
    let h0 = p.k3 / sqrt_pi_alpha3(ctx) * lhs;
    Ok(Mapping {
        target: BoundarySpec::Robin { h0, a_inf },
        datum: h0,
        hypotheses: vec![check],
    })
}

/// Face temperature of the temperature problem sharing a flux solution.
pub fn map_neumann_to_dirichlet(sol: &ThreePhaseSolution) -> Result<Mapping> {
    expect_kind(sol, BoundaryKind::Neumann)?;
    let BoundarySpec::Neumann { q0 } = *sol.boundary() else {
        unreachable!()
    };
    let ctx = sol.ctx();
    let a = ctx.temps().b + q0 * sqrt_pi_alpha3(ctx) / ctx.props().k3 * erf_inner_3(sol);
    temperature_target(sol, a)
}

/// Flux datum `q0` of the flux problem sharing a temperature solution.
pub fn map_dirichlet_to_neumann(sol: &ThreePhaseSolution) -> Result<Mapping> {
    expect_kind(sol, BoundaryKind::Dirichlet)?;
    let BoundarySpec::Dirichlet { a } = *sol.boundary() else {
        unreachable!()
    };
    let ctx = sol.ctx();
    let (p, t, alpha) = (ctx.props(), ctx.temps(), ctx.alpha());
    let e3 = erf_inner_3(sol);
    let lhs = p.k3 * (a - t.b) / (alpha.alpha3.sqrt() * e3);
    let rhs = p.k2 * (t.b - t.c) / (alpha.alpha2.sqrt() * ctx.erf_z0());
    let check = InequalityCheck::new(names::Q0_FROM_TEMPERATURE, lhs, Relation::Greater, rhs).into_result()?;
    let q0 = lhs / PI.sqrt();
    Ok(Mapping {
        target: BoundarySpec::Neumann { q0 },
        datum: q0,
        hypotheses: vec![check],
    })
}

/// Flux datum of the flux problem sharing a convective solution.
pub fn map_robin_to_neumann(sol: &ThreePhaseSolution) -> Result<Mapping> {
    expect_kind(sol, BoundaryKind::Robin)?;
    let BoundarySpec::Robin { h0, a_inf } = *sol.boundary() else {
        unreachable!()
    };
    let ctx = sol.ctx();
    let b = ctx.temps().b;
    let q0 = (a_inf - b) * h0 / (1.0 + h0 * sqrt_pi_alpha3(ctx) / ctx.props().k3 * erf_inner_3(sol));
    let check =
        InequalityCheck::new(names::Q0_FROM_CONVECTION, q0, Relation::Greater, q2_threshold(ctx)).into_result()?;
    Ok(Mapping {
        target: BoundarySpec::Neumann { q0 },
        datum: q0,
        hypotheses: vec![check],
    })
}

/// Convective coefficient for a chosen bulk temperature, sharing a flux
/// solution.
///
/// The bulk temperature must exceed the face temperature of the flux
/// solution; otherwise no positive coefficient exists.
pub fn map_neumann_to_robin(sol: &ThreePhaseSolution, a_inf: f64) -> Result<Mapping> {
    expect_kind(sol, BoundaryKind::Neumann)?;
    let BoundarySpec::Neumann { q0 } = *sol.boundary() else {
        unreachable!()
    };
    let ctx = sol.ctx();
    check_a_inf(ctx, a_inf, ctx.temps().b)?;
    let b = ctx.temps().b;
    let denominator = (a_inf - b) - q0 * sqrt_pi_alpha3(ctx) / ctx.props().k3 * erf_inner_3(sol);
    if denominator.is_nan() || denominator <= 0.0 {
        return Err(Error::violation(
            codes::ROBIN_DENOMINATOR,
            format!("A_inf = {a_inf} does not exceed the face temperature of the flux solution"),
        ));
    }
    let h0 = q0 / denominator;
    let check =
        InequalityCheck::new(names::H0_FROM_FLUX, h0, Relation::Greater, h2_threshold(ctx, a_inf)).into_result()?;
    Ok(Mapping {
        target: BoundarySpec::Robin { h0, a_inf },
        datum: h0,
        hypotheses: vec![check],
    })
}

/// Dispatches to the mapping from the solution's own kind to `target`.
pub fn map_solution(sol: &ThreePhaseSolution, target: BoundaryKind, a_inf: Option<f64>) -> Result<Mapping> {
    use BoundaryKind::*;
    match (sol.kind(), target) {
        (Robin, Dirichlet) => map_robin_to_dirichlet(sol),
        (Robin, Neumann) => map_robin_to_neumann(sol),
        (Dirichlet, Robin) => map_dirichlet_to_robin(sol, require_a_inf(a_inf)?),
        (Dirichlet, Neumann) => map_dirichlet_to_neumann(sol),
        (Neumann, Dirichlet) => map_neumann_to_dirichlet(sol),
        (Neumann, Robin) => map_neumann_to_robin(sol, require_a_inf(a_inf)?),
        (source, _) => Err(Error::violation(
            codes::SAME_KIND,
            format!("source and target are both {source}"),
        )),
    }
}

pub fn robin_to_dirichlet(ctx: &ProblemContext, h0: f64, a_inf: f64) -> Result<f64> {
    Ok(map_robin_to_dirichlet(&solve(ctx, &BoundarySpec::Robin { h0, a_inf })?)?.datum)
}

pub fn dirichlet_to_robin(ctx: &ProblemContext, a: f64, a_inf: f64) -> Result<f64> {
    Ok(map_dirichlet_to_robin(&solve(ctx, &BoundarySpec::Dirichlet { a })?, a_inf)?.datum)
}

pub fn neumann_to_dirichlet(ctx: &ProblemContext, q0: f64) -> Result<f64> {
    Ok(map_neumann_to_dirichlet(&solve(ctx, &BoundarySpec::Neumann { q0 })?)?.datum)
}

pub fn dirichlet_to_neumann(ctx: &ProblemContext, a: f64) -> Result<f64> {
    Ok(map_dirichlet_to_neumann(&solve(ctx, &BoundarySpec::Dirichlet { a })?)?.datum)
}

pub fn robin_to_neumann(ctx: &ProblemContext, h0: f64, a_inf: f64) -> Result<f64> {
    Ok(map_robin_to_neumann(&solve(ctx, &BoundarySpec::Robin { h0, a_inf })?)?.datum)
}

pub fn neumann_to_robin(ctx: &ProblemContext, q0: f64, a_inf: f64) -> Result<f64> {
    Ok(map_neumann_to_robin(&solve(ctx, &BoundarySpec::Neumann { q0 })?, a_inf)?.datum)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoefficientDeltas {
    pub coef1: f64,
    pub coef2: f64,
}

impl CoefficientDeltas {
    pub fn max(&self) -> f64 {
        self.coef1.max(self.coef2)
    }
}

/// Source solution, mapped condition, checked hypotheses and the coefficient
/// differences after solving the target problem.
#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReport {
    pub source: BoundaryKind,
    pub target: BoundaryKind,
    pub mapped_datum: f64,
    pub target_boundary: BoundarySpec,
    pub hypotheses: Vec<InequalityCheck>,
    pub source_solution: SolutionReport,
    pub target_coefficients: [f64; 2],
    pub round_trip_deltas: CoefficientDeltas,
}

/// Maps `sol` to `target`, solves the target problem and compares fronts.
pub fn equivalence_report(
    sol: &ThreePhaseSolution,
    target: BoundaryKind,
    a_inf: Option<f64>,
) -> Result<EquivalenceReport> {
    let mapping = map_solution(sol, target, a_inf)?;
    let mapped = solve(sol.ctx(), &mapping.target)?;
    Ok(EquivalenceReport {
        source: sol.kind(),
        target,
        mapped_datum: mapping.datum,
        target_boundary: mapping.target,
        hypotheses: mapping.hypotheses,
        source_solution: sol.report(),
        target_coefficients: [mapped.coef1(), mapped.coef2()],
        round_trip_deltas: CoefficientDeltas {
            coef1: (mapped.coef1() - sol.coef1()).abs(),
            coef2: (mapped.coef2() - sol.coef2()).abs(),
        },
    })
}

/// Inequalities every three-phase solution satisfies, evaluated for `sol`
/// read as a temperature-problem solution with `A` its face temperature.
///
/// `a_inf` is the bulk temperature used by the bounds that involve one; a
/// convective solution supplies its own. The bulk-temperature bounds are
/// omitted when none is available or when it does not exceed `A`.
pub fn corollary_checks(sol: &ThreePhaseSolution, a_inf: Option<f64>) -> Vec<InequalityCheck> {
    let ctx = sol.ctx();
    let (p, t, alpha) = (ctx.props(), ctx.temps(), ctx.alpha());
    let a = sol.surface_temperature();
    let e3 = erf_inner_3(sol);
    let e0 = ctx.erf_z0();
    let limit = (p.k3 * p.c3 / (p.k2 * p.c2)).sqrt() * (a - t.b) / (t.b - t.c) * e0;
    let flux_form = p.k3 / p.k2 * (alpha.alpha2 / alpha.alpha3).sqrt() * (a - t.b) / (t.b - t.c) * e0;
    let mut checks = vec![
        InequalityCheck::new(names::MU2_BOUND_LIMIT, e3, Relation::Less, limit),
        InequalityCheck::new(names::MU2_FLUX_BOUND, e3, Relation::Less, flux_form),
        InequalityCheck::new(names::A_ABOVE_B, a, Relation::Greater, t.b),
    ];
    if let Some(a_inf) = sol.boundary().a_inf().or(a_inf) {
        checks.push(InequalityCheck::new(names::A_BELOW_A_INF, a, Relation::Less, a_inf));
        if a_inf > a {
            let bound = limit * (a_inf - t.b) / (a_inf - a);
            checks.insert(0, InequalityCheck::new(names::MU2_BOUND, e3, Relation::Less, bound));
        }
    }
    checks
}

/// `F(z)` from the sufficient condition for the convective-to-flux mapping.
pub fn f_star(ctx: &ProblemContext, a_inf: f64, z: f64) -> f64 {
    let (p, t, alpha) = (ctx.props(), ctx.temps(), ctx.alpha());
    let num = p.k3 * (a_inf - t.b) * (PI * alpha.alpha2).sqrt() * ctx.erf_z0() * z;
    num / (p.k2 * (t.b - t.c) * (p.k3 + z * (PI * alpha.alpha3).sqrt()))
}

/// Smallest bulk temperature for which `F` reaches 1.
pub fn a_inf_star(ctx: &ProblemContext) -> f64 {
    let (p, t, alpha) = (ctx.props(), ctx.temps(), ctx.alpha());
    t.b + (alpha.alpha3 / alpha.alpha2).sqrt() * p.k2 / p.k3 * (t.b - t.c) / ctx.erf_z0()
}

/// `h2*`, the point where `F` crosses 1, found by bisection.
///
/// `F` increases from 0 towards a finite limit, which exceeds 1 exactly when
/// `a_inf > a_inf_star(ctx)`. Returns `None` otherwise.
pub fn h2_star(ctx: &ProblemContext, a_inf: f64) -> Result<Option<f64>> {
    if a_inf <= a_inf_star(ctx) {
        return Ok(None);
    }
    let z = find_root_monotone(|z| f_star(ctx, a_inf, z) - 1.0, 0.0, UpperBracket::Doubling(1.0), 1e-14)?;
    Ok(Some(z))
}

/// Whether the sufficient condition for the convective-to-flux hypothesis
/// applies to `(h0, a_inf)`.
pub fn convective_flux_condition_applies(ctx: &ProblemContext, h0: f64, a_inf: f64) -> Result<bool> {
    Ok(match h2_star(ctx, a_inf)? {
        Some(star) => h0 > h2_threshold(ctx, a_inf).max(star),
        None => false,
    })
}
