//! Residual checks of a solution against the governing equations.
//!
//! The heat equations are checked with central finite differences inside
//! each phase. Interface temperatures, front energy balances and the face
//! condition use exact derivatives of the closed forms.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{codes, BoundarySpec};
use crate::solver::{Phase, ThreePhaseSolution};
use crate::specfun::{erf, erfc};

pub const DEFAULT_TIMES: [f64; 3] = [0.1, 1.0, 10.0];
pub const DEFAULT_POINTS_PER_PHASE: usize = 100;
pub const DEFAULT_REL_STEP: f64 = 1e-4;
/// Far-field probe distance in multiples of the outer front position.
pub const DEFAULT_X_FACTOR: f64 = 40.0;

/// Sample points keep this many stencil widths away from region edges.
const STENCIL_MARGIN: f64 = 3.0;

/// The outer phase is sampled up to this many diffusion lengths `2√(α₁t)`
/// past its front, where the temperature is within about `1e-5·(C − D)` of
/// `D`. Further out the time-difference truncation error grows like `η⁴`
/// while the far-field check already covers the decay.
const OUTER_SAMPLE_DEPTH: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub heat: f64,
    pub interface: f64,
    pub stefan: f64,
    pub boundary: f64,
    pub far_field: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            heat: 1e-6,
            interface: 1e-10,
            stefan: 1e-10,
            boundary: 1e-10,
            far_field: 1e-8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOptions {
    pub times: Vec<f64>,
    pub points_per_phase: usize,
    pub rel_step: f64,
    pub x_factor: f64,
    pub tolerances: Tolerances,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            times: DEFAULT_TIMES.to_vec(),
            points_per_phase: DEFAULT_POINTS_PER_PHASE,
            rel_step: DEFAULT_REL_STEP,
            x_factor: DEFAULT_X_FACTOR,
            tolerances: Tolerances::default(),
        }
    }
}

/// Largest relative heat-equation residual in each phase.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeatResiduals {
    pub phase3: f64,
    pub phase2: f64,
    pub phase1: f64,
    pub samples: usize,
}

impl HeatResiduals {
    pub fn max(&self) -> f64 {
        self.phase3.max(self.phase2).max(self.phase1)
    }
}

/// Interface temperature deviations relative to `B − D`, evaluated with the
/// closed form on each side of each front.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InterfaceResiduals {
    pub inner_from_phase3: f64,
    pub inner_from_phase2: f64,
    pub outer_from_phase2: f64,
    pub outer_from_phase1: f64,
}

impl InterfaceResiduals {
    pub fn max(&self) -> f64 {
        self.inner_from_phase3
            .max(self.inner_from_phase2)
            .max(self.outer_from_phase2)
            .max(self.outer_from_phase1)
    }
}

/// Relative energy-balance residuals at the inner and outer fronts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StefanResiduals {
    pub inner: f64,
    pub outer: f64,
}

impl StefanResiduals {
    pub fn max(&self) -> f64 {
        self.inner.max(self.outer)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub heat: HeatResiduals,
    pub interface: InterfaceResiduals,
    pub stefan: StefanResiduals,
    pub boundary: f64,
    pub far_field: f64,
    pub options: VerifyOptions,
    pub failures: Vec<&'static str>,
    pub passed: bool,
}

fn relative(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Smallest far-field distance, in outer-front positions, that is accepted.
pub const MIN_X_FACTOR: f64 = 10.0;

fn bad_argument(message: String) -> Error {
    Error::violation(codes::BAD_ARGUMENT, message)
}

fn check_sampling(times: &[f64], n_points: usize, rel_step: f64) -> Result<()> {
    if times.is_empty() || times.iter().any(|&t| !(t > 0.0 && t.is_finite())) {
        return Err(bad_argument(format!(
            "sample times must be positive and finite, got {times:?}"
        )));
    }
    if n_points == 0 {
        return Err(bad_argument("at least one sample point per phase is needed".into()));
    }
    if !(rel_step > 0.0 && rel_step < 0.5) {
        return Err(bad_argument(format!("rel_step must lie in (0, 0.5), got {rel_step}")));
    }
    Ok(())
}

fn geometric(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let ratio = hi / lo;
    (0..n).map(move |j| {
        if n == 1 {
            (lo * hi).sqrt()
        } else {
            lo * ratio.powf(j as f64 / (n - 1) as f64)
        }
    })
}

/// Central-difference residual of `Φ_t = α Φ_xx` in every phase.
///
/// Steps are `rel_step` times the phase's diffusion length `2√(αt)` in space
/// and `rel_step·t` in time. Points are spaced geometrically between the
/// region edges, kept [`STENCIL_MARGIN`] steps away from them; a stencil
/// point that still lands in another phase is an error.
pub fn heat_residual(sol: &ThreePhaseSolution, times: &[f64], n_points: usize, rel_step: f64) -> Result<HeatResiduals> {
    check_sampling(times, n_points, rel_step)?;
    let alpha = sol.ctx().alpha();
    let temps = sol.ctx().temps();
    let mut out = HeatResiduals {
        phase3: 0.0,
        phase2: 0.0,
        phase1: 0.0,
        samples: 0,
    };
    for &t in times {
        let (x2, x1) = sol.free_boundaries(t);
        let floor = f64::EPSILON * (temps.b - temps.d) / t;
        let l1 = 2.0 * (alpha.alpha1 * t).sqrt();
        let regions = [
            (Phase::Inner, alpha.alpha3, 0.0, x2),
            (Phase::Middle, alpha.alpha2, x2, x1),
            (Phase::Outer, alpha.alpha1, x1, x1 + OUTER_SAMPLE_DEPTH * l1),
        ];
        for (phase, a, lo, hi) in regions {
            let hx = rel_step * 2.0 * (a * t).sqrt();
            let ht = rel_step * t;
            let (first, last) = (lo + STENCIL_MARGIN * hx, hi - STENCIL_MARGIN * hx);
            if !(first < last) {
                return Err(Error::StencilCrossesFront {
                    phase: phase as u8,
                    x: first,
                    lo,
                    hi,
                });
            }
            let mut worst: f64 = 0.0;
            for x in geometric(first, last, n_points) {
                for (xs, ts) in [(x - hx, t), (x + hx, t), (x, t - ht), (x, t + ht)] {
                    if sol.phase_at(xs, ts) != phase || xs < 0.0 {
                        return Err(Error::StencilCrossesFront {
                            phase: phase as u8,
                            x: xs,
                            lo,
                            hi,
                        });
                    }
                }
                let f = |xs: f64, ts: f64| sol.phase_profile(phase, xs, ts);
                let dt = (f(x, t + ht) - f(x, t - ht)) / (2.0 * ht);
                let dxx = (f(x + hx, t) - 2.0 * f(x, t) + f(x - hx, t)) / (hx * hx);
                let scale = dt.abs().max((a * dxx).abs()).max(floor);
                worst = worst.max((dt - a * dxx).abs() / scale);
                out.samples += 1;
            }
            let slot = match phase {
                Phase::Inner => &mut out.phase3,
                Phase::Middle => &mut out.phase2,
                Phase::Outer => &mut out.phase1,
            };
            *slot = slot.max(worst);
        }
    }
    Ok(out)
}

/// Temperature mismatch at each front, from both adjacent closed forms.
pub fn interface_residual(sol: &ThreePhaseSolution, times: &[f64]) -> InterfaceResiduals {
    let temps = sol.ctx().temps();
    let range = temps.b - temps.d;
    let mut out = InterfaceResiduals {
        inner_from_phase3: 0.0,
        inner_from_phase2: 0.0,
        outer_from_phase2: 0.0,
        outer_from_phase1: 0.0,
    };
    for &t in times {
        let (x2, x1) = sol.free_boundaries(t);
        let dev = |phase, x, target: f64| (sol.phase_temperature(phase, x, t) - target).abs() / range;
        out.inner_from_phase3 = out.inner_from_phase3.max(dev(Phase::Inner, x2, temps.b));
        out.inner_from_phase2 = out.inner_from_phase2.max(dev(Phase::Middle, x2, temps.b));
        out.outer_from_phase2 = out.outer_from_phase2.max(dev(Phase::Middle, x1, temps.c));
        out.outer_from_phase1 = out.outer_from_phase1.max(dev(Phase::Outer, x1, temps.c));
    }
    out
}

/// Energy balance at both fronts, rebuilt from the front coefficients and
/// the face datum alone.
///
/// At the inner front `k₂Φ₂ₓ − k₃Φ₃ₓ = ρℓ₂ẏ₂`, at the outer front
/// `k₁Φ₁ₓ − k₂Φ₂ₓ = ρℓ₁ẏ₁`. Each profile is the closed form fixed by the
/// coefficients, so the residual measures how well they solve the front
/// equations.
pub fn stefan_residual(sol: &ThreePhaseSolution, times: &[f64]) -> StefanResiduals {
    let ctx = sol.ctx();
    let (p, t, alpha) = (ctx.props(), ctx.temps(), ctx.alpha());
    let (coef1, coef2) = sol.coefficients();
    let e3 = erf(coef2 * ctx.r13());
    let e2_inner = erf(coef2 * ctx.r12());
    let e2_outer = erf(coef1 * ctx.r12());
    let slope3 = match *sol.boundary() {
        BoundarySpec::Robin { h0, a_inf } => (a_inf - t.b) / (p.k3 / (h0 * (PI * alpha.alpha3).sqrt()) + e3),
        BoundarySpec::Dirichlet { a } => (a - t.b) / e3,
        BoundarySpec::Neumann { q0 } => q0 * (PI * alpha.alpha3).sqrt() / p.k3,
    };
    let slope2 = (t.b - t.c) / (e2_outer - e2_inner);
    let slope1 = (t.c - t.d) / erfc(coef1);

    // k·∂Φ/∂x of a profile `−slope·erf(x/(2√(αt)))`
    let flux = |k: f64, slope: f64, a: f64, x: f64, time: f64| {
        -k * slope * (-x * x / (4.0 * a * time)).exp() / (PI * a * time).sqrt()
    };
    let mut out = StefanResiduals { inner: 0.0, outer: 0.0 };
    for &time in times {
        let (x2, x1) = sol.free_boundaries(time);
        let speed = (alpha.alpha1 / time).sqrt();
        let lhs_inner = flux(p.k2, slope2, alpha.alpha2, x2, time) - flux(p.k3, slope3, alpha.alpha3, x2, time);
        let rhs_inner = p.rho * p.l2 * coef2 * speed;
        let lhs_outer = flux(p.k1, slope1, alpha.alpha1, x1, time) - flux(p.k2, slope2, alpha.alpha2, x1, time);
        let rhs_outer = p.rho * p.l1 * coef1 * speed;
        out.inner = out.inner.max(relative(lhs_inner, rhs_inner));
        out.outer = out.outer.max(relative(lhs_outer, rhs_outer));
    }
    out
}

/// Relative residual of the imposed face condition.
pub fn boundary_residual(sol: &ThreePhaseSolution, times: &[f64]) -> f64 {
    let b = sol.ctx().temps().b;
    times
        .iter()
        .map(|&time| {
            let face = sol.evaluate_temperature(0.0, time);
            let flux = sol.surface_values(time).flux;
            match *sol.boundary() {
                BoundarySpec::Robin { h0, a_inf } => relative(flux, h0 / time.sqrt() * (face - a_inf)),
                BoundarySpec::Dirichlet { a } => (face - a).abs() / (a - b),
                BoundarySpec::Neumann { q0 } => relative(flux, -q0 / time.sqrt()),
            }
        })
        .fold(0.0, f64::max)
}

/// `|Φ − D| / (C − D)` at `x_factor` times the outer front position.
pub fn far_field_residual(sol: &ThreePhaseSolution, times: &[f64], x_factor: f64) -> f64 {
    let temps = sol.ctx().temps();
    times
        .iter()
        .map(|&t| {
            let x = x_factor * sol.free_boundaries(t).1;
            (sol.evaluate_temperature(x, t) - temps.d).abs() / (temps.c - temps.d)
        })
        .fold(0.0, f64::max)
}

/// Runs every check and compares against the tolerances.
pub fn verify(sol: &ThreePhaseSolution, options: &VerifyOptions) -> Result<ResidualReport> {
    let times = &options.times;
    if !(options.x_factor >= MIN_X_FACTOR) {
        return Err(bad_argument(format!(
            "x_factor must be at least {MIN_X_FACTOR}, got {}",
            options.x_factor
        )));
    }
    let heat = heat_residual(sol, times, options.points_per_phase, options.rel_step)?;
    let interface = interface_residual(sol, times);
    let stefan = stefan_residual(sol, times);
    let boundary = boundary_residual(sol, times);
    let far_field = far_field_residual(sol, times, options.x_factor);
    let tol = &options.tolerances;
    let mut failures = Vec::new();
    // `!(a <= b)` so that a NaN residual counts as a failure
    for (name, value, limit) in [
        ("heat", heat.max(), tol.heat),
        ("interface", interface.max(), tol.interface),
        ("stefan", stefan.max(), tol.stefan),
        ("boundary", boundary, tol.boundary),
        ("far_field", far_field, tol.far_field),
    ] {
        if !(value <= limit) {
            failures.push(name);
        }
    }
    if !failures.is_empty() {
        log::info!("verification failed: {}", failures.join(", "));
    }
    Ok(ResidualReport {
        heat,
        interface,
        stefan,
        boundary,
        far_field,
        options: options.clone(),
        passed: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::presets;
    use crate::solver::{solve_dirichlet, solve_neumann, solve_robin};
    use crate::transcendental::ProblemContext;

    fn ctx() -> ProblemContext {
        ProblemContext::new(presets::material(), presets::temps()).unwrap()
    }

    fn benchmarks() -> Vec<ThreePhaseSolution> {
        let ctx = ctx();
        vec![
            solve_robin(&ctx, 100.0, 334.0).unwrap(),
            solve_dirichlet(&ctx, 331.0).unwrap(),
            solve_neumann(&ctx, 300.0).unwrap(),
        ]
    }

    #[test]
    fn benchmarks_pass_with_defaults() {
        for sol in benchmarks() {
            let report = verify(&sol, &VerifyOptions::default()).unwrap();
            assert!(report.passed, "{:?}: {report:#?}", sol.kind());
            assert_eq!(report.heat.samples, 900);
        }
    }

    #[test]
    fn geometric_spacing_hits_both_ends() {
        let xs: Vec<f64> = geometric(1.0, 8.0, 4).collect();
        assert_eq!(xs.len(), 4);
        assert!((xs[1] - 2.0).abs() < 1e-15 && (xs[3] - 8.0).abs() < 1e-14);
    }

    #[test]
    fn oversized_step_is_reported() {
        let sol = solve_neumann(&ctx(), 300.0).unwrap();
        let err = heat_residual(&sol, &[1.0], 10, 0.05).unwrap_err();
        assert!(matches!(err, Error::StencilCrossesFront { phase: 3, .. }));
    }

    #[test]
    fn residuals_do_not_depend_on_time() {
        for sol in benchmarks() {
            let a = stefan_residual(&sol.perturbed(1e-3, 0.0), &[0.1]);
            let b = stefan_residual(&sol.perturbed(1e-3, 0.0), &[100.0]);
            assert!((a.outer - b.outer).abs() < 1e-12 * a.outer);
        }
    }

    #[test]
    fn perturbation_is_detected() {
        for sol in benchmarks() {
            for (d1, d2) in [(1e-3, 0.0), (0.0, 1e-3)] {
                let report = verify(&sol.perturbed(d1, d2), &VerifyOptions::default()).unwrap();
                assert!(!report.passed);
                assert!(report.failures.contains(&"stefan"));
                assert!(report.failures.contains(&"interface"));
            }
        }
    }

    #[test]
    fn far_field_shrinks_with_distance() {
        let sol = solve_neumann(&ctx(), 300.0).unwrap();
        let near = far_field_residual(&sol, &[1.0], 10.0);
        let mid = far_field_residual(&sol, &[1.0], 20.0);
        assert!(near > mid && mid > 0.0);
    }

    #[test]
    fn sampling_arguments_are_checked() {
        let sol = &benchmarks()[0];
        for step in [0.0, -1e-4, 0.5, f64::NAN] {
            let err = heat_residual(sol, &DEFAULT_TIMES, 10, step).unwrap_err();
            assert_eq!(err.exit_code(), 1, "{step}");
        }
        assert!(heat_residual(sol, &[], 10, 1e-4).is_err());
        assert!(heat_residual(sol, &[1.0, -1.0], 10, 1e-4).is_err());
        assert!(heat_residual(sol, &DEFAULT_TIMES, 0, 1e-4).is_err());
        let options = VerifyOptions {
            x_factor: 5.0,
            ..VerifyOptions::default()
        };
        assert!(verify(sol, &options).is_err());
    }
}
