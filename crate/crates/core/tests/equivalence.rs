mod common;

use common::{benchmark_ctx, random_cases, rel_close, RANDOM_SEED};
use stefan3::equivalence::{
    a_inf_star, convective_flux_condition_applies, corollary_checks, dirichlet_to_neumann, dirichlet_to_robin,
    equivalence_report, h2_star, map_neumann_to_robin, map_robin_to_neumann, map_solution, names, robin_to_dirichlet,
    Mapping,
};
use stefan3::model::{presets, BoundaryKind};
use stefan3::solver::{h2_threshold, q2_threshold, solve_dirichlet, solve_neumann, solve_robin};
use stefan3::{solve, ProblemContext, ThreePhaseSolution};

/// Bulk temperature for targets that need one: a few kelvin above the face.
fn target_a_inf(sol: &ThreePhaseSolution) -> f64 {
    sol.surface_temperature() + 5.0
}

fn round_trip(sol: &ThreePhaseSolution, target: BoundaryKind) -> (Mapping, f64) {
    let mapping = map_solution(sol, target, Some(target_a_inf(sol))).unwrap();
    let mapped = solve(sol.ctx(), &mapping.target).unwrap();
    let delta = (mapped.coef1() - sol.coef1())
        .abs()
        .max((mapped.coef2() - sol.coef2()).abs());
    (mapping, delta)
}

fn targets(kind: BoundaryKind) -> [BoundaryKind; 2] {
    match kind {
        BoundaryKind::Robin => [BoundaryKind::Dirichlet, BoundaryKind::Neumann],
        BoundaryKind::Dirichlet => [BoundaryKind::Robin, BoundaryKind::Neumann],
        BoundaryKind::Neumann => [BoundaryKind::Dirichlet, BoundaryKind::Robin],
    }
}

#[test]
fn six_round_trips_on_benchmarks() {
    for set in [presets::robin(), presets::dirichlet(), presets::neumann()] {
        let sol = stefan3::solve_parameters(&set).unwrap();
        for target in targets(sol.kind()) {
            let (mapping, delta) = round_trip(&sol, target);
            assert!(delta <= 1e-9, "{} -> {target}: {delta:e}", sol.kind());
            assert!(mapping.hypotheses.iter().all(|h| h.holds));
        }
    }
}

#[test]
fn six_round_trips_on_random_sets() {
    for case in random_cases(RANDOM_SEED, 50) {
        let ctx = case.ctx();
        for bc in case.boundaries() {
            let sol = solve(&ctx, &bc).unwrap();
            for target in targets(sol.kind()) {
                let (_, delta) = round_trip(&sol, target);
                assert!(delta <= 1e-9, "{bc:?} -> {target}: {delta:e}");
            }
        }
    }
}

#[test]
fn mapped_problems_share_the_face_temperature() {
    let sol = solve_parameters_robin();
    let report = equivalence_report(&sol, BoundaryKind::Dirichlet, None).unwrap();
    assert!(rel_close(report.mapped_datum, sol.surface_temperature(), 1e-14));
    let mapped = solve(sol.ctx(), &report.target_boundary).unwrap();
    for t in [0.5, 5.0] {
        for x in [0.0, 1e-4, 1e-3, 5e-3] {
            let (a, b) = (sol.evaluate_temperature(x, t), mapped.evaluate_temperature(x, t));
            assert!((a - b).abs() <= 1e-9, "{x}, {t}: {a} vs {b}");
        }
    }
}

fn solve_parameters_robin() -> ThreePhaseSolution {
    stefan3::solve_parameters(&presets::robin()).unwrap()
}

fn strictly_increasing(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[1] > w[0])
}

#[test]
fn face_temperature_increases_with_convective_coefficient() {
    let ctx = benchmark_ctx();
    let h2 = h2_threshold(&ctx, 334.0);
    let values: Vec<f64> = (1..=20)
        .map(|i| h2 * (1.0 + 9.0 * i as f64 / 20.0))
        .map(|h0| robin_to_dirichlet(&ctx, h0, 334.0).unwrap())
        .collect();
    assert!(strictly_increasing(&values));
    assert!(values.iter().all(|&a| a > 328.0 && a < 334.0));
}

fn face_grid(b: f64, a_inf: f64) -> Vec<f64> {
    (1..=20).map(|i| b + (a_inf - b) * i as f64 / 21.0).collect()
}

#[test]
fn flux_and_coefficient_increase_with_face_temperature() {
    let ctx = benchmark_ctx();
    let grid = face_grid(328.0, 334.0);
    let q0: Vec<f64> = grid.iter().map(|&a| dirichlet_to_neumann(&ctx, a).unwrap()).collect();
    let h0: Vec<f64> = grid
        .iter()
        .map(|&a| dirichlet_to_robin(&ctx, a, 334.0).unwrap())
        .collect();
    assert!(strictly_increasing(&q0));
    assert!(strictly_increasing(&h0));
    assert!(q0[0] > q2_threshold(&ctx));
    assert!(h0[0] > h2_threshold(&ctx, 334.0));
}

#[test]
fn coefficient_blows_up_as_face_approaches_bulk() {
    let ctx = benchmark_ctx();
    let (b, a_inf) = (328.0, 334.0);
    let mid = dirichlet_to_robin(&ctx, 0.5 * (b + a_inf), a_inf).unwrap();
    let near = dirichlet_to_robin(&ctx, a_inf - 1e-3 * (a_inf - b), a_inf).unwrap();
    assert!(near > 100.0 * mid, "{near} vs {mid}");
    let nearer = dirichlet_to_robin(&ctx, a_inf - 1e-3, a_inf).unwrap();
    assert!(nearer > 1e3 * mid, "{nearer} vs {mid}");
}

#[test]
fn mapping_composition_is_consistent() {
    let ctx = benchmark_ctx();
    let robin = solve_robin(&ctx, 100.0, 334.0).unwrap();
    let direct = map_robin_to_neumann(&robin).unwrap().datum;
    let a = robin_to_dirichlet(&ctx, 100.0, 334.0).unwrap();
    let via_temperature = dirichlet_to_neumann(&ctx, a).unwrap();
    assert!(rel_close(direct, via_temperature, 1e-10));
}

#[test]
fn temperature_sufficient_condition_implies_flux_hypothesis() {
    let ctx = benchmark_ctx();
    let p = presets::material();
    let alpha3 = p.k3 / (p.rho * p.c3);
    let a_min = q2_threshold(&ctx) * (std::f64::consts::PI * alpha3).sqrt() / p.k3 + 328.0;
    for i in 0..10 {
        let a = a_min + 0.5 * i as f64 + 1e-6;
        let sol = solve_dirichlet(&ctx, a).unwrap();
        let mapping = map_solution(&sol, BoundaryKind::Neumann, None).unwrap();
        assert!(mapping.hypotheses[0].holds);
    }
}

#[test]
fn convective_sufficient_condition_implies_flux_hypothesis() {
    let ctx = benchmark_ctx();
    assert!(h2_star(&ctx, 334.0).unwrap().is_none());
    for a_inf in [360.0, 400.0, 1000.0] {
        assert!(a_inf > a_inf_star(&ctx));
        let h2 = h2_threshold(&ctx, a_inf);
        let star = h2_star(&ctx, a_inf).unwrap().unwrap();
        for factor in [1.01, 1.5, 3.0, 10.0] {
            let h0 = factor * h2.max(star);
            assert!(convective_flux_condition_applies(&ctx, h0, a_inf).unwrap());
            let sol = solve_robin(&ctx, h0, a_inf).unwrap();
            assert!(map_robin_to_neumann(&sol).unwrap().hypotheses[0].holds);
        }
    }
}

#[test]
fn flux_sufficient_condition_implies_convective_hypothesis() {
    let ctx = benchmark_ctx();
    for q0 in [260.0, 300.0, 500.0] {
        let sol = solve_neumann(&ctx, q0).unwrap();
        let face = sol.surface_temperature();
        for a_inf in [face + 0.5, face + 5.0, face + 50.0] {
            if q0 <= h2_threshold(&ctx, a_inf) {
                continue;
            }
            let mapping = map_neumann_to_robin(&sol, a_inf).unwrap();
            assert!(mapping.hypotheses[0].holds);
        }
    }
}

fn assert_corollaries(sol: &ThreePhaseSolution, a_inf: f64) {
    let checks = corollary_checks(sol, Some(a_inf));
    assert_eq!(checks.len(), 5, "{checks:?}");
    for check in &checks {
        assert!(check.holds, "{} fails: {check:?}", check.name);
    }
    let names_seen: Vec<_> = checks.iter().map(|c| c.name).collect();
    for name in [
        names::MU2_BOUND,
        names::MU2_BOUND_LIMIT,
        names::MU2_FLUX_BOUND,
        names::A_ABOVE_B,
        names::A_BELOW_A_INF,
    ] {
        assert!(names_seen.contains(&name));
    }
}

#[test]
fn corollaries_on_benchmarks() {
    let ctx = benchmark_ctx();
    assert_corollaries(&solve_robin(&ctx, 100.0, 334.0).unwrap(), 334.0);
    assert_corollaries(&solve_dirichlet(&ctx, 331.0).unwrap(), 334.0);
    let neumann = solve_neumann(&ctx, 300.0).unwrap();
    assert_corollaries(&neumann, target_a_inf(&neumann));
}

#[test]
fn corollaries_on_random_sets() {
    for case in random_cases(RANDOM_SEED, 50) {
        let ctx: ProblemContext = case.ctx();
        for bc in case.boundaries() {
            let sol = solve(&ctx, &bc).unwrap();
            let a_inf = bc.a_inf().unwrap_or_else(|| target_a_inf(&sol));
            assert_corollaries(&sol, a_inf);
        }
    }
}
