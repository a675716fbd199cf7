//! Mapping one face condition onto the others so that all three problems
//! share one temperature field.

use stefan3::equivalence::{corollary_checks, equivalence_report};
use stefan3::model::{presets, BoundaryKind};
use stefan3::solve_parameters;

fn main() -> Result<(), stefan3::Error> {
    let robin = solve_parameters(&presets::robin())?;
    for target in [BoundaryKind::Dirichlet, BoundaryKind::Neumann] {
        let report = equivalence_report(&robin, target, None)?;
        println!(
            "robin -> {target}: datum {:.9}, fronts differ by {:.1e}",
            report.mapped_datum,
            report.round_trip_deltas.max()
        );
        for check in &report.hypotheses {
            println!(
                "  {} : {:.6} {} {:.6}",
                check.name, check.lhs, check.relation, check.rhs
            );
        }
    }

    let neumann = solve_parameters(&presets::neumann())?;
    let a_inf = neumann.surface_temperature() + 5.0;
    let report = equivalence_report(&neumann, BoundaryKind::Robin, Some(a_inf))?;
    println!(
        "neumann -> robin with A_inf = {a_inf:.3}: h0 = {:.6}",
        report.mapped_datum
    );

    println!("bounds satisfied by the convective solution:");
    for check in corollary_checks(&robin, None) {
        println!(
            "  {:<16} {:.6} {} {:.6} ({})",
            check.name, check.lhs, check.relation, check.rhs, check.holds
        );
    }
    Ok(())
}
