//! Residual checks of a solution against the governing equations, and the
//! second-order convergence of the finite-difference heat check.

use stefan3::model::presets;
use stefan3::solve_parameters;
use stefan3::verify::{heat_residual, verify, VerifyOptions, DEFAULT_TIMES};

fn main() -> Result<(), stefan3::Error> {
    let sol = solve_parameters(&presets::dirichlet())?;
    let report = verify(&sol, &VerifyOptions::default())?;
    println!("heat      {:.2e}", report.heat.max());
    println!("interface {:.2e}", report.interface.max());
    println!("stefan    {:.2e}", report.stefan.max());
    println!("boundary  {:.2e}", report.boundary);
    println!("far field {:.2e}", report.far_field);
    println!("passed: {}", report.passed);

    let mut previous = None;
    for step in [4e-3, 2e-3, 1e-3, 5e-4] {
        let heat = heat_residual(&sol, &DEFAULT_TIMES, 50, step)?.max();
        match previous {
            Some(p) => println!("step {step:.0e}: {heat:.3e} (ratio {:.2})", p / heat),
            None => println!("step {step:.0e}: {heat:.3e}"),
        }
        previous = Some(heat);
    }

    let broken = verify(&sol.perturbed(1e-3, 0.0), &VerifyOptions::default())?;
    println!("outer coefficient off by 1e-3 fails: {:?}", broken.failures);
    Ok(())
}
