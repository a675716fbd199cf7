//! Melting driven by convective heating at the face.

use stefan3::model::presets;
use stefan3::{solve_robin, ProblemContext};

fn main() -> Result<(), stefan3::Error> {
    let ctx = ProblemContext::new(presets::material(), presets::temps())?;
    let sol = solve_robin(&ctx, 100.0, 334.0)?;
    println!("z0 = {:.12}", ctx.z0());
    println!(
        "front coefficients: outer {:.12}, inner {:.12}",
        sol.coef1(),
        sol.coef2()
    );
    println!("face temperature {:.6} K", sol.surface_temperature());

    println!("{:>8} {:>14} {:>14}", "t [s]", "x2 [m]", "x1 [m]");
    for t in [1.0, 10.0, 60.0, 600.0, 3600.0] {
        let (x2, x1) = sol.free_boundaries(t);
        println!("{t:>8} {x2:>14.6e} {x1:>14.6e}");
    }

    let t = 600.0;
    let (_, x1) = sol.free_boundaries(t);
    println!("temperature profile at t = {t} s");
    for i in 0..=8 {
        let x = 1.5 * x1 * i as f64 / 8.0;
        println!(
            "  x = {x:.5e} m  T = {:.6} K  ({:?})",
            sol.evaluate_temperature(x, t),
            sol.phase_at(x, t)
        );
    }
    Ok(())
}
