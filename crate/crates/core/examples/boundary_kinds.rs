//! The prescribed-temperature and prescribed-flux problems on the same
//! material, including the heat flux delivered through the face.

use stefan3::model::presets;
use stefan3::{solve_dirichlet, solve_neumann, ProblemContext};

fn main() -> Result<(), stefan3::Error> {
    let ctx = ProblemContext::new(presets::material(), presets::temps())?;

    let dirichlet = solve_dirichlet(&ctx, 331.0)?;
    let face = dirichlet.surface_values(1.0);
    println!(
        "A = 331 K: coefficients ({:.12}, {:.12}), face flux {:.6} at t = 1 s",
        dirichlet.coef1(),
        dirichlet.coef2(),
        face.flux
    );

    let neumann = solve_neumann(&ctx, 300.0)?;
    println!(
        "q0 = 300: coefficients ({:.12}, {:.12}), face temperature {:.6} K",
        neumann.coef1(),
        neumann.coef2(),
        neumann.surface_temperature()
    );

    for a in [329.0, 331.0, 335.0, 350.0] {
        let sol = solve_dirichlet(&ctx, a)?;
        println!("A = {a:>5} K -> outer {:.6}, inner {:.6}", sol.coef1(), sol.coef2());
    }
    Ok(())
}
