//! Regime thresholds and the classification of face data.

use stefan3::model::{presets, BoundarySpec};
use stefan3::{classify_regime, solve, thresholds, Error, ProblemContext};

fn main() -> Result<(), Error> {
    let ctx = ProblemContext::new(presets::material(), presets::temps())?;
    let a_inf = 334.0;
    let th = thresholds(&ctx, Some(a_inf));
    let (h1, h2) = th.robin()?;
    println!("z0 = {:.12}", th.z0);
    println!("convective: h1 = {h1:.6}, h2 = {h2:.6} (A_inf = {a_inf} K)");
    println!("flux:       q1 = {:.6}, q2 = {:.6}", th.q1, th.q2);

    for h0 in [2.0, 20.0, 41.0, 42.0, 100.0] {
        let bc = BoundarySpec::Robin { h0, a_inf };
        println!("h0 = {h0:>6}: {}", classify_regime(&ctx, &bc));
    }
    for q0 in [30.0, 200.0, 300.0] {
        let bc = BoundarySpec::Neumann { q0 };
        match solve(&ctx, &bc) {
            Ok(sol) => println!("q0 = {q0:>6}: three phases, outer coefficient {:.6}", sol.coef1()),
            Err(err) => println!("q0 = {q0:>6}: {err} (exit code {})", err.exit_code()),
        }
    }
    Ok(())
}
