//! Error function, its complement, the scaled complement and the inverses.

use stefan3::specfun::{erf, erf_inv, erfc, erfc_inv, erfcx};

fn main() -> Result<(), stefan3::Error> {
    println!("{:>6} {:>22} {:>22} {:>22}", "x", "erf", "erfc", "erfcx");
    for x in [0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 26.0] {
        println!("{x:>6} {:>22.15e} {:>22.15e} {:>22.15e}", erf(x), erfc(x), erfcx(x));
    }
    for p in [0.1, 0.5, 0.9, 0.999_999] {
        let x = erf_inv(p)?;
        println!("erf_inv({p}) = {x:.15}  (erf back: {:.15})", erf(x));
    }
    // deep tails are reachable through the complement
    let q = 1e-200;
    let x = erfc_inv(q)?;
    println!("erfc_inv({q:e}) = {x:.12}  (erfc back: {:e})", erfc(x));
    Ok(())
}
