//! Samples the temperature field on an (x, t) grid and writes it, with the
//! front positions, as CSV for plotting.

use std::path::PathBuf;

use stefan3::field::FieldGrid;
use stefan3::model::presets;
use stefan3::solve_parameters;

fn main() -> Result<(), stefan3::Error> {
    let out = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("stefan3-neumann.csv"));
    let sol = solve_parameters(&presets::neumann())?;
    let t_max = 3600.0;
    let x_max = 1.5 * sol.free_boundaries(t_max).1;
    let grid = FieldGrid::sample(&sol, x_max, t_max, 120, 60)?;
    let (field, fronts) = grid.write_csv(&out)?;
    println!("wrote {} and {}", field.display(), fronts.display());
    let last = grid.row(grid.nt - 1);
    println!(
        "at t = {t_max} s: face {:.4} K, far end {:.4} K",
        last[0],
        last[grid.nx - 1]
    );
    Ok(())
}
