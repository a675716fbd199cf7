//! Sampled temperature maps and their CSV export.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::model::codes;
use crate::solver::ThreePhaseSolution;

/// Temperature on a regular `x` grid at `nt` times, plus front positions.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldGrid {
    pub x_max: f64,
    pub t_max: f64,
    pub nx: usize,
    pub nt: usize,
    /// `nx` points from 0 to `x_max`.
    pub xs: Vec<f64>,
    /// `nt` times `t_max·i/nt`, `i = 1..=nt`; the field is undefined at 0.
    pub ts: Vec<f64>,
    /// Row `i` holds the temperatures at `ts[i]`.
    pub values: Vec<f64>,
    /// `(x2, x1)` at each time.
    pub fronts: Vec<(f64, f64)>,
}

impl FieldGrid {
    pub fn sample(sol: &ThreePhaseSolution, x_max: f64, t_max: f64, nx: usize, nt: usize) -> Result<Self> {
        let mut bad = Vec::new();
        if !(x_max > 0.0 && x_max.is_finite()) {
            bad.push(format!("xmax must be positive, got {x_max}"));
        }
        if !(t_max > 0.0 && t_max.is_finite()) {
            bad.push(format!("tmax must be positive, got {t_max}"));
        }
        if nx < 2 || nt < 2 {
            bad.push(format!("nx and nt must be at least 2, got {nx} and {nt}"));
        }
        if !bad.is_empty() {
            return Err(Error::Validation(
                bad.into_iter()
                    .map(|m| crate::model::Violation::new(codes::BAD_ARGUMENT, m))
                    .collect(),
            ));
        }
        let xs: Vec<f64> = (0..nx).map(|j| x_max * j as f64 / (nx - 1) as f64).collect();
        let ts: Vec<f64> = (1..=nt).map(|i| t_max * i as f64 / nt as f64).collect();
        let values = ts
            .iter()
            .flat_map(|&t| xs.iter().map(move |&x| sol.evaluate_temperature(x, t)))
            .collect();
        let fronts = ts.iter().map(|&t| sol.free_boundaries(t)).collect();
        Ok(FieldGrid {
            x_max,
            t_max,
            nx,
            nt,
            xs,
            ts,
            values,
            fronts,
        })
    }

    /// Temperatures at time index `i`.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.nx..(i + 1) * self.nx]
    }

    /// `x,t,temperature` rows, time-major.
    pub fn field_csv(&self) -> String {
        let mut out = String::from("x,t,temperature\n");
        for (i, &t) in self.ts.iter().enumerate() {
            for (&x, &v) in self.xs.iter().zip(self.row(i)) {
                writeln!(out, "{x},{t},{v}").unwrap();
            }
        }
        out
    }

    /// `t,x2,x1` rows.
    pub fn fronts_csv(&self) -> String {
        let mut out = String::from("t,x2,x1\n");
        for (&t, &(x2, x1)) in self.ts.iter().zip(&self.fronts) {
            writeln!(out, "{t},{x2},{x1}").unwrap();
        }
        out
    }

    /// Writes the field to `path` and the fronts next to it with the
    /// extension `.fronts.csv`. Returns both paths.
    pub fn write_csv(&self, path: &Path) -> Result<(PathBuf, PathBuf)> {
        let fronts = fronts_path(path);
        fs::write(path, self.field_csv())?;
        fs::write(&fronts, self.fronts_csv())?;
        Ok((path.to_path_buf(), fronts))
    }
}

/// `out.csv` becomes `out.fronts.csv`.
pub fn fronts_path(path: &Path) -> PathBuf {
    path.with_extension("fronts.csv")
}
