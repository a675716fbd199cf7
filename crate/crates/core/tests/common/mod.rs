//! Shared fixtures and independent reference implementations for the
//! integration tests.
//!
//! The references are deliberately naive: a positive-term series for `erf`,
//! a continued fraction for `erfc`, and plain bisection for every inverse.
//! They share no code with the library.

#![allow(dead_code)]

use std::f64::consts::PI;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stefan3::model::{presets, validate_material, BoundarySpec, MaterialProperties, PhaseTemps};
use stefan3::solver::{h2_threshold, q2_threshold};
use stefan3::ProblemContext;

/// Front coefficients of the three benchmark problems, computed with 40
/// significant digits by an independent arbitrary-precision script.
pub const XI: (f64, f64) = (0.173_068_602_664_643_51, 0.054_204_522_544_517_437);
pub const MU: (f64, f64) = (0.180_591_728_519_721_94, 0.066_085_476_150_505_61);
pub const LAMBDA: (f64, f64) = (0.154_308_268_000_221_38, 0.022_973_827_455_921_505);
pub const Z0: f64 = 0.141_487_038_567_169_13;
pub const H2: f64 = 41.622_456_515_227_9;
pub const Q2: f64 = 249.734_739_091_367_4;

pub fn benchmark_ctx() -> ProblemContext {
    ProblemContext::new(presets::material(), presets::temps()).unwrap()
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs())
}

/// `erf` from `2/√π · e^{−x²} · Σ 2ⁿ x^{2n+1} / (2n+1)!!`; all terms are
/// positive, so the sum carries no cancellation.
/// Beyond 6 the result is ±1 in double precision.
pub fn erf_series(x: f64) -> f64 {
    let ax = x.abs();
    if ax > 6.0 {
        // erfc(6) < 3e-17: below half an ulp of 1
        return 1f64.copysign(x);
    }
    let x2 = ax * ax;
    let mut term = ax;
    let mut sum = ax;
    let mut n = 0.0;
    while term > sum * 1e-17 {
        n += 1.0;
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
    }
    (2.0 / PI.sqrt() * (-x2).exp() * sum).copysign(x)
}

/// `erfc(x)` for `x ≥ 2` from the continued fraction
/// `e^{−x²}/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + …))))`, evaluated
/// bottom-up with a fixed depth.
pub fn erfc_fraction(x: f64) -> f64 {
    assert!(x >= 2.0);
    let mut tail = x;
    for k in (1..=120).rev() {
        tail = x + (k as f64 / 2.0) / tail;
    }
    (-x * x).exp() / PI.sqrt() / tail
}

pub fn erfc_ref(x: f64) -> f64 {
    if x >= 2.0 {
        erfc_fraction(x)
    } else {
        1.0 - erf_series(x)
    }
}

/// Bisection for an increasing function on `[lo, hi]`.
pub fn bisect_increasing(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    assert!(f(lo) <= 0.0 && f(hi) >= 0.0, "no bracket on [{lo}, {hi}]");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn erf_inv_ref(p: f64) -> f64 {
    bisect_increasing(|x| erf_series(x) - p, -6.0, 6.0)
}

/// Problem constants rebuilt from scratch for the reference solver.
pub struct Reference {
    pub p: MaterialProperties,
    pub t: PhaseTemps,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub ste1: f64,
    pub ste2: f64,
}

impl Reference {
    pub fn new(p: MaterialProperties, t: PhaseTemps) -> Self {
        Reference {
            a1: p.k1 / (p.rho * p.c1),
            a2: p.k2 / (p.rho * p.c2),
            a3: p.k3 / (p.rho * p.c3),
            ste1: p.c1 * (t.c - t.d) / p.l1,
            ste2: p.c2 * (t.b - t.c) / p.l2,
            p,
            t,
        }
    }

    pub fn phi(&self, z: f64) -> f64 {
        z + self.ste1 / PI.sqrt() * (-z * z).exp() / erfc_ref(z)
    }

    pub fn h(&self, z: f64) -> f64 {
        let p = &self.p;
        let m = self.ste2 / PI.sqrt() * p.l2 / p.l1 * (p.k2 * p.c1 / (p.k1 * p.c2)).sqrt();
        erf_series(z * (self.a1 / self.a2).sqrt()) - m * (-z * z * self.a1 / self.a2).exp() / self.phi(z)
    }

    pub fn q(&self, z: f64) -> f64 {
        self.p.l1 / self.p.l2 * self.phi(z) * (z * z * self.a1 / self.a2).exp()
    }

    pub fn z0(&self) -> f64 {
        bisect_increasing(|z| self.h(z), 0.0, 5.0)
    }

    pub fn inner(&self, z: f64) -> f64 {
        (self.a2 / self.a1).sqrt() * erf_inv_ref(self.h(z))
    }

    /// Right-hand side of the inner-front equation, written out per kind.
    pub fn rhs(&self, bc: &BoundarySpec, z: f64) -> f64 {
        let (p, t) = (&self.p, &self.t);
        let decay = (-z * z * self.a1 * (1.0 / self.a3 - 1.0 / self.a2)).exp();
        let drift = z * (z * z * self.a1 / self.a2).exp();
        let e3 = erf_series(z * (self.a1 / self.a3).sqrt());
        match *bc {
            BoundarySpec::Robin { h0, a_inf } => {
                let coef =
                    self.ste2 / (PI.sqrt() * p.c2) * (a_inf - t.b) / (t.b - t.c) * (p.k3 * p.c1 * p.c3 / p.k1).sqrt();
                coef * decay / (p.k3 / (h0 * (PI * self.a3).sqrt()) + e3) - drift
            }
            BoundarySpec::Dirichlet { a } => {
                (a - t.b) / p.l2 * (p.c1 * p.c3 * p.k3 / (PI * p.k1)).sqrt() * decay / e3 - drift
            }
            BoundarySpec::Neumann { q0 } => {
                (z * z * self.a1 / self.a2).exp()
                    * (-z + q0 / p.l2 * (p.c1 / (p.rho * p.k1)).sqrt() * (-z * z * self.a1 / self.a3).exp())
            }
        }
    }

    /// Outer and inner coefficients by bisection on `Q − G∘inner`.
    pub fn solve(&self, bc: &BoundarySpec) -> (f64, f64) {
        let z0 = self.z0();
        let f = |z: f64| self.q(z) - self.rhs(bc, self.inner(z));
        let lo = z0 * (1.0 + 1e-12) + 1e-15;
        let mut hi = z0 + 0.5;
        while f(hi) < 0.0 {
            hi = z0 + 2.0 * (hi - z0);
            assert!(hi < 5.0, "no bracket for the front equation");
        }
        let z = bisect_increasing(f, lo, hi);
        (z, self.inner(z))
    }
}

/// One random valid problem with three-phase data of every kind.
#[derive(Debug, Clone, Copy)]
pub struct RandomCase {
    pub props: MaterialProperties,
    pub temps: PhaseTemps,
    pub robin: BoundarySpec,
    pub dirichlet: BoundarySpec,
    pub neumann: BoundarySpec,
}

impl RandomCase {
    pub fn ctx(&self) -> ProblemContext {
        ProblemContext::new(self.props, self.temps).unwrap()
    }

    pub fn boundaries(&self) -> [BoundarySpec; 3] {
        [self.robin, self.dirichlet, self.neumann]
    }
}

/// `n` seeded random problems: `B − C`, `C − D` in [1, 10] K, conductivities
/// in [0.05, 1], heat capacities in [0.5, 5], density in [100, 2000], latent
/// heats in [50, 500]. Materials with `α₂ < α₃` are redrawn. Face data are
/// drawn strictly inside the three-phase range.
pub fn random_cases(seed: u64, n: usize) -> Vec<RandomCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let props = MaterialProperties {
            k1: rng.gen_range(0.05..=1.0),
            k2: rng.gen_range(0.05..=1.0),
            k3: rng.gen_range(0.05..=1.0),
            c1: rng.gen_range(0.5..=5.0),
            c2: rng.gen_range(0.5..=5.0),
            c3: rng.gen_range(0.5..=5.0),
            rho: rng.gen_range(100.0..=2000.0),
            l1: rng.gen_range(50.0..=500.0),
            l2: rng.gen_range(50.0..=500.0),
        };
        let d = 300.0;
        let c = d + rng.gen_range(1.0..=10.0);
        let b = c + rng.gen_range(1.0..=10.0);
        let temps = PhaseTemps { b, c, d };
        if !validate_material(&props, &temps).is_empty() {
            continue;
        }
        let ctx = ProblemContext::new(props, temps).unwrap();
        let a_inf = b + rng.gen_range(1.0..=20.0);
        let h0 = h2_threshold(&ctx, a_inf) * rng.gen_range(1.5..=10.0);
        let a = b + rng.gen_range(0.5..=20.0);
        let q0 = q2_threshold(&ctx) * rng.gen_range(1.2..=5.0);
        out.push(RandomCase {
            props,
            temps,
            robin: BoundarySpec::Robin { h0, a_inf },
            dirichlet: BoundarySpec::Dirichlet { a },
            neumann: BoundarySpec::Neumann { q0 },
        });
    }
    out
}

pub const RANDOM_SEED: u64 = 0x5eed_3f1a;
