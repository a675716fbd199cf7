//! Error function family: `erf`, `erfc`, the scaled `erfcx` and `erf_inv`.
//!
//! `erf` and `erfc` follow the rational approximations of FreeBSD's
//! `msun/src/s_erf.c`:
//!
//! ```text
//! Copyright (C) 1993 by Sun Microsystems, Inc. All rights reserved.
//!
//! Developed at SunPro, a Sun Microsystems, Inc. business.
//! Permission to use, copy, modify, and distribute this
//! software is freely granted, provided that this notice
//! is preserved.
//! ```
//!
//! All functions are pure and total on finite input; `erf_inv` reports a
//! domain error outside `(-1, 1)`.

// coefficients are kept digit for digit as published
#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use crate::error::Error;

/// Beyond this magnitude `erf` is exactly `±1` and `erfc` is `0` or `2`.
const SATURATION: f64 = 38.0;

/// Switchover from the direct formula to the asymptotic series in [`erfcx`].
const ERFCX_ASYMPTOTIC: f64 = 6.0;

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

const ERX: f64 = 8.45062911510467529297e-01;

// erf on [0, 0.84375]
const EFX: f64 = 1.28379167095512586316e-01;
const EFX8: f64 = 1.02703333676410069053e+00;
const PP0: f64 = 1.28379167095512558561e-01;
const PP1: f64 = -3.25042107247001499370e-01;
const PP2: f64 = -2.84817495755985104766e-02;
const PP3: f64 = -5.77027029648944159157e-03;
const PP4: f64 = -2.37630166566501626084e-05;
const QQ1: f64 = 3.97917223959155352819e-01;
const QQ2: f64 = 6.50222499887672944485e-02;
const QQ3: f64 = 5.08130628187576562776e-03;
const QQ4: f64 = 1.32494738004321644526e-04;
const QQ5: f64 = -3.96022827877536812320e-06;

// erf on [0.84375, 1.25]
const PA0: f64 = -2.36211856075265944077e-03;
const PA1: f64 = 4.14856118683748331666e-01;
const PA2: f64 = -3.72207876035701323847e-01;
const PA3: f64 = 3.18346619901161753674e-01;
const PA4: f64 = -1.10894694282396677476e-01;
const PA5: f64 = 3.54783043256182359371e-02;
const PA6: f64 = -2.16637559486879084300e-03;
const QA1: f64 = 1.06420880400844228286e-01;
const QA2: f64 = 5.40397917702171048937e-01;
const QA3: f64 = 7.18286544141962662868e-02;
const QA4: f64 = 1.26171219808761642112e-01;
const QA5: f64 = 1.36370839120290507362e-02;
const QA6: f64 = 1.19844998467991074170e-02;

// erfc on [1.25, 1/0.35]
const RA0: f64 = -9.86494403484714822705e-03;
const RA1: f64 = -6.93858572707181764372e-01;
const RA2: f64 = -1.05586262253232909814e+01;
const RA3: f64 = -6.23753324503260060396e+01;
const RA4: f64 = -1.62396669462573470355e+02;
const RA5: f64 = -1.84605092906711035994e+02;
const RA6: f64 = -8.12874355063065934246e+01;
const RA7: f64 = -9.81432934416914548592e+00;
const SA1: f64 = 1.96512716674392571292e+01;
const SA2: f64 = 1.37657754143519042600e+02;
const SA3: f64 = 4.34565877475229228821e+02;
const SA4: f64 = 6.45387271733267880336e+02;
const SA5: f64 = 4.29008140027567833386e+02;
const SA6: f64 = 1.08635005541779435134e+02;
const SA7: f64 = 6.57024977031928170135e+00;
const SA8: f64 = -6.04244152148580987438e-02;

// erfc on [1/0.35, 28]
const RB0: f64 = -9.86494292470009928597e-03;
const RB1: f64 = -7.99283237680523006574e-01;
const RB2: f64 = -1.77579549177547519889e+01;
const RB3: f64 = -1.60636384855821916062e+02;
const RB4: f64 = -6.37566443368389627722e+02;
const RB5: f64 = -1.02509513161107724954e+03;
const RB6: f64 = -4.83519191608651397019e+02;
const SB1: f64 = 3.03380607434824582924e+01;
const SB2: f64 = 3.25792512996573918826e+02;
const SB3: f64 = 1.53672958608443695994e+03;
const SB4: f64 = 3.19985821950859553908e+03;
const SB5: f64 = 2.55305040643316442583e+03;
const SB6: f64 = 4.74528541206955367215e+02;
const SB7: f64 = -2.24409524465858183362e+01;

fn small_ratio(x: f64) -> f64 {
    let z = x * x;
    let r = PP0 + z * (PP1 + z * (PP2 + z * (PP3 + z * PP4)));
    let s = 1.0 + z * (QQ1 + z * (QQ2 + z * (QQ3 + z * (QQ4 + z * QQ5))));
    r / s
}

/// `erf(1 + s) - ERX` for `s` in `[-0.15625, 0.25]`.
fn near_one(s: f64) -> f64 {
    let p = PA0 + s * (PA1 + s * (PA2 + s * (PA3 + s * (PA4 + s * (PA5 + s * PA6)))));
    let q = 1.0 + s * (QA1 + s * (QA2 + s * (QA3 + s * (QA4 + s * (QA5 + s * QA6)))));
    p / q
}

/// `R/S` such that `erfc(x) = exp(-x² - 0.5625 + R/S) / x` for `x` in `[1.25, 28)`.
fn tail_ratio(x: f64) -> f64 {
    let s = 1.0 / (x * x);
    if x < 1.0 / 0.35 {
        let r = RA0 + s * (RA1 + s * (RA2 + s * (RA3 + s * (RA4 + s * (RA5 + s * (RA6 + s * RA7))))));
        let q = 1.0 + s * (SA1 + s * (SA2 + s * (SA3 + s * (SA4 + s * (SA5 + s * (SA6 + s * (SA7 + s * SA8)))))));
        r / q
    } else {
        let r = RB0 + s * (RB1 + s * (RB2 + s * (RB3 + s * (RB4 + s * (RB5 + s * RB6)))));
        let q = 1.0 + s * (SB1 + s * (SB2 + s * (SB3 + s * (SB4 + s * (SB5 + s * (SB6 + s * SB7))))));
        r / q
    }
}

/// `erfc(x)` for `x` in `[1.25, 28)`.
fn tail(x: f64) -> f64 {
    // split x² so that exp(-x²) keeps full precision
    let z = f64::from_bits(x.to_bits() & 0xffff_ffff_0000_0000);
    (-z * z - 0.5625).exp() * ((z - x) * (z + x) + tail_ratio(x)).exp() / x
}

/// The error function `2/√π ∫₀ˣ exp(-t²) dt`.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let a = x.abs();
    let value = if a >= SATURATION {
        1.0
    } else if a < 0.84375 {
        if a < 3.725_290_298_461_914e-9 {
            if a < 2.848_094_538_889_218e-306 {
                0.125 * (8.0 * a + EFX8 * a)
            } else {
                a + EFX * a
            }
        } else {
            a + a * small_ratio(a)
        }
    } else if a < 1.25 {
        ERX + near_one(a - 1.0)
    } else if a >= 6.0 {
        1.0
    } else {
        1.0 - tail(a)
    };
    value.copysign(x)
}

/// The complementary error function `1 - erf(x)`, without cancellation for
/// large positive `x`.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let a = x.abs();
    let negative = x < 0.0;
    if a >= SATURATION {
        return if negative { 2.0 } else { 0.0 };
    }
    if a < 0.84375 {
        let t = if a < 1.387_778_780_781_445_7e-17 {
            a
        } else if a < 0.25 {
            a + a * small_ratio(a)
        } else {
            0.5 + (a * small_ratio(a) + (a - 0.5))
        };
        return if negative { 1.0 + t } else { 1.0 - t };
    }
    if a < 1.25 {
        let t = near_one(a - 1.0);
        return if negative { 1.0 + ERX + t } else { 1.0 - ERX - t };
    }
    if a < 28.0 {
        if negative {
            return if a > 6.0 { 2.0 } else { 2.0 - tail(a) };
        }
        return tail(a);
    }
    if negative {
        2.0
    } else {
        0.0
    }
}

/// Scaled complementary error function `exp(x²)·erfc(x)` for `x ≥ 0`.
///
/// Above `x = 6` the asymptotic series is summed up to its smallest term,
/// so the result stays finite for arbitrarily large `x`.
pub fn erfcx(x: f64) -> f64 {
    debug_assert!(x >= 0.0, "erfcx is only used for non-negative arguments");
    if x < 1.0 / 0.35 {
        (x * x).exp() * erfc(x)
    } else if x < ERFCX_ASYMPTOTIC {
        (tail_ratio(x) - 0.5625).exp() / x
    } else {
        erfcx_asymptotic(x)
    }
}

fn erfcx_asymptotic(x: f64) -> f64 {
    // erfcx(x) ~ 1/(x√π) · Σ (-1)ⁿ (2n-1)!! / (2x²)ⁿ
    let inv = 1.0 / (2.0 * x * x);
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 1..200 {
        let next = -term * (2 * n - 1) as f64 * inv;
        if next.abs() >= term.abs() || next.abs() < 1e-18 {
            break;
        }
        term = next;
        sum += term;
    }
    sum / (x * PI.sqrt())
}

/// Inverse error function on `(-1, 1)`.
///
/// A rational initial guess is refined with safeguarded Newton steps on
/// `erf` (or on `erfc` for `|p| > 0.5`, where that form keeps precision).
pub fn erf_inv(p: f64) -> Result<f64, Error> {
    if !p.is_finite() || p.abs() >= 1.0 {
        return Err(Error::Domain(format!("erf_inv requires |p| < 1, got {p}")));
    }
    if p == 0.0 {
        return Ok(p);
    }
    let target = p.abs();
    let complement = 1.0 - target;
    let mut x = initial_guess(target);

    // erf is increasing, so [lo, hi] always brackets the root
    let mut lo = 0.0_f64;
    let mut hi = f64::INFINITY;
    for _ in 0..50 {
        let residual = if target <= 0.5 {
            erf(x) - target
        } else {
            complement - erfc(x)
        };
        if residual == 0.0 {
            break;
        }
        if residual > 0.0 {
            hi = hi.min(x);
        } else {
            lo = lo.max(x);
        }
        let slope = FRAC_2_SQRT_PI * (-x * x).exp();
        let mut next = x - residual / slope;
        if !(next > lo && next < hi) {
            next = if hi.is_finite() {
                0.5 * (lo + hi)
            } else {
                2.0 * lo.max(0.5)
            };
        }
        let step = next - x;
        x = next;
        if step.abs() <= 1e-15 * x.abs().max(1.0) {
            break;
        }
    }
    Ok(x.copysign(p))
}

/// Inverse complementary error function on `(0, 2)`.
///
/// Small arguments are handled by Newton steps on `ln erfc`, which stays
/// finite and well scaled down to the smallest positive `q`.
pub fn erfc_inv(q: f64) -> Result<f64, Error> {
    if !(q > 0.0 && q < 2.0) {
        return Err(Error::Domain(format!("erfc_inv requires 0 < q < 2, got {q}")));
    }
    if q > 1.0 {
        return Ok(-erfc_inv(2.0 - q)?);
    }
    if q >= 0.5 {
        // exact subtraction for q in [0.5, 1]
        return erf_inv(1.0 - q);
    }
    let log_q = q.ln();
    // from erfc(x) ≈ exp(−x²)/(x√π)
    let t = (-log_q).sqrt();
    let mut x = (t - (t * PI.sqrt()).ln() / (2.0 * t)).max(0.5);
    let mut lo = 0.0_f64;
    let mut hi = f64::INFINITY;
    for _ in 0..100 {
        let residual = erfcx(x).ln() - x * x - log_q;
        if residual == 0.0 {
            break;
        }
        // ln erfc is decreasing
        if residual > 0.0 {
            lo = lo.max(x);
        } else {
            hi = hi.min(x);
        }
        let slope = -FRAC_2_SQRT_PI / erfcx(x);
        let mut next = x - residual / slope;
        if !(next > lo && next < hi) {
            next = if hi.is_finite() {
                0.5 * (lo + hi)
            } else {
                2.0 * lo.max(0.5)
            };
        }
        let step = next - x;
        x = next;
        if step.abs() <= 1e-15 * x.abs().max(1.0) {
            break;
        }
    }
    Ok(x)
}

/// Single-precision-grade starting point (Giles 2010) for `0 < p < 1`.
fn initial_guess(p: f64) -> f64 {
    let w = -((1.0 - p) * (1.0 + p)).ln();
    let poly = if w < 5.0 {
        let w = w - 2.5;
        [
            2.810_226_36e-08,
            3.432_739_39e-07,
            -3.523_387_7e-06,
            -4.391_506_54e-06,
            0.000_218_580_87,
            -0.001_253_725_03,
            -0.004_177_681_64,
            0.246_640_727,
            1.501_409_41,
        ]
        .iter()
        .fold(0.0, |acc, c| acc * w + c)
    } else {
        let w = w.sqrt() - 3.0;
        [
            -0.000_200_214_257,
            0.000_100_950_558,
            0.001_349_343_22,
            -0.003_673_428_44,
            0.005_739_507_73,
            -0.007_622_461_3,
            0.009_438_870_47,
            1.001_674_06,
            2.832_976_82,
        ]
        .iter()
        .fold(0.0, |acc, c| acc * w + c)
    };
    poly * p
}
