use thiserror::Error;

/// Bisection stops refining once the bracket is at most this wide and the
/// residual is within tolerance.
pub const BRACKET_WIDTH: f64 = 1e-14;

/// Upper-bound doublings attempted before giving up on a sign change.
pub const MAX_DOUBLINGS: usize = 200;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("no sign change between {lo} and {hi} after {doublings} doublings")]
    NoSignChange { lo: f64, hi: f64, doublings: usize },
    #[error("residual is not finite at z = {z} (value {value})")]
    NonFinite { z: f64, value: f64 },
}

/// How the upper end of the bracket is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UpperBracket {
    /// Use this point as is.
    Fixed(f64),
    /// Start here (or at the lower end, whichever is larger) and double until
    /// the residual changes sign.
    Doubling(f64),
}

/// Root of a continuous, strictly monotone residual by bisection.
///
/// The bracket starts at `lo`; its upper end follows `upper`. Bisection runs
/// until the bracket is narrower than [`BRACKET_WIDTH`] and `|f| <= tol` at
/// the returned point, or until the bracket cannot be split any further in
/// floating point. The endpoint with the smaller residual is returned.
///
/// An infinite residual at a candidate upper end only tells its sign; a NaN
/// anywhere, or a non-finite value at an interior point, is an error.
pub fn find_root_monotone<F>(mut f: F, lo: f64, upper: UpperBracket, tol: f64) -> Result<f64, RootError>
where
    F: FnMut(f64) -> f64,
{
    let mut lo = lo;
    let mut f_lo = f(lo);
    if !f_lo.is_finite() {
        return Err(RootError::NonFinite { z: lo, value: f_lo });
    }
    if f_lo == 0.0 {
        return Ok(lo);
    }

    let (mut hi, mut f_hi) = match upper {
        UpperBracket::Fixed(hi) => {
            let f_hi = f(hi);
            if f_hi.is_nan() {
                return Err(RootError::NonFinite { z: hi, value: f_hi });
            }
            if f_hi.signum() == f_lo.signum() && f_hi != 0.0 {
                return Err(RootError::NoSignChange { lo, hi, doublings: 0 });
            }
            (hi, f_hi)
        }
        UpperBracket::Doubling(start) => {
            let mut hi = if start > lo { start } else { lo + lo.abs().max(1.0) };
            let mut f_hi = f(hi);
            let mut doublings = 0;
            loop {
                if f_hi.is_nan() {
                    return Err(RootError::NonFinite { z: hi, value: f_hi });
                }
                if f_hi == 0.0 || f_hi.signum() != f_lo.signum() {
                    break;
                }
                if doublings == MAX_DOUBLINGS {
                    return Err(RootError::NoSignChange { lo, hi, doublings });
                }
                // monotone: the old upper end is a valid lower end
                if f_hi.is_finite() {
                    lo = hi;
                    f_lo = f_hi;
                }
                hi *= 2.0;
                f_hi = f(hi);
                doublings += 1;
            }
            (hi, f_hi)
        }
    };
    if f_hi == 0.0 {
        return Ok(hi);
    }

    loop {
        let best_residual = f_lo.abs().min(f_hi.abs());
        if hi - lo <= BRACKET_WIDTH && best_residual <= tol {
            break;
        }
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if !f_mid.is_finite() {
            return Err(RootError::NonFinite { z: mid, value: f_mid });
        }
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    Ok(if f_lo.abs() <= f_hi.abs() { lo } else { hi })
}
