//! The lower real branch `W_{-1}` of the Lambert W function.

use std::f64::consts::E;

use super::BoundsError;

/// Bracket for `W_{-1}(-e^{-u-1})`, `u > 0`:
/// `-1 - sqrt(2u) - u < W < -1 - sqrt(2u) - 2u/3`.
pub fn w_minus1_sandwich(u: f64) -> (f64, f64) {
    let s = (2.0 * u).sqrt();
    (-1.0 - s - u, -1.0 - s - 2.0 * u / 3.0)
}

/// `W_{-1}(t)` for `-1/e <= t < 0`: the solution `w <= -1` of `w e^w = t`.
///
/// Bisection on `w + ln(-w) = ln(-t)` inside the sandwich bracket, then a
/// few Newton steps on the same equation.
pub fn lambert_w_minus1(t: f64) -> Result<f64, BoundsError> {
    let branch = -1.0 / E;
    // allow one rounding step below -1/e
    if !(t < 0.0) || t < branch * (1.0 + 4.0 * f64::EPSILON) {
        return Err(BoundsError::LambertDomain(t));
    }
    let target = (-t).ln();
    let u = -target - 1.0;
    if u <= 0.0 {
        return Ok(-1.0);
    }
    let g = |w: f64| w + (-w).ln() - target;
    let (lo, hi) = w_minus1_sandwich(u);
    // g is increasing on (-inf, -1); widen slightly for rounding
    let (mut lo, mut hi) = (lo - 1e-9 * lo.abs() - 1e-12, (hi + 1e-9 * hi.abs()).min(-1.0));
    while g(lo) > 0.0 {
        lo = 2.0 * lo - 1.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut w = 0.5 * (lo + hi);
    for _ in 0..3 {
        let d = 1.0 + 1.0 / w;
        if d.abs() < 1e-300 {
            break;
        }
        let next = w - g(w) / d;
        if !(next < -1.0 + 1e-300) || !next.is_finite() {
            break;
        }
        if (next - w).abs() <= f64::EPSILON * w.abs() {
            w = next;
            break;
        }
        w = next;
    }
    Ok(w)
}
