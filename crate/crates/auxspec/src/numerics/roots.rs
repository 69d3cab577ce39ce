//! Bracketed root finding.

/// Bisection on `[lo, hi]`, assuming `f(lo)` and `f(hi)` have opposite signs.
///
/// Runs until the interval shrinks below `rel_tol` relative to its midpoint
/// (absolute floor `1e-300`) and returns the midpoint of the final interval.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, rel_tol: f64) -> f64 {
    let mut f_lo = f(lo);
    if f_lo == 0.0 {
        return lo;
    }
    let f_hi = f(hi);
    if f_hi == 0.0 {
        return hi;
    }
    debug_assert!(f_lo * f_hi < 0.0, "bisect requires a sign change");
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= rel_tol * mid.abs().max(1e-300) || mid <= lo || mid >= hi {
            return mid;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_lo * f_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_root() {
        let r = bisect(|x| x * x * x - 2.0, 0.0, 2.0, 1e-14);
        assert!((r - 2.0_f64.powf(1.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn decreasing_function() {
        let r = bisect(|x| 1.0 - x.exp(), -3.0, 5.0, 1e-14);
        assert!(r.abs() < 1e-12);
    }
}
