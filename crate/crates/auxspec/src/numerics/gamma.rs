//! Gamma function via the Lanczos approximation (g = 7, nine coefficients).

use std::f64::consts::PI;

const G: f64 = 7.0;

// Coefficient set used by the GNU Scientific Library for g = 7.
const COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma(x) for real arguments; poles at non-positive integers return NaN.
///
/// Positive integers up to 20 take an exact product path so the factorial
/// identities used by the energy formulas hold to machine precision.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x <= 0.0 && x == x.floor() {
        return f64::NAN;
    }
    if x == x.floor() && x <= 20.5 {
        let n = x as u32;
        let mut acc = 1.0_f64;
        for k in 2..n {
            acc *= f64::from(k);
        }
        return acc;
    }
    if x < 0.5 {
        // reflection
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let z = x - 1.0;
    let mut series = COEFFS[0];
    for (i, &c) in COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * series
}
