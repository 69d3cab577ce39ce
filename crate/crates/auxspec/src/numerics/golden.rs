//! Golden-section search for a bracketed one-dimensional minimum.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Minimize `f` on `[a, b]`, assuming a single interior minimum.
///
/// Stops when the bracket width drops below `rel_tol * |x|` (with a small
/// absolute floor) or after `max_iter` shrink steps. Returns `(x_min, f_min)`.
pub fn golden_section_min(
    f: impl Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    rel_tol: f64,
    max_iter: usize,
) -> (f64, f64) {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    for _ in 0..max_iter {
        let mid = 0.5 * (a + b);
        if (b - a).abs() <= rel_tol * mid.abs().max(1e-30) {
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }

    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}
