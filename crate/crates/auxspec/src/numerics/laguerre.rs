//! Associated Laguerre polynomials by the stable three-term recurrence.

/// L_n^alpha(x) with the upward recurrence
/// (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut curr = 1.0 + alpha - x;
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0 + alpha - x) * curr - (kf + alpha) * prev) / (kf + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}
