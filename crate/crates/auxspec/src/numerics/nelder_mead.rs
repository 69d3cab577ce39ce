//! Two-parameter Nelder-Mead simplex minimizer.
//!
//! Specialized to dimension two: the coefficient fits only ever optimize
//! a `(b, c)` pair, and a fixed-size simplex keeps the code allocation-free.

#[derive(Debug, Clone, Copy)]
pub struct SimplexOutcome {
    pub x: [f64; 2],
    pub fx: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Minimize `f` starting from `start` with initial steps `step`.
///
/// Converges when the simplex extent drops below `tol` in both coordinates.
pub fn minimize2(
    f: impl Fn([f64; 2]) -> f64,
    start: [f64; 2],
    step: [f64; 2],
    tol: f64,
    max_iter: usize,
) -> SimplexOutcome {
    const ALPHA: f64 = 1.0; // reflection
    const GAMMA: f64 = 2.0; // expansion
    const RHO: f64 = 0.5; // contraction
    const SIGMA: f64 = 0.5; // shrink

    let mut pts = [
        start,
        [start[0] + step[0], start[1]],
        [start[0], start[1] + step[1]],
    ];
    let mut vals = [f(pts[0]), f(pts[1]), f(pts[2])];

    let mut iterations = 0;
    while iterations < max_iter {
        // order the simplex: best, middle, worst
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| vals[i].total_cmp(&vals[j]));
        let (best, mid, worst) = (order[0], order[1], order[2]);

        let dx = (pts[0][0] - pts[1][0])
            .abs()
            .max((pts[0][0] - pts[2][0]).abs())
            .max((pts[1][0] - pts[2][0]).abs());
        let dy = (pts[0][1] - pts[1][1])
            .abs()
            .max((pts[0][1] - pts[2][1]).abs())
            .max((pts[1][1] - pts[2][1]).abs());
        if dx < tol && dy < tol {
            return SimplexOutcome {
                x: pts[best],
                fx: vals[best],
                iterations,
                converged: true,
            };
        }

        let centroid = [
            0.5 * (pts[best][0] + pts[mid][0]),
            0.5 * (pts[best][1] + pts[mid][1]),
        ];
        let reflect = [
            centroid[0] + ALPHA * (centroid[0] - pts[worst][0]),
            centroid[1] + ALPHA * (centroid[1] - pts[worst][1]),
        ];
        let f_reflect = f(reflect);

        if f_reflect < vals[best] {
            let expand = [
                centroid[0] + GAMMA * (reflect[0] - centroid[0]),
                centroid[1] + GAMMA * (reflect[1] - centroid[1]),
            ];
            let f_expand = f(expand);
            if f_expand < f_reflect {
                pts[worst] = expand;
                vals[worst] = f_expand;
            } else {
                pts[worst] = reflect;
                vals[worst] = f_reflect;
            }
        } else if f_reflect < vals[mid] {
            pts[worst] = reflect;
            vals[worst] = f_reflect;
        } else {
            let contract = [
                centroid[0] + RHO * (pts[worst][0] - centroid[0]),
                centroid[1] + RHO * (pts[worst][1] - centroid[1]),
            ];
            let f_contract = f(contract);
            if f_contract < vals[worst] {
                pts[worst] = contract;
                vals[worst] = f_contract;
            } else {
                for i in [mid, worst] {
                    pts[i] = [
                        pts[best][0] + SIGMA * (pts[i][0] - pts[best][0]),
                        pts[best][1] + SIGMA * (pts[i][1] - pts[best][1]),
                    ];
                    vals[i] = f(pts[i]);
                }
            }
        }
        iterations += 1;
    }

    let mut best = 0;
    for i in 1..3 {
        if vals[i] < vals[best] {
            best = i;
        }
    }
    SimplexOutcome {
        x: pts[best],
        fx: vals[best],
        iterations,
        converged: false,
    }
}
