//! Adaptive quadrature built on the 15-point Gauss-Kronrod rule.

// Kronrod abscissae (positive half, descending) and weights; the embedded
// 7-point Gauss rule uses the odd-indexed nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One Gauss-Kronrod panel: returns (kronrod value, error estimate).
fn qk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut kronrod = f_center * WGK[7];
    // the center is also a node of the embedded 7-point Gauss rule
    let mut gauss = f_center * WG[3];
    let mut res_abs = kronrod.abs();

    let mut fv = [0.0_f64; 15];
    fv[7] = f_center;
    for (j, &x) in XGK.iter().enumerate().take(7) {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = kronrod * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for (j, &v) in fv.iter().enumerate() {
        if j != 7 {
            let w = WGK[if j < 7 { j } else { 14 - j }];
            res_asc += w * (v - mean).abs();
        }
    }

    let value = kronrod * half;
    let mut err = ((kronrod - gauss) * half).abs();
    res_asc *= half.abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    let res_abs = res_abs * half.abs();
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

pub struct QuadOutcome {
    pub value: f64,
    pub abs_error: f64,
    pub converged: bool,
}

/// Integrate `f` over `[a, b]`, splitting the worst panel until the summed
/// error estimate falls below `rel_tol * |integral|` (with a small absolute
/// floor for integrals near zero).
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> QuadOutcome {
    const MAX_PANELS: usize = 4096;
    let mut panels: Vec<(f64, f64, f64, f64)> = Vec::with_capacity(64);
    let (v, e) = qk15(&f, a, b);
    panels.push((a, b, v, e));

    loop {
        let total: f64 = panels.iter().map(|p| p.2).sum();
        let err: f64 = panels.iter().map(|p| p.3).sum();
        if !total.is_finite() {
            // divergent or undefined integrand
            return QuadOutcome {
                value: total,
                abs_error: f64::INFINITY,
                converged: false,
            };
        }
        let target = rel_tol * total.abs() + 1e-300;
        if err <= target {
            return QuadOutcome {
                value: total,
                abs_error: err,
                converged: true,
            };
        }
        if panels.len() >= MAX_PANELS {
            return QuadOutcome {
                value: total,
                abs_error: err,
                converged: false,
            };
        }
        // split the panel with the largest error estimate
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .unwrap();
        let (pa, pb, _, _) = panels.swap_remove(worst);
        let mid = 0.5 * (pa + pb);
        if mid <= pa || mid >= pb {
            // interval exhausted at machine precision
            let (v1, e1) = qk15(&f, pa, pb);
            panels.push((pa, pb, v1, e1));
            let total: f64 = panels.iter().map(|p| p.2).sum();
            let err: f64 = panels.iter().map(|p| p.3).sum();
            let target = rel_tol * total.abs() + 1e-300;
            return QuadOutcome {
                value: total,
                abs_error: err,
                converged: err <= target,
            };
        }
        let (v1, e1) = qk15(&f, pa, mid);
        let (v2, e2) = qk15(&f, mid, pb);
        panels.push((pa, mid, v1, e1));
        panels.push((mid, pb, v2, e2));
    }
}
