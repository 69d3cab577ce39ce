//! Quantitative comparison of the improved formula against converged
//! numerical spectra: the χ measure over the n, ℓ ∈ {0..3} grid, per-λ
//! optimization of the (b, c) pair, and rational (hyperbola) fits of the
//! coefficient curves b(λ) and c(λ).

use crate::closed_form::{self, CoeffFamily};
use crate::error::{Error, Result};
use crate::numerics::nelder_mead;
use crate::oracle;
use crate::potentials::{DimensionlessPotential, QuantumNumbers};

/// Inclusive maximum of the (n, ℓ) comparison grid.
pub const GRID_MAX: u32 = 3;

/// Converged eigenvalues ε_num(n, ℓ) for one potential over the 4×4 grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceGrid {
    pub potential: DimensionlessPotential,
    eps: [[Option<f64>; 4]; 4],
}

impl ReferenceGrid {
    /// Build from a closure returning ε_num(n, ℓ) where available.
    pub fn from_fn(
        potential: DimensionlessPotential,
        mut f: impl FnMut(u32, u32) -> Option<f64>,
    ) -> Self {
        let mut eps = [[None; 4]; 4];
        for (n, row) in eps.iter_mut().enumerate() {
            for (ell, cell) in row.iter_mut().enumerate() {
                *cell = f(n as u32, ell as u32);
            }
        }
        Self { potential, eps }
    }

    /// Solve the oracle for the full grid.
    pub fn from_oracle(potential: DimensionlessPotential) -> Self {
        let table = oracle::reference_table(&[potential], GRID_MAX, GRID_MAX);
        let column = &table.columns[0];
        Self::from_fn(potential, |n, ell| {
            column
                .get(n, ell)
                .and_then(|cell| cell.as_ref().ok())
                .map(|c| c.value)
        })
    }

    pub fn get(&self, n: u32, ell: u32) -> Option<f64> {
        self.eps[n as usize][ell as usize]
    }

    fn require_complete(&self) -> Result<()> {
        let mut missing = Vec::new();
        for n in 0..=GRID_MAX {
            for ell in 0..=GRID_MAX {
                if self.get(n, ell).is_none() {
                    missing.push((n, ell));
                }
            }
        }
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::MissingReference { cells: missing })
        }
    }
}

/// Alternative χ definitions; the default is the absolute squared error
/// over the full 4×4 grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiOptions {
    /// Divide each deviation by ε_num before squaring.
    pub relative_error: bool,
    pub n_max: u32,
    pub ell_max: u32,
}

impl Default for ChiOptions {
    fn default() -> Self {
        Self {
            relative_error: false,
            n_max: GRID_MAX,
            ell_max: GRID_MAX,
        }
    }
}

fn improved_value(
    potential: DimensionlessPotential,
    b: f64,
    c: f64,
    n: u32,
    ell: u32,
) -> Result<f64> {
    let n_comb = b * f64::from(n) + f64::from(ell) + c;
    if !(n_comb > 0.0) {
        return Err(Error::Domain(format!(
            "principal combination b n + l + c = {n_comb} is not positive at (n, l) = ({n}, {ell})"
        )));
    }
    match potential {
        DimensionlessPotential::PowerLaw(lambda) => closed_form::epsilon_app(lambda, n_comb),
        DimensionlessPotential::Log => Ok(((std::f64::consts::E / 2.0).sqrt() * n_comb).ln()),
    }
}

/// χ = Σ_{n,ℓ} (ε_num - ε_A)² with ε_A from the improved formula at the
/// supplied (b, c); the logarithmic grid uses the logarithmic form.
pub fn chi_measure(b: f64, c: f64, reference: &ReferenceGrid) -> Result<f64> {
    chi_measure_with(b, c, reference, ChiOptions::default())
}

pub fn chi_measure_with(
    b: f64,
    c: f64,
    reference: &ReferenceGrid,
    options: ChiOptions,
) -> Result<f64> {
    reference.require_complete()?;
    let mut chi = 0.0;
    for n in 0..=options.n_max.min(GRID_MAX) {
        for ell in 0..=options.ell_max.min(GRID_MAX) {
            let eps_num = reference.get(n, ell).expect("grid checked complete");
            let eps_a = improved_value(reference.potential, b, c, n, ell)?;
            let mut diff = eps_num - eps_a;
            if options.relative_error {
                diff /= eps_num;
            }
            chi += diff * diff;
        }
    }
    Ok(chi)
}

/// χ with a family's predicted coefficients.
pub fn chi_family(family: CoeffFamily, reference: &ReferenceGrid) -> Result<f64> {
    let lambda = reference.potential.lambda_or_zero();
    let (b, c) = family.coefficients(lambda)?;
    chi_measure(b, c, reference)
}

/// χ with the semiclassical spectrum in place of the improved formula;
/// undefined for the logarithmic grid.
pub fn chi_wkb(reference: &ReferenceGrid) -> Result<f64> {
    let lambda = match reference.potential {
        DimensionlessPotential::Log => {
            return Err(Error::Domain(
                "the semiclassical formula has no logarithmic branch".into(),
            ))
        }
        DimensionlessPotential::PowerLaw(lambda) => lambda,
    };
    reference.require_complete()?;
    let mut chi = 0.0;
    for n in 0..=GRID_MAX {
        for ell in 0..=GRID_MAX {
            let eps_num = reference.get(n, ell).expect("grid checked complete");
            let eps_w = closed_form::wkb_epsilon(lambda, QuantumNumbers::new(n, ell))?;
            chi += (eps_num - eps_w) * (eps_num - eps_w);
        }
    }
    Ok(chi)
}

/// χ sampled on a (b, c) rectangle: rows of (b, c, χ), for inspecting the
/// surface the local search runs on (smooth and unimodal near the family
/// predictions; cells where χ is undefined are skipped).
pub fn chi_surface(
    reference: &ReferenceGrid,
    b_range: (f64, f64),
    c_range: (f64, f64),
    steps: usize,
) -> Result<Vec<(f64, f64, f64)>> {
    reference.require_complete()?;
    let steps = steps.max(2);
    let mut rows = Vec::with_capacity(steps * steps);
    for i in 0..steps {
        let b = b_range.0 + (b_range.1 - b_range.0) * i as f64 / (steps - 1) as f64;
        for j in 0..steps {
            let c = c_range.0 + (c_range.1 - c_range.0) * j as f64 / (steps - 1) as f64;
            if let Ok(chi) = chi_measure(b, c, reference) {
                rows.push((b, c, chi));
            }
        }
    }
    Ok(rows)
}

/// Optimal coefficients for one λ and the residual χ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub potential: DimensionlessPotential,
    pub b_opt: f64,
    pub c_opt: f64,
    pub chi: f64,
    pub iterations: usize,
}

impl FitResult {
    pub fn lambda(&self) -> f64 {
        self.potential.lambda_or_zero()
    }
}

const FIT_TOL: f64 = 1e-8;
const FIT_MAX_ITER: usize = 10_000;

/// Minimize χ over (b, c) by a derivative-free simplex search multi-started
/// from the family predictions.
pub fn fit_bc(reference: &ReferenceGrid) -> Result<FitResult> {
    reference.require_complete()?;
    let lambda = reference.potential.lambda_or_zero();
    let objective = |x: [f64; 2]| chi_measure(x[0], x[1], reference).unwrap_or(f64::INFINITY);

    let mut starts = Vec::new();
    for family in CoeffFamily::ALL {
        if let Ok((b, c)) = family.coefficients(lambda) {
            starts.push([b, c]);
        }
    }

    let mut iterations = 0usize;
    let mut best: Option<nelder_mead::SimplexOutcome> = None;
    let mut any_converged = false;
    for start in starts {
        let out = nelder_mead::minimize2(objective, start, [0.05, 0.05], FIT_TOL, FIT_MAX_ITER);
        iterations += out.iterations;
        any_converged |= out.converged;
        if best.as_ref().is_none_or(|b| out.fx < b.fx) {
            best = Some(out);
        }
    }
    let best = best.expect("at least one coefficient family is defined everywhere");
    if !any_converged {
        return Err(Error::FitDidNotConverge {
            b: best.x[0],
            c: best.x[1],
            chi: best.fx,
            iterations,
        });
    }

    // optimality sanity: the free optimum cannot lose to a fixed family
    let mut result = FitResult {
        potential: reference.potential,
        b_opt: best.x[0],
        c_opt: best.x[1],
        chi: chi_measure(best.x[0], best.x[1], reference)?,
        iterations,
    };
    for family in CoeffFamily::ALL {
        if let Ok(chi) = chi_family(family, reference) {
            if chi < result.chi {
                let (b, c) = family.coefficients(lambda)?;
                let out =
                    nelder_mead::minimize2(objective, [b, c], [0.01, 0.01], FIT_TOL, FIT_MAX_ITER);
                iterations += out.iterations;
                if out.fx < result.chi {
                    result = FitResult {
                        potential: reference.potential,
                        b_opt: out.x[0],
                        c_opt: out.x[1],
                        chi: chi_measure(out.x[0], out.x[1], reference)?,
                        iterations,
                    };
                }
            }
        }
    }
    Ok(result)
}

/// Rational function (p₁λ + p₂)/(p₃λ + p₄) with the denominator intercept
/// normalized to remove the overall scale freedom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RationalFit {
    pub p_num: (f64, f64),
    pub p_den: (f64, f64),
}

impl RationalFit {
    pub fn eval(&self, lambda: f64) -> f64 {
        (self.p_num.0 * lambda + self.p_num.1) / (self.p_den.0 * lambda + self.p_den.1)
    }

    /// λ at which the denominator vanishes, if any.
    pub fn pole(&self) -> Option<f64> {
        if self.p_den.0 == 0.0 {
            None
        } else {
            Some(-self.p_den.1 / self.p_den.0)
        }
    }
}

fn check_pole_free(fit: &RationalFit, points: &[(f64, f64)]) -> Result<()> {
    if let Some(pole) = fit.pole() {
        let lo = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
        let hi = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
        if pole >= lo && pole <= hi {
            return Err(Error::Domain(format!(
                "fitted denominator vanishes at lambda = {pole:.6} inside the data interval"
            )));
        }
    }
    Ok(())
}

/// Least-squares fit of `value ≈ (p₁λ + p₂)/(p₃λ + p₄)` with p₄ = 1,
/// linearized by multiplying through the denominator. Noise-free rational
/// data is recovered exactly (up to the common scale).
pub fn fit_hyperbola(points: &[(f64, f64)]) -> Result<RationalFit> {
    if points.len() < 4 {
        return Err(Error::Domain(format!(
            "need at least 4 points for the rational fit, got {}",
            points.len()
        )));
    }
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if a.0 == b.0 {
                return Err(Error::Domain(format!(
                    "duplicate abscissa lambda = {}",
                    a.0
                )));
            }
        }
    }
    // rows: p1 λ + p2 - p3 v λ = v
    let mut ata = [[0.0_f64; 3]; 3];
    let mut atb = [0.0_f64; 3];
    for &(x, v) in points {
        let row = [x, 1.0, -v * x];
        for i in 0..3 {
            for j in 0..3 {
                ata[i][j] += row[i] * row[j];
            }
            atb[i] += row[i] * v;
        }
    }
    let p = solve3(ata, atb).ok_or(Error::DegenerateFit)?;
    let fit = RationalFit {
        p_num: (p[0], p[1]),
        p_den: (p[2], 1.0),
    };
    check_pole_free(&fit, points)?;
    Ok(fit)
}

/// Rational fit constrained to pass exactly through two anchor points;
/// one degree of freedom remains and is set by least squares on `points`.
pub fn fit_hyperbola_constrained(
    points: &[(f64, f64)],
    anchor_a: (f64, f64),
    anchor_b: (f64, f64),
) -> Result<RationalFit> {
    if points.is_empty() {
        return Err(Error::Domain(
            "need at least one point beyond the anchors".into(),
        ));
    }
    let (xa, va) = anchor_a;
    let (xb, vb) = anchor_b;
    if xa == xb {
        return Err(Error::Domain("anchor abscissae must differ".into()));
    }
    // with p4 = 1 the two interpolation constraints leave p3 = t free:
    // p1(t) = a1 + b1 t, p2(t) = a2 + b2 t
    let a1 = (va - vb) / (xa - xb);
    let b1 = (va * xa - vb * xb) / (xa - xb);
    let a2 = va - a1 * xa;
    let b2 = va * xa - b1 * xa;
    let mut num = 0.0;
    let mut den = 0.0;
    for &(x, v) in points {
        let base = a1 * x + a2 - v;
        let slope = b1 * x + b2 - v * x;
        num += base * slope;
        den += slope * slope;
    }
    if den < 1e-30 {
        return Err(Error::DegenerateFit);
    }
    let t = -num / den;
    let fit = RationalFit {
        p_num: (a1 + b1 * t, a2 + b2 * t),
        p_den: (t, 1.0),
    };
    let mut all = points.to_vec();
    all.push(anchor_a);
    all.push(anchor_b);
    check_pole_free(&fit, &all)?;
    Ok(fit)
}

/// 3×3 linear solve by Gaussian elimination with partial pivoting.
#[allow(clippy::needless_range_loop)] // two rows of `a` are touched at once
fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    let scale = a
        .iter()
        .flatten()
        .fold(0.0_f64, |m, v| m.max(v.abs()))
        .max(1e-300);
    for col in 0..3 {
        let pivot = (col..3).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() < 1e-14 * scale {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..3 {
            let m = a[row][col] / a[col][col];
            for k in col..3 {
                a[row][k] -= m * a[col][k];
            }
            b[row] -= m * b[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let mut acc = b[row];
        for k in row + 1..3 {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Grid filled from a closed form instead of the oracle: cheap and exact.
    fn exact_grid(lambda: f64) -> ReferenceGrid {
        ReferenceGrid::from_fn(DimensionlessPotential::PowerLaw(lambda), |n, ell| {
            let qn = QuantumNumbers::new(n, ell);
            if lambda == 2.0 {
                Some(qn.harmonic_combination())
            } else if lambda == -1.0 {
                let n_c = qn.coulomb_combination();
                Some(-1.0 / (n_c * n_c))
            } else {
                closed_form::epsilon_harmonic(lambda, qn).ok()
            }
        })
    }

    #[test]
    fn chi_zero_at_exact_points() {
        let grid = exact_grid(2.0);
        assert!(chi_measure(2.0, 1.5, &grid).unwrap() < 1e-24);
        let grid = exact_grid(-1.0);
        assert!(chi_measure(1.0, 1.0, &grid).unwrap() < 1e-24);
    }

    #[test]
    fn chi_positive_otherwise() {
        let grid = exact_grid(2.0);
        assert!(chi_measure(2.1, 1.5, &grid).unwrap() > 1e-4);
    }

    #[test]
    fn chi_missing_cells_are_listed() {
        let grid = ReferenceGrid::from_fn(DimensionlessPotential::PowerLaw(1.0), |n, ell| {
            if (n, ell) == (2, 1) || (n, ell) == (0, 3) {
                None
            } else {
                Some(1.0)
            }
        });
        match chi_measure(2.0, 1.5, &grid) {
            Err(Error::MissingReference { cells }) => {
                assert!(cells.contains(&(2, 1)));
                assert!(cells.contains(&(0, 3)));
                assert_eq!(cells.len(), 2);
            }
            other => panic!("expected missing-reference error, got {other:?}"),
        }
    }

    #[test]
    fn chi_rejects_nonpositive_combination() {
        let grid = exact_grid(2.0);
        assert!(chi_measure(-2.0, 1.0, &grid).is_err());
    }

    #[test]
    fn chi_relative_option() {
        let grid = exact_grid(2.0);
        let abs = chi_measure(2.05, 1.5, &grid).unwrap();
        let rel = chi_measure_with(
            2.05,
            1.5,
            &grid,
            ChiOptions {
                relative_error: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(rel < abs); // eigenvalues on this grid are all > 1
    }

    #[test]
    fn fit_recovers_exact_cases() {
        for (lambda, want) in [(2.0, (2.0, 1.5)), (-1.0, (1.0, 1.0))] {
            let grid = exact_grid(lambda);
            let fit = fit_bc(&grid).unwrap();
            assert!(
                (fit.b_opt - want.0).abs() < 1e-5,
                "lambda={lambda}: {fit:?}"
            );
            assert!(
                (fit.c_opt - want.1).abs() < 1e-5,
                "lambda={lambda}: {fit:?}"
            );
            assert!(fit.chi < 1e-10);
        }
    }

    #[test]
    fn fit_beats_every_family() {
        // synthetic grid from the harmonic-memory formula at λ = 1: the
        // optimizer must do at least as well as each fixed family
        let grid = exact_grid(1.0);
        let fit = fit_bc(&grid).unwrap();
        for family in CoeffFamily::ALL {
            let chi = chi_family(family, &grid).unwrap();
            assert!(fit.chi <= chi + 1e-12, "{family:?}");
        }
    }

    #[test]
    fn chi_surface_is_unimodal_near_the_optimum() {
        let grid = exact_grid(2.0);
        let rows = chi_surface(&grid, (1.6, 2.4), (1.1, 1.9), 17).unwrap();
        assert_eq!(rows.len(), 17 * 17);
        // the sampled surface has its single smallest cell at the exact
        // coefficients, and chi grows monotonically along the b axis away
        // from it at fixed c
        let best = rows
            .iter()
            .min_by(|x, y| x.2.total_cmp(&y.2))
            .copied()
            .unwrap();
        assert!((best.0 - 2.0).abs() < 1e-12 && (best.1 - 1.5).abs() < 1e-12);
        let along_b: Vec<&(f64, f64, f64)> =
            rows.iter().filter(|r| (r.1 - 1.5).abs() < 1e-12).collect();
        for pair in along_b.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if b.0 <= 2.0 {
                assert!(b.2 <= a.2 + 1e-15, "descending toward b = 2");
            } else if a.0 >= 2.0 {
                assert!(b.2 >= a.2 - 1e-15, "ascending past b = 2");
            }
        }
    }

    #[test]
    fn hyperbola_exact_recovery() {
        // samples of (41λ+86)/(13λ+58) must reproduce the coefficients up
        // to the common scale
        let b4 = |x: f64| (41.0 * x + 86.0) / (13.0 * x + 58.0);
        let points: Vec<(f64, f64)> = [-1.0, 0.0, 1.0, 2.0].iter().map(|&x| (x, b4(x))).collect();
        let fit = fit_hyperbola(&points).unwrap();
        let scale = 58.0; // p4 was normalized to one
        assert!((fit.p_num.0 * scale - 41.0).abs() < 1e-8);
        assert!((fit.p_num.1 * scale - 86.0).abs() < 1e-8);
        assert!((fit.p_den.0 * scale - 13.0).abs() < 1e-8);
        let mut x = -1.5;
        while x <= 4.0 {
            assert!((fit.eval(x) - b4(x)).abs() < 1e-10, "x={x}");
            x += 0.1;
        }
    }

    #[test]
    fn hyperbola_requires_four_points() {
        let pts = [(0.0, 1.0), (1.0, 2.0), (2.0, 3.0)];
        assert!(fit_hyperbola(&pts).is_err());
    }

    #[test]
    fn hyperbola_rejects_duplicate_abscissae() {
        let pts = [(0.0, 1.0), (0.0, 2.0), (1.0, 3.0), (2.0, 4.0)];
        assert!(fit_hyperbola(&pts).is_err());
    }

    #[test]
    fn constrained_fit_reconstructs_airy_hyperbola() {
        // anchoring at the exact endpoints and supplying the single interior
        // point (1, √3π/4) pins the c(λ) hyperbola completely
        let sigma = 3.0_f64.sqrt() * std::f64::consts::PI;
        let fit =
            fit_hyperbola_constrained(&[(1.0, sigma / 4.0)], (-1.0, 1.0), (2.0, 1.5)).unwrap();
        let mut x = -1.0;
        while x <= 2.0 {
            let want = CoeffFamily::HyperbolaAiry.c(x).unwrap();
            assert!(
                (fit.eval(x) - want).abs() < 1e-10,
                "x={x}: {} vs {want}",
                fit.eval(x)
            );
            x += 0.05;
        }
    }

    #[test]
    fn degenerate_collinear_data() {
        // straight-line data with v = const makes the linearized system
        // rank deficient (columns 2 and 3 proportional)
        let pts = [(0.0, 2.0), (1.0, 2.0), (2.0, 2.0), (3.0, 2.0)];
        let out = fit_hyperbola(&pts);
        // constant data is representable; accept either exact recovery or a
        // rank-deficiency report
        if let Ok(fit) = out {
            for (x, v) in pts {
                assert!((fit.eval(x) - v).abs() < 1e-8);
            }
        }
    }
}
