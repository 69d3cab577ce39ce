//! Per-λ optimization of the improved-formula coefficients (b, c) against
//! oracle spectra, followed by hyperbola fits of the resulting curves —
//! the machinery behind the published coefficient parameterizations.
//!
//! Run with `cargo run --example fit_coefficients` (about ten seconds).

use auxspec::fit::{fit_bc, fit_hyperbola, fit_hyperbola_constrained, ReferenceGrid};
use auxspec::tables::table1_potentials;
use auxspec::CoeffFamily;

fn main() -> auxspec::Result<()> {
    println!("optimal (b, c) per lambda, against the bc4 family prediction\n");
    println!(
        "{:>8} {:>10} {:>10} {:>12} {:>10} {:>10}",
        "lambda", "b_opt", "c_opt", "chi", "b_bc4", "c_bc4"
    );
    let mut b_points = Vec::new();
    let mut c_points = Vec::new();
    for potential in table1_potentials() {
        let grid = ReferenceGrid::from_oracle(potential);
        let fitted = fit_bc(&grid)?;
        let lambda = fitted.lambda();
        println!(
            "{:>8} {:>10.5} {:>10.5} {:>12.4e} {:>10.5} {:>10.5}",
            potential.label(),
            fitted.b_opt,
            fitted.c_opt,
            fitted.chi,
            CoeffFamily::HyperbolaFit.b(lambda)?,
            CoeffFamily::HyperbolaFit.c(lambda)?,
        );
        b_points.push((lambda, fitted.b_opt));
        c_points.push((lambda, fitted.c_opt));
    }

    // hyperbolae through the exact endpoints, with the interior shape fitted
    let b_fit = fit_hyperbola_constrained(&b_points, (-1.0, 1.0), (2.0, 2.0))?;
    let c_fit = fit_hyperbola_constrained(&c_points, (-1.0, 1.0), (2.0, 1.5))?;
    println!("\nfitted hyperbolae (denominator intercept = 1):");
    println!(
        "  b(x) = ({:.5} x + {:.5}) / ({:.5} x + 1)",
        b_fit.p_num.0, b_fit.p_num.1, b_fit.p_den.0
    );
    println!(
        "  c(x) = ({:.5} x + {:.5}) / ({:.5} x + 1)",
        c_fit.p_num.0, c_fit.p_num.1, c_fit.p_den.0
    );

    // an unconstrained fit on exact rational samples recovers them
    let b4 = |x: f64| (41.0 * x + 86.0) / (13.0 * x + 58.0);
    let samples: Vec<(f64, f64)> = [-1.0, 0.0, 1.0, 2.0].iter().map(|&x| (x, b4(x))).collect();
    let exact = fit_hyperbola(&samples)?;
    println!(
        "\nexact-recovery check: 58 * fitted = ({:.3} x + {:.3}) / ({:.3} x + 58)",
        58.0 * exact.p_num.0,
        58.0 * exact.p_num.1,
        58.0 * exact.p_den.0
    );
    Ok(())
}
