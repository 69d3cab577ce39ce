//! Closed-form spectra for a linear confining potential, side by side:
//! the two field-based formulas, the four improved families, the
//! semiclassical baseline and the converged numerical values.
//!
//! Run with `cargo run --example energy_formulas`.

use auxspec::closed_form::{epsilon_coulomb, epsilon_harmonic, improved_epsilon, wkb_epsilon};
use auxspec::oracle::{solve_radial, RadialProblem};
use auxspec::{CoeffFamily, DimensionlessPotential, QuantumNumbers};

fn main() -> auxspec::Result<()> {
    let lambda = 1.0;
    println!("dimensionless eigenvalues for V = r (lambda = {lambda})\n");
    println!(
        "{:>3} {:>3} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "n", "l", "harmonic", "coulomb", "bc3", "bc4", "wkb", "numeric"
    );

    for ell in 0..=2u32 {
        let problem = RadialProblem::auto(DimensionlessPotential::PowerLaw(lambda), ell, 2);
        let slice = solve_radial(&problem, 2)?;
        for n in 0..=2u32 {
            let qn = QuantumNumbers::new(n, ell);
            println!(
                "{:>3} {:>3} {:>10.5} {:>10.5} {:>10.5} {:>10.5} {:>10.5} {:>10.5}",
                n,
                ell,
                epsilon_harmonic(lambda, qn)?,
                epsilon_coulomb(lambda, qn)?,
                improved_epsilon(lambda, qn, CoeffFamily::HyperbolaAiry)?,
                improved_epsilon(lambda, qn, CoeffFamily::HyperbolaFit)?,
                wkb_epsilon(lambda, qn)?,
                slice.eigenvalues[n as usize],
            );
        }
    }

    println!("\nthe harmonic-base formula overshoots, the Coulomb-base one");
    println!("undershoots, and the fitted hyperbola family (bc4) lands within");
    println!("a few parts in 10^3 of the numerical spectrum.");
    Ok(())
}
