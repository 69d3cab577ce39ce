//! Converged eigenvalues of the dimensionless Hamiltonian q²/4 + sgn(λ)|x|^λ
//! with per-state convergence estimates, including the exactly solvable
//! exponents as a cross-check.
//!
//! Run with `cargo run --example oracle_spectrum`.

use auxspec::oracle::{solve_radial, state_expectation, RadialProblem};
use auxspec::{DimensionlessPotential, QuantumNumbers};

fn main() -> auxspec::Result<()> {
    for lambda in [0.5, 1.0, 2.0, -1.0] {
        let potential = DimensionlessPotential::PowerLaw(lambda);
        println!("lambda = {lambda}");
        for ell in 0..=1u32 {
            let problem = RadialProblem::auto(potential, ell, 3);
            let slice = solve_radial(&problem, 3)?;
            for n in 0..=3u32 {
                let qn = QuantumNumbers::new(n, ell);
                let exact = if lambda == 2.0 {
                    Some(qn.harmonic_combination())
                } else if lambda == -1.0 {
                    let nc = qn.coulomb_combination();
                    Some(-1.0 / (nc * nc))
                } else {
                    None
                };
                print!(
                    "  (n={n}, l={ell})  eps = {:>12.7}  conv = {:.1e}",
                    slice.eigenvalues[n as usize], slice.convergence_estimates[n as usize]
                );
                match exact {
                    Some(e) => println!("  exact = {e:>12.7}"),
                    None => println!(),
                }
            }
        }
        println!();
    }

    // virial check on the converged eigenvector: 2<T> = <r V'> for V = r
    let problem = RadialProblem::auto(DimensionlessPotential::PowerLaw(1.0), 0, 0);
    let eps = solve_radial(&problem, 0)?.eigenvalues[0];
    let mean_r = state_expectation(&problem, 0, |r| r)?;
    println!(
        "virial check at lambda = 1: eps = {eps:.6}, (3/2)<r> = {:.6}",
        1.5 * mean_r
    );
    Ok(())
}
