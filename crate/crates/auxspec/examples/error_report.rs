//! Ground-state accuracy reports: the measured offset against the converged
//! eigenvalue, the closed-form bound it must respect, and the sign that
//! decides whether the approximation lands above or below.
//!
//! Run with `cargo run --example error_report`.

use auxspec::error_bounds::ground_state_report;
use auxspec::oracle::{solve_radial, RadialProblem};
use auxspec::{DimensionlessPotential, SolvableBase};

fn main() -> auxspec::Result<()> {
    println!(
        "{:>8} {:>10} {:>12} {:>12} {:>10}",
        "lambda", "base", "measured", "bound", "holds"
    );
    for (base, lambda) in [
        (SolvableBase::Harmonic, 2.0),
        (SolvableBase::Harmonic, 1.0),
        (SolvableBase::Harmonic, 0.5),
        (SolvableBase::Harmonic, -1.0),
        (SolvableBase::Coulomb, -1.0),
        (SolvableBase::Coulomb, 0.5),
        (SolvableBase::Coulomb, 1.0),
        (SolvableBase::Coulomb, 2.0),
    ] {
        let problem = RadialProblem::auto(DimensionlessPotential::PowerLaw(lambda), 0, 0);
        let eps_num = solve_radial(&problem, 0)?.eigenvalues[0];
        let report = ground_state_report(base, lambda, Some(eps_num))?;
        println!(
            "{:>8} {:>10} {:>12.6} {:>12.6} {:>10}",
            lambda,
            base.label(),
            report.measured_relative.unwrap(),
            report.relative_bound,
            report.bound_satisfied
        );
    }
    println!("\npositive entries mean the field energy is an upper estimate;");
    println!("each base is exact (0 = 0) at its own potential.");
    Ok(())
}
