//! Scaling laws and the λ → 0 limit: how one dimensionless spectrum carries
//! all (m, a) dependence, how energies transport between parameter sets,
//! and how the logarithmic potential emerges from power laws.
//!
//! Run with `cargo run --example scaling_and_log_limit`.

use auxspec::closed_form::{eh_energy, epsilon_harmonic, log_energy, power_limit_to_log};
use auxspec::potentials::{dimensionless_prefactor, log_mass_shift, scale_energy, ScalingParams};
use auxspec::{LogPotential, PowerLawPotential, QuantumNumbers, SolvableBase};

fn main() -> auxspec::Result<()> {
    let qn = QuantumNumbers::new(1, 1);

    // prefactor route vs direct closed form
    println!("prefactor route for V = a r^0.7:");
    for (m, a) in [(1.0, 1.0), (3.5, 0.2), (0.4, 7.0)] {
        let pot = PowerLawPotential::new(m, a, 0.7)?;
        let direct = eh_energy(&pot, qn)?;
        let scaled = dimensionless_prefactor(&pot)? * epsilon_harmonic(0.7, qn)?;
        println!("  m = {m:<4} a = {a:<4} direct = {direct:.10}  via prefactor = {scaled:.10}");
    }

    // transporting an energy between two related parameter sets
    let from = ScalingParams {
        m: 1.0,
        gamma: 1.0,
        alpha: 1.0,
    };
    let ratio = (2.0_f64 / 1.0).powi(2) * (1.0 / 3.0);
    let to = ScalingParams {
        m: 3.0,
        gamma: ratio,
        alpha: 2.0,
    };
    let pot_from = PowerLawPotential::new(from.m, from.gamma * from.alpha.powf(0.7), 0.7)?;
    let e_from = eh_energy(&pot_from, qn)?;
    let e_to = scale_energy(e_from, to, from)?;
    let pot_to = PowerLawPotential::new(to.m, to.gamma * to.alpha.powf(0.7), 0.7)?;
    println!(
        "\nscale transport: E' = {:.10}, direct evaluation = {:.10}",
        e_to,
        eh_energy(&pot_to, qn)?
    );

    // the logarithmic spectrum only shifts under mass changes
    let log_pot = LogPotential::new(1.0, 1.0, 1.0)?;
    let e1 = log_energy(&log_pot, qn, SolvableBase::Harmonic)?;
    let heavy = LogPotential::new(5.0, 1.0, 1.0)?;
    let e5 = log_energy(&heavy, qn, SolvableBase::Harmonic)?;
    println!(
        "\nlog potential mass property: E(5m) = {:.10}, E(m) - (a/2) ln 5 = {:.10}",
        e5,
        log_mass_shift(e1, 1.0, 5.0)?
    );

    // a power law with a tiny exponent looks logarithmic
    println!("\npower-law regularization of ln(b r):");
    let target = log_energy(&log_pot, qn, SolvableBase::Harmonic)?;
    for lambda in [0.1, 0.01, 1e-4, 1e-6] {
        let e = power_limit_to_log(lambda, &log_pot, qn, SolvableBase::Harmonic)?;
        println!("  lambda = {lambda:<8} E = {e:.8}  (log form: {target:.8})");
    }
    Ok(())
}
