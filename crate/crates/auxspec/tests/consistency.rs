//! Cross-module invariants: the generic field pipeline against every
//! closed form, scaling-law transports, oracle self-consistency, and the
//! dual error-bound routes.

mod common;

use auxspec::aft::{
    effective_potential, energy_with_field, k_function, minimize_field, DEFAULT_RHO_BRACKET,
};
use auxspec::closed_form::{ec_energy, eh_energy, log_energy, rho0_coulomb, rho0_harmonic};
use auxspec::oracle::{solve_radial, state_expectation, RadialProblem};
use auxspec::potentials::{dimensionless_prefactor, scale_energy, ScalingParams};
use auxspec::{
    DimensionlessPotential, GenericPotential, LogPotential, PowerLawPotential, QuantumNumbers,
    SolvableBase,
};
use common::Rng;

fn qn(n: u32, ell: u32) -> QuantumNumbers {
    QuantumNumbers::new(n, ell)
}

const LAMBDA_GRID: [f64; 8] = [-1.5, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0, 3.0];

#[test]
fn generic_pipeline_matches_harmonic_closed_forms() {
    let (m, a) = (2.0, 1.0);
    for lambda in LAMBDA_GRID {
        let pot = GenericPotential::power_law(a, lambda);
        let ppot = PowerLawPotential::new(m, a, lambda).unwrap();
        for n in 0..=3 {
            for ell in 0..=3 {
                let state = qn(n, ell);
                let sol =
                    minimize_field(&pot, SolvableBase::Harmonic, m, state, DEFAULT_RHO_BRACKET)
                        .unwrap();
                let want = eh_energy(&ppot, state).unwrap();
                assert!(
                    ((sol.energy - want) / want).abs() < 1e-8,
                    "lambda={lambda} ({n},{ell}): {} vs {want}",
                    sol.energy
                );
                let want_rho = rho0_harmonic(&ppot, state).unwrap();
                assert!(
                    ((sol.rho0 - want_rho) / want_rho).abs() < 1e-8,
                    "rho0 lambda={lambda} ({n},{ell})"
                );
                // the average point inverts the field map
                let k_back = k_function(&pot, SolvableBase::Harmonic, sol.r0).unwrap();
                assert!(((k_back - sol.rho0) / sol.rho0).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn generic_pipeline_matches_coulomb_closed_forms() {
    let (m, a) = (2.0, 1.0);
    for lambda in LAMBDA_GRID {
        let pot = GenericPotential::power_law(a, lambda);
        let ppot = PowerLawPotential::new(m, a, lambda).unwrap();
        for n in 0..=3 {
            for ell in 0..=3 {
                let state = qn(n, ell);
                let sol =
                    minimize_field(&pot, SolvableBase::Coulomb, m, state, DEFAULT_RHO_BRACKET)
                        .unwrap();
                let want = ec_energy(&ppot, state).unwrap();
                assert!(
                    ((sol.energy - want) / want).abs() < 1e-8,
                    "lambda={lambda} ({n},{ell}): {} vs {want}",
                    sol.energy
                );
                let want_rho = rho0_coulomb(&ppot, state).unwrap();
                assert!(
                    ((sol.rho0 - want_rho) / want_rho).abs() < 1e-8,
                    "rho0 lambda={lambda} ({n},{ell})"
                );
            }
        }
    }
}

#[test]
fn generic_pipeline_matches_log_closed_forms() {
    let (m, a, b) = (1.3, 0.8, 1.9);
    let pot = GenericPotential::logarithmic(a, b);
    let lpot = LogPotential::new(m, a, b).unwrap();
    for base in [SolvableBase::Harmonic, SolvableBase::Coulomb] {
        for n in 0..=3 {
            for ell in 0..=3 {
                let state = qn(n, ell);
                let sol = minimize_field(&pot, base, m, state, DEFAULT_RHO_BRACKET).unwrap();
                let want = log_energy(&lpot, state, base).unwrap();
                assert!(
                    (sol.energy - want).abs() < 1e-8 * want.abs().max(1.0),
                    "{base:?} ({n},{ell}): {} vs {want}",
                    sol.energy
                );
            }
        }
    }
}

#[test]
fn prefactor_route_matches_closed_form_tightly() {
    // the two algebraic routes agree to machine precision, well inside the
    // 1e-12 contract
    let mut rng = Rng::new(7);
    for _ in 0..50 {
        let m = rng.range(0.1, 4.0);
        let a = rng.range(0.1, 4.0);
        let mut lambda = rng.range(-1.9, 4.0);
        if lambda.abs() < 1e-3 {
            lambda = -1.2;
        }
        let pot = PowerLawPotential::new(m, a, lambda).unwrap();
        let pref = dimensionless_prefactor(&pot).unwrap();
        let state = qn(1, 2);
        let direct = eh_energy(&pot, state).unwrap();
        let via = pref * auxspec::closed_form::epsilon_harmonic(lambda, state).unwrap();
        assert!(((direct - via) / direct).abs() < 1e-12, "lambda={lambda}");
    }
}

#[test]
fn scale_transport_matches_power_law_route() {
    // with gamma alpha^lambda fixed, the scaling transport reproduces the
    // closed form of the target parameter set
    let mut rng = Rng::new(99);
    for trial in 0..10 {
        let lambda = rng.range(-1.5, 3.0);
        if lambda.abs() < 1e-3 {
            continue;
        }
        let from = ScalingParams {
            m: rng.range(0.2, 3.0),
            gamma: rng.range(0.2, 3.0),
            alpha: rng.range(0.2, 3.0),
        };
        let to_m = rng.range(0.2, 3.0);
        let to_alpha = rng.range(0.2, 3.0);
        let ratio = (to_alpha / from.alpha).powi(2) * (from.m / to_m);
        let to = ScalingParams {
            m: to_m,
            gamma: from.gamma * ratio,
            alpha: to_alpha,
        };

        let state = qn(1, 1);
        let pot_from =
            PowerLawPotential::new(from.m, from.gamma * from.alpha.powf(lambda), lambda).unwrap();
        let pot_to =
            PowerLawPotential::new(to.m, to.gamma * to.alpha.powf(lambda), lambda).unwrap();
        let e_from = eh_energy(&pot_from, state).unwrap();
        let transported = scale_energy(e_from, to, from).unwrap();
        let direct = eh_energy(&pot_to, state).unwrap();
        assert!(
            ((transported - direct) / direct).abs() < 1e-12,
            "trial {trial}: {transported} vs {direct}"
        );
    }
}

#[test]
fn effective_potential_tangency_both_bases() {
    let pot = GenericPotential::power_law(0.7, 0.5);
    for base in [SolvableBase::Harmonic, SolvableBase::Coulomb] {
        for i in 0..20 {
            let r = 0.1 * 10f64.powf(2.0 * f64::from(i) / 19.0);
            let rho = k_function(&pot, base, r).unwrap();
            let v_eff = effective_potential(&pot, base, r, rho).unwrap();
            let v = pot.value(r);
            assert!(
                (v_eff - v).abs() <= 1e-10 * v.abs().max(1e-10),
                "{base:?} r={r}: {v_eff} vs {v}"
            );
        }
    }
}

#[test]
fn stationarity_at_the_optimum() {
    let pot = GenericPotential::power_law(1.0, 1.0);
    for (base, state) in [
        (SolvableBase::Harmonic, qn(0, 0)),
        (SolvableBase::Harmonic, qn(2, 1)),
        (SolvableBase::Coulomb, qn(1, 2)),
    ] {
        let sol = minimize_field(&pot, base, 2.0, state, DEFAULT_RHO_BRACKET).unwrap();
        let h = 1e-6 * sol.rho0;
        let e_plus = energy_with_field(&pot, base, 2.0, state, sol.rho0 + h).unwrap();
        let e_minus = energy_with_field(&pot, base, 2.0, state, sol.rho0 - h).unwrap();
        let derivative = (e_plus - e_minus) / (2.0 * h);
        let scaled = (derivative * sol.rho0 / sol.energy).abs();
        assert!(scaled <= 1e-6, "{base:?} {state:?}: {scaled}");
    }
}

#[test]
fn oracle_ordering_and_mesh_invariance() {
    let potential = DimensionlessPotential::PowerLaw(1.0);
    for ell in 0..=2 {
        let problem = RadialProblem::auto(potential, ell, 3);
        let slice = solve_radial(&problem, 3).unwrap();
        for pair in slice.eigenvalues.windows(2) {
            assert!(pair[1] > pair[0]);
        }
        // a finer base mesh moves accepted values by less than the
        // reported convergence estimate
        let finer = solve_radial(&problem.mesh_size(3073), 3).unwrap();
        for n in 0..=3usize {
            let delta = (slice.eigenvalues[n] - finer.eigenvalues[n]).abs();
            assert!(
                delta <= slice.convergence_estimates[n].max(1e-12),
                "ell={ell} n={n}: delta {delta:.2e} vs estimate {:.2e}",
                slice.convergence_estimates[n]
            );
        }
    }
    // eigenvalues also grow with ell at fixed n for positive exponents
    let slices: Vec<_> = (0..=3u32)
        .map(|ell| {
            solve_radial(&RadialProblem::auto(potential, ell, 3), 3)
                .unwrap()
                .eigenvalues
        })
        .collect();
    for pair in slices.windows(2) {
        for (lower, higher) in pair[0].iter().zip(&pair[1]) {
            assert!(higher > lower);
        }
    }
}

#[test]
fn virial_identity_excited_state() {
    // 2<T> = <r V'> = <r> for the linear potential; <T> = eps - <r>
    let problem = RadialProblem::auto(DimensionlessPotential::PowerLaw(1.0), 1, 2);
    let slice = solve_radial(&problem, 2).unwrap();
    let mean_r = state_expectation(&problem, 2, |r| r).unwrap();
    let eps = slice.eigenvalues[2];
    assert!(
        ((eps - 1.5 * mean_r) / eps).abs() < 1e-4,
        "eps {eps}, <r> {mean_r}"
    );
}

#[test]
fn bound_inequality_holds_with_oracle_values() {
    // ground state, both bases, across the solvable-to-hard range
    for base in [SolvableBase::Harmonic, SolvableBase::Coulomb] {
        for lambda in [-1.0, 0.5, 1.0, 1.5, 2.0] {
            let problem = RadialProblem::auto(DimensionlessPotential::PowerLaw(lambda), 0, 0);
            let eps_num = solve_radial(&problem, 0).unwrap().eigenvalues[0];
            let report =
                auxspec::error_bounds::ground_state_report(base, lambda, Some(eps_num)).unwrap();
            let measured = report.measured_relative.unwrap();
            assert!(
                measured >= report.relative_bound - 1e-9,
                "{base:?} lambda={lambda}: {measured} < {}",
                report.relative_bound
            );
            assert!(report.bound_satisfied, "{base:?} lambda={lambda}");
        }
    }
}

#[test]
fn log_oracle_against_field_formulas() {
    // the two field closed forms straddle the numerical log spectrum the
    // same way the power-law ones do
    let problem = RadialProblem::auto(DimensionlessPotential::Log, 0, 2);
    let slice = solve_radial(&problem, 2).unwrap();
    let lpot = LogPotential::new(2.0, 1.0, 1.0).unwrap();
    for n in 0..=2u32 {
        let state = qn(n, 0);
        let harmonic = log_energy(&lpot, state, SolvableBase::Harmonic).unwrap();
        let coulomb = log_energy(&lpot, state, SolvableBase::Coulomb).unwrap();
        let eps = slice.eigenvalues[n as usize];
        assert!(
            coulomb < eps && eps < harmonic,
            "n={n}: {coulomb} < {eps} < {harmonic}"
        );
    }
}

#[test]
fn fitted_coefficients_land_in_the_family_band() {
    // at lambda = 1 the free optimum sits between the two hyperbola
    // families' predictions, and its chi beats both
    let grid = auxspec::fit::ReferenceGrid::from_oracle(DimensionlessPotential::PowerLaw(1.0));
    let fitted = auxspec::fit::fit_bc(&grid).unwrap();
    let b3 = auxspec::CoeffFamily::HyperbolaAiry.b(1.0).unwrap(); // 1.81380
    let b4 = auxspec::CoeffFamily::HyperbolaFit.b(1.0).unwrap(); // 127/71
    let c3 = auxspec::CoeffFamily::HyperbolaAiry.c(1.0).unwrap(); // 1.36035
    let c4 = auxspec::CoeffFamily::HyperbolaFit.c(1.0).unwrap(); // 1.375
    let margin = 0.01;
    assert!(
        fitted.b_opt > b4.min(b3) - margin && fitted.b_opt < b4.max(b3) + margin,
        "b_opt = {}",
        fitted.b_opt
    );
    assert!(
        fitted.c_opt > c3.min(c4) - margin && fitted.c_opt < c3.max(c4) + margin,
        "c_opt = {}",
        fitted.c_opt
    );
    assert!(fitted.chi <= 2.2e-3, "chi = {}", fitted.chi);
    for family in auxspec::CoeffFamily::ALL {
        let chi = auxspec::fit::chi_family(family, &grid).unwrap();
        assert!(fitted.chi <= chi + 1e-12, "{family:?}");
    }
}
