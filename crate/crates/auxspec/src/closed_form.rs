//! Closed-form energy spectra: the auxiliary-field results for power-law
//! and logarithmic potentials under both bases, the dimensionless
//! approximation, the improved formula with its coefficient families, the
//! semiclassical (WKB) baseline and the Airy-zero asymptotic.
//!
//! The workhorse expression is
//!
//! ```text
//! ε(λ, N) = ((2+λ)/(2λ)) |λ|^{2/(λ+2)} 2^{-λ/(λ+2)} N^{2λ/(λ+2)}
//! ```
//!
//! with N = 2n+ℓ+3/2 (harmonic memory), N = n+ℓ+1 (Coulomb memory) or
//! N = b(λ)n + ℓ + c(λ) for the improved families. It is exact at λ = 2
//! and λ = -1, which pins b(-1) = c(-1) = 1, b(2) = 2, c(2) = 3/2 for
//! every family.

use crate::aft::SolvableBase;
use crate::error::{Error, Result};
use crate::numerics::gamma::gamma;
use crate::potentials::{dimensionless_prefactor, LogPotential, PowerLawPotential, QuantumNumbers};
use std::f64::consts::{E, PI};

/// Largest exponent accepted by the improved and WKB formulas; the
/// approximation quality degrades quickly past λ ≈ 4.
pub const LAMBDA_MAX: f64 = 6.0;

/// Interval on which the improved-formula coefficients were calibrated;
/// outside it results are extrapolations.
pub const CALIBRATED_RANGE: (f64, f64) = (-1.5, 4.0);

/// True when the improved formula is evaluated outside its calibrated range.
pub fn is_extrapolation(lambda: f64) -> bool {
    lambda < CALIBRATED_RANGE.0 || lambda > CALIBRATED_RANGE.1
}

fn sigma() -> f64 {
    3.0_f64.sqrt() * PI
}

/// Coefficient families (b(λ), c(λ)) for the improved energy formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffFamily {
    /// Piecewise-exact pair: (2, 3/2) for λ > 0, (1, 1) for -2 < λ < 0;
    /// undefined at λ = 0.
    ExactPair,
    /// Linear interpolation b = (λ+4)/3, c = (λ+7)/6.
    Linear,
    /// Hyperbolae anchored at the exact endpoints and the Airy-zero point
    /// b(1) = π/√3, c(1) = √3π/4.
    HyperbolaAiry,
    /// Hyperbolae with small integer coefficients fitted to numerical
    /// spectra: b = (41λ+86)/(13λ+58), c = (5λ+17)/(2λ+14).
    HyperbolaFit,
}

impl CoeffFamily {
    pub const ALL: [CoeffFamily; 4] = [
        CoeffFamily::ExactPair,
        CoeffFamily::Linear,
        CoeffFamily::HyperbolaAiry,
        CoeffFamily::HyperbolaFit,
    ];

    /// Families defined at λ = 0 (all but the piecewise pair).
    pub const CONTINUOUS: [CoeffFamily; 3] = [
        CoeffFamily::Linear,
        CoeffFamily::HyperbolaAiry,
        CoeffFamily::HyperbolaFit,
    ];

    /// Short tag used by the command-line interface and the tables.
    pub fn label(&self) -> &'static str {
        match self {
            CoeffFamily::ExactPair => "bc1",
            CoeffFamily::Linear => "bc2",
            CoeffFamily::HyperbolaAiry => "bc3",
            CoeffFamily::HyperbolaFit => "bc4",
        }
    }

    pub fn coefficients(&self, lambda: f64) -> Result<(f64, f64)> {
        Ok((self.b(lambda)?, self.c(lambda)?))
    }

    pub fn b(&self, lambda: f64) -> Result<f64> {
        match self {
            CoeffFamily::ExactPair => {
                if lambda > 0.0 {
                    Ok(2.0)
                } else if lambda > -2.0 && lambda < 0.0 {
                    Ok(1.0)
                } else {
                    Err(Error::FamilyUndefined {
                        family: self.label(),
                        lambda,
                    })
                }
            }
            CoeffFamily::Linear => Ok((lambda + 4.0) / 3.0),
            CoeffFamily::HyperbolaAiry => {
                let s = sigma();
                rational(
                    lambda,
                    4.0 * s - 18.0,
                    18.0 - 2.0 * s,
                    3.0 * s - 15.0,
                    21.0 - 3.0 * s,
                )
                .ok_or(Error::FamilyUndefined {
                    family: self.label(),
                    lambda,
                })
            }
            CoeffFamily::HyperbolaFit => {
                rational(lambda, 41.0, 86.0, 13.0, 58.0).ok_or(Error::FamilyUndefined {
                    family: self.label(),
                    lambda,
                })
            }
        }
    }

    pub fn c(&self, lambda: f64) -> Result<f64> {
        match self {
            CoeffFamily::ExactPair => {
                if lambda > 0.0 {
                    Ok(1.5)
                } else if lambda > -2.0 && lambda < 0.0 {
                    Ok(1.0)
                } else {
                    Err(Error::FamilyUndefined {
                        family: self.label(),
                        lambda,
                    })
                }
            }
            CoeffFamily::Linear => Ok((lambda + 7.0) / 6.0),
            CoeffFamily::HyperbolaAiry => {
                let s = sigma();
                rational(
                    lambda,
                    7.0 * s - 36.0,
                    36.0 - 5.0 * s,
                    6.0 * s - 32.0,
                    40.0 - 6.0 * s,
                )
                .ok_or(Error::FamilyUndefined {
                    family: self.label(),
                    lambda,
                })
            }
            CoeffFamily::HyperbolaFit => {
                rational(lambda, 5.0, 17.0, 2.0, 14.0).ok_or(Error::FamilyUndefined {
                    family: self.label(),
                    lambda,
                })
            }
        }
    }
}

fn rational(x: f64, p1: f64, p2: f64, q1: f64, q2: f64) -> Option<f64> {
    let den = q1 * x + q2;
    if den.abs() < 1e-12 {
        None
    } else {
        Some((p1 * x + p2) / den)
    }
}

fn check_power_exponent(lambda: f64) -> Result<()> {
    if lambda == -2.0 {
        return Err(Error::SingularExponent { lambda });
    }
    if lambda < -2.0 {
        return Err(Error::NoBoundState { lambda });
    }
    if lambda == 0.0 {
        return Err(Error::Domain(
            "lambda = 0 is the logarithmic case; use the log-potential operations".into(),
        ));
    }
    Ok(())
}

/// Auxiliary-field energy with the harmonic base:
/// E = ((2+λ)/(2λ)) (a|λ|)^{2/(λ+2)} m^{-λ/(λ+2)} (2n+ℓ+3/2)^{2λ/(λ+2)}.
pub fn eh_energy(pot: &PowerLawPotential, qn: QuantumNumbers) -> Result<f64> {
    pot.check_bound_spectrum()?;
    check_power_exponent(pot.lambda)?;
    Ok(power_energy(pot, qn.harmonic_combination()))
}

/// Auxiliary-field energy with the Coulomb base: the same expression with
/// (2n+ℓ+3/2) replaced by (n+ℓ+1).
pub fn ec_energy(pot: &PowerLawPotential, qn: QuantumNumbers) -> Result<f64> {
    pot.check_bound_spectrum()?;
    if pot.lambda == -1.0 {
        // exact Coulomb case, evaluated directly to avoid a 0/0 exponent
        let n_c = qn.coulomb_combination();
        return Ok(-pot.m * pot.a * pot.a / (2.0 * n_c * n_c));
    }
    check_power_exponent(pot.lambda)?;
    Ok(power_energy(pot, qn.coulomb_combination()))
}

fn power_energy(pot: &PowerLawPotential, n_comb: f64) -> f64 {
    let l = pot.lambda;
    ((2.0 + l) / (2.0 * l))
        * (pot.a * l.abs()).powf(2.0 / (l + 2.0))
        * pot.m.powf(-l / (l + 2.0))
        * n_comb.powf(2.0 * l / (l + 2.0))
}

/// Optimal field for the harmonic base:
/// ρ₀ = (1/2) [(2n+ℓ+3/2)/√m]^{2(λ-2)/(λ+2)} (a|λ|)^{4/(λ+2)}.
pub fn rho0_harmonic(pot: &PowerLawPotential, qn: QuantumNumbers) -> Result<f64> {
    pot.check_bound_spectrum()?;
    check_power_exponent(pot.lambda)?;
    let l = pot.lambda;
    Ok(0.5
        * (qn.harmonic_combination() / pot.m.sqrt()).powf(2.0 * (l - 2.0) / (l + 2.0))
        * (pot.a * l.abs()).powf(4.0 / (l + 2.0)))
}

/// Optimal field for the Coulomb base:
/// ρ₀ = [(1/m) (a|λ|)^{1/(λ+1)} (n+ℓ+1)²]^{(λ+1)/(λ+2)}.
pub fn rho0_coulomb(pot: &PowerLawPotential, qn: QuantumNumbers) -> Result<f64> {
    pot.check_bound_spectrum()?;
    if pot.lambda == -1.0 {
        // K(r) = a identically; the field equals the coupling
        return Ok(pot.a);
    }
    check_power_exponent(pot.lambda)?;
    let l = pot.lambda;
    let n_c = qn.coulomb_combination();
    Ok(((pot.a * l.abs()).powf(1.0 / (l + 1.0)) * n_c * n_c / pot.m).powf((l + 1.0) / (l + 2.0)))
}

/// Logarithmic-potential energy a ln(√(e/(m a)) b N) with N set by the base.
pub fn log_energy(pot: &LogPotential, qn: QuantumNumbers, base: SolvableBase) -> Result<f64> {
    let n_comb = base.combination(qn);
    Ok(pot.a * ((E / (pot.m * pot.a)).sqrt() * pot.b * n_comb).ln())
}

/// Dimensionless approximation ε(λ, N) for an arbitrary principal
/// combination N > 0.
pub fn epsilon_app(lambda: f64, n_comb: f64) -> Result<f64> {
    check_power_exponent(lambda)?;
    if !(n_comb > 0.0) {
        return Err(Error::Domain(format!(
            "principal combination must be positive, got {n_comb}"
        )));
    }
    Ok(((2.0 + lambda) / (2.0 * lambda))
        * lambda.abs().powf(2.0 / (lambda + 2.0))
        * 2.0_f64.powf(-lambda / (lambda + 2.0))
        * n_comb.powf(2.0 * lambda / (lambda + 2.0)))
}

/// ε with the harmonic memory N = 2n+ℓ+3/2.
pub fn epsilon_harmonic(lambda: f64, qn: QuantumNumbers) -> Result<f64> {
    epsilon_app(lambda, qn.harmonic_combination())
}

/// ε with the Coulomb memory N = n+ℓ+1.
pub fn epsilon_coulomb(lambda: f64, qn: QuantumNumbers) -> Result<f64> {
    if lambda == -1.0 {
        let n_c = qn.coulomb_combination();
        return Ok(-1.0 / (n_c * n_c));
    }
    epsilon_app(lambda, qn.coulomb_combination())
}

/// Improved dimensionless spectrum ε(λ, b(λ)n + ℓ + c(λ)).
pub fn improved_epsilon(lambda: f64, qn: QuantumNumbers, family: CoeffFamily) -> Result<f64> {
    if lambda > LAMBDA_MAX {
        return Err(Error::Domain(format!(
            "lambda = {lambda} beyond the supported range (-2, {LAMBDA_MAX}]"
        )));
    }
    if lambda == -1.0 {
        // every family passes through (1, 1): exact Coulomb result
        let n_c = qn.coulomb_combination();
        return Ok(-1.0 / (n_c * n_c));
    }
    let (b, c) = family.coefficients(lambda)?;
    epsilon_app(lambda, b * f64::from(qn.n) + f64::from(qn.ell) + c)
}

/// Improved spectrum for the logarithmic case:
/// ε = ln[√(e/2) (b(0)n + ℓ + c(0))].
pub fn improved_log_epsilon(qn: QuantumNumbers, family: CoeffFamily) -> Result<f64> {
    let (b, c) = family.coefficients(0.0)?;
    Ok(((E / 2.0).sqrt() * (b * f64::from(qn.n) + f64::from(qn.ell) + c)).ln())
}

/// Physical improved energy for a power-law potential via the scaling
/// prefactor.
pub fn improved_energy(
    pot: &PowerLawPotential,
    qn: QuantumNumbers,
    family: CoeffFamily,
) -> Result<f64> {
    pot.check_bound_spectrum()?;
    Ok(dimensionless_prefactor(pot)? * improved_epsilon(pot.lambda, qn, family)?)
}

/// Physical improved energy for a logarithmic potential:
/// E = a ε + a ln(b √(2/(m a))).
pub fn improved_log_energy(
    pot: &LogPotential,
    qn: QuantumNumbers,
    family: CoeffFamily,
) -> Result<f64> {
    let eps = improved_log_epsilon(qn, family)?;
    Ok(log_offset(pot) + pot.a * eps)
}

/// Offset mapping a dimensionless log-potential eigenvalue to the physical
/// energy: E = a ε + a ln(b √(2/(m a))).
pub fn log_offset(pot: &LogPotential) -> f64 {
    pot.a * (pot.b * (2.0 / (pot.m * pot.a)).sqrt()).ln()
}

/// Semiclassical two-branch spectrum.
///
/// Positive exponents use
/// ε = [ λ√π Γ(3/2 + 1/λ) / (2Γ(1/λ)) (2n+ℓ+3/2) ]^{2λ/(λ+2)};
/// negative ones flip the sign and replace the principal factor with
/// 2n + 2 - (1+λ-2ℓ)/(2+λ).
pub fn wkb_epsilon(lambda: f64, qn: QuantumNumbers) -> Result<f64> {
    if lambda == 0.0 {
        return Err(Error::Domain(
            "the semiclassical formula has no logarithmic branch".into(),
        ));
    }
    if lambda == -2.0 {
        return Err(Error::SingularExponent { lambda });
    }
    if lambda < -2.0 {
        return Err(Error::NoBoundState { lambda });
    }
    if lambda > LAMBDA_MAX {
        return Err(Error::Domain(format!(
            "lambda = {lambda} beyond the supported range (-2, {LAMBDA_MAX}]"
        )));
    }
    let exponent = 2.0 * lambda / (lambda + 2.0);
    if lambda > 0.0 {
        let pref = lambda * PI.sqrt() * gamma(1.5 + 1.0 / lambda) / (2.0 * gamma(1.0 / lambda));
        Ok((pref * qn.harmonic_combination()).powf(exponent))
    } else {
        let pref = lambda.abs() * PI.sqrt() * gamma(1.0 - 1.0 / lambda)
            / (2.0 * gamma(-0.5 - 1.0 / lambda));
        let n_factor =
            2.0 * f64::from(qn.n) + 2.0 - (1.0 + lambda - 2.0 * f64::from(qn.ell)) / (2.0 + lambda);
        Ok(-((pref * n_factor).powf(exponent)))
    }
}

/// ℓ = 0 asymptotic for the linear potential from the Airy-function zeros:
/// ε = (3π/4)^{2/3} (n + 3/4)^{2/3}.
pub fn airy_epsilon(n: u32) -> f64 {
    (3.0 * PI / 4.0).powf(2.0 / 3.0) * (f64::from(n) + 0.75).powf(2.0 / 3.0)
}

/// Energy of the power-law regularization of the logarithmic potential,
/// (a/λ)[(b r)^λ - 1]: the power-law closed form for coupling a b^λ/|λ|
/// minus the constant a/λ. Converges to [`log_energy`] as λ → 0.
pub fn power_limit_to_log(
    lambda: f64,
    pot: &LogPotential,
    qn: QuantumNumbers,
    base: SolvableBase,
) -> Result<f64> {
    if lambda == 0.0 {
        return Err(Error::Domain(
            "lambda = 0: evaluate log_energy directly".into(),
        ));
    }
    if lambda.abs() > 0.1 {
        return Err(Error::Domain(format!(
            "limit expansion is restricted to |lambda| <= 0.1, got {lambda}"
        )));
    }
    let n_comb = base.combination(qn);
    let l = lambda;
    let power_part = ((2.0 + l) / (2.0 * l))
        * (pot.a * pot.b.powf(l)).powf(2.0 / (l + 2.0))
        * pot.m.powf(-l / (l + 2.0))
        * n_comb.powf(2.0 * l / (l + 2.0));
    Ok(power_part - pot.a / l)
}
