//! Potential types, the dimensionless reduction and the scaling laws that
//! map dimensionless eigenvalues to physical energies.
//!
//! Power-law problems H = p²/2m + sgn(λ) a r^λ carry all of their spectral
//! content in the eigenvalues ε(λ, n, ℓ) of the normalized Hamiltonian
//! H = q²/4 + sgn(λ)|x|^λ (the m = 2, a = 1 choice); physical energies
//! follow from E = 2^{λ/(λ+2)} a^{2/(λ+2)} m^{-λ/(λ+2)} ε.

use crate::error::{Error, Result};

/// Radial and orbital quantum numbers (n, ℓ) indexing a bound state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub n: u32,
    pub ell: u32,
}

impl QuantumNumbers {
    pub fn new(n: u32, ell: u32) -> Self {
        Self { n, ell }
    }

    /// The harmonic-memory principal combination 2n + ℓ + 3/2.
    pub fn harmonic_combination(&self) -> f64 {
        2.0 * f64::from(self.n) + f64::from(self.ell) + 1.5
    }

    /// The Coulomb-memory principal combination n + ℓ + 1.
    pub fn coulomb_combination(&self) -> f64 {
        f64::from(self.n) + f64::from(self.ell) + 1.0
    }
}

/// Central potential sgn(λ) a r^λ for a particle of mass `m`.
///
/// `lambda <= -2` is representable (the numerical machinery uses such values
/// for negative-result tests) but every energy operation rejects it: with a
/// singularity that strong the spectrum is unbounded from below.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawPotential {
    pub m: f64,
    pub a: f64,
    pub lambda: f64,
}

impl PowerLawPotential {
    pub fn new(m: f64, a: f64, lambda: f64) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::Domain(format!("mass must be positive, got {m}")));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::Domain(format!("coupling must be positive, got {a}")));
        }
        if lambda == 0.0 || !lambda.is_finite() {
            return Err(Error::Domain(format!(
                "exponent must be a nonzero finite real, got {lambda}; \
                 the logarithmic case is a separate type"
            )));
        }
        Ok(Self { m, a, lambda })
    }

    /// sgn(λ) a r^λ.
    pub fn value(&self, r: f64) -> f64 {
        self.lambda.signum() * self.a * r.powf(self.lambda)
    }

    /// Rejects exponents for which no bound spectrum exists.
    pub(crate) fn check_bound_spectrum(&self) -> Result<()> {
        if self.lambda == -2.0 {
            return Err(Error::SingularExponent {
                lambda: self.lambda,
            });
        }
        if self.lambda < -2.0 {
            return Err(Error::NoBoundState {
                lambda: self.lambda,
            });
        }
        Ok(())
    }
}

/// Logarithmic potential a ln(b r), a > 0, b > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogPotential {
    pub m: f64,
    pub a: f64,
    pub b: f64,
}

impl LogPotential {
    pub fn new(m: f64, a: f64, b: f64) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::Domain(format!("mass must be positive, got {m}")));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::Domain(format!("strength must be positive, got {a}")));
        }
        if !(b > 0.0) || !b.is_finite() {
            return Err(Error::Domain(format!(
                "inverse length must be positive, got {b}"
            )));
        }
        Ok(Self { m, a, b })
    }

    pub fn value(&self, r: f64) -> f64 {
        self.a * (self.b * r).ln()
    }
}

/// Potential entering the dimensionless radial Hamiltonian q²/4 + V(|x|).
///
/// The logarithmic case is a distinct variant rather than λ = 0 of the
/// power-law family: the power-law energy formulas are singular there, and
/// the λ → 0 limit is exposed as an explicit operation instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DimensionlessPotential {
    PowerLaw(f64),
    Log,
}

impl DimensionlessPotential {
    pub fn value(&self, r: f64) -> f64 {
        match self {
            DimensionlessPotential::PowerLaw(lambda) => lambda.signum() * r.powf(*lambda),
            DimensionlessPotential::Log => r.ln(),
        }
    }

    /// λ for the power-law case, 0 for the logarithmic marker.
    pub fn lambda_or_zero(&self) -> f64 {
        match self {
            DimensionlessPotential::PowerLaw(lambda) => *lambda,
            DimensionlessPotential::Log => 0.0,
        }
    }

    pub fn is_log(&self) -> bool {
        matches!(self, DimensionlessPotential::Log)
    }

    pub fn label(&self) -> String {
        match self {
            DimensionlessPotential::PowerLaw(lambda) => format!("{lambda}"),
            DimensionlessPotential::Log => "log".to_string(),
        }
    }
}

/// One (n, ℓ) state of the dimensionless Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessState {
    pub potential: DimensionlessPotential,
    pub qn: QuantumNumbers,
}

/// Parameters (m, γ, α) of the scaled problem p²/2m + γ V(α r).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingParams {
    pub m: f64,
    pub gamma: f64,
    pub alpha: f64,
}

pub const DEFAULT_SCALING_TOLERANCE: f64 = 1e-12;

/// Factor mapping a dimensionless eigenvalue ε(λ, n, ℓ) to the physical
/// energy: E = 2^{λ/(λ+2)} a^{2/(λ+2)} m^{-λ/(λ+2)} ε.
pub fn dimensionless_prefactor(pot: &PowerLawPotential) -> Result<f64> {
    let l = pot.lambda;
    if l == -2.0 {
        return Err(Error::SingularExponent { lambda: l });
    }
    Ok(2.0_f64.powf(l / (l + 2.0)) * pot.a.powf(2.0 / (l + 2.0)) * pot.m.powf(-l / (l + 2.0)))
}

/// Transport a reference energy between two parameter sets related by the
/// scaling constraint γ = γ' (α/α')² (m'/m); returns (α/α')² (m'/m) E_ref.
pub fn scale_energy(e_ref: f64, to: ScalingParams, from: ScalingParams) -> Result<f64> {
    scale_energy_with_tolerance(e_ref, to, from, DEFAULT_SCALING_TOLERANCE)
}

/// As [`scale_energy`] with a caller-chosen tolerance on the constraint;
/// user-supplied parameters may carry measurement noise.
pub fn scale_energy_with_tolerance(
    e_ref: f64,
    to: ScalingParams,
    from: ScalingParams,
    rel_tol: f64,
) -> Result<f64> {
    for (name, v) in [
        ("m", to.m),
        ("m'", from.m),
        ("alpha", to.alpha),
        ("alpha'", from.alpha),
    ] {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::Domain(format!("{name} must be positive, got {v}")));
        }
    }
    let ratio = (to.alpha / from.alpha).powi(2) * (from.m / to.m);
    let implied_gamma = from.gamma * ratio;
    let scale = to.gamma.abs().max(implied_gamma.abs()).max(1e-300);
    let residual = (to.gamma - implied_gamma).abs() / scale;
    if residual > rel_tol {
        return Err(Error::ScalingViolation {
            residual,
            tolerance: rel_tol,
        });
    }
    Ok(ratio * e_ref)
}

/// Mass-rescaling property of the logarithmic spectrum:
/// E(α m) = E(m) - (a/2) ln α, independent of every other parameter.
pub fn log_mass_shift(e: f64, a: f64, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Domain(format!(
            "mass ratio must be positive, got {alpha}"
        )));
    }
    if !(a > 0.0) {
        return Err(Error::Domain(format!("strength must be positive, got {a}")));
    }
    Ok(e - 0.5 * a * alpha.ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefactor_normalization_point() {
        // m = 2, a = 1 is the dimensionless normalization: factor 1
        let pot = PowerLawPotential::new(2.0, 1.0, 1.0).unwrap();
        assert!((dimensionless_prefactor(&pot).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn prefactor_harmonic_and_coulomb_points() {
        // lambda = 2, m = a = 1: 2^{1/2}
        let pot = PowerLawPotential::new(1.0, 1.0, 2.0).unwrap();
        let got = dimensionless_prefactor(&pot).unwrap();
        assert!((got - 2.0_f64.sqrt()).abs() < 1e-15);

        // lambda = -1, m = a = 1: 2^{-1}; eps(-1,0,0) = -1 maps to -1/2
        let pot = PowerLawPotential::new(1.0, 1.0, -1.0).unwrap();
        let got = dimensionless_prefactor(&pot).unwrap();
        assert!((got - 0.5).abs() < 1e-15);
        assert!((-got - (-0.5)).abs() < 1e-15);
    }

    #[test]
    fn prefactor_rejects_singular_exponent() {
        let pot = PowerLawPotential::new(1.0, 1.0, -2.0).unwrap();
        assert!(matches!(
            dimensionless_prefactor(&pot),
            Err(Error::SingularExponent { .. })
        ));
    }

    #[test]
    fn scale_energy_identity() {
        let p = ScalingParams {
            m: 1.3,
            gamma: 0.7,
            alpha: 2.1,
        };
        assert_eq!(scale_energy(5.5, p, p).unwrap(), 5.5);
    }

    #[test]
    fn scale_energy_half_mass() {
        // m = 2m', alpha = alpha', gamma = gamma'/2 -> E = E_ref/2
        let from = ScalingParams {
            m: 1.0,
            gamma: 1.0,
            alpha: 1.0,
        };
        let to = ScalingParams {
            m: 2.0,
            gamma: 0.5,
            alpha: 1.0,
        };
        assert!((scale_energy(3.0, to, from).unwrap() - 1.5).abs() < 1e-15);
    }

    #[test]
    fn scale_energy_rejects_unrelated_sets() {
        let from = ScalingParams {
            m: 1.0,
            gamma: 1.0,
            alpha: 1.0,
        };
        let to = ScalingParams {
            m: 2.0,
            gamma: 1.0,
            alpha: 1.0,
        };
        match scale_energy(3.0, to, from) {
            Err(Error::ScalingViolation { residual, .. }) => assert!(residual > 0.4),
            other => panic!("expected scaling violation, got {other:?}"),
        }
    }

    #[test]
    fn scale_energy_is_involutive() {
        let from = ScalingParams {
            m: 0.8,
            gamma: 1.9,
            alpha: 0.4,
        };
        let ratio = (2.5_f64 / 0.4).powi(2) * (0.8 / 1.7);
        let to = ScalingParams {
            m: 1.7,
            gamma: 1.9 * ratio,
            alpha: 2.5,
        };
        let e = 2.345_678;
        let out = scale_energy(e, to, from).unwrap();
        let back = scale_energy(out, from, to).unwrap();
        assert!(((back - e) / e).abs() < 1e-12);
    }

    #[test]
    fn log_mass_shift_basics() {
        assert_eq!(log_mass_shift(2.5, 1.0, 1.0).unwrap(), 2.5);
        let shifted = log_mass_shift(2.5, 2.0, std::f64::consts::E).unwrap();
        assert!((shifted - 1.5).abs() < 1e-15);
        assert!(log_mass_shift(1.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn log_mass_shift_group_property() {
        let (a, e) = (1.7, -0.3);
        let twice = log_mass_shift(log_mass_shift(e, a, 1.9).unwrap(), a, 3.4).unwrap();
        let once = log_mass_shift(e, a, 1.9 * 3.4).unwrap();
        assert!((twice - once).abs() < 1e-14);
    }

    #[test]
    fn constructors_validate() {
        assert!(PowerLawPotential::new(0.0, 1.0, 1.0).is_err());
        assert!(PowerLawPotential::new(1.0, -1.0, 1.0).is_err());
        assert!(PowerLawPotential::new(1.0, 1.0, 0.0).is_err());
        // lambda <= -2 is constructible; only energy evaluation rejects it
        let p = PowerLawPotential::new(1.0, 1.0, -2.5).unwrap();
        assert!(p.check_bound_spectrum().is_err());
        assert!(LogPotential::new(1.0, 1.0, 0.0).is_err());
    }
}
