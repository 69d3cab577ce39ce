//! The generic auxiliary-field algorithm for an arbitrary smooth central
//! potential V(r) over an analytically solvable base P(r).
//!
//! Three steps:
//! 1. build K(r) = V'(r)/P'(r) and invert it,
//! 2. form the field-dependent energy
//!    E(ρ) = E_A(ρ) + V(K⁻¹(ρ)) - ρ P(K⁻¹(ρ)),
//! 3. minimize E over ρ; the optimum ρ₀ and the average point r₀ = K⁻¹(ρ₀)
//!    define the approximate spectrum.
//!
//! When V is proportional to P (up to an additive constant) the field K is
//! constant, the minimization is vacuous and the result is exact; the
//! routines below detect that case and short-circuit it.

use crate::error::{Error, Result};
use crate::numerics::roots;
use crate::potentials::QuantumNumbers;

/// Choice of analytically solvable base potential P(r).
///
/// Harmonic carries the oscillator spectrum E_A(ρ) = √(2ρ/m)(2n+ℓ+3/2);
/// Coulomb carries E_A(ρ) = -mρ²/(2(n+ℓ+1)²) for the attractive tail -ρ/r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolvableBase {
    Harmonic,
    Coulomb,
}

impl SolvableBase {
    /// P(r).
    pub fn p(&self, r: f64) -> f64 {
        match self {
            SolvableBase::Harmonic => r * r,
            SolvableBase::Coulomb => -1.0 / r,
        }
    }

    /// P'(r); never zero on r > 0 for either base.
    pub fn p_prime(&self, r: f64) -> f64 {
        match self {
            SolvableBase::Harmonic => 2.0 * r,
            SolvableBase::Coulomb => 1.0 / (r * r),
        }
    }

    /// Analytic spectrum of T + ρ P(r) at field value ρ > 0.
    pub fn analytic_energy(&self, m: f64, qn: QuantumNumbers, rho: f64) -> f64 {
        match self {
            SolvableBase::Harmonic => (2.0 * rho / m).sqrt() * qn.harmonic_combination(),
            SolvableBase::Coulomb => {
                let n_c = qn.coulomb_combination();
                -m * rho * rho / (2.0 * n_c * n_c)
            }
        }
    }

    /// Principal combination remembered from the base: 2n+ℓ+3/2 or n+ℓ+1.
    pub fn combination(&self, qn: QuantumNumbers) -> f64 {
        match self {
            SolvableBase::Harmonic => qn.harmonic_combination(),
            SolvableBase::Coulomb => qn.coulomb_combination(),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SolvableBase::Harmonic => "harmonic",
            SolvableBase::Coulomb => "coulomb",
        }
    }
}

type RadialFn = Box<dyn Fn(f64) -> f64 + Send + Sync>;

/// A user-supplied central potential: the value `v` and its derivative `dv`.
pub struct GenericPotential {
    v: RadialFn,
    dv: RadialFn,
}

impl GenericPotential {
    /// Builds the potential and verifies `dv` against a central finite
    /// difference of `v` on a log-spaced sample grid (relative 1e-6).
    pub fn new(
        v: impl Fn(f64) -> f64 + Send + Sync + 'static,
        dv: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let pot = Self::new_unchecked(v, dv);
        pot.verify_derivative()?;
        Ok(pot)
    }

    /// Skips the derivative consistency check.
    pub fn new_unchecked(
        v: impl Fn(f64) -> f64 + Send + Sync + 'static,
        dv: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            v: Box::new(v),
            dv: Box::new(dv),
        }
    }

    /// sgn(λ) a r^λ with its exact derivative a|λ| r^{λ-1}.
    pub fn power_law(a: f64, lambda: f64) -> Self {
        let sgn = lambda.signum();
        let mag = lambda.abs();
        Self::new_unchecked(
            move |r: f64| sgn * a * r.powf(lambda),
            move |r: f64| a * mag * r.powf(lambda - 1.0),
        )
    }

    /// a ln(b r) with derivative a/r.
    pub fn logarithmic(a: f64, b: f64) -> Self {
        Self::new_unchecked(move |r: f64| a * (b * r).ln(), move |r: f64| a / r)
    }

    pub fn value(&self, r: f64) -> f64 {
        (self.v)(r)
    }

    pub fn derivative(&self, r: f64) -> f64 {
        (self.dv)(r)
    }

    fn verify_derivative(&self) -> Result<()> {
        // 32 log-spaced radii over four decades
        for i in 0..32 {
            let r = 1e-2 * 10f64.powf(4.0 * i as f64 / 31.0);
            let h = 6e-6 * r;
            let fd = ((self.v)(r + h) - (self.v)(r - h)) / (2.0 * h);
            let dv = (self.dv)(r);
            let scale = dv.abs().max((self.v)(r).abs() / r).max(1e-12);
            let relative = (fd - dv).abs() / scale;
            if relative > 1e-6 {
                return Err(Error::DerivativeMismatch { r, relative });
            }
        }
        Ok(())
    }
}

/// Result of the field minimization for one (n, ℓ) state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxFieldSolution {
    /// Optimal auxiliary field ρ₀.
    pub rho0: f64,
    /// Average point r₀ with K(r₀) = ρ₀.
    pub r0: f64,
    /// Approximate energy E(ρ₀).
    pub energy: f64,
    pub qn: QuantumNumbers,
}

/// Default ρ search bracket in dimensionless units; `minimize_field`
/// expands it geometrically up to four times before giving up.
pub const DEFAULT_RHO_BRACKET: (f64, f64) = (1e-8, 1e8);

const MONOTONICITY_SAMPLES: usize = 64;
const BRACKET_EXPANSIONS: usize = 4;
const EXPANSION_FACTOR: f64 = 1e4;
const STATIONARITY_TOL: f64 = 1e-6;

/// K(r) = V'(r)/P'(r), the operator replaced by a number in the
/// mean-field step.
pub fn k_function(pot: &GenericPotential, base: SolvableBase, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("radius must be positive, got {r}")));
    }
    Ok(pot.derivative(r) / base.p_prime(r))
}

/// Shape of K on a bracket, decided by sampling at log-spaced points.
enum KShape {
    Increasing,
    Decreasing,
    Constant(f64),
}

fn classify_k(pot: &GenericPotential, base: SolvableBase, lo: f64, hi: f64) -> Result<KShape> {
    let ratio = (hi / lo).ln();
    let mut values = [0.0_f64; MONOTONICITY_SAMPLES];
    for (i, slot) in values.iter_mut().enumerate() {
        let r = lo * (ratio * i as f64 / (MONOTONICITY_SAMPLES - 1) as f64).exp();
        *slot = k_function(pot, base, r)?;
    }
    let k_max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let k_min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let spread_tol = 1e-12 * k_max.abs().max(k_min.abs());
    if k_max - k_min <= spread_tol {
        return Ok(KShape::Constant(0.5 * (k_max + k_min)));
    }
    let noise = 1e-13 * k_max.abs().max(k_min.abs());
    let mut up = true;
    let mut down = true;
    for w in values.windows(2) {
        if w[1] - w[0] < -noise {
            up = false;
        }
        if w[1] - w[0] > noise {
            down = false;
        }
    }
    match (up, down) {
        (true, _) => Ok(KShape::Increasing),
        (_, true) => Ok(KShape::Decreasing),
        _ => Err(Error::NonMonotonicK { r_lo: lo, r_hi: hi }),
    }
}

/// Invert K on a bracket where it is strictly monotonic: returns r with
/// |K(r) - ρ| ≤ 1e-12 ρ.
pub fn k_inverse(
    pot: &GenericPotential,
    base: SolvableBase,
    rho: f64,
    bracket: (f64, f64),
) -> Result<f64> {
    let (lo, hi) = bracket;
    if !(lo > 0.0 && hi > lo) {
        return Err(Error::Domain(format!("invalid bracket ({lo}, {hi})")));
    }
    let shape = classify_k(pot, base, lo, hi)?;
    let (k_lo, k_hi) = (k_function(pot, base, lo)?, k_function(pot, base, hi)?);
    let (k_min, k_max) = if k_lo < k_hi {
        (k_lo, k_hi)
    } else {
        (k_hi, k_lo)
    };
    match shape {
        KShape::Constant(k) => {
            if (rho - k).abs() <= 1e-10 * k.abs().max(rho.abs()) {
                // K is flat at exactly this value; any point inverts it
                Ok((lo * hi).sqrt())
            } else {
                Err(Error::BracketExcludes {
                    lo: k_min,
                    hi: k_max,
                    target: rho,
                })
            }
        }
        KShape::Increasing | KShape::Decreasing => {
            if rho < k_min || rho > k_max {
                return Err(Error::BracketExcludes {
                    lo: k_min,
                    hi: k_max,
                    target: rho,
                });
            }
            // bisect in ln r: the bracket can span many decades
            let g = |x: f64| k_function(pot, base, x.exp()).unwrap_or(f64::NAN) - rho;
            let x = roots::bisect(g, lo.ln(), hi.ln(), 1e-15);
            let r = x.exp();
            let residual = (k_function(pot, base, r)? - rho).abs();
            if residual > 1e-12 * rho.abs().max(1e-300) && residual > 1e-14 * k_max.abs() {
                return Err(Error::Domain(format!(
                    "K inversion stalled at r = {r:.6e}, |K(r) - rho| = {residual:.3e}"
                )));
            }
            Ok(r)
        }
    }
}

fn k_inverse_auto(pot: &GenericPotential, base: SolvableBase, rho: f64) -> Result<f64> {
    let (mut lo, mut hi) = (1e-8_f64, 1e8_f64);
    let mut last = Error::Domain("empty bracket".into());
    for _ in 0..=BRACKET_EXPANSIONS {
        match k_inverse(pot, base, rho, (lo, hi)) {
            Ok(r) => return Ok(r),
            Err(e @ Error::BracketExcludes { .. }) => {
                last = e;
                lo /= EXPANSION_FACTOR;
                hi *= EXPANSION_FACTOR;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

/// Field-dependent energy E(ρ) = E_A(ρ) + V(K⁻¹(ρ)) - ρ P(K⁻¹(ρ)).
pub fn energy_with_field(
    pot: &GenericPotential,
    base: SolvableBase,
    m: f64,
    qn: QuantumNumbers,
    rho: f64,
) -> Result<f64> {
    if !(rho > 0.0) {
        return Err(Error::Domain(format!(
            "field value must be positive, got {rho}"
        )));
    }
    let r = k_inverse_auto(pot, base, rho)?;
    Ok(base.analytic_energy(m, qn, rho) + pot.value(r) - rho * base.p(r))
}

/// dE/dρ in closed form: the implicit contribution of K⁻¹ drops out
/// because V'(t) = ρ P'(t) at t = K⁻¹(ρ), leaving dE_A/dρ - P(K⁻¹(ρ)).
/// At the optimum this is the average-point identity ⟨P⟩ = P(r₀).
pub fn field_derivative(
    pot: &GenericPotential,
    base: SolvableBase,
    m: f64,
    qn: QuantumNumbers,
    rho: f64,
) -> Result<f64> {
    if !(rho > 0.0) {
        return Err(Error::Domain(format!(
            "field value must be positive, got {rho}"
        )));
    }
    let t = k_inverse_auto(pot, base, rho)?;
    let d_analytic = match base {
        SolvableBase::Harmonic => qn.harmonic_combination() / (2.0 * m * rho).sqrt(),
        SolvableBase::Coulomb => {
            let n_c = qn.coulomb_combination();
            -m * rho / (n_c * n_c)
        }
    };
    Ok(d_analytic - base.p(t))
}

/// Effective potential Ṽ(r, ρ) = ρ P(r) + V(K⁻¹(ρ)) - ρ P(K⁻¹(ρ));
/// tangent to V from the field side: Ṽ(r, K(r)) = V(r).
pub fn effective_potential(
    pot: &GenericPotential,
    base: SolvableBase,
    r: f64,
    rho: f64,
) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("radius must be positive, got {r}")));
    }
    let t = k_inverse_auto(pot, base, rho)?;
    Ok(rho * base.p(r) + pot.value(t) - rho * base.p(t))
}

/// Optimize E(ρ) over the bracket and package the stationary point.
///
/// The analytic base energies are concave in ρ, so the unique interior
/// stationary point is a minimum when K(r) decreases with r and a maximum
/// when it increases; in either case it is the extremum the spectrum
/// formulas come from. The search samples dE/dρ at log-spaced fields,
/// looks for a sign change of the expected orientation (expanding the
/// bracket geometrically when none is found), then bisects the analytic
/// derivative down to a relative field width of about 1e-12. Multiple
/// stationary points are not detected; the first match wins.
pub fn minimize_field(
    pot: &GenericPotential,
    base: SolvableBase,
    m: f64,
    qn: QuantumNumbers,
    bracket: (f64, f64),
) -> Result<AuxFieldSolution> {
    if !(m > 0.0) {
        return Err(Error::Domain(format!("mass must be positive, got {m}")));
    }
    let (mut lo, mut hi) = bracket;
    if !(lo > 0.0 && hi > lo) {
        return Err(Error::Domain(format!("invalid field bracket ({lo}, {hi})")));
    }

    let shape = classify_k(pot, base, 1e-4, 1e4)?;

    // exact short-circuit: constant K means V = ρ̄ P + const
    if let KShape::Constant(k) = shape {
        if k <= 0.0 {
            return Err(Error::Domain(format!(
                "constant field value {k} is not positive; no bound spectrum for this base"
            )));
        }
        let r0 = average_point_exact(base, m, qn, k);
        let energy = base.analytic_energy(m, qn, k) + pot.value(r0) - k * base.p(r0);
        return Ok(AuxFieldSolution {
            rho0: k,
            r0,
            energy,
            qn,
        });
    }

    if base == SolvableBase::Coulomb {
        // a repulsive Coulomb base has no bound spectrum
        for i in 0..MONOTONICITY_SAMPLES {
            let r = 1e-4
                * (8.0 * std::f64::consts::LN_10 * i as f64 / (MONOTONICITY_SAMPLES - 1) as f64)
                    .exp();
            if k_function(pot, base, r)? < 0.0 {
                return Err(Error::Domain(format!(
                    "K(r) < 0 at r = {r:.3e}: the Coulomb base requires an attractive field"
                )));
            }
        }
    }

    // E'' = E_A'' - P'(t)/K'(t) with E_A concave and P' > 0: an increasing
    // K forces every stationary point to be a maximum
    let expect_maximum = matches!(shape, KShape::Increasing);

    // dE/dρ only exists where K inverts; restrict the sampling window to
    // the image of K so a crossing hugging the image edge is not missed
    let k_end_a = k_function(pot, base, 1e-12)?;
    let k_end_b = k_function(pot, base, 1e12)?;
    let (img_lo, img_hi) = if k_end_a < k_end_b {
        (k_end_a, k_end_b)
    } else {
        (k_end_b, k_end_a)
    };
    let img_lo = img_lo + img_lo.abs() * 1e-9 + 1e-300;
    let img_hi = img_hi - img_hi.abs() * 1e-9;

    const SAMPLES: usize = 64;
    let g = |x: f64| field_derivative(pot, base, m, qn, x.exp()).unwrap_or(f64::NAN);
    for attempt in 0..=BRACKET_EXPANSIONS {
        let w_lo = lo.max(img_lo);
        let w_hi = hi.min(img_hi);
        if !(w_hi > w_lo) {
            return Err(Error::Domain(format!(
                "field bracket ({lo:.3e}, {hi:.3e}) does not overlap the image of K \
                 ({img_lo:.3e}, {img_hi:.3e})"
            )));
        }
        let span = (w_hi / w_lo).ln();
        let x_at = |i: usize| w_lo.ln() + span * i as f64 / (SAMPLES - 1) as f64;
        let derivs: Vec<f64> = (0..SAMPLES).map(|i| g(x_at(i))).collect();

        let mut crossing = None;
        for i in 0..SAMPLES - 1 {
            let (a, b) = (derivs[i], derivs[i + 1]);
            if !a.is_finite() || !b.is_finite() {
                continue;
            }
            let matches_type = if expect_maximum {
                a > 0.0 && b < 0.0
            } else {
                a < 0.0 && b > 0.0
            };
            if matches_type {
                crossing = Some(i);
                break;
            }
        }
        let Some(i) = crossing else {
            if attempt == BRACKET_EXPANSIONS {
                return Err(Error::NoInteriorMinimum { lo, hi });
            }
            lo /= EXPANSION_FACTOR;
            hi *= EXPANSION_FACTOR;
            continue;
        };

        let rho0 = roots::bisect(g, x_at(i), x_at(i + 1), 1e-15).exp();
        let eval =
            |rho: f64| -> f64 { energy_with_field(pot, base, m, qn, rho).unwrap_or(f64::INFINITY) };
        let energy = eval(rho0);
        let r0 = k_inverse_auto(pot, base, rho0)?;

        // stationarity: scaled derivative |dE/dρ| ρ₀ / |E| must vanish;
        // the analytic base energy keeps the scale sane when E(ρ₀) ≈ 0
        let h = 1e-6 * rho0;
        let d_e = (eval(rho0 + h) - eval(rho0 - h)) / (2.0 * h);
        let scale = energy
            .abs()
            .max(base.analytic_energy(m, qn, rho0).abs())
            .max(1e-300);
        let residual = (d_e * rho0).abs() / scale;
        if residual > STATIONARITY_TOL {
            return Err(Error::NotStationary {
                residual,
                tolerance: STATIONARITY_TOL,
            });
        }
        return Ok(AuxFieldSolution {
            rho0,
            r0,
            energy,
            qn,
        });
    }
    Err(Error::NoInteriorMinimum { lo, hi })
}

/// Average point for the degenerate (exact) case, from ⟨P⟩ = P(r₀)
/// evaluated with the known base expectations.
fn average_point_exact(base: SolvableBase, m: f64, qn: QuantumNumbers, rho0: f64) -> f64 {
    match base {
        SolvableBase::Harmonic => {
            // <r²> = (2n+ℓ+3/2)/(mω), ω = sqrt(2ρ₀/m)
            let omega = (2.0 * rho0 / m).sqrt();
            (qn.harmonic_combination() / (m * omega)).sqrt()
        }
        SolvableBase::Coulomb => {
            // <1/r> = γ/(n+ℓ+1), γ = mρ₀/(n+ℓ+1)
            let n_c = qn.coulomb_combination();
            n_c * n_c / (m * rho0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qn(n: u32, ell: u32) -> QuantumNumbers {
        QuantumNumbers::new(n, ell)
    }

    #[test]
    fn k_function_power_law_both_bases() {
        let pot = GenericPotential::power_law(1.3, 1.0);
        for r in [0.3, 1.0, 4.5] {
            let k_h = k_function(&pot, SolvableBase::Harmonic, r).unwrap();
            assert!((k_h - 0.5 * 1.3 * r.powf(-1.0)).abs() < 1e-12);
            let k_c = k_function(&pot, SolvableBase::Coulomb, r).unwrap();
            assert!((k_c - 1.3 * r.powf(2.0)).abs() < 1e-12);
        }
        assert!(k_function(&pot, SolvableBase::Harmonic, 0.0).is_err());
    }

    #[test]
    fn k_is_one_when_potential_equals_base() {
        let pot = GenericPotential::power_law(1.0, 2.0);
        for r in [0.1, 1.0, 10.0] {
            assert!((k_function(&pot, SolvableBase::Harmonic, r).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn k_inverse_closed_forms() {
        // power law, harmonic base: r = (2ρ/(a|λ|))^{1/(λ-2)}
        let (a, lambda) = (0.8, 1.0);
        let pot = GenericPotential::power_law(a, lambda);
        let rho = 0.37;
        let r = k_inverse(&pot, SolvableBase::Harmonic, rho, (1e-6, 1e6)).unwrap();
        let want = (2.0 * rho / (a * lambda)).powf(1.0 / (lambda - 2.0));
        assert!(((r - want) / want).abs() < 1e-10);

        // log potential, harmonic base: r = sqrt(a/(2ρ))
        let pot = GenericPotential::logarithmic(1.4, 2.0);
        let r = k_inverse(&pot, SolvableBase::Harmonic, rho, (1e-6, 1e6)).unwrap();
        let want = (1.4 / (2.0 * rho)).sqrt();
        assert!(((r - want) / want).abs() < 1e-10);

        // log potential, Coulomb base: r = ρ/a
        let r = k_inverse(&pot, SolvableBase::Coulomb, rho, (1e-6, 1e6)).unwrap();
        assert!(((r - rho / 1.4) / (rho / 1.4)).abs() < 1e-10);
    }

    #[test]
    fn k_inverse_rejects_outside_bracket() {
        let pot = GenericPotential::power_law(1.0, 1.0);
        let err = k_inverse(&pot, SolvableBase::Harmonic, 1e9, (1e-2, 1e2));
        assert!(matches!(err, Err(Error::BracketExcludes { .. })));
    }

    #[test]
    fn k_inverse_rejects_non_monotonic() {
        // V' = (r-1)² + 0.1 over harmonic P' = 2r is not monotonic
        let pot = GenericPotential::new_unchecked(
            |r| {
                // antiderivative of (r-1)^2 + 0.1
                (r - 1.0).powi(3) / 3.0 + 0.1 * r
            },
            |r| (r - 1.0).powi(2) + 0.1,
        );
        let err = k_inverse(&pot, SolvableBase::Harmonic, 0.2, (0.05, 20.0));
        assert!(matches!(err, Err(Error::NonMonotonicK { .. })));
    }

    #[test]
    fn energy_with_field_log_coulomb_closed_form() {
        // E(ρ) = -mρ²/(2(n+ℓ+1)²) + a ln(bρe/a)
        let (m, a, b) = (1.0, 1.0, 1.0);
        let pot = GenericPotential::logarithmic(a, b);
        for rho in [0.3, 1.0, 2.7] {
            let got = energy_with_field(&pot, SolvableBase::Coulomb, m, qn(0, 0), rho).unwrap();
            let want = -m * rho * rho / 2.0 + a * (b * rho * std::f64::consts::E / a).ln();
            assert!((got - want).abs() < 1e-10, "rho={rho}: {got} vs {want}");
        }
    }

    #[test]
    fn energy_with_field_power_law_harmonic_closed_form() {
        // pre-minimization field energy for V = a r^λ, harmonic base:
        // E(ρ) = sqrt(2ρ/m)(2n+ℓ+3/2) + ((2-λ)/(2λ)) (2ρ)^{λ/(λ-2)} (a|λ|)^{2/(2-λ)}
        let (m, a, lambda) = (2.0, 1.0, 1.0);
        let pot = GenericPotential::power_law(a, lambda);
        let state = qn(1, 2);
        let mut rho = 0.05;
        for _ in 0..10 {
            let got = energy_with_field(&pot, SolvableBase::Harmonic, m, state, rho).unwrap();
            let constant = ((2.0 - lambda) / (2.0 * lambda))
                * (2.0 * rho).powf(lambda / (lambda - 2.0))
                * (a * lambda.abs()).powf(2.0 / (2.0 - lambda));
            let want = (2.0 * rho / m).sqrt() * state.harmonic_combination() + constant;
            assert!(
                ((got - want) / want).abs() < 1e-10,
                "rho={rho}: {got} vs {want}"
            );
            rho *= 2.3;
        }
    }

    #[test]
    fn exactness_for_base_potential() {
        // V = a r² with the harmonic base reproduces sqrt(2a/m)(2n+ℓ+3/2)
        let (m, a) = (1.7, 0.6);
        let pot = GenericPotential::power_law(a, 2.0);
        for n in 0..=5 {
            for ell in 0..=5 {
                let sol = minimize_field(
                    &pot,
                    SolvableBase::Harmonic,
                    m,
                    qn(n, ell),
                    DEFAULT_RHO_BRACKET,
                )
                .unwrap();
                let want = (2.0 * a / m).sqrt() * qn(n, ell).harmonic_combination();
                assert!(
                    ((sol.energy - want) / want).abs() < 1e-10,
                    "(n,l)=({n},{ell}): {} vs {want}",
                    sol.energy
                );
                assert!((sol.rho0 - a).abs() < 1e-10 * a);
            }
        }

        // V = -a/r with the Coulomb base reproduces -m a²/(2(n+ℓ+1)²)
        let pot = GenericPotential::power_law(a, -1.0);
        for n in 0..=5 {
            for ell in 0..=5 {
                let sol = minimize_field(
                    &pot,
                    SolvableBase::Coulomb,
                    m,
                    qn(n, ell),
                    DEFAULT_RHO_BRACKET,
                )
                .unwrap();
                let n_c = qn(n, ell).coulomb_combination();
                let want = -m * a * a / (2.0 * n_c * n_c);
                assert!(
                    ((sol.energy - want) / want).abs() < 1e-10,
                    "(n,l)=({n},{ell}): {} vs {want}",
                    sol.energy
                );
            }
        }
    }

    #[test]
    fn linear_potential_ground_state_matches_closed_form() {
        // λ=1, m=2, a=1, n=ℓ=0: E = (3/2)^{5/3} / 2^{1/3}
        let pot = GenericPotential::power_law(1.0, 1.0);
        let sol = minimize_field(
            &pot,
            SolvableBase::Harmonic,
            2.0,
            qn(0, 0),
            DEFAULT_RHO_BRACKET,
        )
        .unwrap();
        let want = 1.5_f64.powf(5.0 / 3.0) / 2.0_f64.powf(1.0 / 3.0);
        assert!(((sol.energy - want) / want).abs() < 1e-9);
        // relative gap against the converged numerical value 1.47292
        let gap = (sol.energy - 1.47292) / sol.energy;
        assert!((gap - 0.0559).abs() < 1e-4, "gap {gap}");
        // optimal field matches the closed form (1/2)(3/(2√2))^{-2/3}
        let want_rho = 0.5 * (1.5 / 2.0_f64.sqrt()).powf(-2.0 / 3.0);
        assert!(((sol.rho0 - want_rho) / want_rho).abs() < 1e-9);
    }

    #[test]
    fn log_potential_harmonic_closed_form() {
        // m=1, a=1, b=1, n=ℓ=0: ρ₀ = 2/9 and E = ln(√e · 3/2)
        let pot = GenericPotential::logarithmic(1.0, 1.0);
        let sol = minimize_field(
            &pot,
            SolvableBase::Harmonic,
            1.0,
            qn(0, 0),
            DEFAULT_RHO_BRACKET,
        )
        .unwrap();
        assert!(((sol.rho0 - 2.0 / 9.0) / (2.0 / 9.0)).abs() < 1e-9);
        let want = 0.5 + 1.5_f64.ln();
        assert!(((sol.energy - want) / want).abs() < 1e-10);
    }

    #[test]
    fn monotonic_energy_reports_no_minimum() {
        // a potential decaying faster than the Coulomb base: V = -1/r³ has
        // λ < -2, E(ρ) has no interior minimum (no bound state)
        let pot = GenericPotential::power_law(1.0, -3.0);
        let err = minimize_field(&pot, SolvableBase::Coulomb, 1.0, qn(0, 0), (1e-6, 1e6));
        assert!(
            matches!(err, Err(Error::NoInteriorMinimum { .. })),
            "{err:?}"
        );
    }

    #[test]
    fn effective_potential_is_tangent() {
        let pot = GenericPotential::power_law(1.0, 1.0);
        for r in [0.2, 0.7, 1.9, 6.3] {
            let rho = k_function(&pot, SolvableBase::Harmonic, r).unwrap();
            let v_eff = effective_potential(&pot, SolvableBase::Harmonic, r, rho).unwrap();
            let v = pot.value(r);
            assert!(((v_eff - v) / v).abs() < 1e-10, "r={r}");
        }
    }

    #[test]
    fn derivative_check_catches_mismatch() {
        let bad = GenericPotential::new(|r| r * r, |r| 3.0 * r);
        assert!(matches!(bad, Err(Error::DerivativeMismatch { .. })));
        let good = GenericPotential::new(|r| r * r, |r| 2.0 * r);
        assert!(good.is_ok());
    }
}
