// negated comparisons like !(x > 0.0) are deliberate: they reject NaN inputs
#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! Approximate analytical bound-state energies of the radial Schrödinger
//! equation via the auxiliary-field technique, together with a
//! high-accuracy numerical eigenvalue oracle, error-bound estimators and a
//! coefficient-fitting kit.
//!
//! The idea: replace a hard central potential V(r) by an analytically
//! solvable base P(r) (harmonic oscillator or Coulomb) coupled through an
//! auxiliary field ρ. Treating ρ as a number and minimizing the resulting
//! energy yields closed-form approximations that are exact when V ∝ P and
//! stay accurate over a wide family of potentials. For power-law potentials
//! sgn(λ) a r^λ everything reduces to the dimensionless spectrum
//! ε(λ, n, ℓ), and a one-parameter family of "improved" formulas
//!
//! ```text
//! ε(λ) = ((2+λ)/(2λ)) |λ|^{2/(λ+2)} 2^{-λ/(λ+2)} [b(λ) n + ℓ + c(λ)]^{2λ/(λ+2)}
//! ```
//!
//! reproduces converged numerical eigenvalues to a few parts in 10³.
//!
//! Module map:
//! - [`potentials`]: potential types, dimensionless reduction, scaling laws;
//! - [`aft`]: the generic three-step field algorithm for user potentials;
//! - [`closed_form`]: every analytic spectrum (field results, improved
//!   families, semiclassical baseline, Airy asymptotic, log limits);
//! - [`error_bounds`]: ground-state error inequalities and diagnostics;
//! - [`oracle`]: converged eigenvalues of the dimensionless Hamiltonian;
//! - [`fit`]: the χ measure, per-λ coefficient optimization, hyperbola fits;
//! - [`tables`]: embedded reference tables and their recomputation;
//! - [`cli`]: the `auxspec` command-line front end.
//!
//! The `examples/` directory holds one runnable walkthrough per capability;
//! start with `cargo run --example energy_formulas`.

pub mod aft;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod error_bounds;
pub mod fit;
pub mod numerics;
pub mod oracle;
pub mod potentials;
pub mod tables;

pub use aft::{AuxFieldSolution, GenericPotential, SolvableBase};
pub use closed_form::CoeffFamily;
pub use error::{Error, Result};
pub use error_bounds::ErrorReport;
pub use fit::{FitResult, RationalFit, ReferenceGrid};
pub use oracle::{RadialProblem, SpectrumSlice};
pub use potentials::{
    DimensionlessPotential, DimensionlessState, LogPotential, PowerLawPotential, QuantumNumbers,
    ScalingParams,
};
