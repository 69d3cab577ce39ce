use std::fmt;

/// Errors produced by the closed-form evaluators and the numerical solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the supported parameter domain.
    Domain(String),
    /// No bound state exists for this exponent (`lambda <= -2`).
    NoBoundState { lambda: f64 },
    /// The exponent expressions are singular at this `lambda`.
    SingularExponent { lambda: f64 },
    /// A coefficient family is undefined at this `lambda` (case split or pole).
    FamilyUndefined { family: &'static str, lambda: f64 },
    /// The two parameter sets are not related by a scaling transformation.
    ScalingViolation { residual: f64, tolerance: f64 },
    /// `K(r)` changes direction on the search bracket.
    NonMonotonicK { r_lo: f64, r_hi: f64 },
    /// The target value lies outside the image of the bracket.
    BracketExcludes { lo: f64, hi: f64, target: f64 },
    /// No stationary point of the expected kind inside the bracket.
    NoInteriorMinimum { lo: f64, hi: f64 },
    /// The minimizer stopped at a point that is not stationary.
    NotStationary { residual: f64, tolerance: f64 },
    /// Adaptive quadrature stalled before reaching the requested tolerance.
    QuadratureDidNotConverge { achieved: f64, requested: f64 },
    /// Mesh refinement stalled; carries the best estimate and its spread.
    EigenvalueNotConverged { best: f64, uncertainty: f64 },
    /// Reference grid cells required by the fit are absent.
    MissingReference { cells: Vec<(u32, u32)> },
    /// The coefficient optimizer hit its iteration cap; carries best-so-far.
    FitDidNotConverge {
        b: f64,
        c: f64,
        chi: f64,
        iterations: usize,
    },
    /// The rational-fit system is rank deficient (collinear data).
    DegenerateFit,
    /// The supplied derivative disagrees with a finite difference of `v`.
    DerivativeMismatch { r: f64, relative: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NoBoundState { lambda } => write!(
                f,
                "no bound state: lambda = {lambda} <= -2 makes the spectrum unbounded from below"
            ),
            Error::SingularExponent { lambda } => {
                write!(f, "energy formula undefined at lambda = {lambda}")
            }
            Error::FamilyUndefined { family, lambda } => {
                write!(f, "coefficient family {family} undefined at lambda = {lambda}")
            }
            Error::ScalingViolation { residual, tolerance } => write!(
                f,
                "scaling constraint gamma = gamma' (alpha/alpha')^2 (m'/m) violated: \
                 relative residual {residual:.3e} exceeds tolerance {tolerance:.1e}"
            ),
            Error::NonMonotonicK { r_lo, r_hi } => write!(
                f,
                "K(r) is not monotonic on [{r_lo:.3e}, {r_hi:.3e}]; \
                 shrink the bracket to a monotonic branch"
            ),
            Error::BracketExcludes { lo, hi, target } => write!(
                f,
                "bracket [{lo:.3e}, {hi:.3e}] does not enclose target {target:.6e}"
            ),
            Error::NoInteriorMinimum { lo, hi } => write!(
                f,
                "no interior stationary point of the expected kind on [{lo:.3e}, {hi:.3e}]; \
                 expand the bracket"
            ),
            Error::NotStationary { residual, tolerance } => write!(
                f,
                "optimum fails the stationarity check: |dE/drho| rho/|E| = {residual:.3e} > {tolerance:.1e}"
            ),
            Error::QuadratureDidNotConverge { achieved, requested } => write!(
                f,
                "quadrature reached relative error {achieved:.3e}, requested {requested:.1e}"
            ),
            Error::EigenvalueNotConverged { best, uncertainty } => write!(
                f,
                "eigenvalue did not converge: best estimate {best:.8e} +/- {uncertainty:.2e}"
            ),
            Error::MissingReference { cells } => {
                write!(f, "reference grid is missing entries at (n, ell) = ")?;
                for (i, (n, ell)) in cells.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "({n}, {ell})")?;
                }
                Ok(())
            }
            Error::FitDidNotConverge { b, c, chi, iterations } => write!(
                f,
                "coefficient fit hit the iteration cap ({iterations}); \
                 best so far b = {b:.8}, c = {c:.8}, chi = {chi:.3e}"
            ),
            Error::DegenerateFit => write!(f, "rational fit is rank deficient (collinear data)"),
            Error::DerivativeMismatch { r, relative } => write!(
                f,
                "dv is not the derivative of v: relative mismatch {relative:.3e} at r = {r:.6e}"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
