//! Small self-contained numerical kernels backing the public modules:
//! special functions, quadrature, bracketed optimization and root finding,
//! a two-parameter simplex minimizer, and a tridiagonal eigensolver.

pub mod gamma;
pub mod golden;
pub mod laguerre;
pub mod nelder_mead;
pub mod quad;
pub mod roots;
pub mod sturm;
