//! Exact solution machinery for linear flag PDEs and a verified registry of
//! closed-form solutions to nonlinear PDEs.
//!
//! The crate has five layers:
//!
//! - [`specfun`]: the special functions (gamma, 2F1, orthogonal polynomials,
//!   Weierstrass and Jacobi elliptic functions, the Y family) used both by
//!   the basis generators and the solution registry;
//! - [`exact`]: arbitrary-precision rational polynomial algebra, flag
//!   differential operators, and the polynomial/trig-polynomial solution
//!   basis generators;
//! - [`evolution`]: Campbell-Hausdorff-type factorizations of exponential
//!   operators and Fourier-mode initial-value solvers (flag evolution and
//!   wave problems, Maxwell, free Dirac, generalized acoustic systems);
//! - [`catalog`]: the registry of closed-form solution families for KdV, KP,
//!   transonic/short-wave/Khokhlov-Zabolotskaya/geopotential equations,
//!   nonlinear Schrodinger systems, Davey-Stewartson, sea convection,
//!   Boussinesq and Navier-Stokes equations, plus symmetry transforms;
//! - [`verify`]: the Taylor-jet residual engine, a finite-difference oracle,
//!   and the deterministic sampling/reporting harness.
//!
//! See the `examples/` directory for one runnable example per capability and
//! the thin `pdeexact` binary for the command-line interface.

pub mod catalog;
pub mod cli;
pub mod config;
pub mod error;
pub mod evolution;
pub mod exact;
pub mod expr;
pub mod jet;
pub mod series;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use series::SeriesControl;
