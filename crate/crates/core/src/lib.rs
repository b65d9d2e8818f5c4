//! Optimal-value functions of parametric convex programs
//!
//! ```text
//! v(y) = min { phi(x, y) : x in F(y) },   F(y) = { x : A x <= c + B y }
//! ```
//!
//! together with numerical certificates for their structure: agreement of
//! `v` with the auxiliary problem over the feasible cost space `F_phi`, the
//! graph/epigraph identity, local lower boundedness, properness and
//! convexity on open boxes, bound propagation and Lipschitz estimates.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the `*64` aliases
//! below fix the scalar to `f64`, which the CLI uses.

pub mod analysis;
pub mod error;
pub mod numeric;
pub mod problem;
pub mod solver;

pub use error::{Error, Result};
pub use numeric::{ExtendedReal, Scalar, Tolerances};

pub type ExtendedReal64 = numeric::ExtendedReal<f64>;
pub type Tolerances64 = numeric::Tolerances<f64>;
pub type Ball64 = numeric::Ball<f64>;
pub type ParamBox64 = numeric::ParamBox<f64>;
pub type Program64 = problem::ParametricProgram<f64>;
pub type CatalogInstance64 = problem::CatalogInstance<f64>;
pub type SolveOutcome64 = solver::SolveOutcome<f64>;
pub type ValueGrid64 = analysis::ValueGrid<f64>;
pub type AnalysisReport64 = analysis::AnalysisReport<f64>;

pub type ExtendedReal32 = numeric::ExtendedReal<f32>;
pub type Tolerances32 = numeric::Tolerances<f32>;
pub type Program32 = problem::ParametricProgram<f32>;
pub type SolveOutcome32 = solver::SolveOutcome<f32>;
