use thiserror::Error;

/// Errors raised by model construction, the inner solvers and the analysis layer.
///
/// Verdicts of the certificate checks are not errors; they are reported through
/// [`crate::analysis::Verdict`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NaN encountered in {0}")]
    NotANumber(&'static str),
    #[error("non-finite value {value} in {context}")]
    NonFinite { context: &'static str, value: f64 },
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("dimension cap exceeded: {0}")]
    DimensionCap(String),
    #[error("invalid tolerances: {0}")]
    InvalidTolerances(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("quadratic cost matrix is not symmetric")]
    NotSymmetric,
    #[error("quadratic cost matrix is not positive semidefinite (smallest eigenvalue {0:e})")]
    NotPositiveSemidefinite(f64),
    #[error("the {kernel} kernel cannot minimize a {kind} cost")]
    WrongCostKind {
        kernel: &'static str,
        kind: &'static str,
    },
    #[error("simplex iteration cap of {0} pivots reached")]
    CyclingSafeguard(usize),
    #[error("{solver} did not converge within {iterations} iterations")]
    NoConvergence {
        solver: &'static str,
        iterations: usize,
    },
    #[error("bracket expansion cap exceeded (last level {0})")]
    BracketCap(f64),
    #[error("infimum at y = {0:?} is not attained, but the program does not declare it")]
    UndeclaredNonAttainment(Vec<f64>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown catalog instance `{0}`")]
    UnknownInstance(String),
    #[error("invalid program definition: {0}")]
    Definition(String),
}

pub type Result<R> = std::result::Result<R, Error>;
