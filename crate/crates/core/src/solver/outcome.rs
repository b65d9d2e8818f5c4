use serde::Serialize;

use crate::numeric::{ExtendedReal, Scalar};

/// Status of one inner minimization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    Unbounded,
    #[serde(rename = "not_attained")]
    InfNotAttained,
}

impl SolveStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::Unbounded => "unbounded",
            SolveStatus::InfNotAttained => "not_attained",
        }
    }
}

/// Result of `min { phi(x, y) : x in F(y) }` for one `y`.
///
/// The value follows the extended-real conventions: `+inf` for an empty
/// feasible set, `-inf` when the cost is unbounded below or its infimum is
/// not attained.
#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome<T> {
    Optimal { value: T, minimizer: Vec<T> },
    Infeasible,
    /// `ray` is a feasible descent direction when the kernel can certify one.
    Unbounded { ray: Option<Vec<T>> },
    /// Finite infimum that no feasible point attains.
    InfNotAttained { infimum: T },
}

impl<T: Scalar> SolveOutcome<T> {
    pub fn status(&self) -> SolveStatus {
        match self {
            SolveOutcome::Optimal { .. } => SolveStatus::Optimal,
            SolveOutcome::Infeasible => SolveStatus::Infeasible,
            SolveOutcome::Unbounded { .. } => SolveStatus::Unbounded,
            SolveOutcome::InfNotAttained { .. } => SolveStatus::InfNotAttained,
        }
    }

    pub fn value(&self) -> ExtendedReal<T> {
        match self {
            SolveOutcome::Optimal { value, .. } => ExtendedReal::Finite(*value),
            SolveOutcome::Infeasible => ExtendedReal::PlusInfinity,
            SolveOutcome::Unbounded { .. } | SolveOutcome::InfNotAttained { .. } => {
                ExtendedReal::MinusInfinity
            }
        }
    }

    pub fn minimizer(&self) -> Option<&[T]> {
        match self {
            SolveOutcome::Optimal { minimizer, .. } => Some(minimizer),
            _ => None,
        }
    }

    pub fn infimum_hint(&self) -> Option<T> {
        match self {
            SolveOutcome::InfNotAttained { infimum } => Some(*infimum),
            _ => None,
        }
    }

    pub fn ray(&self) -> Option<&[T]> {
        match self {
            SolveOutcome::Unbounded { ray: Some(d) } => Some(d),
            _ => None,
        }
    }
}
