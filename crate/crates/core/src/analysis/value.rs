use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{ExtendedReal, Scalar, Tolerances};
use crate::problem::ParametricProgram;
use crate::solver::{minimize, SolveOutcome, SolveStatus};

const BRACKET_CAP: usize = 200;
const BISECTION_CAP: usize = 200;

/// `v(y)` with its solve status.
pub fn value_function<T: Scalar>(
    p: &ParametricProgram<T>,
    y: &[T],
    tol: &Tolerances<T>,
) -> Result<SolveOutcome<T>> {
    minimize(p, y, tol)
}

/// `mu in F_phi(y)`.
///
/// Attained minima give the closed level set `[v(y) - value_eps, inf)`, a
/// non-attained infimum the open set `(inf + value_eps, inf)`, an unbounded
/// cost all of `R` and an empty `F(y)` the empty set.
pub fn fcost_membership<T: Scalar>(
    p: &ParametricProgram<T>,
    y: &[T],
    mu: T,
    tol: &Tolerances<T>,
) -> Result<bool> {
    if mu.is_nan() {
        return Err(Error::NotANumber("cost level"));
    }
    Ok(match value_function(p, y, tol)? {
        SolveOutcome::Optimal { value, .. } => mu >= value - tol.value_eps,
        SolveOutcome::Unbounded { .. } => true,
        SolveOutcome::InfNotAttained { infimum } => mu > infimum + tol.value_eps,
        SolveOutcome::Infeasible => false,
    })
}

/// `v_phi(y)` computed by bracketing and bisection on the membership oracle
/// alone, never reading `v(y)` directly.
///
/// Returns `+inf` when no level up to `unbounded_threshold` is a member and
/// `-inf` when `-unbounded_threshold` is. When the level set is declared
/// non-closed (the infimum is not attained) the set has no minimum and the
/// result is `-inf`.
pub fn aux_value_function<T: Scalar>(
    p: &ParametricProgram<T>,
    y: &[T],
    tol: &Tolerances<T>,
) -> Result<ExtendedReal<T>> {
    let member = |mu: T| fcost_membership(p, y, mu, tol);
    let threshold = tol.unbounded_threshold;
    let two = T::of(2.0);

    let mut hi = T::one();
    let mut expansions = 0;
    while !member(hi)? {
        if hi >= threshold {
            return Ok(ExtendedReal::PlusInfinity);
        }
        hi = (hi * two).min(threshold);
        expansions += 1;
        if expansions > BRACKET_CAP {
            return Err(Error::BracketCap(hi.as_f64()));
        }
    }

    let mut width = T::one();
    let mut lo = hi - width;
    loop {
        if !member(lo)? {
            break;
        }
        if lo <= -threshold {
            return Ok(ExtendedReal::MinusInfinity);
        }
        hi = lo;
        width = width * two;
        lo = (hi - width).max(-threshold);
        expansions += 1;
        if expansions > BRACKET_CAP {
            return Err(Error::BracketCap(lo.as_f64()));
        }
    }

    for _ in 0..BISECTION_CAP {
        let resolution = tol.value_eps * T::of(1e-2) * hi.abs().max(T::one());
        if hi - lo <= resolution {
            break;
        }
        let mid = lo + (hi - lo) / two;
        if mid <= lo || mid >= hi {
            break;
        }
        if member(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    if p.attainment().covers(y) {
        return Ok(ExtendedReal::MinusInfinity);
    }
    ExtendedReal::finite(hi)
}

/// Sampled `y -> v(y)` with per-point status.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: crate::numeric::Scalar"))]
pub struct ValueGrid<T: crate::numeric::Scalar> {
    pub points: Vec<Vec<T>>,
    pub values: Vec<ExtendedReal<T>>,
    pub statuses: Vec<SolveStatus>,
}

impl<T: crate::numeric::Scalar> ValueGrid<T> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Evaluates `v` on every point; concurrent, ordered by input index.
pub fn evaluate_grid<T: Scalar>(
    p: &ParametricProgram<T>,
    points: &[Vec<T>],
    tol: &Tolerances<T>,
) -> Result<ValueGrid<T>> {
    let outcomes: Vec<SolveOutcome<T>> = points
        .par_iter()
        .map(|y| value_function(p, y, tol))
        .collect::<Result<_>>()?;
    Ok(ValueGrid {
        points: points.to_vec(),
        values: outcomes.iter().map(SolveOutcome::value).collect(),
        statuses: outcomes.iter().map(SolveOutcome::status).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::catalog_instance;

    fn program(id: &str) -> ParametricProgram<f64> {
        catalog_instance(id).unwrap().program
    }

    #[test]
    fn value_function_conventions() {
        let tol = Tolerances::default();
        let out = value_function(&program("P-LIN"), &[2.0], &tol).unwrap();
        assert_eq!(out.status(), SolveStatus::Optimal);
        assert!((out.value().finite_value().unwrap() - 2.0).abs() < 1e-12);
        let out = value_function(&program("P-INT"), &[-1.0], &tol).unwrap();
        assert_eq!(out.value(), ExtendedReal::PlusInfinity);
        let out = value_function(&program("P-UNB"), &[0.0], &tol).unwrap();
        assert_eq!(out.status(), SolveStatus::Unbounded);
        assert_eq!(out.value(), ExtendedReal::MinusInfinity);
        assert!(value_function(&program("P-LIN"), &[1.0, 2.0], &tol).is_err());
    }

    #[test]
    fn membership_examples() {
        let tol = Tolerances::default();
        let lin = program("P-LIN");
        assert!(fcost_membership(&lin, &[2.0], 3.0, &tol).unwrap());
        assert!(!fcost_membership(&lin, &[2.0], 1.0, &tol).unwrap());
        let exp = program("P-EXP");
        assert!(!fcost_membership(&exp, &[0.0], 0.0, &tol).unwrap());
        assert!(fcost_membership(&exp, &[0.0], 0.5, &tol).unwrap());
        assert!(fcost_membership(&lin, &[0.0], f64::NAN, &tol).is_err());
    }

    #[test]
    fn aux_value_examples() {
        let tol = Tolerances::default();
        let v = aux_value_function(&program("P-LIN"), &[2.0], &tol).unwrap();
        assert!((v.finite_value().unwrap() - 2.0).abs() <= 10.0 * tol.value_eps);
        assert_eq!(
            aux_value_function(&program("P-INT"), &[-1.0], &tol).unwrap(),
            ExtendedReal::PlusInfinity
        );
        let v = aux_value_function(&program("P-PROJ"), &[3.0], &tol).unwrap();
        assert!((v.finite_value().unwrap() - 4.0).abs() <= 10.0 * tol.value_eps);
        assert_eq!(
            aux_value_function(&program("P-UNB"), &[0.0], &tol).unwrap(),
            ExtendedReal::MinusInfinity
        );
        assert_eq!(
            aux_value_function(&program("P-EXP"), &[0.0], &tol).unwrap(),
            ExtendedReal::MinusInfinity
        );
    }
}
