use rayon::prelude::*;

use super::{check_local_lower_bound, value_function, THEOREM1_SAMPLES};
use super::{CheckKind, CheckResult, Witness};
use crate::error::{Error, Result};
use crate::numeric::{Ball, Scalar, Tolerances};
use crate::problem::ParametricProgram;

/// Extrapolation factors tried for every target.
pub const ALPHA_SCHEDULE: [f64; 3] = [0.01, 0.05, 0.25];

/// `y_alpha = y0 + alpha (y0 - y)` and `beta = alpha / (1 + alpha)`, so that
/// `beta y + (1 - beta) y_alpha = y0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LemmaCombination<T> {
    pub y0: Vec<T>,
    pub y: Vec<T>,
    pub alpha: T,
    pub y_alpha: Vec<T>,
    pub beta: T,
}

impl<T: Scalar> LemmaCombination<T> {
    pub fn new(y0: Vec<T>, y: Vec<T>, alpha: T) -> Result<Self> {
        if !(alpha > T::zero() && alpha.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "alpha must be positive, got {alpha}"
            )));
        }
        if y0.len() != y.len() {
            return Err(Error::DimensionMismatch {
                context: "lemma combination",
                expected: y0.len(),
                found: y.len(),
            });
        }
        let y_alpha = y0
            .iter()
            .zip(&y)
            .map(|(&c, &t)| c + alpha * (c - t))
            .collect();
        let beta = alpha / (T::one() + alpha);
        Ok(LemmaCombination {
            y0,
            y,
            alpha,
            y_alpha,
            beta,
        })
    }

    /// `beta y + (1 - beta) y_alpha`, which equals `y0` up to rounding.
    pub fn recombined(&self) -> Vec<T> {
        self.y
            .iter()
            .zip(&self.y_alpha)
            .map(|(&t, &a)| self.beta * t + (T::one() - self.beta) * a)
            .collect()
    }
}

/// Lower bound on `f(y)` implied by convexity from `f >= m0` at `y0` and the
/// value `v_alpha = f(y_alpha)`: `((1 + alpha) / alpha) m0 - v_alpha / alpha`.
pub fn lemma_lower_bound<T: Scalar>(m0: T, v_alpha: T, alpha: T) -> Result<T> {
    if !(alpha > T::zero()) {
        return Err(Error::InvalidArgument(format!(
            "alpha must be positive, got {alpha}"
        )));
    }
    Ok((T::one() + alpha) / alpha * m0 - v_alpha / alpha)
}

/// Propagates the certified lower bound from the ball center to each target
/// for every alpha in `ALPHA_SCHEDULE` whose `y_alpha` stays in the ball.
pub fn check_lemma<T: Scalar>(
    p: &ParametricProgram<T>,
    ball: &Ball<T>,
    targets: &[Vec<T>],
    tol: &Tolerances<T>,
    seed: u64,
) -> CheckResult<T> {
    let kind = CheckKind::Lemma;
    let y0 = ball.center().to_vec();
    let cert = match check_local_lower_bound(p, ball, THEOREM1_SAMPLES, tol, seed) {
        Ok(Some(cert)) => cert,
        Ok(None) => {
            return CheckResult::precondition(
                kind,
                Some(Witness::Point {
                    y: y0,
                    values: vec![],
                }),
                "no local lower-bound certificate at the center",
            )
        }
        Err(e) => return CheckResult::errored(kind, &y0, &e),
    };
    let m0 = cert.bound;

    let mut combos = Vec::new();
    for y in targets {
        for &alpha in &ALPHA_SCHEDULE {
            match LemmaCombination::new(y0.clone(), y.clone(), T::of(alpha)) {
                Ok(c) if ball.contains(&c.y_alpha) => combos.push(c),
                Ok(_) => {}
                Err(e) => return CheckResult::errored(kind, y, &e),
            }
        }
    }
    if combos.is_empty() {
        return CheckResult::precondition(kind, None, "no admissible alpha for any target");
    }
    let evaluated: Result<Vec<_>> = combos
        .par_iter()
        .map(|c| {
            Ok((
                value_function(p, &c.y, tol)?.value(),
                value_function(p, &c.y_alpha, tol)?.value(),
            ))
        })
        .collect();
    let evaluated = match evaluated {
        Ok(v) => v,
        Err(e) => return CheckResult::errored(kind, &y0, &e),
    };
    for (c, (v, v_alpha)) in combos.iter().zip(evaluated) {
        let Some(value) = v.finite_value() else {
            return CheckResult::precondition(
                kind,
                Some(Witness::Point {
                    y: c.y.clone(),
                    values: vec![v],
                }),
                "v is not finite at a target",
            );
        };
        let Some(v_alpha) = v_alpha.finite_value() else {
            return CheckResult::fail(
                kind,
                Witness::Point {
                    y: c.y_alpha.clone(),
                    values: vec![v_alpha],
                },
                "v is not finite inside the certified ball",
            );
        };
        let bound = lemma_lower_bound(m0, v_alpha, c.alpha).expect("alpha is positive");
        if value < bound - tol.band() {
            return CheckResult::fail(
                kind,
                Witness::Propagation {
                    y0: c.y0.clone(),
                    y: c.y.clone(),
                    alpha: c.alpha,
                    y_alpha: c.y_alpha.clone(),
                    bound,
                    value,
                },
                "v(y) is below the propagated bound",
            );
        }
    }
    CheckResult::pass(
        kind,
        format!(
            "bound m0 = {m0} propagated to {} (target, alpha) combinations",
            combos.len()
        ),
    )
}
