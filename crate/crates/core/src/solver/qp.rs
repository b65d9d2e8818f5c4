//! Projected gradient descent for PSD-quadratic costs over polyhedra.

use super::{feasible_point, SolveOutcome};
use crate::error::{Error, Result};
use crate::numeric::linalg::{dot, norm, Matrix};
use crate::numeric::{Scalar, Tolerances};
use crate::problem::{CostSpec, ParametricProgram};

const MAX_ITERATIONS: usize = 50_000;
const MAX_DYKSTRA_SWEEPS: usize = 20_000;

/// Euclidean projection onto `{ x : A x <= b }` by Dykstra's alternating
/// projections onto the halfspaces.
pub fn project_polyhedron<T: Scalar>(
    point: &[T],
    a: &Matrix<T>,
    b: &[T],
    tol: &Tolerances<T>,
) -> Result<Vec<T>> {
    let violation = |x: &[T]| {
        (0..a.rows())
            .map(|i| dot(a.row(i), x) - b[i])
            .fold(T::zero(), T::max)
    };
    if violation(point) <= T::zero() {
        return Ok(point.to_vec());
    }
    let row_norms: Vec<T> = (0..a.rows()).map(|i| dot(a.row(i), a.row(i))).collect();
    let tiny = T::epsilon() * T::of(1e2);
    let mut x = point.to_vec();
    let mut corrections = vec![vec![T::zero(); x.len()]; a.rows()];
    for _ in 0..MAX_DYKSTRA_SWEEPS {
        let previous = x.clone();
        for i in 0..a.rows() {
            if row_norms[i] <= tiny {
                continue;
            }
            let z: Vec<T> = x.iter().zip(&corrections[i]).map(|(&u, &p)| u + p).collect();
            let excess = dot(a.row(i), &z) - b[i];
            x = if excess > T::zero() {
                let step = excess / row_norms[i];
                z.iter().zip(a.row(i)).map(|(&zj, &aj)| zj - step * aj).collect()
            } else {
                z.clone()
            };
            corrections[i] = z.iter().zip(&x).map(|(&zj, &xj)| zj - xj).collect();
        }
        let moved = norm(
            &x.iter()
                .zip(&previous)
                .map(|(&u, &v)| u - v)
                .collect::<Vec<_>>(),
        );
        let scale = T::one() + norm(&x);
        if violation(&x) <= tol.feasibility_eps * T::of(0.1) && moved <= tiny * scale {
            return Ok(x);
        }
    }
    Err(Error::NoConvergence {
        solver: "Dykstra projection",
        iterations: MAX_DYKSTRA_SWEEPS,
    })
}

/// Minimizes a quadratic cost over `F(y)`.
///
/// Feasibility is settled first by a phase-1 LP. Iterates take projected
/// gradient steps with a doubling/backtracking step size, so flat descent
/// directions are followed geometrically. Unboundedness is declared when an
/// iterate exceeds `unbounded_threshold` in norm while the cost still
/// decreases; this is a heuristic, sound for PSD quadratics whose only
/// unbounded directions are flat ones.
pub fn solve_qp_projected<T: Scalar>(
    p: &ParametricProgram<T>,
    y: &[T],
    tol: &Tolerances<T>,
) -> Result<SolveOutcome<T>> {
    let CostSpec::Quadratic(cost) = p.cost() else {
        return Err(Error::WrongCostKind {
            kernel: "projected-gradient QP",
            kind: p.cost().kind_name(),
        });
    };
    p.check_y(y)?;
    let Some(start) = feasible_point(p, y, tol)? else {
        return Ok(SolveOutcome::Infeasible);
    };
    let a = p.feasible().a();
    let b = p.feasible().rhs(y);
    let project = |v: &[T]| project_polyhedron(v, a, &b, tol);
    let f = |x: &[T]| cost.eval(x, y);

    let curvature = cost.curvature_x(p.n());
    let mut step = if curvature > T::epsilon() {
        T::one() / curvature
    } else {
        T::one()
    };
    let min_step = T::epsilon() * T::epsilon();
    let max_step = tol.unbounded_threshold * tol.unbounded_threshold;

    let mut x = project(&start)?;
    let mut fx = f(&x);
    for _ in 0..MAX_ITERATIONS {
        let grad = cost.gradient_x(&x, y);
        // unit-step projected gradient x - P(x - grad)
        let shifted: Vec<T> = x.iter().zip(&grad).map(|(&u, &g)| u - g).collect();
        let target = project(&shifted)?;
        let pg: Vec<T> = x.iter().zip(&target).map(|(&u, &t)| u - t).collect();
        if norm(&pg) <= tol.value_eps {
            return Ok(SolveOutcome::Optimal {
                value: fx,
                minimizer: x,
            });
        }

        step = (step * T::of(2.0)).min(max_step);
        let (next, f_next) = loop {
            let trial: Vec<T> = x.iter().zip(&grad).map(|(&u, &g)| u - step * g).collect();
            let candidate = project(&trial)?;
            let f_candidate = f(&candidate);
            let moved: Vec<T> = candidate.iter().zip(&x).map(|(&u, &v)| u - v).collect();
            let decrease = dot(&moved, &moved) / (T::of(2.0) * step);
            if f_candidate <= fx - decrease || step <= min_step {
                break (candidate, f_candidate);
            }
            step = step * T::of(0.5);
        };
        if step <= min_step {
            break;
        }

        if norm(&next) > tol.unbounded_threshold && f_next < fx {
            let mut ray: Vec<T> = next.iter().zip(&x).map(|(&u, &v)| u - v).collect();
            let size = norm(&ray);
            if size > T::zero() {
                ray.iter_mut().for_each(|v| *v = *v / size);
            }
            return Ok(SolveOutcome::Unbounded { ray: Some(ray) });
        }
        x = next;
        fx = f_next;
    }
    Err(Error::NoConvergence {
        solver: "projected gradient",
        iterations: MAX_ITERATIONS,
    })
}
