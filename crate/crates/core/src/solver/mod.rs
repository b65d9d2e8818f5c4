//! Desk-scale inner minimization kernels: one call computes `v(y)` for a
//! fixed parameter with a certified status.

mod builtin;
mod outcome;
mod qp;
mod simplex;

pub use builtin::solve_builtin_1d;
pub use outcome::{SolveOutcome, SolveStatus};
pub use qp::{project_polyhedron, solve_qp_projected};
pub use simplex::{solve_lp, LpProblem};

use crate::error::Result;
use crate::numeric::linalg::Matrix;
use crate::numeric::{Scalar, Tolerances};
use crate::problem::{AffinePiece, CostSpec, ParametricProgram};

/// Dispatches to the kernel matching the cost kind.
pub fn minimize<T: Scalar>(
    p: &ParametricProgram<T>,
    y: &[T],
    tol: &Tolerances<T>,
) -> Result<SolveOutcome<T>> {
    p.check_y(y)?;
    match p.cost() {
        CostSpec::AffineMax(pieces) => solve_affine_max(p, pieces, y, tol),
        CostSpec::Quadratic(_) => solve_qp_projected(p, y, tol),
        CostSpec::Builtin(_) => solve_builtin_1d(p, y, tol),
    }
}

/// `F(y)` as an LP feasibility problem (zero objective).
pub fn feasibility_lp<T: Scalar>(p: &ParametricProgram<T>, y: &[T]) -> Result<LpProblem<T>> {
    LpProblem::new(
        vec![T::zero(); p.n()],
        p.feasible().a().clone(),
        p.feasible().rhs(y),
    )
}

/// Some point of `F(y)` found by phase 1, or `None` when `F(y)` is empty.
pub fn feasible_point<T: Scalar>(
    p: &ParametricProgram<T>,
    y: &[T],
    tol: &Tolerances<T>,
) -> Result<Option<Vec<T>>> {
    p.check_y(y)?;
    Ok(match solve_lp(&feasibility_lp(p, y)?, tol)? {
        SolveOutcome::Optimal { minimizer, .. } => Some(minimizer),
        _ => None,
    })
}

pub fn feasible_set_nonempty<T: Scalar>(
    p: &ParametricProgram<T>,
    y: &[T],
    tol: &Tolerances<T>,
) -> Result<bool> {
    Ok(feasible_point(p, y, tol)?.is_some())
}

/// Epigraph reformulation over `(x, t)`:
/// `min t  s.t.  p_i.x - t <= -q_i.y - r_i,  A x <= c + B y`.
fn solve_affine_max<T: Scalar>(
    p: &ParametricProgram<T>,
    pieces: &[AffinePiece<T>],
    y: &[T],
    tol: &Tolerances<T>,
) -> Result<SolveOutcome<T>> {
    let n = p.n();
    let feasible = p.feasible();
    let rows = pieces.len() + feasible.rows();
    let mut g = Matrix::zeros(rows, n + 1);
    let mut h = Vec::with_capacity(rows);
    for (i, piece) in pieces.iter().enumerate() {
        for j in 0..n {
            g[(i, j)] = piece.p[j];
        }
        g[(i, n)] = -T::one();
        h.push(-(piece.eval(&vec![T::zero(); n], y)));
    }
    let rhs = feasible.rhs(y);
    for i in 0..feasible.rows() {
        let row = pieces.len() + i;
        for j in 0..n {
            g[(row, j)] = feasible.a()[(i, j)];
        }
        h.push(rhs[i]);
    }
    let mut objective = vec![T::zero(); n + 1];
    objective[n] = T::one();
    let outcome = solve_lp(&LpProblem::new(objective, g, h)?, tol)?;
    Ok(match outcome {
        SolveOutcome::Optimal { minimizer, .. } => {
            let x = minimizer[..n].to_vec();
            let value = p.cost().eval(&x, y);
            SolveOutcome::Optimal {
                value,
                minimizer: x,
            }
        }
        SolveOutcome::Unbounded { ray } => SolveOutcome::Unbounded {
            ray: ray.map(|d| d[..n].to_vec()),
        },
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::catalog_instance;

    #[test]
    fn affine_max_epigraph_reformulation() {
        let tol = Tolerances::default();
        let lin = catalog_instance::<f64>("P-LIN").unwrap().program;
        let out = minimize(&lin, &[2.0], &tol).unwrap();
        assert_eq!(out.status(), SolveStatus::Optimal);
        assert!((out.value().finite_value().unwrap() - 2.0).abs() < 1e-12);

        let unb = catalog_instance::<f64>("P-UNB").unwrap().program;
        match minimize(&unb, &[0.0], &tol).unwrap() {
            SolveOutcome::Unbounded { ray: Some(d) } => assert!(d[0] > 0.0),
            other => panic!("expected unbounded with ray, got {other:?}"),
        }

        let int = catalog_instance::<f64>("P-INT").unwrap().program;
        assert_eq!(
            minimize(&int, &[-1.0], &tol).unwrap().status(),
            SolveStatus::Infeasible
        );
    }

    #[test]
    fn generic_over_f32() {
        let tol = Tolerances::<f32>::default();
        let lin = catalog_instance::<f32>("P-LIN").unwrap().program;
        let out = minimize(&lin, &[0.5f32], &tol).unwrap();
        assert!((out.value().finite_value().unwrap() - 0.5).abs() < 1e-5);
        let proj = catalog_instance::<f32>("P-PROJ").unwrap().program;
        let out = minimize(&proj, &[3.0f32], &tol).unwrap();
        assert!((out.value().finite_value().unwrap() - 4.0).abs() < 1e-3);
    }
}
