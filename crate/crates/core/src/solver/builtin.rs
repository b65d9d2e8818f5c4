use super::SolveOutcome;
use crate::error::{Error, Result};
use crate::numeric::{Scalar, Tolerances};
use crate::problem::{CostSpec, FeasibleInterval, ParametricProgram, TailLimit};

const GOLDEN_ITERATIONS: usize = 400;

/// Minimizes a builtin one-dimensional cost over the interval `F(y)`.
///
/// Compact intervals use golden-section search (the cost is convex, hence
/// unimodal). Unbounded intervals are settled by the builtin's monotone
/// structure: a descent tail reaching an open end gives `Unbounded` or
/// `InfNotAttained`; otherwise the minimizer is the clamped unconstrained
/// argmin, or the finite end the cost decreases towards.
pub fn solve_builtin_1d<T: Scalar>(
    p: &ParametricProgram<T>,
    y: &[T],
    tol: &Tolerances<T>,
) -> Result<SolveOutcome<T>> {
    let CostSpec::Builtin(builtin) = p.cost() else {
        return Err(Error::WrongCostKind {
            kernel: "builtin 1-D",
            kind: p.cost().kind_name(),
        });
    };
    if p.n() != 1 {
        return Err(Error::DimensionMismatch {
            context: "builtin cost decision dimension",
            expected: 1,
            found: p.n(),
        });
    }
    p.check_y(y)?;
    let (lower, upper) = match p.feasible().interval(y, tol)? {
        FeasibleInterval::Empty => return Ok(SolveOutcome::Infeasible),
        FeasibleInterval::Interval { lower, upper } => (lower, upper),
    };
    let f = |x: T| builtin.eval(x, y);
    let optimal = |x: T| SolveOutcome::Optimal {
        value: f(x),
        minimizer: vec![x],
    };

    if let (Some(lo), Some(hi)) = (lower, upper) {
        let x = golden_section(&f, lo, hi, tol);
        return Ok(optimal(x));
    }

    if let Some(tail) = builtin.descent_tail::<T>() {
        let open_end = if tail.towards_plus {
            upper.is_none()
        } else {
            lower.is_none()
        };
        if open_end {
            return match tail.limit {
                TailLimit::MinusInfinity => Ok(SolveOutcome::Unbounded {
                    ray: Some(vec![if tail.towards_plus { T::one() } else { -T::one() }]),
                }),
                TailLimit::Infimum(infimum) => {
                    if !p.attainment().covers(y) {
                        return Err(Error::UndeclaredNonAttainment(
                            y.iter().map(|v| v.as_f64()).collect(),
                        ));
                    }
                    Ok(SolveOutcome::InfNotAttained { infimum })
                }
            };
        }
        // Monotone towards the bounded end.
        let end = if tail.towards_plus { upper } else { lower };
        return Ok(optimal(end.expect("bounded in the descent direction")));
    }

    match builtin.unconstrained_argmin(y) {
        Some(argmin) => {
            let x = match (lower, upper) {
                (Some(lo), _) if argmin < lo => lo,
                (_, Some(hi)) if argmin > hi => hi,
                _ => argmin,
            };
            Ok(optimal(x))
        }
        None => Err(Error::InvalidArgument(format!(
            "builtin {} has neither a minimizer nor a descent tail",
            builtin.name()
        ))),
    }
}

/// Golden-section search on `[lo, hi]`; the endpoints are candidates too so a
/// monotone cost returns its end exactly.
fn golden_section<T: Scalar, F: Fn(T) -> T>(f: &F, lo: T, hi: T, tol: &Tolerances<T>) -> T {
    let ratio = T::of((5f64.sqrt() - 1.0) / 2.0);
    let x_tol = tol.value_eps * T::of(1e-3) * (T::one() + lo.abs() + hi.abs());
    let (mut a, mut b) = (lo, hi);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..GOLDEN_ITERATIONS {
        if b - a <= x_tol {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    let mid = (a + b) / T::of(2.0);
    [lo, hi, mid]
        .into_iter()
        .fold((mid, f(mid)), |(best, fb), x| {
            let fx = f(x);
            if fx < fb {
                (x, fx)
            } else {
                (best, fb)
            }
        })
        .0
}
