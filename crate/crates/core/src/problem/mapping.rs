use crate::error::{Error, Result};
use crate::numeric::linalg::{dot, Matrix};
use crate::numeric::{Scalar, Tolerances};

/// Polyhedral feasible-set mapping `F(y) = { x : A x <= c + B y }`.
///
/// Its graph `{ (x, y) : A x - B y <= c }` is a closed convex polyhedron.
#[derive(Clone, Debug, PartialEq)]
pub struct FeasibleMapping<T> {
    a: Matrix<T>,
    b: Matrix<T>,
    c: Vec<T>,
}

/// `F(y)` for a one-dimensional decision variable; `None` ends are unbounded.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FeasibleInterval<T> {
    Empty,
    Interval { lower: Option<T>, upper: Option<T> },
}

impl<T: Scalar> FeasibleMapping<T> {
    pub fn new(a: Matrix<T>, b: Matrix<T>, c: Vec<T>) -> Result<Self> {
        if b.rows() != a.rows() {
            return Err(Error::DimensionMismatch {
                context: "rows of B",
                expected: a.rows(),
                found: b.rows(),
            });
        }
        if c.len() != a.rows() {
            return Err(Error::DimensionMismatch {
                context: "length of c",
                expected: a.rows(),
                found: c.len(),
            });
        }
        if a.cols() == 0 || b.cols() == 0 {
            return Err(Error::InvalidArgument(
                "decision and parameter dimensions must be at least 1".into(),
            ));
        }
        if let Some(v) = c.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "feasible mapping c",
                value: v.as_f64(),
            });
        }
        Ok(FeasibleMapping { a, b, c })
    }

    /// `F(y) = R^n` for every `y`.
    pub fn unconstrained(n: usize, m: usize) -> Self {
        FeasibleMapping {
            a: Matrix::zeros(0, n),
            b: Matrix::zeros(0, m),
            c: Vec::new(),
        }
    }

    pub fn a(&self) -> &Matrix<T> {
        &self.a
    }

    pub fn b(&self) -> &Matrix<T> {
        &self.b
    }

    pub fn c(&self) -> &[T] {
        &self.c
    }

    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub fn m(&self) -> usize {
        self.b.cols()
    }

    pub fn rows(&self) -> usize {
        self.a.rows()
    }

    /// Right-hand side `c + B y`.
    pub fn rhs(&self, y: &[T]) -> Vec<T> {
        self.b
            .mul_vec(y)
            .into_iter()
            .zip(&self.c)
            .map(|(by, &c)| c + by)
            .collect()
    }

    /// Largest positive component of `A x - B y - c`, zero when satisfied.
    pub fn violation(&self, x: &[T], y: &[T]) -> T {
        let rhs = self.rhs(y);
        (0..self.rows())
            .map(|i| dot(self.a.row(i), x) - rhs[i])
            .fold(T::zero(), T::max)
    }

    pub fn contains(&self, x: &[T], y: &[T], tol: &Tolerances<T>) -> bool {
        self.violation(x, y) <= tol.feasibility_eps
    }

    /// Interval form of `F(y)` when `n = 1`.
    pub fn interval(&self, y: &[T], tol: &Tolerances<T>) -> Result<FeasibleInterval<T>> {
        if self.n() != 1 {
            return Err(Error::DimensionMismatch {
                context: "interval feasible set (decision dimension)",
                expected: 1,
                found: self.n(),
            });
        }
        let rhs = self.rhs(y);
        let tiny = T::epsilon() * T::of(1e3);
        let mut lower: Option<T> = None;
        let mut upper: Option<T> = None;
        for (i, &r) in rhs.iter().enumerate() {
            let a = self.a[(i, 0)];
            if a > tiny {
                let bound = r / a;
                upper = Some(upper.map_or(bound, |u| u.min(bound)));
            } else if a < -tiny {
                let bound = r / a;
                lower = Some(lower.map_or(bound, |l| l.max(bound)));
            } else if r < -tol.feasibility_eps {
                return Ok(FeasibleInterval::Empty);
            }
        }
        if let (Some(l), Some(u)) = (lower, upper) {
            if l > u + tol.feasibility_eps {
                return Ok(FeasibleInterval::Empty);
            }
            if l > u {
                // within tolerance: collapse to a point
                let mid = (l + u) / T::of(2.0);
                return Ok(FeasibleInterval::Interval {
                    lower: Some(mid),
                    upper: Some(mid),
                });
            }
        }
        Ok(FeasibleInterval::Interval { lower, upper })
    }
}
