use crate::error::{Error, Result};
use crate::numeric::linalg::{dot, recompose, symmetric_eigen, Matrix};
use crate::numeric::Scalar;

/// One affine piece `p.x + q.y + r` of a pointwise maximum.
#[derive(Clone, Debug, PartialEq)]
pub struct AffinePiece<T> {
    pub p: Vec<T>,
    pub q: Vec<T>,
    pub r: T,
}

impl<T: Scalar> AffinePiece<T> {
    pub fn eval(&self, x: &[T], y: &[T]) -> T {
        dot(&self.p, x) + dot(&self.q, y) + self.r
    }
}

/// Jointly convex quadratic `1/2 z'Qz + g'z + h` in `z = (x, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticCost<T> {
    q: Matrix<T>,
    g: Vec<T>,
    h: T,
}

/// Eigenvalues below this floor reject the matrix as indefinite.
const PSD_FLOOR: f64 = -1e-10;

impl<T: Scalar> QuadraticCost<T> {
    /// Validates symmetry and positive semidefiniteness. Eigenvalues in
    /// `[-1e-10, 0)` are clipped to zero.
    pub fn new(q: Matrix<T>, g: Vec<T>, h: T) -> Result<Self> {
        if q.rows() != q.cols() {
            return Err(Error::DimensionMismatch {
                context: "quadratic cost matrix (square)",
                expected: q.rows(),
                found: q.cols(),
            });
        }
        if g.len() != q.rows() {
            return Err(Error::DimensionMismatch {
                context: "quadratic cost linear term",
                expected: q.rows(),
                found: g.len(),
            });
        }
        if !h.is_finite() || g.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "quadratic cost coefficients",
                value: h.as_f64(),
            });
        }
        let sym_tol = T::of(1e-10) * q.max_abs().max(T::one());
        if !q.is_symmetric(sym_tol) {
            return Err(Error::NotSymmetric);
        }
        let (values, vectors) = symmetric_eigen(&q);
        let smallest = values.iter().copied().fold(T::infinity(), T::min);
        let q = if smallest < T::zero() {
            if smallest < T::of(PSD_FLOOR) {
                return Err(Error::NotPositiveSemidefinite(smallest.as_f64()));
            }
            let clipped: Vec<T> = values.iter().map(|&v| v.max(T::zero())).collect();
            recompose(&clipped, &vectors)
        } else {
            q
        };
        Ok(QuadraticCost { q, g, h })
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.q
    }

    pub fn linear(&self) -> &[T] {
        &self.g
    }

    pub fn constant(&self) -> T {
        self.h
    }

    pub fn dim(&self) -> usize {
        self.q.rows()
    }

    pub fn eval(&self, x: &[T], y: &[T]) -> T {
        let z: Vec<T> = x.iter().chain(y).copied().collect();
        let qz = self.q.mul_vec(&z);
        T::of(0.5) * dot(&z, &qz) + dot(&self.g, &z) + self.h
    }

    /// Gradient of `x -> phi(x, y)`: `Q_xx x + Q_xy y + g_x`.
    pub fn gradient_x(&self, x: &[T], y: &[T]) -> Vec<T> {
        let n = x.len();
        let z: Vec<T> = x.iter().chain(y).copied().collect();
        (0..n)
            .map(|i| dot(self.q.row(i), &z) + self.g[i])
            .collect()
    }

    /// Largest eigenvalue of `Q_xx`, the Lipschitz constant of `gradient_x`.
    pub fn curvature_x(&self, n: usize) -> T {
        let qxx = self.q.block(0, n, 0, n);
        let (values, _) = symmetric_eigen(&qxx);
        values.into_iter().fold(T::zero(), T::max)
    }
}

/// Closed-form convex costs of a scalar decision `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinCost {
    /// `e^{-x}`: decreasing, infimum 0 approached as `x -> +inf`, never attained.
    NegExp,
    /// `|x - y_1|`: kink minimum at `x = y_1`.
    AbsDiff,
}

/// Limit of a builtin along a direction in which it keeps decreasing.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TailLimit<T> {
    /// Finite infimum that no finite `x` attains.
    Infimum(T),
    MinusInfinity,
}

/// A direction of monotone, never-ending descent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DescentTail<T> {
    /// `true` when the descent is towards `x -> +inf`.
    pub towards_plus: bool,
    pub limit: TailLimit<T>,
}

impl BuiltinCost {
    pub fn name(&self) -> &'static str {
        match self {
            BuiltinCost::NegExp => "neg_exp",
            BuiltinCost::AbsDiff => "abs_diff",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "neg_exp" => Ok(BuiltinCost::NegExp),
            "abs_diff" => Ok(BuiltinCost::AbsDiff),
            other => Err(Error::Definition(format!(
                "unknown builtin cost `{other}` (expected neg_exp or abs_diff)"
            ))),
        }
    }

    pub fn eval<T: Scalar>(&self, x: T, y: &[T]) -> T {
        match self {
            BuiltinCost::NegExp => (-x).exp(),
            BuiltinCost::AbsDiff => (x - y[0]).abs(),
        }
    }

    /// Global minimizer over `x in R`, if one exists.
    pub fn unconstrained_argmin<T: Scalar>(&self, y: &[T]) -> Option<T> {
        match self {
            BuiltinCost::NegExp => None,
            BuiltinCost::AbsDiff => Some(y[0]),
        }
    }

    pub fn descent_tail<T: Scalar>(&self) -> Option<DescentTail<T>> {
        match self {
            BuiltinCost::NegExp => Some(DescentTail {
                towards_plus: true,
                limit: TailLimit::Infimum(T::zero()),
            }),
            BuiltinCost::AbsDiff => None,
        }
    }
}

/// Convex cost `phi(x, y)`.
#[derive(Clone, Debug, PartialEq)]
pub enum CostSpec<T> {
    /// `max_i (p_i.x + q_i.y + r_i)`.
    AffineMax(Vec<AffinePiece<T>>),
    Quadratic(QuadraticCost<T>),
    Builtin(BuiltinCost),
}

impl<T: Scalar> CostSpec<T> {
    /// The linear cost `w.x`, independent of `y`.
    pub fn linear(w: Vec<T>, m: usize) -> Self {
        CostSpec::AffineMax(vec![AffinePiece {
            p: w,
            q: vec![T::zero(); m],
            r: T::zero(),
        }])
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            CostSpec::AffineMax(_) => "affine_max",
            CostSpec::Quadratic(_) => "quadratic",
            CostSpec::Builtin(_) => "builtin",
        }
    }

    pub(crate) fn check_dims(&self, n: usize, m: usize) -> Result<()> {
        match self {
            CostSpec::AffineMax(pieces) => {
                if pieces.is_empty() {
                    return Err(Error::InvalidArgument(
                        "affine-max cost needs at least one piece".into(),
                    ));
                }
                for piece in pieces {
                    if piece.p.len() != n {
                        return Err(Error::DimensionMismatch {
                            context: "affine piece p",
                            expected: n,
                            found: piece.p.len(),
                        });
                    }
                    if piece.q.len() != m {
                        return Err(Error::DimensionMismatch {
                            context: "affine piece q",
                            expected: m,
                            found: piece.q.len(),
                        });
                    }
                    let finite = piece.p.iter().chain(&piece.q).all(|v| v.is_finite())
                        && piece.r.is_finite();
                    if !finite {
                        return Err(Error::NonFinite {
                            context: "affine piece",
                            value: piece.r.as_f64(),
                        });
                    }
                }
                Ok(())
            }
            CostSpec::Quadratic(q) if q.dim() != n + m => Err(Error::DimensionMismatch {
                context: "quadratic cost matrix (n + m)",
                expected: n + m,
                found: q.dim(),
            }),
            CostSpec::Quadratic(_) => Ok(()),
            CostSpec::Builtin(_) if n != 1 => Err(Error::DimensionMismatch {
                context: "builtin cost decision dimension",
                expected: 1,
                found: n,
            }),
            CostSpec::Builtin(_) => Ok(()),
        }
    }

    pub fn eval(&self, x: &[T], y: &[T]) -> T {
        match self {
            CostSpec::AffineMax(pieces) => pieces
                .iter()
                .map(|piece| piece.eval(x, y))
                .fold(T::neg_infinity(), T::max),
            CostSpec::Quadratic(q) => q.eval(x, y),
            CostSpec::Builtin(b) => b.eval(x[0], y),
        }
    }
}
