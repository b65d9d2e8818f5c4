use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::{distance, Scalar};
use crate::error::{Error, Result};

/// Deterministic generator used for every sampled check.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Open Euclidean ball in parameter space; the neighbourhoods of the
/// local-boundedness checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Ball<T> {
    center: Vec<T>,
    radius: T,
}

impl<T: Scalar> Ball<T> {
    pub fn new(center: Vec<T>, radius: T) -> Result<Self> {
        if center.is_empty() {
            return Err(Error::InvalidArgument("ball center must be non-empty".into()));
        }
        if center.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument("ball center must be finite".into()));
        }
        if !(radius.is_finite() && radius > T::zero()) {
            return Err(Error::InvalidArgument(format!(
                "ball radius must be positive, got {radius}"
            )));
        }
        Ok(Ball { center, radius })
    }

    pub fn center(&self) -> &[T] {
        &self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    /// Strict containment: `|y - center| < radius`.
    pub fn contains(&self, y: &[T]) -> bool {
        y.len() == self.dim() && distance(y, &self.center) < self.radius
    }

    pub fn sample(&self, count: usize, seed: u64) -> Vec<Vec<T>> {
        sample_ball(self, count, seed)
    }
}

/// Draws `count` points uniformly from the open ball, deterministically in
/// `seed`. Direction from a normalized Gaussian, radius `r * u^(1/m)`.
pub fn sample_ball<T: Scalar>(ball: &Ball<T>, count: usize, seed: u64) -> Vec<Vec<T>> {
    let mut rng = seeded_rng(seed);
    let m = ball.dim();
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let dir: Vec<f64> = (0..m).map(|_| rng.sample(StandardNormal)).collect();
        let norm = dir.iter().map(|d| d * d).sum::<f64>().sqrt();
        if norm < 1e-12 {
            continue;
        }
        let u: f64 = rng.random();
        let scale = ball.radius.as_f64() * u.powf(1.0 / m as f64) / norm;
        let y: Vec<T> = ball
            .center
            .iter()
            .zip(&dir)
            .map(|(&c, &d)| c + T::of(d * scale))
            .collect();
        // Rounding can land a point on the sphere; redraw it.
        if ball.contains(&y) {
            points.push(y);
        }
    }
    points
}

/// Axis-aligned box, the concrete open convex analysis region.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParamBox<T> {
    lower: Vec<T>,
    upper: Vec<T>,
}

impl<T: Scalar> ParamBox<T> {
    pub fn new(lower: Vec<T>, upper: Vec<T>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::InvalidArgument(format!(
                "box bounds must be non-empty and of equal length ({} vs {})",
                lower.len(),
                upper.len()
            )));
        }
        for (l, u) in lower.iter().zip(&upper) {
            if !(l.is_finite() && u.is_finite() && l <= u) {
                return Err(Error::InvalidArgument(format!(
                    "box bounds must be finite with lower <= upper, got [{l}, {u}]"
                )));
            }
        }
        Ok(ParamBox { lower, upper })
    }

    /// One-dimensional interval `[lower, upper]`.
    pub fn interval(lower: T, upper: T) -> Result<Self> {
        Self::new(vec![lower], vec![upper])
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn has_interior(&self) -> bool {
        self.lower.iter().zip(&self.upper).all(|(l, u)| l < u)
    }

    pub fn center(&self) -> Vec<T> {
        let two = T::of(2.0);
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(&l, &u)| (l + u) / two)
            .collect()
    }

    /// Smallest half-width over the coordinates.
    pub fn min_half_width(&self) -> T {
        let two = T::of(2.0);
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(&l, &u)| (u - l) / two)
            .fold(T::infinity(), T::min)
    }

    pub fn contains(&self, y: &[T]) -> bool {
        y.len() == self.dim()
            && y
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (l, u))| l <= v && v <= u)
    }

    /// Does the open ball meet the closed box?
    pub fn intersects_ball(&self, ball: &Ball<T>) -> bool {
        if ball.dim() != self.dim() {
            return false;
        }
        let closest: Vec<T> = ball
            .center()
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(&c, (&l, &u))| c.max(l).min(u))
            .collect();
        ball.contains(&closest)
    }

    /// Inclusive tensor-product linspace with `points[i]` points along
    /// coordinate `i`; the first coordinate varies slowest.
    pub fn grid(&self, points: &[usize]) -> Result<Vec<Vec<T>>> {
        if points.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "grid points per dimension",
                expected: self.dim(),
                found: points.len(),
            });
        }
        if let Some(&p) = points.iter().find(|&&p| p < 2) {
            return Err(Error::InvalidArgument(format!(
                "grid needs at least 2 points per dimension, got {p}"
            )));
        }
        let axes: Vec<Vec<T>> = (0..self.dim())
            .map(|i| linspace(self.lower[i], self.upper[i], points[i]))
            .collect();
        let mut out = vec![Vec::with_capacity(self.dim())];
        for axis in &axes {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    axis.iter().map(move |&v| {
                        let mut y = prefix.clone();
                        y.push(v);
                        y
                    })
                })
                .collect();
        }
        Ok(out)
    }

    /// Same number of points along every coordinate.
    pub fn uniform_grid(&self, per_dim: usize) -> Result<Vec<Vec<T>>> {
        self.grid(&vec![per_dim; self.dim()])
    }

    pub fn sample_point<R: Rng>(&self, rng: &mut R) -> Vec<T> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(&l, &u)| {
                let t: f64 = rng.random();
                l + (u - l) * T::of(t)
            })
            .collect()
    }
}

fn linspace<T: Scalar>(lo: T, hi: T, n: usize) -> Vec<T> {
    let steps = T::of((n - 1) as f64);
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * T::of(i as f64) / steps
            }
        })
        .collect()
}
