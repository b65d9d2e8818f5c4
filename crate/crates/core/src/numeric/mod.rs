//! Extended reals, tolerance policy and parameter-space geometry.

mod extended;
mod geometry;
pub mod linalg;
mod scalar;
mod tolerance;

pub use extended::{ext_compare, ext_max, ext_min, ExtendedReal};
pub use geometry::{sample_ball, seeded_rng, Ball, ParamBox};
pub use scalar::Scalar;
pub use tolerance::Tolerances;

/// Euclidean distance between two points of equal dimension.
pub fn distance<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .map(|(&u, &v)| (u - v) * (u - v))
        .fold(T::zero(), |acc, s| acc + s)
        .sqrt()
}
