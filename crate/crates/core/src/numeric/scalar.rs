use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Floating-point scalar the whole crate is generic over: `f32` or `f64`.
///
/// The associated constants give the default tolerance profile for the type.
/// They are one order looser at each layer (feasibility, value, convexity).
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Default
    + Sum
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    const FEASIBILITY_EPS: f64;
    const VALUE_EPS: f64;
    const CONVEXITY_EPS: f64;
    const UNBOUNDED_THRESHOLD: f64;

    /// Converts an `f64` literal. Literals used in this crate are representable
    /// in every implementing type.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const FEASIBILITY_EPS: f64 = 1e-8;
    const VALUE_EPS: f64 = 1e-7;
    const CONVEXITY_EPS: f64 = 1e-6;
    const UNBOUNDED_THRESHOLD: f64 = 1e10;
}

impl Scalar for f32 {
    const FEASIBILITY_EPS: f64 = 1e-4;
    const VALUE_EPS: f64 = 1e-3;
    const CONVEXITY_EPS: f64 = 1e-2;
    const UNBOUNDED_THRESHOLD: f64 = 1e6;
}
