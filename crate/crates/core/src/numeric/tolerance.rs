use serde::Serialize;

use super::Scalar;
use crate::error::{Error, Result};

/// Numerical slack used by every comparison in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances<T> {
    /// Allowed constraint violation `A x - B y - c`.
    pub feasibility_eps: T,
    /// Allowed difference when comparing costs.
    pub value_eps: T,
    /// Slack in midpoint-convexity tests.
    pub convexity_eps: T,
    /// Magnitude beyond which a descent ray is declared.
    pub unbounded_threshold: T,
}

impl<T: Scalar> Tolerances<T> {
    pub fn new(
        feasibility_eps: T,
        value_eps: T,
        convexity_eps: T,
        unbounded_threshold: T,
    ) -> Result<Self> {
        let tol = Tolerances {
            feasibility_eps,
            value_eps,
            convexity_eps,
            unbounded_threshold,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("feasibility_eps", self.feasibility_eps),
            ("value_eps", self.value_eps),
            ("convexity_eps", self.convexity_eps),
            ("unbounded_threshold", self.unbounded_threshold),
        ];
        for (name, v) in fields {
            if !(v.is_finite() && v > T::zero()) {
                return Err(Error::InvalidTolerances(format!(
                    "{name} must be finite and strictly positive, got {v}"
                )));
            }
        }
        if self.value_eps > self.convexity_eps {
            return Err(Error::InvalidTolerances(format!(
                "value_eps {} exceeds convexity_eps {}",
                self.value_eps, self.convexity_eps
            )));
        }
        Ok(())
    }

    /// Named profiles: `default`, `strict` (all eps / 10) and `loose` (all eps * 10).
    pub fn profile(name: &str) -> Result<Self> {
        let base = Self::default();
        let factor = match name {
            "default" => return Ok(base),
            "strict" => T::of(0.1),
            "loose" => T::of(10.0),
            other => {
                return Err(Error::InvalidTolerances(format!(
                    "unknown profile `{other}` (expected default, strict or loose)"
                )))
            }
        };
        Self::new(
            base.feasibility_eps * factor,
            base.value_eps * factor,
            base.convexity_eps * factor,
            base.unbounded_threshold,
        )
    }

    /// The boundary band `10 * value_eps` used by the cross-checks.
    pub fn band(&self) -> T {
        T::of(10.0) * self.value_eps
    }
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        Tolerances {
            feasibility_eps: T::of(T::FEASIBILITY_EPS),
            value_eps: T::of(T::VALUE_EPS),
            convexity_eps: T::of(T::CONVEXITY_EPS),
            unbounded_threshold: T::of(T::UNBOUNDED_THRESHOLD),
        }
    }
}
