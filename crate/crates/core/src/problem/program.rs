use std::fmt;
use std::sync::Arc;

use super::{CostSpec, FeasibleMapping};
use crate::error::{Error, Result};
use crate::numeric::{Ball, ExtendedReal, ParamBox, Scalar, Tolerances};

/// Closed-form oracle `y -> v(y)` attached to catalog instances.
pub type ReferenceFn<T> = Arc<dyn Fn(&[T]) -> ExtendedReal<T> + Send + Sync>;

/// Where the infimum of `phi(., y)` over `F(y)` is finite but not attained,
/// which is exactly where the cost-level set `F_phi(y)` fails to be closed.
#[derive(Clone, Debug, PartialEq)]
pub enum AttainmentMeta<T> {
    Attained,
    NotAttainedEverywhere,
    NotAttainedOn(ParamBox<T>),
}

impl<T: Scalar> AttainmentMeta<T> {
    pub fn covers(&self, y: &[T]) -> bool {
        match self {
            AttainmentMeta::Attained => false,
            AttainmentMeta::NotAttainedEverywhere => true,
            AttainmentMeta::NotAttainedOn(region) => region.contains(y),
        }
    }

    pub fn intersects_ball(&self, ball: &Ball<T>) -> bool {
        match self {
            AttainmentMeta::Attained => false,
            AttainmentMeta::NotAttainedEverywhere => true,
            AttainmentMeta::NotAttainedOn(region) => region.intersects_ball(ball),
        }
    }

    pub fn intersects_box(&self, other: &ParamBox<T>) -> bool {
        match self {
            AttainmentMeta::Attained => false,
            AttainmentMeta::NotAttainedEverywhere => true,
            AttainmentMeta::NotAttainedOn(region) => {
                region.dim() == other.dim()
                    && (0..region.dim()).all(|i| {
                        region.lower()[i] <= other.upper()[i]
                            && other.lower()[i] <= region.upper()[i]
                    })
            }
        }
    }
}

/// Caps on problem size; desk-scale dense kernels only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionLimits {
    pub max_dim: usize,
    pub max_rows: usize,
}

impl Default for DimensionLimits {
    fn default() -> Self {
        DimensionLimits {
            max_dim: 32,
            max_rows: 128,
        }
    }
}

/// `v(y) = min { phi(x, y) : x in F(y) }` with its attainment metadata.
#[derive(Clone)]
pub struct ParametricProgram<T> {
    cost: CostSpec<T>,
    feasible: FeasibleMapping<T>,
    attainment: AttainmentMeta<T>,
    reference: Option<ReferenceFn<T>>,
}

impl<T: Scalar> fmt::Debug for ParametricProgram<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParametricProgram")
            .field("n", &self.n())
            .field("m", &self.m())
            .field("cost", &self.cost)
            .field("feasible", &self.feasible)
            .field("attainment", &self.attainment)
            .field("reference", &self.reference.is_some())
            .finish()
    }
}

impl<T: Scalar> ParametricProgram<T> {
    pub fn new(cost: CostSpec<T>, feasible: FeasibleMapping<T>) -> Result<Self> {
        cost.check_dims(feasible.n(), feasible.m())?;
        Ok(ParametricProgram {
            cost,
            feasible,
            attainment: AttainmentMeta::Attained,
            reference: None,
        })
    }

    pub fn with_attainment(mut self, meta: AttainmentMeta<T>) -> Result<Self> {
        if let AttainmentMeta::NotAttainedOn(region) = &meta {
            if region.dim() != self.m() {
                return Err(Error::DimensionMismatch {
                    context: "attainment region",
                    expected: self.m(),
                    found: region.dim(),
                });
            }
        }
        self.attainment = meta;
        Ok(self)
    }

    pub fn with_reference(mut self, reference: ReferenceFn<T>) -> Self {
        self.reference = Some(reference);
        self
    }

    pub fn cost(&self) -> &CostSpec<T> {
        &self.cost
    }

    pub fn feasible(&self) -> &FeasibleMapping<T> {
        &self.feasible
    }

    pub fn attainment(&self) -> &AttainmentMeta<T> {
        &self.attainment
    }

    /// Decision dimension.
    pub fn n(&self) -> usize {
        self.feasible.n()
    }

    /// Parameter dimension.
    pub fn m(&self) -> usize {
        self.feasible.m()
    }

    pub fn check_limits(&self, limits: &DimensionLimits) -> Result<()> {
        if self.n() > limits.max_dim || self.m() > limits.max_dim {
            return Err(Error::DimensionCap(format!(
                "n = {}, m = {} exceed the cap {}",
                self.n(),
                self.m(),
                limits.max_dim
            )));
        }
        if self.feasible.rows() > limits.max_rows {
            return Err(Error::DimensionCap(format!(
                "{} constraint rows exceed the cap {}",
                self.feasible.rows(),
                limits.max_rows
            )));
        }
        Ok(())
    }

    pub(crate) fn check_x(&self, x: &[T]) -> Result<()> {
        if x.len() != self.n() {
            return Err(Error::DimensionMismatch {
                context: "decision vector",
                expected: self.n(),
                found: x.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_y(&self, y: &[T]) -> Result<()> {
        if y.len() != self.m() {
            return Err(Error::DimensionMismatch {
                context: "parameter vector",
                expected: self.m(),
                found: y.len(),
            });
        }
        if y.iter().any(|v| v.is_nan()) {
            return Err(Error::NotANumber("parameter vector"));
        }
        Ok(())
    }

    /// `phi(x, y)`.
    pub fn evaluate_cost(&self, x: &[T], y: &[T]) -> Result<T> {
        self.check_x(x)?;
        self.check_y(y)?;
        let value = self.cost.eval(x, y);
        if value.is_nan() {
            return Err(Error::NotANumber("cost evaluation"));
        }
        Ok(value)
    }

    /// `x in F(y)` up to `feasibility_eps`.
    pub fn feasible_membership(&self, x: &[T], y: &[T], tol: &Tolerances<T>) -> Result<bool> {
        self.check_x(x)?;
        self.check_y(y)?;
        Ok(self.feasible.contains(x, y, tol))
    }

    /// `(x, y, mu) in G = epi phi ∩ (graph F × R)`.
    pub fn feasible_epigraph_membership(
        &self,
        x: &[T],
        y: &[T],
        mu: T,
        tol: &Tolerances<T>,
    ) -> Result<bool> {
        Ok(self.feasible_membership(x, y, tol)?
            && mu >= self.evaluate_cost(x, y)? - tol.value_eps)
    }

    pub fn reference_value(&self, y: &[T]) -> Option<ExtendedReal<T>> {
        self.reference.as_ref().map(|f| f(y))
    }

    pub fn has_reference(&self) -> bool {
        self.reference.is_some()
    }
}
