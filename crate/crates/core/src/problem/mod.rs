//! Parametric convex programs `v(y) = min { phi(x, y) : x in F(y) }`.

mod catalog;
mod cost;
mod definition;
mod mapping;
mod program;

pub use catalog::{catalog, catalog_instance, CatalogInstance, KnownLipschitz};
pub use cost::{AffinePiece, BuiltinCost, CostSpec, DescentTail, QuadraticCost, TailLimit};
pub use definition::{
    CostDefinition, FeasibleDefinition, NotAttainedDefinition, PieceDefinition, ProgramDefinition,
};
pub use mapping::{FeasibleInterval, FeasibleMapping};
pub use program::{AttainmentMeta, DimensionLimits, ParametricProgram, ReferenceFn};
