//! JSON program definitions. Field names are documented in
//! `schema/program.schema.json` at the repository root.

use serde::{Deserialize, Serialize};

use super::{
    AffinePiece, AttainmentMeta, BuiltinCost, CostSpec, FeasibleMapping, ParametricProgram,
    QuadraticCost,
};
use crate::error::{Error, Result};
use crate::numeric::linalg::Matrix;
use crate::numeric::{ParamBox, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProgramDefinition<T> {
    pub n: usize,
    pub m: usize,
    pub cost: CostDefinition<T>,
    pub feasible: FeasibleDefinition<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub not_attained: Option<NotAttainedDefinition<T>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CostDefinition<T> {
    AffineMax {
        pieces: Vec<PieceDefinition<T>>,
    },
    Quadratic {
        #[serde(rename = "Q")]
        q: Vec<Vec<T>>,
        g: Vec<T>,
        #[serde(default)]
        h: T,
    },
    Builtin {
        name: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceDefinition<T> {
    pub p: Vec<T>,
    pub q: Vec<T>,
    #[serde(default)]
    pub r: T,
}

/// `F(y) = { x : A x <= c + B y }`, matrices as row-major nested arrays.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FeasibleDefinition<T> {
    #[serde(rename = "A")]
    pub a: Vec<Vec<T>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<T>>,
    pub c: Vec<T>,
}

/// Either the string `"everywhere"` or a parameter box.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NotAttainedDefinition<T> {
    Everywhere(String),
    Region { lower: Vec<T>, upper: Vec<T> },
}

impl<T: Scalar> ProgramDefinition<T> {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Definition(e.to_string()))
    }

    pub fn into_program(self) -> Result<ParametricProgram<T>> {
        let (n, m) = (self.n, self.m);
        let feasible = FeasibleMapping::new(
            Matrix::from_rows(self.feasible.a, n)?,
            Matrix::from_rows(self.feasible.b, m)?,
            self.feasible.c,
        )?;
        let cost = match self.cost {
            CostDefinition::AffineMax { pieces } => CostSpec::AffineMax(
                pieces
                    .into_iter()
                    .map(|p| AffinePiece {
                        p: p.p,
                        q: p.q,
                        r: p.r,
                    })
                    .collect(),
            ),
            CostDefinition::Quadratic { q, g, h } => {
                CostSpec::Quadratic(QuadraticCost::new(Matrix::from_rows(q, n + m)?, g, h)?)
            }
            CostDefinition::Builtin { name } => CostSpec::Builtin(BuiltinCost::from_name(&name)?),
        };
        let program = ParametricProgram::new(cost, feasible)?;
        let meta = match self.not_attained {
            None => AttainmentMeta::Attained,
            Some(NotAttainedDefinition::Everywhere(s)) if s == "everywhere" => {
                AttainmentMeta::NotAttainedEverywhere
            }
            Some(NotAttainedDefinition::Everywhere(s)) => {
                return Err(Error::Definition(format!(
                    "not_attained must be \"everywhere\" or a box, got \"{s}\""
                )))
            }
            Some(NotAttainedDefinition::Region { lower, upper }) => {
                AttainmentMeta::NotAttainedOn(ParamBox::new(lower, upper)?)
            }
        };
        program.with_attainment(meta)
    }
}

impl<T: Scalar> ParametricProgram<T> {
    /// Parses and validates a JSON program definition.
    pub fn from_json(text: &str) -> Result<Self> {
        ProgramDefinition::from_json(text)?.into_program()
    }
}
