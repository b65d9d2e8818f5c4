use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::numeric::{ExtendedReal, Scalar, Tolerances};

/// The certificate checks, named as on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CheckKind {
    #[serde(rename = "equivalence")]
    Equivalence,
    #[serde(rename = "graph-epigraph")]
    GraphEpigraph,
    #[serde(rename = "theorem1")]
    Theorem1,
    #[serde(rename = "theorem2")]
    Theorem2,
    #[serde(rename = "lemma")]
    Lemma,
    #[serde(rename = "lipschitz")]
    Lipschitz,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Equivalence,
        CheckKind::GraphEpigraph,
        CheckKind::Theorem1,
        CheckKind::Theorem2,
        CheckKind::Lemma,
        CheckKind::Lipschitz,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckKind::Equivalence => "equivalence",
            CheckKind::GraphEpigraph => "graph-epigraph",
            CheckKind::Theorem1 => "theorem1",
            CheckKind::Theorem2 => "theorem2",
            CheckKind::Lemma => "lemma",
            CheckKind::Lipschitz => "lipschitz",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    PreconditionViolated,
}

/// Concrete evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case", bound(serialize = "T: Scalar"))]
pub enum Witness<T: Scalar> {
    /// A parameter with the values observed there (e.g. `v` and `v_phi`).
    Point {
        y: Vec<T>,
        values: Vec<ExtendedReal<T>>,
    },
    /// A cost level `mu` at `y` where membership and `mu >= v_phi(y)` were compared.
    Level {
        y: Vec<T>,
        mu: T,
        member: bool,
        aux_value: ExtendedReal<T>,
    },
    /// A midpoint-convexity pair with `v(y1)`, `v(y2)` and `v((y1 + y2) / 2)`.
    Pair {
        y1: Vec<T>,
        y2: Vec<T>,
        values: Vec<ExtendedReal<T>>,
    },
    /// A bound propagated from `y0` to `y` through `y_alpha`.
    Propagation {
        y0: Vec<T>,
        y: Vec<T>,
        alpha: T,
        y_alpha: Vec<T>,
        bound: T,
        value: T,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct CheckResult<T: Scalar> {
    pub name: CheckKind,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness<T>>,
    pub details: String,
    /// Set when a precondition violation is the documented outcome.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub expected: bool,
}

impl<T: Scalar> CheckResult<T> {
    pub fn pass(name: CheckKind, details: impl Into<String>) -> Self {
        CheckResult {
            name,
            verdict: Verdict::Pass,
            witness: None,
            details: details.into(),
            expected: false,
        }
    }

    pub fn fail(name: CheckKind, witness: Witness<T>, details: impl Into<String>) -> Self {
        CheckResult {
            name,
            verdict: Verdict::Fail,
            witness: Some(witness),
            details: details.into(),
            expected: false,
        }
    }

    pub fn precondition(
        name: CheckKind,
        witness: Option<Witness<T>>,
        details: impl Into<String>,
    ) -> Self {
        CheckResult {
            name,
            verdict: Verdict::PreconditionViolated,
            witness,
            details: details.into(),
            expected: false,
        }
    }

    /// A solver error turned into a failing verdict at `y`.
    pub(crate) fn errored(name: CheckKind, y: &[T], err: &Error) -> Self {
        Self::fail(
            name,
            Witness::Point {
                y: y.to_vec(),
                values: vec![],
            },
            format!("solver error: {err}"),
        )
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct GridDescription<T> {
    pub lower: Vec<T>,
    pub upper: Vec<T>,
    pub points: Vec<usize>,
}

/// Machine-readable verdicts for one program.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct AnalysisReport<T: Scalar> {
    pub instance: String,
    pub checks: Vec<CheckResult<T>>,
    pub tolerances: Tolerances<T>,
    pub seed: u64,
    pub grid: GridDescription<T>,
    pub region: GridDescription<T>,
}

impl<T: Scalar> AnalysisReport<T> {
    /// No check failed and every precondition violation was expected.
    pub fn acceptable(&self) -> bool {
        self.checks.iter().all(|c| match c.verdict {
            Verdict::Pass => true,
            Verdict::PreconditionViolated => c.expected,
            Verdict::Fail => false,
        })
    }
}
