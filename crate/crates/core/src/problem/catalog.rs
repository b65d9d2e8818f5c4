use std::sync::Arc;

use super::{
    AffinePiece, AttainmentMeta, BuiltinCost, CostSpec, FeasibleMapping, ParametricProgram,
    QuadraticCost,
};
use crate::analysis::CheckKind;
use crate::error::{Error, Result};
use crate::numeric::linalg::Matrix;
use crate::numeric::{ExtendedReal, ParamBox, Scalar};

/// A Lipschitz constant of `v` known in closed form on a box.
#[derive(Clone, Debug, PartialEq)]
pub struct KnownLipschitz<T> {
    pub constant: T,
    pub region: ParamBox<T>,
}

/// An analytic test instance with a closed-form value function.
#[derive(Clone, Debug)]
pub struct CatalogInstance<T: Scalar> {
    pub id: &'static str,
    pub program: ParametricProgram<T>,
    pub known_domain: &'static str,
    /// The behaviour of `v` this instance exercises.
    pub pathology: &'static str,
    pub known_lipschitz: Option<KnownLipschitz<T>>,
    pub notes: &'static str,
    /// Parameter range for sweeps and equivalence grids; may leave `dom F`.
    pub sweep_box: ParamBox<T>,
    /// Open convex region inside `dom F` for the theorem checks.
    pub analysis_box: ParamBox<T>,
    /// Checks run by `paramvex check` when none are requested.
    pub default_checks: Vec<CheckKind>,
    /// Checks whose precondition-violated verdict is the documented outcome.
    pub expected_violations: Vec<CheckKind>,
}

impl<T: Scalar> CatalogInstance<T> {
    pub fn expects_violation(&self, check: CheckKind) -> bool {
        self.expected_violations.contains(&check)
    }
}

fn interval<T: Scalar>(lo: f64, hi: f64) -> ParamBox<T> {
    ParamBox::interval(T::of(lo), T::of(hi)).expect("static catalog box")
}

fn rows<T: Scalar>(entries: &[&[f64]], cols: usize) -> Matrix<T> {
    Matrix::from_rows(
        entries
            .iter()
            .map(|r| r.iter().map(|&v| T::of(v)).collect())
            .collect(),
        cols,
    )
    .expect("static catalog matrix")
}

/// `F(y) = { x : x >= y }`.
fn at_least_y<T: Scalar>() -> FeasibleMapping<T> {
    FeasibleMapping::new(rows(&[&[-1.0]], 1), rows(&[&[-1.0]], 1), vec![T::zero()])
        .expect("static catalog mapping")
}

fn linear_cost<T: Scalar>(w: f64) -> CostSpec<T> {
    CostSpec::AffineMax(vec![AffinePiece {
        p: vec![T::of(w)],
        q: vec![T::zero()],
        r: T::zero(),
    }])
}

fn quadratic<T: Scalar>(q: &[&[f64]]) -> CostSpec<T> {
    CostSpec::Quadratic(
        QuadraticCost::new(rows(q, 2), vec![T::zero(); 2], T::zero()).expect("static catalog PSD"),
    )
}

fn program<T: Scalar>(cost: CostSpec<T>, feasible: FeasibleMapping<T>) -> ParametricProgram<T> {
    ParametricProgram::new(cost, feasible).expect("static catalog program")
}

fn finite<T: Scalar>(v: T) -> ExtendedReal<T> {
    ExtendedReal::Finite(v)
}

/// The analytic instances, all with `n = m = 1`.
pub fn catalog<T: Scalar>() -> Vec<CatalogInstance<T>> {
    use CheckKind::*;
    let all = CheckKind::ALL.to_vec();
    vec![
        CatalogInstance {
            id: "P-LIN",
            program: program(linear_cost(1.0), at_least_y())
                .with_reference(Arc::new(|y: &[T]| finite(y[0]))),
            known_domain: "all y",
            pathology: "none; v(y) = y is affine",
            known_lipschitz: Some(KnownLipschitz {
                constant: T::one(),
                region: interval(-1.0, 1.0),
            }),
            notes: "min x s.t. x >= y",
            sweep_box: interval(-1.0, 1.0),
            analysis_box: interval(-1.0, 1.0),
            default_checks: all.clone(),
            expected_violations: vec![],
        },
        CatalogInstance {
            id: "P-RELU",
            program: program(quadratic(&[&[2.0, 0.0], &[0.0, 0.0]]), at_least_y())
                .with_reference(Arc::new(|y: &[T]| {
                    let r = y[0].max(T::zero());
                    finite(r * r)
                })),
            known_domain: "all y",
            pathology: "none; v(y) = max(0, y)^2 has a smooth kink",
            known_lipschitz: Some(KnownLipschitz {
                constant: T::of(4.0),
                region: interval(0.0, 2.0),
            }),
            notes: "min x^2 s.t. x >= y",
            sweep_box: interval(-2.0, 2.0),
            analysis_box: interval(-2.0, 2.0),
            default_checks: all.clone(),
            expected_violations: vec![],
        },
        CatalogInstance {
            id: "P-INT",
            program: program(
                linear_cost(-1.0),
                FeasibleMapping::new(
                    rows(&[&[-1.0], &[1.0]], 1),
                    rows(&[&[0.0], &[1.0]], 1),
                    vec![T::zero(); 2],
                )
                .expect("static catalog mapping"),
            )
            .with_reference(Arc::new(|y: &[T]| {
                if y[0] >= T::zero() {
                    finite(-y[0])
                } else {
                    ExtendedReal::PlusInfinity
                }
            })),
            known_domain: "y >= 0",
            pathology: "empty F(y) for y < 0, v = +inf outside the domain",
            known_lipschitz: Some(KnownLipschitz {
                constant: T::one(),
                region: interval(0.25, 2.0),
            }),
            notes: "min -x s.t. 0 <= x <= y",
            sweep_box: interval(-1.0, 1.0),
            analysis_box: interval(0.25, 2.0),
            default_checks: all.clone(),
            expected_violations: vec![],
        },
        CatalogInstance {
            id: "P-UNB",
            program: program(linear_cost(-1.0), at_least_y())
                .with_reference(Arc::new(|_: &[T]| ExtendedReal::MinusInfinity)),
            known_domain: "all y",
            pathology: "v ≡ −∞, cost unbounded below on every F(y)",
            known_lipschitz: None,
            notes: "min -x s.t. x >= y",
            sweep_box: interval(-1.0, 1.0),
            analysis_box: interval(0.0, 1.0),
            default_checks: vec![Equivalence, GraphEpigraph, Theorem1, Lemma, Lipschitz],
            expected_violations: vec![Lemma, Lipschitz],
        },
        CatalogInstance {
            id: "P-EXP",
            program: program(CostSpec::Builtin(BuiltinCost::NegExp), at_least_y())
                .with_attainment(AttainmentMeta::NotAttainedEverywhere)
                .expect("static catalog attainment")
                .with_reference(Arc::new(|_: &[T]| ExtendedReal::MinusInfinity)),
            known_domain: "all y",
            pathology: "infimum 0 never attained, non-closed-valued F_φ, v ≡ −∞ by convention",
            known_lipschitz: None,
            notes: "min e^{-x} s.t. x >= y",
            sweep_box: interval(-1.0, 1.0),
            analysis_box: interval(-1.0, 1.0),
            default_checks: all.clone(),
            expected_violations: vec![GraphEpigraph, Theorem1, Theorem2, Lemma, Lipschitz],
        },
        CatalogInstance {
            id: "P-PROJ",
            program: program(quadratic(&[&[2.0, -2.0], &[-2.0, 2.0]]), {
                FeasibleMapping::new(
                    rows(&[&[1.0], &[-1.0]], 1),
                    rows(&[&[0.0], &[0.0]], 1),
                    vec![T::one(); 2],
                )
                .expect("static catalog mapping")
            })
            .with_reference(Arc::new(|y: &[T]| {
                let d = (y[0].abs() - T::one()).max(T::zero());
                finite(d * d)
            })),
            known_domain: "all y",
            pathology: "none; v(y) = dist(y, [-1, 1])^2 is flat on [-1, 1]",
            known_lipschitz: Some(KnownLipschitz {
                constant: T::zero(),
                region: interval(-0.5, 0.5),
            }),
            notes: "min (x - y)^2 s.t. -1 <= x <= 1",
            sweep_box: interval(-3.0, 3.0),
            analysis_box: interval(-2.0, 2.0),
            default_checks: all,
            expected_violations: vec![],
        },
    ]
}

pub fn catalog_instance<T: Scalar>(id: &str) -> Result<CatalogInstance<T>> {
    catalog()
        .into_iter()
        .find(|inst| inst.id == id)
        .ok_or_else(|| Error::UnknownInstance(id.to_string()))
}
