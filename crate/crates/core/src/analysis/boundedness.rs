use rayon::prelude::*;
use serde::Serialize;

use super::{aux_value_function, fcost_membership, value_function};
use super::{CheckKind, CheckResult, Witness};
use crate::error::{Error, Result};
use crate::numeric::{seeded_rng, Ball, ExtendedReal, ParamBox, Scalar, Tolerances};
use crate::problem::ParametricProgram;
use crate::solver::feasible_set_nonempty;

/// Ball samples (besides the center) used by the local-boundedness checks.
pub const THEOREM1_SAMPLES: usize = 50;
/// Random pairs for the midpoint-convexity test.
pub const MIDPOINT_PAIRS: usize = 500;

/// Evidence that `F_phi` is bounded below by `bound` on the ball.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct LowerBoundCertificate<T> {
    pub center: Vec<T>,
    pub ball: Ball<T>,
    pub bound: T,
    /// Sampled `(y, v(y))` pairs; every value is at least `bound`.
    pub evidence: Vec<(Vec<T>, T)>,
}

/// Samples `v` on the ball (center included). Returns a certificate with
/// `bound = min v - value_eps` when no sample is `-inf` and, as a second
/// look through the cost-level oracle, `bound - 10 value_eps` lies outside
/// every sampled `F_phi(y)`. Parameters with empty `F(y)` impose no bound.
pub fn check_local_lower_bound<T: Scalar>(
    p: &ParametricProgram<T>,
    ball: &Ball<T>,
    sample_count: usize,
    tol: &Tolerances<T>,
    seed: u64,
) -> Result<Option<LowerBoundCertificate<T>>> {
    if sample_count < 10 {
        return Err(Error::InvalidArgument(format!(
            "local lower bound needs at least 10 samples, got {sample_count}"
        )));
    }
    let mut points = vec![ball.center().to_vec()];
    points.extend(ball.sample(sample_count, seed));
    let values: Vec<ExtendedReal<T>> = points
        .par_iter()
        .map(|y| value_function(p, y, tol).map(|o| o.value()))
        .collect::<Result<_>>()?;
    if values.iter().any(ExtendedReal::is_minus_infinity) {
        return Ok(None);
    }
    let evidence: Vec<(Vec<T>, T)> = points
        .into_iter()
        .zip(&values)
        .filter_map(|(y, v)| v.finite_value().map(|v| (y, v)))
        .collect();
    let Some(min) = evidence.iter().map(|(_, v)| *v).reduce(T::min) else {
        return Ok(None);
    };
    let bound = min - tol.value_eps;
    let below = bound - tol.band();
    let breached = evidence
        .par_iter()
        .map(|(y, _)| fcost_membership(p, y, below, tol))
        .collect::<Result<Vec<bool>>>()?;
    if breached.into_iter().any(|b| b) {
        return Ok(None);
    }
    Ok(Some(LowerBoundCertificate {
        center: ball.center().to_vec(),
        ball: ball.clone(),
        bound,
        evidence,
    }))
}

/// Probes `y0`, `y0 +- delta e_i` and `2m` random points of the `delta`-ball
/// for a nonempty `F(y)`; `dom F = dom F_phi`.
pub fn check_domain_interior<T: Scalar>(
    p: &ParametricProgram<T>,
    y0: &[T],
    delta: T,
    tol: &Tolerances<T>,
    seed: u64,
) -> Result<bool> {
    if !(delta > T::zero()) {
        return Err(Error::InvalidArgument(format!(
            "interior probe radius must be positive, got {delta}"
        )));
    }
    p.check_y(y0)?;
    let m = y0.len();
    let mut probes = vec![y0.to_vec()];
    for i in 0..m {
        for sign in [T::one(), -T::one()] {
            let mut y = y0.to_vec();
            y[i] = y[i] + sign * delta;
            probes.push(y);
        }
    }
    probes.extend(Ball::new(y0.to_vec(), delta)?.sample(2 * m, seed));
    let feasible = probes
        .par_iter()
        .map(|y| feasible_set_nonempty(p, y, tol))
        .collect::<Result<Vec<bool>>>()?;
    Ok(feasible.into_iter().all(|f| f))
}

/// The three equivalent statements at `y0` on a ball of the given radius:
/// (1) `F_phi` locally bounded below, (2) `v_phi > -inf`, (3) `v > -inf` on
/// the samples. Passes iff all three agree.
pub fn check_theorem1<T: Scalar>(
    p: &ParametricProgram<T>,
    y0: &[T],
    radius: T,
    tol: &Tolerances<T>,
    seed: u64,
) -> CheckResult<T> {
    let kind = CheckKind::Theorem1;
    let ball = match Ball::new(y0.to_vec(), radius) {
        Ok(b) => b,
        Err(e) => return CheckResult::precondition(kind, None, e.to_string()),
    };
    if p.attainment().intersects_ball(&ball) {
        return CheckResult::precondition(
            kind,
            Some(Witness::Point {
                y: y0.to_vec(),
                values: vec![],
            }),
            "F_phi is not closed-valued on the neighbourhood (declared non-attainment)",
        );
    }
    match check_domain_interior(p, y0, radius, tol, seed) {
        Ok(true) => {}
        Ok(false) => {
            return CheckResult::precondition(
                kind,
                Some(Witness::Point {
                    y: y0.to_vec(),
                    values: vec![],
                }),
                "y0 is not an interior point of dom F_phi at this radius",
            )
        }
        Err(e) => return CheckResult::errored(kind, y0, &e),
    }

    let mut points = vec![y0.to_vec()];
    points.extend(ball.sample(THEOREM1_SAMPLES, seed));
    let evaluated: Result<Vec<(ExtendedReal<T>, ExtendedReal<T>)>> = points
        .par_iter()
        .map(|y| Ok((value_function(p, y, tol)?.value(), aux_value_function(p, y, tol)?)))
        .collect();
    let evaluated = match evaluated {
        Ok(v) => v,
        Err(e) => return CheckResult::errored(kind, y0, &e),
    };
    if let Some(i) = evaluated.iter().position(|(v, _)| v.is_plus_infinity()) {
        return CheckResult::precondition(
            kind,
            Some(Witness::Point {
                y: points[i].clone(),
                values: vec![evaluated[i].0],
            }),
            "the neighbourhood leaves dom F",
        );
    }
    let bounded = match check_local_lower_bound(p, &ball, THEOREM1_SAMPLES, tol, seed) {
        Ok(cert) => cert.is_some(),
        Err(e) => return CheckResult::errored(kind, y0, &e),
    };
    let aux_finite = evaluated.iter().all(|(_, a)| !a.is_minus_infinity());
    let v_finite = evaluated.iter().all(|(v, _)| !v.is_minus_infinity());
    let details = format!(
        "locally bounded below: {bounded}, v_phi > -inf: {aux_finite}, v > -inf: {v_finite}"
    );
    if bounded == aux_finite && aux_finite == v_finite {
        CheckResult::pass(kind, details)
    } else {
        let i = evaluated
            .iter()
            .position(|(v, a)| v.is_minus_infinity() != a.is_minus_infinity())
            .unwrap_or(0);
        CheckResult::fail(
            kind,
            Witness::Point {
                y: points[i].clone(),
                values: vec![evaluated[i].0, evaluated[i].1],
            },
            details,
        )
    }
}

/// Properness (every grid value finite) and midpoint convexity of `v` on the
/// region, with `MIDPOINT_PAIRS` random pairs.
pub fn check_theorem2<T: Scalar>(
    p: &ParametricProgram<T>,
    region: &ParamBox<T>,
    grid_per_dim: usize,
    tol: &Tolerances<T>,
    seed: u64,
) -> CheckResult<T> {
    let kind = CheckKind::Theorem2;
    if !region.has_interior() {
        return CheckResult::precondition(kind, None, "region has empty interior");
    }
    if p.attainment().intersects_box(region) {
        return CheckResult::precondition(
            kind,
            Some(Witness::Point {
                y: region.center(),
                values: vec![],
            }),
            "F_phi is not closed on the region (declared non-attainment)",
        );
    }
    let grid = match region.uniform_grid(grid_per_dim) {
        Ok(g) => g,
        Err(e) => return CheckResult::precondition(kind, None, e.to_string()),
    };
    let outcomes: Result<Vec<ExtendedReal<T>>> = grid
        .par_iter()
        .map(|y| value_function(p, y, tol).map(|o| o.value()))
        .collect();
    let values = match outcomes {
        Ok(v) => v,
        Err(e) => return CheckResult::errored(kind, &region.center(), &e),
    };
    if let Some(i) = values.iter().position(ExtendedReal::is_plus_infinity) {
        return CheckResult::precondition(
            kind,
            Some(Witness::Point {
                y: grid[i].clone(),
                values: vec![values[i]],
            }),
            "region is not contained in dom F",
        );
    }
    if let Some(i) = values.iter().position(ExtendedReal::is_minus_infinity) {
        return CheckResult::fail(
            kind,
            Witness::Point {
                y: grid[i].clone(),
                values: vec![values[i]],
            },
            "v is not proper on the region",
        );
    }

    let mut rng = seeded_rng(seed);
    let pairs: Vec<(Vec<T>, Vec<T>)> = (0..MIDPOINT_PAIRS)
        .map(|_| (region.sample_point(&mut rng), region.sample_point(&mut rng)))
        .collect();
    let two = T::of(2.0);
    let evaluated: Result<Vec<[ExtendedReal<T>; 3]>> = pairs
        .par_iter()
        .map(|(a, b)| {
            let mid: Vec<T> = a.iter().zip(b).map(|(&u, &v)| (u + v) / two).collect();
            Ok([
                value_function(p, a, tol)?.value(),
                value_function(p, b, tol)?.value(),
                value_function(p, &mid, tol)?.value(),
            ])
        })
        .collect();
    let evaluated = match evaluated {
        Ok(v) => v,
        Err(e) => return CheckResult::errored(kind, &region.center(), &e),
    };
    for ((a, b), vals) in pairs.iter().zip(&evaluated) {
        let witness = || Witness::Pair {
            y1: a.clone(),
            y2: b.clone(),
            values: vals.to_vec(),
        };
        let (Some(va), Some(vb), Some(vm)) = (
            vals[0].finite_value(),
            vals[1].finite_value(),
            vals[2].finite_value(),
        ) else {
            return CheckResult::fail(kind, witness(), "v is not finite at a sampled pair");
        };
        if vm > (va + vb) / two + tol.convexity_eps {
            return CheckResult::fail(kind, witness(), "midpoint convexity violated");
        }
    }
    CheckResult::pass(
        kind,
        format!(
            "v finite on {} grid points; {} midpoint pairs convex within {}",
            grid.len(),
            MIDPOINT_PAIRS,
            tol.convexity_eps
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::Verdict;
    use crate::problem::catalog_instance;

    fn program(id: &str) -> ParametricProgram<f64> {
        catalog_instance(id).unwrap().program
    }

    #[test]
    fn local_lower_bound_examples() {
        let tol = Tolerances::default();
        let ball = Ball::new(vec![0.0], 1.0).unwrap();
        let cert = check_local_lower_bound(&program("P-LIN"), &ball, 50, &tol, 3)
            .unwrap()
            .unwrap();
        assert!(cert.bound > -1.0 - 1e-6 && cert.bound < -0.8);
        assert!(cert.evidence.iter().all(|(_, v)| *v >= cert.bound - tol.value_eps));
        assert!(check_local_lower_bound(&program("P-UNB"), &ball, 50, &tol, 3)
            .unwrap()
            .is_none());
        let relu = check_local_lower_bound(&program("P-RELU"), &ball, 50, &tol, 3)
            .unwrap()
            .unwrap();
        assert!(relu.bound >= -tol.value_eps - 1e-15);
        assert!(check_local_lower_bound(&program("P-LIN"), &ball, 5, &tol, 3).is_err());
    }

    #[test]
    fn domain_interior_examples() {
        let tol = Tolerances::default();
        assert!(check_domain_interior(&program("P-LIN"), &[0.0], 0.1, &tol, 1).unwrap());
        assert!(!check_domain_interior(&program("P-INT"), &[0.0], 0.1, &tol, 1).unwrap());
        assert!(check_domain_interior(&program("P-INT"), &[1.0], 0.1, &tol, 1).unwrap());
    }

    #[test]
    fn theorem1_examples() {
        let tol = Tolerances::default();
        let r = check_theorem1(&program("P-LIN"), &[0.0], 0.5, &tol, 1);
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.details.contains("bounded below: true"));
        let r = check_theorem1(&program("P-UNB"), &[1.0], 0.5, &tol, 1);
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.details.contains("bounded below: false"));
        let r = check_theorem1(&program("P-EXP"), &[0.0], 0.5, &tol, 1);
        assert_eq!(r.verdict, Verdict::PreconditionViolated);
        let r = check_theorem1(&program("P-INT"), &[0.0], 0.5, &tol, 1);
        assert_eq!(r.verdict, Verdict::PreconditionViolated);
    }

    #[test]
    fn theorem2_examples() {
        let tol = Tolerances::default();
        let relu = ParamBox::interval(-2.0, 2.0).unwrap();
        assert_eq!(
            check_theorem2(&program("P-RELU"), &relu, 41, &tol, 5).verdict,
            Verdict::Pass
        );
        let unit = ParamBox::interval(-1.0, 1.0).unwrap();
        assert_eq!(
            check_theorem2(&program("P-LIN"), &unit, 11, &tol, 5).verdict,
            Verdict::Pass
        );
        let r = check_theorem2(&program("P-UNB"), &ParamBox::interval(0.0, 1.0).unwrap(), 11, &tol, 5);
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(matches!(r.witness, Some(Witness::Point { .. })));
        let r = check_theorem2(&program("P-INT"), &unit, 11, &tol, 5);
        assert_eq!(r.verdict, Verdict::PreconditionViolated);
    }
}
