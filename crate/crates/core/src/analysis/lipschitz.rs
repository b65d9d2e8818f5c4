use rayon::prelude::*;

use super::{value_function, CheckKind, CheckResult, Witness};
use crate::error::{Error, Result};
use crate::numeric::{distance, seeded_rng, ExtendedReal, ParamBox, Scalar, Tolerances};
use crate::problem::ParametricProgram;

/// Pairs closer than this are redrawn so round-off is not amplified.
pub const MIN_PAIR_DISTANCE: f64 = 1e-4;

/// Largest sampled difference quotient `|v(y1) - v(y2)| / |y1 - y2|` over
/// `pair_count` random pairs in the region. Deterministic in `seed`.
///
/// Fails with [`Error::Precondition`] when `v` is not finite at a sample or
/// the region meets declared non-attainment.
pub fn estimate_lipschitz<T: Scalar>(
    p: &ParametricProgram<T>,
    region: &ParamBox<T>,
    pair_count: usize,
    seed: u64,
    tol: &Tolerances<T>,
) -> Result<T> {
    if pair_count == 0 {
        return Err(Error::InvalidArgument("pair_count must be positive".into()));
    }
    if !region.has_interior() {
        return Err(Error::Precondition("region has empty interior".into()));
    }
    if p.attainment().intersects_box(region) {
        return Err(Error::Precondition(
            "region meets declared non-attainment, v = -inf there".into(),
        ));
    }
    let floor = T::of(MIN_PAIR_DISTANCE);
    let mut rng = seeded_rng(seed);
    let mut pairs = Vec::with_capacity(pair_count);
    while pairs.len() < pair_count {
        let a = region.sample_point(&mut rng);
        let b = region.sample_point(&mut rng);
        if distance(&a, &b) >= floor {
            pairs.push((a, b));
        }
    }
    let quotients: Vec<T> = pairs
        .par_iter()
        .map(|(a, b)| {
            let va = finite_value(p, a, tol)?;
            let vb = finite_value(p, b, tol)?;
            Ok((va - vb).abs() / distance(a, b))
        })
        .collect::<Result<_>>()?;
    Ok(quotients.into_iter().fold(T::zero(), T::max))
}

fn finite_value<T: Scalar>(p: &ParametricProgram<T>, y: &[T], tol: &Tolerances<T>) -> Result<T> {
    match value_function(p, y, tol)?.value() {
        ExtendedReal::Finite(v) => Ok(v),
        other => Err(Error::Precondition(format!(
            "v({:?}) = {other} is not finite",
            y.iter().map(|v| v.as_f64()).collect::<Vec<_>>()
        ))),
    }
}

/// Runs [`estimate_lipschitz`]; when a closed-form constant is known the
/// estimate must match it within 10% (plus `1e-3` absolute).
pub fn check_lipschitz<T: Scalar>(
    p: &ParametricProgram<T>,
    region: &ParamBox<T>,
    pair_count: usize,
    seed: u64,
    tol: &Tolerances<T>,
    known: Option<T>,
) -> CheckResult<T> {
    let kind = CheckKind::Lipschitz;
    let estimate = match estimate_lipschitz(p, region, pair_count, seed, tol) {
        Ok(l) => l,
        Err(Error::Precondition(msg)) => {
            return CheckResult::precondition(
                kind,
                Some(Witness::Point {
                    y: region.center(),
                    values: vec![],
                }),
                msg,
            )
        }
        Err(e) => return CheckResult::errored(kind, &region.center(), &e),
    };
    match known {
        Some(l) if (estimate - l).abs() > T::of(0.1) * l + T::of(1e-3) => CheckResult::fail(
            kind,
            Witness::Point {
                y: region.center(),
                values: vec![ExtendedReal::Finite(estimate)],
            },
            format!("estimated constant {estimate} does not match the known constant {l}"),
        ),
        Some(l) => CheckResult::pass(
            kind,
            format!("estimated constant {estimate} over {pair_count} pairs (known {l})"),
        ),
        None => CheckResult::pass(
            kind,
            format!("estimated constant {estimate} over {pair_count} pairs"),
        ),
    }
}
