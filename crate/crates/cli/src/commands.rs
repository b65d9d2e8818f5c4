use paramvex_core::analysis::{
    check_equivalence, check_graph_epigraph, check_lemma, check_lipschitz, check_theorem1,
    check_theorem2, evaluate_grid, sample_cost_levels, AnalysisReport, CheckKind, CheckResult,
    GridDescription, Verdict,
};
use paramvex_core::numeric::{Ball, ParamBox};
use paramvex_core::problem::catalog;
use paramvex_core::ExtendedReal;

use crate::config::Scenario;

pub const LEVELS_PER_POINT: usize = 20;
pub const LIPSCHITZ_PAIRS: usize = 1000;

pub fn catalog_listing() -> String {
    let mut out = String::new();
    for inst in catalog::<f64>() {
        out.push_str(&format!(
            "{:<7} n={} m={}  domain: {:<7}  {}\n",
            inst.id,
            inst.program.n(),
            inst.program.m(),
            inst.known_domain,
            inst.pathology
        ));
    }
    out
}

fn number(v: f64) -> String {
    if v == 0.0 {
        "0".into()
    } else {
        v.to_string()
    }
}

pub fn sweep_csv(s: &Scenario) -> Result<Vec<u8>, String> {
    let points = s.grid();
    let grid = evaluate_grid(&s.program, &points, &s.tolerances).map_err(|e| e.to_string())?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = (1..=s.program.m()).map(|i| format!("y_{i}")).collect();
    header.extend(["status".into(), "value".into()]);
    w.write_record(&header).map_err(|e| e.to_string())?;
    for ((y, v), status) in points.iter().zip(&grid.values).zip(&grid.statuses) {
        let mut row: Vec<String> = y.iter().map(|&c| number(c)).collect();
        row.push(status.as_str().into());
        row.push(v.finite_value().map(number).unwrap_or_default());
        w.write_record(&row).map_err(|e| e.to_string())?;
    }
    w.into_inner().map_err(|e| e.to_string())
}

/// Per-dimension count keeping roughly `budget` points overall.
fn per_dim(budget: f64, m: usize, cap: usize) -> usize {
    (budget.powf(1.0 / m as f64).floor() as usize).clamp(2, cap)
}

fn cost_range(values: &[ExtendedReal<f64>]) -> (f64, f64) {
    let finite: Vec<f64> = values.iter().filter_map(|v| v.finite_value()).collect();
    if finite.is_empty() {
        return (-1.0, 1.0);
    }
    let lo = finite.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = finite.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (lo - 1.0, hi + 1.0)
}

fn describe(b: &ParamBox<f64>, points: Vec<usize>) -> GridDescription<f64> {
    GridDescription {
        lower: b.lower().to_vec(),
        upper: b.upper().to_vec(),
        points,
    }
}

fn run_check(s: &Scenario, kind: CheckKind, grid: &[Vec<f64>]) -> Result<CheckResult<f64>, String> {
    let (p, tol, seed, m) = (&s.program, &s.tolerances, s.seed, s.program.m());
    let center = s.region.center();
    let radius = 0.25 * s.region.min_half_width();
    Ok(match kind {
        CheckKind::Equivalence => check_equivalence(p, grid, tol),
        CheckKind::GraphEpigraph => {
            let values = evaluate_grid(p, grid, tol).map_err(|e| e.to_string())?.values;
            let (lo, hi) = cost_range(&values);
            let samples = sample_cost_levels(grid, LEVELS_PER_POINT, lo, hi, seed);
            check_graph_epigraph(p, &samples, tol)
        }
        CheckKind::Theorem1 => check_theorem1(p, &center, radius, tol, seed),
        CheckKind::Theorem2 => check_theorem2(p, &s.region, per_dim(2000.0, m, 41), tol, seed),
        CheckKind::Lemma => {
            let targets = s
                .region
                .uniform_grid(per_dim(100.0, m, 9))
                .map_err(|e| e.to_string())?;
            match Ball::new(center, radius) {
                Ok(ball) => check_lemma(p, &ball, &targets, tol, seed),
                Err(e) => CheckResult::precondition(kind, None, e.to_string()),
            }
        }
        CheckKind::Lipschitz => {
            let known = s.instance.as_ref().and_then(|i| i.known_lipschitz.as_ref());
            let region = known.map_or(&s.region, |k| &k.region);
            check_lipschitz(p, region, LIPSCHITZ_PAIRS, seed, tol, known.map(|k| k.constant))
        }
    })
}

pub fn check_report(s: &Scenario) -> Result<AnalysisReport<f64>, String> {
    let grid = s.grid();
    let mut checks = Vec::with_capacity(s.checks.len());
    for &kind in &s.checks {
        let mut result = run_check(s, kind, &grid)?;
        if result.verdict == Verdict::PreconditionViolated {
            result.expected = s.instance.as_ref().is_some_and(|i| i.expects_violation(kind));
        }
        checks.push(result);
    }
    Ok(AnalysisReport {
        instance: s.name.clone(),
        checks,
        tolerances: s.tolerances,
        seed: s.seed,
        grid: describe(&s.grid_box, s.grid_points.clone()),
        region: describe(&s.region, vec![]),
    })
}
