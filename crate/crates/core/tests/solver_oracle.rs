mod support;

use paramvex_core::numeric::linalg::Matrix;
use paramvex_core::numeric::seeded_rng;
use paramvex_core::problem::catalog_instance;
use paramvex_core::solver::{minimize, solve_lp, LpProblem, SolveOutcome};
use paramvex_core::Tolerances;
use support::oracle::{enumerate_vertices, grid_min, random_lp, RandomLp, VertexOptimum};

fn to_problem(lp: &RandomLp) -> LpProblem<f64> {
    let cols = lp.c.len();
    LpProblem::new(
        lp.c.clone(),
        Matrix::from_rows(lp.g.clone(), cols).unwrap(),
        lp.h.clone(),
    )
    .unwrap()
}

#[test]
fn bounded_random_lps_match_vertex_enumeration() {
    let tol = Tolerances::default();
    let mut rng = seeded_rng(2024);
    let (mut optimal, mut infeasible) = (0, 0);
    for i in 0..200 {
        let lp = random_lp(&mut rng, true);
        let out = solve_lp(&to_problem(&lp), &tol).unwrap();
        match (enumerate_vertices(&lp.c, &lp.g, &lp.h), &out) {
            (VertexOptimum::Optimal { value, .. }, SolveOutcome::Optimal { value: got, minimizer }) => {
                assert!((value - got).abs() <= 1e-7, "lp {i}: oracle {value}, solver {got}");
                let p = to_problem(&lp);
                assert!(p.violation(minimizer) <= 1e-8, "lp {i}: minimizer infeasible");
                optimal += 1;
            }
            (VertexOptimum::Infeasible, SolveOutcome::Infeasible) => infeasible += 1,
            (oracle, solver) => panic!("lp {i}: oracle {oracle:?}, solver {solver:?}"),
        }
    }
    assert!(optimal >= 100, "only {optimal} feasible instances");
    let _ = infeasible;
}

#[test]
fn unbounded_verdicts_carry_valid_rays() {
    let tol = Tolerances::default();
    let mut rng = seeded_rng(77);
    let mut rays = 0;
    for i in 0..200 {
        let lp = random_lp(&mut rng, false);
        let out = solve_lp(&to_problem(&lp), &tol).unwrap();
        match out {
            SolveOutcome::Unbounded { ray } => {
                let d = ray.expect("unbounded verdict without a ray");
                let descent: f64 = lp.c.iter().zip(&d).map(|(a, b)| a * b).sum();
                assert!(descent < -1e-9, "lp {i}: ray is not a descent direction");
                for row in &lp.g {
                    let gd: f64 = row.iter().zip(&d).map(|(a, b)| a * b).sum();
                    assert!(gd <= 1e-9, "lp {i}: ray leaves the recession cone");
                }
                rays += 1;
            }
            SolveOutcome::Optimal { value, .. } => match enumerate_vertices(&lp.c, &lp.g, &lp.h) {
                VertexOptimum::Optimal { value: oracle, .. } => {
                    assert!((value - oracle).abs() <= 1e-7, "lp {i}: {value} vs {oracle}")
                }
                VertexOptimum::Infeasible => panic!("lp {i}: optimal but no feasible vertex"),
            },
            SolveOutcome::Infeasible => {
                assert_eq!(enumerate_vertices(&lp.c, &lp.g, &lp.h), VertexOptimum::Infeasible)
            }
            other => panic!("lp {i}: unexpected {other:?}"),
        }
    }
    assert!(rays >= 20, "only {rays} unbounded instances");
}

#[test]
fn quadratic_kernel_matches_brute_force_grid() {
    let tol = Tolerances::default();
    let relu = catalog_instance::<f64>("P-RELU").unwrap().program;
    for y in [0.5, -0.3, 1.7] {
        let oracle = grid_min(|x| if x >= y { x * x } else { f64::INFINITY }, -3.0, 3.0, 600_001);
        let got = minimize(&relu, &[y], &tol).unwrap().value().finite_value().unwrap();
        assert!((got - oracle).abs() < 1e-4, "y = {y}: {got} vs {oracle}");
    }
    let proj = catalog_instance::<f64>("P-PROJ").unwrap().program;
    for y in [2.5, -1.5, 0.2] {
        let oracle = grid_min(|x| (x - y) * (x - y), -1.0, 1.0, 200_001);
        let got = minimize(&proj, &[y], &tol).unwrap().value().finite_value().unwrap();
        assert!((got - oracle).abs() < 1e-6, "y = {y}: {got} vs {oracle}");
    }
}

#[test]
fn lp_solver_is_deterministic() {
    let tol = Tolerances::default();
    let mut rng = seeded_rng(5);
    for _ in 0..20 {
        let p = to_problem(&random_lp(&mut rng, true));
        assert_eq!(solve_lp(&p, &tol).unwrap(), solve_lp(&p, &tol).unwrap());
    }
}
