use proptest::prelude::*;

use paramvex_core::analysis::{
    aux_value_function, check_theorem1, fcost_membership, lemma_lower_bound, value_function,
    check_local_lower_bound, Verdict,
};
use paramvex_core::numeric::linalg::Matrix;
use paramvex_core::numeric::{ext_compare, ext_min, sample_ball, Ball};
use paramvex_core::problem::{catalog, catalog_instance, CostSpec, FeasibleMapping, QuadraticCost};
use paramvex_core::solver::{feasible_set_nonempty, solve_lp, LpProblem};
use paramvex_core::{ExtendedReal, Program64, Tolerances};

const ATTAINING: [&str; 5] = ["P-LIN", "P-RELU", "P-INT", "P-UNB", "P-PROJ"];

fn program(id: &str) -> Program64 {
    catalog_instance::<f64>(id).unwrap().program
}

fn ext() -> impl Strategy<Value = ExtendedReal<f64>> {
    prop_oneof![
        Just(ExtendedReal::MinusInfinity),
        Just(ExtendedReal::PlusInfinity),
        (-1e3..1e3f64).prop_map(ExtendedReal::Finite),
    ]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<f64>> {
    prop::collection::vec(prop::collection::vec(-2.0..2.0f64, cols), rows)
        .prop_map(move |r| Matrix::from_rows(r, cols).unwrap())
}

/// Random 2x1 mapping `A x <= c + B y` in R^2 with one parameter.
fn mapping() -> impl Strategy<Value = FeasibleMapping<f64>> {
    (matrix(3, 2), matrix(3, 1), prop::collection::vec(-1.0..2.0f64, 3))
        .prop_map(|(a, b, c)| FeasibleMapping::new(a, b, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ext_compare_is_a_trichotomy(a in ext(), b in ext()) {
        let tol = Tolerances::default();
        let ab = ext_compare(a, b, &tol);
        prop_assert_eq!(ab, ext_compare(b, a, &tol).reverse());
        if a == b {
            prop_assert_eq!(ab, std::cmp::Ordering::Equal);
        }
    }

    #[test]
    fn ext_min_is_commutative_and_associative(a in ext(), b in ext(), c in ext()) {
        prop_assert_eq!(ext_min(a, b), ext_min(b, a));
        prop_assert_eq!(ext_min(ext_min(a, b), c), ext_min(a, ext_min(b, c)));
        prop_assert!(ext_min(a, b) <= a && ext_min(a, b) <= b);
    }

    #[test]
    fn ball_samples_stay_strictly_inside(
        center in prop::collection::vec(-5.0..5.0f64, 1..4),
        radius in 1e-3..3.0f64,
        seed in any::<u64>(),
    ) {
        let ball = Ball::new(center, radius).unwrap();
        let pts = sample_ball(&ball, 20, seed);
        prop_assert!(pts.iter().all(|p| ball.contains(p)));
        prop_assert_eq!(pts, sample_ball(&ball, 20, seed));
    }

    #[test]
    fn graph_of_feasible_mapping_is_convex(
        a in matrix(3, 2),
        b in matrix(3, 1),
        slack in prop::collection::vec(0.0..1.0f64, 3),
        x1 in prop::collection::vec(-2.0..2.0f64, 2),
        x2 in prop::collection::vec(-2.0..2.0f64, 2),
        y1 in -2.0..2.0f64,
        y2 in -2.0..2.0f64,
        lambda in 0.0..=1.0f64,
    ) {
        let tol = Tolerances::default();
        // Smallest c (plus slack) that puts both (x1, y1) and (x2, y2) in the graph.
        let lhs = |x: &[f64], y: f64, i: usize| a.row(i)[0] * x[0] + a.row(i)[1] * x[1] - b.row(i)[0] * y;
        let c: Vec<f64> = (0..3).map(|i| lhs(&x1, y1, i).max(lhs(&x2, y2, i)) + slack[i]).collect();
        let f = FeasibleMapping::new(a.clone(), b.clone(), c).unwrap();
        prop_assert!(f.contains(&x1, &[y1], &tol) && f.contains(&x2, &[y2], &tol));
        let x: Vec<f64> = x1.iter().zip(&x2).map(|(a, b)| lambda * a + (1.0 - lambda) * b).collect();
        prop_assert!(f.contains(&x, &[lambda * y1 + (1.0 - lambda) * y2], &tol));
    }

    #[test]
    fn quadratic_cost_is_convex(
        l in matrix(3, 3),
        g in prop::collection::vec(-2.0..2.0f64, 3),
        z1 in prop::collection::vec(-3.0..3.0f64, 3),
        z2 in prop::collection::vec(-3.0..3.0f64, 3),
        lambda in 0.0..=1.0f64,
    ) {
        // L L^T is positive semidefinite.
        let lt = l.transpose();
        let mut q = Matrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                q[(i, j)] = (0..3).map(|k| l[(i, k)] * lt[(k, j)]).sum();
            }
        }
        let cost = QuadraticCost::new(q, g, 0.5).unwrap();
        let f = |z: &[f64]| cost.eval(&z[..2], &z[2..]);
        let z: Vec<f64> = z1.iter().zip(&z2).map(|(a, b)| lambda * a + (1.0 - lambda) * b).collect();
        prop_assert!(f(&z) <= lambda * f(&z1) + (1.0 - lambda) * f(&z2) + 1e-9 * (1.0 + f(&z1).abs() + f(&z2).abs()));
    }

    #[test]
    fn epigraph_membership_matches_cost(
        idx in 0usize..6,
        x in -3.0..3.0f64,
        y in -3.0..3.0f64,
        mu in -10.0..10.0f64,
    ) {
        let tol = Tolerances::default();
        let inst = &catalog::<f64>()[idx];
        let p = &inst.program;
        let phi = p.evaluate_cost(&[x], &[y]).unwrap();
        let inside = p.feasible_membership(&[x], &[y], &tol).unwrap();
        let member = p.feasible_epigraph_membership(&[x], &[y], mu, &tol).unwrap();
        if (mu - phi).abs() > 1e-6 {
            prop_assert_eq!(member, inside && mu >= phi);
        }
    }

    #[test]
    fn cost_membership_is_an_up_set(
        idx in 0usize..6,
        y in -2.0..2.0f64,
        mu in -5.0..5.0f64,
        step in 0.0..5.0f64,
    ) {
        let tol = Tolerances::default();
        let p = &catalog::<f64>()[idx].program;
        if fcost_membership(p, &[y], mu, &tol).unwrap() {
            prop_assert!(fcost_membership(p, &[y], mu + step, &tol).unwrap());
        }
    }

    #[test]
    fn graph_of_cost_space_is_convex(
        idx in 0usize..6,
        y1 in -2.0..2.0f64,
        y2 in -2.0..2.0f64,
        mu1 in -3.0..5.0f64,
        mu2 in -3.0..5.0f64,
        lambda in 0.0..=1.0f64,
    ) {
        let tol = Tolerances::default();
        let p = &catalog::<f64>()[idx].program;
        prop_assume!(fcost_membership(p, &[y1], mu1, &tol).unwrap());
        prop_assume!(fcost_membership(p, &[y2], mu2, &tol).unwrap());
        let y = lambda * y1 + (1.0 - lambda) * y2;
        let mu = lambda * mu1 + (1.0 - lambda) * mu2;
        prop_assert!(fcost_membership(p, &[y], mu + tol.band(), &tol).unwrap());
    }

    #[test]
    fn domain_of_mapping_equals_domain_of_cost_space(f in mapping(), y in -3.0..3.0f64) {
        let tol = Tolerances::default();
        let p = Program64::new(CostSpec::linear(vec![1.0, -0.5], 1), f).unwrap();
        let nonempty = feasible_set_nonempty(&p, &[y], &tol).unwrap();
        let member = fcost_membership(&p, &[y], tol.unbounded_threshold, &tol).unwrap();
        prop_assert_eq!(nonempty, member);
    }

    #[test]
    fn value_and_auxiliary_value_agree(idx in 0usize..6, y in -3.0..3.0f64) {
        let tol = Tolerances::default();
        let p = &catalog::<f64>()[idx].program;
        let v = value_function(p, &[y], &tol).unwrap().value();
        let aux = aux_value_function(p, &[y], &tol).unwrap();
        match (v, aux) {
            (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => prop_assert!((a - b).abs() <= tol.band()),
            (a, b) => prop_assert!(a.same_kind(&b), "{} vs {}", a, b),
        }
    }

    #[test]
    fn graph_equals_epigraph_off_the_band(
        k in 0usize..ATTAINING.len(),
        y in -2.0..2.0f64,
        mu in -5.0..5.0f64,
    ) {
        let tol = Tolerances::default();
        let p = program(ATTAINING[k]);
        let aux = aux_value_function(&p, &[y], &tol).unwrap();
        if let Some(a) = aux.finite_value() {
            prop_assume!((mu - a).abs() > tol.band());
        }
        prop_assert_eq!(fcost_membership(&p, &[y], mu, &tol).unwrap(), aux.le_real(mu));
    }

    #[test]
    fn theorem1_statements_agree_on_closed_instances(
        k in 0usize..ATTAINING.len(),
        y0 in -1.5..1.5f64,
        radius in 0.05..0.5f64,
        seed in any::<u64>(),
    ) {
        let tol = Tolerances::default();
        let id = ATTAINING[k];
        let y0 = if id == "P-INT" { y0.abs() + radius + 0.1 } else { y0 };
        let r = check_theorem1(&program(id), &[y0], radius, &tol, seed);
        prop_assert_eq!(r.verdict, Verdict::Pass, "{}: {}", id, r.details);
    }

    #[test]
    fn lemma_bound_holds(
        k in 0usize..4,
        y0 in -1.0..1.0f64,
        y in -2.0..2.0f64,
        alpha in 0.01..0.25f64,
    ) {
        let tol = Tolerances::default();
        let id = ["P-LIN", "P-RELU", "P-INT", "P-PROJ"][k];
        let (y0, y) = if id == "P-INT" { (y0.abs() + 0.5, y.abs() + 0.1) } else { (y0, y) };
        let ball = Ball::new(vec![y0], 0.3).unwrap();
        let y_alpha = y0 + alpha * (y0 - y);
        prop_assume!(ball.contains(&[y_alpha]));
        let p = program(id);
        let cert = check_local_lower_bound(&p, &ball, 20, &tol, 1).unwrap().unwrap();
        let v = value_function(&p, &[y], &tol).unwrap().value().finite_value().unwrap();
        let va = value_function(&p, &[y_alpha], &tol).unwrap().value().finite_value().unwrap();
        prop_assert!(v >= lemma_lower_bound(cert.bound, va, alpha).unwrap() - tol.band());
    }

    #[test]
    fn lp_solves_are_deterministic(
        g in matrix(4, 2),
        h in prop::collection::vec(-1.0..3.0f64, 4),
        c in prop::collection::vec(-1.0..1.0f64, 2),
    ) {
        let tol = Tolerances::default();
        let lp = LpProblem::new(c, g, h).unwrap();
        prop_assert_eq!(solve_lp(&lp, &tol).unwrap(), solve_lp(&lp, &tol).unwrap());
    }
}
