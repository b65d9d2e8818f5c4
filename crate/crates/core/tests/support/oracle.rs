//! Reference computations that share no code with the library solvers.
#![allow(dead_code)]

/// Result of enumerating basic feasible solutions of `min c.x s.t. G x <= h`.
#[derive(Debug, Clone, PartialEq)]
pub enum VertexOptimum {
    Infeasible,
    Optimal { value: f64, x: Vec<f64> },
}

/// Solves the square system `m x = r` by Gaussian elimination with partial
/// pivoting. `None` when the matrix is (numerically) singular.
pub fn solve_square(mut m: Vec<Vec<f64>>, mut r: Vec<f64>) -> Option<Vec<f64>> {
    let n = r.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[piv][col].abs() < 1e-10 {
            return None;
        }
        m.swap(col, piv);
        r.swap(col, piv);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            for k in col..n {
                m[row][k] -= f * m[col][k];
            }
            r[row] -= f * r[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| m[i][k] * x[k]).sum();
        x[i] = (r[i] - s) / m[i][i];
    }
    Some(x)
}

fn combinations(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i + 1, k, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, n, &mut Vec::new(), &mut out);
    out
}

/// Enumerates every vertex of `{x : G x <= h}` (intersections of `n` active
/// rows) and returns the best feasible one. Only meaningful when the polytope
/// is bounded, in which case an optimum sits at a vertex.
pub fn enumerate_vertices(c: &[f64], g: &[Vec<f64>], h: &[f64]) -> VertexOptimum {
    let n = c.len();
    let mut best: Option<(f64, Vec<f64>)> = None;
    for active in combinations(g.len(), n) {
        let m = active.iter().map(|&i| g[i].clone()).collect();
        let r = active.iter().map(|&i| h[i]).collect();
        let Some(x) = solve_square(m, r) else { continue };
        let feasible = g
            .iter()
            .zip(h)
            .all(|(row, &hi)| row.iter().zip(&x).map(|(a, b)| a * b).sum::<f64>() <= hi + 1e-9);
        if !feasible {
            continue;
        }
        let value: f64 = c.iter().zip(&x).map(|(a, b)| a * b).sum();
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, x));
        }
    }
    match best {
        Some((value, x)) => VertexOptimum::Optimal { value, x },
        None => VertexOptimum::Infeasible,
    }
}

/// Minimum of `f` on an inclusive uniform grid over `[lo, hi]`.
pub fn grid_min(f: impl Fn(f64) -> f64, lo: f64, hi: f64, points: usize) -> f64 {
    (0..points)
        .map(|i| f(lo + (hi - lo) * i as f64 / (points - 1) as f64))
        .fold(f64::INFINITY, f64::min)
}

/// Closed forms of the value function of each catalog instance. `None`
/// stands for `+inf`, `Some(NEG_INFINITY)` for `-inf`.
pub fn closed_form(id: &str, y: f64) -> Option<f64> {
    match id {
        "P-LIN" => Some(y),
        "P-RELU" => Some(y.max(0.0).powi(2)),
        "P-INT" => (y >= 0.0).then_some(-y),
        "P-UNB" | "P-EXP" => Some(f64::NEG_INFINITY),
        "P-PROJ" => Some((y.abs() - 1.0).max(0.0).powi(2)),
        other => panic!("no closed form for {other}"),
    }
}

/// Random LP `min c.x s.t. G x <= h` with `n <= 4` variables and `k <= 8`
/// rows. With `bounded` the rows include `x_i >= -5` and `sum x <= 5`;
/// otherwise only the lower bounds, which keeps the feasible set pointed.
pub struct RandomLp {
    pub c: Vec<f64>,
    pub g: Vec<Vec<f64>>,
    pub h: Vec<f64>,
}

pub fn random_lp<R: rand::Rng>(rng: &mut R, bounded: bool) -> RandomLp {
    let n = rng.random_range(1..=4);
    let base = if bounded { n + 1 } else { n };
    let k = rng.random_range(base..=8);
    let mut g = Vec::with_capacity(k);
    let mut h = Vec::with_capacity(k);
    for i in 0..n {
        let mut row = vec![0.0; n];
        row[i] = -1.0;
        g.push(row);
        h.push(5.0);
    }
    if bounded {
        g.push(vec![1.0; n]);
        h.push(5.0);
    }
    let x0: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
    while g.len() < k {
        let row: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let at_x0: f64 = row.iter().zip(&x0).map(|(a, b)| a * b).sum();
        h.push(at_x0 + rng.random_range(-0.3..1.0));
        g.push(row);
    }
    let c = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
    RandomLp { c, g, h }
}
