//! Dense two-phase primal simplex with Bland's anti-cycling rule.

use super::SolveOutcome;
use crate::error::{Error, Result};
use crate::numeric::linalg::{dot, Matrix};
use crate::numeric::{Scalar, Tolerances};

/// `min objective.x  s.t.  constraints x <= rhs`, `x` free.
#[derive(Clone, Debug, PartialEq)]
pub struct LpProblem<T> {
    objective: Vec<T>,
    constraints: Matrix<T>,
    rhs: Vec<T>,
}

impl<T: Scalar> LpProblem<T> {
    pub fn new(objective: Vec<T>, constraints: Matrix<T>, rhs: Vec<T>) -> Result<Self> {
        if constraints.cols() != objective.len() {
            return Err(Error::DimensionMismatch {
                context: "LP constraint columns",
                expected: objective.len(),
                found: constraints.cols(),
            });
        }
        if rhs.len() != constraints.rows() {
            return Err(Error::DimensionMismatch {
                context: "LP right-hand side",
                expected: constraints.rows(),
                found: rhs.len(),
            });
        }
        if let Some(v) = objective.iter().chain(&rhs).find(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "LP data",
                value: v.as_f64(),
            });
        }
        Ok(LpProblem {
            objective,
            constraints,
            rhs,
        })
    }

    pub fn objective(&self) -> &[T] {
        &self.objective
    }

    pub fn constraints(&self) -> &Matrix<T> {
        &self.constraints
    }

    pub fn rhs(&self) -> &[T] {
        &self.rhs
    }

    pub fn vars(&self) -> usize {
        self.objective.len()
    }

    /// Largest positive component of `G x - h`.
    pub fn violation(&self, x: &[T]) -> T {
        (0..self.constraints.rows())
            .map(|i| dot(self.constraints.row(i), x) - self.rhs[i])
            .fold(T::zero(), T::max)
    }
}

/// Standard-form tableau. Columns: `x+` (n), `x-` (n), slacks (k), artificials.
struct Tableau<T> {
    rows: usize,
    cols: usize,
    /// `rows x (cols + 1)`, last column is the right-hand side.
    data: Vec<T>,
    basis: Vec<usize>,
    eps: T,
    pivots: usize,
    pivot_cap: usize,
}

enum PhaseEnd {
    Optimal,
    Unbounded(usize),
}

impl<T: Scalar> Tableau<T> {
    fn at(&self, i: usize, j: usize) -> T {
        self.data[i * (self.cols + 1) + j]
    }

    fn rhs(&self, i: usize) -> T {
        self.at(i, self.cols)
    }

    fn pivot(&mut self, r: usize, c: usize) -> Result<()> {
        self.pivots += 1;
        if self.pivots > self.pivot_cap {
            return Err(Error::CyclingSafeguard(self.pivot_cap));
        }
        let width = self.cols + 1;
        let p = self.at(r, c);
        for j in 0..width {
            self.data[r * width + j] = self.data[r * width + j] / p;
        }
        for i in 0..self.rows {
            if i == r {
                continue;
            }
            let f = self.at(i, c);
            if f == T::zero() {
                continue;
            }
            for j in 0..width {
                let v = self.data[r * width + j];
                self.data[i * width + j] = self.data[i * width + j] - f * v;
            }
            // keep the basic solution primal feasible against round-off
            let rhs = self.data[i * width + self.cols];
            if rhs < T::zero() && rhs > -self.eps {
                self.data[i * width + self.cols] = T::zero();
            }
        }
        self.basis[r] = c;
        Ok(())
    }

    fn reduced_costs(&self, cost: &[T], active: usize) -> Vec<T> {
        (0..active)
            .map(|j| {
                let z = (0..self.rows).fold(T::zero(), |acc, i| {
                    acc + cost[self.basis[i]] * self.at(i, j)
                });
                cost[j] - z
            })
            .collect()
    }

    /// Minimizes `cost` over the first `active` columns.
    fn run(&mut self, cost: &[T], active: usize) -> Result<PhaseEnd> {
        loop {
            let reduced = self.reduced_costs(cost, active);
            // Bland: lowest-index improving column ...
            let entering = (0..active)
                .find(|&j| !self.basis.contains(&j) && reduced[j] < -self.eps);
            let Some(c) = entering else {
                return Ok(PhaseEnd::Optimal);
            };
            // ... and lowest-index basic variable among tied ratios.
            let mut leave: Option<(usize, T)> = None;
            for i in 0..self.rows {
                let a = self.at(i, c);
                if a <= self.eps {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((r, best)) => {
                        let tie = (ratio - best).abs() <= self.eps * (T::one() + best.abs());
                        if ratio < best && !tie || tie && self.basis[i] < self.basis[r] {
                            Some((i, ratio))
                        } else {
                            Some((r, best))
                        }
                    }
                };
            }
            match leave {
                None => return Ok(PhaseEnd::Unbounded(c)),
                Some((r, _)) => self.pivot(r, c)?,
            }
        }
    }

    fn value_of(&self, var: usize) -> T {
        self.basis
            .iter()
            .position(|&b| b == var)
            .map_or(T::zero(), |i| self.rhs(i))
    }
}

/// Solves the LP. Never reports `InfNotAttained`: finite polyhedral optima
/// are attained at a basic solution.
pub fn solve_lp<T: Scalar>(lp: &LpProblem<T>, tol: &Tolerances<T>) -> Result<SolveOutcome<T>> {
    let n = lp.vars();
    let k = lp.constraints.rows();
    let artificial_rows: Vec<usize> = (0..k).filter(|&i| lp.rhs[i] < T::zero()).collect();
    let structural = 2 * n + k;
    let cols = structural + artificial_rows.len();
    let width = cols + 1;
    let mut data = vec![T::zero(); k * width];
    let mut basis = vec![0; k];
    for i in 0..k {
        let sign = if lp.rhs[i] < T::zero() { -T::one() } else { T::one() };
        for j in 0..n {
            let g = lp.constraints[(i, j)];
            data[i * width + j] = sign * g;
            data[i * width + n + j] = -sign * g;
        }
        data[i * width + 2 * n + i] = sign;
        data[i * width + cols] = sign * lp.rhs[i];
        basis[i] = 2 * n + i;
    }
    for (a, &i) in artificial_rows.iter().enumerate() {
        data[i * width + structural + a] = T::one();
        basis[i] = structural + a;
    }
    let scale = lp
        .constraints
        .max_abs()
        .max(lp.rhs.iter().fold(T::one(), |m, v| m.max(v.abs())));
    let dims = k + cols;
    let mut tab = Tableau {
        rows: k,
        cols,
        data,
        basis,
        eps: T::epsilon() * T::of(1e4) * scale,
        pivots: 0,
        pivot_cap: 10 * dims * dims,
    };

    if !artificial_rows.is_empty() {
        let mut phase1 = vec![T::zero(); cols];
        for c in phase1.iter_mut().skip(structural) {
            *c = T::one();
        }
        // Phase 1 is bounded below by zero; an unbounded exit cannot occur.
        tab.run(&phase1, cols)?;
        let infeasibility = (structural..cols).fold(T::zero(), |acc, j| acc + tab.value_of(j));
        if infeasibility > tol.feasibility_eps {
            return Ok(SolveOutcome::Infeasible);
        }
        drive_out_artificials(&mut tab, structural)?;
    }

    let mut cost = vec![T::zero(); tab.cols];
    for j in 0..n {
        cost[j] = lp.objective[j];
        cost[n + j] = -lp.objective[j];
    }
    match tab.run(&cost, structural)? {
        PhaseEnd::Optimal => {
            let x: Vec<T> = (0..n)
                .map(|j| tab.value_of(j) - tab.value_of(n + j))
                .collect();
            let value = dot(&lp.objective, &x);
            Ok(SolveOutcome::Optimal {
                value,
                minimizer: x,
            })
        }
        PhaseEnd::Unbounded(c) => {
            let mut direction = vec![T::zero(); tab.cols];
            direction[c] = T::one();
            for i in 0..tab.rows {
                direction[tab.basis[i]] = -tab.at(i, c);
            }
            let mut ray: Vec<T> = (0..n).map(|j| direction[j] - direction[n + j]).collect();
            let size = ray.iter().fold(T::zero(), |m, v| m.max(v.abs()));
            if size > T::zero() {
                ray.iter_mut().for_each(|v| *v = *v / size);
            }
            Ok(SolveOutcome::Unbounded { ray: Some(ray) })
        }
    }
}

/// Pivots zero-level artificials out of the basis, drops redundant rows, then
/// truncates the artificial columns.
fn drive_out_artificials<T: Scalar>(tab: &mut Tableau<T>, structural: usize) -> Result<()> {
    let mut redundant = Vec::new();
    for i in 0..tab.rows {
        if tab.basis[i] < structural {
            continue;
        }
        let candidate = (0..structural)
            .filter(|j| !tab.basis.contains(j))
            .find(|&j| tab.at(i, j).abs() > tab.eps);
        match candidate {
            Some(j) => tab.pivot(i, j)?,
            None => redundant.push(i),
        }
    }
    let old_width = tab.cols + 1;
    let mut data = Vec::with_capacity((tab.rows - redundant.len()) * (structural + 1));
    let mut basis = Vec::new();
    for i in (0..tab.rows).filter(|i| !redundant.contains(i)) {
        data.extend_from_slice(&tab.data[i * old_width..i * old_width + structural]);
        data.push(tab.data[i * old_width + tab.cols]);
        basis.push(tab.basis[i]);
    }
    tab.rows = basis.len();
    tab.cols = structural;
    tab.data = data;
    tab.basis = basis;
    Ok(())
}
