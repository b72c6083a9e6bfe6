//! Exact rational linear programming (two-phase tableau simplex, Bland's rule).
//!
//! Used for the convex-combination membership test, pointedness of cones
//! and boundedness checks. Problems here have at most a few hundred columns,
//! so a dense tableau is adequate.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;
use crate::linalg::Row;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, point: Vec<Rational> },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

/// `maximize c·x` subject to `a·x ≤ b` rows, `a·x = b` rows, and sign
/// constraints on selected variables.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    nvars: usize,
    nonnegative: Vec<bool>,
    le: Vec<(Row, Rational)>,
    eq: Vec<(Row, Rational)>,
}

impl LinearProgram {
    /// All variables free.
    pub fn new(nvars: usize) -> Self {
        Self {
            nvars,
            nonnegative: alloc::vec![false; nvars],
            le: Vec::new(),
            eq: Vec::new(),
        }
    }

    /// All variables constrained to be nonnegative.
    pub fn nonnegative(nvars: usize) -> Self {
        Self {
            nonnegative: alloc::vec![true; nvars],
            ..Self::new(nvars)
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn set_nonnegative(&mut self, var: usize) {
        self.nonnegative[var] = true;
    }

    pub fn add_le(&mut self, a: Row, b: Rational) {
        debug_assert_eq!(a.len(), self.nvars);
        self.le.push((a, b));
    }

    pub fn add_eq(&mut self, a: Row, b: Rational) {
        debug_assert_eq!(a.len(), self.nvars);
        self.eq.push((a, b));
    }

    pub fn is_feasible(&self) -> bool {
        self.maximize(&alloc::vec![Rational::zero(); self.nvars]).is_feasible()
    }

    pub fn maximize(&self, objective: &[Rational]) -> LpOutcome {
        debug_assert_eq!(objective.len(), self.nvars);
        // Column layout: one column per nonnegative var, two (x⁺, x⁻) per free
        // var, then one slack per ≤ row, then one artificial per row.
        let mut var_cols = Vec::with_capacity(self.nvars);
        let mut ncols = 0;
        for &nn in &self.nonnegative {
            var_cols.push(ncols);
            ncols += if nn { 1 } else { 2 };
        }
        let nstruct = ncols;
        let nslack = self.le.len();
        let m = self.le.len() + self.eq.len();
        let first_art = nstruct + nslack;
        let width = first_art + m;

        let mut rows: Vec<Row> = Vec::with_capacity(m);
        let mut rhs: Vec<Rational> = Vec::with_capacity(m);
        let constraints = self.le.iter().map(|c| (c, true)).chain(self.eq.iter().map(|c| (c, false)));
        for (i, ((a, b), is_le)) in constraints.enumerate() {
            let mut row = alloc::vec![Rational::zero(); width + 1];
            for (v, coef) in a.iter().enumerate() {
                let c = var_cols[v];
                row[c] = coef.clone();
                if !self.nonnegative[v] {
                    row[c + 1] = -coef.clone();
                }
            }
            if is_le {
                row[nstruct + i] = Rational::one();
            }
            if b.is_negative() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
                rhs.push(-b.clone());
            } else {
                rhs.push(b.clone());
            }
            row[first_art + i] = Rational::one();
            rows.push(row);
        }
        for (row, b) in rows.iter_mut().zip(rhs) {
            row[width] = b;
        }

        let mut t = Tableau {
            rows,
            basis: (first_art..first_art + m).collect(),
            width,
        };

        // Phase I: maximize -Σ artificials.
        let mut phase1 = alloc::vec![Rational::zero(); width];
        for c in phase1.iter_mut().skip(first_art) {
            *c = -Rational::one();
        }
        let all = alloc::vec![true; width];
        t.optimize(&phase1, &all).expect("phase I is bounded");
        if t.objective_value(&phase1).is_negative() {
            return LpOutcome::Infeasible;
        }
        t.evict_artificials(first_art);

        let mut cost = alloc::vec![Rational::zero(); width];
        for (v, c) in objective.iter().enumerate() {
            let col = var_cols[v];
            cost[col] = c.clone();
            if !self.nonnegative[v] {
                cost[col + 1] = -c.clone();
            }
        }
        let allowed: Vec<bool> = (0..width).map(|j| j < first_art).collect();
        if t.optimize(&cost, &allowed).is_err() {
            return LpOutcome::Unbounded;
        }

        let values = t.column_values();
        let point = (0..self.nvars)
            .map(|v| {
                let c = var_cols[v];
                if self.nonnegative[v] {
                    values[c].clone()
                } else {
                    &values[c] - &values[c + 1]
                }
            })
            .collect();
        LpOutcome::Optimal {
            value: t.objective_value(&cost),
            point,
        }
    }
}

struct Tableau {
    /// Each row is `B⁻¹A | B⁻¹b`.
    rows: Vec<Row>,
    basis: Vec<usize>,
    width: usize,
}

#[derive(Debug)]
struct UnboundedDirection;

impl Tableau {
    fn objective_value(&self, cost: &[Rational]) -> Rational {
        self.rows
            .iter()
            .zip(&self.basis)
            .fold(Rational::zero(), |acc, (row, &b)| acc + &cost[b] * &row[self.width])
    }

    fn column_values(&self) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::zero(); self.width];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            v[b] = row[self.width].clone();
        }
        v
    }

    fn reduced_cost(&self, cost: &[Rational], j: usize) -> Rational {
        self.rows
            .iter()
            .zip(&self.basis)
            .fold(cost[j].clone(), |acc, (row, &b)| {
                if cost[b].is_zero() || row[j].is_zero() {
                    acc
                } else {
                    acc - &cost[b] * &row[j]
                }
            })
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = core::mem::take(&mut self.rows[r]);
        for row in self.rows.iter_mut() {
            if row.is_empty() || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> Result<(), UnboundedDirection> {
        loop {
            let entering = (0..self.width)
                .filter(|&j| allowed[j] && !self.basis.contains(&j))
                .find(|&j| self.reduced_cost(cost, j).is_positive());
            let Some(c) = entering else {
                return Ok(());
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return Err(UnboundedDirection);
            };
            self.pivot(r, c);
        }
    }

    /// After a feasible phase I, pivots zero-valued artificials out of the
    /// basis; rows where that is impossible are linearly redundant and dropped.
    fn evict_artificials(&mut self, first_art: usize) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < first_art {
                i += 1;
                continue;
            }
            match (0..first_art).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}

/// Whether `point` is a convex combination of `points`.
pub fn in_convex_hull(point: &[Rational], points: &[Row]) -> bool {
    if points.is_empty() {
        return false;
    }
    let n = point.len();
    let mut lp = LinearProgram::nonnegative(points.len());
    for i in 0..n {
        lp.add_eq(points.iter().map(|p| p[i].clone()).collect(), point[i].clone());
    }
    lp.add_eq(alloc::vec![Rational::one(); points.len()], Rational::one());
    lp.is_feasible()
}
