use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{hrep_lp, HRep, VRep};
use crate::algebra::Rational;
use crate::linalg::{self, Row};
use crate::lp::LpOutcome;
use crate::{Error, Result};

/// Vertices of a bounded, feasible H-polytope by exhaustive basis search.
///
/// Every vertex is the unique solution of the equalities together with
/// `d - rank(E)` linearly independent tight inequalities, so all such
/// subsets are solved and the feasible solutions kept. Cost is
/// `O(C(m, d) · d³)` for `m` inequalities in dimension `d`; partial subsets
/// that are already linearly dependent are cut off early.
pub fn vertex_enumeration(h: &HRep) -> Result<VRep> {
    let d = h.ambient;
    if h.is_trivially_infeasible() {
        return Err(Error::Infeasible);
    }
    let lp = hrep_lp(h);
    for i in 0..d {
        for sign in [Rational::one(), -Rational::one()] {
            let mut c = alloc::vec![Rational::zero(); d];
            c[i] = sign;
            match lp.maximize(&c) {
                LpOutcome::Infeasible => return Err(Error::Infeasible),
                LpOutcome::Unbounded => return Err(Error::Unbounded),
                LpOutcome::Optimal { .. } => {}
            }
        }
    }
    if d == 0 {
        // ℝ⁰ is a single point; feasibility was settled above
        return if lp.is_feasible() {
            Ok(VRep { points: alloc::vec![Vec::new()] })
        } else {
            Err(Error::Infeasible)
        };
    }

    let mut eq_rows: Vec<Row> = h.equalities.iter().map(|e| e.normal.clone()).collect();
    let mut eq_rhs: Vec<Rational> = h.equalities.iter().map(|e| e.offset.clone()).collect();
    // keep an independent subset of the equalities
    let mut basis: Vec<Row> = Vec::new();
    let mut keep = Vec::new();
    for (i, row) in eq_rows.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(row.clone());
        if linalg::rank(&trial, d) > basis.len() {
            basis.push(row.clone());
            keep.push(i);
        }
    }
    eq_rows = keep.iter().map(|&i| eq_rows[i].clone()).collect();
    eq_rhs = keep.iter().map(|&i| eq_rhs[i].clone()).collect();

    let ineqs: Vec<(Row, Rational)> = h
        .inequalities
        .iter()
        .filter(|i| !linalg::is_zero(&i.normal))
        .map(|i| (i.normal.clone(), i.offset.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let need = d - eq_rows.len();
    let mut found = BTreeSet::new();
    let mut search = Search {
        d,
        h,
        ineqs: &ineqs,
        rows: eq_rows,
        rhs: eq_rhs,
        found: &mut found,
    };
    search.run(0, need);
    Ok(VRep {
        points: found.into_iter().collect(),
    })
}

struct Search<'a> {
    d: usize,
    h: &'a HRep,
    ineqs: &'a [(Row, Rational)],
    rows: Vec<Row>,
    rhs: Vec<Rational>,
    found: &'a mut BTreeSet<Row>,
}

impl Search<'_> {
    fn run(&mut self, start: usize, need: usize) {
        if need == 0 {
            if let Some(x) = linalg::solve_unique(&self.rows, &self.rhs, self.d) {
                if self.h.contains(&x) {
                    self.found.insert(x);
                }
            }
            return;
        }
        let rank_before = self.rows.len();
        for i in start..self.ineqs.len() {
            if self.ineqs.len() - i < need {
                break;
            }
            self.rows.push(self.ineqs[i].0.clone());
            self.rhs.push(self.ineqs[i].1.clone());
            if linalg::rank(&self.rows, self.d) == rank_before + 1 {
                self.run(i + 1, need - 1);
            }
            self.rows.pop();
            self.rhs.pop();
        }
    }
}
