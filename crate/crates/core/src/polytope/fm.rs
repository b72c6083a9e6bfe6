//! Fourier-Motzkin projection of inequality systems.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::HRep;
use crate::algebra::Rational;
use crate::linalg::{self, Row};
use crate::lp::{LinearProgram, LpOutcome};

/// Set of original-inequality indices an inequality was combined from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct History(Vec<u64>);

impl History {
    pub(crate) fn single(i: usize) -> Self {
        let mut words = alloc::vec![0u64; i / 64 + 1];
        words[i / 64] |= 1 << (i % 64);
        Self(words)
    }

    fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.0.clone();
        for (w, o) in words.iter_mut().zip(&short.0) {
            *w |= o;
        }
        Self(words)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Ineq {
    pub a: Row,
    pub b: Rational,
    pub hist: History,
}

#[derive(Debug, Clone)]
pub(crate) struct System {
    pub nvars: usize,
    pub le: Vec<Ineq>,
    pub eq: Vec<(Row, Rational)>,
    pub infeasible: bool,
    fm_steps: usize,
    /// Apply Kohler's rule: after `s` FM steps, an inequality combined from
    /// more than `s + 1` originals is redundant.
    kohler: bool,
}

impl System {
    pub(crate) fn new(nvars: usize, kohler: bool) -> Self {
        Self {
            nvars,
            le: Vec::new(),
            eq: Vec::new(),
            infeasible: false,
            fm_steps: 0,
            kohler,
        }
    }

    pub(crate) fn from_hrep(h: &HRep) -> Self {
        let mut s = Self::new(h.ambient, false);
        for (i, ineq) in h.inequalities.iter().enumerate() {
            s.le.push(Ineq {
                a: ineq.normal.clone(),
                b: ineq.offset.clone(),
                hist: History::single(i),
            });
        }
        for eq in &h.equalities {
            s.eq.push((eq.normal.clone(), eq.offset.clone()));
        }
        s.normalize();
        s
    }

    /// Uses an equality involving `var` to substitute it away. Returns false
    /// if no equality involves `var`.
    pub(crate) fn substitute(&mut self, var: usize) -> bool {
        let Some(idx) = self.eq.iter().position(|(a, _)| !a[var].is_zero()) else {
            return false;
        };
        let (a, b) = self.eq.swap_remove(idx);
        let pivot = a[var].clone();
        for (c, d) in self.eq.iter_mut() {
            if c[var].is_zero() {
                continue;
            }
            let f = &c[var] / &pivot;
            *c = linalg::sub(c, &linalg::scale(&a, &f));
            *d -= &f * &b;
        }
        for ineq in self.le.iter_mut() {
            if ineq.a[var].is_zero() {
                continue;
            }
            let f = &ineq.a[var] / &pivot;
            ineq.a = linalg::sub(&ineq.a, &linalg::scale(&a, &f));
            ineq.b -= &f * &b;
        }
        self.normalize();
        true
    }

    pub(crate) fn fourier_motzkin(&mut self, var: usize) {
        self.fm_steps += 1;
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in self.le.drain(..) {
            if ineq.a[var].is_positive() {
                pos.push(ineq);
            } else if ineq.a[var].is_negative() {
                neg.push(ineq);
            } else {
                rest.push(ineq);
            }
        }
        for p in &pos {
            for n in &neg {
                let hist = p.hist.union(&n.hist);
                if self.kohler && hist.count() > self.fm_steps + 1 {
                    continue;
                }
                let fp = -n.a[var].clone();
                let fn_ = p.a[var].clone();
                let mut a = linalg::add(&linalg::scale(&p.a, &fp), &linalg::scale(&n.a, &fn_));
                a[var] = Rational::zero();
                let b = &p.b * &fp + &n.b * &fn_;
                rest.push(Ineq { a, b, hist });
            }
        }
        self.le = rest;
        self.normalize();
    }

    pub(crate) fn eliminate(&mut self, var: usize) {
        if !self.substitute(var) {
            self.fourier_motzkin(var);
        }
    }

    /// Scales every constraint to a primitive integer normal, merges parallel
    /// inequalities (keeping the tightest) and flags trivial infeasibility.
    pub(crate) fn normalize(&mut self) {
        let mut best: BTreeMap<Vec<BigInt>, Ineq> = BTreeMap::new();
        for ineq in self.le.drain(..) {
            let (ints, factor) = linalg::primitive_integer(&ineq.a);
            let b = &ineq.b * &factor;
            if ints.iter().all(Zero::is_zero) {
                if b.is_negative() {
                    self.infeasible = true;
                }
                continue;
            }
            let a: Row = ints.iter().map(|x| Rational::from_integer(x.clone())).collect();
            let candidate = Ineq { a, b, hist: ineq.hist };
            match best.get(&ints) {
                Some(old) if old.b < candidate.b => {}
                Some(old) if old.b == candidate.b && old.hist.count() <= candidate.hist.count() => {}
                _ => {
                    best.insert(ints, candidate);
                }
            }
        }
        self.le = best.into_values().collect();

        let mut eqs: BTreeMap<Vec<BigInt>, Rational> = BTreeMap::new();
        for (a, b) in self.eq.drain(..) {
            let (mut ints, mut factor) = linalg::primitive_integer(&a);
            match ints.iter().find(|x| !x.is_zero()) {
                None => {
                    if !b.is_zero() {
                        self.infeasible = true;
                    }
                    continue;
                }
                Some(first) if first.is_negative() => {
                    ints.iter_mut().for_each(|x| *x = -x.clone());
                    factor = -factor;
                }
                Some(_) => {}
            }
            let b = b * factor;
            if let Some(old) = eqs.get(&ints) {
                if *old != b {
                    self.infeasible = true;
                }
                continue;
            }
            eqs.insert(ints, b);
        }
        self.eq = eqs
            .into_iter()
            .map(|(ints, b)| (ints.into_iter().map(Rational::from_integer).collect(), b))
            .collect();
    }

    /// Drops inequalities implied by the others (one LP each). Only worth it
    /// when the system has grown large.
    pub(crate) fn prune_redundant(&mut self) {
        let mut i = 0;
        while i < self.le.len() {
            let mut lp = LinearProgram::new(self.nvars);
            for (j, other) in self.le.iter().enumerate() {
                if j != i {
                    lp.add_le(other.a.clone(), other.b.clone());
                }
            }
            for (a, b) in &self.eq {
                lp.add_eq(a.clone(), b.clone());
            }
            match lp.maximize(&self.le[i].a) {
                LpOutcome::Optimal { value, .. } if value <= self.le[i].b => {
                    self.le.remove(i);
                }
                LpOutcome::Infeasible => {
                    self.infeasible = true;
                    return;
                }
                _ => i += 1,
            }
        }
    }

    pub(crate) fn involves(&self, var: usize) -> bool {
        self.le.iter().any(|c| !c.a[var].is_zero()) || self.eq.iter().any(|(a, _)| !a[var].is_zero())
    }
}
