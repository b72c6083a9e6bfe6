//! Partitions, skew shapes, Gelfand-Tsetlin polytopes and Schur polynomials.
//!
//! A pattern for the skew shape `λ/μ` in `n` variables is an `(n+1) × n`
//! array whose rows are stored in increasing order: the top row is `λ`
//! reversed, the bottom row is `μ` reversed, and consecutive rows interlace as
//! `x_{i+1,j} ≤ x_{i,j} ≤ x_{i+1,j+1}`. Its weight has `i`-th entry
//! `Σ_k x_{i,k} - Σ_k x_{i+1,k}`, the number of cells filled with `n+1-i` in
//! the matching tableau. This is the reverse of the usual tableau weight;
//! Schur polynomials are symmetric, so both conventions give the same
//! polynomial.

mod corollary;
mod gt;
mod schur;
mod ssyt;

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::ExponentVec;
use crate::{Error, Result};

pub use corollary::{corollary_r, gt_minkowski_check, schur_recursion_check, schur_recursion_check_from, SchurRecursionReport};
pub use gt::{gt_polytope, pattern_weight, vertex_weights, GTPattern, VertexWeights};
pub use schur::{
    conjecture_w, counterexample_report, kostka, schur_polynomial, schur_via_gt, schur_via_ssyt, CounterexampleReport,
};
pub use ssyt::{ssyt_enumerate, Tableau};

/// Weights are exponent vectors of Schur monomials.
pub type WeightVector = ExponentVec;

/// Weakly decreasing nonnegative integers, padded with zeros to length `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: &[i64], n: usize) -> Result<Self> {
        let mut parts = parts.to_vec();
        while parts.len() > n && parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > n {
            return Err(Error::InvalidShape(format!("{parts:?} has more than {n} nonzero parts")));
        }
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a negative part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        parts.resize(n, 0);
        Ok(Self { parts })
    }

    pub fn zero(n: usize) -> Self {
        Self { parts: alloc::vec![0; n] }
    }

    /// Number of parts including padding zeros.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        self.len() == other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a >= b)
    }

    /// `self + k·other`.
    pub fn add_scaled(&self, other: &Partition, k: i64) -> Partition {
        debug_assert_eq!(self.len(), other.len());
        Partition {
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a + k * b).collect(),
        }
    }
}

/// `λ/μ` with `μ ⊆ λ`, both of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self> {
        if lambda.len() != mu.len() {
            return Err(Error::DimensionMismatch {
                expected: lambda.len(),
                found: mu.len(),
            });
        }
        if !lambda.contains(&mu) {
            return Err(Error::InvalidShape(format!("{:?} is not contained in {:?}", mu.parts, lambda.parts)));
        }
        Ok(Self { lambda, mu })
    }

    pub fn from_parts(lambda: &[i64], mu: &[i64], n: usize) -> Result<Self> {
        Self::new(Partition::new(lambda, n)?, Partition::new(mu, n)?)
    }

    pub fn straight(lambda: &[i64], n: usize) -> Result<Self> {
        Self::new(Partition::new(lambda, n)?, Partition::zero(n))
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn cells(&self) -> i64 {
        self.lambda.size() - self.mu.size()
    }

    /// `λ - μ` sorted into a partition.
    pub fn difference_sorted(&self) -> Vec<i64> {
        let d: Vec<i64> = self.lambda.parts.iter().zip(&self.mu.parts).map(|(a, b)| a - b).collect();
        sorted_desc(&d)
    }
}

pub fn sorted_desc(w: &[i64]) -> Vec<i64> {
    let mut v = w.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Dominance order: equal sums and every prefix sum of `a` at least that of
/// `b`. The shorter vector is padded with zeros.
pub fn dominates(a: &[i64], b: &[i64]) -> bool {
    let len = a.len().max(b.len());
    let at = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
    let (mut sa, mut sb) = (0i64, 0i64);
    for i in 0..len {
        sa += at(a, i);
        sb += at(b, i);
        if sa < sb {
            return false;
        }
    }
    sa == sb
}
