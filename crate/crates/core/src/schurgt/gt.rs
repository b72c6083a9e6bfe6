use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{SkewShape, WeightVector};
use crate::algebra::Rational;
use crate::linalg::{self, Row};
use crate::polytope::{HRep, Halfspace, Polytope};
use crate::{Error, Result};

/// Integer Gelfand-Tsetlin pattern: `n + 1` interlacing rows of length `n`,
/// each stored in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GTPattern {
    rows: Vec<Vec<i64>>,
}

impl GTPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len().checked_sub(1).ok_or_else(|| Error::InvalidShape("pattern has no rows".into()))?;
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidShape(format!("pattern rows must have length {n}")));
        }
        for i in 0..n {
            let (upper, lower) = (&rows[i], &rows[i + 1]);
            for j in 0..n {
                let below_ok = lower[j] <= upper[j];
                let above_ok = j + 1 == n || upper[j] <= lower[j + 1];
                if !(below_ok && above_ok) {
                    return Err(Error::InvalidShape(format!("rows {} and {} do not interlace at {}", i + 1, i + 2, j + 1)));
                }
            }
        }
        Ok(Self { rows })
    }

    /// Pattern with boundary rows from `shape` and inner rows from free
    /// coordinates (row-major, `(n-1)·n` values).
    pub fn from_free(shape: &SkewShape, free: &[i64]) -> Result<Self> {
        let n = shape.n();
        if free.len() != free_dim(n) {
            return Err(Error::DimensionMismatch {
                expected: free_dim(n),
                found: free.len(),
            });
        }
        let mut rows = Vec::with_capacity(n + 1);
        rows.push(reversed(shape.lambda().parts()));
        rows.extend(free.chunks(n.max(1)).take(n.saturating_sub(1)).map(<[i64]>::to_vec));
        rows.push(reversed(shape.mu().parts()));
        Self::new(rows)
    }

    pub fn n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn weight(&self) -> WeightVector {
        let sums: Vec<i64> = self.rows.iter().map(|r| r.iter().sum()).collect();
        sums.windows(2).map(|w| w[0] - w[1]).collect::<Vec<_>>().into()
    }
}

pub fn pattern_weight(p: &GTPattern) -> WeightVector {
    p.weight()
}

fn reversed(parts: &[i64]) -> Vec<i64> {
    parts.iter().rev().copied().collect()
}

pub(crate) fn free_dim(n: usize) -> usize {
    n.saturating_sub(1) * n
}

enum Entry {
    Var(usize),
    Const(i64),
}

fn entry(shape: &SkewShape, i: usize, j: usize) -> Entry {
    let n = shape.n();
    if i == 0 {
        Entry::Const(shape.lambda().parts()[n - 1 - j])
    } else if i == n {
        Entry::Const(shape.mu().parts()[n - 1 - j])
    } else {
        Entry::Var((i - 1) * n + j)
    }
}

/// Gelfand-Tsetlin polytope of `shape` in the `(n-1)·n` inner coordinates.
pub fn gt_polytope(shape: &SkewShape) -> Polytope {
    let n = shape.n();
    let dim = free_dim(n);
    let mut ineqs = BTreeSet::new();
    // lo ≤ hi
    let mut add = |lo: Entry, hi: Entry| -> bool {
        let mut a = alloc::vec![Rational::zero(); dim];
        let mut b = Rational::zero();
        match lo {
            Entry::Var(v) => a[v] += Rational::from_integer(1.into()),
            Entry::Const(c) => b -= Rational::from_integer(c.into()),
        }
        match hi {
            Entry::Var(v) => a[v] -= Rational::from_integer(1.into()),
            Entry::Const(c) => b += Rational::from_integer(c.into()),
        }
        if linalg::is_zero(&a) {
            return b < Rational::zero();
        }
        ineqs.insert(Halfspace::new(a, b));
        false
    };
    let mut violated = false;
    for i in 0..n {
        for j in 0..n {
            violated |= add(entry(shape, i + 1, j), entry(shape, i, j));
            if j + 1 < n {
                violated |= add(entry(shape, i, j), entry(shape, i + 1, j + 1));
            }
        }
    }
    if violated {
        return Polytope::empty(dim);
    }
    Polytope::from_hrep(HRep::new(dim, ineqs.into_iter().collect(), Vec::new()))
}

/// Full pattern (boundary rows included) from rational inner coordinates.
pub(crate) fn full_rows(shape: &SkewShape, free: &[Rational]) -> Vec<Row> {
    let n = shape.n();
    let boundary = |parts: &[i64]| -> Row { parts.iter().rev().map(|&c| Rational::from_integer(c.into())).collect() };
    let mut rows = Vec::with_capacity(n + 1);
    rows.push(boundary(shape.lambda().parts()));
    rows.extend(free.chunks(n.max(1)).take(n.saturating_sub(1)).map(<[Rational]>::to_vec));
    rows.push(boundary(shape.mu().parts()));
    rows
}

pub(crate) fn rational_weight(rows: &[Row]) -> Vec<Rational> {
    let sums: Vec<Rational> = rows.iter().map(|r| r.iter().fold(Rational::zero(), |a, x| a + x)).collect();
    sums.windows(2).map(|w| &w[0] - &w[1]).collect()
}

/// Vertices of a Gelfand-Tsetlin polytope with their weights.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexWeights {
    /// Full patterns of all vertices, boundary rows included.
    pub vertices: Vec<Vec<Row>>,
    /// Weights of the integral vertices, sorted, with multiplicity.
    pub integral: Vec<WeightVector>,
    /// Non-integral vertices and their (rational) weights.
    pub non_integral: Vec<(Vec<Row>, Vec<Rational>)>,
}

impl VertexWeights {
    pub fn all_integral(&self) -> bool {
        self.non_integral.is_empty()
    }

    /// Every coordinate appearing in some vertex pattern.
    pub fn coordinates(&self) -> BTreeSet<Rational> {
        self.vertices.iter().flatten().flatten().cloned().collect()
    }
}

pub fn vertex_weights(shape: &SkewShape) -> Result<VertexWeights> {
    let p = gt_polytope(shape);
    let verts = p.vertices()?;
    let mut out = VertexWeights {
        vertices: Vec::with_capacity(verts.len()),
        integral: Vec::new(),
        non_integral: Vec::new(),
    };
    for v in verts.iter() {
        let rows = full_rows(shape, v);
        let w = rational_weight(&rows);
        if linalg::is_integral(v) {
            let w = linalg::to_i64(&w).ok_or_else(|| Error::NonIntegralWeight(w.clone()))?;
            out.integral.push(w.into());
        } else {
            out.non_integral.push((rows.clone(), w));
        }
        out.vertices.push(rows);
    }
    out.integral.sort();
    Ok(out)
}
