use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::integer_point_transform;
use crate::algebra::{ExponentVec, LaurentPoly};
use crate::polytope::{dilate, Polytope};
use crate::{Error, Result};

/// Integer `rows × cols` matrix acting on exponent vectors, `m ↦ A m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMap {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl LatticeMap {
    /// Row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend_from_slice(r);
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = alloc::vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self { rows: n, cols: n, entries }
    }

    /// The `0 × n` map; specializing along it sums all coefficients.
    pub fn zero(n: usize) -> Self {
        Self {
            rows: 0,
            cols: n,
            entries: Vec::new(),
        }
    }

    /// Projection onto the listed coordinates.
    pub fn projection(n: usize, coords: &[usize]) -> Result<Self> {
        let mut entries = alloc::vec![0; coords.len() * n];
        for (row, &c) in coords.iter().enumerate() {
            if c >= n {
                return Err(Error::OutOfRange { index: c, max: n.saturating_sub(1) });
            }
            entries[row * n + c] = 1;
        }
        Self::new(coords.len(), n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    pub fn apply(&self, m: &ExponentVec) -> ExponentVec {
        debug_assert_eq!(m.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let row = &self.entries[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(m.iter()).map(|(a, b)| a * b).sum()
            })
            .collect::<Vec<i64>>()
            .into()
    }
}

/// `x^m ↦ x^{f(m)}`, extended linearly.
pub fn specialize(p: &LaurentPoly, f: &LatticeMap) -> Result<LaurentPoly> {
    if p.nvars() != f.cols {
        return Err(Error::DimensionMismatch {
            expected: f.cols,
            found: p.nvars(),
        });
    }
    Ok(p.map_exponents(f.rows, |m| f.apply(m)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartReport {
    /// `|kP ∩ ℤⁿ|` for `k = 0..=k_max`.
    pub counts: Vec<u64>,
    pub dim: usize,
    /// Whether `(X - 1)^{dim + 1}` annihilates the counts on every window
    /// that fits.
    pub annihilated: bool,
    /// Least `m` such that `(X - 1)^m` annihilates every window that fits.
    /// Only informative when `k_max ≥ dim + 2`.
    pub minimal_power: usize,
}

/// Lattice point counts of integer dilates, obtained by specializing `σ_{kP}`
/// along the zero map.
pub fn ehrhart_sequence(p: &Polytope, k_max: usize) -> Result<EhrhartReport> {
    p.lattice_vertices()?;
    let dim = p.affine_dim()?.ok_or(Error::EmptyInput)?;
    let zero = LatticeMap::zero(p.ambient_dim());
    let counts = (0..=k_max)
        .map(|k| {
            let sigma = integer_point_transform(&dilate(p, k as i64)?)?;
            let c = specialize(&sigma, &zero)?.coeff(&ExponentVec::zero(0));
            c.to_u64().ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    let annihilated = annihilates(&counts, dim + 1);
    let minimal_power = (0..=counts.len()).find(|&m| annihilates(&counts, m)).expect("m = len is vacuous");
    Ok(EhrhartReport {
        counts,
        dim,
        annihilated,
        minimal_power,
    })
}

/// `Σ_i (-1)^{m-i} C(m, i) a_{k+i} = 0` for every `k` with `k + m < len`.
pub(crate) fn annihilates(seq: &[u64], m: usize) -> bool {
    let mut binom = alloc::vec![BigInt::from(1)];
    for i in 0..m {
        let next = &binom[i] * BigInt::from(m - i) / BigInt::from(i + 1);
        binom.push(next);
    }
    (0..seq.len().saturating_sub(m)).all(|k| {
        let s = (0..=m).fold(BigInt::zero(), |acc, i| {
            let term = &binom[i] * BigInt::from(seq[k + i]);
            if (m - i) % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        });
        s.is_zero()
    })
}
