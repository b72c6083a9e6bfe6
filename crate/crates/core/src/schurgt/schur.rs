use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::gt::{gt_polytope, vertex_weights, GTPattern};
use super::ssyt::ssyt_enumerate;
use super::{dominates, sorted_desc, SkewShape, WeightVector};
use crate::algebra::{LaurentPoly, Rational};
use crate::{Error, Result};

/// `Σ_p x^{w(p)}` over the lattice points of the Gelfand-Tsetlin polytope.
pub fn schur_via_gt(shape: &SkewShape) -> Result<LaurentPoly> {
    let n = shape.n();
    let pts = gt_polytope(shape).lattice_points()?;
    let mut terms = Vec::with_capacity(pts.len());
    for m in pts {
        let pattern = GTPattern::from_free(shape, m.as_slice())?;
        terms.push((pattern.weight(), BigInt::from(1)));
    }
    LaurentPoly::from_terms(n, terms)
}

/// `Σ_T x^{w(T)}` over semistandard tableaux with entries in `1..=n`.
pub fn schur_via_ssyt(shape: &SkewShape) -> Result<LaurentPoly> {
    let n = shape.n();
    let terms = ssyt_enumerate(shape, n).into_iter().map(|t| (t.weight(n), BigInt::from(1)));
    LaurentPoly::from_terms(n, terms)
}

/// Skew Schur polynomial in `n = shape.n()` variables, computed from
/// Gelfand-Tsetlin lattice points and cross-checked against tableaux.
pub fn schur_polynomial(shape: &SkewShape) -> Result<LaurentPoly> {
    let gt = schur_via_gt(shape)?;
    if gt != schur_via_ssyt(shape)? {
        return Err(Error::SchurMismatch);
    }
    Ok(gt)
}

/// Number of tableaux of `shape` with weight `w`.
pub fn kostka(shape: &SkewShape, w: &WeightVector) -> Result<u64> {
    if w.len() != shape.n() {
        return Err(Error::DimensionMismatch {
            expected: shape.n(),
            found: w.len(),
        });
    }
    schur_polynomial(shape)?.coeff(w).to_u64().ok_or(Error::Overflow)
}

/// Weights with positive Kostka coefficient whose sorted rearrangement
/// dominates the sorted `λ - μ`.
pub fn conjecture_w(shape: &SkewShape) -> Result<BTreeSet<WeightVector>> {
    let target = shape.difference_sorted();
    Ok(schur_polynomial(shape)?
        .terms()
        .map(|(w, _)| w.clone())
        .filter(|w| dominates(&sorted_desc(w.as_slice()), &target))
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct CounterexampleReport {
    pub conjecture_weights: Vec<WeightVector>,
    /// Weights of integral vertices, with multiplicity.
    pub vertex_weights: Vec<WeightVector>,
    pub non_integral_vertices: usize,
    /// Every coordinate of every vertex pattern.
    pub vertex_coordinates: Vec<Rational>,
    /// Conjectured weights that are not the weight of any vertex.
    pub missing: Vec<WeightVector>,
    /// Whether `Π_{w∈W} (X - x^w)` divides `Π_v (X - x^{w(v)})`.
    pub divides: bool,
    /// The conjectured polynomial is shown not to be minimal. Requires all
    /// vertices to be integral, so that the vertex polynomial annihilates the
    /// sequence.
    pub refuted: bool,
}

pub fn counterexample_report(shape: &SkewShape) -> Result<CounterexampleReport> {
    let w = conjecture_w(shape)?;
    let vw = vertex_weights(shape)?;
    let have: BTreeSet<&WeightVector> = vw.integral.iter().collect();
    let missing: Vec<WeightVector> = w.iter().filter(|x| !have.contains(x)).cloned().collect();
    let divides = missing.is_empty();
    Ok(CounterexampleReport {
        refuted: !divides && vw.all_integral(),
        conjecture_weights: w.into_iter().collect(),
        non_integral_vertices: vw.non_integral.len(),
        vertex_coordinates: vw.coordinates().into_iter().collect(),
        vertex_weights: vw.integral,
        missing,
        divides,
    })
}
