//! Integer point transforms and the linear recursion of `σ_{kP+Q}`.
//!
//! For a lattice polytope `P` with vertices `v_1..v_r` and any polytope `Q`,
//! the sequence `a_k = σ_{kP+Q}` is annihilated by
//! `χ_{P;Q}(X) = Π_v (X - x^v)`. [`verify_recursion`] checks this exactly on a
//! range of `k` and [`minimality_residuals`] decides, for every vertex `u`,
//! whether the factor `X - x^u` can be dropped.

mod indicator;
mod specialize;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::algebra::elementary_symmetric_all;
use crate::algebra::{ExponentVec, LaurentPoly};
use crate::polytope::{dilate, minkowski_sum, translate, Polytope};
use crate::{Error, Result};

pub use indicator::{indicator_recursion_check, IndicatorReport, SampleBox};
pub use specialize::{ehrhart_sequence, specialize, EhrhartReport, LatticeMap};

/// Record of a verified recursion.
#[derive(Debug, Clone, PartialEq)]
pub struct RecursionCertificate {
    /// Coefficients of the characteristic polynomial, leading (monic) first:
    /// the coefficient of `X^{r-j}` is `(-1)^j e_j`.
    pub char_poly_coeffs: Vec<LaurentPoly>,
    /// Inclusive range of start indices at which the recursion was checked.
    pub k_range: (usize, usize),
    /// Residual with the given vertex's factor dropped, at the first index.
    pub minimality_residuals: BTreeMap<ExponentVec, LaurentPoly>,
    /// `Some(true)` iff every residual is nonzero; `None` when minimality was
    /// not assessed.
    pub minimal: Option<bool>,
}

impl RecursionCertificate {
    pub fn order(&self) -> usize {
        self.char_poly_coeffs.len() - 1
    }
}

/// `σ_P(x) = Σ_{m ∈ P ∩ ℤⁿ} x^m`; zero for the empty polytope.
pub fn integer_point_transform(p: &Polytope) -> Result<LaurentPoly> {
    let n = p.ambient_dim();
    let pts = p.lattice_points()?;
    Ok(points_transform(n, pts))
}

pub(crate) fn points_transform(n: usize, pts: Vec<ExponentVec>) -> LaurentPoly {
    LaurentPoly::from_terms(n, pts.into_iter().map(|m| (m, 1.into()))).expect("points have ambient dimension")
}

/// Coefficients of `Π_{m ∈ roots} (X - x^m)`, leading first.
pub fn char_poly_from_roots(nvars: usize, roots: &[ExponentVec]) -> Result<Vec<LaurentPoly>> {
    let e = elementary_symmetric_all(nvars, roots)?;
    Ok(e.into_iter()
        .enumerate()
        .map(|(j, ej)| if j % 2 == 0 { ej } else { -&ej })
        .collect())
}

/// Characteristic polynomial `χ_{P;Q}(X) = Π_{v ∈ V(P)} (X - x^v)`.
pub fn char_poly(p: &Polytope) -> Result<Vec<LaurentPoly>> {
    let verts = p.lattice_vertices()?;
    char_poly_from_roots(p.ambient_dim(), &verts)
}

/// `Σ_j coeffs[j] · seq[k + d - j]` where `d = coeffs.len() - 1`; zero iff the
/// recursion holds at start index `k`.
pub fn recursion_residual(seq: &[LaurentPoly], coeffs: &[LaurentPoly], k: usize) -> LaurentPoly {
    let d = coeffs.len() - 1;
    let mut acc = LaurentPoly::zero(seq[k].nvars());
    for (j, c) in coeffs.iter().enumerate() {
        acc = &acc + &(c * &seq[k + d - j]);
    }
    acc
}

/// Right-hand side of the recursion written over vertex subsets:
/// `Σ_{∅≠I⊆[r]} (-1)^{1+|I|} x^{Σ_{i∈I} v_i} σ_{(k+r-|I|)P+Q}`.
///
/// Exponential in `r`; [`verify_recursion`] uses the equivalent grouping by
/// `|I|` through elementary symmetric polynomials.
pub fn subset_recursion_rhs(vertices: &[ExponentVec], seq: &[LaurentPoly], k: usize) -> LaurentPoly {
    let r = vertices.len();
    let n = seq[0].nvars();
    let mut acc = LaurentPoly::zero(n);
    for mask in 1u64..(1u64 << r) {
        let size = mask.count_ones() as usize;
        let mut shift = ExponentVec::zero(n);
        for (i, v) in vertices.iter().enumerate() {
            if mask & (1 << i) != 0 {
                shift = &shift + v;
            }
        }
        let term = seq[k + r - size].monomial_shift(&shift).expect("same dimension");
        acc = if size % 2 == 1 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `[σ_{kP+Q} : k = 0..count]`.
pub fn transform_sequence(p: &Polytope, q: &Polytope, count: usize) -> Result<Vec<LaurentPoly>> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            found: q.ambient_dim(),
        });
    }
    let qv = q.vertices()?;
    let single = (qv.len() == 1).then(|| qv.points[0].clone());
    (0..count)
        .map(|k| {
            let kp = dilate(p, k as i64)?;
            let shifted = match &single {
                Some(t) => translate(&kp, t)?,
                None => minkowski_sum(&kp, q)?,
            };
            integer_point_transform(&shifted)
        })
        .collect()
}

/// Checks `Σ_{j=0}^{r} (-1)^j e_j(x^{v}) σ_{(k+r-j)P+Q} = 0` for
/// `k = 0..=k_max`, then computes the minimality residuals.
pub fn verify_recursion(p: &Polytope, q: &Polytope, k_max: usize) -> Result<RecursionCertificate> {
    let verts = p.lattice_vertices()?;
    let r = verts.len();
    let coeffs = char_poly_from_roots(p.ambient_dim(), &verts)?;
    let len = (k_max + r).max(2 * r - 1) + 1;
    let seq = transform_sequence(p, q, len)?;
    for k in 0..=k_max {
        let difference = recursion_residual(&seq, &coeffs, k);
        if !difference.is_zero() {
            return Err(Error::RecursionFailure { k, difference });
        }
    }
    let residuals = residuals_from(&verts, &seq)?;
    let minimal = residuals.values().all(|r| !r.is_zero());
    Ok(RecursionCertificate {
        char_poly_coeffs: coeffs,
        k_range: (0, k_max),
        minimality_residuals: residuals,
        minimal: Some(minimal),
    })
}

/// For each vertex `u`, the residual of the recursion with characteristic
/// polynomial `Π_{v ≠ u} (X - x^v)` at `k = 0`.
///
/// The roots `x^v` are distinct monomials, so the sequence decomposes as
/// `Σ_v c_v x^{kv}` and the dropped-factor recursion holds for all `k` iff
/// `c_u = 0` iff the residual vanishes at one `k`. The residual is evaluated
/// for `k = 0..=r` and all values must agree on vanishing.
pub fn minimality_residuals(p: &Polytope, q: &Polytope) -> Result<BTreeMap<ExponentVec, LaurentPoly>> {
    let verts = p.lattice_vertices()?;
    let r = verts.len();
    let seq = transform_sequence(p, q, 2 * r)?;
    residuals_from(&verts, &seq)
}

fn residuals_from(verts: &[ExponentVec], seq: &[LaurentPoly]) -> Result<BTreeMap<ExponentVec, LaurentPoly>> {
    let r = verts.len();
    let n = seq[0].nvars();
    let mut out = BTreeMap::new();
    for (i, u) in verts.iter().enumerate() {
        let others: Vec<ExponentVec> = verts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let coeffs = char_poly_from_roots(n, &others)?;
        let values: Vec<LaurentPoly> = (0..=r).map(|k| recursion_residual(seq, &coeffs, k)).collect();
        let vanishes = values[0].is_zero();
        if values.iter().any(|v| v.is_zero() != vanishes) {
            return Err(Error::InconsistentResidual { vertex: u.clone() });
        }
        out.insert(u.clone(), values.into_iter().next().expect("k = 0"));
    }
    Ok(out)
}
