//! Vertex cones and Brion's identity `σ_P = Σ_v σ_{K_v}`.
//!
//! For a simplicial cone `v + cone(g_1..g_d)` with primitive integer
//! generators, `σ_K = x^v · σ_Π / Π_i (1 - x^{g_i})` where `Π` is the
//! half-open parallelepiped `{Σ λ_i g_i : 0 ≤ λ_i < 1}`. The identity is
//! checked after multiplying through by every denominator, so only Laurent
//! polynomial arithmetic is involved.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{ExponentVec, LaurentPoly, Rational};
use crate::linalg::{self, Row};
use crate::lp::in_convex_hull;
use crate::polytope::Polytope;
use crate::transform::integer_point_transform;
use crate::{Error, Result};

/// `apex + cone(generators)` with primitive, pairwise distinct generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedCone {
    apex: ExponentVec,
    generators: Vec<ExponentVec>,
}

impl PointedCone {
    /// Normalizes each generator to its primitive vector, drops duplicates and
    /// checks pointedness.
    pub fn new(apex: ExponentVec, generators: Vec<ExponentVec>) -> Result<Self> {
        let n = apex.len();
        let mut prim: Vec<ExponentVec> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.len() });
            }
            let d = linalg::gcd_i64(g.as_slice());
            if d == 0 {
                return Err(Error::NotPointed);
            }
            let g: ExponentVec = g.iter().map(|x| x / d).collect::<Vec<_>>().into();
            if !prim.contains(&g) {
                prim.push(g);
            }
        }
        let rows: Vec<Row> = prim.iter().map(|g| linalg::from_i64(g.as_slice())).collect();
        if !rows.is_empty() && in_convex_hull(&alloc::vec![Rational::zero(); n], &rows) {
            return Err(Error::NotPointed);
        }
        Ok(Self { apex, generators: prim })
    }

    pub fn apex(&self) -> &ExponentVec {
        &self.apex
    }

    pub fn generators(&self) -> &[ExponentVec] {
        &self.generators
    }

    pub fn ambient_dim(&self) -> usize {
        self.apex.len()
    }

    pub fn is_simplicial(&self) -> bool {
        let rows: Vec<Row> = self.generators.iter().map(|g| linalg::from_i64(g.as_slice())).collect();
        linalg::rank(&rows, self.ambient_dim()) == rows.len()
    }
}

/// `numerator / Π_g (1 - x^g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFn {
    pub numerator: LaurentPoly,
    pub denominator_factors: Vec<ExponentVec>,
}

impl RationalFn {
    pub fn new(numerator: LaurentPoly, denominator_factors: Vec<ExponentVec>) -> Result<Self> {
        let n = numerator.nvars();
        for g in &denominator_factors {
            if g.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.len() });
            }
            if g.is_zero() {
                return Err(Error::InvalidShape("zero denominator factor".into()));
            }
        }
        Ok(Self {
            numerator,
            denominator_factors,
        })
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn denominator(&self) -> LaurentPoly {
        denominator_product(self.nvars(), &self.denominator_factors)
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equals(&self, other: &RationalFn) -> bool {
        self.nvars() == other.nvars()
            && &self.numerator * &other.denominator() == &other.numerator * &self.denominator()
    }

    /// Terms of total degree `≤ max_degree` of the power series expansion,
    /// each `1/(1 - x^g)` expanded geometrically. Every factor must have
    /// positive total degree.
    pub fn expand_truncated(&self, max_degree: i64) -> Result<LaurentPoly> {
        let n = self.nvars();
        let mut acc = truncate(&self.numerator, max_degree);
        for g in &self.denominator_factors {
            let step = g.total_degree();
            if step <= 0 {
                return Err(Error::Hypothesis("expansion needs factors of positive degree".into()));
            }
            let low = acc.terms().map(|(e, _)| e.total_degree()).min().unwrap_or(0);
            let reps = (max_degree - low).max(0) / step;
            let series = LaurentPoly::from_terms(n, (0..=reps).map(|t| (g.scale(t), BigInt::one())))?;
            acc = truncate(&(&acc * &series), max_degree);
        }
        Ok(acc)
    }
}

fn truncate(p: &LaurentPoly, max_degree: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        p.nvars(),
        p.terms()
            .filter(|(e, _)| e.total_degree() <= max_degree)
            .map(|(e, c)| (e.clone(), c.clone())),
    )
    .expect("same dimension")
}

fn denominator_product(n: usize, factors: &[ExponentVec]) -> LaurentPoly {
    factors.iter().fold(LaurentPoly::one(n), |acc, g| &acc * &one_minus(g))
}

fn one_minus(g: &ExponentVec) -> LaurentPoly {
    let n = g.len();
    &LaurentPoly::one(n) - &LaurentPoly::monomial(g.clone(), 1)
}

/// Edges of `P` at `v` point to the vertices `w` for which the inequalities
/// tight at both, together with the equalities, have rank `n - 1`.
pub fn tangent_cone(p: &Polytope, v: &[Rational]) -> Result<PointedCone> {
    let n = p.ambient_dim();
    let verts = p.vertices()?;
    if !verts.iter().any(|w| w.as_slice() == v) {
        return Err(Error::NotAVertex(v.to_vec()));
    }
    let apex = linalg::to_i64(v).ok_or_else(|| Error::NonLatticeVertex(v.to_vec()))?;
    let h = p.hrep();
    let eq_rows: Vec<Row> = h.equalities.iter().map(|e| e.normal.clone()).collect();
    let tight_v: Vec<bool> = h.inequalities.iter().map(|c| c.is_tight(v)).collect();

    let mut generators = Vec::new();
    for w in verts.iter().filter(|w| w.as_slice() != v) {
        let mut rows = eq_rows.clone();
        for (c, &tv) in h.inequalities.iter().zip(&tight_v) {
            if tv && c.is_tight(w) {
                rows.push(c.normal.clone());
            }
        }
        if linalg::rank(&rows, n) + 1 == n {
            let dir = linalg::to_i64(&linalg::sub(w, v)).ok_or_else(|| Error::NonLatticeVertex(w.clone()))?;
            generators.push(ExponentVec::new(dir));
        }
    }
    PointedCone::new(ExponentVec::new(apex), generators)
}

/// Lattice points of `{Σ λ_i g_i : 0 ≤ λ_i < 1}` for linearly independent
/// generators.
pub fn parallelepiped_points(generators: &[ExponentVec], n: usize) -> Result<Vec<ExponentVec>> {
    let d = generators.len();
    if d == 0 {
        return Ok(alloc::vec![ExponentVec::zero(n)]);
    }
    let gens: Vec<Row> = generators.iter().map(|g| linalg::from_i64(g.as_slice())).collect();
    // Coordinates that are independent on span(G) determine the point.
    let mut echelon = gens.clone();
    let pivots = linalg::rref(&mut echelon, n);
    if pivots.len() != d {
        return Err(Error::DependentGenerators);
    }
    // Square system restricted to the pivot coordinates: M λ = m_pivots.
    let square: Vec<Row> = pivots.iter().map(|&i| gens.iter().map(|g| g[i].clone()).collect()).collect();
    let inverse_cols: Vec<Row> = (0..d)
        .map(|j| {
            let mut e = alloc::vec![Rational::zero(); d];
            e[j] = Rational::one();
            linalg::solve_unique(&square, &e, d).expect("pivot minor is invertible")
        })
        .collect();

    let ranges: Vec<(i64, i64)> = pivots
        .iter()
        .map(|&i| {
            let lo: i64 = generators.iter().map(|g| g[i].min(0)).sum();
            let hi: i64 = generators.iter().map(|g| g[i].max(0)).sum();
            (lo, hi)
        })
        .collect();

    let mut out = Vec::new();
    let mut m: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    'scan: loop {
        let lambda: Row = (0..d)
            .map(|i| {
                (0..d).fold(Rational::zero(), |acc, j| acc + &inverse_cols[j][i] * Rational::from_integer(m[j].into()))
            })
            .collect();
        if lambda.iter().all(|l| !l.is_negative() && l < &Rational::one()) {
            let point: Row = (0..n)
                .map(|c| gens.iter().zip(&lambda).fold(Rational::zero(), |acc, (g, l)| acc + &g[c] * l))
                .collect();
            if let Some(ints) = linalg::to_i64(&point) {
                out.push(ExponentVec::new(ints));
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                break 'scan;
            }
            m[i] += 1;
            if m[i] <= ranges[i].1 {
                break;
            }
            m[i] = ranges[i].0;
            i += 1;
        }
    }
    out.sort();
    Ok(out)
}

/// `σ_K` for a simplicial cone.
pub fn cone_transform(c: &PointedCone) -> Result<RationalFn> {
    let n = c.ambient_dim();
    let pts = parallelepiped_points(&c.generators, n)?;
    let numerator = LaurentPoly::from_terms(n, pts.into_iter().map(|m| (&m + &c.apex, BigInt::one())))?;
    RationalFn::new(numerator, c.generators.clone())
}

#[derive(Debug, Clone, PartialEq)]
pub struct VertexCone {
    pub vertex: ExponentVec,
    pub transform: RationalFn,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BrionReport {
    pub verified: bool,
    pub cones: Vec<VertexCone>,
}

/// Checks `σ_P · Π_v D_v = Σ_v N_v · Π_{w≠v} D_w`.
pub fn brion_check(p: &Polytope) -> Result<BrionReport> {
    let n = p.ambient_dim();
    let verts = p.vertices()?.points.clone();
    if verts.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dim = p.affine_dim()?.expect("nonempty");
    let mut cones = Vec::with_capacity(verts.len());
    for v in &verts {
        let cone = tangent_cone(p, v)?;
        if cone.generators.len() != dim {
            return Err(Error::NonSimplicialCone {
                vertex: v.clone(),
                edges: cone.generators.len(),
                dim,
            });
        }
        cones.push(VertexCone {
            vertex: cone.apex.clone(),
            transform: cone_transform(&cone)?,
        });
    }

    let dens: Vec<LaurentPoly> = cones.iter().map(|c| c.transform.denominator()).collect();
    // prefix[i] = Π_{j<i} D_j, suffix[i] = Π_{j≥i} D_j
    let mut prefix = alloc::vec![LaurentPoly::one(n)];
    for d in &dens {
        let next = prefix.last().expect("nonempty") * d;
        prefix.push(next);
    }
    let mut suffix = alloc::vec![LaurentPoly::one(n); dens.len() + 1];
    for i in (0..dens.len()).rev() {
        suffix[i] = &dens[i] * &suffix[i + 1];
    }
    let sigma = integer_point_transform(p)?;
    let lhs = &sigma * &prefix[dens.len()];
    let mut rhs = LaurentPoly::zero(n);
    for (i, c) in cones.iter().enumerate() {
        rhs = &rhs + &(&c.transform.numerator * &(&prefix[i] * &suffix[i + 1]));
    }
    Ok(BrionReport {
        verified: lhs == rhs,
        cones,
    })
}

/// Number of lattice points of the half-open parallelepiped, `|det G|` when
/// `G` is square.
pub fn parallelepiped_volume(generators: &[ExponentVec]) -> Option<u64> {
    let rows: Vec<Row> = generators.iter().map(|g| linalg::from_i64(g.as_slice())).collect();
    if rows.len() != rows.first().map_or(0, |r| r.len()) {
        return None;
    }
    linalg::determinant(&rows).abs().to_integer().to_u64()
}
