//! Exact rational polytopes with paired vertex and inequality descriptions.
//!
//! A [`Polytope`] is created from either representation; the other one is
//! computed on first use and cached. Vertex sets are kept canonical (extreme
//! points only, sorted), inequality descriptions irredundant.

mod enumerate;
mod fm;
mod hull;
mod lattice;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};
use once_cell::race::OnceBox;

use crate::algebra::{ExponentVec, Rational};
use crate::linalg::{self, Row};
use crate::{Error, Result};

pub use enumerate::vertex_enumeration;
pub use hull::{canonicalize_vertices, v_to_h};
pub use lattice::lattice_points;

/// Vertex description: the points whose convex hull is the polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRep {
    pub points: Vec<Row>,
}

impl VRep {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Row> {
        self.points.iter()
    }
}

/// `normal · x ≤ offset`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: Row,
    pub offset: Rational,
}

/// `normal · x = offset`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Hyperplane {
    pub normal: Row,
    pub offset: Rational,
}

impl Halfspace {
    pub fn new(normal: Row, offset: Rational) -> Self {
        Self { normal, offset }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        linalg::dot(&self.normal, x) <= self.offset
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        linalg::dot(&self.normal, x) == self.offset
    }
}

impl Hyperplane {
    pub fn new(normal: Row, offset: Rational) -> Self {
        Self { normal, offset }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        linalg::dot(&self.normal, x) == self.offset
    }
}

/// Inequality/equality description `{x : A x ≤ b, E x = f}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub ambient: usize,
    pub inequalities: Vec<Halfspace>,
    pub equalities: Vec<Hyperplane>,
}

impl HRep {
    pub fn new(ambient: usize, inequalities: Vec<Halfspace>, equalities: Vec<Hyperplane>) -> Self {
        Self {
            ambient,
            inequalities,
            equalities,
        }
    }

    /// The empty set, encoded as the equality `0 = 1`.
    pub fn infeasible(ambient: usize) -> Self {
        Self::new(
            ambient,
            Vec::new(),
            alloc::vec![Hyperplane::new(alloc::vec![Rational::zero(); ambient], Rational::one())],
        )
    }

    /// True when some constraint has a zero normal and cannot hold.
    pub fn is_trivially_infeasible(&self) -> bool {
        self.equalities
            .iter()
            .any(|e| linalg::is_zero(&e.normal) && !e.offset.is_zero())
            || self
                .inequalities
                .iter()
                .any(|h| linalg::is_zero(&h.normal) && h.offset.is_negative())
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.inequalities.iter().all(|h| h.contains(x)) && self.equalities.iter().all(|e| e.contains(x))
    }

    /// `{x : A x ≤ k b, E x = k f}`, which is `k·P` for `k > 0`.
    pub fn scale_offsets(&self, k: &Rational) -> Self {
        Self {
            ambient: self.ambient,
            inequalities: self
                .inequalities
                .iter()
                .map(|h| Halfspace::new(h.normal.clone(), &h.offset * k))
                .collect(),
            equalities: self
                .equalities
                .iter()
                .map(|e| Hyperplane::new(e.normal.clone(), &e.offset * k))
                .collect(),
        }
    }

    /// `{x : x - t ∈ P}`.
    pub fn translate(&self, t: &[Rational]) -> Self {
        Self {
            ambient: self.ambient,
            inequalities: self
                .inequalities
                .iter()
                .map(|h| Halfspace::new(h.normal.clone(), &h.offset + linalg::dot(&h.normal, t)))
                .collect(),
            equalities: self
                .equalities
                .iter()
                .map(|e| Hyperplane::new(e.normal.clone(), &e.offset + linalg::dot(&e.normal, t)))
                .collect(),
        }
    }
}

/// A rational polytope in `ℝ^ambient`.
pub struct Polytope {
    ambient: usize,
    vrep: OnceBox<VRep>,
    hrep: OnceBox<HRep>,
}

impl Polytope {
    /// Convex hull of the given points; redundant points are discarded.
    pub fn from_points(ambient: usize, points: Vec<Row>) -> Result<Self> {
        for p in &points {
            if p.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: p.len(),
                });
            }
        }
        Ok(Self::with_vrep(ambient, canonicalize_vertices(points)?))
    }

    /// Convex hull of integer points.
    pub fn from_integer_points<P: AsRef<[i64]>>(ambient: usize, points: &[P]) -> Result<Self> {
        Self::from_points(ambient, points.iter().map(|p| linalg::from_i64(p.as_ref())).collect())
    }

    /// Polytope given by inequalities. Boundedness is checked lazily by the
    /// operations that need it.
    pub fn from_hrep(hrep: HRep) -> Self {
        let p = Self {
            ambient: hrep.ambient,
            vrep: OnceBox::new(),
            hrep: OnceBox::new(),
        };
        if hrep.is_trivially_infeasible() {
            let _ = p.vrep.set(alloc::boxed::Box::new(VRep { points: Vec::new() }));
        }
        let _ = p.hrep.set(alloc::boxed::Box::new(hrep));
        p
    }

    pub fn empty(ambient: usize) -> Self {
        Self::from_parts(ambient, VRep { points: Vec::new() }, HRep::infeasible(ambient))
    }

    pub fn point(p: Row) -> Self {
        let ambient = p.len();
        Self::with_vrep(ambient, VRep { points: alloc::vec![p] })
    }

    pub(crate) fn with_vrep(ambient: usize, vrep: VRep) -> Self {
        let p = Self {
            ambient,
            vrep: OnceBox::new(),
            hrep: OnceBox::new(),
        };
        if vrep.is_empty() {
            let _ = p.hrep.set(alloc::boxed::Box::new(HRep::infeasible(ambient)));
        }
        let _ = p.vrep.set(alloc::boxed::Box::new(vrep));
        p
    }

    fn from_parts(ambient: usize, vrep: VRep, hrep: HRep) -> Self {
        let p = Self::with_vrep(ambient, vrep);
        let _ = p.hrep.set(alloc::boxed::Box::new(hrep));
        p
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Canonical vertex set, computing it from the inequalities if needed.
    pub fn vertices(&self) -> Result<&VRep> {
        if let Some(v) = self.vrep.get() {
            return Ok(v);
        }
        let h = self.hrep.get().expect("polytope carries at least one representation");
        let v = vertex_enumeration(h)?;
        Ok(self.vrep.get_or_init(|| alloc::boxed::Box::new(v)))
    }

    /// Irredundant inequality description, computing it from the vertices if needed.
    pub fn hrep(&self) -> &HRep {
        self.hrep.get_or_init(|| {
            let v = self.vrep.get().expect("polytope carries at least one representation");
            alloc::boxed::Box::new(v_to_h(self.ambient, v))
        })
    }

    pub fn has_vrep(&self) -> bool {
        self.vrep.get().is_some()
    }

    pub fn is_empty(&self) -> bool {
        if let Some(v) = self.vrep.get() {
            return v.is_empty();
        }
        let h = self.hrep();
        if h.is_trivially_infeasible() {
            return true;
        }
        !hrep_lp(h).is_feasible()
    }

    /// Affine dimension; `None` for the empty polytope.
    pub fn affine_dim(&self) -> Result<Option<usize>> {
        let v = self.vertices()?;
        Ok(affine_rank(&v.points))
    }

    pub fn is_lattice(&self) -> Result<bool> {
        Ok(self.vertices()?.iter().all(|p| linalg::is_integral(p)))
    }

    /// Vertices as integer vectors; fails if any vertex is not integral.
    pub fn lattice_vertices(&self) -> Result<Vec<ExponentVec>> {
        self.vertices()?
            .iter()
            .map(|p| {
                linalg::to_i64(p)
                    .map(ExponentVec::new)
                    .ok_or_else(|| Error::NonLatticeVertex(p.clone()))
            })
            .collect()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.hrep().contains(x)
    }

    pub fn lattice_points(&self) -> Result<Vec<ExponentVec>> {
        lattice_points(self)
    }

    /// The vertex set as a set, for representation-independent comparison.
    pub fn vertex_set(&self) -> Result<BTreeSet<Row>> {
        Ok(self.vertices()?.points.iter().cloned().collect())
    }
}

impl Clone for Polytope {
    fn clone(&self) -> Self {
        let p = Self {
            ambient: self.ambient,
            vrep: OnceBox::new(),
            hrep: OnceBox::new(),
        };
        if let Some(v) = self.vrep.get() {
            let _ = p.vrep.set(alloc::boxed::Box::new(v.clone()));
        }
        if let Some(h) = self.hrep.get() {
            let _ = p.hrep.set(alloc::boxed::Box::new(h.clone()));
        }
        p
    }
}

impl fmt::Debug for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Polytope")
            .field("ambient", &self.ambient)
            .field("vrep", &self.vrep.get())
            .field("hrep", &self.hrep.get())
            .finish()
    }
}

pub(crate) fn hrep_lp(h: &HRep) -> crate::lp::LinearProgram {
    let mut lp = crate::lp::LinearProgram::new(h.ambient);
    for ineq in &h.inequalities {
        lp.add_le(ineq.normal.clone(), ineq.offset.clone());
    }
    for eq in &h.equalities {
        lp.add_eq(eq.normal.clone(), eq.offset.clone());
    }
    lp
}

/// Affine rank of a point set; `None` when empty.
pub(crate) fn affine_rank(points: &[Row]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Row> = rest.iter().map(|p| linalg::sub(p, first)).collect();
    Some(linalg::rank(&diffs, first.len()))
}

/// `k·P` for `k ≥ 0`; `0·P` is the origin (for nonempty `P`).
pub fn dilate(p: &Polytope, k: i64) -> Result<Polytope> {
    if k < 0 {
        return Err(Error::NegativeDilation(k));
    }
    let n = p.ambient;
    if p.is_empty() {
        return Ok(Polytope::empty(n));
    }
    if k == 0 {
        return Ok(Polytope::point(alloc::vec![Rational::zero(); n]));
    }
    let kq = Rational::from_integer(k.into());
    let out = Polytope {
        ambient: n,
        vrep: OnceBox::new(),
        hrep: OnceBox::new(),
    };
    if let Some(v) = p.vrep.get() {
        let points = v.points.iter().map(|x| linalg::scale(x, &kq)).collect();
        let _ = out.vrep.set(alloc::boxed::Box::new(VRep { points }));
    }
    if let Some(h) = p.hrep.get() {
        let _ = out.hrep.set(alloc::boxed::Box::new(h.scale_offsets(&kq)));
    }
    Ok(out)
}

/// `P + Q = {p + q}`; vertices are the extreme pairwise vertex sums.
pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    if p.ambient != q.ambient {
        return Err(Error::DimensionMismatch {
            expected: p.ambient,
            found: q.ambient,
        });
    }
    let (vp, vq) = (p.vertices()?, q.vertices()?);
    if vp.is_empty() || vq.is_empty() {
        return Ok(Polytope::empty(p.ambient));
    }
    let sums: BTreeSet<Row> = vp
        .iter()
        .flat_map(|a| vq.iter().map(move |b| linalg::add(a, b)))
        .collect();
    Polytope::from_points(p.ambient, sums.into_iter().collect())
}

/// `P + t` for a rational translation vector.
pub fn translate(p: &Polytope, t: &[Rational]) -> Result<Polytope> {
    if t.len() != p.ambient {
        return Err(Error::DimensionMismatch {
            expected: p.ambient,
            found: t.len(),
        });
    }
    let out = Polytope {
        ambient: p.ambient,
        vrep: OnceBox::new(),
        hrep: OnceBox::new(),
    };
    if let Some(v) = p.vrep.get() {
        let mut points: Vec<Row> = v.points.iter().map(|x| linalg::add(x, t)).collect();
        points.sort();
        let _ = out.vrep.set(alloc::boxed::Box::new(VRep { points }));
    }
    if let Some(h) = p.hrep.get() {
        let _ = out.hrep.set(alloc::boxed::Box::new(h.translate(t)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use alloc::vec;

    fn seg(a: i64, b: i64) -> Polytope {
        Polytope::from_integer_points(1, &[[a], [b]]).unwrap()
    }

    #[test]
    fn dilate_examples() {
        let d = dilate(&seg(0, 1), 3).unwrap();
        assert_eq!(d.vertex_set().unwrap(), seg(0, 3).vertex_set().unwrap());
        let same = dilate(&seg(0, 1), 1).unwrap();
        assert_eq!(same.vertex_set().unwrap(), seg(0, 1).vertex_set().unwrap());
        let zero = dilate(&seg(2, 5), 0).unwrap();
        assert_eq!(zero.vertices().unwrap().points, vec![vec![rat(0)]]);
        assert_eq!(dilate(&seg(0, 1), -1).unwrap_err(), Error::NegativeDilation(-1));
    }

    #[test]
    fn dilate_simplex_hrep() {
        let simplex = Polytope::from_integer_points(3, &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        simplex.hrep();
        let k = 4;
        let d = dilate(&simplex, k).unwrap();
        let h = d.hrep();
        assert_eq!(h.equalities.len(), 1);
        let eq = &h.equalities[0];
        // x1 + x2 + x3 = k up to scaling
        assert!(eq.normal.iter().all(|c| *c == eq.normal[0]));
        assert_eq!(&eq.offset / &eq.normal[0], rat(k));
        assert!(d.contains(&[rat(4), rat(0), rat(0)]));
        assert!(d.contains(&[rat(1), rat(2), rat(1)]));
        assert!(!d.contains(&[rat(5), rat(-1), rat(0)]));
    }

    #[test]
    fn minkowski_examples() {
        let s = minkowski_sum(&seg(0, 1), &seg(0, 1)).unwrap();
        assert_eq!(s.vertex_set().unwrap(), seg(0, 2).vertex_set().unwrap());

        let h = Polytope::from_integer_points(2, &[[0, 0], [1, 0]]).unwrap();
        let v = Polytope::from_integer_points(2, &[[0, 0], [0, 1]]).unwrap();
        let sq = Polytope::from_integer_points(2, &[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
        assert_eq!(
            minkowski_sum(&h, &v).unwrap().vertex_set().unwrap(),
            sq.vertex_set().unwrap()
        );

        let pt = Polytope::point(vec![rat(3), rat(-1)]);
        let moved = minkowski_sum(&sq, &pt).unwrap();
        assert_eq!(
            moved.vertex_set().unwrap(),
            translate(&sq, &[rat(3), rat(-1)]).unwrap().vertex_set().unwrap()
        );
        assert!(minkowski_sum(&sq, &seg(0, 1)).is_err());
    }

    #[test]
    fn empty_polytope_behaves() {
        let e = Polytope::empty(2);
        assert!(e.is_empty());
        assert_eq!(e.affine_dim().unwrap(), None);
        assert!(e.lattice_points().unwrap().is_empty());
        assert!(dilate(&e, 3).unwrap().is_empty());
    }
}
