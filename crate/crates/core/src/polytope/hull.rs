use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::fm::{History, Ineq, System};
use super::{affine_rank, HRep, Halfspace, Hyperplane, VRep};
use crate::algebra::Rational;
use crate::linalg::{self, Row};
use crate::lp::in_convex_hull;
use crate::{Error, Result};

/// Removes duplicates and every point lying in the convex hull of the
/// others. The result is sorted lexicographically.
pub fn canonicalize_vertices(points: Vec<Row>) -> Result<VRep> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut pts: Vec<Row> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    if pts.len() <= 2 {
        return Ok(VRep { points: pts });
    }
    let mut i = 0;
    while i < pts.len() {
        // lexicographic extremes are always vertices
        if i == 0 || i + 1 == pts.len() {
            i += 1;
            continue;
        }
        let candidate = pts.remove(i);
        if in_convex_hull(&candidate, &pts) {
            continue;
        }
        pts.insert(i, candidate);
        i += 1;
    }
    Ok(VRep { points: pts })
}

/// Inequality description of `conv(v)`.
///
/// The barycentric system `x = Σ λ_i v_i, Σ λ_i = 1, λ ≥ 0` is projected onto
/// `x`: equalities first substitute out as many `λ` as they can, the rest are
/// removed by Fourier-Motzkin with Kohler's redundancy rule. The output is
/// then reduced to one inequality per facet (identified by its set of tight
/// vertices) plus the equations of the affine hull.
pub fn v_to_h(ambient: usize, v: &VRep) -> HRep {
    if v.is_empty() {
        return HRep::infeasible(ambient);
    }
    let n = ambient;
    let r = v.len();
    let mut sys = System::new(n + r, true);
    for i in 0..n {
        let mut a = alloc::vec![Rational::zero(); n + r];
        a[i] = Rational::one();
        for (j, p) in v.iter().enumerate() {
            a[n + j] = -p[i].clone();
        }
        sys.eq.push((a, Rational::zero()));
    }
    let mut sum = alloc::vec![Rational::zero(); n + r];
    for c in sum.iter_mut().skip(n) {
        *c = Rational::one();
    }
    sys.eq.push((sum, Rational::one()));
    for j in 0..r {
        let mut a = alloc::vec![Rational::zero(); n + r];
        a[n + j] = -Rational::one();
        sys.le.push(Ineq {
            a,
            b: Rational::zero(),
            hist: History::single(j),
        });
    }
    sys.normalize();

    for var in n..n + r {
        sys.substitute(var);
    }
    loop {
        let best = (n..n + r)
            .filter(|&var| sys.involves(var))
            .min_by_key(|&var| {
                let pos = sys.le.iter().filter(|c| c.a[var] > Rational::zero()).count();
                let neg = sys.le.iter().filter(|c| c.a[var] < Rational::zero()).count();
                pos * neg
            });
        match best {
            Some(var) => sys.fourier_motzkin(var),
            None => break,
        }
    }
    debug_assert!(!sys.infeasible);

    let dim = affine_rank(&v.points).expect("nonempty");
    let equalities = affine_hull(n, &v.points);

    let mut facets: BTreeMap<Vec<bool>, Halfspace> = BTreeMap::new();
    if dim > 0 {
        for c in &sys.le {
            let normal: Row = c.a[..n].to_vec();
            let tight: Vec<bool> = v.iter().map(|p| linalg::dot(&normal, p) == c.b).collect();
            if tight.iter().all(|&t| t) || !tight.iter().any(|&t| t) {
                continue;
            }
            let tight_pts: Vec<Row> = v.iter().zip(&tight).filter(|(_, &t)| t).map(|(p, _)| p.clone()).collect();
            if affine_rank(&tight_pts) != Some(dim - 1) {
                continue;
            }
            let (ints, factor) = linalg::primitive_integer(&normal);
            let h = Halfspace::new(ints.into_iter().map(Rational::from_integer).collect(), &c.b * factor);
            match facets.get(&tight) {
                Some(old) if simpler(old, &h) => {}
                _ => {
                    facets.insert(tight, h);
                }
            }
        }
    }
    let mut inequalities: Vec<Halfspace> = facets.into_values().collect();
    inequalities.sort();
    HRep::new(n, inequalities, equalities)
}

fn simpler(a: &Halfspace, b: &Halfspace) -> bool {
    let nz = |h: &Halfspace| h.normal.iter().filter(|c| !c.is_zero()).count();
    (nz(a), &a.normal) <= (nz(b), &b.normal)
}

/// Equations of the affine hull, in reduced echelon form with primitive
/// integer normals.
pub(crate) fn affine_hull(n: usize, points: &[Row]) -> Vec<Hyperplane> {
    let Some((first, rest)) = points.split_first() else {
        return Vec::new();
    };
    let diffs: Vec<Row> = rest.iter().map(|p| linalg::sub(p, first)).collect();
    let mut normals = linalg::nullspace(&diffs, n);
    linalg::rref(&mut normals, n);
    normals
        .into_iter()
        .map(|a| {
            let (ints, _) = linalg::primitive_integer(&a);
            let a: Row = ints.into_iter().map(Rational::from_integer).collect();
            let b = linalg::dot(&a, first);
            Hyperplane::new(a, b)
        })
        .collect()
}
