//! Lattice point enumeration.
//!
//! The integer bounding box is scanned coordinate by coordinate. Before the
//! scan, Fourier-Motzkin projections `P_k` of `P` onto the first `k`
//! coordinates are computed once; when `x_1..x_{k-1}` are fixed, the
//! constraints of `P_k` give exact bounds for `x_k`, so no branch of the
//! scan is entered unless it extends to a real point of `P`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::fm::System;
use super::Polytope;
use crate::algebra::{ExponentVec, Rational};
use crate::{Error, Result};

/// Systems larger than this get an LP redundancy pass between eliminations.
const PRUNE_THRESHOLD: usize = 150;

struct Constraint {
    prefix: Vec<i128>,
    coeff: i128,
    rhs: i128,
}

#[derive(Default)]
struct Level {
    ineqs: Vec<Constraint>,
    eqs: Vec<Constraint>,
}

/// All integer points of a bounded polytope, in graded-lex order.
pub fn lattice_points(p: &Polytope) -> Result<Vec<ExponentVec>> {
    if p.vrep.get().is_some_and(|v| v.is_empty()) {
        return Ok(Vec::new());
    }
    let h = p.hrep();
    if h.is_trivially_infeasible() {
        return Ok(Vec::new());
    }
    let n = h.ambient;
    if n == 0 {
        return Ok(if h.contains(&[]) {
            alloc::vec![ExponentVec::zero(0)]
        } else {
            Vec::new()
        });
    }

    let mut sys = System::from_hrep(h);
    let mut levels: Vec<Level> = (0..n).map(|_| Level::default()).collect();
    for k in (0..n).rev() {
        if sys.infeasible {
            return Ok(Vec::new());
        }
        match level_from(&sys, k)? {
            Some(level) => levels[k] = level,
            None => return Ok(Vec::new()),
        }
        if k > 0 {
            sys.eliminate(k);
            if sys.le.len() > PRUNE_THRESHOLD {
                sys.prune_redundant();
            }
        }
    }

    let bbox = p.vrep.get().map(|v| bounding_box(n, &v.points));
    let mut out = Vec::new();
    let mut x = alloc::vec![0i64; n];
    scan(&levels, bbox.as_deref(), 0, &mut x, &mut out)?;
    out.sort();
    Ok(out)
}

/// Constraints of the projection onto coordinates `0..=k` that involve `x_k`.
/// Returns `None` when some equality forces a non-integral value.
fn level_from(sys: &System, k: usize) -> Result<Option<Level>> {
    let mut level = Level::default();
    for c in &sys.le {
        if c.a[k].is_zero() {
            continue;
        }
        let (prefix, coeff) = int_row(&c.a, k)?;
        let rhs = to_i128(&c.b.floor().to_integer())?;
        level.ineqs.push(Constraint { prefix, coeff, rhs });
    }
    for (a, b) in &sys.eq {
        if a[k].is_zero() {
            continue;
        }
        if !b.is_integer() {
            // a is a primitive integer row, so a·x is an integer
            return Ok(None);
        }
        let (prefix, coeff) = int_row(a, k)?;
        let rhs = to_i128(&b.to_integer())?;
        level.eqs.push(Constraint { prefix, coeff, rhs });
    }
    Ok(Some(level))
}

fn int_row(a: &[Rational], k: usize) -> Result<(Vec<i128>, i128)> {
    let conv = |q: &Rational| -> Result<i128> {
        debug_assert!(q.is_integer());
        let v = i64::try_from(q.to_integer()).map_err(|_| Error::Overflow)?;
        Ok(v as i128)
    };
    let prefix = a[..k].iter().map(conv).collect::<Result<_>>()?;
    Ok((prefix, conv(&a[k])?))
}

fn to_i128(v: &BigInt) -> Result<i128> {
    i128::try_from(v).map_err(|_| Error::Overflow)
}

fn bounding_box(n: usize, points: &[Vec<Rational>]) -> Vec<(i64, i64)> {
    (0..n)
        .map(|i| {
            let lo = points.iter().map(|p| &p[i]).min().expect("nonempty");
            let hi = points.iter().map(|p| &p[i]).max().expect("nonempty");
            let lo = i64::try_from(lo.ceil().to_integer()).unwrap_or(i64::MIN);
            let hi = i64::try_from(hi.floor().to_integer()).unwrap_or(i64::MAX);
            (lo, hi)
        })
        .collect()
}

fn residual(c: &Constraint, x: &[i64]) -> i128 {
    c.prefix
        .iter()
        .zip(x)
        .fold(c.rhs, |acc, (a, &xi)| acc - a * xi as i128)
}

fn scan(
    levels: &[Level],
    bbox: Option<&[(i64, i64)]>,
    k: usize,
    x: &mut Vec<i64>,
    out: &mut Vec<ExponentVec>,
) -> Result<()> {
    let level = &levels[k];
    let (mut lo, mut hi) = match bbox {
        Some(b) => (Some(b[k].0 as i128), Some(b[k].1 as i128)),
        None => (None, None),
    };
    for c in &level.ineqs {
        let s = residual(c, &x[..k]);
        if c.coeff > 0 {
            let v = Integer::div_floor(&s, &c.coeff);
            hi = Some(hi.map_or(v, |h| h.min(v)));
        } else {
            // c·x_k ≤ s with c < 0  ⇔  x_k ≥ ceil(s / c)
            let v = Integer::div_ceil(&s, &c.coeff);
            lo = Some(lo.map_or(v, |l| l.max(v)));
        }
    }
    for c in &level.eqs {
        let s = residual(c, &x[..k]);
        if s % c.coeff != 0 {
            return Ok(());
        }
        let v = s / c.coeff;
        lo = Some(lo.map_or(v, |l| l.max(v)));
        hi = Some(hi.map_or(v, |h| h.min(v)));
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(Error::Unbounded);
    };
    let mut v = lo;
    while v <= hi {
        x[k] = i64::try_from(v).map_err(|_| Error::Overflow)?;
        if k + 1 == levels.len() {
            out.push(ExponentVec::new(x.clone()));
        } else {
            scan(levels, bbox, k + 1, x, out)?;
        }
        v += 1;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::lp::in_convex_hull;
    use alloc::vec;

    #[test]
    fn segment_and_triangle() {
        let seg = Polytope::from_integer_points(1, &[[0], [2]]).unwrap();
        let pts: Vec<_> = seg.lattice_points().unwrap();
        assert_eq!(pts, vec![ExponentVec::from([0]), ExponentVec::from([1]), ExponentVec::from([2])]);

        let tri = Polytope::from_integer_points(2, &[[0, 0], [2, 0], [0, 2]]).unwrap();
        let pts = tri.lattice_points().unwrap();
        // brute-force box scan with the convex-combination test
        let verts: Vec<_> = tri.vertices().unwrap().points.clone();
        let mut expected = Vec::new();
        for a in 0..=2i64 {
            for b in 0..=2i64 {
                if in_convex_hull(&[rat(a), rat(b)], &verts) {
                    expected.push(ExponentVec::from([a, b]));
                }
            }
        }
        expected.sort();
        assert_eq!(pts, expected);
        assert_eq!(pts.len(), 6);
    }

    #[test]
    fn offset_segment_has_no_lattice_points() {
        let half = Rational::new(1.into(), 2.into());
        let p = Polytope::from_points(2, vec![vec![half.clone(), half.clone()], vec![&half + rat(1), half]]).unwrap();
        assert!(p.lattice_points().unwrap().is_empty());
    }

    #[test]
    fn lower_dimensional_simplex() {
        let p = Polytope::from_integer_points(3, &[[2, 0, 0], [0, 2, 0], [0, 0, 2]]).unwrap();
        assert_eq!(p.lattice_points().unwrap().len(), 6);
    }

    #[test]
    fn h_only_unbounded_is_reported() {
        use crate::polytope::{HRep, Halfspace};
        let h = HRep::new(2, vec![Halfspace::new(vec![rat(1), rat(0)], rat(1))], vec![]);
        assert_eq!(Polytope::from_hrep(h).lattice_points().unwrap_err(), Error::Unbounded);
    }
}
