//! Pointwise check of the indicator-function form of the recursion:
//!
//! `1_{(k+r)P} = Σ_{∅≠I⊆[r]} (-1)^{1+|I|} 1_{(k+r-|I|)P + Σ_{i∈I} v_i}`
//!
//! for any rational polytope `P` with vertices `v_1..v_r`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::Rational;
use crate::linalg::{self, Row};
use crate::polytope::{HRep, Polytope};
use crate::{Error, Result};

/// Axis-aligned integer box `[lo_1, hi_1] × … × [lo_n, hi_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl SampleBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch {
                expected: lo.len(),
                found: hi.len(),
            });
        }
        Ok(Self { lo, hi })
    }

    pub fn cube(n: usize, lo: i64, hi: i64) -> Self {
        Self {
            lo: alloc::vec![lo; n],
            hi: alloc::vec![hi; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    /// Number of half-integer grid points in the box.
    pub fn grid_len(&self) -> usize {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&l, &h)| if h < l { 0 } else { (2 * (h - l) + 1) as usize })
            .product()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndicatorReport {
    pub points_checked: usize,
    /// Number of indicator terms on the right-hand side, `2^r - 1`.
    pub terms: usize,
}

struct Term {
    sign: i64,
    dilation: i64,
    shift: Row,
}

/// `x ∈ mP + s`, with `0·P = {0}`.
fn member(h: &HRep, m: i64, shift: &[Rational], x: &[Rational]) -> bool {
    let y = linalg::sub(x, shift);
    if m == 0 {
        return linalg::is_zero(&y);
    }
    let m = Rational::from_integer(m.into());
    h.inequalities.iter().all(|c| linalg::dot(&c.normal, &y) <= &c.offset * &m)
        && h.equalities.iter().all(|c| linalg::dot(&c.normal, &y) == &c.offset * &m)
}

/// Evaluates both sides on the grid `sample_box ∩ (½ℤ)ⁿ`.
pub fn indicator_recursion_check(p: &Polytope, k: usize, sample_box: &SampleBox) -> Result<IndicatorReport> {
    let n = p.ambient_dim();
    if sample_box.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: sample_box.dim(),
        });
    }
    let verts = p.vertices()?.points.clone();
    let r = verts.len();
    if r >= 24 {
        return Err(Error::OutOfRange { index: r, max: 23 });
    }
    let h = p.hrep();
    let top = (k + r) as i64;

    let mut terms = Vec::with_capacity((1 << r) - 1);
    for mask in 1u32..(1u32 << r) {
        let size = mask.count_ones() as i64;
        let mut shift = alloc::vec![Rational::zero(); n];
        for (i, v) in verts.iter().enumerate() {
            if mask & (1 << i) != 0 {
                shift = linalg::add(&shift, v);
            }
        }
        terms.push(Term {
            sign: if size % 2 == 1 { 1 } else { -1 },
            dilation: top - size,
            shift,
        });
    }

    let zero = alloc::vec![Rational::zero(); n];
    let half = Rational::new(1.into(), 2.into());
    let mut steps = alloc::vec![0i64; n];
    let mut checked = 0;
    if sample_box.grid_len() == 0 {
        return Ok(IndicatorReport { points_checked: 0, terms: terms.len() });
    }
    loop {
        let x: Row = (0..n)
            .map(|i| Rational::from_integer(sample_box.lo[i].into()) + &half * Rational::from_integer(steps[i].into()))
            .collect();
        let lhs = i64::from(member(h, top, &zero, &x));
        let rhs: i64 = terms
            .iter()
            .filter(|t| member(h, t.dilation, &t.shift, &x))
            .map(|t| t.sign)
            .sum();
        if lhs != rhs {
            return Err(Error::IndicatorMismatch { point: x, lhs, rhs });
        }
        checked += 1;

        // odometer over the grid
        let mut i = 0;
        loop {
            if i == n {
                return Ok(IndicatorReport {
                    points_checked: checked,
                    terms: terms.len(),
                });
            }
            steps[i] += 1;
            if steps[i] <= 2 * (sample_box.hi[i] - sample_box.lo[i]) {
                break;
            }
            steps[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use alloc::vec;

    #[test]
    fn simplex_and_square() {
        let simplex = Polytope::from_integer_points(2, &[[1, 0], [0, 1]]).unwrap();
        for k in 0..3 {
            let rep = indicator_recursion_check(&simplex, k, &SampleBox::cube(2, -1, 4)).unwrap();
            assert_eq!(rep.points_checked, 11 * 11);
            assert_eq!(rep.terms, 3);
        }
        let square = Polytope::from_integer_points(2, &[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
        let rep = indicator_recursion_check(&square, 1, &SampleBox::cube(2, -1, 4)).unwrap();
        assert_eq!(rep.terms, 15);
    }

    #[test]
    fn rational_vertex_and_point() {
        let half = Rational::new(1.into(), 2.into());
        let tri = Polytope::from_points(2, vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)], vec![half.clone(), half]])
            .unwrap();
        indicator_recursion_check(&tri, 2, &SampleBox::cube(2, -1, 5)).unwrap();

        let pt = Polytope::from_integer_points(1, &[[3]]).unwrap();
        indicator_recursion_check(&pt, 4, &SampleBox::cube(1, 0, 20)).unwrap();
    }

    #[test]
    fn membership_of_zero_dilation_is_the_shift() {
        let seg = Polytope::from_integer_points(1, &[[0], [1]]).unwrap();
        let h = seg.hrep();
        assert!(member(h, 0, &[rat(2)], &[rat(2)]));
        assert!(!member(h, 0, &[rat(2)], &[Rational::new(5.into(), 2.into())]));
        assert!(member(h, 3, &[rat(1)], &[rat(4)]));
        assert!(!member(h, 3, &[rat(1)], &[rat(5)]));
    }
}
