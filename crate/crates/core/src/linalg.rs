//! Dense exact linear algebra over the rationals.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

pub(crate) type Row = Vec<Rational>;

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Row {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add(a: &[Rational], b: &[Rational]) -> Row {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn scale(a: &[Rational], k: &Rational) -> Row {
    a.iter().map(|x| x * k).collect()
}

pub(crate) fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub(crate) fn is_integral(a: &[Rational]) -> bool {
    a.iter().all(|x| x.is_integer())
}

pub(crate) fn to_i64(a: &[Rational]) -> Option<Vec<i64>> {
    a.iter()
        .map(|x| {
            if x.is_integer() {
                i64::try_from(x.to_integer()).ok()
            } else {
                None
            }
        })
        .collect()
}

pub(crate) fn from_i64(a: &[i64]) -> Row {
    a.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

/// Reduced row echelon form in place. Returns the pivot columns.
pub(crate) fn rref(rows: &mut Vec<Row>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank(rows: &[Row], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{y : rows · y = 0}`.
pub(crate) fn nullspace(rows: &[Row], ncols: usize) -> Vec<Row> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut y = alloc::vec![Rational::zero(); ncols];
        y[free] = Rational::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            y[pc] = -row[free].clone();
        }
        basis.push(y);
    }
    basis
}

/// Solves `a · x = b` where `a` is given by rows. Returns `None` when the
/// system is inconsistent or the solution is not unique.
pub(crate) fn solve_unique(a: &[Row], b: &[Rational], ncols: usize) -> Option<Row> {
    let mut aug: Vec<Row> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) || pivots.len() != ncols {
        return None;
    }
    Some(aug.iter().map(|r| r[ncols].clone()).collect())
}

pub(crate) fn determinant(m: &[Row]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let pivot = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x -= &f * p;
            }
        }
    }
    det
}

/// Scales a rational row by a positive factor so that its entries become
/// coprime integers. The zero row is returned unchanged.
pub(crate) fn primitive_integer(row: &[Rational]) -> (Vec<BigInt>, Rational) {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return (ints, Rational::one());
    }
    let ints = ints.into_iter().map(|x| x / &g).collect();
    (ints, Rational::new(lcm, g.abs()))
}

pub(crate) fn gcd_i64(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |acc, &x| acc.gcd(&x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use alloc::vec;

    fn row(v: &[i64]) -> Row {
        from_i64(v)
    }

    #[test]
    fn rank_and_nullspace() {
        let m = vec![row(&[1, 1, 0]), row(&[2, 2, 0])];
        assert_eq!(rank(&m, 3), 1);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for y in &ns {
            assert!(m.iter().all(|r| dot(r, y).is_zero()));
        }
    }

    #[test]
    fn solve_and_determinant() {
        let a = vec![row(&[2, 1]), row(&[1, 3])];
        let x = solve_unique(&a, &[rat(3), rat(5)], 2).unwrap();
        assert_eq!(x, vec![Rational::new(4.into(), 5.into()), Rational::new(7.into(), 5.into())]);
        assert_eq!(determinant(&a), rat(5));
        assert!(solve_unique(&[row(&[1, 1]), row(&[2, 2])], &[rat(1), rat(3)], 2).is_none());
    }

    #[test]
    fn primitive_scaling() {
        let (v, f) = primitive_integer(&[Rational::new(1.into(), 2.into()), rat(-1)]);
        assert_eq!(v, vec![BigInt::from(1), BigInt::from(-2)]);
        assert_eq!(f, rat(2));
    }
}
