use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Index, Neg, Sub};

/// Exponent vector `m` of a Laurent monomial `x^m`.
///
/// Ordered graded-lexicographically: first by total degree, then so that
/// earlier variables come first among monomials of equal degree
/// (`x1 < x2 < x1^2 < x1*x2 < x2^2`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentVec(Vec<i64>);

impl ExponentVec {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn zero(n: usize) -> Self {
        Self(alloc::vec![0; n])
    }

    /// Unit vector `e_i` in dimension `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = alloc::vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|e| e * k).collect())
    }

    pub fn iter(&self) -> core::slice::Iter<'_, i64> {
        self.0.iter()
    }
}

impl From<Vec<i64>> for ExponentVec {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[i64; N]> for ExponentVec {
    fn from(v: [i64; N]) -> Self {
        Self(v.to_vec())
    }
}

impl Index<usize> for ExponentVec {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Ord for ExponentVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &ExponentVec {
    type Output = ExponentVec;
    fn add(self, rhs: &ExponentVec) -> ExponentVec {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVec {
    type Output = ExponentVec;
    fn sub(self, rhs: &ExponentVec) -> ExponentVec {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVec {
    type Output = ExponentVec;
    fn neg(self) -> ExponentVec {
        ExponentVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for ExponentVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders as `(a1,a2,...)`.
impl fmt::Display for ExponentVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}
