use alloc::collections::btree_map::{self, BTreeMap, Entry};
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ExponentVec;
use crate::{Error, Result};

/// Sparse Laurent polynomial in `n` variables with integer coefficients.
///
/// Terms are kept in a map keyed by exponent vector; zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(ExponentVec::zero(nvars), c)
    }

    /// `c * x^exp`.
    pub fn monomial(exp: ExponentVec, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// Sums the given terms, merging repeated exponents.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVec, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex ascending order.
    pub fn terms(&self) -> btree_map::Iter<'_, ExponentVec, BigInt> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExponentVec) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients, i.e. the value at `x = (1,…,1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub(crate) fn add_term(&mut self, exp: ExponentVec, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies by the monomial `x^v`.
    pub fn monomial_shift(&self, v: &ExponentVec) -> Result<Self> {
        if v.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: v.len(),
            });
        }
        Ok(Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e + v, c.clone())).collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Applies `f` to every exponent, accumulating colliding images.
    pub fn map_exponents<F>(&self, target_nvars: usize, mut f: F) -> Self
    where
        F: FnMut(&ExponentVec) -> ExponentVec,
    {
        let mut out = Self::zero(target_nvars);
        for (e, c) in &self.terms {
            let image = f(e);
            debug_assert_eq!(image.len(), target_nvars);
            out.add_term(image, c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on dimension mismatch; use [`LaurentPoly::checked_add`] otherwise.
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("Laurent polynomial dimension mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("Laurent polynomial dimension mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("Laurent polynomial dimension mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// `e_j` evaluated at the monomials `x^m` for `m` in `monomials`.
///
/// All monomials must have `nvars` entries. `j` ranges over
/// `0..=monomials.len()`.
pub fn elementary_symmetric(nvars: usize, monomials: &[ExponentVec], j: usize) -> Result<LaurentPoly> {
    if j > monomials.len() {
        return Err(Error::OutOfRange {
            index: j,
            max: monomials.len(),
        });
    }
    Ok(elementary_symmetric_all(nvars, monomials)?.swap_remove(j))
}

/// `[e_0, e_1, …, e_r]` of the given monomials.
pub(crate) fn elementary_symmetric_all(nvars: usize, monomials: &[ExponentVec]) -> Result<Vec<LaurentPoly>> {
    let mut e = alloc::vec![LaurentPoly::one(nvars)];
    for m in monomials {
        if m.len() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: m.len(),
            });
        }
        e.push(LaurentPoly::zero(nvars));
        // e_j <- e_j + x^m e_{j-1}, descending so e_{j-1} is still the old value
        for j in (1..e.len()).rev() {
            let shifted = e[j - 1].monomial_shift(m)?;
            e[j] = &e[j] + &shifted;
        }
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(exp: &[i64]) -> LaurentPoly {
        LaurentPoly::monomial(ExponentVec::new(exp.to_vec()), 1)
    }

    #[test]
    fn add_cancels_and_drops_zero_terms() {
        let p = &x(&[0]) + &x(&[1]);
        let q = &p + &(-&x(&[1]));
        assert_eq!(q, LaurentPoly::one(1));
        assert_eq!(q.len(), 1);
        assert_eq!(&p + &LaurentPoly::zero(1), p);
        let doubled = &p + &p;
        assert_eq!(doubled.coeff(&ExponentVec::from([0])), BigInt::from(2));
        assert_eq!(doubled.coeff(&ExponentVec::from([1])), BigInt::from(2));
    }

    #[test]
    fn mul_follows_monomial_law() {
        assert_eq!(&x(&[1, 0]) * &x(&[0, 1]), x(&[1, 1]));
        let p = &x(&[0]) + &x(&[1]);
        let q = &x(&[0]) - &x(&[1]);
        assert_eq!(&p * &q, &x(&[0]) - &x(&[2]));
        assert_eq!(&x(&[-1]) * &x(&[1]), LaurentPoly::one(1));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let err = x(&[1]).checked_add(&x(&[1, 0])).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 1, found: 2 });
        assert!(x(&[1]).checked_mul(&x(&[0, 0])).is_err());
        assert!(x(&[1]).monomial_shift(&ExponentVec::from([1, 1])).is_err());
    }

    #[test]
    fn shift_examples() {
        let p = &x(&[0]) + &x(&[1]);
        assert_eq!(p.monomial_shift(&ExponentVec::from([1])).unwrap(), &x(&[1]) + &x(&[2]));
        assert_eq!(p.monomial_shift(&ExponentVec::from([0])).unwrap(), p);
        assert_eq!(
            x(&[1, 1]).monomial_shift(&ExponentVec::from([-1, -1])).unwrap(),
            LaurentPoly::one(2)
        );
    }

    #[test]
    fn elementary_symmetric_examples() {
        let ms = [ExponentVec::from([1]), ExponentVec::from([2])];
        assert_eq!(elementary_symmetric(1, &ms, 0).unwrap(), LaurentPoly::one(1));
        assert_eq!(elementary_symmetric(1, &ms, 2).unwrap(), x(&[3]));
        let ms = [ExponentVec::from([0, 0]), ExponentVec::from([1, 0]), ExponentVec::from([0, 1])];
        let e1 = elementary_symmetric(2, &ms, 1).unwrap();
        assert_eq!(e1, &(&x(&[0, 0]) + &x(&[1, 0])) + &x(&[0, 1]));
        assert_eq!(
            elementary_symmetric(2, &ms, 4).unwrap_err(),
            Error::OutOfRange { index: 4, max: 3 }
        );
    }
}
