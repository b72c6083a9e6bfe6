//! Sparse multivariate Laurent polynomials with big-integer coefficients.

mod exponent;
mod laurent;
mod text;

pub use exponent::ExponentVec;
pub use laurent::{elementary_symmetric, LaurentPoly};
pub(crate) use laurent::elementary_symmetric_all;

/// Exact rational number used for polytope coordinates.
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    use num_bigint::BigInt;
    use num_traits::Zero;

    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Converts an integer into a rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}
