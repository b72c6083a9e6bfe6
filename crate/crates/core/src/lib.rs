//! Exact integer point transforms of rational polytopes.
//!
//! The crate computes the Laurent polynomial `σ_P(x) = Σ_{m ∈ P ∩ ℤⁿ} x^m`
//! of a polytope, certifies the linear recursion satisfied by the sequence
//! `σ_{kP+Q}` (with per-vertex minimality residuals), checks Brion's
//! identity by clearing denominators, and carries the Gelfand-Tsetlin /
//! Schur polynomial machinery used to test the minimal-polynomial
//! conjecture for skew Schur recursions.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and
//! coordinates are arbitrary-precision rationals. The crate is `no_std` and
//! only needs `alloc`.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod algebra;
pub mod brion;
mod error;
pub(crate) mod linalg;
pub mod lp;
pub mod polytope;
pub mod schurgt;
pub mod transform;

pub use algebra::{elementary_symmetric, ExponentVec, LaurentPoly, Rational};
pub use error::{Error, Result};
pub use polytope::{HRep, Halfspace, Hyperplane, Polytope, VRep};

