use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{ExponentVec, LaurentPoly, Rational};

fn coords(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty point set")]
    EmptyInput,

    #[error("dilation factor must be nonnegative, got {0}")]
    NegativeDilation(i64),

    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("polyhedron is infeasible")]
    Infeasible,

    #[error("vertex {} is not a lattice point", coords(.0))]
    NonLatticeVertex(Vec<Rational>),

    #[error("point {} is not a vertex of the polytope", coords(.0))]
    NotAVertex(Vec<Rational>),

    #[error("tangent cone at {} is not simplicial ({edges} edges, dimension {dim})", coords(.vertex))]
    NonSimplicialCone {
        vertex: Vec<Rational>,
        edges: usize,
        dim: usize,
    },

    #[error("cone is not pointed")]
    NotPointed,

    #[error("cone generators are linearly dependent")]
    DependentGenerators,

    #[error("recursion identity fails at k = {k}")]
    RecursionFailure { k: usize, difference: LaurentPoly },

    #[error("residual for vertex {vertex} vanishes at some but not all checked k")]
    InconsistentResidual { vertex: ExponentVec },

    #[error("indicator identity fails at {}: lhs {lhs}, rhs {rhs}", coords(.point))]
    IndicatorMismatch {
        point: Vec<Rational>,
        lhs: i64,
        rhs: i64,
    },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("Schur polynomial from Gelfand-Tsetlin points differs from the tableau sum")]
    SchurMismatch,

    #[error("vertex weight {} is not integral", coords(.0))]
    NonIntegralWeight(Vec<Rational>),

    #[error("coefficient too large for lattice enumeration")]
    Overflow,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
