use thiserror::Error;

use crate::exactlin::LinalgError;
use crate::quiverrep::DynkinClass;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid vertex {0}")]
    InvalidVertex(usize),
    #[error("oriented cycle through vertex {0}")]
    OrientedCycle(usize),
    #[error("underlying graph is not Dynkin: {0}")]
    NotDynkin(String),
    #[error("type A only: quiver has type {0}")]
    NotTypeA(DynkinClass),
    #[error("objects live over different quivers or fields")]
    QuiverMismatch,
    #[error("inconsistent representation data: {0}")]
    InvalidRep(String),
    #[error("representation is decomposable")]
    Decomposable,
    #[error("not a chain complex: {0}")]
    InvalidComplex(String),
    #[error("not a chain map: {0}")]
    InvalidChainMap(String),
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("invalid self-equivalence: {0}")]
    InvalidEquivalence(String),
    #[error("orbit hom support is not finite: nonzero term at n = {0}")]
    NonFiniteSupport(i64),
    #[error("dg orbit colimit did not stabilize within {0} stages")]
    NoStabilization(usize),
    #[error("no bijection between diagonals and orbit indecomposables")]
    NoBijection,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("braid generator does not induce a map on the quotient lattice: {0}")]
    NotInduced(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
