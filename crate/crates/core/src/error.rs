use thiserror::Error;

use crate::weight::Weight;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Lie type: {0}")]
    InvalidType(String),
    #[error("node {node} out of range for rank {rank}")]
    InvalidNode { node: usize, rank: usize },
    #[error("case-2 vertex: no affine diagram automorphism of {lie_type} exchanges node 0 and node {node}")]
    CaseTwoVertex { lie_type: String, node: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("chamber mismatch: expected {expected}, found {found}")]
    ChamberMismatch { expected: String, found: String },
    #[error("capacity exceeded: group order {order} above bound {bound}")]
    Capacity { order: u128, bound: u128 },
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("level {level} is below the bound for {lie_type}: need k > {bound}")]
    BelowBound { lie_type: String, level: i64, bound: i64 },
    #[error("parity mismatch: {0}")]
    Parity(String),
    #[error("induction closure violated by weight {0}")]
    ClosureViolation(Weight),
    #[error("edge is not perpendicular to the affine wall at vertex {0}")]
    NotPerpendicular(usize),
    #[error("straightening failed to decrease its potential at {0}")]
    NonTermination(Weight),
    #[error("weight {0} lies outside the level {1} alcove")]
    OutsideAlcove(Weight, i64),
    #[error("oracle failure: {0}")]
    Oracle(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("kernel element does not vanish under vertex induction: {0}")]
    UnsoundKernel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
