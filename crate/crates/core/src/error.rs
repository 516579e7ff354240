use thiserror::Error;

use crate::tableaux::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty border path")]
    EmptyPath,
    #[error("illegal character at position {0} (expected 'S' or 'W')")]
    IllegalCharacter(usize),
    #[error("filling does not cover the shape: {0}")]
    ShapeFillingMismatch(String),
    #[error("invalid {family} tableau: {reason}")]
    InvalidTableau { family: Family, reason: String },
    #[error("not a tree-like shape: {0}")]
    NotATreeLikeShape(String),
    #[error("tableau is not symmetric")]
    NotSymmetric,
    #[error("size {n} exceeds the brute-force budget for the {family} family (max {max})")]
    BudgetExceeded { n: usize, family: Family, max: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("position {k} out of range 1..={max} for {family} at n = {n}")]
    IndexOutOfRange { k: usize, n: usize, family: Family, max: usize },
    #[error("bijection failure: {0}")]
    Bijection(String),
    #[error("parse error: {0}")]
    Parse(String),
}
