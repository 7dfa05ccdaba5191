use std::fmt;

use thiserror::Error;

/// Which of the two Hessenberg-function constraints failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// `i <= h(i) <= n`
    Bounds,
    /// `h(i) <= h(i+1)`
    Monotone,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Bounds => f.write_str("(a) i <= h(i) <= n"),
            Constraint::Monotone => f.write_str("(b) h(i) <= h(i+1)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty Hessenberg function")]
    EmptyHessenberg,

    /// `index` is 1-based, like the values of `h`.
    #[error("constraint {constraint} violated at i={index}")]
    ConstraintViolation {
        index: usize,
        constraint: Constraint,
    },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("filling is not permissible for h: {left} immediately left of {right} but {left} > h({right})")]
    NotPermissible { left: usize, right: usize },

    #[error("size {n} exceeds the configured limit {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },

    #[error("monomial {0} is not in the basis")]
    NotInBasis(String),

    #[error("size mismatch: expected {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("standard monomials are infinite: no leading term is a pure power of x{var}")]
    InfiniteStaircase { var: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
