//! Unitarizable highest-weight modules of the hermitian simple Lie algebras.
//!
//! The crate classifies highest weights of `su(p,q)`, `sp(n,R)`, `so*(2n)`,
//! `so(2n-1,2)`, `so(2n-2,2)`, `e6(-14)` and `e7(-25)` with two independent
//! methods:
//!
//! * [`jakobsen`] walks the diagram of noncompact positive roots and finds the
//!   last place of unitarity on the line `Λ₀ + λε`;
//! * [`ehw`] computes the reduction points `A ≤ B` and the spacing `C` of the
//!   unitarity set on the line `Π₀ + zε`.
//!
//! The [`verma`] module is an exact Verma-module engine for the classical
//! series. It evaluates the contravariant form on bounded-degree weight spaces
//! and searches for extremal (singular) vectors, which lets the two
//! classifications be checked against actual Gram matrices.
//!
//! All arithmetic is exact over the rationals.

// matrix and table code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod ehw;
pub mod jakobsen;
pub mod linalg;
pub mod rational;
pub mod rootsys;
pub mod verma;

pub use rational::{parse_rational, parse_rational_list, Rational};
pub use rootsys::{AlgebraSpec, RootSystem, RootVector, WeightDecomposition};

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// Algebra parameters outside the supported range.
    #[error("invalid algebra: {0}")]
    InvalidSpec(String),
    /// A weight or vector that does not satisfy a precondition.
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    /// An operation was called outside its contract.
    #[error("{0}")]
    Misuse(String),
    /// A computation exceeded the configured size guard.
    #[error("size limit exceeded: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
