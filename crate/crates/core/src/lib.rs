//! Exact synthesis and certification of n-player 2-action games whose unique
//! Nash equilibrium has algebraic coordinates of derangement degree.
//!
//! The crate is organized in layers: an exact arithmetic kernel (rationals,
//! univariate polynomials, Sturm isolation, finite-field factorization
//! types), the game model (multi-affine advantage coefficients and integer
//! payoff tensors), an exact solver (parametrized solution sets, certified
//! real-zero isolation, support-pattern enumeration), a certifier
//! (counting identities, density, irreducibility, symmetric Galois group
//! evidence), and the synthesis/verification pipeline behind the CLI.

pub mod rat;
pub mod interval;
pub mod unipoly;
pub mod sturm;
pub mod primefield;
pub mod primepoly;
pub mod game;
pub mod modsys;
pub mod mpoly;
pub mod rur;
pub mod realsolve;
pub mod solver;
pub mod certifier;
pub mod jsonio;
pub mod pipeline;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArg(String),
    #[error("degenerate system: {0}")]
    Degenerate(String),
    #[error("undefined resultant")]
    UndefinedResultant,
    #[error("non-squarefree input")]
    NonSquarefree,
    #[error("interval does not bracket a root")]
    NoBracket,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
