//! Exact computation with arrangements of max-tropical hyperplanes whose
//! apices may have infinite coordinates.
//!
//! A `d x n` matrix over the rationals extended by `inf` induces a polyhedral
//! decomposition of the tropical torus into cells of constant covector type.
//! This crate enumerates that decomposition and its bounded subcomplex with
//! exact rational arithmetic, reads off the fine/coarse type and cotype
//! ideals, the toric edge ideal of the support graph and its weight-order
//! initial ideal, and computes the homological invariants attached to them:
//! graded Betti tables, Castelnuovo-Mumford regularity, projective and Krull
//! dimension, volumes of the dual Minkowski sums, and draconian sequences.
//!
//! Everything is pure and deterministic; no floating point is used anywhere.

pub mod covector;
pub mod error;
pub mod fixtures;
pub mod graphcore;
pub mod homalg;
pub mod ideals;
pub mod rat;
pub mod report;
pub mod subdiv;

pub mod checks;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Default cap on `|E(B_A)|` for cell enumeration.
pub const DEFAULT_ENUM_CAP: usize = 22;
/// Default cap on `|E(B)|` for the recession connectivity search.
pub const DEFAULT_LAMBDA_CAP: usize = 24;
/// Default cap on the variable universe of the Betti-number oracle.
pub const HOCHSTER_VAR_CAP: usize = 22;
