//! Exact partition functions of abelian U(1) Chern-Simons and BF topological
//! field theories on closed oriented 3-manifolds.
//!
//! The pipeline: a surgery linking matrix (or chain complex) presents the
//! manifold; Smith normal form yields H1 as free rank + invariant factors;
//! the torsion linking form is transported onto the SNF generators; the
//! partition functions are finite exponential sums over the torsion
//! subgroup, evaluated exactly in a cyclotomic group ring.

pub mod cli;
pub mod cyclotomic;
mod error;
pub mod homology;
pub mod intlinalg;
pub mod linking;
pub mod manifolds;
pub mod tqft;

pub use error::{Error, Result};
