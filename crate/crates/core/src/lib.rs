//! Exact algebraic certificates for two constructions of hyperbolic surfaces
//! in P³: small deformations of fifteen general planes, and of a singular
//! octic with four double curves.
//!
//! Everything is exact: rational (or Gaussian rational) coefficients,
//! sparse polynomials, and truncated power series.

pub mod arith;
pub mod checks;
pub mod error;
pub mod models;
pub mod poly;
pub mod report;
pub mod series;
