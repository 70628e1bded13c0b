//! Truncated multivariate power series over an exact field.

mod compose;
mod quartic;
mod roots;
mod tseries;

pub use compose::{compose, ts_substitute_curve};
pub use quartic::{branch_split, factor_quartic_vertical, BranchPair, QuadraticFactor, QuarticSplit, Which};
pub use tseries::TSeries;
