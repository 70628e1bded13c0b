//! Certificate checks. Each returns a [`CheckResult`] with exact witnesses.

mod curves;
mod elim;
mod mutation;
mod pencil;
mod percolation;
mod planes;
mod result;
mod reverse;
mod suite;
mod vertex;

pub use curves::*;
pub use elim::*;
pub use mutation::*;
pub use pencil::*;
pub use percolation::*;
pub use planes::*;
pub use result::{timed, CheckResult, Status, Witness};
pub use reverse::*;
pub use suite::*;
pub use vertex::*;
