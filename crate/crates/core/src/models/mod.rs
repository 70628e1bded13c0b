//! The geometric objects: the octic and its double curves, vertex frames and
//! germs, plane arrangements, quintics and pencils.

mod arrangement;
mod frame;
mod io;
mod octic;

pub use arrangement::*;
pub use frame::*;
pub use io::*;
pub use octic::*;
