//! Constructions and exhaustive verifiers for edge colorings of complete
//! graphs that avoid monochromatic copies of a small pattern while showing a
//! rainbow copy on every vertex subset, together with the OR-product and
//! clique machinery behind lower bounds on Shannon OR-capacity.

pub mod bitset;
pub mod colorings;
pub mod designs;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod shannon;
pub mod verify;

pub use error::{Error, Result};
