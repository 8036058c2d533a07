pub mod cli;
pub mod complex;
pub mod duality;
pub mod error;
pub mod flags;
pub mod format;
pub mod numerics;
pub mod prebloch;
pub mod tetra;
