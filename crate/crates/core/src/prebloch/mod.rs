//! Formal sums in the pre-Bloch group, the Bloch–Wigner dilogarithm, and the
//! exact `delta` map.

mod delta;
mod dilog;
mod formal;

pub use delta::{delta_exact, WedgeElement};
pub use dilog::{bloch_wigner, dilog_d, regular_tetrahedron_volume};
pub use formal::{canonicalize_six, five_term, product_identity, six_orbit, FormalSum};
