//! The exact Whitehead link decoration: consistency in Gaussian rationals
//! and vanishing of the wedge map on its invariant.

use flagdual::complex::{census, check};
use flagdual::numerics::GaussRat;
use flagdual::prebloch::{delta_exact, FormalSum};

fn main() -> flagdual::error::Result<()> {
    let dc = census::whitehead_geometric();
    println!("exactly consistent: {}", check(&dc).passes(0.0));
    let beta = dc.beta();
    println!("beta = {beta}");
    println!("volume {}", dc.volume());
    println!("delta(beta) vanishes: {}", delta_exact(&beta)?.is_zero());

    let third = FormalSum::term(1, GaussRat::from_fracs(1, 3, 0, 1))?;
    let d = delta_exact(&third)?;
    println!("delta([1/3]) = {d}");
    Ok(())
}
