//! The duality involution on a tetrahedron: closed form, matrix route,
//! w-coordinates, and the face defect of the invariant.

use flagdual::duality::{beta_defect, dual_coords_closed, dual_coords_matrix, to_w};
use flagdual::numerics::GaussRat;
use flagdual::tetra::{complete_from_minimal, reconstruct, MinimalCoords};

fn main() -> flagdual::error::Result<()> {
    let m = MinimalCoords::new(
        GaussRat::from_ints(2, 1),
        GaussRat::from_fracs(1, 2, -1, 1),
        GaussRat::from_ints(-1, 3),
        GaussRat::from_fracs(3, 4, 1, 2),
    )?;
    let c = complete_from_minimal(&m)?;
    let closed = dual_coords_closed(&c)?;
    let matrix = dual_coords_matrix(&reconstruct(&m)?)?;
    println!("closed form agrees with dual flags: {}", closed == matrix);
    println!("z*12 = {}", closed.z(1, 2));
    println!("involution: {}", dual_coords_closed(&closed)? == c);

    let w = to_w(&c);
    println!("w swaps under duality: {}", to_w(&closed) == w.swap());

    let defect = beta_defect(&c)?;
    println!("beta(T) - beta(T*) = {defect}");
    let lhs = c.beta().eval_d() - closed.beta().eval_d();
    println!("D check: {lhs:.15} vs {:.15}", defect.eval_d());
    Ok(())
}
