//! Edge and face coordinates of a flag tetrahedron, reconstruction from
//! four minimal coordinates, and the per-tetrahedron invariant.

use flagdual::numerics::GaussRat;
use flagdual::tetra::{complete_from_minimal, edge_coords, reconstruct, MinimalCoords, EDGES, FACES};

fn main() -> flagdual::error::Result<()> {
    let m = MinimalCoords::new(
        GaussRat::from_ints(2, 1),
        GaussRat::from_fracs(1, 2, -1, 1),
        GaussRat::from_ints(-1, 3),
        GaussRat::from_fracs(3, 4, 1, 2),
    )?;
    let c = complete_from_minimal(&m)?;
    for (i, j) in EDGES {
        println!("z{i}{j} = {}", c.z(i, j));
    }
    for (f, z) in FACES.iter().zip(c.faces()) {
        println!("z{}{}{} = {z}", f[0], f[1], f[2]);
    }
    println!("vertex product at 1: {}", c.vertex_product(1));

    let flags = reconstruct(&m)?;
    println!("remeasured from reconstructed flags: {}", edge_coords(&flags)? == c);
    println!("beta = {}", c.beta());
    println!("volume = {}", c.volume());
    Ok(())
}
