//! Flags in CP^2: hyperbolic flags on the conic and spherical CR flags on
//! the null cone, with their duals.

use flagdual::complex::census;
use flagdual::flags::{cr_flag, hyperbolic_flag, is_very_generic, null_point};
use flagdual::numerics::{GaussRat, ProjPoint1};

fn main() -> flagdual::error::Result<()> {
    let q = |a, b| GaussRat::from_ints(a, b);
    let h = hyperbolic_flag(&ProjPoint1::affine(q(2, 1)));
    println!("hyperbolic flag at 2+i: point {:?}", h.point.each_ref().map(|z| z.to_string()));
    println!("  line {:?}", h.line.each_ref().map(|z| z.to_string()));
    println!("  incident: {}", h.pairing(&h) == q(0, 0));

    let x = null_point(q(1, 1), q(2, -1), q(0, 3))?;
    let c = cr_flag(&x)?;
    println!("CR flag at {:?}", x.each_ref().map(|z| z.to_string()));
    println!("  tangent line {:?}", c.line.each_ref().map(|z| z.to_string()));

    let cr = census::cr_example();
    let dual = cr.dualize()?;
    println!(
        "CR tetrahedron: dual coordinates are the conjugates: {}",
        dual.coords()[0] == cr.coords()[0].conj()
    );

    let tuple: Vec<_> = [q(0, 0), q(1, 0), q(2, 1), q(-1, 3)]
        .iter()
        .map(|z| hyperbolic_flag(&ProjPoint1::affine(z.clone())))
        .collect();
    println!("four hyperbolic flags very generic: {}", is_very_generic(&tuple));
    Ok(())
}
