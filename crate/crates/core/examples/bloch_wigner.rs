//! The Bloch-Wigner dilogarithm and the relations of the pre-Bloch group.

use flagdual::prebloch::{bloch_wigner, five_term, regular_tetrahedron_volume, six_orbit};
use num_complex::Complex64;

fn main() -> flagdual::error::Result<()> {
    println!("D(e^(i pi/3)) = {:.17}", regular_tetrahedron_volume());
    let z = Complex64::new(0.3, -0.7);
    println!("D(0.3-0.7i) = {:.17}", bloch_wigner(z));
    for (w, sign) in six_orbit(&z) {
        println!("  {sign:+} D({w:.4}) = {:+.17}", f64::from(sign as i32) * bloch_wigner(w));
    }
    let r = five_term(&Complex64::new(0.2, 0.9), &Complex64::new(-1.3, 0.4))?;
    println!("five-term relation {r}");
    println!("  D value {:e}", r.eval_d());
    Ok(())
}
