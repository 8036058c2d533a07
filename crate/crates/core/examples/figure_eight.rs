//! The complete hyperbolic structure on the figure-eight knot complement:
//! consistency, volume, and invariance under duality.

use flagdual::complex::{census, check};

fn main() -> flagdual::error::Result<()> {
    let dc = census::figure_eight_geometric();
    let report = check(&dc);
    for r in report.iter() {
        println!("{}: residual {:.2e}", r.location, r.residual);
    }
    println!("volume {}", dc.volume());
    let dual = dc.dualize()?;
    println!("dual volume {}", dual.volume());
    println!("dual residual {:.2e}", check(&dual).max_residual());
    println!("conjugate volume {}", dc.conjugate().volume());
    println!("reduced defect is empty: {}", dc.canonical_defect()?.is_empty());
    Ok(())
}
