//! Cross-ratios on CP^1, exact and in floating point.

use flagdual::numerics::{cross_ratio, GaussRat, ProjPoint1};
use num_complex::Complex64;

fn main() -> flagdual::error::Result<()> {
    let q = |a, b| ProjPoint1::affine(GaussRat::from_ints(a, b));
    let x = cross_ratio(&ProjPoint1::infinity(), &q(0, 0), &q(1, 0), &q(2, 1))?;
    println!("X(inf, 0, 1, 2+i) = {x}");

    let y = cross_ratio(&q(1, 1), &q(-1, 2), &q(3, 0), &q(0, -1))?;
    println!("X(1+i, -1+2i, 3, -i) = {y}");

    let f = |a: f64, b: f64| ProjPoint1::affine(Complex64::new(a, b));
    let z = cross_ratio(&f(1.0, 1.0), &f(-1.0, 2.0), &f(3.0, 0.0), &f(0.0, -1.0))?;
    println!("same, in floating point = {z}");
    Ok(())
}
