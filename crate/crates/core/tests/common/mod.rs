//! Oracles and generators shared by the integration tests and the
//! acceptance harness. Nothing here calls the library's formulas for the
//! quantity being checked.

#![allow(dead_code)]

use std::array;

use flagdual::flags::{cr_flag, null_point, Flag};
use flagdual::numerics::GaussRat;
use flagdual::tetra::{complete_from_minimal, MinimalCoords, TetraCoords};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `D(z) = Im Li2(z) + arg(1 - z) log|z|`, with `Im Li2` from
/// `Li2(z) = -int_0^1 log(1 - s z) / s ds` by double-exponential
/// quadrature. Valid off the real axis, where `1 - s z` stays on one side
/// of the branch cut.
///
/// The integrand is steepest where `1 - s z` passes closest to 0, so the
/// interval is split there.
pub fn quadrature_d(z: Complex64) -> f64 {
    let f = |s: f64| {
        if s == 0.0 {
            return z.im;
        }
        -(Complex64::new(1.0, 0.0) - z * s).ln().im / s
    };
    let integrate = |a: f64, b: f64| quadrature::double_exponential::integrate(f, a, b, 1e-15).integral;
    let closest = (z.re / z.norm_sqr()).clamp(0.0, 1.0);
    let li2_im = if closest > 0.0 && closest < 1.0 {
        integrate(0.0, closest) + integrate(closest, 1.0)
    } else {
        integrate(0.0, 1.0)
    };
    li2_im + (Complex64::new(1.0, 0.0) - z).arg() * z.norm().ln()
}

fn det(a: &[Complex64; 3], b: &[Complex64; 3], c: &[Complex64; 3]) -> Complex64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn ev(f: &[Complex64; 3], x: &[Complex64; 3]) -> Complex64 {
    f[0] * x[0] + f[1] * x[1] + f[2] * x[2]
}

/// Even permutations of `(1, 2, 3, 4)` listed by brute force.
fn even_completion(i: usize, j: usize) -> (usize, usize) {
    let rest: Vec<usize> = (1..=4).filter(|&v| v != i && v != j).collect();
    let perm = [i, j, rest[0], rest[1]];
    let inversions = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
        .filter(|&(a, b)| perm[a] > perm[b])
        .count();
    if inversions % 2 == 0 {
        (rest[0], rest[1])
    } else {
        (rest[1], rest[0])
    }
}

/// Edge coordinate `z_ij` straight from the determinant formula.
pub fn oracle_edge(t: &[([Complex64; 3], [Complex64; 3]); 4], i: usize, j: usize) -> Complex64 {
    let (k, l) = even_completion(i, j);
    let (x, f) = (|v: usize| &t[v - 1].0, |v: usize| &t[v - 1].1);
    ev(f(i), x(k)) * det(x(i), x(j), x(l)) / (ev(f(i), x(l)) * det(x(i), x(j), x(k)))
}

/// The triple ratio `f_i(x_j) f_j(x_k) f_k(x_i) / (f_i(x_k) f_j(x_i) f_k(x_j))`.
pub fn oracle_triple(t: &[([Complex64; 3], [Complex64; 3]); 4], i: usize, j: usize, k: usize) -> Complex64 {
    let p = |a: usize, b: usize| ev(&t[a - 1].1, &t[b - 1].0);
    p(i, j) * p(j, k) * p(k, i) / (p(i, k) * p(j, i) * p(k, j))
}

pub fn to_raw(t: &[Flag<Complex64>; 4]) -> [([Complex64; 3], [Complex64; 3]); 4] {
    array::from_fn(|n| (t[n].point, t[n].line))
}

pub fn gauss(r: &mut StdRng) -> GaussRat {
    GaussRat::from_fracs(r.gen_range(-9..10), r.gen_range(1..6), r.gen_range(-9..10), r.gen_range(1..6))
}

pub fn cplx(r: &mut StdRng, radius: f64) -> Complex64 {
    Complex64::new(r.gen_range(-radius..radius), r.gen_range(-radius..radius))
}

/// A very generic exact tetrahedron from random minimal coordinates.
pub fn exact_tetra(r: &mut StdRng) -> TetraCoords<GaussRat> {
    loop {
        let v = [gauss(r), gauss(r), gauss(r), gauss(r)];
        if let Ok(m) = MinimalCoords::from_array(v) {
            if let Ok(c) = complete_from_minimal(&m) {
                if c.very_generic() {
                    return c;
                }
            }
        }
    }
}

pub fn float_tetra(r: &mut StdRng) -> TetraCoords<Complex64> {
    loop {
        let v = [cplx(r, 3.0), cplx(r, 3.0), cplx(r, 3.0), cplx(r, 3.0)];
        let far = v.iter().all(|z| z.norm() > 0.05 && (z - 1.0).norm() > 0.05);
        if let (true, Ok(m)) = (far, MinimalCoords::from_array(v)) {
            if let Ok(c) = complete_from_minimal(&m) {
                if c.faces().iter().all(|f| (f + 1.0).norm() > 0.05) {
                    return c;
                }
            }
        }
    }
}

/// A random non-real Gaussian rational away from 0 and 1.
pub fn exact_shape(r: &mut StdRng) -> GaussRat {
    loop {
        let z = gauss(r);
        if !z.is_real() {
            return z;
        }
    }
}

/// Four spherical CR flags at random exact null points.
pub fn exact_cr_tuple(r: &mut StdRng) -> [Flag<GaussRat>; 4] {
    array::from_fn(|_| loop {
        let a = gauss(r);
        let b = gauss(r);
        let t = GaussRat::from_fracs(0, 1, r.gen_range(-9..10), r.gen_range(1..6));
        if let Ok(x) = null_point(a, b, t) {
            break cr_flag(&x).expect("null point");
        }
    })
}

/// Four spherical CR flags at random floating-point null points.
pub fn float_cr_tuple(r: &mut StdRng) -> [Flag<Complex64>; 4] {
    array::from_fn(|_| loop {
        let a = cplx(r, 2.0);
        let t = Complex64::new(0.0, r.gen_range(-2.0..2.0));
        if a.norm() < 0.1 {
            continue;
        }
        let x = null_point(a, cplx(r, 2.0), t).expect("a != 0");
        break cr_flag(&x).expect("null point");
    })
}
