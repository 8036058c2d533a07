//! The Bloch–Wigner dilogarithm.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::numerics::Scalar;

const SERIES_TERMS: usize = 40;

/// `B_n / (n + 1)!` for `n < SERIES_TERMS`, with `B_1 = -1/2`.
fn series_coefficients() -> &'static [f64; SERIES_TERMS] {
    static COEFFS: OnceLock<[f64; SERIES_TERMS]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut bern: Vec<BigRational> = Vec::with_capacity(SERIES_TERMS);
        bern.push(BigRational::one());
        for m in 1..SERIES_TERMS {
            // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one();
            for (k, b) in bern.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * b;
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            bern.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        let mut fact = BigInt::one();
        std::array::from_fn(|n| {
            fact *= BigInt::from(n + 1);
            (bern[n].clone() / BigRational::from_integer(fact.clone()))
                .to_f64()
                .unwrap_or(0.0)
        })
    })
}

/// Li2(w) for `|w| <= 1`, `Re w <= 1/2`, via the Bernoulli series in
/// `u = -log(1 - w)`.
fn li2_reduced(w: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - w).ln();
    let mut pow = u;
    let mut sum = Complex64::new(0.0, 0.0);
    for (n, c) in series_coefficients().iter().enumerate() {
        // odd Bernoulli numbers past B_1 vanish
        if n > 1 && n % 2 == 1 {
            pow *= u;
            continue;
        }
        sum += pow * *c;
        pow *= u;
    }
    sum
}

/// The six-orbit element with `|w| <= 1` and `Re w <= 1/2`, and the sign
/// relating `D(z)` to `D(w)`.
fn reduce(z: Complex64) -> (Complex64, f64) {
    let one = Complex64::new(1.0, 0.0);
    let candidates = [
        (z, 1.0),
        (one / z, -1.0),
        (one - z, -1.0),
        (one / (one - z), 1.0),
        (one - one / z, 1.0),
        (z / (z - one), -1.0),
    ];
    candidates
        .into_iter()
        .find(|(w, _)| w.norm() <= 1.0 && w.re <= 0.5)
        .unwrap_or_else(|| {
            // rounding at the region boundaries: take the smallest modulus
            candidates
                .into_iter()
                .filter(|(w, _)| w.re <= 0.5 + 1e-12)
                .min_by(|a, b| a.0.norm().total_cmp(&b.0.norm()))
                .unwrap_or((z, 1.0))
        })
}

/// The Bloch–Wigner dilogarithm `D(z) = Im Li2(z) + arg(1 - z) log|z|`.
///
/// Continuous on the Riemann sphere, with `D(0) = D(1) = D(inf) = 0`.
pub fn bloch_wigner(z: Complex64) -> f64 {
    if !z.re.is_finite() || !z.im.is_finite() || z.im == 0.0 {
        return 0.0;
    }
    let (w, sign) = reduce(z);
    if w.norm() == 0.0 {
        return 0.0;
    }
    let one = Complex64::new(1.0, 0.0);
    let d = li2_reduced(w).im + (one - w).arg() * w.norm().ln();
    sign * d
}

/// `D` of a scalar in either backend.
pub fn dilog_d<S: Scalar>(z: &S) -> f64 {
    bloch_wigner(z.to_complex())
}

/// `D(e^{i pi / 3})`, the volume of the regular ideal tetrahedron.
pub fn regular_tetrahedron_volume() -> f64 {
    bloch_wigner(Complex64::from_polar(1.0, PI / 3.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn quadrature_d(z: Complex64) -> f64 {
        // Li2(z) = -int_0^1 log(1 - s z) / s ds
        let f = |s: f64| {
            if s == 0.0 {
                return z.im;
            }
            -(Complex64::new(1.0, 0.0) - z * s).ln().im / s
        };
        let li2_im = quadrature::double_exponential::integrate(f, 0.0, 1.0, 1e-14).integral;
        li2_im + (Complex64::new(1.0, 0.0) - z).arg() * z.norm().ln()
    }

    #[test]
    fn known_values() {
        assert!((regular_tetrahedron_volume() - 1.014_941_606_409_653_6).abs() < 1e-14);
        assert!((bloch_wigner(Complex64::new(2.0, 1.0)) - 0.511_666_398_553_823_5).abs() < 1e-13);
        assert!((bloch_wigner(Complex64::new(0.3, -0.7)) + 0.981_810_571_427_325_5).abs() < 1e-13);
        assert!((bloch_wigner(Complex64::new(-3.0, 0.5)) - 0.092_183_078_401_582_34).abs() < 1e-13);
    }

    #[test]
    fn vanishes_at_special_points() {
        for z in [0.0, 1.0, -2.5, 7.0] {
            assert_eq!(bloch_wigner(Complex64::new(z, 0.0)), 0.0);
        }
        assert_eq!(bloch_wigner(Complex64::new(f64::INFINITY, 0.0)), 0.0);
        assert!(bloch_wigner(Complex64::new(1.0, 1e-14)).abs() < 1e-12);
        assert!(bloch_wigner(Complex64::new(1e-14, 1e-14)).abs() < 1e-12);
    }

    #[test]
    fn series_matches_quadrature() {
        for z in [
            Complex64::new(0.2, 0.3),
            Complex64::new(-0.4, 0.8),
            Complex64::new(0.5, -0.6),
            Complex64::from_polar(1.0, PI / 3.0),
        ] {
            assert!((bloch_wigner(z) - quadrature_d(z)).abs() < 1e-11, "{z}");
        }
    }

    proptest! {
        #[test]
        fn symmetries(re in -5.0f64..5.0, im in -5.0f64..5.0) {
            prop_assume!(im.abs() > 1e-3);
            let z = Complex64::new(re, im);
            let d = bloch_wigner(z);
            let one = Complex64::new(1.0, 0.0);
            prop_assert!((bloch_wigner(z.conj()) + d).abs() < 1e-12);
            prop_assert!((bloch_wigner(one / z) + d).abs() < 1e-12);
            prop_assert!((bloch_wigner(one - z) + d).abs() < 1e-12);
            prop_assert!((bloch_wigner(one / (one - z)) - d).abs() < 1e-12);
        }
    }
}
