//! Factorization over the Gaussian integers.
//!
//! Primes are normalized to the associate with `re > 0, im >= 0`; the unit
//! left over is recorded as a power of `i`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::{GaussRat, Scalar};

/// An element of Z[i].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn mul(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    pub fn pow(&self, e: u32) -> GaussInt {
        (0..e).fold(GaussInt::one(), |acc, _| acc.mul(self))
    }

    /// `i^k`.
    pub fn unit(k: u8) -> GaussInt {
        match k % 4 {
            0 => GaussInt::new(1, 0),
            1 => GaussInt::new(0, 1),
            2 => GaussInt::new(-1, 0),
            _ => GaussInt::new(0, -1),
        }
    }

    /// The exponent `k` with `self = i^k`, if `self` is a unit.
    pub fn unit_exponent(&self) -> Option<u8> {
        (0..4).find(|&k| GaussInt::unit(k) == *self)
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn div_exact(&self, d: &GaussInt) -> Option<GaussInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let p = self.mul(&d.conj());
        let (qr, rr) = p.re.div_rem(&n);
        let (qi, ri) = p.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then_some(GaussInt { re: qr, im: qi })
    }

    /// Nearest-integer division remainder, used by the Euclidean algorithm.
    fn rem_euclid(&self, d: &GaussInt) -> GaussInt {
        let n = d.norm();
        let p = self.mul(&d.conj());
        let round = |x: &BigInt| -> BigInt {
            // floor((2x + n) / 2n)
            let two_n: BigInt = &n * 2;
            let t: BigInt = x * 2 + &n;
            t.div_floor(&two_n)
        };
        let q = GaussInt {
            re: round(&p.re),
            im: round(&p.im),
        };
        let qd = q.mul(d);
        GaussInt {
            re: &self.re - qd.re,
            im: &self.im - qd.im,
        }
    }

    pub fn gcd(&self, other: &GaussInt) -> GaussInt {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem_euclid(&b);
            a = b;
            b = r;
        }
        a.normalized().0
    }

    /// The associate with `re > 0, im >= 0` and the `k` such that
    /// `self = i^k * associate`.
    pub fn normalized(&self) -> (GaussInt, u8) {
        if self.is_zero() {
            return (self.clone(), 0);
        }
        for k in 0..4u8 {
            // self * i^{-k}
            let cand = self.mul(&GaussInt::unit((4 - k) % 4));
            if cand.re.is_positive() && !cand.im.is_negative() {
                return (cand, k);
            }
        }
        unreachable!("some associate lies in the first quadrant")
    }

    pub fn to_gauss_rat(&self) -> GaussRat {
        GaussRat::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

/// Orders by norm, then real part, then imaginary part.
impl Ord for GaussInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| self.re.cmp(&other.re))
            .then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for GaussInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.sign()) {
            (_, Sign::NoSign) => write!(f, "{}", self.re),
            (true, _) => write!(f, "{}i", self.im),
            (false, Sign::Minus) => write!(f, "{}-{}i", self.re, -&self.im),
            (false, Sign::Plus) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

/// `i^unit * prod(p^e)` with pairwise non-associate normalized primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianFactorization {
    pub unit: u8,
    pub primes: Vec<(GaussInt, u32)>,
}

impl GaussianFactorization {
    pub fn recompose(&self) -> GaussInt {
        self.primes
            .iter()
            .fold(GaussInt::unit(self.unit), |acc, (p, e)| acc.mul(&p.pow(*e)))
    }

    pub fn is_unit(&self) -> bool {
        self.primes.is_empty()
    }
}

fn sqrt_minus_one_mod(p: &BigUint) -> BigUint {
    let one = BigUint::one();
    let pm1 = p - &one;
    let half = &pm1 >> 1;
    let quarter = &pm1 >> 2;
    let mut c = BigUint::from(2u8);
    loop {
        if c.modpow(&half, p) == pm1 {
            return c.modpow(&quarter, p);
        }
        c += &one;
    }
}

/// The normalized Gaussian prime(s) lying over the rational prime `p`.
fn primes_over(p: &BigUint) -> Vec<GaussInt> {
    let pi = BigInt::from(p.clone());
    if *p == BigUint::from(2u8) {
        return vec![GaussInt::new(1, 1)];
    }
    let four = BigUint::from(4u8);
    if p % &four == BigUint::from(3u8) {
        return vec![GaussInt::new(pi, 0)];
    }
    let x = BigInt::from(sqrt_minus_one_mod(p));
    let pi1 = GaussInt::new(pi.clone(), 0).gcd(&GaussInt::new(x, 1));
    let pi2 = pi1.conj().normalized().0;
    vec![pi1, pi2]
}

/// Factor a nonzero Gaussian integer.
pub fn factor_gaussian_int(z: &GaussInt) -> GaussianFactorization {
    assert!(!z.is_zero(), "cannot factor zero");
    let norm = z.norm().magnitude().clone();
    let mut rem = z.clone();
    let mut primes = Vec::new();
    if norm > BigUint::one() {
        for (p, _) in num_prime::nt_funcs::factorize(norm) {
            for pi in primes_over(&p) {
                let mut e = 0u32;
                while let Some(q) = rem.div_exact(&pi) {
                    rem = q;
                    e += 1;
                }
                if e > 0 {
                    primes.push((pi, e));
                }
            }
        }
    }
    primes.sort();
    let unit = rem
        .unit_exponent()
        .expect("cofactor after removing all primes is a unit");
    GaussianFactorization { unit, primes }
}

/// Split an exact scalar as `n / m` with `n` in Z[i] and `m` a positive
/// integer, then factor both and cancel common primes.
///
/// Returns the factorizations of the numerator and the denominator.
pub fn factor_gaussian<S: Scalar>(q: &S) -> Result<(GaussianFactorization, GaussianFactorization)> {
    let q = q
        .as_exact()
        .ok_or_else(|| Error::Unsupported("factorization needs exact scalars".into()))?;
    if q.is_zero() {
        return Err(Error::OutOfDomain("cannot factor zero".into()));
    }
    let m = q.re().denom().lcm(q.im().denom());
    let n = GaussInt::new(
        q.re().numer() * (&m / q.re().denom()),
        q.im().numer() * (&m / q.im().denom()),
    );
    let num = factor_gaussian_int(&n);
    let den = factor_gaussian_int(&GaussInt::new(m, 0));

    let mut exps: BTreeMap<GaussInt, i64> = BTreeMap::new();
    for (p, e) in &num.primes {
        *exps.entry(p.clone()).or_default() += i64::from(*e);
    }
    for (p, e) in &den.primes {
        *exps.entry(p.clone()).or_default() -= i64::from(*e);
    }
    let split = |positive: bool| -> Vec<(GaussInt, u32)> {
        exps.iter()
            .filter(|(_, e)| if positive { **e > 0 } else { **e < 0 })
            .map(|(p, e)| (p.clone(), e.unsigned_abs() as u32))
            .collect()
    };
    let unit = (4 + num.unit - den.unit) % 4;
    Ok((
        GaussianFactorization {
            unit,
            primes: split(true),
        },
        GaussianFactorization {
            unit: 0,
            primes: split(false),
        },
    ))
}

/// Prime valuations of a nonzero exact scalar, units discarded.
pub fn valuations<S: Scalar>(q: &S) -> Result<BTreeMap<GaussInt, i64>> {
    let (num, den) = factor_gaussian(q)?;
    let mut out = BTreeMap::new();
    for (p, e) in num.primes {
        out.insert(p, i64::from(e));
    }
    for (p, e) in den.primes {
        out.insert(p, -i64::from(e));
    }
    Ok(out)
}

/// `num / den` as a Gaussian rational.
pub fn recompose_ratio(num: &GaussianFactorization, den: &GaussianFactorization) -> GaussRat {
    num.recompose().to_gauss_rat() / den.recompose().to_gauss_rat()
}


#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn two_ramifies() {
        let (num, den) = factor_gaussian(&GaussRat::from_i64(2)).unwrap();
        assert!(den.is_unit());
        assert_eq!(num.primes, vec![(GaussInt::new(1, 1), 2)]);
        // 2 = -i (1+i)^2
        assert_eq!(num.unit, 3);
        assert_eq!(num.recompose(), GaussInt::new(2, 0));
    }

    #[test]
    fn i_is_a_unit() {
        let (num, den) = factor_gaussian(&GaussRat::i()).unwrap();
        assert!(num.is_unit() && den.is_unit());
        assert_eq!(num.unit, 1);
    }

    #[test]
    fn five_splits() {
        let (num, _) = factor_gaussian(&GaussRat::from_i64(5)).unwrap();
        let ps: Vec<_> = num.primes.iter().map(|(p, e)| (p.clone(), *e)).collect();
        assert_eq!(ps.len(), 2);
        assert!(ps.iter().all(|(p, e)| p.norm() == BigInt::from(5) && *e == 1));
        assert!(ps.contains(&(GaussInt::new(2, 1), 1)));
        assert!(ps.contains(&(GaussInt::new(1, 2), 1)));
        assert_eq!(num.recompose(), GaussInt::new(5, 0));
    }

    #[test]
    fn inert_prime_and_fraction() {
        let q = GaussRat::from_fracs(7, 9, -21, 4);
        let (num, den) = factor_gaussian(&q).unwrap();
        assert_eq!(recompose_ratio(&num, &den), q);
        assert!(den.primes.iter().any(|(p, _)| *p == GaussInt::new(3, 0)));
    }

    #[test]
    fn float_is_unsupported() {
        assert!(matches!(
            factor_gaussian(&Complex64::new(2.0, 0.0)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn gcd_and_normalization() {
        let a = GaussInt::new(2, 1).mul(&GaussInt::new(3, 0));
        let b = GaussInt::new(2, 1).mul(&GaussInt::new(1, 1));
        assert_eq!(a.gcd(&b), GaussInt::new(2, 1));
        let (n, k) = GaussInt::new(-1, 2).normalized();
        assert_eq!(n, GaussInt::new(2, 1));
        assert_eq!(GaussInt::unit(k).mul(&n), GaussInt::new(-1, 2));
    }
}
