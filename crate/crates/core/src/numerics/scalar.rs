//! Scalar backends: exact Gaussian rationals and binary64 complex numbers.
//!
//! All geometry is generic over [`Scalar`]. Mixing backends is a type error,
//! so no value is ever silently coerced from one backend to the other.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Relative threshold below which a float quantity counts as zero in
/// degeneracy tests (incidence, collinearity, coincidence).
pub const DEGENERACY_TOL: f64 = 1e-10;

/// Relative distance under which two float generators of a formal sum are
/// treated as the same element.
pub const MERGE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

/// A complex number in one of the two backends.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn conj(&self) -> Self;
    fn to_complex(&self) -> Complex64;

    /// Exact zero test for the exact backend; `|self| <= DEGENERACY_TOL * scale`
    /// for floats.
    fn is_negligible(&self, scale: f64) -> bool;

    /// Equality used when merging generators: exact equality, or relative
    /// distance at most [`MERGE_TOL`].
    fn approx_eq(&self, other: &Self) -> bool;

    /// Equality up to a relative tolerance; the tolerance is ignored by the
    /// exact backend.
    fn close_to(&self, other: &Self, rel: f64) -> bool;

    /// A deterministic total order used to pick canonical representatives.
    fn canonical_cmp(&self, other: &Self) -> Ordering;

    fn as_exact(&self) -> Option<&GaussRat>;

    fn modulus(&self) -> f64 {
        self.to_complex().norm()
    }

    fn is_zero(&self) -> bool {
        self.is_negligible(1.0)
    }

    fn is_one(&self) -> bool {
        (self.clone() - Self::one()).is_zero()
    }

    /// True when the value lies in C \ {0, 1}.
    fn is_generator(&self) -> bool {
        !self.is_zero() && !self.is_one()
    }

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

/// An exact element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRat::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    /// `re_num/re_den + (im_num/im_den) i`; panics on a zero denominator.
    pub fn from_fracs(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussRat::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    pub fn i() -> Self {
        GaussRat::from_ints(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn checked_div(&self, rhs: &GaussRat) -> Option<GaussRat> {
        let n = rhs.norm_sqr();
        if n.is_zero() {
            return None;
        }
        let re = (&self.re * &rhs.re + &self.im * &rhs.im) / &n;
        let im = (&self.im * &rhs.re - &self.re * &rhs.im) / &n;
        Some(GaussRat { re, im })
    }

    fn sort_key(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (
            self.re.numer(),
            self.re.denom(),
            self.im.numer(),
            self.im.denom(),
        )
    }
}

fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // ratio of huge integers: scale both down before converting
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

fn fmt_rat(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Canonical encoding: `a/b` for reals, `a/b+c/d*i` or `a/b-c/d*i` otherwise.
impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rat(&self.re));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*i", fmt_rat(&self.re), sign, fmt_rat(&self.im.abs()))
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussRat({self})")
    }
}

fn parse_rat(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for GaussRat {
    type Err = Error;

    /// Accepts the canonical encoding plus the looser forms `a`, `a/b`,
    /// `c/d*i` and `a+c*i`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix("*i") else {
            return Ok(GaussRat::new(parse_rat(&t)?, BigRational::zero()));
        };
        // split at the last sign that is not leading
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => {
                let re = parse_rat(&body[..i])?;
                let im_str = body[i..].trim_start_matches('+');
                Ok(GaussRat::new(re, parse_rat(im_str)?))
            }
            None => Ok(GaussRat::new(BigRational::zero(), parse_rat(body)?)),
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: GaussRat) -> GaussRat {
        self.checked_div(&rhs)
            .expect("division of a Gaussian rational by zero")
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Scalar for GaussRat {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        GaussRat::from_ints(0, 0)
    }

    fn one() -> Self {
        GaussRat::from_ints(1, 0)
    }

    fn from_i64(n: i64) -> Self {
        GaussRat::from_ints(n, 0)
    }

    fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    fn is_negligible(&self, _scale: f64) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn close_to(&self, other: &Self, _rel: f64) -> bool {
        self == other
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }

    fn as_exact(&self) -> Option<&GaussRat> {
        Some(self)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl Scalar for Complex64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn is_negligible(&self, scale: f64) -> bool {
        self.norm() <= DEGENERACY_TOL * scale
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self.close_to(other, MERGE_TOL)
    }

    fn close_to(&self, other: &Self, rel: f64) -> bool {
        let scale = self.norm().max(other.norm()).max(1.0);
        (self - other).norm() <= rel * scale
    }

    /// Lexicographic on (|z|, arg z, re z).
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .total_cmp(&other.norm())
            .then(self.arg().total_cmp(&other.arg()))
            .then(self.re.total_cmp(&other.re))
    }

    fn as_exact(&self) -> Option<&GaussRat> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_field_operations_are_closed() {
        let a = GaussRat::from_fracs(1, 2, -3, 4);
        let b = GaussRat::from_fracs(5, 3, 2, 7);
        let q = a.clone() / b.clone();
        assert_eq!(q * b.clone(), a);
        assert_eq!((a.clone() - b.clone()) + b, a);
    }

    #[test]
    fn canonical_encoding_round_trips() {
        for s in ["3/1", "-1/2", "1/2+3/4*i", "0/1-5/1*i", "7/3-1/6*i"] {
            let z: GaussRat = s.parse().unwrap();
            assert_eq!(z.to_string(), s);
        }
        let z: GaussRat = "2/4".parse().unwrap();
        assert_eq!(z.to_string(), "1/2");
        let z: GaussRat = "3*i".parse().unwrap();
        assert_eq!(z, GaussRat::from_ints(0, 3));
        let z: GaussRat = "-1-2/3*i".parse().unwrap();
        assert_eq!(z, GaussRat::from_fracs(-1, 1, -2, 3));
        assert!("1/0".parse::<GaussRat>().is_err());
        assert!("abc".parse::<GaussRat>().is_err());
    }

    #[test]
    fn float_tolerances() {
        let z = Complex64::new(1.0, 1e-14);
        assert!(Scalar::is_one(&z));
        assert!(!Scalar::is_one(&Complex64::new(1.0, 1e-6)));
        assert!(Complex64::new(3.0, 4.0).approx_eq(&Complex64::new(3.0, 4.0 + 1e-13)));
    }
}
