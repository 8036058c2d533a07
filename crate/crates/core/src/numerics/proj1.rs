use crate::error::{Error, Result};
use crate::numerics::Scalar;

/// A point `[a : b]` of the projective line.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint1<S> {
    pub a: S,
    pub b: S,
}

impl<S: Scalar> ProjPoint1<S> {
    pub fn new(a: S, b: S) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateInput(
                "projective point with both coordinates zero".into(),
            ));
        }
        Ok(ProjPoint1 { a, b })
    }

    /// The affine point `x`, i.e. `[x : 1]`.
    pub fn affine(x: S) -> Self {
        ProjPoint1 { a: x, b: S::one() }
    }

    pub fn infinity() -> Self {
        ProjPoint1 {
            a: S::one(),
            b: S::zero(),
        }
    }

    fn scale(&self) -> f64 {
        self.a.modulus().max(self.b.modulus())
    }

    /// `a1 b2 - a2 b1`.
    pub fn bracket(&self, other: &Self) -> S {
        self.a.clone() * other.b.clone() - other.a.clone() * self.b.clone()
    }

    /// Projective equality by cross-multiplication.
    pub fn same_point(&self, other: &Self) -> bool {
        self.bracket(other)
            .is_negligible(self.scale() * other.scale())
    }

    /// Apply the Möbius map `[a : b] -> [p a + q b : r a + s b]`.
    pub fn mobius(&self, m: &[[S; 2]; 2]) -> Self {
        ProjPoint1 {
            a: m[0][0].clone() * self.a.clone() + m[0][1].clone() * self.b.clone(),
            b: m[1][0].clone() * self.a.clone() + m[1][1].clone() * self.b.clone(),
        }
    }
}

/// Cross-ratio `X(x1, x2, x3, x4)`: the image of `x4` under the projective
/// map sending `x1, x2, x3` to `infinity, 0, 1`.
///
/// Evaluated in homogeneous form
/// `([13][24]) / ([14][23])` with `[ij] = a_i b_j - a_j b_i`, so points at
/// infinity need no special handling.
pub fn cross_ratio<S: Scalar>(
    x1: &ProjPoint1<S>,
    x2: &ProjPoint1<S>,
    x3: &ProjPoint1<S>,
    x4: &ProjPoint1<S>,
) -> Result<S> {
    let pts = [x1, x2, x3, x4];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i].same_point(pts[j]) {
                return Err(Error::DegenerateInput(format!(
                    "cross-ratio points {} and {} coincide",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let num = x1.bracket(x3) * x2.bracket(x4);
    let den = x1.bracket(x4) * x2.bracket(x3);
    Ok(num / den)
}
