//! Flags in CP^2: incident (point, line) pairs.
//!
//! Points are column vectors and lines are covectors, both stored as
//! homogeneous triples. The pairing `f(x) = u0 a0 + u1 a1 + u2 a2` is
//! well defined up to scale, so its vanishing is scale independent.

use std::array;

use crate::error::{Error, Result};
use crate::numerics::{conj3, cross, det3, dot, norm3, Mat3, ProjPoint1, Scalar, Vec3};

pub type ProjPoint2<S> = Vec3<S>;
pub type ProjLine2<S> = Vec3<S>;

/// An incident pair `(x, f)` with `f(x) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Flag<S> {
    pub point: ProjPoint2<S>,
    pub line: ProjLine2<S>,
}

fn is_zero_vec<S: Scalar>(v: &Vec3<S>) -> bool {
    v.iter().all(|x| x.is_zero())
}

impl<S: Scalar> Flag<S> {
    /// Checks that neither triple vanishes and that the point lies on the
    /// line.
    pub fn new(point: ProjPoint2<S>, line: ProjLine2<S>) -> Result<Self> {
        if is_zero_vec(&point) || is_zero_vec(&line) {
            return Err(Error::DegenerateInput("flag with a zero triple".into()));
        }
        let flag = Flag { point, line };
        if !flag.pairing(&flag).is_negligible(norm3(&flag.point) * norm3(&flag.line)) {
            return Err(Error::DegenerateInput(format!(
                "point is not on the line: f(x) = {}",
                flag.pairing(&flag)
            )));
        }
        Ok(flag)
    }

    /// `f(y)` for this flag's line `f` and the point `y` of `other`.
    pub fn pairing(&self, other: &Flag<S>) -> S {
        dot(&self.line, &other.point)
    }

    /// The dual flag: the covector read as a point and the point as a
    /// covector.
    pub fn dual(&self) -> Flag<S> {
        Flag {
            point: self.line.clone(),
            line: self.point.clone(),
        }
    }

    pub fn conj(&self) -> Flag<S> {
        Flag {
            point: conj3(&self.point),
            line: conj3(&self.line),
        }
    }

    /// The image under `g`: `x -> g x` and `f -> f g^{-1}`.
    pub fn transform(&self, g: &Mat3<S>, g_inv: &Mat3<S>) -> Flag<S> {
        Flag {
            point: g.apply(&self.point),
            line: g_inv.transpose().apply(&self.line),
        }
    }

    /// Apply `f` to every homogeneous coordinate, e.g. to change backend.
    pub fn map_scalars<T>(&self, f: impl Fn(&S) -> T) -> Flag<T> {
        Flag {
            point: array::from_fn(|i| f(&self.point[i])),
            line: array::from_fn(|i| f(&self.line[i])),
        }
    }

    /// Projective equality of both components.
    pub fn same_flag(&self, other: &Flag<S>) -> bool {
        proportional(&self.point, &other.point) && proportional(&self.line, &other.line)
    }
}

/// True when `a` and `b` span the same projective point.
pub fn proportional<S: Scalar>(a: &Vec3<S>, b: &Vec3<S>) -> bool {
    let c = cross(a, b);
    let scale = norm3(a) * norm3(b);
    c.iter().all(|x| x.is_negligible(scale))
}

fn collinear<S: Scalar>(a: &Vec3<S>, b: &Vec3<S>, c: &Vec3<S>) -> bool {
    det3(a, b, c).is_negligible(norm3(a) * norm3(b) * norm3(c))
}

fn any_three<S: Scalar>(v: &[&Vec3<S>], pred: impl Fn(&Vec3<S>, &Vec3<S>, &Vec3<S>) -> bool) -> bool {
    let n = v.len();
    (0..n).any(|i| (i + 1..n).any(|j| (j + 1..n).any(|k| pred(v[i], v[j], v[k]))))
}

/// `f_i(x_j) != 0` for `i != j` and no three points collinear.
pub fn is_generic<S: Scalar>(t: &[Flag<S>]) -> bool {
    let pairings_ok = t.iter().enumerate().all(|(i, fi)| {
        t.iter().enumerate().all(|(j, fj)| {
            i == j || !fi.pairing(fj).is_negligible(norm3(&fi.line) * norm3(&fj.point))
        })
    });
    let points: Vec<_> = t.iter().map(|f| &f.point).collect();
    pairings_ok && !any_three(&points, collinear)
}

/// Generic, and in addition no three lines are concurrent.
pub fn is_very_generic<S: Scalar>(t: &[Flag<S>]) -> bool {
    let lines: Vec<_> = t.iter().map(|f| &f.line).collect();
    is_generic(t) && !any_three(&lines, collinear)
}

/// The projective transformation sending the four points to
/// `[1,0,0], [0,1,0], [0,0,1], [1,1,1]`.
pub fn normalize_to_standard<S: Scalar>(points: [&Vec3<S>; 4]) -> Result<Mat3<S>> {
    if any_three(&points, collinear) {
        return Err(Error::DegenerateInput(
            "points are not in general position".into(),
        ));
    }
    // A sends e_i to lambda_i x_i and (1,1,1) to x4
    let p = Mat3::from_columns([points[0], points[1], points[2]]);
    let lambda = p.inverse()?.apply(points[3]);
    let a = p.mul(&Mat3::diag(lambda));
    a.inverse()
}

/// Apply `g` to every flag of a tuple.
pub fn transform_tuple<S: Scalar>(t: &[Flag<S>], g: &Mat3<S>) -> Result<Vec<Flag<S>>> {
    let g_inv = g.inverse()?;
    Ok(t.iter().map(|f| f.transform(g, &g_inv)).collect())
}

/// The Veronese flag of `[x : y]`: the point `[x^2, xy, y^2]` on the conic
/// `ac = b^2`, with its tangent line `(c, -2b, a)`.
pub fn hyperbolic_flag<S: Scalar>(p: &ProjPoint1<S>) -> Flag<S> {
    let (x, y) = (p.a.clone(), p.b.clone());
    let two = S::from_i64(2);
    Flag {
        point: [x.clone() * x.clone(), x.clone() * y.clone(), y.clone() * y.clone()],
        line: [y.clone() * y.clone(), -(two * x.clone() * y.clone()), x.clone() * x],
    }
}

/// `<x, x> = conj(x0) x2 + |x1|^2 + conj(x2) x0` for the anti-diagonal
/// Hermitian form.
pub fn hermitian_norm<S: Scalar>(x: &Vec3<S>) -> S {
    let jx = [x[2].clone(), x[1].clone(), x[0].clone()];
    dot(&conj3(x), &jx)
}

/// The point `(a, b, c)` of the null cone with
/// `c = (-|b|^2 / 2 + it) / conj(a)`, where `it` is purely imaginary.
pub fn null_point<S: Scalar>(a: S, b: S, it: S) -> Result<Vec3<S>> {
    if a.is_zero() {
        return Err(Error::DegenerateInput("null point needs a != 0".into()));
    }
    let half_norm = b.clone() * b.conj() / S::from_i64(2);
    let c = (it - half_norm) / a.conj();
    Ok([a, b, c])
}

/// The spherical CR flag at a null point: the line tangent to the sphere,
/// `f(y) = <y, x>`, i.e. the covector `conj(x)^T J`.
pub fn cr_flag<S: Scalar>(x: &Vec3<S>) -> Result<Flag<S>> {
    if is_zero_vec(x) {
        return Err(Error::DegenerateInput("zero point".into()));
    }
    let h = hermitian_norm(x);
    let n = norm3(x);
    if !h.is_negligible(n * n) {
        return Err(Error::NotOnSphere(h.modulus() / (n * n)));
    }
    let line = array::from_fn(|i| x[2 - i].conj());
    Ok(Flag {
        point: x.clone(),
        line,
    })
}

/// Cross-ratio of four collinear points of CP^2.
///
/// The line is identified with CP^1 through the alternating form
/// `[pq] = det(p, q, r)` for a fixed point `r` off the line, which keeps the
/// computation homogeneous.
pub fn collinear_cross_ratio<S: Scalar>(p: [&Vec3<S>; 4]) -> Result<S> {
    let line = cross(p[0], p[1]);
    if is_zero_vec(&line) {
        return Err(Error::DegenerateInput("first two points coincide".into()));
    }
    let k = (0..3)
        .max_by(|&i, &j| line[i].modulus().total_cmp(&line[j].modulus()))
        .expect("three coordinates");
    let r: Vec3<S> = array::from_fn(|i| if i == k { S::one() } else { S::zero() });
    let br = |a: usize, b: usize| det3(p[a], p[b], &r);
    let scale: f64 = p.iter().map(|v| norm3(v)).fold(1.0, |acc, n| acc.max(n));
    for a in 0..4 {
        for b in a + 1..4 {
            if br(a, b).is_negligible(scale * scale) {
                return Err(Error::DegenerateInput(format!(
                    "points {} and {} coincide",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    Ok(br(0, 2) * br(1, 3) / (br(0, 3) * br(1, 2)))
}
