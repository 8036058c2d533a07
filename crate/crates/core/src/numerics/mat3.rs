use std::array;

use crate::error::{Error, Result};
use crate::numerics::Scalar;

/// A column of three scalars, used for both points and covectors.
pub type Vec3<S> = [S; 3];

/// Dot product `u0 a0 + u1 a1 + u2 a2` (a covector paired with a vector).
pub fn dot<S: Scalar>(u: &Vec3<S>, a: &Vec3<S>) -> S {
    u[0].clone() * a[0].clone() + u[1].clone() * a[1].clone() + u[2].clone() * a[2].clone()
}

pub fn cross<S: Scalar>(a: &Vec3<S>, b: &Vec3<S>) -> Vec3<S> {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

/// Determinant of the matrix whose rows are `a`, `b`, `c`.
pub fn det3<S: Scalar>(a: &Vec3<S>, b: &Vec3<S>, c: &Vec3<S>) -> S {
    dot(&cross(b, c), a)
}

pub fn norm3<S: Scalar>(a: &Vec3<S>) -> f64 {
    a.iter().map(|x| x.modulus().powi(2)).sum::<f64>().sqrt()
}

pub fn conj3<S: Scalar>(a: &Vec3<S>) -> Vec3<S> {
    array::from_fn(|i| a[i].conj())
}

/// A 3x3 matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat3<S>(pub [[S; 3]; 3]);

impl<S: Scalar> Mat3<S> {
    pub fn identity() -> Self {
        Mat3(array::from_fn(|i| {
            array::from_fn(|j| if i == j { S::one() } else { S::zero() })
        }))
    }

    pub fn diag(d: [S; 3]) -> Self {
        let [a, b, c] = d;
        let z = S::zero;
        Mat3([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    pub fn from_columns(c: [&Vec3<S>; 3]) -> Self {
        Mat3(array::from_fn(|i| array::from_fn(|j| c[j][i].clone())))
    }

    pub fn row(&self, i: usize) -> &Vec3<S> {
        &self.0[i]
    }

    pub fn det(&self) -> S {
        det3(&self.0[0], &self.0[1], &self.0[2])
    }

    pub fn transpose(&self) -> Self {
        Mat3(array::from_fn(|i| array::from_fn(|j| self.0[j][i].clone())))
    }

    /// Scale-aware singularity test: `|det| <= tol * product of row norms`
    /// for floats, exact zero otherwise.
    pub fn is_singular(&self) -> bool {
        let scale: f64 = self.0.iter().map(norm3).product();
        self.det().is_negligible(scale)
    }

    /// Inverse by the adjugate formula; exact in the exact backend.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_singular() {
            return Err(Error::SingularMatrix);
        }
        let det = self.det();
        let m = &self.0;
        // columns of the inverse are the cross products of pairs of rows
        let c0 = cross(&m[1], &m[2]);
        let c1 = cross(&m[2], &m[0]);
        let c2 = cross(&m[0], &m[1]);
        let adj = Mat3::from_columns([&c0, &c1, &c2]);
        Ok(adj.scale(&(S::one() / det)))
    }

    pub fn scale(&self, s: &S) -> Self {
        Mat3(array::from_fn(|i| {
            array::from_fn(|j| self.0[i][j].clone() * s.clone())
        }))
    }

    pub fn apply(&self, v: &Vec3<S>) -> Vec3<S> {
        array::from_fn(|i| dot(&self.0[i], v))
    }

    pub fn mul(&self, rhs: &Mat3<S>) -> Mat3<S> {
        let t = rhs.transpose();
        Mat3(array::from_fn(|i| array::from_fn(|j| dot(&self.0[i], &t.0[j]))))
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> Mat3<T> {
        Mat3(array::from_fn(|i| array::from_fn(|j| f(&self.0[i][j]))))
    }
}
