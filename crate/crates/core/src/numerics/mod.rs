//! Scalar backends, projective-line cross-ratios, 3x3 linear algebra and
//! Gaussian-integer factorization.

mod gaussian;
mod mat3;
mod proj1;
mod scalar;

pub use gaussian::{
    factor_gaussian, factor_gaussian_int, recompose_ratio, valuations, GaussInt,
    GaussianFactorization,
};
pub use mat3::{conj3, cross, det3, dot, norm3, Mat3, Vec3};
pub use proj1::{cross_ratio, ProjPoint1};
pub use scalar::{Backend, GaussRat, Scalar, DEGENERACY_TOL, MERGE_TOL};
