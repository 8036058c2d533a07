//! Bundled triangulations and decorations.
//!
//! Census data is given in the usual gluing notation: vertices 0..3, face
//! `f` opposite vertex `f`, and a permutation per face sending each vertex
//! to its image in the neighbouring tetrahedron.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::complex::{DecoratedComplex, IdealTriangulation, Pairing};
use crate::error::Result;
use crate::flags::{cr_flag, null_point};
use crate::numerics::{GaussRat, Scalar};
use crate::tetra::{MinimalCoords, FACES};

/// One tetrahedron of census data: neighbours across faces 0..3 and the
/// gluing permutations as digit strings.
pub type CensusTet = ([usize; 4], [&'static str; 4]);

fn perm(s: &str) -> [u8; 4] {
    let d: Vec<u8> = s.bytes().map(|b| b - b'0').collect();
    [d[0], d[1], d[2], d[3]]
}

/// Convert census gluings to a triangulation with 1-based labels, listing
/// each glued pair of faces once.
pub fn from_census(data: &[CensusTet]) -> Result<IdealTriangulation> {
    let mut pairings = Vec::new();
    for (t, (nbrs, perms)) in data.iter().enumerate() {
        for f in 0..4usize {
            let p = perm(perms[f]);
            let (u, g) = (nbrs[f], usize::from(p[f]));
            if (u, g) < (t, f) {
                continue;
            }
            let face_a = FACES[f];
            let face_b = face_a.map(|v| p[usize::from(v - 1)] + 1);
            pairings.push(Pairing::new(t, face_a, u, face_b));
        }
    }
    IdealTriangulation::new(data.len(), pairings)
}

const FIGURE_EIGHT: [CensusTet; 2] = [
    ([1, 1, 1, 1], ["0132", "1230", "2310", "2103"]),
    ([0, 0, 0, 0], ["0132", "3201", "3012", "2103"]),
];

const WHITEHEAD: [CensusTet; 4] = [
    ([1, 2, 3, 1], ["0132", "0132", "0132", "3201"]),
    ([0, 0, 3, 2], ["0132", "2310", "3120", "3120"]),
    ([1, 0, 3, 3], ["3120", "0132", "0213", "3120"]),
    ([2, 2, 1, 0], ["3120", "0213", "3120", "0132"]),
];

/// One tetrahedron with four boundary faces.
pub fn single() -> IdealTriangulation {
    IdealTriangulation::new(1, vec![]).expect("valid")
}

/// The two-tetrahedron triangulation of the figure-eight knot complement.
pub fn figure_eight() -> IdealTriangulation {
    from_census(&FIGURE_EIGHT).expect("valid census data")
}

/// The four-tetrahedron triangulation of the Whitehead link complement.
pub fn whitehead() -> IdealTriangulation {
    from_census(&WHITEHEAD).expect("valid census data")
}

/// Two tetrahedra glued along all four faces by the identity on labels,
/// each face reversed by swapping two vertices. Any decoration assigning
/// the same flags to both tetrahedra, up to that swap, is consistent.
pub fn double_tetrahedron() -> IdealTriangulation {
    let swap = |v: u8| match v {
        3 => 4,
        4 => 3,
        v => v,
    };
    let pairings = FACES
        .iter()
        .map(|f| Pairing::new(0, *f, 1, f.map(swap)))
        .collect();
    IdealTriangulation::new(2, pairings).expect("valid")
}

/// Minimal coordinates of the hyperbolic decoration with shape `z`.
pub fn hyperbolic_minimal<S: Scalar>(z: &S) -> Result<MinimalCoords<S>> {
    MinimalCoords::new(z.clone(), z.clone(), z.clone(), z.clone())
}

/// The complete hyperbolic structure on the figure-eight complement: both
/// tetrahedra regular, shape `e^{i pi / 3}`.
pub fn figure_eight_geometric() -> DecoratedComplex<Complex64> {
    let z = Complex64::from_polar(1.0, PI / 3.0);
    let m = hyperbolic_minimal(&z).expect("regular shape");
    DecoratedComplex::from_minimal(figure_eight(), &[m.clone(), m]).expect("valid")
}

/// The complete hyperbolic structure on the Whitehead link complement, with
/// Gaussian-rational shapes `1 + i` and `(1 + i) / 2`.
pub fn whitehead_geometric() -> DecoratedComplex<GaussRat> {
    let a = GaussRat::from_ints(1, 1);
    let b = GaussRat::from_fracs(1, 2, 1, 2);
    let m: Vec<_> = [a, b.clone(), b.clone(), b]
        .iter()
        .map(|z| hyperbolic_minimal(z).expect("generic shape"))
        .collect();
    DecoratedComplex::from_minimal(whitehead(), &m).expect("valid")
}

/// A decoration of [`double_tetrahedron`] from arbitrary minimal
/// coordinates of the first tetrahedron.
pub fn double_tetrahedron_decoration<S: Scalar>(m: &MinimalCoords<S>) -> Result<DecoratedComplex<S>> {
    // the second tetrahedron carries the same flags with 3 and 4 exchanged
    let first = crate::tetra::reconstruct(m)?;
    let second = [
        first[0].clone(),
        first[1].clone(),
        first[3].clone(),
        first[2].clone(),
    ];
    DecoratedComplex::from_flags(double_tetrahedron(), vec![first, second])
}

/// A single tetrahedron decorated by the hyperbolic flags at
/// `infinity, 0, 1, z`.
pub fn hyperbolic_example<S: Scalar>(z: &S) -> Result<DecoratedComplex<S>> {
    DecoratedComplex::from_flags(single(), vec![crate::tetra::hyperbolic_tuple(z)])
}

/// A single tetrahedron decorated by four spherical CR flags at exact
/// Gaussian-rational null points.
pub fn cr_example() -> DecoratedComplex<GaussRat> {
    let q = |a: i64, b: i64| GaussRat::from_ints(a, b);
    let points = [
        null_point(q(1, 0), q(0, 0), q(0, 0)),
        null_point(q(1, 1), q(2, -1), q(0, 3)),
        null_point(q(-2, 1), q(1, 1), q(0, -1)),
        null_point(q(3, 2), q(0, 1), q(0, 2)),
    ];
    let flags = points.map(|x| cr_flag(&x.expect("nonzero first coordinate")).expect("null point"));
    DecoratedComplex::from_flags(single(), vec![flags]).expect("generic CR flags")
}

/// A decoration of a single tetrahedron.
pub fn single_decoration<S: Scalar>(m: &MinimalCoords<S>) -> Result<DecoratedComplex<S>> {
    DecoratedComplex::from_minimal(single(), std::slice::from_ref(m))
}
