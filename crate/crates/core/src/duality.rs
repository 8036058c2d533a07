//! The duality involution on tetrahedron coordinates.
//!
//! Face coordinates invert, and each edge coordinate is given by
//! `z*_ij = z_ji (1 + z_jil) / (1 + 1/z_ijk)` with `(i, j, k, l)` even.
//! The faces entering each edge formula:
//!
//! | edge | faces      | edge | faces      | edge | faces      |
//! |------|------------|------|------------|------|------------|
//! | 12   | 214, 123   | 21   | 123, 214   | 31   | 134, 312   |
//! | 13   | 312, 134   | 23   | 324, 231   | 32   | 231, 324   |
//! | 14   | 413, 142   | 24   | 421, 243   | 34   | 432, 341   |
//! | 41   | 142, 413   | 42   | 243, 421   | 43   | 341, 432   |

use std::array;

use crate::error::{Error, Result};
use crate::flags::{is_very_generic, normalize_to_standard, transform_tuple, Flag};
use crate::numerics::Scalar;
use crate::prebloch::FormalSum;
use crate::tetra::{
    complete_from_minimal, edge_coords, even_completion, triple_ratio, MinimalCoords,
    TetraCoords, EDGES, FACES, MINIMAL_EDGES, RELATION_TOL,
};

fn require_very_generic<S: Scalar>(c: &TetraCoords<S>) -> Result<()> {
    match c.degenerate_face() {
        Some(face) => Err(Error::NotVeryGeneric { tet: None, face }),
        None => Ok(()),
    }
}

/// The closed-form dual edge coordinate `z*_ij`.
pub fn dual_edge<S: Scalar>(c: &TetraCoords<S>, i: u8, j: u8) -> Result<S> {
    let (k, l) = even_completion(i, j);
    let one = S::one;
    let num = one() + c.face([j, i, l])?;
    let den = one() + c.face([i, j, k])?.recip();
    if den.is_zero() {
        return Err(Error::NotVeryGeneric {
            tet: None,
            face: [i, j, k],
        });
    }
    Ok(c.z(j, i).clone() * num / den)
}

/// Dual coordinates from the closed formulas.
///
/// The four minimal dual edges determine the rest; the other eight edges
/// and the inverted faces are computed independently and must agree.
pub fn dual_coords_closed<S: Scalar>(c: &TetraCoords<S>) -> Result<TetraCoords<S>> {
    require_very_generic(c)?;
    let direct: Vec<S> = EDGES
        .iter()
        .map(|&(i, j)| dual_edge(c, i, j))
        .collect::<Result<_>>()?;
    let at = |i: u8, j: u8| {
        let pos = EDGES.iter().position(|&e| e == (i, j)).expect("edge label");
        direct[pos].clone()
    };
    let m = MinimalCoords::from_array(MINIMAL_EDGES.map(|(i, j)| at(i, j)))?;
    let dual = complete_from_minimal(&m)?;
    for &(i, j) in &EDGES {
        if !dual.z(i, j).close_to(&at(i, j), RELATION_TOL) {
            return Err(Error::InconsistentCoords(format!(
                "dual edge z*{i}{j} disagrees with the completed coordinates"
            )));
        }
    }
    for v in 1..=4u8 {
        if !dual.face_opposite(v).close_to(&c.face_opposite(v).recip(), RELATION_TOL) {
            let face = FACES[usize::from(v - 1)];
            return Err(Error::InconsistentCoords(format!(
                "dual face {face:?} is not the reciprocal"
            )));
        }
    }
    Ok(dual)
}

/// Dual coordinates measured geometrically: dualize every flag, move the
/// dual points to the standard frame, and read off the coordinates.
pub fn dual_coords_matrix<S: Scalar>(t: &[Flag<S>; 4]) -> Result<TetraCoords<S>> {
    if !is_very_generic(t) {
        for face in FACES {
            let [a, b, c] = face.map(|v| &t[usize::from(v - 1)]);
            if let Ok(tr) = triple_ratio(a, b, c) {
                if !tr.is_very_generic() {
                    return Err(Error::NotVeryGeneric { tet: None, face });
                }
            }
        }
        return Err(Error::DegenerateInput(
            "flag configuration is not very generic".into(),
        ));
    }
    let dual: Vec<Flag<S>> = t.iter().map(Flag::dual).collect();
    let g = normalize_to_standard(array::from_fn(|n| &dual[n].point))?;
    let moved: [Flag<S>; 4] = transform_tuple(&dual, &g)?
        .try_into()
        .expect("four flags");
    edge_coords(&moved)
}

/// Entrywise complex conjugation.
pub fn conjugate_coords<S: Scalar>(c: &TetraCoords<S>) -> TetraCoords<S> {
    c.conj()
}

/// Unordered vertex pairs in the storage order of [`WCoords`].
pub const PAIRS: [(u8, u8); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

fn pair_index(i: u8, j: u8) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    PAIRS
        .iter()
        .position(|&p| p == (a, b))
        .expect("distinct vertex labels")
}

/// The symmetric coordinates `w_ij = z_ij z_ji`.
#[derive(Debug, Clone, PartialEq)]
pub struct WCoords<S> {
    w: [S; 6],
}

impl<S: Scalar> WCoords<S> {
    pub fn new(w: [S; 6]) -> Self {
        WCoords { w }
    }

    pub fn get(&self, i: u8, j: u8) -> &S {
        &self.w[pair_index(i, j)]
    }

    pub fn values(&self) -> &[S; 6] {
        &self.w
    }

    /// Duality in these coordinates: `w*_ij = w_kl`.
    pub fn swap(&self) -> Self {
        WCoords {
            w: array::from_fn(|n| self.w[5 - n].clone()),
        }
    }

    /// The boundary-oriented face coordinate opposite `v`:
    /// the product of the three `w_vm`, `m != v`.
    pub fn face_opposite(&self, v: u8) -> S {
        (1..=4u8)
            .filter(|&m| m != v)
            .fold(S::one(), |acc, m| acc * self.get(v, m).clone())
    }
}

pub fn to_w<S: Scalar>(c: &TetraCoords<S>) -> WCoords<S> {
    WCoords {
        w: PAIRS.map(|(i, j)| c.z(i, j).clone() * c.z(j, i).clone()),
    }
}

/// Inverse of [`to_w`] on its birational domain.
pub fn from_w<S: Scalar>(w: &WCoords<S>) -> Result<MinimalCoords<S>> {
    let one = S::one;
    let g = |i: u8, j: u8| w.get(i, j).clone();
    let nonzero = |v: S, what: &str| -> Result<S> {
        if v.is_zero() {
            Err(Error::WSingular(format!("{what} vanishes")))
        } else {
            Ok(v)
        }
    };
    let a = nonzero(g(1, 3) * g(2, 3) - g(2, 3) + one(), "w13 w23 - w23 + 1")?;
    let b = nonzero(g(1, 2) * g(1, 3) * g(2, 3) + one(), "w12 w13 w23 + 1")?;
    let c = nonzero(g(1, 3) * g(1, 4) - g(1, 4) + one(), "w13 w14 - w14 + 1")?;
    let d = nonzero(g(1, 3) * g(1, 4) * g(3, 4) + one(), "w13 w14 w34 + 1")?;
    let z12 = g(1, 2) * a.clone() / b.clone();
    let z21 = b / a;
    let z34 = g(3, 4) * c.clone() / d.clone();
    let z43 = d / c;
    MinimalCoords::new(z12, z21, z34, z43)
}

/// `[-z_123] + [-z_243] + [-z_134] + [-z_142]`, the difference
/// `beta(T) - beta(T*)`.
pub fn beta_defect<S: Scalar>(c: &TetraCoords<S>) -> Result<FormalSum<S>> {
    require_very_generic(c)?;
    let mut s = FormalSum::new();
    for f in c.faces() {
        s.add_term(1, -f.clone())?;
    }
    Ok(s)
}

/// The four two-term identities relating edge coordinates to
/// w-coordinates, as `(left, right)` pairs that agree in the pre-Bloch
/// group.
pub fn r_term_identities<S: Scalar>(c: &TetraCoords<S>) -> Result<[(FormalSum<S>, FormalSum<S>); 4]> {
    let one = S::one;
    let w = to_w(c);
    let z = |i: u8, j: u8| c.z(i, j).clone();
    let g = |i: u8, j: u8| w.get(i, j).clone();
    // [za (1 - t)] + [zb t / (t - 1)] against [(wa wb - wa + 1) / (wa wb)] + [1 / (wc wa - wc + 1)]
    let build = |za: S, zb: S, t: S, wa: S, wb: S, wc: S| -> Result<(FormalSum<S>, FormalSum<S>)> {
        let lhs = FormalSum::from_terms([
            (1, za * (one() - t.clone())),
            (1, zb * t.clone() / (t - one())),
        ])?;
        let rhs = FormalSum::from_terms([
            (1, (wa.clone() * wb.clone() - wa.clone() + one()) / (wa.clone() * wb)),
            (1, (wc.clone() * wa.clone() - wc + one()).recip()),
        ])?;
        Ok((lhs, rhs))
    };
    Ok([
        build(z(4, 2), z(4, 1), z(1, 3) * z(2, 3) * z(4, 3), g(1, 2), g(1, 4), g(2, 4))?,
        build(z(3, 1), z(3, 2), z(1, 4) * z(2, 4) * z(3, 4), g(1, 2), g(2, 3), g(1, 3))?,
        build(z(2, 4), z(2, 3), z(2, 1) * z(3, 1) * z(4, 1), g(3, 4), g(2, 3), g(2, 4))?,
        build(z(1, 3), z(1, 4), z(1, 2) * z(3, 2) * z(4, 2), g(3, 4), g(1, 4), g(1, 3))?,
    ])
}
