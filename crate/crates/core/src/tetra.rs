//! Coordinates of tetrahedra of flags.
//!
//! Vertices are labelled 1..4. The edge coordinate `z_ij` is computed with
//! `(k, l)` chosen so that `(i, j, k, l)` is an even permutation:
//!
//! | edge | k l | edge | k l | edge | k l |
//! |------|-----|------|-----|------|-----|
//! | 12   | 3 4 | 21   | 4 3 | 31   | 2 4 |
//! | 13   | 4 2 | 23   | 1 4 | 32   | 4 1 |
//! | 14   | 2 3 | 24   | 3 1 | 34   | 1 2 |
//! | 41   | 3 2 | 42   | 1 3 | 43   | 2 1 |
//!
//! Faces are keyed by the opposite vertex and stored in the orientation
//! induced as the boundary of the tetrahedron: `243`, `134`, `142`, `123`.
//! Odd orderings of a face give the reciprocal coordinate.

use std::array;

use crate::error::{Error, Result};
use crate::flags::{hyperbolic_flag, is_generic, Flag};
use crate::numerics::{det3, norm3, ProjPoint1, Scalar};
use crate::prebloch::FormalSum;

/// Relative tolerance for the internal relations of float coordinates.
pub const RELATION_TOL: f64 = 1e-8;

/// Boundary-oriented faces, indexed by opposite vertex minus one.
pub const FACES: [[u8; 3]; 4] = [[2, 4, 3], [1, 3, 4], [1, 4, 2], [1, 2, 3]];

/// The four edges whose coordinates determine a tetrahedron.
pub const MINIMAL_EDGES: [(u8, u8); 4] = [(1, 2), (2, 1), (3, 4), (4, 3)];

/// All twelve oriented edges in lexicographic order.
pub const EDGES: [(u8, u8); 12] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 1),
    (2, 3),
    (2, 4),
    (3, 1),
    (3, 2),
    (3, 4),
    (4, 1),
    (4, 2),
    (4, 3),
];

pub fn edge_index(i: u8, j: u8) -> usize {
    assert!(i != j && (1..=4).contains(&i) && (1..=4).contains(&j));
    let col = if j < i { j - 1 } else { j - 2 };
    usize::from((i - 1) * 3 + col)
}

/// Sign of a permutation of distinct labels: `true` when even.
pub fn is_even(p: &[u8]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|a| (a + 1..p.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| p[a] > p[b])
        .count();
    inversions % 2 == 0
}

/// The labels `(k, l)` completing `(i, j)` to an even permutation.
pub fn even_completion(i: u8, j: u8) -> (u8, u8) {
    let mut rest = (1..=4u8).filter(|&v| v != i && v != j);
    let (k, l) = (rest.next().unwrap(), rest.next().unwrap());
    if is_even(&[i, j, k, l]) {
        (k, l)
    } else {
        (l, k)
    }
}

/// For a face `(a, b, c)`: the opposite vertex, and whether the ordering
/// agrees with the stored boundary orientation.
pub fn face_slot(face: [u8; 3]) -> Result<(u8, bool)> {
    let [a, b, c] = face;
    let valid = |v: u8| (1..=4).contains(&v);
    if !(valid(a) && valid(b) && valid(c)) || a == b || b == c || a == c {
        return Err(Error::DegenerateInput(format!("invalid face {face:?}")));
    }
    let opp = 10 - a - b - c;
    let key = FACES[usize::from(opp - 1)];
    let positive = (0..3).any(|r| [key[r], key[(r + 1) % 3], key[(r + 2) % 3]] == face);
    Ok((opp, positive))
}

/// The triple ratio of three flags.
#[derive(Debug, Clone, PartialEq)]
pub struct TripleRatio<S>(S);

impl<S: Scalar> TripleRatio<S> {
    pub fn value(&self) -> &S {
        &self.0
    }

    /// The triple is very generic iff the triple ratio differs from -1.
    pub fn is_very_generic(&self) -> bool {
        !(self.0.clone() + S::one()).is_zero()
    }
}

/// `z_123 = f1(x2) f2(x3) f3(x1) / (f1(x3) f2(x1) f3(x2))`.
pub fn triple_ratio<S: Scalar>(f1: &Flag<S>, f2: &Flag<S>, f3: &Flag<S>) -> Result<TripleRatio<S>> {
    let f = [f1, f2, f3];
    let p = |i: usize, j: usize| -> Result<S> {
        let v = f[i].pairing(f[j]);
        if v.is_negligible(norm3(&f[i].line) * norm3(&f[j].point)) {
            return Err(Error::DegenerateInput(format!(
                "f{}(x{}) vanishes",
                i + 1,
                j + 1
            )));
        }
        Ok(v)
    };
    let num = p(0, 1)? * p(1, 2)? * p(2, 0)?;
    let den = p(0, 2)? * p(1, 0)? * p(2, 1)?;
    Ok(TripleRatio(num / den))
}

/// The coordinates `(z12, z21, z34, z43)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimalCoords<S> {
    pub z12: S,
    pub z21: S,
    pub z34: S,
    pub z43: S,
}

impl<S: Scalar> MinimalCoords<S> {
    pub fn new(z12: S, z21: S, z34: S, z43: S) -> Result<Self> {
        let m = MinimalCoords { z12, z21, z34, z43 };
        for ((i, j), z) in MINIMAL_EDGES.iter().zip(m.values()) {
            if !z.is_generator() {
                return Err(Error::OutOfDomain(format!("z{i}{j} = {z} is 0 or 1")));
            }
        }
        Ok(m)
    }

    pub fn values(&self) -> [&S; 4] {
        [&self.z12, &self.z21, &self.z34, &self.z43]
    }

    pub fn from_array(v: [S; 4]) -> Result<Self> {
        let [a, b, c, d] = v;
        Self::new(a, b, c, d)
    }

    pub fn to_array(&self) -> [S; 4] {
        self.values().map(|z| z.clone())
    }
}

/// All twelve edge and four face coordinates of a tetrahedron.
#[derive(Debug, Clone, PartialEq)]
pub struct TetraCoords<S> {
    edges: [S; 12],
    faces: [S; 4],
}

impl<S: Scalar> TetraCoords<S> {
    /// Builds coordinates and checks every internal relation: edges in
    /// C \ {0, 1}, `z_ik = 1/(1 - z_ij)` and `z_il = 1 - 1/z_ij` for every
    /// even `(i, j, k, l)`, and `z_ijk = -z_il z_jl z_kl` on every face.
    pub fn new(edges: [S; 12], faces: [S; 4]) -> Result<Self> {
        let c = TetraCoords { edges, faces };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let one = S::one;
        for &(i, j) in &EDGES {
            let z = self.z(i, j);
            if !z.is_generator() {
                return Err(Error::OutOfDomain(format!("z{i}{j} = {z} is 0 or 1")));
            }
        }
        let agree = |a: &S, b: &S| a.close_to(b, RELATION_TOL);
        for &(i, j) in &EDGES {
            let (k, l) = even_completion(i, j);
            let z = self.z(i, j).clone();
            if !agree(self.z(i, k), &(one() - z.clone()).recip()) {
                return Err(Error::InconsistentCoords(format!(
                    "z{i}{k} != 1/(1 - z{i}{j})"
                )));
            }
            if !agree(self.z(i, l), &(one() - z.recip())) {
                return Err(Error::InconsistentCoords(format!(
                    "z{i}{l} != 1 - 1/z{i}{j}"
                )));
            }
        }
        for (idx, key) in FACES.iter().enumerate() {
            let l = idx as u8 + 1;
            let [i, j, k] = *key;
            let rhs = -(self.z(i, l).clone() * self.z(j, l).clone() * self.z(k, l).clone());
            if !agree(&self.faces[idx], &rhs) {
                return Err(Error::InconsistentCoords(format!(
                    "z{i}{j}{k} != -z{i}{l} z{j}{l} z{k}{l}"
                )));
            }
        }
        Ok(())
    }

    pub fn z(&self, i: u8, j: u8) -> &S {
        &self.edges[edge_index(i, j)]
    }

    /// Face coordinate for any ordering of the face's vertices.
    pub fn face(&self, face: [u8; 3]) -> Result<S> {
        let (opp, positive) = face_slot(face)?;
        let v = self.faces[usize::from(opp - 1)].clone();
        Ok(if positive { v } else { v.recip() })
    }

    /// The boundary-oriented face opposite vertex `v`.
    pub fn face_opposite(&self, v: u8) -> &S {
        &self.faces[usize::from(v - 1)]
    }

    pub fn edges(&self) -> &[S; 12] {
        &self.edges
    }

    pub fn faces(&self) -> &[S; 4] {
        &self.faces
    }

    pub fn minimal(&self) -> MinimalCoords<S> {
        MinimalCoords {
            z12: self.z(1, 2).clone(),
            z21: self.z(2, 1).clone(),
            z34: self.z(3, 4).clone(),
            z43: self.z(4, 3).clone(),
        }
    }

    /// The first boundary-oriented face whose coordinate is -1.
    pub fn degenerate_face(&self) -> Option<[u8; 3]> {
        FACES
            .iter()
            .zip(&self.faces)
            .find(|(_, z)| ((*z).clone() + S::one()).is_zero())
            .map(|(key, _)| *key)
    }

    /// True iff no face coordinate equals -1.
    pub fn very_generic(&self) -> bool {
        self.degenerate_face().is_none()
    }

    /// `[z12] + [z21] + [z34] + [z43]`.
    pub fn beta(&self) -> FormalSum<S> {
        let mut s = FormalSum::new();
        for &(i, j) in &MINIMAL_EDGES {
            s.add_term(1, self.z(i, j).clone())
                .expect("validated edge coordinates are generators");
        }
        s
    }

    /// `D(beta) / 4`.
    pub fn volume(&self) -> f64 {
        self.beta().eval_d() / 4.0
    }

    /// `z_ij z_ik z_il` at vertex `i`; equals -1 for valid coordinates.
    pub fn vertex_product(&self, i: u8) -> S {
        (1..=4u8)
            .filter(|&j| j != i)
            .fold(S::one(), |acc, j| acc * self.z(i, j).clone())
    }

    /// Entrywise complex conjugation.
    pub fn conj(&self) -> Self {
        TetraCoords {
            edges: array::from_fn(|n| self.edges[n].conj()),
            faces: array::from_fn(|n| self.faces[n].conj()),
        }
    }
}

/// `z_ij = f_i(x_k) det(x_i, x_j, x_l) / (f_i(x_l) det(x_i, x_j, x_k))`
/// with `(i, j, k, l)` even.
pub fn edge_coords<S: Scalar>(t: &[Flag<S>; 4]) -> Result<TetraCoords<S>> {
    if !is_generic(t) {
        return Err(Error::DegenerateInput("flag configuration is not generic".into()));
    }
    let x = |v: u8| &t[usize::from(v - 1)].point;
    let f = |v: u8| &t[usize::from(v - 1)];
    let edges = EDGES.map(|(i, j)| {
        let (k, l) = even_completion(i, j);
        let num = f(i).pairing(f(k)) * det3(x(i), x(j), x(l));
        let den = f(i).pairing(f(l)) * det3(x(i), x(j), x(k));
        num / den
    });
    let mut faces = Vec::with_capacity(4);
    for [a, b, c] in FACES {
        let tr = triple_ratio(f(a), f(b), f(c))?;
        faces.push(tr.0);
    }
    let faces: [S; 4] = faces.try_into().expect("four faces");
    TetraCoords::new(edges, faces)
}

/// The tuple in standard position with the given minimal coordinates.
pub fn reconstruct<S: Scalar>(m: &MinimalCoords<S>) -> Result<[Flag<S>; 4]> {
    let one = S::one;
    let zero = S::zero;
    let m = MinimalCoords::new(m.z12.clone(), m.z21.clone(), m.z34.clone(), m.z43.clone())?;
    let inv43 = (one() - m.z43.clone()).recip();
    Ok([
        Flag::new([one(), zero(), zero()], [zero(), one() - m.z12.recip(), -one()])?,
        Flag::new([zero(), one(), zero()], [one() - m.z21.clone(), zero(), -one()])?,
        Flag::new([zero(), zero(), one()], [m.z34.clone(), -one(), zero()])?,
        Flag::new([one(), one(), one()], [inv43.clone(), one() - inv43, -one()])?,
    ])
}

/// Fill in all coordinates from the four minimal ones.
pub fn complete_from_minimal<S: Scalar>(m: &MinimalCoords<S>) -> Result<TetraCoords<S>> {
    let m = MinimalCoords::new(m.z12.clone(), m.z21.clone(), m.z34.clone(), m.z43.clone())?;
    let one = S::one;
    let mut edges: [S; 12] = array::from_fn(|_| S::zero());
    for ((i, j), z) in MINIMAL_EDGES.iter().zip(m.values()) {
        let (k, l) = even_completion(*i, *j);
        edges[edge_index(*i, *j)] = z.clone();
        edges[edge_index(*i, k)] = (one() - z.clone()).recip();
        edges[edge_index(*i, l)] = one() - z.recip();
    }
    let e = |i: u8, j: u8| edges[edge_index(i, j)].clone();
    let faces = array::from_fn(|idx| {
        let l = idx as u8 + 1;
        let [i, j, k] = FACES[idx];
        -(e(i, l) * e(j, l) * e(k, l))
    });
    TetraCoords::new(edges, faces)
}

/// The Veronese flags of `[0:1], [1:0], [1:1], [1:z]`.
pub fn hyperbolic_tuple<S: Scalar>(z: &S) -> [Flag<S>; 4] {
    let p = |a: S, b: S| hyperbolic_flag(&ProjPoint1 { a, b });
    [
        p(S::zero(), S::one()),
        p(S::one(), S::zero()),
        p(S::one(), S::one()),
        p(S::one(), z.clone()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::{collinear_cross_ratio, normalize_to_standard, proportional, transform_tuple};
    use crate::numerics::{cross, GaussRat, Mat3};
    use proptest::prelude::*;

    fn q(n: i64) -> GaussRat {
        GaussRat::from_i64(n)
    }

    fn gauss() -> impl Strategy<Value = GaussRat> {
        (-9i64..10, 1i64..6, -9i64..10, 1i64..6)
            .prop_map(|(a, b, c, d)| GaussRat::from_fracs(a, b, c, d))
    }

    fn minimal() -> impl Strategy<Value = MinimalCoords<GaussRat>> {
        [gauss(), gauss(), gauss(), gauss()]
            .prop_filter_map("generators", |v| MinimalCoords::from_array(v).ok())
    }

    #[test]
    fn completion_table() {
        let table: Vec<_> = EDGES.iter().map(|&(i, j)| (i, j, even_completion(i, j))).collect();
        assert!(table.contains(&(1, 2, (3, 4))));
        assert!(table.contains(&(2, 1, (4, 3))));
        assert!(table.contains(&(1, 3, (4, 2))));
        assert!(table.contains(&(4, 3, (2, 1))));
        for &(i, j) in &EDGES {
            let (k, l) = even_completion(i, j);
            assert!(is_even(&[i, j, k, l]));
        }
    }

    #[test]
    fn face_orientation() {
        assert_eq!(face_slot([1, 2, 3]).unwrap(), (4, true));
        assert_eq!(face_slot([3, 1, 2]).unwrap(), (4, true));
        assert_eq!(face_slot([1, 3, 2]).unwrap(), (4, false));
        assert_eq!(face_slot([4, 3, 2]).unwrap(), (1, true));
        assert!(face_slot([1, 1, 2]).is_err());
    }

    #[test]
    fn triple_ratio_of_standard_triple() {
        let z = GaussRat::from_fracs(3, 2, -1, 5);
        let t = [
            Flag::new([q(1), q(0), q(0)], [q(0), q(1), q(-1)]).unwrap(),
            Flag::new([q(0), q(1), q(0)], [q(1), q(0), q(-1)]).unwrap(),
            Flag::new([q(0), q(0), q(1)], [z.clone(), q(1), q(0)]).unwrap(),
        ];
        assert_eq!(triple_ratio(&t[0], &t[1], &t[2]).unwrap().value(), &z);
        assert_eq!(triple_ratio(&t[1], &t[0], &t[2]).unwrap().value(), &z.recip());
        let d: Vec<_> = t.iter().map(Flag::dual).collect();
        assert_eq!(triple_ratio(&d[0], &d[1], &d[2]).unwrap().value(), &z.recip());
        let m1 = [t[0].clone(), t[1].clone(), Flag::new([q(0), q(0), q(1)], [q(-1), q(1), q(0)]).unwrap()];
        assert!(!triple_ratio(&m1[0], &m1[1], &m1[2]).unwrap().is_very_generic());
    }

    #[test]
    fn hyperbolic_tetrahedron_coordinates() {
        let z = q(2);
        let c = edge_coords(&hyperbolic_tuple(&z)).unwrap();
        for (i, j) in MINIMAL_EDGES {
            assert_eq!(c.z(i, j), &z);
        }
        assert!(c.faces().iter().all(|f| f.is_one()));
        assert_eq!(c.z(1, 3), &q(-1));
        assert_eq!(c.z(1, 4), &GaussRat::from_fracs(1, 2, 0, 1));
        assert!(c.very_generic());
        assert_eq!(c.beta(), FormalSum::term(4, z).unwrap());
    }

    #[test]
    fn reconstruct_explicit_values() {
        let m = MinimalCoords::new(q(2), q(3), q(5), q(7)).unwrap();
        let t = reconstruct(&m).unwrap();
        assert_eq!(t[0].line, [q(0), GaussRat::from_fracs(1, 2, 0, 1), q(-1)]);
        assert_eq!(t[1].line, [q(-2), q(0), q(-1)]);
        assert_eq!(t[2].line, [q(5), q(-1), q(0)]);
        assert_eq!(t[3].line, [GaussRat::from_fracs(-1, 6, 0, 1), GaussRat::from_fracs(7, 6, 0, 1), q(-1)]);
        assert_eq!(edge_coords(&t).unwrap().minimal(), m);
    }

    #[test]
    fn reconstruct_of_equal_coordinates_is_hyperbolic() {
        let z = GaussRat::from_fracs(1, 2, 3, 4);
        let m = MinimalCoords::new(z.clone(), z.clone(), z.clone(), z.clone()).unwrap();
        let a = reconstruct(&m).unwrap();
        let b = hyperbolic_tuple(&z);
        let ga = normalize_to_standard([&a[0].point, &a[1].point, &a[2].point, &a[3].point]).unwrap();
        let gb = normalize_to_standard([&b[0].point, &b[1].point, &b[2].point, &b[3].point]).unwrap();
        let na = transform_tuple(&a, &ga).unwrap();
        let nb = transform_tuple(&b, &gb).unwrap();
        for (fa, fb) in na.iter().zip(&nb) {
            assert!(fa.same_flag(fb));
        }
    }

    #[test]
    fn out_of_domain_inputs() {
        assert!(matches!(MinimalCoords::new(q(1), q(2), q(3), q(4)), Err(Error::OutOfDomain(_))));
        assert!(MinimalCoords::new(q(2), q(0), q(3), q(4)).is_err());
    }

    #[test]
    fn corrupted_coordinates_are_detected() {
        let c = complete_from_minimal(&MinimalCoords::new(q(2), q(3), q(5), q(7)).unwrap()).unwrap();
        let mut edges = c.edges().clone();
        edges[edge_index(1, 3)] = q(9);
        assert!(matches!(TetraCoords::new(edges, c.faces().clone()), Err(Error::InconsistentCoords(_))));
        let mut faces = c.faces().clone();
        faces[0] = q(9);
        assert!(TetraCoords::new(c.edges().clone(), faces).is_err());
    }

    #[test]
    fn engineered_degenerate_face() {
        // z_123 = -z14 z24 z34 = -1 once z34 = 1 / (z14 z24)
        let base = complete_from_minimal(&MinimalCoords::new(q(2), q(3), q(5), q(7)).unwrap()).unwrap();
        let (z14, z24) = (base.z(1, 4).clone(), base.z(2, 4).clone());
        let z34 = (z14 * z24).recip();
        let c = complete_from_minimal(&MinimalCoords::new(q(2), q(3), z34, q(7)).unwrap()).unwrap();
        assert!(!c.very_generic());
        assert_eq!(c.degenerate_face(), Some([1, 2, 3]));
    }

    fn line_through(a: &[GaussRat; 3], b: &[GaussRat; 3]) -> [GaussRat; 3] {
        cross(a, b)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn round_trip_and_relations(m in minimal()) {
            let c = complete_from_minimal(&m).unwrap();
            let t = reconstruct(&m).unwrap();
            let measured = edge_coords(&t).unwrap();
            prop_assert_eq!(&measured, &c);
            prop_assert_eq!(measured.minimal(), m);
            for v in 1..=4u8 {
                prop_assert_eq!(c.vertex_product(v), q(-1));
            }
        }

        #[test]
        fn projective_invariance(m in minimal(), g in proptest::array::uniform9(gauss())) {
            let g = Mat3([[g[0].clone(), g[1].clone(), g[2].clone()], [g[3].clone(), g[4].clone(), g[5].clone()], [g[6].clone(), g[7].clone(), g[8].clone()]]);
            prop_assume!(!g.is_singular());
            let t = reconstruct(&m).unwrap();
            let moved: [Flag<GaussRat>; 4] = transform_tuple(&t, &g).unwrap().try_into().unwrap();
            prop_assert_eq!(edge_coords(&moved).unwrap(), edge_coords(&t).unwrap());
        }

        #[test]
        fn triple_ratio_as_cross_ratio(m in minimal()) {
            let t = reconstruct(&m).unwrap();
            let z = triple_ratio(&t[0], &t[1], &t[2]).unwrap().value().clone();
            let (l1, l2, l3) = (&t[0].line, &t[1].line, &t[2].line);
            let p12 = cross(l1, l2);
            let p23 = cross(l2, l3);
            let x2 = t[1].point.clone();
            let p13 = cross(l2, &line_through(&t[0].point, &t[2].point));
            let pts = [&p12, &p23, &x2, &p13];
            prop_assume!((0..4).all(|a| (a + 1..4).all(|b| !proportional(pts[a], pts[b]))));
            let x = collinear_cross_ratio([&p12, &p23, &x2, &p13]).unwrap();
            prop_assert_eq!(x, -z.clone());
            let y = collinear_cross_ratio([&p12, &x2, &p23, &p13]).unwrap();
            prop_assert_eq!(y, q(1) + z);
        }
    }
}
