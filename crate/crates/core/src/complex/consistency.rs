use std::fmt;

use crate::complex::{DecoratedComplex, DirectedEdge};
use crate::numerics::Scalar;

/// Where a consistency equation comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    /// Pairing `index`, matching `face_a` of `tet_a` with `face_b` of `tet_b`.
    Face {
        index: usize,
        tet_a: usize,
        face_a: [u8; 3],
        tet_b: usize,
        face_b: [u8; 3],
    },
    /// Edge class `index`, in the forward or backward direction.
    Edge { index: usize, forward: bool },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lbl = |v: &[u8; 3]| format!("{}{}{}", v[0], v[1], v[2]);
        match self {
            Location::Face {
                index,
                tet_a,
                face_a,
                tet_b,
                face_b,
            } => write!(
                f,
                "pairing {index}: tet {tet_a} face {} ~ tet {tet_b} face {}",
                lbl(face_a),
                lbl(face_b)
            ),
            Location::Edge { index, forward } => write!(
                f,
                "edge class {index} ({})",
                if *forward { "forward" } else { "backward" }
            ),
        }
    }
}

/// One product that should equal 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual<S> {
    pub location: Location,
    pub product: S,
    /// `|product - 1|`.
    pub residual: f64,
}

impl<S: Scalar> Residual<S> {
    fn new(location: Location, product: S) -> Self {
        let residual = (product.clone() - S::one()).modulus();
        Residual {
            location,
            product,
            residual,
        }
    }

    /// Exact equality with 1 in the exact backend, `residual <= tol` for
    /// floats.
    pub fn passes(&self, tol: f64) -> bool {
        match self.product.as_exact() {
            Some(p) => Scalar::is_one(p),
            None => self.residual <= tol,
        }
    }
}

/// Face and edge residuals of a decorated complex.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport<S> {
    pub faces: Vec<Residual<S>>,
    pub edges: Vec<Residual<S>>,
}

impl<S: Scalar> ConsistencyReport<S> {
    pub fn iter(&self) -> impl Iterator<Item = &Residual<S>> {
        self.faces.iter().chain(&self.edges)
    }

    pub fn max_residual(&self) -> f64 {
        self.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.iter().all(|r| r.passes(tol))
    }

    pub fn failures(&self, tol: f64) -> Vec<&Residual<S>> {
        self.iter().filter(|r| !r.passes(tol)).collect()
    }
}

/// For every pairing `(a, b, c) -> (a', b', c')`:
/// `z_abc(A) * z_a'c'b'(B) = 1`.
pub fn check_faces<S: Scalar>(dc: &DecoratedComplex<S>) -> Vec<Residual<S>> {
    dc.triangulation()
        .pairings()
        .iter()
        .enumerate()
        .map(|(index, p)| {
            let [a, b, c] = p.face_b;
            let za = dc.coords()[p.tet_a].face(p.face_a).expect("validated face");
            let zb = dc.coords()[p.tet_b].face([a, c, b]).expect("validated face");
            Residual::new(
                Location::Face {
                    index,
                    tet_a: p.tet_a,
                    face_a: p.face_a,
                    tet_b: p.tet_b,
                    face_b: p.face_b,
                },
                za * zb,
            )
        })
        .collect()
}

fn orbit_product<S: Scalar>(dc: &DecoratedComplex<S>, orbit: &[DirectedEdge]) -> S {
    orbit
        .iter()
        .fold(S::one(), |acc, e| acc * dc.z(e.tet, e.from, e.to).clone())
}

/// For every edge class, the products of `z_ij` over the forward and the
/// backward directed orbits.
pub fn check_edges<S: Scalar>(dc: &DecoratedComplex<S>) -> Vec<Residual<S>> {
    dc.triangulation()
        .edge_classes()
        .iter()
        .enumerate()
        .flat_map(|(index, class)| {
            [
                Residual::new(
                    Location::Edge {
                        index,
                        forward: true,
                    },
                    orbit_product(dc, &class.forward),
                ),
                Residual::new(
                    Location::Edge {
                        index,
                        forward: false,
                    },
                    orbit_product(dc, &class.backward),
                ),
            ]
        })
        .collect()
}

pub fn check<S: Scalar>(dc: &DecoratedComplex<S>) -> ConsistencyReport<S> {
    ConsistencyReport {
        faces: check_faces(dc),
        edges: check_edges(dc),
    }
}
