use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::tetra::{edge_index, face_slot, FACES};

/// A simplicial identification of face `face_a` of `tet_a` with face
/// `face_b` of `tet_b`, sending `face_a[n]` to `face_b[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub tet_a: usize,
    pub face_a: [u8; 3],
    pub tet_b: usize,
    pub face_b: [u8; 3],
}

impl Pairing {
    pub fn new(tet_a: usize, face_a: [u8; 3], tet_b: usize, face_b: [u8; 3]) -> Self {
        Pairing {
            tet_a,
            face_a,
            tet_b,
            face_b,
        }
    }

    /// Build from an explicit vertex map given as `(v, v')` pairs.
    pub fn from_map(
        index: usize,
        tet_a: usize,
        face_a: [u8; 3],
        tet_b: usize,
        map: &[(u8, u8)],
    ) -> Result<Self> {
        let malformed = |reason: String| Error::MalformedPairing { index, reason };
        if map.len() != 3 {
            return Err(malformed(format!("map has {} entries, expected 3", map.len())));
        }
        let mut face_b = [0u8; 3];
        for (n, v) in face_a.iter().enumerate() {
            let hits: Vec<u8> = map.iter().filter(|(a, _)| a == v).map(|(_, b)| *b).collect();
            match hits.as_slice() {
                [b] => face_b[n] = *b,
                _ => return Err(malformed(format!("vertex {v} is not mapped exactly once"))),
            }
        }
        if face_b[0] == face_b[1] || face_b[1] == face_b[2] || face_b[0] == face_b[2] {
            return Err(malformed(format!("map {map:?} is not a bijection")));
        }
        Ok(Pairing::new(tet_a, face_a, tet_b, face_b))
    }

    /// Image of vertex `v` of `tet_a` if it lies on the glued face.
    pub fn map_vertex(&self, v: u8) -> Option<u8> {
        self.face_a
            .iter()
            .position(|&a| a == v)
            .map(|n| self.face_b[n])
    }

    /// The full vertex permutation, sending the vertex opposite `face_a`
    /// to the vertex opposite `face_b`. Entry `v - 1` is the image of `v`.
    pub fn permutation(&self) -> [u8; 4] {
        let opp = |f: [u8; 3]| 10 - f[0] - f[1] - f[2];
        std::array::from_fn(|n| {
            let v = n as u8 + 1;
            self.map_vertex(v).unwrap_or_else(|| opp(self.face_b))
        })
    }

    /// The map as `(v, v')` pairs in the order of `face_a`.
    pub fn map_pairs(&self) -> [(u8, u8); 3] {
        std::array::from_fn(|n| (self.face_a[n], self.face_b[n]))
    }
}

/// An oriented edge `from -> to` of tetrahedron `tet`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedEdge {
    pub tet: usize,
    pub from: u8,
    pub to: u8,
}

impl DirectedEdge {
    pub fn reversed(&self) -> Self {
        DirectedEdge {
            tet: self.tet,
            from: self.to,
            to: self.from,
        }
    }
}

/// An edge of the glued complex: the orbit of one directed tetrahedron edge
/// under the pairings, together with the orbit of its reverse.
///
/// The two orbits coincide when the complex reverses the edge along a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClass {
    pub forward: Vec<DirectedEdge>,
    pub backward: Vec<DirectedEdge>,
}

impl EdgeClass {
    /// Number of tetrahedron edges in the class, counted with multiplicity.
    pub fn valence(&self) -> usize {
        self.forward.len()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Tetrahedra with face identifications. Unpaired faces are boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealTriangulation {
    tetrahedra: usize,
    pairings: Vec<Pairing>,
}

fn edge_slot(e: &DirectedEdge) -> usize {
    e.tet * 12 + edge_index(e.from, e.to)
}

fn edge_at(slot: usize) -> DirectedEdge {
    let (tet, k) = (slot / 12, slot % 12);
    let from = (k / 3) as u8 + 1;
    let rest: Vec<u8> = (1..=4u8).filter(|&v| v != from).collect();
    DirectedEdge {
        tet,
        from,
        to: rest[k % 3],
    }
}

impl IdealTriangulation {
    /// Checks that every pairing is simplicial, refers to existing
    /// tetrahedra, and that no face is used twice.
    pub fn new(tetrahedra: usize, pairings: Vec<Pairing>) -> Result<Self> {
        let mut used: BTreeSet<(usize, u8)> = BTreeSet::new();
        for (index, p) in pairings.iter().enumerate() {
            let malformed = |reason: String| Error::MalformedPairing { index, reason };
            for (tet, face) in [(p.tet_a, p.face_a), (p.tet_b, p.face_b)] {
                if tet >= tetrahedra {
                    return Err(malformed(format!(
                        "tetrahedron {tet} out of range (have {tetrahedra})"
                    )));
                }
                let (opp, _) = face_slot(face)
                    .map_err(|_| malformed(format!("vertex map on {face:?} is not a bijection of three labels in 1..4")))?;
                if !used.insert((tet, opp)) {
                    return Err(malformed(format!(
                        "face opposite vertex {opp} of tetrahedron {tet} is glued twice"
                    )));
                }
            }
        }
        Ok(IdealTriangulation {
            tetrahedra,
            pairings,
        })
    }

    pub fn num_tetrahedra(&self) -> usize {
        self.tetrahedra
    }

    pub fn pairings(&self) -> &[Pairing] {
        &self.pairings
    }

    /// Unpaired faces as `(tetrahedron, boundary-oriented face)`.
    pub fn boundary_faces(&self) -> Vec<(usize, [u8; 3])> {
        let glued: BTreeSet<(usize, u8)> = self
            .pairings
            .iter()
            .flat_map(|p| {
                let opp = |f: [u8; 3]| 10 - f[0] - f[1] - f[2];
                [(p.tet_a, opp(p.face_a)), (p.tet_b, opp(p.face_b))]
            })
            .collect();
        (0..self.tetrahedra)
            .flat_map(|t| (1..=4u8).map(move |v| (t, v)))
            .filter(|key| !glued.contains(key))
            .map(|(t, v)| (t, FACES[usize::from(v - 1)]))
            .collect()
    }

    /// True when every face is glued.
    pub fn is_closed(&self) -> bool {
        self.boundary_faces().is_empty()
    }

    /// Orbits of directed tetrahedron edges under the face pairings.
    ///
    /// `(A, a -> b)` is identified with `(B, a' -> b')` whenever a pairing
    /// sends `a, b` to `a', b'`. Classes are ordered by their first member.
    pub fn edge_classes(&self) -> Vec<EdgeClass> {
        let n = self.tetrahedra * 12;
        let mut uf = UnionFind::new(n);
        for p in &self.pairings {
            for &a in &p.face_a {
                for &b in &p.face_a {
                    if a == b {
                        continue;
                    }
                    let src = DirectedEdge {
                        tet: p.tet_a,
                        from: a,
                        to: b,
                    };
                    let dst = DirectedEdge {
                        tet: p.tet_b,
                        from: p.map_vertex(a).expect("on face"),
                        to: p.map_vertex(b).expect("on face"),
                    };
                    uf.union(edge_slot(&src), edge_slot(&dst));
                }
            }
        }
        let mut orbits: Vec<Vec<DirectedEdge>> = Vec::new();
        let mut orbit_of: Vec<Option<usize>> = vec![None; n];
        for slot in 0..n {
            let root = uf.find(slot);
            match orbit_of[root] {
                Some(o) => orbits[o].push(edge_at(slot)),
                None => {
                    orbit_of[root] = Some(orbits.len());
                    orbits.push(vec![edge_at(slot)]);
                }
            }
        }
        let mut taken = vec![false; orbits.len()];
        let mut classes = Vec::new();
        for o in 0..orbits.len() {
            if taken[o] {
                continue;
            }
            taken[o] = true;
            let rev_root = uf.find(edge_slot(&orbits[o][0].reversed()));
            let r = orbit_of[rev_root].expect("every slot has an orbit");
            taken[r] = true;
            classes.push(EdgeClass {
                forward: orbits[o].clone(),
                backward: orbits[r].clone(),
            });
        }
        classes
    }
}
