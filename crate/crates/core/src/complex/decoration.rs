use crate::complex::IdealTriangulation;
use crate::duality::dual_coords_closed;
use crate::error::{Error, Result};
use crate::flags::Flag;
use crate::numerics::Scalar;
use crate::prebloch::{canonicalize_six, FormalSum};
use crate::tetra::{complete_from_minimal, edge_coords, MinimalCoords, TetraCoords};

/// A triangulation with coordinates on every tetrahedron.
///
/// When the decoration was measured from flags, the flags are kept
/// alongside the coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct DecoratedComplex<S> {
    triangulation: IdealTriangulation,
    coords: Vec<TetraCoords<S>>,
    flags: Option<Vec<[Flag<S>; 4]>>,
}

impl<S: Scalar> DecoratedComplex<S> {
    pub fn new(triangulation: IdealTriangulation, coords: Vec<TetraCoords<S>>) -> Result<Self> {
        if coords.len() != triangulation.num_tetrahedra() {
            return Err(Error::DegenerateInput(format!(
                "{} tetrahedra but {} coordinate sets",
                triangulation.num_tetrahedra(),
                coords.len()
            )));
        }
        Ok(DecoratedComplex {
            triangulation,
            coords,
            flags: None,
        })
    }

    pub fn from_minimal(triangulation: IdealTriangulation, minimal: &[MinimalCoords<S>]) -> Result<Self> {
        let coords = minimal
            .iter()
            .enumerate()
            .map(|(t, m)| complete_from_minimal(m).map_err(|e| e.at_tetrahedron(t)))
            .collect::<Result<_>>()?;
        Self::new(triangulation, coords)
    }

    /// Measure coordinates from one generic flag tuple per tetrahedron.
    pub fn from_flags(triangulation: IdealTriangulation, flags: Vec<[Flag<S>; 4]>) -> Result<Self> {
        let coords = flags
            .iter()
            .enumerate()
            .map(|(t, f)| edge_coords(f).map_err(|e| e.at_tetrahedron(t)))
            .collect::<Result<_>>()?;
        let mut dc = Self::new(triangulation, coords)?;
        dc.flags = Some(flags);
        Ok(dc)
    }

    pub fn triangulation(&self) -> &IdealTriangulation {
        &self.triangulation
    }

    pub fn coords(&self) -> &[TetraCoords<S>] {
        &self.coords
    }

    pub fn flags(&self) -> Option<&[[Flag<S>; 4]]> {
        self.flags.as_deref()
    }

    pub fn minimal(&self) -> Vec<MinimalCoords<S>> {
        self.coords.iter().map(TetraCoords::minimal).collect()
    }

    /// Coordinate `z_ij` of tetrahedron `tet`.
    pub fn z(&self, tet: usize, i: u8, j: u8) -> &S {
        self.coords[tet].z(i, j)
    }

    /// The first tetrahedron with a face coordinate equal to -1.
    pub fn require_very_generic(&self) -> Result<()> {
        for (t, c) in self.coords.iter().enumerate() {
            if let Some(face) = c.degenerate_face() {
                return Err(Error::NotVeryGeneric { tet: Some(t), face });
            }
        }
        Ok(())
    }

    /// `beta(K, z)`: the sum of `[z12] + [z21] + [z34] + [z43]` over all
    /// tetrahedra.
    pub fn beta(&self) -> FormalSum<S> {
        self.coords
            .iter()
            .fold(FormalSum::new(), |acc, c| acc + c.beta())
    }

    /// `D(beta(K, z)) / 4`.
    pub fn volume(&self) -> f64 {
        self.beta().eval_d() / 4.0
    }

    /// The dual decoration, tetrahedron by tetrahedron. Stored flags are
    /// replaced by their duals.
    pub fn dualize(&self) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(t, c)| dual_coords_closed(c).map_err(|e| e.at_tetrahedron(t)))
            .collect::<Result<_>>()?;
        Ok(DecoratedComplex {
            triangulation: self.triangulation.clone(),
            coords,
            flags: self
                .flags
                .as_ref()
                .map(|fs| fs.iter().map(|t| t.clone().map(|f| f.dual())).collect()),
        })
    }

    pub fn conjugate(&self) -> Self {
        DecoratedComplex {
            triangulation: self.triangulation.clone(),
            coords: self.coords.iter().map(TetraCoords::conj).collect(),
            flags: self
                .flags
                .as_ref()
                .map(|fs| fs.iter().map(|t| t.clone().map(|f| f.conj())).collect()),
        }
    }

    /// `sum [-z_face]` over every face of every tetrahedron, the exact
    /// difference `beta(K, z) - beta(K, z*)`.
    pub fn duality_defect(&self) -> Result<FormalSum<S>> {
        self.require_very_generic()?;
        let mut s = FormalSum::new();
        for c in &self.coords {
            for f in c.faces() {
                s.add_term(1, -f.clone())?;
            }
        }
        Ok(s)
    }

    /// [`duality_defect`](Self::duality_defect) reduced modulo the
    /// inversion and reflection relations. Glued faces of a consistent
    /// decoration cancel in pairs, leaving the boundary contribution.
    pub fn canonical_defect(&self) -> Result<FormalSum<S>> {
        Ok(canonicalize_six(&self.duality_defect()?))
    }

    /// The defect restricted to unpaired faces.
    pub fn boundary_defect(&self) -> Result<FormalSum<S>> {
        self.require_very_generic()?;
        let mut s = FormalSum::new();
        for (t, face) in self.triangulation.boundary_faces() {
            s.add_term(1, -self.coords[t].face(face)?)?;
        }
        Ok(s)
    }

    /// Replace the coordinates of every tetrahedron, keeping the
    /// triangulation. Stored flags are dropped.
    pub fn with_coords(&self, coords: Vec<TetraCoords<S>>) -> Result<Self> {
        Self::new(self.triangulation.clone(), coords)
    }
}
