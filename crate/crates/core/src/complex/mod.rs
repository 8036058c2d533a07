//! Decorated ideal triangulations: face pairings, edge classes, the face and
//! edge equations, the invariant `beta(K, z)`, duality, and a Newton solver.

pub mod census;
mod consistency;
mod decoration;
mod solver;
mod triangulation;

pub use consistency::{check, check_edges, check_faces, ConsistencyReport, Location, Residual};
pub use decoration::DecoratedComplex;
pub use solver::{
    jacobian_rank, perturb, solve_consistency, ConsistencySystem, Solution, CONVERGENCE_TOL,
    DOMAIN_RADIUS, MAX_HALVINGS, MAX_STEPS,
};
pub use triangulation::{DirectedEdge, EdgeClass, IdealTriangulation, Pairing};
