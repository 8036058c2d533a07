//! Damped Newton iteration on the face and edge equations.
//!
//! Unknowns are the minimal coordinates `(z12, z21, z34, z43)` of every
//! tetrahedron. Every other coordinate is a rational function of one
//! unknown, so each equation is a signed product of factors `v`,
//! `1 / (1 - v)` or `1 - 1/v` raised to `+-1`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::complex::{check, DecoratedComplex, IdealTriangulation, Location};
use crate::error::{Error, Result};
use crate::tetra::{even_completion, MinimalCoords, FACES, MINIMAL_EDGES};

pub const CONVERGENCE_TOL: f64 = 1e-12;
pub const DOMAIN_RADIUS: f64 = 1e-8;
pub const MAX_STEPS: usize = 100;
pub const MAX_HALVINGS: usize = 40;
const ARMIJO_C: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// `z = v`
    Direct,
    /// `z = 1 / (1 - v)`
    Next,
    /// `z = 1 - 1/v`
    Last,
}

impl Kind {
    fn value(self, v: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match self {
            Kind::Direct => v,
            Kind::Next => one / (one - v),
            Kind::Last => one - one / v,
        }
    }

    fn log_derivative(self, v: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match self {
            Kind::Direct => one / v,
            Kind::Next => one / (one - v),
            Kind::Last => one / (v * (v - one)),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Factor {
    var: usize,
    kind: Kind,
    exponent: i32,
}

/// Express `z_ij` of tetrahedron `tet` through the unknown of vertex `i`.
fn edge_factor(tet: usize, i: u8, j: u8, exponent: i32) -> Factor {
    let slot = MINIMAL_EDGES
        .iter()
        .position(|&(a, _)| a == i)
        .expect("every vertex has a minimal edge");
    let partner = MINIMAL_EDGES[slot].1;
    let (k, l) = even_completion(i, partner);
    let kind = if j == partner {
        Kind::Direct
    } else if j == k {
        Kind::Next
    } else {
        debug_assert_eq!(j, l);
        Kind::Last
    };
    Factor {
        var: tet * 4 + slot,
        kind,
        exponent,
    }
}

/// Face `(a, b, c)` of `tet` as `-prod z_vl`, `l` the opposite vertex,
/// inverted when the ordering is against the boundary orientation.
fn face_factors(tet: usize, face: [u8; 3], out: &mut Vec<Factor>) {
    let l = 10 - face[0] - face[1] - face[2];
    let key = FACES[usize::from(l - 1)];
    let positive = (0..3).any(|r| [key[r], key[(r + 1) % 3], key[(r + 2) % 3]] == face);
    let e = if positive { 1 } else { -1 };
    for v in key {
        out.push(edge_factor(tet, v, l, e));
    }
}

#[derive(Debug, Clone)]
struct Equation {
    location: Location,
    factors: Vec<Factor>,
}

/// The face and edge equations of a triangulation as functions of the
/// minimal coordinates, with residuals `prod - 1` and their Jacobian.
#[derive(Debug, Clone)]
pub struct ConsistencySystem {
    unknowns: usize,
    equations: Vec<Equation>,
}

impl ConsistencySystem {
    pub fn new(k: &IdealTriangulation) -> Self {
        let mut equations = Vec::new();
        for (index, p) in k.pairings().iter().enumerate() {
            let mut factors = Vec::with_capacity(6);
            face_factors(p.tet_a, p.face_a, &mut factors);
            let [a, b, c] = p.face_b;
            face_factors(p.tet_b, [a, c, b], &mut factors);
            // the two signs of the face products cancel
            equations.push(Equation {
                location: Location::Face {
                    index,
                    tet_a: p.tet_a,
                    face_a: p.face_a,
                    tet_b: p.tet_b,
                    face_b: p.face_b,
                },
                factors,
            });
        }
        for (index, class) in k.edge_classes().iter().enumerate() {
            for (forward, orbit) in [(true, &class.forward), (false, &class.backward)] {
                equations.push(Equation {
                    location: Location::Edge { index, forward },
                    factors: orbit
                        .iter()
                        .map(|e| edge_factor(e.tet, e.from, e.to, 1))
                        .collect(),
                });
            }
        }
        ConsistencySystem {
            unknowns: 4 * k.num_tetrahedra(),
            equations,
        }
    }

    pub fn num_unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn num_equations(&self) -> usize {
        self.equations.len()
    }

    pub fn locations(&self) -> impl Iterator<Item = &Location> {
        self.equations.iter().map(|e| &e.location)
    }

    fn product(eq: &Equation, x: &[Complex64]) -> Complex64 {
        eq.factors.iter().fold(Complex64::new(1.0, 0.0), |acc, f| {
            acc * f.kind.value(x[f.var]).powi(f.exponent)
        })
    }

    pub fn residuals(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.equations
            .iter()
            .map(|eq| Self::product(eq, x) - Complex64::new(1.0, 0.0))
            .collect()
    }

    /// `d(prod)/dv = prod * sum exponent * d(log z)/dv`.
    pub fn jacobian(&self, x: &[Complex64]) -> DMatrix<Complex64> {
        let mut j = DMatrix::zeros(self.equations.len(), self.unknowns);
        for (row, eq) in self.equations.iter().enumerate() {
            let p = Self::product(eq, x);
            for f in &eq.factors {
                j[(row, f.var)] += p * f.kind.log_derivative(x[f.var]) * f64::from(f.exponent);
            }
        }
        j
    }
}

fn max_norm(r: &[Complex64]) -> f64 {
    r.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn sq_norm(r: &[Complex64]) -> f64 {
    r.iter().map(|z| z.norm_sqr()).sum()
}

/// Outcome of a successful solve.
#[derive(Debug, Clone)]
pub struct Solution {
    pub complex: DecoratedComplex<Complex64>,
    pub iterations: usize,
    pub residual: f64,
}

fn check_domain(x: &[Complex64]) -> Result<()> {
    for (n, v) in x.iter().enumerate() {
        let one = Complex64::new(1.0, 0.0);
        if v.norm() < DOMAIN_RADIUS || (v - one).norm() < DOMAIN_RADIUS || !v.is_finite() {
            let (i, j) = MINIMAL_EDGES[n % 4];
            return Err(Error::LeftDomain {
                tet: n / 4,
                edge: [i, j],
                value: v.to_string(),
            });
        }
    }
    Ok(())
}

/// Solve the face and edge equations starting from `dc`.
///
/// Each step is the minimum-norm least-squares Newton step, damped by
/// Armijo backtracking on the squared residual norm.
pub fn solve_consistency(dc: &DecoratedComplex<Complex64>) -> Result<Solution> {
    let system = ConsistencySystem::new(dc.triangulation());
    let mut x: Vec<Complex64> = dc.minimal().iter().flat_map(|m| m.to_array()).collect();
    let mut r = system.residuals(&x);
    let mut iterations = 0;
    while max_norm(&r) >= CONVERGENCE_TOL {
        if iterations == MAX_STEPS {
            return Err(Error::SolverDiverged {
                iterations,
                residual: max_norm(&r),
            });
        }
        let j = system.jacobian(&x);
        let rhs = -DVector::from_vec(r.clone());
        let step = j
            .svd(true, true)
            .solve(&rhs, 1e-14)
            .map_err(|_| Error::SolverDiverged {
                iterations,
                residual: max_norm(&r),
            })?;
        let f0 = sq_norm(&r);
        let mut t = 1.0;
        let mut accepted = None;
        for _ in 0..=MAX_HALVINGS {
            let trial: Vec<Complex64> = x.iter().zip(step.iter()).map(|(a, d)| a + d * t).collect();
            if trial.iter().all(|v| v.is_finite()) {
                let rt = system.residuals(&trial);
                if sq_norm(&rt) <= (1.0 - 2.0 * ARMIJO_C * t) * f0 {
                    accepted = Some((trial, rt));
                    break;
                }
            }
            t *= 0.5;
        }
        iterations += 1;
        let Some((trial, rt)) = accepted else {
            return Err(Error::SolverDiverged {
                iterations,
                residual: max_norm(&r),
            });
        };
        check_domain(&trial)?;
        x = trial;
        r = rt;
    }
    let minimal = x
        .chunks(4)
        .map(|c| MinimalCoords::new(c[0], c[1], c[2], c[3]))
        .collect::<Result<Vec<_>>>()?;
    let complex = DecoratedComplex::from_minimal(dc.triangulation().clone(), &minimal)?;
    let residual = check(&complex).max_residual();
    Ok(Solution {
        complex,
        iterations,
        residual,
    })
}

/// Multiply every minimal coordinate by `1 + eps * u` with `u` drawn from
/// the given unit-square samples, cycling through them.
pub fn perturb(
    dc: &DecoratedComplex<Complex64>,
    eps: f64,
    samples: &[(f64, f64)],
) -> Result<DecoratedComplex<Complex64>> {
    let mut n = 0;
    let minimal = dc
        .minimal()
        .iter()
        .map(|m| {
            let v = m.to_array().map(|z| {
                let (a, b) = samples[n % samples.len()];
                n += 1;
                z * (Complex64::new(1.0, 0.0) + Complex64::new(a, b) * eps)
            });
            MinimalCoords::from_array(v)
        })
        .collect::<Result<Vec<_>>>()?;
    DecoratedComplex::from_minimal(dc.triangulation().clone(), &minimal)
}

/// Numerical rank of the Jacobian at the current decoration.
pub fn jacobian_rank(dc: &DecoratedComplex<Complex64>, tol: f64) -> usize {
    let system = ConsistencySystem::new(dc.triangulation());
    let x: Vec<Complex64> = dc.minimal().iter().flat_map(|m| m.to_array()).collect();
    system.jacobian(&x).rank(tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::census::{figure_eight_geometric, hyperbolic_minimal, single_decoration};

    #[test]
    fn residuals_agree_with_the_checker() {
        let dc = perturb(&figure_eight_geometric(), 1e-2, &[(0.3, -0.2), (0.7, 0.1), (-0.5, 0.4)]).unwrap();
        let system = ConsistencySystem::new(dc.triangulation());
        let x: Vec<Complex64> = dc.minimal().iter().flat_map(|m| m.to_array()).collect();
        let r = system.residuals(&x);
        let report = check(&dc);
        let all: Vec<_> = report.iter().collect();
        assert_eq!(r.len(), all.len());
        for (a, b) in r.iter().zip(all) {
            assert!((a + Complex64::new(1.0, 0.0) - b.product).norm() < 1e-12);
        }
    }

    #[test]
    fn converged_input_takes_no_steps() {
        let sol = solve_consistency(&figure_eight_geometric()).unwrap();
        assert_eq!(sol.iterations, 0);
        assert_eq!(sol.complex.coords(), figure_eight_geometric().coords());
    }

    #[test]
    fn unglued_tetrahedron_has_no_solution() {
        let m = hyperbolic_minimal(&Complex64::new(0.5, 0.0)).unwrap();
        let dc = single_decoration(&m).unwrap();
        assert!(matches!(
            solve_consistency(&dc),
            Err(Error::SolverDiverged { .. } | Error::LeftDomain { .. })
        ));
    }
}
