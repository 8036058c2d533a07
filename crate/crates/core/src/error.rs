use thiserror::Error;

/// Errors raised by geometric, algebraic and file-level operations.
///
/// Every variant that can be traced to a location in a decorated complex
/// carries that location so front ends can name the offending tetrahedron,
/// face or edge class.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("singular matrix")]
    SingularMatrix,

    #[error("unsupported for this backend: {0}")]
    Unsupported(String),

    #[error("point is not on the null cone of the hermitian form (|<x,x>| = {0:e})")]
    NotOnSphere(f64),

    #[error("value out of domain: {0}")]
    OutOfDomain(String),

    #[error("{} is not very generic: face {face:?} has coordinate -1", location(*tet))]
    NotVeryGeneric { tet: Option<usize>, face: [u8; 3] },

    #[error("w-coordinate map is singular: {0}")]
    WSingular(String),

    #[error("coordinates violate the tetrahedron relations: {0}")]
    InconsistentCoords(String),

    #[error("malformed pairing {index}: {reason}")]
    MalformedPairing { index: usize, reason: String },

    #[error("solver diverged after {iterations} iterations (max residual {residual:e})")]
    SolverDiverged { iterations: usize, residual: f64 },

    #[error("coordinate z{}{} of tetrahedron {tet} left the domain (value {value})", .edge[0], .edge[1])]
    LeftDomain {
        tet: usize,
        edge: [u8; 2],
        value: String,
    },

    #[error("mixed scalar backends: {0}")]
    MixedBackend(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

fn location(tet: Option<usize>) -> String {
    match tet {
        Some(t) => format!("tetrahedron {t}"),
        None => "tetrahedron".to_string(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Attach a tetrahedron index to errors that name one.
    pub fn at_tetrahedron(self, index: usize) -> Self {
        match self {
            Error::NotVeryGeneric { face, .. } => Error::NotVeryGeneric {
                tet: Some(index),
                face,
            },
            Error::DegenerateInput(msg) => {
                Error::DegenerateInput(format!("tetrahedron {index}: {msg}"))
            }
            Error::OutOfDomain(msg) => Error::OutOfDomain(format!("tetrahedron {index}: {msg}")),
            Error::InconsistentCoords(msg) => {
                Error::InconsistentCoords(format!("tetrahedron {index}: {msg}"))
            }
            other => other,
        }
    }
}
