//! Command-line front end.
//!
//! Every verb reads one complex file (see [`crate::format`]) and either
//! writes a transformed file or prints a report. Exit status:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | unreadable or malformed input, mixed backends |
//! | 2 | domain error: degenerate, not very generic, off the sphere |
//! | 3 | the solver diverged or left the domain |
//! | 4 | `check` found a residual above `--tolerance` |

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::complex::{census, check, solve_consistency, ConsistencyReport, DecoratedComplex, Residual};
use crate::error::{Error, Result};
use crate::format::{self, AnyComplex, BackendChoice, Codec};
use crate::numerics::{GaussRat, Scalar};
use crate::prebloch::FormalSum;
use crate::tetra::{MinimalCoords, EDGES, FACES};

#[derive(Debug, Clone, Parser)]
#[command(name = "flagdual", version, about = "Flag coordinates, duality and volumes of decorated ideal triangulations")]
pub struct Command {
    #[command(subcommand)]
    pub verb: Verb,

    /// Scalar backend; `auto` follows the literals in the input.
    #[arg(long, value_enum, default_value_t = BackendArg::Auto, global = true)]
    pub backend: BackendArg,

    /// Largest residual accepted by `check` and `solve` in the float backend.
    #[arg(long, default_value_t = 1e-9, global = true)]
    pub tolerance: f64,

    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Exact,
    Float,
    Auto,
}

impl From<BackendArg> for BackendChoice {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => BackendChoice::Exact,
            BackendArg::Float => BackendChoice::Float,
            BackendArg::Auto => BackendChoice::Auto,
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Verb {
    /// Edge and face coordinates of every tetrahedron.
    Coords { input: PathBuf },
    /// The dual decoration.
    Dualize { input: PathBuf },
    /// The complex-conjugate decoration.
    Conjugate { input: PathBuf },
    /// Face and edge consistency residuals.
    Check { input: PathBuf },
    /// The invariant beta as a formal sum.
    Beta { input: PathBuf },
    /// The volume D(beta).
    Volume { input: PathBuf },
    /// beta(z) - beta(z*), reduced, with its D value.
    Defect { input: PathBuf },
    /// Newton iteration towards a consistent decoration.
    Solve { input: PathBuf },
    /// Print a bundled example file.
    Example {
        #[command(subcommand)]
        which: ExampleKind,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum ExampleKind {
    /// One tetrahedron with hyperbolic flags at infinity, 0, 1 and `z`.
    Hyperbolic {
        /// Shape, as `a/b+c/d*i` or `re,im`.
        z: String,
    },
    /// One tetrahedron with spherical CR flags.
    Cr,
    /// The complete structure on the figure-eight knot complement.
    Figure8,
    /// The complete structure on the Whitehead link complement.
    Whitehead,
    /// One generic tetrahedron.
    Single,
}

/// The outcome of a command: a document for standard output (or `-o`), an
/// optional note for standard error, and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub status: u8,
    pub body: String,
    pub note: Option<String>,
}

impl Report {
    fn ok(body: String) -> Self {
        Report {
            status: 0,
            body,
            note: None,
        }
    }

    pub fn from_error(e: &Error) -> Self {
        Report {
            status: exit_code(e),
            body: String::new(),
            note: Some(format!("error: {e}")),
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::MixedBackend(_) | Error::MalformedPairing { .. } => 1,
        Error::SolverDiverged { .. } | Error::LeftDomain { .. } => 3,
        _ => 2,
    }
}

fn read_input(path: &Path, backend: BackendArg) -> Result<AnyComplex> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Io(format!("stdin: {e}")))?;
        format::parse_any(&text, backend.into())
    } else {
        format::read_any(path, backend.into())
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

macro_rules! dispatch {
    ($c:expr, $dc:ident => $body:expr) => {
        match $c {
            AnyComplex::Exact($dc) => $body,
            AnyComplex::Float($dc) => $body,
        }
    };
}

fn coords_report<S: Codec>(dc: &DecoratedComplex<S>, as_json: bool) -> String {
    if as_json {
        return pretty(&format::complex_to_json(dc));
    }
    let mut out = String::new();
    for (t, c) in dc.coords().iter().enumerate() {
        let _ = writeln!(out, "tetrahedron {t}");
        for &(i, j) in &EDGES {
            let _ = writeln!(out, "  z{i}{j} = {}", c.z(i, j).text());
        }
        for (f, z) in FACES.iter().zip(c.faces()) {
            let _ = writeln!(out, "  z{}{}{} = {}", f[0], f[1], f[2], z.text());
        }
    }
    out
}

fn residual_json<S: Codec>(r: &Residual<S>, tol: f64) -> Value {
    json!({
        "location": r.location.to_string(),
        "product": r.product.encode(),
        "residual": r.residual,
        "pass": r.passes(tol),
    })
}

fn check_report<S: Codec>(report: &ConsistencyReport<S>, tol: f64, as_json: bool) -> Report {
    let pass = report.passes(tol);
    let max = report.max_residual();
    let body = if as_json {
        pretty(&json!({
            "faces": report.faces.iter().map(|r| residual_json(r, tol)).collect::<Vec<_>>(),
            "edges": report.edges.iter().map(|r| residual_json(r, tol)).collect::<Vec<_>>(),
            "max_residual": max,
            "tolerance": tol,
            "pass": pass,
        }))
    } else {
        let mut out = String::new();
        for r in report.iter() {
            let verdict = if r.passes(tol) { "ok" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{}: product {}, residual {:.3e} {verdict}",
                r.location,
                r.product.text(),
                r.residual
            );
        }
        let _ = writeln!(
            out,
            "max residual {max:.3e} over {} equations (tolerance {tol:e}): {}",
            report.iter().count(),
            if pass { "pass" } else { "fail" }
        );
        out
    };
    Report {
        status: if pass { 0 } else { 4 },
        body,
        note: None,
    }
}

fn sum_text<S: Scalar>(s: &FormalSum<S>) -> String {
    if s.is_empty() {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn beta_report<S: Codec>(dc: &DecoratedComplex<S>, as_json: bool) -> Result<String> {
    dc.require_very_generic()?;
    let beta = dc.beta();
    let d = beta.eval_d();
    Ok(if as_json {
        pretty(&json!({ "beta": format::formal_sum_to_json(&beta), "d_value": d }))
    } else {
        format!("beta = {}\nD(beta) = {d}\n", sum_text(&beta))
    })
}

fn volume_report<S: Codec>(dc: &DecoratedComplex<S>, as_json: bool) -> Result<String> {
    dc.require_very_generic()?;
    let v = dc.volume();
    Ok(if as_json {
        pretty(&json!({ "volume": v }))
    } else {
        format!("volume {v}\n")
    })
}

fn defect_report<S: Codec>(dc: &DecoratedComplex<S>, as_json: bool) -> Result<String> {
    let raw = dc.duality_defect()?;
    let canonical = dc.canonical_defect()?;
    let d = raw.eval_d();
    Ok(if as_json {
        pretty(&json!({
            "defect": format::formal_sum_to_json(&raw),
            "canonical": format::formal_sum_to_json(&canonical),
            "d_value": d,
        }))
    } else {
        format!(
            "defect = {}\ncanonical = {}\nD(defect) = {d}\n",
            sum_text(&raw),
            sum_text(&canonical)
        )
    })
}

fn to_float(dc: &DecoratedComplex<GaussRat>) -> Result<DecoratedComplex<Complex64>> {
    let minimal = dc
        .minimal()
        .iter()
        .map(|m| MinimalCoords::from_array(m.to_array().map(|z| z.to_complex())))
        .collect::<Result<Vec<_>>>()?;
    DecoratedComplex::from_minimal(dc.triangulation().clone(), &minimal)
}

fn solve_report(dc: &DecoratedComplex<Complex64>, tol: f64) -> Result<Report> {
    let sol = solve_consistency(dc)?;
    let note = format!(
        "converged in {} iterations, max residual {:.3e}",
        sol.iterations, sol.residual
    );
    if sol.residual > tol {
        return Err(Error::SolverDiverged {
            iterations: sol.iterations,
            residual: sol.residual,
        });
    }
    Ok(Report {
        status: 0,
        body: pretty(&format::complex_to_json(&sol.complex)),
        note: Some(note),
    })
}

fn parse_shape(z: &str) -> Result<AnyComplex> {
    if let Some((re, im)) = z.split_once(',') {
        let num = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("shape `{z}`: {e}")))
        };
        let z = Complex64::new(num(re)?, num(im)?);
        return Ok(AnyComplex::Float(census::hyperbolic_example(&z)?));
    }
    let z: GaussRat = z.parse()?;
    Ok(AnyComplex::Exact(census::hyperbolic_example(&z)?))
}

fn generic_single() -> Result<DecoratedComplex<GaussRat>> {
    let m = MinimalCoords::new(
        GaussRat::from_ints(2, 1),
        GaussRat::from_fracs(1, 2, -1, 1),
        GaussRat::from_ints(-1, 3),
        GaussRat::from_fracs(3, 4, 1, 2),
    )?;
    census::single_decoration(&m)
}

fn example(which: &ExampleKind, backend: BackendArg) -> Result<Report> {
    let c = match which {
        ExampleKind::Hyperbolic { z } => parse_shape(z)?,
        ExampleKind::Cr => AnyComplex::Exact(census::cr_example()),
        ExampleKind::Figure8 => AnyComplex::Float(census::figure_eight_geometric()),
        ExampleKind::Whitehead => AnyComplex::Exact(census::whitehead_geometric()),
        ExampleKind::Single => AnyComplex::Exact(generic_single()?),
    };
    let c = match (c, backend) {
        (AnyComplex::Float(_), BackendArg::Exact) => {
            return Err(Error::MixedBackend("this example only exists in floating point".into()))
        }
        (AnyComplex::Exact(dc), BackendArg::Float) => AnyComplex::Float(float_flags(&dc)?),
        (c, _) => c,
    };
    Ok(Report::ok(pretty(&dispatch!(&c, dc => format::complex_flags_to_json(dc)))))
}

fn float_flags(dc: &DecoratedComplex<GaussRat>) -> Result<DecoratedComplex<Complex64>> {
    match dc.flags() {
        Some(fs) => {
            let flags = fs
                .iter()
                .map(|t| t.clone().map(|f| f.map_scalars(|z| z.to_complex())))
                .collect();
            DecoratedComplex::from_flags(dc.triangulation().clone(), flags)
        }
        None => to_float(dc),
    }
}

fn try_run(cmd: &Command) -> Result<Report> {
    let as_json = cmd.json;
    let tol = cmd.tolerance;
    let input = |p: &Path| read_input(p, cmd.backend);
    match &cmd.verb {
        Verb::Coords { input: p } => Ok(Report::ok(dispatch!(&input(p)?, dc => coords_report(dc, as_json)))),
        Verb::Dualize { input: p } => {
            let body = dispatch!(&input(p)?, dc => pretty(&format::complex_flags_to_json(&dc.dualize()?)));
            Ok(Report::ok(body))
        }
        Verb::Conjugate { input: p } => {
            let body = dispatch!(&input(p)?, dc => pretty(&format::complex_flags_to_json(&dc.conjugate())));
            Ok(Report::ok(body))
        }
        Verb::Check { input: p } => Ok(dispatch!(&input(p)?, dc => check_report(&check(dc), tol, as_json))),
        Verb::Beta { input: p } => Ok(Report::ok(dispatch!(&input(p)?, dc => beta_report(dc, as_json)?))),
        Verb::Volume { input: p } => Ok(Report::ok(dispatch!(&input(p)?, dc => volume_report(dc, as_json)?))),
        Verb::Defect { input: p } => Ok(Report::ok(dispatch!(&input(p)?, dc => defect_report(dc, as_json)?))),
        Verb::Solve { input: p } => match input(p)? {
            AnyComplex::Float(dc) => solve_report(&dc, tol),
            AnyComplex::Exact(dc) => solve_report(&to_float(&dc)?, tol),
        },
        Verb::Example { which } => example(which, cmd.backend),
    }
}

/// Run a command without touching standard output or `-o`.
pub fn run(cmd: &Command) -> Report {
    try_run(cmd).unwrap_or_else(|e| Report::from_error(&e))
}

/// Run a command, write its body to `-o` or standard output and its note to
/// standard error, and return the exit status.
pub fn execute(cmd: &Command) -> u8 {
    let report = run(cmd);
    if let Some(note) = &report.note {
        eprintln!("{note}");
    }
    if report.body.is_empty() {
        return report.status;
    }
    match &cmd.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &report.body) {
                eprintln!("error: {}: {e}", path.display());
                return 1;
            }
        }
        None => print!("{}", report.body),
    }
    report.status
}
