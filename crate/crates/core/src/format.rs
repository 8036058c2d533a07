//! JSON encoding of triangulations, decorations and formal sums.
//!
//! Exact scalars are strings `"a/b"` or `"a/b+c/d*i"`; floats are pairs
//! `[re, im]`. A file holds
//!
//! ```json
//! {"tetrahedra": 1,
//!  "pairings": [{"tetA": 0, "faceA": [1,2,3], "tetB": 1, "faceB": [1,3,2],
//!                "map": [[1,1],[2,3],[3,2]]}],
//!  "decoration": {"mode": "coords", "data": [{"edges": {"12": "2/1"}, "faces": {}}]}}
//! ```
//!
//! Tetrahedra are numbered from 0 and vertices are labelled 1..4. In
//! `coords` mode every entry must give the edges `12`, `21`, `34`, `43`;
//! any further edges or faces are checked against them. In `flags` mode
//! every entry is a list of four `{"point": [...], "line": [...]}` objects.

use std::array;
use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complex::{DecoratedComplex, IdealTriangulation, Pairing};
use crate::error::{Error, Result};
use crate::flags::Flag;
use crate::numerics::{Backend, GaussRat, Scalar};
use crate::prebloch::FormalSum;
use crate::tetra::{complete_from_minimal, face_slot, MinimalCoords, TetraCoords, EDGES, FACES, RELATION_TOL};

/// A scalar type with a JSON encoding.
pub trait Codec: Scalar {
    fn decode(v: &Value) -> Result<Self>;
    fn encode(&self) -> Value;

    /// Human-readable form for text reports.
    fn text(&self) -> String {
        self.to_string()
    }
}

impl Codec for GaussRat {
    fn decode(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            Value::Array(_) | Value::Number(_) => Err(Error::MixedBackend(format!(
                "float literal {v} in exact input"
            ))),
            _ => Err(Error::Parse(format!("expected a scalar, found {v}"))),
        }
    }

    fn encode(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl Codec for Complex64 {
    fn decode(v: &Value) -> Result<Self> {
        let num = |x: &Value| {
            x.as_f64()
                .ok_or_else(|| Error::Parse(format!("expected a number, found {x}")))
        };
        match v {
            Value::String(s) => Ok(s.parse::<GaussRat>()?.to_complex()),
            Value::Number(_) => Ok(Complex64::new(num(v)?, 0.0)),
            Value::Array(a) if a.len() == 2 => Ok(Complex64::new(num(&a[0])?, num(&a[1])?)),
            _ => Err(Error::Parse(format!("expected a scalar, found {v}"))),
        }
    }

    fn encode(&self) -> Value {
        json!([self.re, self.im])
    }

    fn text(&self) -> String {
        // adding 0.0 turns -0.0 into 0.0
        Complex64::new(self.re + 0.0, self.im + 0.0).to_string()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct PairingDoc {
    #[serde(rename = "tetA")]
    tet_a: usize,
    #[serde(rename = "faceA")]
    face_a: [u8; 3],
    #[serde(rename = "tetB")]
    tet_b: usize,
    #[serde(rename = "faceB")]
    face_b: [u8; 3],
    map: Vec<[u8; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct DecorationDoc {
    mode: String,
    data: Vec<Value>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FileDoc {
    tetrahedra: usize,
    #[serde(default)]
    pairings: Vec<PairingDoc>,
    decoration: DecorationDoc,
}

/// Which backend to load a file into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendChoice {
    Exact,
    Float,
    /// Exact when every scalar is a string, float when every scalar is a
    /// pair.
    Auto,
}

/// A decorated complex in whichever backend its file selected.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyComplex {
    Exact(DecoratedComplex<GaussRat>),
    Float(DecoratedComplex<Complex64>),
}

impl AnyComplex {
    pub fn backend(&self) -> Backend {
        match self {
            AnyComplex::Exact(_) => Backend::Exact,
            AnyComplex::Float(_) => Backend::Float,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyComplex::Exact(dc) => complex_to_json(dc),
            AnyComplex::Float(dc) => complex_to_json(dc),
        }
    }
}

fn collect_scalars<'a>(v: &'a Value, out: &mut Vec<&'a Value>) {
    match v {
        Value::String(_) | Value::Number(_) => out.push(v),
        Value::Array(a) if a.len() == 2 && a.iter().all(Value::is_number) => out.push(v),
        Value::Array(a) => a.iter().for_each(|x| collect_scalars(x, out)),
        Value::Object(m) => m.values().for_each(|x| collect_scalars(x, out)),
        _ => {}
    }
}

fn detect_backend(doc: &FileDoc) -> Result<Backend> {
    let mut scalars = Vec::new();
    for d in &doc.decoration.data {
        collect_scalars(d, &mut scalars);
    }
    let exact = scalars.iter().filter(|v| v.is_string()).count();
    match (exact, scalars.len() - exact) {
        (_, 0) => Ok(Backend::Exact),
        (0, _) => Ok(Backend::Float),
        (e, f) => Err(Error::MixedBackend(format!(
            "{e} exact and {f} float literals in one file"
        ))),
    }
}

fn parse_doc(text: &str) -> Result<FileDoc> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn triangulation_from_doc(doc: &FileDoc) -> Result<IdealTriangulation> {
    let mut pairings = Vec::with_capacity(doc.pairings.len());
    for (index, p) in doc.pairings.iter().enumerate() {
        let map: Vec<(u8, u8)> = p.map.iter().map(|[a, b]| (*a, *b)).collect();
        let pairing = Pairing::from_map(index, p.tet_a, p.face_a, p.tet_b, &map)?;
        if pairing.face_b != p.face_b {
            return Err(Error::MalformedPairing {
                index,
                reason: format!(
                    "faceB {:?} is not the image {:?} of faceA under the map",
                    p.face_b, pairing.face_b
                ),
            });
        }
        pairings.push(pairing);
    }
    IdealTriangulation::new(doc.tetrahedra, pairings)
}

fn edge_key(key: &str) -> Result<(u8, u8)> {
    let d: Vec<u8> = key.bytes().map(|b| b.wrapping_sub(b'0')).collect();
    match d.as_slice() {
        [i, j] if EDGES.contains(&(*i, *j)) => Ok((*i, *j)),
        _ => Err(Error::Parse(format!("invalid edge key `{key}`"))),
    }
}

fn face_key(key: &str) -> Result<[u8; 3]> {
    let d: Vec<u8> = key.bytes().map(|b| b.wrapping_sub(b'0')).collect();
    match d.as_slice() {
        [a, b, c] => {
            face_slot([*a, *b, *c]).map_err(|_| Error::Parse(format!("invalid face key `{key}`")))?;
            Ok([*a, *b, *c])
        }
        _ => Err(Error::Parse(format!("invalid face key `{key}`"))),
    }
}

fn decode_map<S: Codec>(v: Option<&Value>) -> Result<BTreeMap<String, S>> {
    let Some(v) = v else {
        return Ok(BTreeMap::new());
    };
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("expected an object, found {v}")))?;
    obj.iter()
        .map(|(k, x)| Ok((k.clone(), S::decode(x)?)))
        .collect()
}

/// Decode one `{"edges": ..., "faces": ...}` entry.
pub fn coords_from_json<S: Codec>(v: &Value) -> Result<TetraCoords<S>> {
    let edges: BTreeMap<String, S> = decode_map(v.get("edges"))?;
    let faces: BTreeMap<String, S> = decode_map(v.get("faces"))?;
    let get = |k: &str| {
        edges
            .get(k)
            .cloned()
            .ok_or_else(|| Error::Parse(format!("missing edge `{k}`")))
    };
    let m = MinimalCoords::new(get("12")?, get("21")?, get("34")?, get("43")?)?;
    let c = complete_from_minimal(&m)?;
    for (k, z) in &edges {
        let (i, j) = edge_key(k)?;
        if !c.z(i, j).close_to(z, RELATION_TOL) {
            return Err(Error::InconsistentCoords(format!(
                "edge {k} = {z} disagrees with the minimal coordinates ({})",
                c.z(i, j)
            )));
        }
    }
    for (k, z) in &faces {
        let f = face_key(k)?;
        let expected = c.face(f)?;
        if !expected.close_to(z, RELATION_TOL) {
            return Err(Error::InconsistentCoords(format!(
                "face {k} = {z} disagrees with the edge coordinates ({expected})"
            )));
        }
    }
    Ok(c)
}

pub fn coords_to_json<S: Codec>(c: &TetraCoords<S>) -> Value {
    let edges: BTreeMap<String, Value> = EDGES
        .iter()
        .map(|&(i, j)| (format!("{i}{j}"), c.z(i, j).encode()))
        .collect();
    let faces: BTreeMap<String, Value> = FACES
        .iter()
        .zip(c.faces())
        .map(|(f, z)| (format!("{}{}{}", f[0], f[1], f[2]), z.encode()))
        .collect();
    json!({ "edges": edges, "faces": faces })
}

fn vec3_from_json<S: Codec>(v: Option<&Value>) -> Result<[S; 3]> {
    let a = v
        .and_then(Value::as_array)
        .filter(|a| a.len() == 3)
        .ok_or_else(|| Error::Parse("expected a list of three scalars".into()))?;
    let parsed: Vec<S> = a.iter().map(S::decode).collect::<Result<_>>()?;
    Ok(array::from_fn(|n| parsed[n].clone()))
}

/// Decode a list of four `{"point": [...], "line": [...]}` objects.
pub fn flags_from_json<S: Codec>(v: &Value) -> Result<[Flag<S>; 4]> {
    let a = v
        .as_array()
        .filter(|a| a.len() == 4)
        .ok_or_else(|| Error::Parse("expected a list of four flags".into()))?;
    let flags: Vec<Flag<S>> = a
        .iter()
        .map(|f| Flag::new(vec3_from_json(f.get("point"))?, vec3_from_json(f.get("line"))?))
        .collect::<Result<_>>()?;
    Ok(flags.try_into().expect("four flags"))
}

pub fn flags_to_json<S: Codec>(t: &[Flag<S>; 4]) -> Value {
    Value::Array(
        t.iter()
            .map(|f| {
                json!({
                    "point": f.point.iter().map(Codec::encode).collect::<Vec<_>>(),
                    "line": f.line.iter().map(Codec::encode).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn complex_from_doc<S: Codec>(doc: &FileDoc) -> Result<DecoratedComplex<S>> {
    let k = triangulation_from_doc(doc)?;
    let data = &doc.decoration.data;
    if data.len() != doc.tetrahedra {
        return Err(Error::Parse(format!(
            "{} tetrahedra but {} decoration entries",
            doc.tetrahedra,
            data.len()
        )));
    }
    match doc.decoration.mode.as_str() {
        "coords" => {
            let coords = data
                .iter()
                .enumerate()
                .map(|(t, v)| coords_from_json(v).map_err(|e| e.at_tetrahedron(t)))
                .collect::<Result<_>>()?;
            DecoratedComplex::new(k, coords)
        }
        "flags" => {
            let flags = data
                .iter()
                .enumerate()
                .map(|(t, v)| flags_from_json(v).map_err(|e| e.at_tetrahedron(t)))
                .collect::<Result<_>>()?;
            DecoratedComplex::from_flags(k, flags)
        }
        other => Err(Error::Parse(format!("unknown decoration mode `{other}`"))),
    }
}

/// Parse a file in a fixed backend.
pub fn parse_complex<S: Codec>(text: &str) -> Result<DecoratedComplex<S>> {
    complex_from_doc(&parse_doc(text)?)
}

/// Parse a file, choosing the backend from `choice` and the literals.
pub fn parse_any(text: &str, choice: BackendChoice) -> Result<AnyComplex> {
    let doc = parse_doc(text)?;
    let backend = match choice {
        BackendChoice::Exact => Backend::Exact,
        BackendChoice::Float => Backend::Float,
        BackendChoice::Auto => detect_backend(&doc)?,
    };
    Ok(match backend {
        Backend::Exact => AnyComplex::Exact(complex_from_doc(&doc)?),
        Backend::Float => AnyComplex::Float(complex_from_doc(&doc)?),
    })
}

pub fn read_any(path: &std::path::Path, choice: BackendChoice) -> Result<AnyComplex> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_any(&text, choice)
}

fn triangulation_to_json(k: &IdealTriangulation) -> Vec<Value> {
    k.pairings()
        .iter()
        .map(|p| {
            json!({
                "tetA": p.tet_a,
                "faceA": p.face_a,
                "tetB": p.tet_b,
                "faceB": p.face_b,
                "map": p.map_pairs().map(|(a, b)| [a, b]),
            })
        })
        .collect()
}

fn file_json(k: &IdealTriangulation, mode: &str, data: Vec<Value>) -> Value {
    json!({
        "tetrahedra": k.num_tetrahedra(),
        "pairings": triangulation_to_json(k),
        "decoration": { "mode": mode, "data": data },
    })
}

/// Encode a decorated complex in `coords` mode with all sixteen values per
/// tetrahedron.
pub fn complex_to_json<S: Codec>(dc: &DecoratedComplex<S>) -> Value {
    file_json(
        dc.triangulation(),
        "coords",
        dc.coords().iter().map(coords_to_json).collect(),
    )
}

/// Encode in `flags` mode; falls back to `coords` without stored flags.
pub fn complex_flags_to_json<S: Codec>(dc: &DecoratedComplex<S>) -> Value {
    match dc.flags() {
        Some(fs) => file_json(dc.triangulation(), "flags", fs.iter().map(flags_to_json).collect()),
        None => complex_to_json(dc),
    }
}

pub fn formal_sum_to_json<S: Codec>(s: &FormalSum<S>) -> Value {
    Value::Array(
        s.iter()
            .map(|(c, g)| json!({ "coeff": c, "gen": g.encode() }))
            .collect(),
    )
}

pub fn formal_sum_from_json<S: Codec>(v: &Value) -> Result<FormalSum<S>> {
    let a = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected a list of terms".into()))?;
    let mut s = FormalSum::new();
    for t in a {
        let c = t
            .get("coeff")
            .and_then(Value::as_i64)
            .ok_or_else(|| Error::Parse(format!("missing integer coeff in {t}")))?;
        let g = S::decode(t.get("gen").ok_or_else(|| Error::Parse(format!("missing gen in {t}")))?)?;
        s.add_term(c, g)?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::census;

    #[test]
    fn exact_round_trip() {
        let dc = census::whitehead_geometric();
        let text = serde_json::to_string(&complex_to_json(&dc)).unwrap();
        let back: DecoratedComplex<GaussRat> = parse_complex(&text).unwrap();
        assert_eq!(back, dc);
        assert!(matches!(parse_any(&text, BackendChoice::Auto).unwrap(), AnyComplex::Exact(_)));
        assert!(matches!(parse_any(&text, BackendChoice::Float).unwrap(), AnyComplex::Float(_)));
    }

    #[test]
    fn float_round_trip() {
        let dc = census::figure_eight_geometric();
        let text = serde_json::to_string(&complex_to_json(&dc)).unwrap();
        let back = parse_any(&text, BackendChoice::Auto).unwrap();
        assert_eq!(back, AnyComplex::Float(dc));
        assert!(matches!(parse_any(&text, BackendChoice::Exact), Err(Error::MixedBackend(_))));
    }

    #[test]
    fn minimal_edges_suffice_and_extras_are_checked() {
        let text = r#"{"tetrahedra": 1, "pairings": [], "decoration": {"mode": "coords",
            "data": [{"edges": {"12": "2", "21": "3", "34": "5", "43": "7"}}]}}"#;
        let dc: DecoratedComplex<GaussRat> = parse_complex(text).unwrap();
        assert_eq!(dc.z(0, 1, 3), &GaussRat::from_i64(-1));
        let bad = text.replace(r#""43": "7""#, r#""43": "7", "13": "5""#);
        assert!(matches!(parse_complex::<GaussRat>(&bad), Err(Error::InconsistentCoords(_))));
        let missing = text.replace(r#", "43": "7""#, "");
        assert!(matches!(parse_complex::<GaussRat>(&missing), Err(Error::Parse(_))));
    }

    #[test]
    fn mixed_literals_are_rejected() {
        let text = r#"{"tetrahedra": 1, "pairings": [], "decoration": {"mode": "coords",
            "data": [{"edges": {"12": "2", "21": [3.0, 0.0], "34": "5", "43": "7"}}]}}"#;
        assert!(matches!(parse_any(text, BackendChoice::Auto), Err(Error::MixedBackend(_))));
        assert!(parse_any(text, BackendChoice::Float).is_ok());
    }

    #[test]
    fn pairing_map_must_match_face_b() {
        let text = r#"{"tetrahedra": 2, "pairings": [{"tetA": 0, "faceA": [1,2,3], "tetB": 1,
            "faceB": [1,2,3], "map": [[1,1],[2,3],[3,2]]}],
            "decoration": {"mode": "coords", "data": [
              {"edges": {"12": "2", "21": "3", "34": "5", "43": "7"}},
              {"edges": {"12": "2", "21": "3", "34": "5", "43": "7"}}]}}"#;
        assert!(matches!(parse_complex::<GaussRat>(text), Err(Error::MalformedPairing { index: 0, .. })));
    }

    #[test]
    fn flags_mode_round_trip() {
        let t = crate::tetra::hyperbolic_tuple(&GaussRat::from_ints(2, 1));
        let dc = DecoratedComplex::from_flags(census::single(), vec![t]).unwrap();
        let text = serde_json::to_string(&complex_flags_to_json(&dc)).unwrap();
        let back: DecoratedComplex<GaussRat> = parse_complex(&text).unwrap();
        assert_eq!(back, dc);
    }

    #[test]
    fn formal_sum_round_trip() {
        let s = FormalSum::from_terms([(2, GaussRat::from_ints(3, 1)), (-1, GaussRat::from_fracs(1, 2, 0, 1))]).unwrap();
        let back: FormalSum<GaussRat> = formal_sum_from_json(&formal_sum_to_json(&s)).unwrap();
        assert_eq!(back, s);
    }
}
