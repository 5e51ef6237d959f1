//! JSON file formats.
//!
//! Numbers in a matrix or weight list are read as follows: JSON integers are
//! neutral, `"p/q"` strings are exact, any other JSON number is binary64.
//! A list with a non-integer number is float as a whole and may not also
//! contain strings; otherwise it is exact.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::error::{GraphError, SpaceError, UnionError};
use crate::graph::WeightedGraph;
use crate::scalar::Scalar;
use crate::space::FiniteMetricSpace;
use crate::union::{Provenance, UnionSpace};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Union(#[from] UnionError),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Invalid(msg.into()))
}

enum Raw {
    Int(i64),
    Exact(Scalar),
    Float(f64),
}

fn raw(v: &Value) -> Result<Raw, FormatError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Raw::Int(i))
            } else {
                match n.as_f64() {
                    Some(x) => Ok(Raw::Float(x)),
                    None => invalid(format!("number {n} out of range")),
                }
            }
        }
        Value::String(s) => match s.parse::<Scalar>() {
            Ok(x @ Scalar::Exact(_)) => Ok(Raw::Exact(x)),
            _ => invalid(format!("`{s}` is not a rational of the form p/q")),
        },
        other => invalid(format!("expected a number or \"p/q\" string, got {other}")),
    }
}

/// Reads a list of numbers under the mode rules above.
pub fn parse_scalars(values: &[&Value]) -> Result<Vec<Scalar>, FormatError> {
    let raws = values.iter().map(|v| raw(v)).collect::<Result<Vec<_>, _>>()?;
    let has_float = raws.iter().any(|r| matches!(r, Raw::Float(_)));
    let has_string = raws.iter().any(|r| matches!(r, Raw::Exact(_)));
    if has_float && has_string {
        return Err(SpaceError::MixedModes.into());
    }
    Ok(raws
        .into_iter()
        .map(|r| match r {
            Raw::Int(i) if has_float => Scalar::float(i as f64),
            Raw::Int(i) => Scalar::int(i),
            Raw::Exact(x) => x,
            Raw::Float(x) => Scalar::float(x),
        })
        .collect())
}

/// A single number, `"p/q"` string or integer.
pub fn parse_scalar(v: &Value) -> Result<Scalar, FormatError> {
    Ok(parse_scalars(&[v])?.remove(0))
}

fn field<'a>(obj: &'a Value, name: &str) -> Result<&'a Value, FormatError> {
    obj.get(name).ok_or_else(|| FormatError::Invalid(format!("missing field `{name}`")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, FormatError> {
    v.as_array().ok_or_else(|| FormatError::Invalid(format!("`{what}` must be an array")))
}

fn strings(v: &Value, what: &str) -> Result<Vec<String>, FormatError> {
    array(v, what)?
        .iter()
        .map(|x| {
            x.as_str().map(str::to_string).ok_or_else(|| FormatError::Invalid(format!("`{what}` must hold strings")))
        })
        .collect()
}

/// Reads `{"labels": [...], "matrix": [[...], ...]}`; `labels` is optional.
pub fn space_from_value(v: &Value, tol: f64) -> Result<FiniteMetricSpace, FormatError> {
    let rows = array(field(v, "matrix")?, "matrix")?;
    let n = rows.len();
    let mut cells = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let r = array(r, "matrix row")?;
        if r.len() != n {
            return Err(SpaceError::NotSquare { row: i, len: r.len(), expected: n }.into());
        }
        cells.extend(r.iter());
    }
    let flat = parse_scalars(&cells)?;
    let matrix: Vec<Vec<Scalar>> = if n == 0 { Vec::new() } else { flat.chunks(n).map(<[Scalar]>::to_vec).collect() };
    let labels = match v.get("labels") {
        Some(l) => Some(strings(l, "labels")?),
        None => None,
    };
    Ok(FiniteMetricSpace::with_tolerance(matrix, labels, tol)?)
}

pub fn parse_space(text: &str, tol: f64) -> Result<FiniteMetricSpace, FormatError> {
    space_from_value(&serde_json::from_str(text)?, tol)
}

pub fn matrix_to_value(m: &[Vec<Scalar>]) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(Scalar::to_json).collect())).collect())
}

pub fn space_to_value(x: &FiniteMetricSpace) -> Value {
    json!({ "labels": x.labels(), "matrix": matrix_to_value(&x.matrix()) })
}

/// Reads a JSON array of spaces.
pub fn parse_family(text: &str, tol: f64) -> Result<Vec<FiniteMetricSpace>, FormatError> {
    let v: Value = serde_json::from_str(text)?;
    array(&v, "family")?.iter().map(|s| space_from_value(s, tol)).collect()
}

/// Reads `{"vertices": [...], "edges": [[u, v, w], ...]}`. Endpoints are
/// vertex names or indices.
pub fn graph_from_value(v: &Value, tol: f64) -> Result<WeightedGraph, FormatError> {
    let vertices = strings(field(v, "vertices")?, "vertices")?;
    let edges = array(field(v, "edges")?, "edges")?;
    let mut ends = Vec::with_capacity(edges.len());
    let mut weights = Vec::with_capacity(edges.len());
    for e in edges {
        let e = array(e, "edge")?;
        if e.len() != 3 {
            return invalid("each edge must be [u, v, weight]");
        }
        let end = |x: &Value| -> Result<usize, FormatError> {
            match x {
                Value::String(s) => {
                    vertices.iter().position(|v| v == s).ok_or_else(|| GraphError::UnknownVertex(s.clone()).into())
                }
                Value::Number(n) => match n.as_u64() {
                    Some(i) if (i as usize) < vertices.len() => Ok(i as usize),
                    _ => Err(GraphError::UnknownVertex(n.to_string()).into()),
                },
                _ => invalid("edge endpoints must be names or indices"),
            }
        };
        ends.push((end(&e[0])?, end(&e[1])?));
        weights.push(&e[2]);
    }
    let weights = parse_scalars(&weights)?;
    let edges = ends.into_iter().zip(weights).map(|((u, v), w)| (u, v, w)).collect();
    Ok(WeightedGraph::new(vertices, edges)?.with_tol(tol))
}

pub fn parse_graph(text: &str, tol: f64) -> Result<WeightedGraph, FormatError> {
    graph_from_value(&serde_json::from_str(text)?, tol)
}

/// Reads `{"sides": [a, b, c]}` as binary64 values.
pub fn parse_sides(text: &str) -> Result<[f64; 3], FormatError> {
    let v: Value = serde_json::from_str(text)?;
    let s = array(field(&v, "sides")?, "sides")?;
    if s.len() != 3 {
        return invalid("`sides` must have three entries");
    }
    let mut out = [0.0; 3];
    for (o, x) in out.iter_mut().zip(s) {
        *o = parse_scalar(x)?.to_f64();
    }
    Ok(out)
}

/// A union as the space object plus `"parts"` and `"provenance"`.
pub fn union_to_value(u: &UnionSpace) -> Value {
    let mut obj = match space_to_value(&u.space) {
        Value::Object(m) => m,
        _ => Map::new(),
    };
    obj.insert("parts".into(), json!(u.parts));
    obj.insert("provenance".into(), json!(u.provenance));
    Value::Object(obj)
}

pub fn parse_union(text: &str, tol: f64) -> Result<UnionSpace, FormatError> {
    let v: Value = serde_json::from_str(text)?;
    let space = space_from_value(&v, tol)?;
    let parts: Vec<Vec<usize>> = serde_json::from_value(field(&v, "parts")?.clone())?;
    let provenance = match v.get("provenance") {
        Some(p) => Provenance {
            builder: p.get("builder").and_then(Value::as_str).unwrap_or("unknown").to_string(),
            params: p.get("params").cloned().unwrap_or(Value::Null),
        },
        None => Provenance { builder: "unknown".into(), params: Value::Null },
    };
    Ok(UnionSpace::new(space, parts, provenance)?)
}
