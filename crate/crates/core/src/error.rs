use thiserror::Error;

use crate::space::Violation;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("cannot parse scalar `{0}`")]
pub struct ScalarParseError(pub String);

/// A matrix that failed the metric axioms, or that was structurally unusable.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("{labels} labels given for {points} points")]
    LabelCount { labels: usize, points: usize },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("matrix mixes exact and floating-point entries")]
    MixedModes,
    #[error("metric axioms violated: {}", summarize(.0))]
    Axioms(Vec<Violation>),
}

fn summarize(v: &[Violation]) -> String {
    let shown: Vec<String> = v.iter().take(5).map(|x| x.to_string()).collect();
    if v.len() > 5 {
        format!("{} (+{} more)", shown.join("; "), v.len() - 5)
    } else {
        shown.join("; ")
    }
}

impl SpaceError {
    pub fn violations(&self) -> &[Violation] {
        match self {
            SpaceError::Axioms(v) => v,
            _ => &[],
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BetweennessError {
    #[error("point index {index} out of range for a space of {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("indices must be distinct")]
    RepeatedIndex,
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("expected a 4-point space, got {0} points")]
    WrongCardinality(usize),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected: no path between `{0}` and `{1}`")]
    DisconnectedGraph(String, String),
    #[error("self-loop at `{0}`")]
    Loop(String),
    #[error("parallel edge between `{0}` and `{1}`")]
    ParallelEdge(String, String),
    #[error("negative weight on edge `{0}`-`{1}`")]
    NegativeWeight(String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum UnionError {
    #[error("part {0} is not ultrametric")]
    NotUltrametric(usize),
    #[error("glued space is not ultrametric (internal error)")]
    ResultNotUltrametric,
    #[error("r0 = {r0} is too small: needs r0 > 0 and r0 >= {required}")]
    R0TooSmall { r0: String, required: String },
    #[error("eps1 = {eps1} does not exceed the connectivity threshold {threshold}")]
    EpsilonTooSmall { eps1: String, threshold: String },
    #[error("bad separators: {0}")]
    BadSeparators(String),
    #[error("part {0} is not a pseudo-linear quadruple")]
    NotPseudolinear(usize),
    #[error("parts {0} and {1} are isometric")]
    IsometricDuplicate(usize, usize),
    #[error("duplicate sample point {0}")]
    DuplicatePoint(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeometryError {
    #[error("degenerate triangle (collinear vertices)")]
    DegenerateTriangle,
    #[error("sides {0:?} do not form a triangle")]
    InvalidTriangle([f64; 3]),
    #[error("the origin is not allowed here")]
    OriginNotAllowed,
    #[error("angle {0} outside the admissible range")]
    AlphaOutOfRange(f64),
    #[error("distance must be positive")]
    NonpositiveDistance,
    #[error("length {0} outside (0, 1)")]
    LengthOutOfRange(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ClassError {
    #[error("family is empty")]
    EmptyFamily,
    #[error("relation is not transitive at ({0}, {1}, {2})")]
    NotTransitive(usize, usize, usize),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
}
