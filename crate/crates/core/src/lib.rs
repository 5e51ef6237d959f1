//! Finite metric spaces, isometric embeddings, and explicit minimal universal
//! constructions.
//!
//! Distances are [`Scalar`]s: exact rationals for combinatorial work, binary64
//! for geometry. The modules cover validation and classification of spaces
//! ([`space`]), embedding search ([`embed`]), betweenness ([`betweenness`]),
//! graph metrization ([`graph`]), disjoint unions ([`union`]), rays in the
//! plane ([`rays`]), the spaces of [`f2`], and universality over finite
//! families ([`classes`]).

#![allow(clippy::needless_range_loop)]

pub mod betweenness;
pub mod classes;
pub mod embed;
pub mod error;
pub mod f2;
pub mod graph;
pub mod io;
pub mod rays;
pub mod scalar;
pub mod space;
pub mod union;

pub use embed::{compare, find_embeddings, Comparability, PointMap};
pub use error::*;
pub use scalar::{Mode, Scalar, DEFAULT_TOL};
pub use space::{classify_space, Classification, FiniteMetricSpace, Violation};
