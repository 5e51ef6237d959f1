//! Finite metric spaces: validation, constructors and classification.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::embed;
use crate::error::SpaceError;
use crate::scalar::{Mode, Scalar, DEFAULT_TOL};

/// One failed metric axiom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    Asymmetry {
        i: usize,
        j: usize,
    },
    NonzeroDiagonal {
        i: usize,
    },
    NonpositiveOffDiagonal {
        i: usize,
        j: usize,
    },
    /// `d(i,k) > d(i,j) + d(j,k)`.
    TriangleViolation {
        i: usize,
        j: usize,
        k: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Asymmetry { i, j } => write!(f, "d({i},{j}) != d({j},{i})"),
            Violation::NonzeroDiagonal { i } => write!(f, "d({i},{i}) != 0"),
            Violation::NonpositiveOffDiagonal { i, j } => write!(f, "d({i},{j}) <= 0"),
            Violation::TriangleViolation { i, j, k } => {
                write!(f, "d({i},{k}) > d({i},{j}) + d({j},{k})")
            }
        }
    }
}

/// Labeled points with a validated distance matrix.
///
/// Immutable after construction. In float mode, all comparisons made on
/// behalf of this space use [`FiniteMetricSpace::tol`].
#[derive(Debug, Clone)]
pub struct FiniteMetricSpace {
    labels: Vec<String>,
    d: Vec<Scalar>,
    n: usize,
    mode: Mode,
    tol: f64,
}

/// Every axiom violation of a square matrix. Empty means the matrix is a metric.
pub fn axiom_violations(matrix: &[Vec<Scalar>], tol: f64) -> Vec<Violation> {
    let n = matrix.len();
    let mut out = Vec::new();
    for i in 0..n {
        if !matrix[i][i].is_zero_tol(tol) {
            out.push(Violation::NonzeroDiagonal { i });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if !matrix[i][j].eq_tol(&matrix[j][i], tol) {
                out.push(Violation::Asymmetry { i, j });
            }
            if !matrix[i][j].is_positive_tol(tol) {
                out.push(Violation::NonpositiveOffDiagonal { i, j });
            }
        }
    }
    for i in 0..n {
        for k in i + 1..n {
            for j in 0..n {
                if j == i || j == k {
                    continue;
                }
                let via = &matrix[i][j] + &matrix[j][k];
                if !matrix[i][k].le_tol(&via, tol) {
                    out.push(Violation::TriangleViolation { i, j, k });
                }
            }
        }
    }
    out
}

/// Mode shared by every entry, or `None` when exact and float entries mix.
/// An empty matrix counts as exact.
pub fn matrix_mode(matrix: &[Vec<Scalar>]) -> Option<Mode> {
    let mut mode = None;
    for x in matrix.iter().flatten() {
        match mode {
            None => mode = Some(x.mode()),
            Some(m) if m != x.mode() => return None,
            _ => {}
        }
    }
    Some(mode.unwrap_or(Mode::Exact))
}

/// Converts every entry to float if any entry is a float.
pub fn unify_modes(matrix: &mut [Vec<Scalar>]) -> Mode {
    let any_float = matrix.iter().flatten().any(|x| !x.is_exact());
    let mode = if any_float { Mode::Float } else { Mode::Exact };
    if any_float {
        for x in matrix.iter_mut().flatten() {
            *x = x.to_mode(Mode::Float);
        }
    }
    mode
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

impl FiniteMetricSpace {
    /// Validates `matrix` against the metric axioms.
    ///
    /// `labels = None` names the points `x0, x1, ...`. On failure the error
    /// lists every violated axiom with its indices.
    pub fn new(matrix: Vec<Vec<Scalar>>, labels: Option<Vec<String>>) -> Result<Self, SpaceError> {
        Self::with_tolerance(matrix, labels, DEFAULT_TOL)
    }

    pub fn with_tolerance(matrix: Vec<Vec<Scalar>>, labels: Option<Vec<String>>, tol: f64) -> Result<Self, SpaceError> {
        let n = matrix.len();
        for (row, r) in matrix.iter().enumerate() {
            if r.len() != n {
                return Err(SpaceError::NotSquare { row, len: r.len(), expected: n });
            }
        }
        let labels = labels.unwrap_or_else(|| default_labels(n));
        if labels.len() != n {
            return Err(SpaceError::LabelCount { labels: labels.len(), points: n });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(SpaceError::DuplicateLabel(l.clone()));
            }
        }
        let mode = matrix_mode(&matrix).ok_or(SpaceError::MixedModes)?;
        let violations = axiom_violations(&matrix, tol);
        if !violations.is_empty() {
            return Err(SpaceError::Axioms(violations));
        }
        Ok(Self::from_parts(labels, matrix, mode, tol))
    }

    /// Like [`FiniteMetricSpace::new`] but converts a mixed matrix to float
    /// instead of rejecting it.
    pub fn new_unified(
        mut matrix: Vec<Vec<Scalar>>,
        labels: Option<Vec<String>>,
        tol: f64,
    ) -> Result<Self, SpaceError> {
        unify_modes(&mut matrix);
        Self::with_tolerance(matrix, labels, tol)
    }

    fn from_parts(labels: Vec<String>, matrix: Vec<Vec<Scalar>>, mode: Mode, tol: f64) -> Self {
        let n = matrix.len();
        let d = matrix.into_iter().flatten().collect();
        FiniteMetricSpace { labels, d, n, mode, tol }
    }

    pub fn empty() -> Self {
        Self::from_parts(Vec::new(), Vec::new(), Mode::Exact, DEFAULT_TOL)
    }

    pub fn point() -> Self {
        Self::from_parts(vec!["x0".into()], vec![vec![Scalar::zero()]], Mode::Exact, DEFAULT_TOL)
    }

    /// Two points at distance `d`.
    pub fn pair(d: Scalar) -> Result<Self, SpaceError> {
        let z = Scalar::zero().to_mode(d.mode());
        Self::new(vec![vec![z.clone(), d.clone()], vec![d, z]], None)
    }

    /// Three points with the given pairwise distances.
    pub fn triple(d01: Scalar, d02: Scalar, d12: Scalar) -> Result<Self, SpaceError> {
        let z = Scalar::zero();
        Self::new_unified(
            vec![vec![z.clone(), d01.clone(), d02.clone()], vec![d01, z.clone(), d12.clone()], vec![d02, d12, z]],
            None,
            DEFAULT_TOL,
        )
    }

    /// `n` points, all pairwise distances equal to `side`.
    pub fn equilateral(n: usize, side: Scalar) -> Result<Self, SpaceError> {
        let m = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Scalar::zero().to_mode(side.mode()) } else { side.clone() }).collect())
            .collect();
        Self::new(m, None)
    }

    /// Points of the real line with the induced metric. Coordinates must be distinct.
    pub fn from_line(coords: &[Scalar]) -> Result<Self, SpaceError> {
        let m = coords.iter().map(|a| coords.iter().map(|b| (a - b).abs()).collect()).collect();
        Self::new_unified(m, None, DEFAULT_TOL)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn set_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    #[inline]
    pub fn d(&self, i: usize, j: usize) -> &Scalar {
        &self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn matrix(&self) -> Vec<Vec<Scalar>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Largest pairwise distance; zero for spaces with fewer than two points.
    pub fn diam(&self) -> Scalar {
        let mut best = Scalar::zero().to_mode(self.mode);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if best.lt_tol(self.d(i, j), 0.0) {
                    best = self.d(i, j).clone();
                }
            }
        }
        best
    }

    /// The subspace on `idx` (in that order).
    pub fn subspace(&self, idx: &[usize]) -> Self {
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let m = idx.iter().map(|&i| idx.iter().map(|&j| self.d(i, j).clone()).collect()).collect();
        Self::from_parts(labels, m, self.mode, self.tol)
    }

    /// The subspace with point `p` removed.
    pub fn without(&self, p: usize) -> Self {
        let idx: Vec<usize> = (0..self.n).filter(|&i| i != p).collect();
        self.subspace(&idx)
    }

    /// Same points, new labels.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self, SpaceError> {
        Self::with_tolerance(self.matrix(), Some(labels), self.tol)
    }

    /// Comparison tolerance to use between this space and `other`.
    pub fn joint_tol(&self, other: &FiniteMetricSpace) -> f64 {
        self.tol.max(other.tol)
    }

    /// Multiset of all off-diagonal distances over unordered pairs, sorted.
    /// Only meaningful as an isometry pre-filter.
    pub fn sorted_distances(&self) -> Vec<Scalar> {
        let mut v: Vec<Scalar> =
            (0..self.n).flat_map(|i| (i + 1..self.n).map(move |j| (i, j))).map(|(i, j)| self.d(i, j).clone()).collect();
        let tol = self.tol;
        v.sort_by(|a, b| a.cmp_tol(b, tol));
        v
    }

    pub fn is_ultrametric(&self) -> bool {
        self.first_ultrametric_violation().is_none()
    }

    /// First `(i, j, k)` with `d(i,j) > max(d(i,k), d(k,j))`.
    pub fn first_ultrametric_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    if k == i || k == j {
                        continue;
                    }
                    let m = self.d(i, k).max_tol(self.d(k, j), self.tol);
                    if !self.d(i, j).le_tol(m, self.tol) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

/// Flags reported by [`classify_space`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub ultrametric: bool,
    pub discrete: bool,
    pub strongly_rigid: bool,
    pub homogeneous: bool,
}

/// Ultrametric (strong triangle inequality), discrete (all nonzero distances
/// equal 1), strongly rigid (nonzero distances over unordered pairs pairwise
/// distinct) and homogeneous (isometry group transitive on points).
pub fn classify_space(x: &FiniteMetricSpace) -> Classification {
    let tol = x.tol();
    let one = Scalar::int(1);
    let n = x.len();
    let discrete = (0..n).all(|i| (i + 1..n).all(|j| x.d(i, j).eq_tol(&one, tol)));
    let dists = x.sorted_distances();
    let strongly_rigid = dists.windows(2).all(|w| !w[0].eq_tol(&w[1], tol));
    // transitive iff point 0 can be sent to every point
    let homogeneous = (0..n).all(|j| embed::pinned_isometry_exists(x, 0, j));
    Classification { ultrametric: x.is_ultrametric(), discrete, strongly_rigid, homogeneous }
}
