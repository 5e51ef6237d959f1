//! Disjoint unions of finite metric spaces.
//!
//! Every builder returns a [`UnionSpace`]: the glued space, the partition of
//! its points into parts, and a record of how it was made. The parts occupy
//! consecutive index ranges in input order, and point `k` of part `i` is
//! labeled `"{i}.{label}"`.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::betweenness::is_pseudolinear;
use crate::embed::{compare, find_embeddings, is_isometric, is_not_shifted, Comparability};
use crate::error::UnionError;
use crate::graph::{check_metrizability, WeightedGraph};
use crate::scalar::{Scalar, DEFAULT_TOL};
use crate::space::FiniteMetricSpace;

/// A point of a union, addressed by part and by index inside the part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TaggedPoint {
    pub part: usize,
    pub point: usize,
}

/// Which builder produced a union and with what parameters.
#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub builder: String,
    pub params: serde_json::Value,
}

#[derive(Debug, Clone)]
pub struct UnionSpace {
    pub space: FiniteMetricSpace,
    pub parts: Vec<Vec<usize>>,
    pub provenance: Provenance,
}

impl UnionSpace {
    /// Wraps a space with a partition, checking that `parts` are nonempty,
    /// disjoint and cover every point.
    pub fn new(space: FiniteMetricSpace, parts: Vec<Vec<usize>>, provenance: Provenance) -> Result<Self, UnionError> {
        let mut owner = vec![false; space.len()];
        for (i, p) in parts.iter().enumerate() {
            if p.is_empty() {
                return Err(UnionError::InvalidInput(format!("part {i} is empty")));
            }
            for &x in p {
                if x >= space.len() || owner[x] {
                    return Err(UnionError::InvalidInput(format!("point {x} is out of range or in two parts")));
                }
                owner[x] = true;
            }
        }
        if let Some(x) = owner.iter().position(|&o| !o) {
            return Err(UnionError::InvalidInput(format!("point {x} belongs to no part")));
        }
        Ok(UnionSpace { space, parts, provenance })
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// The subspace on part `i`.
    pub fn part_space(&self, i: usize) -> FiniteMetricSpace {
        self.space.subspace(&self.parts[i])
    }

    pub fn index_of(&self, p: TaggedPoint) -> Option<usize> {
        self.parts.get(p.part)?.get(p.point).copied()
    }

    pub fn tag_of(&self, idx: usize) -> Option<TaggedPoint> {
        self.parts
            .iter()
            .enumerate()
            .find_map(|(part, pts)| pts.iter().position(|&x| x == idx).map(|point| TaggedPoint { part, point }))
    }

    /// Part index of every point.
    pub fn part_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.space.len()];
        for (i, p) in self.parts.iter().enumerate() {
            for &x in p {
                out[x] = i;
            }
        }
        out
    }
}

fn contiguous_parts(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&n| {
            let p = (start..start + n).collect();
            start += n;
            p
        })
        .collect()
}

/// Lays the parts out block-diagonally and fills the off-diagonal blocks
/// with `cross(part_a, point_a, part_b, point_b)`.
fn assemble<F>(
    parts: &[&FiniteMetricSpace],
    tol: f64,
    cross: F,
) -> Result<(FiniteMetricSpace, Vec<Vec<usize>>), UnionError>
where
    F: Fn(usize, usize, usize, usize) -> Scalar,
{
    let sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
    let layout = contiguous_parts(&sizes);
    let mut tags = Vec::new();
    let mut labels = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        for k in 0..p.len() {
            tags.push((i, k));
            labels.push(format!("{i}.{}", p.label(k)));
        }
    }
    let m = tags
        .iter()
        .map(|&(a, i)| {
            tags.iter().map(|&(b, j)| if a == b { parts[a].d(i, j).clone() } else { cross(a, i, b, j) }).collect()
        })
        .collect();
    let space = FiniteMetricSpace::new_unified(m, Some(labels), tol)
        .map_err(|e| UnionError::Internal(format!("glued matrix is not a metric: {e}")))?;
    Ok((space, layout))
}

fn require_r0(r0: &Scalar, required: &Scalar, tol: f64) -> Result<(), UnionError> {
    if !r0.is_positive_tol(tol) || r0.lt_tol(required, tol) {
        return Err(UnionError::R0TooSmall { r0: r0.to_string(), required: required.to_string() });
    }
    Ok(())
}

/// Glues two ultrametric spaces so that `d(x0, y0) = r0`, with
/// `d(x, y) = max(d_X(x, x0), r0, d_Y(y0, y))` across. The result is
/// checked to be ultrametric before it is returned.
pub fn glue_ultrametric_pair(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    x0: usize,
    y0: usize,
    r0: &Scalar,
) -> Result<UnionSpace, UnionError> {
    if x0 >= x.len() || y0 >= y.len() {
        return Err(UnionError::InvalidInput("base point out of range".into()));
    }
    let tol = x.joint_tol(y);
    require_r0(r0, &Scalar::zero(), tol)?;
    if !x.is_ultrametric() {
        return Err(UnionError::NotUltrametric(0));
    }
    if !y.is_ultrametric() {
        return Err(UnionError::NotUltrametric(1));
    }
    let max3 = |a: &Scalar, b: &Scalar, c: &Scalar| a.max_tol(b, 0.0).max_tol(c, 0.0).clone();
    let (space, parts) = assemble(&[x, y], tol, |a, i, _, j| {
        if a == 0 {
            max3(x.d(i, x0), r0, y.d(y0, j))
        } else {
            max3(x.d(j, x0), r0, y.d(y0, i))
        }
    })?;
    if !space.is_ultrametric() {
        return Err(UnionError::ResultNotUltrametric);
    }
    let provenance = Provenance {
        builder: "glue_ultrametric_pair".into(),
        params: json!({ "x0": x0, "y0": y0, "r0": r0.to_json() }),
    };
    UnionSpace::new(space, parts, provenance)
}

/// Glues two spaces with every cross distance equal to `r0`. Requires
/// `r0 > 0` and `r0 >= max(diam X1, diam X2)`.
pub fn glue_constant(x1: &FiniteMetricSpace, x2: &FiniteMetricSpace, r0: &Scalar) -> Result<UnionSpace, UnionError> {
    let tol = x1.joint_tol(x2);
    let (d1, d2) = (x1.diam(), x2.diam());
    require_r0(r0, d1.max_tol(&d2, tol), tol)?;
    let (space, parts) = assemble(&[x1, x2], tol, |_, _, _, _| r0.clone())?;
    let provenance = Provenance { builder: "glue_constant".into(), params: json!({ "r0": r0.to_json() }) };
    UnionSpace::new(space, parts, provenance)
}

/// Smallest `ε` for which `x` is ε-connected: the heaviest edge of a
/// minimum spanning tree. Zero for spaces with fewer than two points.
pub fn connectivity_threshold(x: &FiniteMetricSpace) -> Scalar {
    let n = x.len();
    let mut worst = Scalar::zero().to_mode(x.mode());
    if n < 2 {
        return worst;
    }
    let mut in_tree = vec![false; n];
    let mut best: Vec<Option<Scalar>> = vec![None; n];
    in_tree[0] = true;
    for j in 1..n {
        best[j] = Some(x.d(0, j).clone());
    }
    for _ in 1..n {
        let mut pick: Option<usize> = None;
        for j in 0..n {
            if in_tree[j] {
                continue;
            }
            let closer = match pick {
                None => true,
                Some(p) => best[j].as_ref().unwrap().lt_tol(best[p].as_ref().unwrap(), 0.0),
            };
            if closer {
                pick = Some(j);
            }
        }
        let p = pick.unwrap();
        in_tree[p] = true;
        let w = best[p].take().unwrap();
        if worst.lt_tol(&w, 0.0) {
            worst = w;
        }
        for j in 0..n {
            if !in_tree[j] && x.d(p, j).lt_tol(best[j].as_ref().unwrap(), 0.0) {
                best[j] = Some(x.d(p, j).clone());
            }
        }
    }
    worst
}

/// Whether any two points are joined by a chain with all steps `<= eps`.
pub fn is_epsilon_connected(x: &FiniteMetricSpace, eps: &Scalar) -> bool {
    let n = x.len();
    if n < 2 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && x.d(i, j).le_tol(eps, x.tol()) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Anchor-graph union: each part is a complete graph with its own distances,
/// the anchors form a complete graph with weight `eps1`, and the result is
/// the shortest-path metric of that graph.
///
/// `eps1` must exceed the connectivity threshold of every part.
pub fn union_epsilon_connected(
    parts: &[FiniteMetricSpace],
    anchors: &[usize],
    eps1: &Scalar,
) -> Result<UnionSpace, UnionError> {
    if parts.is_empty() {
        return Err(UnionError::InvalidInput("at least one part is required".into()));
    }
    if anchors.len() != parts.len() {
        return Err(UnionError::InvalidInput(format!("{} anchors given for {} parts", anchors.len(), parts.len())));
    }
    for (i, (p, &a)) in parts.iter().zip(anchors).enumerate() {
        if p.is_empty() {
            return Err(UnionError::InvalidInput(format!("part {i} is empty")));
        }
        if a >= p.len() {
            return Err(UnionError::InvalidInput(format!("anchor {a} out of range for part {i}")));
        }
    }
    let tol = parts.iter().map(|p| p.tol()).fold(DEFAULT_TOL, f64::max);
    let mut threshold = Scalar::zero().to_mode(eps1.mode());
    for p in parts {
        let t = connectivity_threshold(p);
        if threshold.lt_tol(&t, 0.0) {
            threshold = t;
        }
    }
    if !eps1.is_positive_tol(tol) || !threshold.lt_tol(eps1, tol) {
        return Err(UnionError::EpsilonTooSmall { eps1: eps1.to_string(), threshold: threshold.to_string() });
    }
    let sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
    let layout = contiguous_parts(&sizes);
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        for k in 0..p.len() {
            labels.push(format!("{i}.{}", p.label(k)));
            for l in k + 1..p.len() {
                edges.push((layout[i][k], layout[i][l], p.d(k, l).clone()));
            }
        }
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            edges.push((layout[i][anchors[i]], layout[j][anchors[j]], eps1.clone()));
        }
    }
    let g = WeightedGraph::new(labels, edges).map_err(|e| UnionError::Internal(e.to_string()))?.with_tol(tol);
    let report = check_metrizability(&g).map_err(|e| UnionError::Internal(e.to_string()))?;
    let space = report.metric.ok_or_else(|| UnionError::Internal("anchor graph weight is not metrizable".into()))?;
    let provenance = Provenance {
        builder: "union_epsilon_connected".into(),
        params: json!({
            "anchors": anchors,
            "eps1": eps1.to_json(),
            "threshold": threshold.to_json(),
        }),
    };
    UnionSpace::new(space, layout, provenance)
}

/// Union of two-point spaces `Y_t` (one per `t` in `ts`) with cross distance
/// `p_n`, where `(p_{n-1}, p_n)` is the separator interval containing the
/// larger of the two parts' distances.
///
/// `ts` must be strictly ascending and positive. `separators` must start at
/// 0, ascend strictly, avoid every `t`, and each interval must contain at
/// least one `t`.
pub fn union_ultrametric_family(ts: &[Scalar], separators: &[Scalar]) -> Result<UnionSpace, UnionError> {
    let tol = DEFAULT_TOL;
    if ts.is_empty() {
        return Err(UnionError::InvalidInput("distance list is empty".into()));
    }
    if !ts[0].is_positive_tol(tol) {
        return Err(UnionError::InvalidInput("distances must be positive".into()));
    }
    if ts.windows(2).any(|w| !w[0].lt_tol(&w[1], tol)) {
        return Err(UnionError::InvalidInput("distances must be strictly ascending".into()));
    }
    if separators.len() < 2 || !separators[0].is_zero_tol(tol) {
        return Err(UnionError::BadSeparators("must start at 0 and have at least two entries".into()));
    }
    if separators.windows(2).any(|w| !w[0].lt_tol(&w[1], tol)) {
        return Err(UnionError::BadSeparators("must be strictly ascending".into()));
    }
    let interval: Vec<usize> = ts.iter().map(|t| separators.partition_point(|p| p.lt_tol(t, tol))).collect();
    for (t, &n) in ts.iter().zip(&interval) {
        if n == separators.len() {
            return Err(UnionError::BadSeparators(format!("{t} exceeds the last separator")));
        }
        if separators[n].eq_tol(t, tol) {
            return Err(UnionError::BadSeparators(format!("{t} equals a separator")));
        }
    }
    for n in 1..separators.len() {
        if !interval.contains(&n) {
            return Err(UnionError::BadSeparators(format!(
                "interval ({}, {}) contains no distance",
                separators[n - 1],
                separators[n]
            )));
        }
    }
    let pairs: Vec<FiniteMetricSpace> = ts
        .iter()
        .map(|t| FiniteMetricSpace::pair(t.clone()))
        .collect::<Result<_, _>>()
        .map_err(|e| UnionError::InvalidInput(e.to_string()))?;
    let refs: Vec<&FiniteMetricSpace> = pairs.iter().collect();
    let (space, parts) = assemble(&refs, tol, |a, _, b, _| separators[interval[a.max(b)]].clone())?;
    if !space.is_ultrametric() {
        return Err(UnionError::ResultNotUltrametric);
    }
    let provenance = Provenance {
        builder: "union_ultrametric_family".into(),
        params: json!({
            "distances": ts.iter().map(Scalar::to_json).collect::<Vec<_>>(),
            "separators": separators.iter().map(Scalar::to_json).collect::<Vec<_>>(),
        }),
    };
    UnionSpace::new(space, parts, provenance)
}

/// Union of pairwise non-isometric pseudo-linear quadruples; points of
/// distinct parts `Y`, `Z` are at distance `max(diam Y, diam Z)`.
pub fn union_pl_quadruples(quads: &[FiniteMetricSpace]) -> Result<UnionSpace, UnionError> {
    if quads.is_empty() {
        return Err(UnionError::InvalidInput("at least one quadruple is required".into()));
    }
    for (i, q) in quads.iter().enumerate() {
        if !is_pseudolinear(q).unwrap_or(false) {
            return Err(UnionError::NotPseudolinear(i));
        }
    }
    for i in 0..quads.len() {
        for j in i + 1..quads.len() {
            if is_isometric(&quads[i], &quads[j]) {
                return Err(UnionError::IsometricDuplicate(i, j));
            }
        }
    }
    let diams: Vec<Scalar> = quads.iter().map(|q| q.diam()).collect();
    let tol = quads.iter().map(|q| q.tol()).fold(DEFAULT_TOL, f64::max);
    let refs: Vec<&FiniteMetricSpace> = quads.iter().collect();
    let (space, parts) = assemble(&refs, tol, |a, _, b, _| diams[a].max_tol(&diams[b], 0.0).clone())?;
    let provenance = Provenance {
        builder: "union_pl_quadruples".into(),
        params: json!({ "diameters": diams.iter().map(Scalar::to_json).collect::<Vec<_>>() }),
    };
    UnionSpace::new(space, parts, provenance)
}

/// Attachment of a PL union to the real line: the line point `p` is joined
/// to the union point `b` by a segment of length `r`.
#[derive(Debug, Clone, Serialize)]
pub struct BridgeParams {
    pub p: Scalar,
    pub b: TaggedPoint,
    pub r: Scalar,
}

impl BridgeParams {
    pub fn new(p: Scalar, b: TaggedPoint, r: Scalar) -> Result<Self, UnionError> {
        if !r.is_positive_tol(0.0) {
            return Err(UnionError::InvalidInput("bridge length must be positive".into()));
        }
        Ok(BridgeParams { p, b, r })
    }
}

/// A point of the bridged space: a real number or a point of the union.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MPoint {
    Real { t: Scalar },
    Quad(TaggedPoint),
}

impl MPoint {
    pub fn real(t: Scalar) -> Self {
        MPoint::Real { t }
    }

    pub fn quad(part: usize, point: usize) -> Self {
        MPoint::Quad(TaggedPoint { part, point })
    }
}

fn union_index(u: &UnionSpace, p: TaggedPoint) -> usize {
    u.index_of(p).unwrap_or_else(|| panic!("point {}.{} is not in the union", p.part, p.point))
}

/// Distance in the bridged space: `|x - y|` on the line, the union metric
/// inside the union, and `|x - p| + r + d(b, y)` across. Panics if a tagged
/// point is not in `u`.
pub fn m_distance(a: &MPoint, b: &MPoint, u: &UnionSpace, bridge: &BridgeParams) -> Scalar {
    match (a, b) {
        (MPoint::Real { t: x }, MPoint::Real { t: y }) => (x - y).abs(),
        (MPoint::Quad(x), MPoint::Quad(y)) => u.space.d(union_index(u, *x), union_index(u, *y)).clone(),
        (MPoint::Real { t: x }, MPoint::Quad(y)) | (MPoint::Quad(y), MPoint::Real { t: x }) => {
            let bi = union_index(u, bridge.b);
            &(&(x - &bridge.p).abs() + &bridge.r) + u.space.d(bi, union_index(u, *y))
        }
    }
}

fn m_label(p: &MPoint, u: &UnionSpace) -> String {
    match p {
        MPoint::Real { t } => format!("R({t})"),
        MPoint::Quad(q) => u.space.label(union_index(u, *q)).to_string(),
    }
}

/// The finite subspace of the bridged space on `points`.
pub fn sample_m_space(
    points: &[MPoint],
    u: &UnionSpace,
    bridge: &BridgeParams,
) -> Result<FiniteMetricSpace, UnionError> {
    for (i, p) in points.iter().enumerate() {
        if let MPoint::Quad(q) = p {
            if u.index_of(*q).is_none() {
                return Err(UnionError::InvalidInput(format!("point {}.{} is not in the union", q.part, q.point)));
            }
        }
        if points[..i].contains(p) {
            return Err(UnionError::DuplicatePoint(i));
        }
    }
    if u.index_of(bridge.b).is_none() {
        return Err(UnionError::InvalidInput("bridge point is not in the union".into()));
    }
    let m = points.iter().map(|a| points.iter().map(|b| m_distance(a, b, u, bridge)).collect()).collect();
    let labels = points.iter().map(|p| m_label(p, u)).collect();
    FiniteMetricSpace::new_unified(m, Some(labels), u.space.tol())
        .map_err(|e| UnionError::Internal(format!("sampled matrix is not a metric: {e}")))
}

/// Outcome of [`verify_minimal_union`].
#[derive(Debug, Clone, Serialize)]
pub struct MinimalityReport {
    pub passes: bool,
    /// Parts with a non-surjective self-embedding.
    pub shifted_parts: Vec<usize>,
    /// Pairs of parts where one embeds into the other.
    pub comparable_pairs: Vec<(usize, usize)>,
    /// Number of distinct subsets of the union isometric to each part.
    pub copies: Vec<usize>,
}

/// Checks that each part is not shifted, that parts are pairwise
/// incomparable, and that each part has exactly one isometric copy in the
/// union. Together these make the union minimal universal for its parts.
pub fn verify_minimal_union(u: &UnionSpace) -> MinimalityReport {
    let parts: Vec<FiniteMetricSpace> = (0..u.part_count()).map(|i| u.part_space(i)).collect();
    let shifted_parts: Vec<usize> =
        parts.par_iter().enumerate().filter(|(_, p)| !is_not_shifted(p).not_shifted).map(|(i, _)| i).collect();
    let mut comparable_pairs = Vec::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if compare(&parts[i], &parts[j]) != Comparability::Incomparable {
                comparable_pairs.push((i, j));
            }
        }
    }
    let copies: Vec<usize> = parts
        .par_iter()
        .map(|p| {
            let mut sets: Vec<Vec<usize>> = find_embeddings(p, &u.space, None).iter().map(|m| m.image_set()).collect();
            sets.sort();
            sets.dedup();
            sets.len()
        })
        .collect();
    let passes = shifted_parts.is_empty() && comparable_pairs.is_empty() && copies.iter().all(|&c| c == 1);
    MinimalityReport { passes, shifted_parts, comparable_pairs, copies }
}
