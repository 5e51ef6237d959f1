//! Weighted shortest-path pseudometric and metrizability of edge weights.
//!
//! A weight is pseudometrizable iff the shortest-path distance between the
//! ends of every edge equals that edge's weight. That is the same as asking
//! every cycle to satisfy `2 * max edge <= total weight`, but needs no cycle
//! enumeration.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::GraphError;
use crate::scalar::{Scalar, DEFAULT_TOL};
use crate::space::FiniteMetricSpace;

type Predecessors = Vec<Vec<Option<usize>>>;

#[derive(Debug, Clone)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Scalar,
}

/// Simple undirected graph with nonnegative edge weights.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>,
    tol: f64,
}

impl WeightedGraph {
    /// Builds a graph, rejecting loops, parallel edges, negative weights,
    /// duplicate vertex names and out-of-range endpoints.
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize, Scalar)>) -> Result<Self, GraphError> {
        let n = vertices.len();
        let mut names = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if names.insert(v.as_str(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut seen = BTreeMap::new();
        let mut adj = vec![Vec::new(); n];
        let mut out = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::UnknownVertex(x.to_string()));
                }
            }
            if u == v {
                return Err(GraphError::Loop(vertices[u].clone()));
            }
            if seen.insert((u.min(v), u.max(v)), ()).is_some() {
                return Err(GraphError::ParallelEdge(vertices[u].clone(), vertices[v].clone()));
            }
            if w.lt_tol(&Scalar::zero(), 0.0) {
                return Err(GraphError::NegativeWeight(vertices[u].clone(), vertices[v].clone()));
            }
            let id = out.len();
            adj[u].push((v, id));
            adj[v].push((u, id));
            out.push(Edge { u, v, weight: w });
        }
        Ok(WeightedGraph { vertices, edges: out, adj, tol: DEFAULT_TOL })
    }

    /// Same as [`WeightedGraph::new`] with endpoints given by vertex name.
    pub fn from_labeled(vertices: Vec<String>, edges: Vec<(String, String, Scalar)>) -> Result<Self, GraphError> {
        let idx: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut e = Vec::with_capacity(edges.len());
        for (u, v, w) in &edges {
            let iu = *idx.get(u.as_str()).ok_or_else(|| GraphError::UnknownVertex(u.clone()))?;
            let iv = *idx.get(v.as_str()).ok_or_else(|| GraphError::UnknownVertex(v.clone()))?;
            e.push((iu, iv, w.clone()));
        }
        Self::new(vertices, e)
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Neighbours of `u` as `(vertex, edge id)`.
    pub fn neighbors(&self, u: usize) -> &[(usize, usize)] {
        &self.adj[u]
    }

    fn zero(&self) -> Scalar {
        match self.edges.first() {
            Some(e) => Scalar::zero().to_mode(e.weight.mode()),
            None => Scalar::zero(),
        }
    }

    /// Dijkstra from `src` over exact or tolerant scalars. Returns distances
    /// (`None` = unreachable) and predecessor vertices.
    fn single_source(&self, src: usize) -> (Vec<Option<Scalar>>, Vec<Option<usize>>) {
        let n = self.len();
        let mut dist: Vec<Option<Scalar>> = vec![None; n];
        let mut pred = vec![None; n];
        let mut done = vec![false; n];
        dist[src] = Some(self.zero());
        loop {
            let mut best: Option<usize> = None;
            for v in 0..n {
                if done[v] {
                    continue;
                }
                if let Some(dv) = &dist[v] {
                    let better = match best {
                        None => true,
                        Some(b) => dv.lt_tol(dist[b].as_ref().unwrap(), 0.0),
                    };
                    if better {
                        best = Some(v);
                    }
                }
            }
            let Some(u) = best else { break };
            done[u] = true;
            let du = dist[u].clone().unwrap();
            for &(v, e) in &self.adj[u] {
                if done[v] {
                    continue;
                }
                let cand = &du + &self.edges[e].weight;
                let improve = match &dist[v] {
                    None => true,
                    Some(dv) => cand.lt_tol(dv, 0.0),
                };
                if improve {
                    dist[v] = Some(cand);
                    pred[v] = Some(u);
                }
            }
        }
        (dist, pred)
    }

    fn all_pairs(&self) -> Result<(Vec<Vec<Scalar>>, Predecessors), GraphError> {
        let n = self.len();
        let mut d = Vec::with_capacity(n);
        let mut preds = Vec::with_capacity(n);
        for s in 0..n {
            let (dist, pred) = self.single_source(s);
            let mut row = Vec::with_capacity(n);
            for (t, x) in dist.into_iter().enumerate() {
                match x {
                    Some(x) => row.push(x),
                    None => {
                        return Err(GraphError::DisconnectedGraph(self.vertices[s].clone(), self.vertices[t].clone()))
                    }
                }
            }
            d.push(row);
            preds.push(pred);
        }
        Ok((d, preds))
    }
}

/// All-pairs minimum path weight; `d(u,u) = 0`.
pub fn shortest_path_pseudometric(g: &WeightedGraph) -> Result<Vec<Vec<Scalar>>, GraphError> {
    if g.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    g.all_pairs().map(|(d, _)| d)
}

#[derive(Debug, Clone, Serialize)]
pub struct MetrizationReport {
    pub pseudometrizable: bool,
    pub metrizable: bool,
    /// Closed vertex sequence `t0, ..., tn = t0` whose heaviest edge exceeds
    /// the rest of the cycle. Present iff not pseudometrizable.
    pub violating_cycle: Option<Vec<usize>>,
    #[serde(skip)]
    pub metric: Option<FiniteMetricSpace>,
    #[serde(skip)]
    pub distances: Vec<Vec<Scalar>>,
}

/// Decides pseudometrizability by the edge-realization criterion and, when
/// it holds, metrizability by positivity of all off-diagonal distances.
pub fn check_metrizability(g: &WeightedGraph) -> Result<MetrizationReport, GraphError> {
    if g.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    let (d, preds) = g.all_pairs()?;
    let tol = g.tol();
    let mut cycle = None;
    for e in g.edges() {
        // ties between the edge and a path of equal weight are fine
        if d[e.u][e.v].lt_tol(&e.weight, tol) {
            let mut path = vec![e.v];
            let mut cur = e.v;
            while let Some(p) = preds[e.u][cur] {
                path.push(p);
                cur = p;
            }
            path.reverse();
            path.push(e.v);
            // path now runs u .. v, v; rotate into a closed walk starting at u
            path.pop();
            path.push(e.u);
            cycle = Some(path);
            break;
        }
    }
    let pseudometrizable = cycle.is_none();
    let n = g.len();
    let positive = (0..n).all(|i| (i + 1..n).all(|j| d[i][j].is_positive_tol(tol)));
    let metrizable = pseudometrizable && positive;
    let metric = if metrizable {
        let space = FiniteMetricSpace::with_tolerance(d.clone(), Some(g.vertices().to_vec()), tol)
            .expect("shortest-path distances of a metrizable weight form a metric");
        Some(space)
    } else {
        None
    };
    Ok(MetrizationReport { pseudometrizable, metrizable, violating_cycle: cycle, metric, distances: d })
}
