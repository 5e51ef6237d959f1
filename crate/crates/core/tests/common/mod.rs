//! Generators and brute-force oracles shared by the integration tests.
//!
//! Oracles here never call the library's decision procedures: embeddings are
//! enumerated without pruning, cycles are listed explicitly, and metric
//! axioms are checked with plain rational arithmetic.

#![allow(dead_code)]

use msu_core::{FiniteMetricSpace, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

pub fn rat(x: &Scalar) -> BigRational {
    x.as_rational().expect("exact scalar").clone()
}

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational in `[lo, hi]` with denominator at most `max_den`.
pub fn rand_rational(rng: &mut impl Rng, lo: i64, hi: i64, max_den: i64) -> Scalar {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(lo * den..=hi * den);
    q(num, den)
}

pub fn from_rows(rows: Vec<Vec<Scalar>>) -> FiniteMetricSpace {
    FiniteMetricSpace::new(rows, None).expect("generator produced a metric")
}

/// Symmetric matrix with off-diagonal entries in `[1, 2]`; any such matrix
/// is a metric since the largest side is at most the sum of the others.
pub fn bounded_rational_matrix(rng: &mut impl Rng, n: usize, max_den: i64) -> Vec<Vec<Scalar>> {
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = rand_rational(rng, 1, 2, max_den);
            m[i][j] = x.clone();
            m[j][i] = x;
        }
    }
    m
}

/// Integer matrix with entries in `[k, 2k]`; small `k` gives many ties and
/// hence nontrivial symmetries.
pub fn bounded_int_space(rng: &mut impl Rng, n: usize, k: i64) -> FiniteMetricSpace {
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = Scalar::int(rng.gen_range(k..=2 * k));
            m[i][j] = x.clone();
            m[j][i] = x;
        }
    }
    from_rows(m)
}

/// Shortest-path closure of a random complete graph with integer weights.
pub fn closure_space(rng: &mut impl Rng, n: usize, max_w: i64) -> FiniteMetricSpace {
    let mut d = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let w = rng.gen_range(1..=max_w);
            d[i][j] = w;
            d[j][i] = w;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    from_rows(d.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
}

/// Distinct rational points on the line.
pub fn line_space(rng: &mut impl Rng, n: usize) -> FiniteMetricSpace {
    let mut xs: Vec<Scalar> = Vec::new();
    while xs.len() < n {
        let x = rand_rational(rng, 0, 10, 4);
        if !xs.iter().any(|y| y.identical(&x)) {
            xs.push(x);
        }
    }
    from_rows(xs.iter().map(|a| xs.iter().map(|b| (a - b).abs()).collect()).collect())
}

/// A random space of size `n` drawn from several generators.
pub fn random_space(rng: &mut impl Rng, n: usize) -> FiniteMetricSpace {
    match rng.gen_range(0..4) {
        0 => from_rows(bounded_rational_matrix(rng, n, 6)),
        1 => {
            let k = rng.gen_range(1..=3);
            bounded_int_space(rng, n, k)
        }
        2 => closure_space(rng, n, 5),
        _ => line_space(rng, n),
    }
}

/// Same space with points listed in the order `perm`.
pub fn permuted(x: &FiniteMetricSpace, perm: &[usize]) -> FiniteMetricSpace {
    x.subspace(perm)
}

pub fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Every injective map from `0..k` into `0..n`, in lexicographic order.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in 0..n {
            if !cur.contains(&j) {
                cur.push(j);
                go(k, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(k, n, &mut Vec::new(), &mut out);
    out
}

/// All isometric embeddings by exhaustive enumeration, exact spaces only.
pub fn brute_embeddings(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Vec<Vec<usize>> {
    injections(x.len(), y.len())
        .into_iter()
        .filter(|f| (0..x.len()).all(|i| (0..x.len()).all(|j| rat(y.d(f[i], f[j])) == rat(x.d(i, j)))))
        .collect()
}

pub fn brute_embeds(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> bool {
    x.len() <= y.len() && !brute_embeddings(x, y).is_empty()
}

pub fn brute_isometric(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> bool {
    x.len() == y.len() && brute_embeds(x, y)
}

/// Checks the metric axioms with exact rational arithmetic.
pub fn is_metric_exact(m: &[Vec<Scalar>]) -> bool {
    let n = m.len();
    let r: Vec<Vec<BigRational>> = m.iter().map(|row| row.iter().map(rat).collect()).collect();
    let zero = big(0);
    for i in 0..n {
        if r[i][i] != zero {
            return false;
        }
        for j in 0..n {
            if r[i][j] != r[j][i] || (i != j && r[i][j] <= zero) {
                return false;
            }
            for k in 0..n {
                if r[i][k] > &r[i][j] + &r[j][k] {
                    return false;
                }
            }
        }
    }
    true
}

/// `d(x,y) <= max(d(x,z), d(z,y))` on every triple, exact.
pub fn strong_triangle_exact(x: &FiniteMetricSpace) -> bool {
    let n = x.len();
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let m = rat(x.d(i, k)).max(rat(x.d(k, j)));
                rat(x.d(i, j)) <= m
            })
        })
    })
}

/// Some point of the triple lies between the other two, exact.
pub fn mb_triple_exact(a: &BigRational, b: &BigRational, c: &BigRational) -> bool {
    a + b == *c || a + c == *b || b + c == *a
}

/// All simple cycles of an undirected graph as vertex lists, each listed
/// once (smallest vertex first, second vertex below the last).
pub fn simple_cycles(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn go(start: usize, v: usize, adj: &[Vec<usize>], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for &w in &adj[v] {
            if w == start && path.len() >= 3 && path[1] < path[path.len() - 1] {
                out.push(path.clone());
            } else if w > start && !path.contains(&w) {
                path.push(w);
                go(start, w, adj, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..n {
        go(s, s, adj, &mut vec![s], &mut out);
    }
    out
}

/// A weight on a graph is pseudometrizable iff on every cycle twice the
/// heaviest edge is at most the cycle's total weight.
pub fn cycle_oracle(n: usize, edges: &[(usize, usize, i64)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    let mut w = vec![vec![0i64; n]; n];
    for &(u, v, x) in edges {
        adj[u].push(v);
        adj[v].push(u);
        w[u][v] = x;
        w[v][u] = x;
    }
    simple_cycles(n, &adj).iter().all(|c| {
        let ws: Vec<i64> = (0..c.len()).map(|i| w[c[i]][c[(i + 1) % c.len()]]).collect();
        2 * ws.iter().max().unwrap() <= ws.iter().sum::<i64>()
    })
}

/// A random connected graph on `n` vertices: a random spanning tree plus
/// each remaining edge with probability one half.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, max_w: i64) -> Vec<(usize, usize, i64)> {
    let order = random_perm(rng, n);
    let mut present = vec![vec![false; n]; n];
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let (u, v) = (order[i], parent);
        present[u.min(v)][u.max(v)] = true;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if present[u][v] || rng.gen_bool(0.5) {
                edges.push((u, v, rng.gen_range(0..=max_w)));
            }
        }
    }
    edges
}

/// A random ultrametric: leaves of a random ordering with `d(i, j)` the
/// largest merge height strictly between them, then shuffled.
pub fn random_ultrametric(rng: &mut impl Rng, n: usize) -> FiniteMetricSpace {
    let heights: Vec<Scalar> = (0..n.saturating_sub(1)).map(|_| rand_rational(rng, 1, 5, 3)).collect();
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let h = heights[i..j].iter().max_by(|a, b| rat(a).cmp(&rat(b))).unwrap().clone();
            m[i][j] = h.clone();
            m[j][i] = h;
        }
    }
    let x = from_rows(m);
    let p = random_perm(rng, n);
    permuted(&x, &p)
}

/// Distances of three planar points.
pub fn planar_dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// Triangle sides in `[lo, hi]`, resampled until the strict triangle
/// inequality holds.
pub fn random_sides(rng: &mut impl Rng, lo: f64, hi: f64) -> [f64; 3] {
    loop {
        let s = [rng.gen_range(lo..=hi), rng.gen_range(lo..=hi), rng.gen_range(lo..=hi)];
        if s[0] < s[1] + s[2] && s[1] < s[0] + s[2] && s[2] < s[0] + s[1] {
            return s;
        }
    }
}
