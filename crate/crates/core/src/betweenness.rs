//! Metric betweenness, line realizations and pseudo-linear quadruples.

use serde::Serialize;

use crate::error::{BetweennessError, SpaceError};
use crate::scalar::{determinant, Scalar, DEFAULT_TOL};
use crate::space::FiniteMetricSpace;

/// Coordinates on the real line realizing a space.
#[derive(Debug, Clone, Serialize)]
pub struct LineRealization {
    pub coords: Vec<Scalar>,
}

/// An ordering `p0, p1, p2, p3` with `d(p0,p1) = d(p2,p3)`,
/// `d(p1,p2) = d(p3,p0)` and `d(p0,p2) = d(p0,p1) + d(p1,p2) = d(p1,p3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlLabeling {
    pub perm: [usize; 4],
}

/// The quadruple with consecutive sides `s, t, s, t` and both diagonals
/// `s + t`. Pseudo-linear for any positive `s`, `t`.
pub fn pl_quadruple(s: Scalar, t: Scalar) -> Result<FiniteMetricSpace, SpaceError> {
    let z = Scalar::zero().to_mode(s.mode());
    let u = &s + &t;
    FiniteMetricSpace::new_unified(
        vec![
            vec![z.clone(), s.clone(), u.clone(), t.clone()],
            vec![s.clone(), z.clone(), t.clone(), u.clone()],
            vec![u.clone(), t.clone(), z.clone(), s.clone()],
            vec![t, u, s, z],
        ],
        None,
        DEFAULT_TOL,
    )
}

fn check_index(x: &FiniteMetricSpace, i: usize) -> Result<(), BetweennessError> {
    if i >= x.len() {
        Err(BetweennessError::IndexOutOfRange { index: i, len: x.len() })
    } else {
        Ok(())
    }
}

/// `j` lies between `i` and `k`: `d(i,k) = d(i,j) + d(j,k)`.
pub fn lies_between(x: &FiniteMetricSpace, i: usize, j: usize, k: usize) -> Result<bool, BetweennessError> {
    for idx in [i, j, k] {
        check_index(x, idx)?;
    }
    if i == j || j == k || i == k {
        return Err(BetweennessError::RepeatedIndex);
    }
    Ok(x.d(i, k).eq_tol(&(x.d(i, j) + x.d(j, k)), x.tol()))
}

fn validate_triple(d12: &Scalar, d13: &Scalar, d23: &Scalar, tol: f64) -> Result<(), BetweennessError> {
    if [d12, d13, d23].iter().any(|d| !d.is_positive_tol(tol)) {
        return Err(BetweennessError::InvalidTriple("distances must be positive".into()));
    }
    let ok = d12.le_tol(&(d13 + d23), tol) && d13.le_tol(&(d12 + d23), tol) && d23.le_tol(&(d12 + d13), tol);
    if !ok {
        return Err(BetweennessError::InvalidTriple(format!("({d12}, {d13}, {d23}) violates the triangle inequality")));
    }
    Ok(())
}

/// Some point of the triple lies between the other two:
/// `2 * max(d12, d13, d23) = d12 + d13 + d23`.
pub fn is_mb_triple(d12: &Scalar, d13: &Scalar, d23: &Scalar, tol: f64) -> Result<bool, BetweennessError> {
    validate_triple(d12, d13, d23, tol)?;
    let max = d12.max_tol(d13, tol).max_tol(d23, tol);
    let two_max = max + max;
    Ok(two_max.eq_tol(&(&(d12 + d13) + d23), tol))
}

/// Cayley–Menger determinant of a triple, the 4×4 bordered matrix of squared
/// distances. Never positive; zero exactly for collinear triples. Exact on
/// rational input.
pub fn cayley_menger(d12: &Scalar, d13: &Scalar, d23: &Scalar, tol: f64) -> Result<Scalar, BetweennessError> {
    validate_triple(d12, d13, d23, tol)?;
    let (a, b, c) = (d12.square(), d13.square(), d23.square());
    let mode = a.mode();
    let z = Scalar::zero().to_mode(mode);
    let one = Scalar::int(1).to_mode(mode);
    let m = vec![
        vec![z.clone(), a.clone(), b.clone(), one.clone()],
        vec![a, z.clone(), c.clone(), one.clone()],
        vec![b, c, z.clone(), one.clone()],
        vec![one.clone(), one.clone(), one, z],
    ];
    Ok(determinant(&m))
}

/// Result of [`is_mb_space`].
#[derive(Debug, Clone, Serialize)]
pub struct MbReport {
    pub is_mb: bool,
    pub violating_triple: Option<[usize; 3]>,
}

/// Every 3-subset contains a point lying between the other two.
pub fn is_mb_space(x: &FiniteMetricSpace) -> MbReport {
    let n = x.len();
    let tol = x.tol();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let ok = is_mb_triple(x.d(i, j), x.d(i, k), x.d(j, k), tol).unwrap_or(false);
                if !ok {
                    return MbReport { is_mb: false, violating_triple: Some([i, j, k]) };
                }
            }
        }
    }
    MbReport { is_mb: true, violating_triple: None }
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j])) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// First ordering (lexicographic over the 24 permutations) satisfying the
/// pseudo-linear equalities, if any.
pub fn pl_labeling(x: &FiniteMetricSpace) -> Result<Option<PlLabeling>, BetweennessError> {
    if x.len() != 4 {
        return Err(BetweennessError::WrongCardinality(x.len()));
    }
    let tol = x.tol();
    Ok(permutations4().into_iter().find_map(|p| {
        let d = |a: usize, b: usize| x.d(p[a], p[b]);
        let diag = d(0, 1) + d(1, 2);
        let ok = d(0, 1).eq_tol(d(2, 3), tol)
            && d(1, 2).eq_tol(d(3, 0), tol)
            && d(0, 2).eq_tol(&diag, tol)
            && d(1, 3).eq_tol(&diag, tol);
        ok.then_some(PlLabeling { perm: p })
    }))
}

/// Every triple embeds in the line but the quadruple does not.
pub fn is_pseudolinear(x: &FiniteMetricSpace) -> Result<bool, BetweennessError> {
    if x.len() != 4 {
        return Err(BetweennessError::WrongCardinality(x.len()));
    }
    for skip in 0..4 {
        let idx: Vec<usize> = (0..4).filter(|&i| i != skip).collect();
        if line_realization(&x.subspace(&idx)).is_none() {
            return Ok(false);
        }
    }
    Ok(line_realization(x).is_none())
}

/// Isometric placement on the real line, if one exists.
///
/// Point 0 goes to 0 and point 1 to `+d(0,1)`; every later point goes to
/// `±d(0,x)`. Signs are backtracked (`+` first) against all placed points,
/// so `None` means no consistent assignment exists.
pub fn line_realization(x: &FiniteMetricSpace) -> Option<LineRealization> {
    let n = x.len();
    if n == 0 {
        return Some(LineRealization { coords: Vec::new() });
    }
    let tol = x.tol();
    let zero = Scalar::zero().to_mode(x.mode());
    let mut coords = vec![zero];
    if n >= 2 {
        coords.push(x.d(0, 1).clone());
    }
    fn place(x: &FiniteMetricSpace, coords: &mut Vec<Scalar>, tol: f64) -> bool {
        let i = coords.len();
        if i == x.len() {
            return true;
        }
        let r = x.d(0, i);
        for cand in [r.clone(), -r] {
            let fits = (1..i).all(|k| (&cand - &coords[k]).abs().eq_tol(x.d(i, k), tol));
            if fits {
                coords.push(cand);
                if place(x, coords, tol) {
                    return true;
                }
                coords.pop();
            }
        }
        false
    }
    place(x, &mut coords, tol).then_some(LineRealization { coords })
}
