//! Isometric embedding search between finite metric spaces.
//!
//! Backtracking assigns domain points in index order and tries codomain
//! points in ascending order, so results come out in lexicographic order of
//! their image tuples. A candidate `j` for point `i` survives only if
//! `d_Y(j, f(k)) == d_X(i, k)` for every already-assigned `k`.

use rayon::prelude::*;
use serde::Serialize;

use crate::space::FiniteMetricSpace;

/// Injective map from domain indices to codomain indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PointMap {
    pub image: Vec<usize>,
}

impl PointMap {
    pub fn identity(n: usize) -> Self {
        PointMap { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.image.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Injective and onto `0..codomain_len`.
    pub fn is_bijection(&self, codomain_len: usize) -> bool {
        self.image.len() == codomain_len && self.image.iter().all(|&j| j < codomain_len) && self.is_injective()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PointMap) -> PointMap {
        PointMap { image: self.image.iter().map(|&j| other.image[j]).collect() }
    }

    /// Sorted image set.
    pub fn image_set(&self) -> Vec<usize> {
        let mut s = self.image.clone();
        s.sort_unstable();
        s
    }

    /// Checks `d_Y(f(i), f(j)) == d_X(i, j)` for all pairs.
    pub fn is_isometric_embedding(&self, x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> bool {
        let tol = x.joint_tol(y);
        self.image.len() == x.len()
            && self.image.iter().all(|&j| j < y.len())
            && self.is_injective()
            && (0..x.len()).all(|i| (i + 1..x.len()).all(|k| y.d(self.image[i], self.image[k]).eq_tol(x.d(i, k), tol)))
    }
}

/// Which embedding directions exist between two spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Comparability {
    LeftEmbeds,
    RightEmbeds,
    BothEmbed,
    Incomparable,
}

struct Search<'a> {
    x: &'a FiniteMetricSpace,
    y: &'a FiniteMetricSpace,
    tol: f64,
    limit: Option<usize>,
    assigned: Vec<usize>,
    used: Vec<bool>,
    out: Vec<PointMap>,
}

impl<'a> Search<'a> {
    fn new(x: &'a FiniteMetricSpace, y: &'a FiniteMetricSpace, limit: Option<usize>) -> Self {
        Search {
            x,
            y,
            tol: x.joint_tol(y),
            limit,
            assigned: Vec::with_capacity(x.len()),
            used: vec![false; y.len()],
            out: Vec::new(),
        }
    }

    fn full(&self) -> bool {
        self.limit.is_some_and(|l| self.out.len() >= l)
    }

    fn fits(&self, i: usize, j: usize) -> bool {
        if self.used[j] {
            return false;
        }
        self.assigned.iter().enumerate().all(|(k, &fk)| self.y.d(j, fk).eq_tol(self.x.d(i, k), self.tol))
    }

    fn push(&mut self, j: usize) {
        self.used[j] = true;
        self.assigned.push(j);
    }

    fn pop(&mut self) {
        if let Some(j) = self.assigned.pop() {
            self.used[j] = false;
        }
    }

    fn run(&mut self) {
        let i = self.assigned.len();
        if i == self.x.len() {
            self.out.push(PointMap { image: self.assigned.clone() });
            return;
        }
        for j in 0..self.y.len() {
            if self.full() {
                return;
            }
            if self.fits(i, j) {
                self.push(j);
                self.run();
                self.pop();
            }
        }
    }
}

/// All isometric embeddings of `x` into `y` (up to `limit`), in
/// lexicographic order of image tuples. Empty iff `x` does not embed.
pub fn find_embeddings(x: &FiniteMetricSpace, y: &FiniteMetricSpace, limit: Option<usize>) -> Vec<PointMap> {
    if x.len() > y.len() || limit == Some(0) {
        return Vec::new();
    }
    let mut s = Search::new(x, y, limit);
    s.run();
    s.out
}

/// Same result as [`find_embeddings`], with the top-level branches (the
/// image of point 0) searched concurrently and merged in order.
pub fn find_embeddings_par(x: &FiniteMetricSpace, y: &FiniteMetricSpace, limit: Option<usize>) -> Vec<PointMap> {
    if x.len() > y.len() || limit == Some(0) {
        return Vec::new();
    }
    if x.is_empty() {
        return vec![PointMap { image: Vec::new() }];
    }
    let branches: Vec<Vec<PointMap>> = (0..y.len())
        .into_par_iter()
        .map(|j| {
            let mut s = Search::new(x, y, limit);
            s.push(j);
            s.run();
            s.out
        })
        .collect();
    let mut out: Vec<PointMap> = branches.into_iter().flatten().collect();
    if let Some(l) = limit {
        out.truncate(l);
    }
    out
}

/// Whether some embedding of `x` into `y` exists.
pub fn embeds(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> bool {
    !find_embeddings(x, y, Some(1)).is_empty()
}

/// Whether a self-isometry of `x` sends point `from` to point `to`.
pub fn pinned_isometry_exists(x: &FiniteMetricSpace, from: usize, to: usize) -> bool {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.swap(0, from);
    let moved = x.subspace(&order);
    let mut s = Search::new(&moved, x, Some(1));
    s.push(to);
    s.run();
    !s.out.is_empty()
}

/// Reports which embedding directions exist.
pub fn compare(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Comparability {
    match (embeds(x, y), embeds(y, x)) {
        (true, true) => Comparability::BothEmbed,
        (true, false) => Comparability::LeftEmbeds,
        (false, true) => Comparability::RightEmbeds,
        (false, false) => Comparability::Incomparable,
    }
}

/// Whether `x` and `y` are isometric. The sorted distance multiset is only
/// used to reject early; the decision is an embedding search.
pub fn is_isometric(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> bool {
    if x.len() != y.len() {
        return false;
    }
    let tol = x.joint_tol(y);
    let (dx, dy) = (x.sorted_distances(), y.sorted_distances());
    if dx.iter().zip(&dy).any(|(a, b)| !a.eq_tol(b, tol)) {
        return false;
    }
    embeds(x, y)
}

/// Outcome of checking that every self-embedding is onto.
#[derive(Debug, Clone, Serialize)]
pub struct NotShiftedReport {
    pub not_shifted: bool,
    pub isometries: Vec<PointMap>,
    /// A non-surjective self-embedding. Never present for a valid finite space.
    pub witness: Option<PointMap>,
}

/// Enumerates all self-embeddings and checks each one is a bijection.
pub fn is_not_shifted(x: &FiniteMetricSpace) -> NotShiftedReport {
    let maps = find_embeddings(x, x, None);
    let witness = maps.iter().find(|m| !m.is_bijection(x.len())).cloned();
    NotShiftedReport { not_shifted: witness.is_none(), isometries: maps, witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn pair(n: i64) -> FiniteMetricSpace {
        FiniteMetricSpace::pair(Scalar::int(n)).unwrap()
    }

    fn z_space() -> FiniteMetricSpace {
        FiniteMetricSpace::triple(Scalar::int(1), Scalar::ratio(3, 2), Scalar::int(2)).unwrap()
    }

    /// Brute force over every injection, independent of the backtracking.
    fn brute_force(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Vec<PointMap> {
        fn rec(x: &FiniteMetricSpace, y: &FiniteMetricSpace, cur: &mut Vec<usize>, out: &mut Vec<PointMap>) {
            if cur.len() == x.len() {
                let m = PointMap { image: cur.clone() };
                if m.is_isometric_embedding(x, y) {
                    out.push(m);
                }
                return;
            }
            for j in 0..y.len() {
                if !cur.contains(&j) {
                    cur.push(j);
                    rec(x, y, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(x, y, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn restriction_is_found() {
        let y = FiniteMetricSpace::from_line(&[0, 1, 3, 6].map(Scalar::int)).unwrap();
        let x = y.subspace(&[0, 1, 2]);
        let maps = find_embeddings(&x, &y, None);
        assert!(maps.contains(&PointMap::identity(3)));
    }

    #[test]
    fn equilateral_self_maps() {
        let e = FiniteMetricSpace::equilateral(3, Scalar::int(1)).unwrap();
        let maps = find_embeddings(&e, &e, None);
        assert_eq!(maps.len(), 6);
        assert_eq!(maps, brute_force(&e, &e));
        assert!(maps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn pair_into_z() {
        let maps = find_embeddings(&pair(1), &z_space(), None);
        assert_eq!(maps, vec![PointMap { image: vec![0, 1] }, PointMap { image: vec![1, 0] }]);
        assert_eq!(maps, brute_force(&pair(1), &z_space()));
    }

    #[test]
    fn limit_respected() {
        let e = FiniteMetricSpace::equilateral(4, Scalar::int(1)).unwrap();
        assert_eq!(find_embeddings(&e, &e, Some(5)).len(), 5);
        assert!(find_embeddings(&e, &e, Some(0)).is_empty());
    }

    #[test]
    fn parallel_matches_sequential() {
        let e = FiniteMetricSpace::equilateral(4, Scalar::int(1)).unwrap();
        assert_eq!(find_embeddings(&e, &e, None), find_embeddings_par(&e, &e, None));
        assert_eq!(find_embeddings(&e, &e, Some(7)), find_embeddings_par(&e, &e, Some(7)));
    }

    #[test]
    fn empty_space_conventions() {
        let empty = FiniteMetricSpace::empty();
        assert_eq!(find_embeddings(&empty, &pair(1), None).len(), 1);
        assert_eq!(find_embeddings(&empty, &empty, None).len(), 1);
        assert!(find_embeddings(&pair(1), &empty, None).is_empty());
    }

    #[test]
    fn comparability_examples() {
        assert_eq!(compare(&pair(1), &pair(2)), Comparability::Incomparable);
        assert_eq!(compare(&z_space(), &z_space()), Comparability::BothEmbed);
        let t = FiniteMetricSpace::triple(Scalar::int(1), Scalar::int(3), Scalar::int(2)).unwrap();
        assert_eq!(compare(&pair(1), &t), Comparability::LeftEmbeds);
        assert_eq!(compare(&t, &pair(1)), Comparability::RightEmbeds);
    }

    #[test]
    fn not_shifted_examples() {
        let e = FiniteMetricSpace::equilateral(3, Scalar::int(1)).unwrap();
        let r = is_not_shifted(&e);
        assert!(r.not_shifted);
        assert_eq!(r.isometries.len(), 6);

        let r = is_not_shifted(&FiniteMetricSpace::point());
        assert!(r.not_shifted);
        assert_eq!(r.isometries, vec![PointMap::identity(1)]);

        let t = FiniteMetricSpace::triple(Scalar::int(1), Scalar::int(3), Scalar::int(2)).unwrap();
        let r = is_not_shifted(&t);
        assert!(r.not_shifted);
        assert_eq!(r.isometries, vec![PointMap::identity(3)]);
    }

    #[test]
    fn isometry_check() {
        let a = FiniteMetricSpace::triple(Scalar::int(1), Scalar::int(2), Scalar::int(2)).unwrap();
        let b = FiniteMetricSpace::triple(Scalar::int(2), Scalar::int(2), Scalar::int(1)).unwrap();
        assert!(is_isometric(&a, &b));
        assert!(!is_isometric(&a, &z_space()));
    }

    #[test]
    fn pinned_self_isometry() {
        let t = FiniteMetricSpace::triple(Scalar::int(1), Scalar::int(2), Scalar::int(2)).unwrap();
        assert!(pinned_isometry_exists(&t, 0, 1));
        assert!(!pinned_isometry_exists(&t, 0, 2));
        assert!(pinned_isometry_exists(&t, 2, 2));
    }
}
