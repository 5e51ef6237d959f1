//! Universality questions over finite families of finite spaces.
//!
//! Embeddability is a quasi-order on a family. Its mutual-embeddability
//! classes form a poset, and one representative from each maximal class is
//! a minimal universal subfamily.

use rayon::prelude::*;
use serde::Serialize;

use crate::embed::{embeds, is_isometric};
use crate::error::ClassError;
use crate::space::FiniteMetricSpace;

/// `relation[i][j]` iff member `i` embeds into member `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbedQuasiOrder {
    pub relation: Vec<Vec<bool>>,
}

impl EmbedQuasiOrder {
    pub fn len(&self) -> usize {
        self.relation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relation.is_empty()
    }

    /// Checks reflexivity and transitivity.
    pub fn validate(&self) -> Result<(), ClassError> {
        let r = &self.relation;
        let n = r.len();
        if let Some(i) = (0..n).find(|&i| !r[i][i]) {
            return Err(ClassError::NotReflexive(i));
        }
        for i in 0..n {
            for j in 0..n {
                if !r[i][j] {
                    continue;
                }
                if let Some(k) = (0..n).find(|&k| r[j][k] && !r[i][k]) {
                    return Err(ClassError::NotTransitive(i, j, k));
                }
            }
        }
        Ok(())
    }
}

/// The embeddability relation on `fam`; rows are computed in parallel.
pub fn embed_quasiorder(fam: &[FiniteMetricSpace]) -> EmbedQuasiOrder {
    let relation = (0..fam.len())
        .into_par_iter()
        .map(|i| (0..fam.len()).map(|j| i == j || embeds(&fam[i], &fam[j])).collect())
        .collect();
    EmbedQuasiOrder { relation }
}

/// Mutual-embeddability classes ordered by embeddability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientPoset {
    /// Member indices of each class, ascending; classes sorted by their
    /// smallest member.
    pub classes: Vec<Vec<usize>>,
    /// `order[a][b]` iff the members of class `a` embed into those of `b`.
    pub order: Vec<Vec<bool>>,
    /// Classes with no strictly greater class.
    pub maximal: Vec<usize>,
}

impl QuotientPoset {
    /// The smallest member index of each maximal class.
    pub fn representatives(&self) -> Vec<usize> {
        self.maximal.iter().map(|&c| self.classes[c][0]).collect()
    }
}

pub fn quotient_poset(qo: &EmbedQuasiOrder) -> Result<QuotientPoset, ClassError> {
    qo.validate()?;
    let r = &qo.relation;
    let n = r.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let members: Vec<usize> = (i..n).filter(|&j| r[i][j] && r[j][i]).collect();
        for &j in &members {
            class_of[j] = c;
        }
        classes.push(members);
    }
    let k = classes.len();
    let order: Vec<Vec<bool>> = (0..k).map(|a| (0..k).map(|b| r[classes[a][0]][classes[b][0]]).collect()).collect();
    let maximal = (0..k).filter(|&a| (0..k).all(|b| b == a || !order[a][b])).collect();
    Ok(QuotientPoset { classes, order, maximal })
}

/// Indices of a minimal universal subfamily: the first member of each
/// maximal class, ascending.
pub fn minimal_universal_subclass(fam: &[FiniteMetricSpace]) -> Result<Vec<usize>, ClassError> {
    if fam.is_empty() {
        return Err(ClassError::EmptyFamily);
    }
    let poset = quotient_poset(&embed_quasiorder(fam))?;
    let mut reps = poset.representatives();
    reps.sort_unstable();
    Ok(reps)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalityReport {
    pub universal: bool,
    /// First member that does not embed.
    pub failing_member: Option<usize>,
}

/// Whether every member of `fam` embeds into `y`.
pub fn is_universal_space(fam: &[FiniteMetricSpace], y: &FiniteMetricSpace) -> UniversalityReport {
    let failing_member = fam.iter().position(|x| !embeds(x, y));
    UniversalityReport { universal: failing_member.is_none(), failing_member }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalUniversalReport {
    pub minimal_universal: bool,
    /// A member that does not embed into `y`.
    pub failing_member: Option<usize>,
    /// A point of `y` whose removal leaves a universal space.
    pub removable_point: Option<usize>,
}

/// Whether `y` is universal for `fam` and no single point can be dropped.
/// Checking single points suffices: if some proper subspace is universal,
/// so is every superset of it missing one point.
pub fn is_minimal_universal_space(fam: &[FiniteMetricSpace], y: &FiniteMetricSpace) -> MinimalUniversalReport {
    let u = is_universal_space(fam, y);
    if !u.universal {
        return MinimalUniversalReport {
            minimal_universal: false,
            failing_member: u.failing_member,
            removable_point: None,
        };
    }
    let removable_point =
        (0..y.len()).into_par_iter().find_first(|&p| is_universal_space(fam, &y.without(p)).universal);
    MinimalUniversalReport { minimal_universal: removable_point.is_none(), failing_member: None, removable_point }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonexistenceReport {
    pub holds: bool,
    /// Two non-isometric members, each universal for the family.
    pub witness: Option<(usize, usize)>,
}

/// Whether the family has two non-isometric members that are both universal
/// for it, which rules out any minimal universal space. Never holds for a
/// family of finite spaces.
pub fn nonexistence_condition_i(fam: &[FiniteMetricSpace]) -> NonexistenceReport {
    let universal: Vec<usize> = (0..fam.len()).filter(|&i| is_universal_space(fam, &fam[i]).universal).collect();
    for (a, &i) in universal.iter().enumerate() {
        for &j in &universal[a + 1..] {
            if !is_isometric(&fam[i], &fam[j]) {
                return NonexistenceReport { holds: true, witness: Some((i, j)) };
            }
        }
    }
    NonexistenceReport { holds: false, witness: None }
}
