//! Triangles embedded in unions of rays from a common origin.
//!
//! All geometry here runs in binary64. The tripod is three rays at mutual
//! angle 2π/3 with the origin; `X_α` is two rays at angle `α` without it.

use std::f64::consts::{FRAC_PI_3, PI};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::GeometryError;
use crate::scalar::approx_eq_f64;
use crate::space::FiniteMetricSpace;

/// Default tolerance for solver deduplication and forbidden-point checks.
pub const SOLVER_TOL: f64 = 1e-6;
/// Starts per vertex-to-ray assignment.
pub const MULTISTARTS: usize = 64;

const GEO_TOL: f64 = 1e-9;

/// Triangle given by side lengths: `a = |BC|`, `b = |AC|`, `c = |AB|`, with
/// vertices `A, B, C` being points 0, 1, 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Triangle {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Triangle {
    /// Checks positivity and the triangle inequality (equality allowed).
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, GeometryError> {
        let s = [a, b, c];
        if s.iter().any(|x| !x.is_finite() || *x <= 0.0) {
            return Err(GeometryError::InvalidTriangle(s));
        }
        let slack = GEO_TOL * (a + b + c);
        if a > b + c + slack || b > a + c + slack || c > a + b + slack {
            return Err(GeometryError::InvalidTriangle(s));
        }
        Ok(Triangle { a, b, c })
    }

    pub fn from_space(x: &FiniteMetricSpace) -> Result<Self, GeometryError> {
        if x.len() != 3 {
            return Err(GeometryError::InvalidInput(format!("expected 3 points, got {}", x.len())));
        }
        Self::new(x.d(1, 2).to_f64(), x.d(0, 2).to_f64(), x.d(0, 1).to_f64())
    }

    /// Distance between vertices `i` and `j`.
    pub fn side(&self, i: usize, j: usize) -> f64 {
        match (i.min(j), i.max(j)) {
            (0, 1) => self.c,
            (0, 2) => self.b,
            (1, 2) => self.a,
            _ => 0.0,
        }
    }

    /// Side opposite vertex `i`.
    pub fn opposite(&self, i: usize) -> f64 {
        [self.a, self.b, self.c][i]
    }

    /// Area by Heron's formula in the numerically stable ordering.
    pub fn area(&self) -> f64 {
        let mut s = [self.a, self.b, self.c];
        s.sort_by(|x, y| y.total_cmp(x));
        let [a, b, c] = s;
        let p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
        0.25 * p.max(0.0).sqrt()
    }

    /// Interior angles at `A, B, C`.
    pub fn angles(&self) -> [f64; 3] {
        let two_area = 2.0 * self.area();
        let ang = |opp: f64, s1: f64, s2: f64| {
            // atan2 keeps precision near 0 and π where acos does not
            let cos_num = s1 * s1 + s2 * s2 - opp * opp;
            (2.0 * two_area).atan2(cos_num)
        };
        [ang(self.a, self.b, self.c), ang(self.b, self.a, self.c), ang(self.c, self.a, self.b)]
    }

    /// Some vertex lies between the other two, up to `GEO_TOL` relative.
    pub fn is_degenerate(&self) -> bool {
        let m = self.a.max(self.b).max(self.c);
        approx_eq_f64(2.0 * m, self.a + self.b + self.c, GEO_TOL)
    }

    /// Vertex coordinates with `A` at the origin and `B` on the positive x-axis.
    pub fn planar(&self) -> [[f64; 2]; 3] {
        let x = (self.b * self.b + self.c * self.c - self.a * self.a) / (2.0 * self.c);
        let y = 2.0 * self.area() / self.c;
        [[0.0, 0.0], [self.c, 0.0], [x, y]]
    }
}

/// Rays from a common origin, given by direction angles in radians.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RaySpace {
    pub angles: Vec<f64>,
    pub include_origin: bool,
}

impl RaySpace {
    pub fn new(angles: Vec<f64>, include_origin: bool) -> Result<Self, GeometryError> {
        if angles.is_empty() {
            return Err(GeometryError::InvalidInput("at least one ray is required".into()));
        }
        for i in 0..angles.len() {
            for j in i + 1..angles.len() {
                if angle_between(angles[i], angles[j]) < GEO_TOL {
                    return Err(GeometryError::InvalidInput(format!("rays {i} and {j} coincide")));
                }
            }
        }
        Ok(RaySpace { angles, include_origin })
    }

    /// Three rays at mutual angle 2π/3, origin included.
    pub fn tripod() -> Self {
        RaySpace { angles: vec![0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0], include_origin: true }
    }

    /// Two rays at angle `alpha`, origin excluded.
    pub fn two_rays(alpha: f64) -> Result<Self, GeometryError> {
        if !(alpha > 0.0 && alpha < PI) {
            return Err(GeometryError::AlphaOutOfRange(alpha));
        }
        Ok(RaySpace { angles: vec![0.0, alpha], include_origin: false })
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// Angle in `[0, π]` between rays `i` and `j`.
    pub fn gap(&self, i: usize, j: usize) -> f64 {
        angle_between(self.angles[i], self.angles[j])
    }

    pub fn xy(&self, p: &RayPoint) -> [f64; 2] {
        let th = self.angles[p.ray];
        [p.t * th.cos(), p.t * th.sin()]
    }

    pub fn dist(&self, p: &RayPoint, q: &RayPoint) -> f64 {
        let (u, v) = (self.xy(p), self.xy(q));
        (u[0] - v[0]).hypot(u[1] - v[1])
    }
}

fn angle_between(x: f64, y: f64) -> f64 {
    let d = (x - y).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

/// A point on ray `ray` at distance `t` from the origin. The origin itself
/// is written `(ray 0, t = 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RayPoint {
    pub ray: usize,
    pub t: f64,
}

impl RayPoint {
    pub fn new(ray: usize, t: f64) -> Self {
        RayPoint { ray, t }
    }

    fn canonical(self) -> Self {
        if self.t == 0.0 {
            RayPoint { ray: 0, t: 0.0 }
        } else {
            self
        }
    }
}

/// Where the Fermat–Torricelli point of a triangle sits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FtLocation {
    /// Strictly inside; distances to `A, B, C`.
    Interior { distances: [f64; 3] },
    /// At the vertex whose angle is at least 2π/3.
    AtVertex { index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FermatPoint {
    pub location: FtLocation,
    /// Sum of distances to the vertices; the minimum over the plane.
    pub total_cost: f64,
    /// Coordinates in the frame of [`Triangle::planar`].
    pub point: [f64; 2],
}

fn wide_vertex(tri: &Triangle) -> Option<usize> {
    let ang = tri.angles();
    (0..3).find(|&i| ang[i].cos() <= -0.5 + 1e-12)
}

/// Fermat–Torricelli point. Interior when every angle is below 2π/3, with
/// distances solving `r_i² + r_j² + r_i r_j = side_ij²`; otherwise the wide
/// vertex.
pub fn fermat_torricelli(tri: &Triangle) -> Result<FermatPoint, GeometryError> {
    if tri.is_degenerate() {
        return Err(GeometryError::DegenerateTriangle);
    }
    let xy = tri.planar();
    if let Some(v) = wide_vertex(tri) {
        let cost = (0..3).filter(|&j| j != v).map(|j| tri.side(v, j)).sum();
        return Ok(FermatPoint { location: FtLocation::AtVertex { index: v }, total_cost: cost, point: xy[v] });
    }
    let (a2, b2, c2) = (tri.a * tri.a, tri.b * tri.b, tri.c * tri.c);
    let s2 = 0.5 * (a2 + b2 + c2) + 2.0 * 3f64.sqrt() * tri.area();
    let s = s2.sqrt();
    let mut r = [
        (s2 + b2 + c2 - 2.0 * a2) / (3.0 * s),
        (s2 + a2 + c2 - 2.0 * b2) / (3.0 * s),
        (s2 + a2 + b2 - 2.0 * c2) / (3.0 * s),
    ];
    polish_ft(tri, &mut r);
    let point = ft_point(&xy, &r);
    Ok(FermatPoint { location: FtLocation::Interior { distances: r }, total_cost: r.iter().sum(), point })
}

/// Newton steps on the 120° law-of-cosines system.
fn polish_ft(tri: &Triangle, r: &mut [f64; 3]) {
    let pairs = [(0, 1), (0, 2), (1, 2)];
    for _ in 0..3 {
        let mut f = [0.0; 3];
        let mut j = [[0.0; 3]; 3];
        for (k, &(p, q)) in pairs.iter().enumerate() {
            let d = tri.side(p, q);
            f[k] = r[p] * r[p] + r[q] * r[q] + r[p] * r[q] - d * d;
            j[k][p] = 2.0 * r[p] + r[q];
            j[k][q] = 2.0 * r[q] + r[p];
        }
        match solve3(j, f) {
            Some(dx) => {
                for i in 0..3 {
                    r[i] -= dx[i];
                }
            }
            None => return,
        }
    }
}

/// Intersection of the circles about `A` and `B` on the side of `C`.
fn ft_point(xy: &[[f64; 2]; 3], r: &[f64; 3]) -> [f64; 2] {
    let c = xy[1][0];
    let x = (r[0] * r[0] - r[1] * r[1] + c * c) / (2.0 * c);
    let y = (r[0] * r[0] - x * x).max(0.0).sqrt();
    [x, y.copysign(xy[2][1])]
}

fn solve3(m: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let det = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(&m);
    let scale = m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if !d.is_finite() || d.abs() <= 1e-300 || d.abs() < 1e-14 * scale.powi(3) {
        return None;
    }
    let mut out = [0.0; 3];
    for (col, o) in out.iter_mut().enumerate() {
        let mut mc = m;
        for row in 0..3 {
            mc[row][col] = b[row];
        }
        *o = det(&mc) / d;
    }
    Some(out)
}

/// Line coordinates for a degenerate triangle: `A` at 0, `B` at `c`, `C`
/// on whichever side fits.
fn line_coords(tri: &Triangle) -> [f64; 3] {
    let fit = |x: f64| ((x - tri.c).abs() - tri.a).abs();
    let x2 = if fit(tri.b) <= fit(-tri.b) { tri.b } else { -tri.b };
    [0.0, tri.c, x2]
}

/// Embeds a triangle in the tripod.
///
/// Degenerate triangles go on ray 0 with smallest coordinate 0. If the
/// widest angle `φ` at `V` is at least 2π/3, `V` and its lower-index
/// neighbour `P` go on ray 0 and the third vertex on ray 1. Otherwise the
/// vertices go on the three rays at their Fermat–Torricelli distances.
pub fn embed_triple_tripod(tri: &Triangle) -> [RayPoint; 3] {
    if tri.is_degenerate() {
        let x = line_coords(tri);
        let lo = x.iter().copied().fold(f64::INFINITY, f64::min);
        return [0, 1, 2].map(|i| RayPoint::new(0, x[i] - lo).canonical());
    }
    if let Some(v) = wide_vertex(tri) {
        let others: Vec<usize> = (0..3).filter(|&j| j != v).collect();
        let (p, q) = (others[0], others[1]);
        let phi = tri.angles()[v];
        let qd = tri.side(v, q);
        let k = 2.0 * qd / 3f64.sqrt();
        let s = (-k * (phi + FRAC_PI_3).sin()).max(0.0);
        let mut out = [RayPoint::new(0, 0.0); 3];
        out[v] = RayPoint::new(0, s).canonical();
        out[p] = RayPoint::new(0, s + tri.side(v, p));
        out[q] = RayPoint::new(1, k * phi.sin());
        return out;
    }
    let ft = fermat_torricelli(tri).expect("nondegenerate");
    match ft.location {
        FtLocation::Interior { distances: r } => {
            [RayPoint::new(0, r[0]), RayPoint::new(1, r[1]), RayPoint::new(2, r[2])]
        }
        FtLocation::AtVertex { .. } => unreachable!("wide vertex handled above"),
    }
}

/// Embeds a triangle in `X_α`, or `None` if none was found.
///
/// Degenerate triangles go on ray 0 shifted by half the shortest side.
/// Otherwise, if the widest angle `θ` at `P` exceeds `α`, `P` and its
/// lower-index neighbour go on ray 0 and the third vertex on ray 1. Failing
/// that the constrained solver is asked for any embedding.
pub fn embed_triple_two_rays(tri: &Triangle, alpha: f64) -> Result<Option<[RayPoint; 3]>, GeometryError> {
    let rays = RaySpace::two_rays(alpha)?;
    if tri.is_degenerate() {
        let x = line_coords(tri);
        let lo = x.iter().copied().fold(f64::INFINITY, f64::min);
        let shift = 0.5 * tri.a.min(tri.b).min(tri.c);
        return Ok(Some([0, 1, 2].map(|i| RayPoint::new(0, x[i] - lo + shift))));
    }
    let ang = tri.angles();
    let p = (0..3).max_by(|&i, &j| ang[i].total_cmp(&ang[j])).unwrap();
    let theta = ang[p];
    if theta > alpha {
        let others: Vec<usize> = (0..3).filter(|&j| j != p).collect();
        let (q, v) = (others[0], others[1]);
        let vd = tri.side(p, v);
        let s = vd * (theta - alpha).sin() / alpha.sin();
        let mut out = [RayPoint::new(0, 0.0); 3];
        out[p] = RayPoint::new(0, s);
        out[q] = RayPoint::new(0, s + tri.side(p, q));
        out[v] = RayPoint::new(1, vd * theta.sin() / alpha.sin());
        return Ok(Some(out));
    }
    let sols = solve_constrained_embedding(tri, &rays, &[], SOLVER_TOL);
    Ok(sols.into_iter().next().map(|s| s.points))
}

fn check_puncture(e: &RayPoint, rays: usize) -> Result<(), GeometryError> {
    if e.t <= 0.0 {
        return Err(GeometryError::OriginNotAllowed);
    }
    if e.ray >= rays {
        return Err(GeometryError::InvalidInput(format!("ray {} does not exist", e.ray)));
    }
    Ok(())
}

/// The points `e, f, g` on the three tripod rays at the distance of `e`
/// from the origin, `e` first.
pub fn witness_points_tripod(e: &RayPoint) -> Result<[RayPoint; 3], GeometryError> {
    check_puncture(e, 3)?;
    Ok([*e, RayPoint::new((e.ray + 1) % 3, e.t), RayPoint::new((e.ray + 2) % 3, e.t)])
}

/// Equilateral triangle of side `t·√3`: no copy of it in the tripod avoids `e`.
pub fn witness_triangle_tripod(e: &RayPoint) -> Result<Triangle, GeometryError> {
    let p = witness_points_tripod(e)?;
    triangle_of(&RaySpace::tripod(), &p)
}

/// Side lengths of the triangle formed by three ray points.
pub fn triangle_of(rays: &RaySpace, p: &[RayPoint; 3]) -> Result<Triangle, GeometryError> {
    Triangle::new(rays.dist(&p[1], &p[2]), rays.dist(&p[0], &p[2]), rays.dist(&p[0], &p[1]))
}

/// The points `z, z1, z2` for a puncture `z` of `X_α`: `z1` on the other ray
/// at the same distance from the origin, and `z2` further out on that ray
/// with `|z1 z2| = |z z1|`. The triangle is isosceles with apex `z1` and
/// base angle `π/4 - α/4`. No range check on `α`.
pub fn two_ray_witness_points(z: &RayPoint, alpha: f64) -> Result<[RayPoint; 3], GeometryError> {
    check_puncture(z, 2)?;
    let other = 1 - z.ray;
    let leg = 2.0 * z.t * (alpha / 2.0).sin();
    Ok([*z, RayPoint::new(other, z.t), RayPoint::new(other, z.t + leg)])
}

/// Witness triangle for `z` in `X_α`, for `α ∈ [π/5, π/3)`.
pub fn witness_triangle_two_rays(z: &RayPoint, alpha: f64) -> Result<Triangle, GeometryError> {
    if !(PI / 5.0 - 1e-15..PI / 3.0).contains(&alpha) {
        return Err(GeometryError::AlphaOutOfRange(alpha));
    }
    let p = two_ray_witness_points(z, alpha)?;
    triangle_of(&RaySpace::two_rays(alpha)?, &p)
}

/// One solution of [`solve_constrained_embedding`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RayEmbedding {
    /// Ray of each vertex as assigned before solving.
    pub case: [usize; 3],
    /// Image of each vertex.
    pub points: [RayPoint; 3],
}

fn halton(mut i: usize, base: usize) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Residuals scaled by `d²` and their Jacobian.
fn system(s: &[f64; 3], cosg: &[f64; 3], d2: &[f64; 3]) -> ([f64; 3], [[f64; 3]; 3]) {
    let mut f = [0.0; 3];
    let mut j = [[0.0; 3]; 3];
    for (k, &(p, q)) in PAIRS.iter().enumerate() {
        let c = cosg[k];
        f[k] = (s[p] * s[p] + s[q] * s[q] - 2.0 * c * s[p] * s[q] - d2[k]) / d2[k];
        j[k][p] = (2.0 * s[p] - 2.0 * c * s[q]) / d2[k];
        j[k][q] = (2.0 * s[q] - 2.0 * c * s[p]) / d2[k];
    }
    (f, j)
}

fn norm2(f: &[f64; 3]) -> f64 {
    f.iter().map(|x| x * x).sum()
}

/// Levenberg–Marquardt from `s`; returns the point if the residual vanishes.
fn levenberg_marquardt(mut s: [f64; 3], cosg: &[f64; 3], d2: &[f64; 3]) -> Option<[f64; 3]> {
    let mut lambda = 1e-3;
    let (mut f, mut j) = system(&s, cosg, d2);
    let mut cost = norm2(&f);
    for _ in 0..200 {
        if cost < 1e-28 {
            break;
        }
        let mut jtj = [[0.0; 3]; 3];
        let mut g = [0.0; 3];
        for a in 0..3 {
            for b in 0..3 {
                jtj[a][b] = (0..3).map(|k| j[k][a] * j[k][b]).sum();
            }
            g[a] = (0..3).map(|k| j[k][a] * f[k]).sum();
        }
        let mut improved = false;
        for _ in 0..30 {
            let mut m = jtj;
            for a in 0..3 {
                m[a][a] += lambda * (jtj[a][a] + 1e-12);
            }
            let Some(step) = solve3(m, g) else {
                lambda *= 10.0;
                continue;
            };
            let cand = [s[0] - step[0], s[1] - step[1], s[2] - step[2]];
            let (cf, cj) = system(&cand, cosg, d2);
            let cc = norm2(&cf);
            if cc < cost {
                s = cand;
                f = cf;
                j = cj;
                cost = cc;
                lambda = (lambda * 0.3).max(1e-15);
                improved = true;
                break;
            }
            lambda *= 10.0;
        }
        if !improved {
            break;
        }
    }
    (cost < 1e-20).then_some(s)
}

fn distances_match(rays: &RaySpace, pts: &[RayPoint; 3], tri: &Triangle, tol: f64) -> bool {
    PAIRS.iter().all(|&(p, q)| {
        let d = tri.side(p, q);
        (rays.dist(&pts[p], &pts[q]) - d).abs() <= tol * d.max(1.0)
    })
}

fn admissible(rays: &RaySpace, pts: &[RayPoint; 3], forbidden: &[RayPoint], tol: f64) -> bool {
    if !rays.include_origin && pts.iter().any(|p| p.t < tol) {
        return false;
    }
    !pts.iter().any(|p| forbidden.iter().any(|f| rays.dist(p, f) < tol))
}

/// The single-ray placements of a degenerate triangle form a continuum;
/// this picks one: smallest coordinate 0 when the origin is allowed, half
/// the shortest side otherwise, moved outward past forbidden points.
fn single_ray_solution(
    tri: &Triangle,
    rays: &RaySpace,
    ray: usize,
    forbidden: &[RayPoint],
    tol: f64,
) -> Option<[RayPoint; 3]> {
    if !tri.is_degenerate() {
        return None;
    }
    let x = line_coords(tri);
    let lo = x.iter().copied().fold(f64::INFINITY, f64::min);
    let step = 0.5 * tri.a.min(tri.b).min(tri.c);
    let mut shift = if rays.include_origin { 0.0 } else { step };
    for _ in 0..=forbidden.len() * 3 + 1 {
        let pts = [0, 1, 2].map(|i| RayPoint::new(ray, x[i] - lo + shift).canonical());
        if admissible(rays, &pts, forbidden, tol) {
            return Some(pts);
        }
        shift += step;
    }
    None
}

/// Enumerates embeddings of `tri` into `rays` that avoid `forbidden`.
///
/// Every assignment of vertices to rays is tried. Three vertices on one ray
/// are placed in closed form; other assignments are solved by
/// Levenberg–Marquardt from [`MULTISTARTS`] Halton points. Solutions are
/// checked against the side lengths, deduplicated within `tol`, and sorted
/// by assignment then coordinates. An empty result means nothing was found
/// at this budget, not a proof of nonexistence.
pub fn solve_constrained_embedding(
    tri: &Triangle,
    rays: &RaySpace,
    forbidden: &[RayPoint],
    tol: f64,
) -> Vec<RayEmbedding> {
    let k = rays.len();
    let cases: Vec<[usize; 3]> = (0..k * k * k).map(|i| [i / (k * k), (i / k) % k, i % k]).collect();
    let d2 = PAIRS.map(|(p, q)| tri.side(p, q).powi(2));
    let dmax = tri.a.max(tri.b).max(tri.c);
    let min_gap =
        (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).map(|(i, j)| rays.gap(i, j)).fold(PI / 2.0, f64::min);
    let box_len = dmax * (1.0 + 1.0 / min_gap.sin());
    let per_case: Vec<Vec<RayEmbedding>> = cases
        .par_iter()
        .map(|&case| {
            let mut found = Vec::new();
            if case[0] == case[1] && case[1] == case[2] {
                if let Some(points) = single_ray_solution(tri, rays, case[0], forbidden, tol) {
                    found.push(RayEmbedding { case, points });
                }
                return found;
            }
            let cosg = PAIRS.map(|(p, q)| rays.gap(case[p], case[q]).cos());
            for i in 1..=MULTISTARTS {
                let start = [halton(i, 2), halton(i, 3), halton(i, 5)].map(|h| h * box_len);
                let Some(s) = levenberg_marquardt(start, &cosg, &d2) else { continue };
                if s.iter().any(|&v| v < -tol) {
                    continue;
                }
                let points = [0, 1, 2].map(|v| RayPoint::new(case[v], s[v].max(0.0)).canonical());
                if !distances_match(rays, &points, tri, tol) || !admissible(rays, &points, forbidden, tol) {
                    continue;
                }
                found.push(RayEmbedding { case, points });
            }
            found.sort_by(|x, y| cmp_points(&x.points, &y.points));
            found
        })
        .collect();
    let mut out: Vec<RayEmbedding> = Vec::new();
    for sol in per_case.into_iter().flatten() {
        let dup = out.iter().any(|o| (0..3).all(|v| rays.dist(&o.points[v], &sol.points[v]) < tol));
        if !dup {
            out.push(sol);
        }
    }
    out
}

fn cmp_points(x: &[RayPoint; 3], y: &[RayPoint; 3]) -> std::cmp::Ordering {
    x.iter()
        .zip(y)
        .map(|(p, q)| p.ray.cmp(&q.ray).then(p.t.total_cmp(&q.t)))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}
