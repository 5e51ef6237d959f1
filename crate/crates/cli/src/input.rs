//! Reading input files and parsing argument values.

use std::fs;
use std::io::Read;
use std::path::Path;

use msu_core::f2::F2Point;
use msu_core::graph::WeightedGraph;
use msu_core::io::{parse_family, parse_graph, parse_sides, parse_space, parse_union};
use msu_core::rays::{RayPoint, Triangle};
use msu_core::union::{MPoint, TaggedPoint, UnionSpace};
use msu_core::{FiniteMetricSpace, Scalar};

/// Reads a file, or standard input for `-`.
pub fn read_text(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn space(path: &Path, tol: f64) -> Result<FiniteMetricSpace, String> {
    parse_space(&read_text(path)?, tol).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn graph(path: &Path, tol: f64) -> Result<WeightedGraph, String> {
    parse_graph(&read_text(path)?, tol).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn union(path: &Path, tol: f64) -> Result<UnionSpace, String> {
    parse_union(&read_text(path)?, tol).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn triangle(path: &Path) -> Result<Triangle, String> {
    let [a, b, c] = parse_sides(&read_text(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    Triangle::new(a, b, c).map_err(|e| format!("{}: {e}", path.display()))
}

/// A JSON array of spaces, or a directory whose `*.json` files are read in
/// file-name order.
pub fn family(path: &Path, tol: f64) -> Result<Vec<FiniteMetricSpace>, String> {
    if !path.is_dir() {
        return parse_family(&read_text(path)?, tol).map_err(|e| format!("{}: {e}", path.display()));
    }
    let mut files: Vec<_> = fs::read_dir(path)
        .map_err(|e| format!("{}: {e}", path.display()))?
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files.iter().map(|p| space(p, tol)).collect()
}

/// A point given by index or by label.
pub fn point(x: &FiniteMetricSpace, s: &str) -> Result<usize, String> {
    if let Some(i) = x.labels().iter().position(|l| l == s) {
        return Ok(i);
    }
    match s.parse::<usize>() {
        Ok(i) if i < x.len() => Ok(i),
        _ => Err(format!("no point `{s}` in a space of {} points", x.len())),
    }
}

pub fn scalar(s: &str) -> Result<Scalar, String> {
    s.parse::<Scalar>().map_err(|_| format!("`{s}` is not a number or p/q rational"))
}

/// A comma-separated list of scalars.
#[derive(Debug, Clone)]
pub struct ScalarList(pub Vec<Scalar>);

pub fn scalar_list(s: &str) -> Result<ScalarList, String> {
    s.split(',').map(scalar).collect::<Result<_, _>>().map(ScalarList)
}

/// `RAY:T`, for example `1:0.5`.
pub fn ray_point(s: &str) -> Result<RayPoint, String> {
    let bad = || format!("`{s}` is not of the form RAY:T");
    let (r, t) = s.split_once(':').ok_or_else(bad)?;
    let ray = r.trim().parse().map_err(|_| bad())?;
    let t: f64 = t.trim().parse().map_err(|_| bad())?;
    if !t.is_finite() || t < 0.0 {
        return Err(format!("`{s}`: the coordinate must be finite and nonnegative"));
    }
    Ok(RayPoint::new(ray, t))
}

/// `PART.POINT`, for example `0.2`.
pub fn tagged(s: &str) -> Result<TaggedPoint, String> {
    let bad = || format!("`{s}` is not of the form PART.POINT");
    let (p, q) = s.split_once('.').ok_or_else(bad)?;
    Ok(TaggedPoint { part: p.parse().map_err(|_| bad())?, point: q.parse().map_err(|_| bad())? })
}

/// `r:T` for a real point, `q:PART.POINT` for a quadruple point.
pub fn m_point(s: &str) -> Result<MPoint, String> {
    match s.split_once(':') {
        Some(("r", t)) => Ok(MPoint::real(scalar(t)?)),
        Some(("q", p)) => Ok(MPoint::Quad(tagged(p)?)),
        _ => Err(format!("`{s}` is not of the form r:T or q:PART.POINT")),
    }
}

/// A point of the F2 space by its coordinate: in `(-1, 0)` or a positive
/// integer.
pub fn f2_point(s: &str) -> Result<F2Point, String> {
    let c = scalar(s)?;
    if !c.is_exact() {
        return Err(format!("`{s}`: F2 coordinates must be exact"));
    }
    let zero = Scalar::zero();
    let p = if c.lt_tol(&zero, 0.0) {
        F2Point::new_neg(-&c)
    } else {
        let (n, f) = c.floor_frac();
        if !f.is_zero_tol(0.0) {
            return Err(format!("`{s}` is neither in (-1, 0) nor a positive integer"));
        }
        let n = u64::try_from(n).map_err(|_| format!("`{s}` is out of range"))?;
        F2Point::new_nat(n)
    };
    p.map_err(|e| format!("`{s}`: {e}"))
}
