//! The subspace `(-1, 0) ∪ {1, 2, 3, ...}` of the real line, which contains
//! every two-point space, and the open unit interval.

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::GeometryError;
use crate::scalar::Scalar;

/// A point of `(-1, 0) ∪ ℕ`: `Neg(s)` is the real `-s` with `0 < s < 1`,
/// `Nat(n)` is the natural number `n >= 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum F2Point {
    Neg(Scalar),
    Nat(u64),
}

impl F2Point {
    /// Validates the range of the payload.
    pub fn new_neg(s: Scalar) -> Result<Self, GeometryError> {
        if !s.is_positive_tol(0.0) || !s.lt_tol(&Scalar::int(1), 0.0) {
            return Err(GeometryError::InvalidInput(format!("{s} is not in (0, 1)")));
        }
        Ok(F2Point::Neg(s))
    }

    pub fn new_nat(n: u64) -> Result<Self, GeometryError> {
        if n == 0 {
            return Err(GeometryError::InvalidInput("naturals start at 1".into()));
        }
        Ok(F2Point::Nat(n))
    }

    /// The real number this point stands for.
    pub fn coordinate(&self) -> Scalar {
        match self {
            F2Point::Neg(s) => -s,
            F2Point::Nat(n) => Scalar::int(*n as i64),
        }
    }
}

pub fn f2_distance(p: &F2Point, q: &F2Point) -> Scalar {
    (p.coordinate() - q.coordinate()).abs()
}

fn nat(n: &num_bigint::BigInt) -> Result<u64, GeometryError> {
    n.to_u64().filter(|&v| v < i64::MAX as u64).ok_or_else(|| GeometryError::InvalidInput(format!("{n} is too large")))
}

/// A pair of points at distance `t`.
///
/// With `t = n + f`, `n = ⌊t⌋`: for `n >= 1` and `f > 0` the pair is
/// `(-f, n)`, the only one. Integer `t` gives `(1, 1 + t)`. For `t < 1` the
/// pair is `(-(1+t)/2, -(1-t)/2)`, centered in `(-1, 0)`.
pub fn f2_embed_distance(t: &Scalar) -> Result<(F2Point, F2Point), GeometryError> {
    if !t.is_positive_tol(0.0) {
        return Err(GeometryError::NonpositiveDistance);
    }
    let (n, frac) = t.floor_frac();
    let zero_frac = match &frac {
        Scalar::Exact(r) => r.is_zero(),
        Scalar::Float(x) => *x == 0.0,
    };
    if zero_frac {
        let n = nat(&n)?;
        return Ok((F2Point::Nat(1), F2Point::Nat(1 + n)));
    }
    if n.is_zero() {
        let one = Scalar::int(1).to_mode(t.mode());
        let half = Scalar::ratio(1, 2).to_mode(t.mode());
        let hi = &(&one + t) * &half;
        let lo = &(&one - t) * &half;
        return Ok((F2Point::Neg(hi), F2Point::Neg(lo)));
    }
    Ok((F2Point::Neg(frac), F2Point::Nat(nat(&n)?)))
}

/// A distance realized in the space but not once `q` is removed: `n + 1/2`
/// for `Nat(n)` (only `(-1/2, n)`), `1 + s` for `Neg(s)` (only `(-s, 1)`).
pub fn f2_removal_witness(q: &F2Point) -> Scalar {
    match q {
        F2Point::Nat(n) => &Scalar::int(*n as i64) + &Scalar::ratio(1, 2),
        F2Point::Neg(s) => &Scalar::int(1).to_mode(s.mode()) + s,
    }
}

/// A closed interval of length `t` inside `(0, 1)`, avoiding the optional
/// puncture `p`.
///
/// Without a puncture the interval is centered. With one, it is centered in
/// the larger of `(0, p)` and `(p, 1)` (the right one on ties), and `None`
/// when `t >= max(p, 1 - p)`.
pub fn interval_embed(t: &Scalar, puncture: Option<&Scalar>) -> Result<Option<(Scalar, Scalar)>, GeometryError> {
    let zero = Scalar::zero();
    let one = Scalar::int(1);
    let inside = |x: &Scalar| zero.lt_tol(x, 0.0) && x.lt_tol(&one, 0.0);
    if !inside(t) {
        return Err(GeometryError::LengthOutOfRange(t.to_string()));
    }
    let half = Scalar::ratio(1, 2);
    let center_in = |lo: &Scalar, hi: &Scalar| {
        let mid = &(lo + hi) * &half;
        let r = t * &half;
        (&mid - &r, &mid + &r)
    };
    let Some(p) = puncture else {
        return Ok(Some(center_in(&zero, &one)));
    };
    if !inside(p) {
        return Err(GeometryError::InvalidInput(format!("puncture {p} is not in (0, 1)")));
    }
    let right = &one - p;
    let (lo, hi, gap) = if p.lt_tol(&right, 0.0) || p.eq_tol(&right, 0.0) {
        (p.clone(), one, right)
    } else {
        (zero, p.clone(), p.clone())
    };
    if !t.lt_tol(&gap, 0.0) {
        return Ok(None);
    }
    Ok(Some(center_in(&lo, &hi)))
}
