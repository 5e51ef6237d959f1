//! Distance values: exact rationals or binary64 reals.
//!
//! Combinatorial code runs on [`Scalar::Exact`] values and compares them
//! exactly. Values fed from geometry arrive as [`Scalar::Float`] and are
//! compared with an absolute-or-relative tolerance. Arithmetic between an
//! exact and a float operand produces a float.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::ScalarParseError;

/// Default comparison tolerance for float-mode values.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Arithmetic mode of a value or of a whole distance matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(BigRational::zero())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den` in lowest terms. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn float(x: f64) -> Self {
        Scalar::Float(x)
    }

    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(x) => *x,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    /// Converts to the requested mode. Float to exact is the exact binary
    /// expansion of the double, so it never loses information.
    pub fn to_mode(&self, mode: Mode) -> Scalar {
        match (self, mode) {
            (Scalar::Exact(_), Mode::Exact) | (Scalar::Float(_), Mode::Float) => self.clone(),
            (Scalar::Exact(r), Mode::Float) => Scalar::Float(r.to_f64().unwrap_or(f64::NAN)),
            (Scalar::Float(x), Mode::Exact) => {
                Scalar::Exact(BigRational::from_float(*x).unwrap_or_else(BigRational::zero))
            }
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(x) => Scalar::Float(x.abs()),
        }
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    /// Floor and fractional part, `self = floor + frac` with `frac` in `[0, 1)`.
    pub fn floor_frac(&self) -> (BigInt, Scalar) {
        match self {
            Scalar::Exact(r) => {
                let fl = r.floor();
                let frac = r - &fl;
                (fl.to_integer(), Scalar::Exact(frac))
            }
            Scalar::Float(x) => {
                let fl = x.floor();
                (BigInt::from(fl as i64), Scalar::Float(x - fl))
            }
        }
    }

    /// Exact comparison when both operands are exact; otherwise tolerant
    /// comparison in binary64 (values within `tol` compare equal).
    pub fn cmp_tol(&self, other: &Scalar, tol: f64) -> Ordering {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                if approx_eq_f64(a, b, tol) {
                    Ordering::Equal
                } else if a < b {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    pub fn eq_tol(&self, other: &Scalar, tol: f64) -> bool {
        self.cmp_tol(other, tol) == Ordering::Equal
    }

    pub fn le_tol(&self, other: &Scalar, tol: f64) -> bool {
        self.cmp_tol(other, tol) != Ordering::Greater
    }

    pub fn lt_tol(&self, other: &Scalar, tol: f64) -> bool {
        self.cmp_tol(other, tol) == Ordering::Less
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.eq_tol(&Scalar::zero(), tol)
    }

    pub fn is_positive_tol(&self, tol: f64) -> bool {
        self.cmp_tol(&Scalar::zero(), tol) == Ordering::Greater
    }

    pub fn max_tol<'a>(&'a self, other: &'a Scalar, tol: f64) -> &'a Scalar {
        if self.lt_tol(other, tol) {
            other
        } else {
            self
        }
    }

    /// Strict structural equality: same mode and identical value.
    pub fn identical(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            (Scalar::Float(a), Scalar::Float(b)) => a.to_bits() == b.to_bits(),
            _ => false,
        }
    }

    /// JSON form: `"p/q"` (or `"p"`) strings in exact mode, numbers in float mode.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Exact(_) => serde_json::Value::String(self.to_string()),
            Scalar::Float(x) => {
                serde_json::Number::from_f64(*x).map(serde_json::Value::Number).unwrap_or(serde_json::Value::Null)
            }
        }
    }
}

/// `|a - b| <= max(tol, tol * max(|a|, |b|))`.
pub fn approx_eq_f64(a: f64, b: f64, tol: f64) -> bool {
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= tol.max(tol * scale)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    /// Parses `"p/q"` or an integer as an exact rational; anything else that
    /// parses as a float becomes a float value.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| ScalarParseError(s.to_string()))?;
            let d: BigInt = d.trim().parse().map_err(|_| ScalarParseError(s.to_string()))?;
            if d.is_zero() {
                return Err(ScalarParseError(s.to_string()));
            }
            return Ok(Scalar::Exact(BigRational::new(n, d)));
        }
        if let Ok(n) = s.parse::<BigInt>() {
            return Ok(Scalar::Exact(BigRational::from_integer(n)));
        }
        match s.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(Scalar::Float(x)),
            _ => Err(ScalarParseError(s.to_string())),
        }
    }
}

/// Strict equality, same as [`Scalar::identical`].
impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.identical(other)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(_) => s.collect_str(self),
            Scalar::Float(x) => s.serialize_f64(*x),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Exact(r)
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Self {
        Scalar::Float(x)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    _ => Scalar::Float(self.to_f64() $op rhs.to_f64()),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self) $op (&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self) $op rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Exact when every entry is exact.
pub fn determinant(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::int(1);
    }
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = Scalar::int(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero_tol(0.0) {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero_tol(0.0)) else {
                return Scalar::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = &v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}
