//! Exact arithmetic foundation: arbitrary-precision rationals, vectors in
//! the lattice Z^3, 3x3 determinants and small rational linear solves.
//!
//! Nothing in the crate touches floating point. Every value that can be
//! fractional is a [`Rational`], always kept in lowest terms with a
//! positive denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;

/// Exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: impl Into<Int>, denom: impl Into<Int>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::usage("rational with zero denominator"));
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_int(value: impl Into<Int>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, if this rational is integral.
    pub fn to_integer(&self) -> Option<Int> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// `self / rhs`, or `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Rational) -> Option<Rational> {
        (!rhs.is_zero()).then(|| Rational(&self.0 / &rhs.0))
    }

    /// Sign as -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<Int>()
                .map_err(|_| Error::Parse(format!("invalid rational '{s}'")))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse(n)?, parse(d)?),
            None => Ok(Rational::from_int(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_int(value)
    }
}

impl From<Int> for Rational {
    fn from(value: Int) -> Self {
        Rational::from_int(value)
    }
}

impl From<&Int> for Rational {
    fn from(value: &Int) -> Self {
        Rational::from_int(value.clone())
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

// Division by zero panics, like integer division; use `checked_div` when the
// divisor is not known to be nonzero.
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// A vector in the lattice Z^3.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVec3 {
    pub x: Int,
    pub y: Int,
    pub z: Int,
}

impl LatticeVec3 {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>, z: impl Into<Int>) -> Self {
        LatticeVec3 {
            x: x.into(),
            y: y.into(),
            z: z.into(),
        }
    }

    pub fn zero() -> Self {
        LatticeVec3::new(0, 0, 0)
    }

    pub fn coords(&self) -> [&Int; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// gcd(|x|, |y|, |z|) = 1.
    pub fn is_primitive(&self) -> bool {
        self.x.gcd(&self.y).gcd(&self.z).is_one()
    }

    pub fn dot(&self, other: &LatticeVec3) -> Int {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    /// Pairing with a rational point of the dual space.
    pub fn pair(&self, m: &[Rational; 3]) -> Rational {
        let [x, y, z] = self.to_rational();
        &x * &m[0] + &y * &m[1] + &z * &m[2]
    }

    pub fn cross(&self, other: &LatticeVec3) -> LatticeVec3 {
        LatticeVec3 {
            x: &self.y * &other.z - &self.z * &other.y,
            y: &self.z * &other.x - &self.x * &other.z,
            z: &self.x * &other.y - &self.y * &other.x,
        }
    }

    pub fn to_rational(&self) -> [Rational; 3] {
        [
            Rational::from(&self.x),
            Rational::from(&self.y),
            Rational::from(&self.z),
        ]
    }

    /// Image under the integer matrix `m` acting on column vectors.
    pub fn transform(&self, m: &[[i64; 3]; 3]) -> LatticeVec3 {
        let row = |r: &[i64; 3]| {
            Int::from(r[0]) * &self.x + Int::from(r[1]) * &self.y + Int::from(r[2]) * &self.z
        };
        LatticeVec3 {
            x: row(&m[0]),
            y: row(&m[1]),
            z: row(&m[2]),
        }
    }
}

impl Add for &LatticeVec3 {
    type Output = LatticeVec3;
    fn add(self, rhs: &LatticeVec3) -> LatticeVec3 {
        LatticeVec3 {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            z: &self.z + &rhs.z,
        }
    }
}

impl Sub for &LatticeVec3 {
    type Output = LatticeVec3;
    fn sub(self, rhs: &LatticeVec3) -> LatticeVec3 {
        LatticeVec3 {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
            z: &self.z - &rhs.z,
        }
    }
}

impl Neg for &LatticeVec3 {
    type Output = LatticeVec3;
    fn neg(self) -> LatticeVec3 {
        LatticeVec3 {
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }
}

impl fmt::Display for LatticeVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

impl fmt::Debug for LatticeVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Signed determinant of the 3x3 matrix whose rows are `a`, `b`, `c`.
pub fn det3(a: &LatticeVec3, b: &LatticeVec3, c: &LatticeVec3) -> Int {
    a.dot(&b.cross(c))
}

/// A point of Q^3.
pub type RationalPoint = [Rational; 3];

pub fn det3_rational(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> Rational {
    dot_rational(a, &cross_rational(b, c))
}

pub fn cross_rational(a: &RationalPoint, b: &RationalPoint) -> RationalPoint {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn dot_rational(a: &RationalPoint, b: &RationalPoint) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn sub_rational(a: &RationalPoint, b: &RationalPoint) -> RationalPoint {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

/// Solves `rows[i] . m = rhs[i]` for `m` by Cramer's rule.
///
/// Returns `None` when the rows are linearly dependent; a singular system is
/// an ordinary outcome, not an error.
pub fn solve3(rows: &[LatticeVec3; 3], rhs: &[Rational; 3]) -> Option<[Rational; 3]> {
    let det = det3(&rows[0], &rows[1], &rows[2]);
    if det.is_zero() {
        return None;
    }
    let det = Rational::from_int(det);
    let r: Vec<RationalPoint> = rows.iter().map(LatticeVec3::to_rational).collect();
    // Column k of the matrix is replaced by rhs.
    let solve_col = |k: usize| {
        let replaced: Vec<RationalPoint> = r
            .iter()
            .zip(rhs)
            .map(|(row, value)| {
                let mut row = row.clone();
                row[k] = value.clone();
                row
            })
            .collect();
        det3_rational(&replaced[0], &replaced[1], &replaced[2]) / &det
    };
    Some([solve_col(0), solve_col(1), solve_col(2)])
}
