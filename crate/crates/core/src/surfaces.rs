//! Base surfaces: the projective plane and the Hirzebruch surfaces F_n.
//!
//! On F_n the Picard lattice has basis (h, l) where h is the minimal section
//! and l a fibre, with h^2 = -n, h.l = 1, l^2 = 0. P1 x P1 is F_0, with h and
//! l the two rulings. On P^2 the lattice is generated by a line L with L^2 = 1.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::Int;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseSurface {
    ProjectivePlane,
    Hirzebruch(u32),
}

impl BaseSurface {
    pub const P1_X_P1: BaseSurface = BaseSurface::Hirzebruch(0);

    /// `n` for F_n, `None` for P^2.
    pub fn hirzebruch_index(&self) -> Option<u32> {
        match self {
            BaseSurface::ProjectivePlane => None,
            BaseSurface::Hirzebruch(n) => Some(*n),
        }
    }
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSurface::ProjectivePlane => write!(f, "P2"),
            BaseSurface::Hirzebruch(n) => write!(f, "F{n}"),
        }
    }
}

impl FromStr for BaseSurface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("P2") {
            return Ok(BaseSurface::ProjectivePlane);
        }
        if t.eq_ignore_ascii_case("P1xP1") {
            return Ok(BaseSurface::P1_X_P1);
        }
        t.strip_prefix(['F', 'f'])
            .and_then(|n| n.parse::<u32>().ok())
            .map(BaseSurface::Hirzebruch)
            .ok_or_else(|| Error::Parse(format!("unknown base surface '{s}' (expected P2 or Fn)")))
    }
}

impl Serialize for BaseSurface {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BaseSurface {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A divisor class on a base surface.
///
/// On P^2 the class is `a L` and `b` is always zero; on F_n it is `a h + b l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceClass {
    surface: BaseSurface,
    #[serde(with = "crate::serde_int")]
    a: Int,
    #[serde(with = "crate::serde_int")]
    b: Int,
}

impl SurfaceClass {
    /// General constructor; rejects a nonzero `b` on P^2.
    pub fn new(surface: BaseSurface, a: impl Into<Int>, b: impl Into<Int>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if surface == BaseSurface::ProjectivePlane && !b.is_zero() {
            return Err(Error::usage("a class on P2 has a single coefficient"));
        }
        Ok(SurfaceClass { surface, a, b })
    }

    /// `a L` on P^2.
    pub fn plane(a: impl Into<Int>) -> Self {
        SurfaceClass {
            surface: BaseSurface::ProjectivePlane,
            a: a.into(),
            b: Int::zero(),
        }
    }

    /// `a h + b l` on F_n.
    pub fn ruled(n: u32, a: impl Into<Int>, b: impl Into<Int>) -> Self {
        SurfaceClass {
            surface: BaseSurface::Hirzebruch(n),
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero(surface: BaseSurface) -> Self {
        SurfaceClass {
            surface,
            a: Int::zero(),
            b: Int::zero(),
        }
    }

    pub fn surface(&self) -> BaseSurface {
        self.surface
    }

    /// Coefficient of L (P^2) or of h (F_n).
    pub fn a(&self) -> &Int {
        &self.a
    }

    /// Coefficient of l on F_n; zero on P^2.
    pub fn b(&self) -> &Int {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn same_surface(&self, other: &SurfaceClass) -> Result<()> {
        if self.surface != other.surface {
            return Err(Error::usage(format!(
                "classes live on different surfaces ({} vs {})",
                self.surface, other.surface
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SurfaceClass) -> Result<SurfaceClass> {
        self.same_surface(other)?;
        Ok(SurfaceClass {
            surface: self.surface,
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        })
    }

    pub fn try_sub(&self, other: &SurfaceClass) -> Result<SurfaceClass> {
        self.try_add(&other.scale(-1))
    }

    pub fn scale(&self, k: impl Into<Int>) -> SurfaceClass {
        let k = k.into();
        SurfaceClass {
            surface: self.surface,
            a: &self.a * &k,
            b: &self.b * &k,
        }
    }

    pub fn neg(&self) -> SurfaceClass {
        self.scale(-1)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, coeff: &Int, symbol: &str, first: bool) -> fmt::Result {
    if coeff.is_zero() {
        return Ok(());
    }
    let sign = if coeff.is_negative() {
        "-"
    } else if first {
        ""
    } else {
        "+"
    };
    let mag = coeff.abs();
    if mag.is_one() {
        write!(f, "{sign}{symbol}")
    } else {
        write!(f, "{sign}{mag}{symbol}")
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        match self.surface {
            BaseSurface::ProjectivePlane => write_term(f, &self.a, "L", true),
            BaseSurface::Hirzebruch(_) => {
                write_term(f, &self.a, "h", true)?;
                write_term(f, &self.b, "l", self.a.is_zero())
            }
        }
    }
}

/// The intersection form on the Picard lattice of the common surface.
pub fn intersect(d1: &SurfaceClass, d2: &SurfaceClass) -> Result<Int> {
    d1.same_surface(d2)?;
    Ok(match d1.surface {
        BaseSurface::ProjectivePlane => &d1.a * &d2.a,
        BaseSurface::Hirzebruch(n) => {
            -Int::from(n) * &d1.a * &d2.a + &d1.a * &d2.b + &d2.a * &d1.b
        }
    })
}

/// K = -3L on P^2 and K = -2h - (n+2)l on F_n.
pub fn canonical_class(s: BaseSurface) -> SurfaceClass {
    match s {
        BaseSurface::ProjectivePlane => SurfaceClass::plane(-3),
        BaseSurface::Hirzebruch(n) => SurfaceClass::ruled(n, -2, -(i64::from(n) + 2)),
    }
}

/// K^2: 9 for P^2 and 8 for every F_n.
pub fn k_squared(s: BaseSurface) -> Int {
    match s {
        BaseSurface::ProjectivePlane => Int::from(9),
        BaseSurface::Hirzebruch(_) => Int::from(8),
    }
}

/// Generators of the nef cone: `L` on P^2; `l` and `h + n l` on F_n.
pub fn nef_cone_generators(s: BaseSurface) -> Vec<SurfaceClass> {
    match s {
        BaseSurface::ProjectivePlane => vec![SurfaceClass::plane(1)],
        BaseSurface::Hirzebruch(n) => vec![SurfaceClass::ruled(n, 0, 1), SurfaceClass::ruled(n, 1, n)],
    }
}

/// Whether `d` is a non-negative combination of the nef cone generators.
pub fn is_nef(d: &SurfaceClass) -> bool {
    match d.surface {
        BaseSurface::ProjectivePlane => !d.a.is_negative(),
        BaseSurface::Hirzebruch(n) => !d.a.is_negative() && d.b >= &d.a * Int::from(n),
    }
}
