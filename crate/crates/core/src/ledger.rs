//! Degree and genus bookkeeping for projections and blow-ups of Fano
//! threefolds. A Fano threefold of degree `2g - 2` embeds anticanonically in
//! `P^(g+1)`.
//!
//! Degrees here are small, so plain `i64` with checked arithmetic is used.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoRecord {
    pub degree: i64,
    pub genus: i64,
    pub ambient_dim: i64,
}

fn overflow() -> Error {
    Error::domain("integer overflow in degree bookkeeping")
}

pub fn genus_of_degree(degree: i64) -> Result<FanoRecord> {
    if degree <= 0 || degree % 2 != 0 {
        return Err(Error::usage(format!(
            "anticanonical degree must be positive and even, got {degree}"
        )));
    }
    let genus = degree / 2 + 1;
    Ok(FanoRecord {
        degree,
        genus,
        ambient_dim: genus + 1,
    })
}

/// Projection from a linear center of dimension `k` through a suitable
/// singular or smooth locus: genus and ambient dimension drop by `k + 1`,
/// degree by `2(k + 1)`.
pub fn project_from_center(rec: &FanoRecord, k: i64) -> Result<FanoRecord> {
    if k < 0 {
        return Err(Error::usage(format!("center dimension must be >= 0, got {k}")));
    }
    let drop = k.checked_add(1).ok_or_else(overflow)?;
    let degree = rec
        .degree
        .checked_sub(drop.checked_mul(2).ok_or_else(overflow)?)
        .ok_or_else(overflow)?;
    if degree <= 0 {
        return Err(Error::domain(format!(
            "projecting degree {} from a {k}-dimensional center leaves degree {degree}",
            rec.degree
        )));
    }
    genus_of_degree(degree)
}

/// Blow-up of a smooth point: `K = pullback(K) + 2E` gives a drop of 8.
pub fn blowup_point_degree(degree: i64) -> Result<i64> {
    if degree <= 8 {
        return Err(Error::usage(format!(
            "blowing up a point needs degree > 8, got {degree}"
        )));
    }
    Ok(degree - 8)
}

/// Blow-up of a smooth curve `C` of genus `genus_c`:
/// `new = old - 2(-K.C) - 2 + 2 g(C)`.
pub fn blowup_curve_degree(degree: i64, minus_k_dot_c: i64, genus_c: i64) -> Result<i64> {
    if genus_c < 0 {
        return Err(Error::usage(format!("curve genus must be >= 0, got {genus_c}")));
    }
    let result = minus_k_dot_c
        .checked_mul(2)
        .and_then(|t| degree.checked_sub(t))
        .and_then(|t| t.checked_sub(2))
        .and_then(|t| t.checked_add(genus_c.checked_mul(2)?))
        .ok_or_else(overflow)?;
    if result <= 0 {
        return Err(Error::domain(format!(
            "blowing up a curve with -K.C = {minus_k_dot_c}, g = {genus_c} on degree {degree} leaves degree {result}"
        )));
    }
    Ok(result)
}

/// Dimension of a projection center and the degree bound for a curve center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterBound {
    pub center_dim: i64,
    /// `2(center_dim - 1)` for a curve cut out by quadrics in a center of
    /// dimension at least 2; no bound is claimed for points or lines.
    pub max_curve_degree: Option<i64>,
}

impl fmt::Display for CenterBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.center_dim, self.max_curve_degree) {
            (_, Some(d)) => write!(f, "center dimension {}, curve degree <= {d}", self.center_dim),
            (0, None) => write!(f, "center dimension 0 (point center)"),
            (k, None) => write!(f, "center dimension {k}, no curve-degree bound"),
        }
    }
}

/// Center of the projection taking genus `g_prime` to genus `g`.
pub fn projection_center_bound(g: i64, g_prime: i64) -> Result<CenterBound> {
    if g_prime <= g {
        return Err(Error::usage(format!(
            "the source genus must exceed the target genus (got g = {g}, g' = {g_prime})"
        )));
    }
    let center_dim = g_prime.checked_sub(g).ok_or_else(overflow)? - 1;
    let max_curve_degree = (center_dim >= 2).then(|| 2 * (center_dim - 1));
    Ok(CenterBound {
        center_dim,
        max_curve_degree,
    })
}

/// `K^2 . E = a^2 k^2` for an exceptional divisor with discrepancy `a` whose
/// restriction has degree `k`.
pub fn exceptional_divisor_plane_degree(a: &Rational, k: i64) -> Rational {
    let k = Rational::from(k);
    a * a * &k * &k
}

/// One operation in a degree chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op")]
pub enum Move {
    Project { center_dim: i64 },
    BlowupPoint,
    BlowupCurve { minus_k_dot_c: i64, genus: i64 },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Project { center_dim: 0 } => write!(f, "project from a point"),
            Move::Project { center_dim } => write!(f, "project from a {center_dim}-plane"),
            Move::BlowupPoint => write!(f, "blow up a point"),
            Move::BlowupCurve { minus_k_dot_c, genus } => {
                write!(f, "blow up a curve (-K.C = {minus_k_dot_c}, g = {genus})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub step: Move,
    pub degree: i64,
}

/// A start degree followed by moves, each with the degree it produces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub start: i64,
    pub steps: Vec<ChainStep>,
}

impl Chain {
    pub fn run(start: i64, moves: impl IntoIterator<Item = Move>) -> Result<Chain> {
        let mut degree = start;
        let mut steps = Vec::new();
        for step in moves {
            degree = match &step {
                Move::Project { center_dim } => project_from_center(&genus_of_degree(degree)?, *center_dim)?.degree,
                Move::BlowupPoint => blowup_point_degree(degree)?,
                Move::BlowupCurve { minus_k_dot_c, genus } => blowup_curve_degree(degree, *minus_k_dot_c, *genus)?,
            };
            steps.push(ChainStep { step, degree });
        }
        Ok(Chain { start, steps })
    }

    pub fn final_degree(&self) -> i64 {
        self.steps.last().map_or(self.start, |s| s.degree)
    }

    pub fn degrees(&self) -> Vec<i64> {
        std::iter::once(self.start)
            .chain(self.steps.iter().map(|s| s.degree))
            .collect()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for s in &self.steps {
            write!(f, " -[{}]-> {}", s.step, s.degree)?;
        }
        Ok(())
    }
}
