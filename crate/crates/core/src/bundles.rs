//! Chern-class calculus on P^1-bundles `W = P(E)` over a base surface, and on
//! scrolls and quadric bundles over P^1.
//!
//! For a rank-2 bundle `E` with Chern classes `c1`, `c2` and tautological
//! class `D` on `P(E)`, the Grothendieck relation gives
//! `D^2 = D.c1 - c2` and `D^3 = c1^2 - c2`, so for `aD + B` (with `B` pulled
//! back from the base)
//!
//! ```text
//! (aD + B)^3 = a^3 (c1^2 - c2) + 3 a^2 (c1.B) + 3 a (B^2).
//! ```
//!
//! The relative Euler sequence gives `-K_W = 2D + (-K_base - c1)`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Int, Rational};
use crate::surfaces::{canonical_class, intersect, k_squared, nef_cone_generators, BaseSurface, SurfaceClass};

/// Chern data `(base, c1, c2)` of a rank-2 bundle on a base surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTwoBundleData {
    base: BaseSurface,
    c1: SurfaceClass,
    #[serde(with = "crate::serde_int")]
    c2: Int,
}

impl RankTwoBundleData {
    pub fn new(base: BaseSurface, c1: SurfaceClass, c2: impl Into<Int>) -> Result<Self> {
        if c1.surface() != base {
            return Err(Error::usage(format!(
                "c1 lives on {} but the base is {base}",
                c1.surface()
            )));
        }
        Ok(RankTwoBundleData {
            base,
            c1,
            c2: c2.into(),
        })
    }

    pub fn base(&self) -> BaseSurface {
        self.base
    }

    pub fn c1(&self) -> &SurfaceClass {
        &self.c1
    }

    pub fn c2(&self) -> &Int {
        &self.c2
    }
}

/// A divisor class `d_coeff * D + pullback` on `P(E)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleClass {
    pub d_coeff: Int,
    pub pullback: SurfaceClass,
}

impl fmt::Display for BundleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d_part = if self.d_coeff.is_zero() {
            None
        } else if self.d_coeff.is_one() {
            Some("D".to_string())
        } else if self.d_coeff == -Int::one() {
            Some("-D".to_string())
        } else {
            Some(format!("{}D", self.d_coeff))
        };
        match (d_part, self.pullback.is_zero()) {
            (None, true) => write!(f, "0"),
            (Some(d), true) => write!(f, "{d}"),
            (None, false) => write!(f, "pi*({})", self.pullback),
            (Some(d), false) => write!(f, "{d} + pi*({})", self.pullback),
        }
    }
}

/// `-K_W = 2D + pi*(-K_base - c1)`.
pub fn p1_bundle_anticanonical(data: &RankTwoBundleData) -> BundleClass {
    let minus_k = canonical_class(data.base).neg();
    let pullback = minus_k
        .try_sub(&data.c1)
        .expect("c1 lives on the base by construction");
    BundleClass {
        d_coeff: Int::from(2),
        pullback,
    }
}

/// `(aD + pi*B)^3` via the Grothendieck relation.
pub fn triple_intersection(data: &RankTwoBundleData, cls: &BundleClass) -> Result<Int> {
    let a = &cls.d_coeff;
    let b = &cls.pullback;
    let c1_sq = intersect(&data.c1, &data.c1)?;
    let c1_b = intersect(&data.c1, b)?;
    let b_sq = intersect(b, b)?;
    let d_cubed = c1_sq - &data.c2;
    Ok(a * a * a * d_cubed + Int::from(3) * a * a * c1_b + Int::from(3) * a * b_sq)
}

/// `(-K_W)^3 = 6 K^2 + 2 c1^2 - 8 c2`.
pub fn degree_p1_bundle(data: &RankTwoBundleData) -> Int {
    let c1_sq = intersect(&data.c1, &data.c1).expect("c1 lives on the base");
    Int::from(6) * k_squared(data.base) + Int::from(2) * c1_sq - Int::from(8) * &data.c2
}

/// Result of solving the degree formula for `c2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C2Solution {
    pub c2: Rational,
    pub integral: bool,
}

/// The unique rational `c2` with `degree_p1_bundle = target`.
pub fn solve_c2_for_degree(base: BaseSurface, c1: &SurfaceClass, target: impl Into<Int>) -> Result<C2Solution> {
    if c1.surface() != base {
        return Err(Error::usage("c1 must live on the given base"));
    }
    let c1_sq = intersect(c1, c1)?;
    let numer = Int::from(6) * k_squared(base) + Int::from(2) * c1_sq - target.into();
    let c2 = Rational::new(numer, 8)?;
    Ok(C2Solution {
        integral: c2.is_integer(),
        c2,
    })
}

/// Riemann-Roch on the base: `chi(E) = (c1^2 - 2 c2 - K.c1) / 2 + 2`.
pub fn chi_rank2(data: &RankTwoBundleData) -> Rational {
    let k = canonical_class(data.base);
    let c1_sq = intersect(&data.c1, &data.c1).expect("c1 lives on the base");
    let k_c1 = intersect(&k, &data.c1).expect("c1 lives on the base");
    let twice = c1_sq - Int::from(2) * &data.c2 - k_c1;
    Rational::new(twice, 2).expect("nonzero denominator") + Rational::from(2)
}

/// `chi(E)` on F_n for `c1 = a h + b l`, `c2 = c`, expanded:
/// `-n a (a+1) / 2 + a b + a + b - c + 2`.
pub fn chi_hirzebruch_expanded(n: u32, a: &Int, b: &Int, c: &Int) -> Rational {
    let n = Int::from(n);
    let half = Rational::new(-(n * a * (a + Int::one())), 2).expect("nonzero denominator");
    half + Rational::from(a * b + a + b - c + Int::from(2))
}

/// `chi(E)` on F_n in the factored form `(b - n a / 2)(a + 1) + a - c + 2`.
pub fn chi_hirzebruch_factored(n: u32, a: &Int, b: &Int, c: &Int) -> Rational {
    let b_shift = Rational::from(b.clone()) - Rational::new(Int::from(n) * a, 2).expect("nonzero denominator");
    b_shift * Rational::from(a + Int::one()) + Rational::from(a - c + Int::from(2))
}

/// Chern data of `E (x) O(B)`: `c1' = c1 + 2B`, `c2' = c2 + c1.B + B^2`.
pub fn twist(data: &RankTwoBundleData, b: &SurfaceClass) -> Result<RankTwoBundleData> {
    let c1 = data.c1.try_add(&b.scale(2))?;
    let c2 = &data.c2 + intersect(&data.c1, b)? + intersect(b, b)?;
    RankTwoBundleData::new(data.base, c1, c2)
}

/// `|d1 - d2| <= 2 + Z^2` for the splitting type of `E` on a moving rational curve `Z`.
pub fn split_gap_bound_holds(d1: impl Into<Int>, d2: impl Into<Int>, z_self: impl Into<Int>) -> bool {
    let gap = (d1.into() - d2.into()).abs();
    gap <= Int::from(2) + z_self.into()
}

/// `c1.B <= -3K.B` for every generator `B` of the nef cone of the base.
pub fn c1_nef_dominated(base: BaseSurface, c1: &SurfaceClass) -> Result<bool> {
    if c1.surface() != base {
        return Err(Error::usage("c1 must live on the given base"));
    }
    let minus_3k = canonical_class(base).scale(-3);
    for gen in nef_cone_generators(base) {
        if intersect(c1, &gen)? > intersect(&minus_3k, &gen)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splitting degrees `d1 >= ... >= d_r = 0` of `E = sum O(d_i)` on P^1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollData {
    degrees: Vec<Int>,
}

impl ScrollData {
    pub fn new<I, T>(degrees: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<Int>,
    {
        let degrees: Vec<Int> = degrees.into_iter().map(Into::into).collect();
        if !(3..=4).contains(&degrees.len()) {
            return Err(Error::usage(format!(
                "scroll rank must be 3 or 4, got {}",
                degrees.len()
            )));
        }
        if degrees.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::usage("scroll degrees must be non-increasing"));
        }
        if !degrees.last().is_some_and(Zero::is_zero) {
            return Err(Error::usage("the last scroll degree must be 0"));
        }
        Ok(ScrollData { degrees })
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[Int] {
        &self.degrees
    }

    /// `d = sum d_i`.
    pub fn total(&self) -> Int {
        self.degrees.iter().sum()
    }
}

/// A class `m M + f F` on a projectivized bundle over P^1 (`M` tautological,
/// `F` a fibre), or its restriction `m G + f N` to a divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollClass {
    pub m: Int,
    pub f: Int,
}

impl ScrollClass {
    pub fn new(m: impl Into<Int>, f: impl Into<Int>) -> Self {
        ScrollClass {
            m: m.into(),
            f: f.into(),
        }
    }

    /// Display with custom symbols, e.g. ("G", "N") for classes restricted to a quadric bundle.
    pub fn display_with(&self, m_sym: &str, f_sym: &str) -> String {
        let f_part = if self.f.is_negative() {
            format!("-{}{f_sym}", self.f.abs())
        } else {
            format!("+{}{f_sym}", self.f)
        };
        format!("{}{m_sym}{f_part}", self.m)
    }
}

impl fmt::Display for ScrollClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("M", "F"))
    }
}

/// Top intersection of `rank` classes on `P(E)` over P^1 with `M^rank = d`,
/// `M^(rank-1) F = 1`, `F^2 = 0`.
fn scroll_top_intersection(total_degree: &Int, classes: &[ScrollClass]) -> Int {
    let m_product: Int = classes.iter().map(|c| c.m.clone()).product();
    let mixed: Int = (0..classes.len())
        .map(|i| {
            classes
                .iter()
                .enumerate()
                .map(|(j, c)| if i == j { c.f.clone() } else { c.m.clone() })
                .product::<Int>()
        })
        .sum();
    total_degree * m_product + mixed
}

/// For a rank-3 scroll: `-K = 3M + (2 - d)F` and its cube.
pub fn scroll_anticanonical_and_degree(s: &ScrollData) -> Result<(ScrollClass, Int)> {
    if s.rank() != 3 {
        return Err(Error::usage("scroll anticanonical class needs a rank-3 scroll"));
    }
    let d = s.total();
    let minus_k = ScrollClass::new(3, Int::from(2) - &d);
    let degree = scroll_top_intersection(&d, &[minus_k.clone(), minus_k.clone(), minus_k.clone()]);
    Ok((minus_k, degree))
}

/// For a divisor `W ~ 2M + rF` in the P^3-bundle of a rank-4 scroll:
/// `-K_W = 2G + (2 - d - r)N`, with `(-K_W)^3` computed in the ambient
/// fourfold as `(2M + (2-d-r)F)^3 (2M + rF)`.
pub fn quadric_bundle_anticanonical(s: &ScrollData, r: impl Into<Int>) -> Result<(ScrollClass, Int)> {
    if s.rank() != 4 {
        return Err(Error::usage("quadric bundle needs a rank-4 scroll"));
    }
    let r = r.into();
    let d = s.total();
    let minus_k = ScrollClass::new(2, Int::from(2) - &d - &r);
    let w = ScrollClass::new(2, r);
    let degree = scroll_top_intersection(&d, &[minus_k.clone(), minus_k.clone(), minus_k.clone(), w]);
    Ok((minus_k, degree))
}

/// `dim |-K| = degree / 2 + 2` for a degree where Riemann-Roch and vanishing apply.
pub fn rr_dim_anticanonical(degree: impl Into<Int>) -> Result<Int> {
    let degree = degree.into();
    if degree.is_negative() {
        return Err(Error::usage(format!("degree {degree} is negative")));
    }
    if degree.is_odd() {
        return Err(Error::usage(format!("degree {degree} is odd")));
    }
    Ok(degree / Int::from(2) + Int::from(2))
}

/// Whether `K_G^2 = degree / 8` can be an integer.
pub fn kg2_integral(degree: impl Into<Int>) -> bool {
    degree.into().is_multiple_of(&Int::from(8))
}
