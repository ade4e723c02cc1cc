//! Complete fans in Z^3: validation, cone singularities, Gorenstein supports
//! and the anticanonical polytope with its normalized volume.
//!
//! Conventions: the anticanonical polytope is `{ m : <m, v> >= -1 }` over all
//! rays `v`, and a cone is Gorenstein when some integral `m` has `<m, v> = -1`
//! on each of its rays. Ray indices are 0-based everywhere.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{
    cross_rational, det3, det3_rational, dot_rational, solve3, sub_rational, Int, LatticeVec3, Rational,
    RationalPoint,
};

/// Rays plus maximal cones given as sets of ray indices.
///
/// Construction only checks that the indices make sense; geometric defects
/// are reported by [`validate_fan`], never repaired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    rays: Vec<LatticeVec3>,
    cones: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FanFile {
    rays: Vec<[i64; 3]>,
    cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(rays: Vec<LatticeVec3>, cones: Vec<Vec<usize>>) -> Result<Self> {
        for (c, cone) in cones.iter().enumerate() {
            if cone.is_empty() {
                return Err(Error::usage(format!("cone {c} has no rays")));
            }
            if let Some(&bad) = cone.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::usage(format!(
                    "cone {c} refers to ray {bad}, but there are only {} rays",
                    rays.len()
                )));
            }
            if cone.iter().collect::<BTreeSet<_>>().len() != cone.len() {
                return Err(Error::usage(format!("cone {c} lists a ray twice")));
            }
        }
        Ok(Fan { rays, cones })
    }

    /// Parses the JSON fan format: `{"rays": [[x,y,z], ...], "cones": [[i, ...], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: FanFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("fan file: {e}")))?;
        let rays = file.rays.iter().map(|&[x, y, z]| LatticeVec3::new(x, y, z)).collect();
        Fan::new(rays, file.cones).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn rays(&self) -> &[LatticeVec3] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn cone_rays(&self, cone: usize) -> Vec<LatticeVec3> {
        self.cones[cone].iter().map(|&i| self.rays[i].clone()).collect()
    }

    /// Applies an integer matrix to every ray.
    pub fn transform(&self, m: &[[i64; 3]; 3]) -> Fan {
        Fan {
            rays: self.rays.iter().map(|r| r.transform(m)).collect(),
            cones: self.cones.clone(),
        }
    }

    /// The fan of P^3.
    pub fn projective_space() -> Fan {
        let rays = vec![
            LatticeVec3::new(1, 0, 0),
            LatticeVec3::new(0, 1, 0),
            LatticeVec3::new(0, 0, 1),
            LatticeVec3::new(-1, -1, -1),
        ];
        let cones = (0..4).combinations(3).collect();
        Fan { rays, cones }
    }

    /// The fan of P^1 x P^1 x P^1.
    pub fn product_of_lines() -> Fan {
        let rays = vec![
            LatticeVec3::new(1, 0, 0),
            LatticeVec3::new(-1, 0, 0),
            LatticeVec3::new(0, 1, 0),
            LatticeVec3::new(0, -1, 0),
            LatticeVec3::new(0, 0, 1),
            LatticeVec3::new(0, 0, -1),
        ];
        let cones = [0, 1]
            .into_iter()
            .cartesian_product([2, 3])
            .cartesian_product([4, 5])
            .map(|((a, b), c)| vec![a, b, c])
            .collect();
        Fan { rays, cones }
    }

    /// The degree-66 fan with the five rays and four cones exactly as printed
    /// in the source construction, including its non-convex third cone.
    pub fn x66_as_printed() -> Fan {
        let rays = vec![
            LatticeVec3::new(-1, 0, 0),
            LatticeVec3::new(1, -1, 0),
            LatticeVec3::new(-1, -1, 2),
            LatticeVec3::new(-1, -1, 3),
            LatticeVec3::new(-1, 2, -1),
        ];
        let cones = vec![vec![0, 1, 2], vec![0, 2, 3, 4], vec![1, 2, 3, 4], vec![0, 1, 4]];
        Fan { rays, cones }
    }
}

/// `|det|` of a simplicial cone's generators.
pub fn cone_lattice_index(rays: &[LatticeVec3; 3]) -> Result<Int> {
    let d = det3(&rays[0], &rays[1], &rays[2]).abs();
    if d.is_zero() {
        return Err(Error::usage(format!(
            "cone {}, {}, {} is degenerate",
            rays[0], rays[1], rays[2]
        )));
    }
    Ok(d)
}

/// Outcome of solving `<m, v> = -1` on the rays of one cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportSearch {
    Found(LatticeVec3),
    /// Rays do not span a 3-dimensional space, so no unique `m` exists.
    Degenerate,
    /// `m` is forced by three independent rays but fails on `ray`.
    Violated { m: RationalPoint, ray: usize, pairing: Rational },
    /// `m` satisfies every equation but is not a lattice point.
    NonIntegral { m: RationalPoint },
}

/// Searches for the support vector, reporting why it is missing; `ray`
/// positions refer to the slice passed in.
pub fn gorenstein_support_search(rays: &[LatticeVec3]) -> SupportSearch {
    let minus_one = [Rational::from(-1), Rational::from(-1), Rational::from(-1)];
    let solved = (0..rays.len()).combinations(3).find_map(|t| {
        let rows = [rays[t[0]].clone(), rays[t[1]].clone(), rays[t[2]].clone()];
        solve3(&rows, &minus_one)
    });
    let Some(m) = solved else {
        return SupportSearch::Degenerate;
    };
    for (i, v) in rays.iter().enumerate() {
        let pairing = v.pair(&m);
        if pairing != Rational::from(-1) {
            return SupportSearch::Violated { m, ray: i, pairing };
        }
    }
    match (m[0].to_integer(), m[1].to_integer(), m[2].to_integer()) {
        (Some(x), Some(y), Some(z)) => SupportSearch::Found(LatticeVec3::new(x, y, z)),
        _ => SupportSearch::NonIntegral { m },
    }
}

/// The integral `m` with `<m, v> = -1` on every ray, if it exists.
pub fn gorenstein_support(rays: &[LatticeVec3]) -> Option<LatticeVec3> {
    match gorenstein_support_search(rays) {
        SupportSearch::Found(m) => Some(m),
        _ => None,
    }
}

/// Singularity type of a simplicial cone of index at most 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ConeSingularity {
    Smooth,
    /// Only `(v1 + v2 + v3)/2` is a lattice point: an isolated `1/2(1,1,1)` point.
    IsolatedHalfPoint { witness: LatticeVec3 },
    /// A half-sum of two generators is a lattice point: `C x (C^2/Z_2)` along a curve.
    TransverseA1 { witness: LatticeVec3 },
}

impl fmt::Display for ConeSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeSingularity::Smooth => write!(f, "Smooth"),
            ConeSingularity::IsolatedHalfPoint { witness } => write!(f, "IsolatedHalfPoint (witness {witness})"),
            ConeSingularity::TransverseA1 { witness } => write!(f, "TransverseA1 (witness {witness})"),
        }
    }
}

fn halve(v: &LatticeVec3) -> Option<LatticeVec3> {
    let two = Int::from(2);
    let h = |c: &Int| (c % &two).is_zero().then(|| c / &two);
    Some(LatticeVec3 {
        x: h(&v.x)?,
        y: h(&v.y)?,
        z: h(&v.z)?,
    })
}

pub fn classify_index2_cone(rays: &[LatticeVec3; 3]) -> Result<ConeSingularity> {
    let index = cone_lattice_index(rays)?;
    if index.is_one() {
        return Ok(ConeSingularity::Smooth);
    }
    if index != Int::from(2) {
        return Err(Error::Unsupported(format!(
            "cone of lattice index {index}; only indices 1 and 2 are classified"
        )));
    }
    // Proper-face combinations first, the full sum last.
    let subsets: [&[usize]; 7] = [&[0, 1], &[0, 2], &[1, 2], &[0], &[1], &[2], &[0, 1, 2]];
    for subset in subsets {
        let sum = subset
            .iter()
            .fold(LatticeVec3::zero(), |acc, &i| &acc + &rays[i]);
        if let Some(witness) = halve(&sum) {
            return Ok(if subset.len() == 3 {
                ConeSingularity::IsolatedHalfPoint { witness }
            } else {
                ConeSingularity::TransverseA1 { witness }
            });
        }
    }
    Err(Error::Validation(
        "index-2 cone without a half-integral lattice point".to_string(),
    ))
}

/// One structural problem found in a fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Finding {
    ZeroRay { ray: usize },
    NonPrimitiveRay { ray: usize },
    /// The cone's rays span less than R^3.
    DegenerateCone { cone: usize },
    /// `sum coefficient * ray = 0` with positive coefficients: the cone contains a line.
    NotStronglyConvex {
        cone: usize,
        #[serde(with = "crate::serde_int::indexed")]
        relation: Vec<(usize, Int)>,
    },
    /// A listed ray lies in the cone spanned by the others.
    RedundantRay { cone: usize, ray: usize },
    /// A 2-face (keyed by the rays on it) that is not shared by exactly two cones.
    UnpairedWall { rays: Vec<usize>, cones: Vec<usize> },
    /// The rays lie in a closed half-space, so the fan cannot be complete.
    NotPositivelySpanning,
    NoGorensteinSupport { cone: usize, reason: String },
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::ZeroRay { ray } => write!(f, "ray {ray} is zero"),
            Finding::NonPrimitiveRay { ray } => write!(f, "non-primitive ray {ray}"),
            Finding::DegenerateCone { cone } => write!(f, "cone {cone} is not 3-dimensional"),
            Finding::NotStronglyConvex { cone, relation } => {
                let terms: Vec<String> = relation.iter().map(|(r, c)| format!("{c}*ray{r}")).collect();
                write!(f, "cone {cone} is not strongly convex: {} = 0", terms.join(" + "))
            }
            Finding::RedundantRay { cone, ray } => {
                write!(f, "cone {cone}: ray {ray} is not an extremal ray")
            }
            Finding::UnpairedWall { rays, cones } => write!(
                f,
                "wall on rays {rays:?} is shared by {} cone(s) {cones:?}, expected 2",
                cones.len()
            ),
            Finding::NotPositivelySpanning => write!(f, "rays do not positively span R^3"),
            Finding::NoGorensteinSupport { cone, reason } => {
                write!(f, "cone {cone} has no Gorenstein support: {reason}")
            }
        }
    }
}

/// Findings of [`validate_fan`]; an empty list is a clean report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanReport {
    pub findings: Vec<Finding>,
}

impl FanReport {
    pub fn is_clean(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn gorenstein_failures(&self) -> Vec<usize> {
        self.findings
            .iter()
            .filter_map(|f| match f {
                Finding::NoGorensteinSupport { cone, .. } => Some(*cone),
                _ => None,
            })
            .collect()
    }
}

fn parallel(a: &LatticeVec3, b: &LatticeVec3) -> bool {
    a.cross(b).is_zero()
}

fn spans_space(rays: &[LatticeVec3]) -> bool {
    rays.iter()
        .combinations(3)
        .any(|t| !det3(t[0], t[1], t[2]).is_zero())
}

/// A positive linear relation among the rays, if one exists.
///
/// A minimal positive relation is supported on a circuit, and circuits in
/// R^3 have at most four elements, so small subsets suffice.
fn positive_relation(rays: &[LatticeVec3]) -> Option<Vec<(usize, Int)>> {
    let same_sign = |cs: &[Int]| cs.iter().all(Signed::is_positive) || cs.iter().all(Signed::is_negative);
    let normalize = |idx: &[usize], cs: Vec<Int>| -> Vec<(usize, Int)> {
        let g = cs.iter().fold(Int::zero(), |g, c| num_integer::Integer::gcd(&g, c));
        idx.iter().copied().zip(cs.into_iter().map(|c| c.abs() / &g)).collect()
    };
    for pair in (0..rays.len()).combinations(2) {
        let (a, b) = (&rays[pair[0]], &rays[pair[1]]);
        if parallel(a, b) && a.dot(b).is_negative() {
            // a = k u and b = -j u, so |b|_1 a + |a|_1 b = 0.
            let norm = |r: &LatticeVec3| r.x.abs() + r.y.abs() + r.z.abs();
            return Some(normalize(&pair, vec![norm(b), norm(a)]));
        }
    }
    for t in (0..rays.len()).combinations(3) {
        let (a, b, c) = (&rays[t[0]], &rays[t[1]], &rays[t[2]]);
        if parallel(a, b) || parallel(a, c) || parallel(b, c) || !det3(a, b, c).is_zero() {
            continue;
        }
        let n = a.cross(b);
        let cs = vec![b.cross(c).dot(&n), c.cross(a).dot(&n), a.cross(b).dot(&n)];
        if same_sign(&cs) {
            return Some(normalize(&t, cs));
        }
    }
    for q in (0..rays.len()).combinations(4) {
        let v: Vec<&LatticeVec3> = q.iter().map(|&i| &rays[i]).collect();
        let cs = vec![
            det3(v[1], v[2], v[3]),
            -det3(v[0], v[2], v[3]),
            det3(v[0], v[1], v[3]),
            -det3(v[0], v[1], v[2]),
        ];
        if cs.iter().any(Zero::is_zero) {
            continue;
        }
        if same_sign(&cs) {
            return Some(normalize(&q, cs));
        }
    }
    None
}

/// Whether `target` is a non-negative combination of `gens`.
fn in_cone(target: &LatticeVec3, gens: &[&LatticeVec3]) -> bool {
    let nonneg = |q: &Rational| !q.is_negative();
    for g in gens {
        if parallel(target, g) && !target.dot(g).is_negative() {
            return true;
        }
    }
    for pair in gens.iter().combinations(2) {
        let (a, b) = (*pair[0], *pair[1]);
        let n = a.cross(b);
        if n.is_zero() || !target.dot(&n).is_zero() {
            continue;
        }
        let nn = Rational::from(n.dot(&n));
        let mu_a = Rational::from(target.cross(b).dot(&n)) / &nn;
        let mu_b = Rational::from(a.cross(target).dot(&n)) / &nn;
        if nonneg(&mu_a) && nonneg(&mu_b) {
            return true;
        }
    }
    for t in gens.iter().combinations(3) {
        // Columns are the generators: solve sum mu_i t_i = target.
        let col = |k: usize| LatticeVec3::new(t[0].coords()[k].clone(), t[1].coords()[k].clone(), t[2].coords()[k].clone());
        let rows = [col(0), col(1), col(2)];
        if let Some(mu) = solve3(&rows, &target.to_rational()) {
            if mu.iter().all(nonneg) {
                return true;
            }
        }
    }
    false
}

/// Supporting planes through pairs of rays of a strongly convex, full cone;
/// each wall is keyed by the sorted set of fan ray indices lying on it.
fn cone_walls(fan: &Fan, cone: usize) -> BTreeSet<Vec<usize>> {
    let idx = &fan.cones[cone];
    let mut walls = BTreeSet::new();
    for pair in idx.iter().combinations(2) {
        let n = fan.rays[*pair[0]].cross(&fan.rays[*pair[1]]);
        if n.is_zero() {
            continue;
        }
        let sides: Vec<Int> = idx.iter().map(|&i| fan.rays[i].dot(&n)).collect();
        let supporting = sides.iter().all(|s| !s.is_negative()) || sides.iter().all(|s| !s.is_positive());
        if supporting {
            let on: Vec<usize> = idx
                .iter()
                .zip(&sides)
                .filter(|(_, s)| s.is_zero())
                .map(|(&i, _)| i)
                .sorted()
                .collect();
            walls.insert(on);
        }
    }
    walls
}

fn positively_spans(rays: &[LatticeVec3]) -> bool {
    if !spans_space(rays) {
        return false;
    }
    rays.iter().tuple_combinations().all(|(a, b)| {
        let n = a.cross(b);
        n.is_zero()
            || (rays.iter().any(|v| v.dot(&n).is_positive()) && rays.iter().any(|v| v.dot(&n).is_negative()))
    })
}

fn describe_search(search: &SupportSearch, cone_idx: &[usize]) -> String {
    match search {
        SupportSearch::Found(m) => format!("support {m}"),
        SupportSearch::Degenerate => "rays do not determine a unique m".to_string(),
        SupportSearch::Violated { m, ray, pairing } => format!(
            "m = {} forced by the other rays pairs to {pairing} with ray {}",
            fmt_point(m),
            cone_idx[*ray]
        ),
        SupportSearch::NonIntegral { m } => format!("m = {} is not a lattice point", fmt_point(m)),
    }
}

/// Structural findings: bad rays, non-convex or degenerate cones, walls not
/// shared by exactly two cones, failure to positively span, and cones with no
/// Gorenstein support.
pub fn validate_fan(fan: &Fan) -> FanReport {
    let mut findings = Vec::new();
    for (i, r) in fan.rays.iter().enumerate() {
        if r.is_zero() {
            findings.push(Finding::ZeroRay { ray: i });
        } else if !r.is_primitive() {
            findings.push(Finding::NonPrimitiveRay { ray: i });
        }
    }

    let mut wall_owners: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut all_cones_proper = true;
    for (c, idx) in fan.cones.iter().enumerate() {
        let rays = fan.cone_rays(c);
        if !spans_space(&rays) {
            findings.push(Finding::DegenerateCone { cone: c });
            all_cones_proper = false;
            continue;
        }
        if let Some(rel) = positive_relation(&rays) {
            let relation = rel.into_iter().map(|(i, k)| (idx[i], k)).collect();
            findings.push(Finding::NotStronglyConvex { cone: c, relation });
            all_cones_proper = false;
            continue;
        }
        for (i, r) in rays.iter().enumerate() {
            let others: Vec<&LatticeVec3> = rays.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v).collect();
            if in_cone(r, &others) {
                findings.push(Finding::RedundantRay { cone: c, ray: idx[i] });
            }
        }
        for wall in cone_walls(fan, c) {
            wall_owners.entry(wall).or_default().push(c);
        }
    }
    // Wall pairing only means something once every cone is a proper cone;
    // otherwise it would just echo the defects already reported.
    if all_cones_proper {
        for (rays, cones) in wall_owners {
            if cones.len() != 2 {
                findings.push(Finding::UnpairedWall { rays, cones });
            }
        }
    }
    if !positively_spans(&fan.rays) {
        findings.push(Finding::NotPositivelySpanning);
    }
    for (c, idx) in fan.cones.iter().enumerate() {
        let search = gorenstein_support_search(&fan.cone_rays(c));
        if !matches!(search, SupportSearch::Found(_)) {
            findings.push(Finding::NoGorensteinSupport {
                cone: c,
                reason: describe_search(&search, idx),
            });
        }
    }
    FanReport { findings }
}

/// Per-cone singularity data for a fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeSummary {
    pub cone: usize,
    pub rays: Vec<usize>,
    /// Present for simplicial, non-degenerate cones.
    #[serde(with = "crate::serde_int::option")]
    pub lattice_index: Option<Int>,
    /// Present for simplicial cones of index at most 2.
    pub singularity: Option<ConeSingularity>,
    pub gorenstein_support: Option<LatticeVec3>,
    pub note: Option<String>,
}

pub fn cone_summaries(fan: &Fan) -> Vec<ConeSummary> {
    (0..fan.cones.len())
        .map(|c| {
            let rays = fan.cone_rays(c);
            let (lattice_index, singularity, note) = match <[LatticeVec3; 3]>::try_from(rays.clone()) {
                Ok(tri) => match cone_lattice_index(&tri) {
                    Ok(index) => match classify_index2_cone(&tri) {
                        Ok(s) => (Some(index), Some(s), None),
                        Err(e) => (Some(index), None, Some(e.to_string())),
                    },
                    Err(e) => (None, None, Some(e.to_string())),
                },
                Err(_) => (None, None, Some(format!("non-simplicial cone with {} rays", rays.len()))),
            };
            ConeSummary {
                cone: c,
                rays: fan.cones[c].clone(),
                lattice_index,
                singularity,
                gorenstein_support: gorenstein_support(&rays),
                note,
            }
        })
        .collect()
}

/// A full-dimensional polytope in Q^3 given by its vertices (sorted, irredundant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    vertices: Vec<RationalPoint>,
}

struct Facet {
    members: Vec<usize>,
    normal: RationalPoint,
}

/// Supporting planes spanned by triples of points, with every point on the
/// plane recorded as a member; normals point outward.
fn hull_facets(points: &[RationalPoint]) -> Vec<Facet> {
    let mut seen = BTreeSet::new();
    let mut facets = Vec::new();
    for (i, j, k) in (0..points.len()).tuple_combinations() {
        let n = cross_rational(&sub_rational(&points[j], &points[i]), &sub_rational(&points[k], &points[i]));
        if n.iter().all(Rational::is_zero) {
            continue;
        }
        let offset = dot_rational(&n, &points[i]);
        let sides: Vec<Rational> = points.iter().map(|p| dot_rational(&n, p) - &offset).collect();
        let outward = if sides.iter().all(|s| !s.is_positive()) {
            n
        } else if sides.iter().all(|s| !s.is_negative()) {
            [-&n[0], -&n[1], -&n[2]]
        } else {
            continue;
        };
        let members: Vec<usize> = (0..points.len()).filter(|&p| sides[p].is_zero()).collect();
        if seen.insert(members.clone()) {
            facets.push(Facet { members, normal: outward });
        }
    }
    facets
}

fn rank_of(normals: &[&RationalPoint]) -> usize {
    if normals.iter().all(|n| n.iter().all(Rational::is_zero)) {
        return 0;
    }
    if normals
        .iter()
        .tuple_combinations()
        .any(|(a, b, c)| !det3_rational(a, b, c).is_zero())
    {
        return 3;
    }
    if normals
        .iter()
        .tuple_combinations()
        .any(|(a, b)| cross_rational(a, b).iter().any(|x| !x.is_zero()))
    {
        return 2;
    }
    1
}

impl RationalPolytope {
    /// Convex hull of the given points; fails unless the points span R^3.
    pub fn from_points(points: impl IntoIterator<Item = RationalPoint>) -> Result<Self> {
        let points: Vec<RationalPoint> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let facets = hull_facets(&points);
        let vertices: Vec<RationalPoint> = points
            .iter()
            .enumerate()
            .filter(|(p, _)| {
                let normals: Vec<&RationalPoint> =
                    facets.iter().filter(|f| f.members.contains(p)).map(|f| &f.normal).collect();
                rank_of(&normals) == 3
            })
            .map(|(_, v)| v.clone())
            .collect();
        if vertices.len() < 4 {
            return Err(Error::usage("polytope is not full-dimensional"));
        }
        Ok(RationalPolytope { vertices })
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn facet_count(&self) -> usize {
        hull_facets(&self.vertices).len()
    }
}

/// `{ m : <m, v> >= -1 }`, by intersecting triples of bounding planes.
pub fn anticanonical_polytope(fan: &Fan) -> Result<RationalPolytope> {
    if !positively_spans(&fan.rays) {
        return Err(Error::Validation(
            "rays do not positively span R^3, so the anticanonical polytope is unbounded".to_string(),
        ));
    }
    let minus_one = [Rational::from(-1), Rational::from(-1), Rational::from(-1)];
    let points: BTreeSet<RationalPoint> = fan
        .rays
        .iter()
        .tuple_combinations()
        .filter_map(|(a, b, c)| solve3(&[a.clone(), b.clone(), c.clone()], &minus_one))
        .filter(|m| fan.rays.iter().all(|v| v.pair(m) >= Rational::from(-1)))
        .collect();
    RationalPolytope::from_points(points)
}

/// `3! * volume`, by coning each facet (fanned from its centroid) to the
/// centroid of the polytope.
pub fn polytope_degree(p: &RationalPolytope) -> Result<Rational> {
    let pts = &p.vertices;
    if pts.len() < 4 {
        return Err(Error::usage("polytope is not full-dimensional"));
    }
    let centroid = |idx: &[usize]| -> RationalPoint {
        let k = Rational::from(idx.len() as i64);
        let mut c = [Rational::zero(), Rational::zero(), Rational::zero()];
        for &i in idx {
            for (acc, x) in c.iter_mut().zip(&pts[i]) {
                *acc = &*acc + x;
            }
        }
        c.map(|x| x / &k)
    };
    let all: Vec<usize> = (0..pts.len()).collect();
    let center = centroid(&all);
    let facets = hull_facets(pts);
    if facets.len() < 4 {
        return Err(Error::usage("polytope is not full-dimensional"));
    }
    let mut total = Rational::zero();
    for facet in &facets {
        let fc = centroid(&facet.members);
        for (&i, &j) in facet.members.iter().tuple_combinations() {
            let edge = sub_rational(&pts[j], &pts[i]);
            let side = |k: usize| dot_rational(&cross_rational(&edge, &sub_rational(&pts[k], &pts[i])), &facet.normal);
            let others: Vec<Rational> = facet.members.iter().filter(|&&k| k != i && k != j).map(|&k| side(k)).collect();
            let is_edge = others.iter().all(|s| !s.is_negative()) || others.iter().all(|s| !s.is_positive());
            if !is_edge || others.iter().any(Rational::is_zero) {
                continue;
            }
            let d = det3_rational(
                &sub_rational(&pts[i], &center),
                &sub_rational(&pts[j], &center),
                &sub_rational(&fc, &center),
            );
            total = total + d.abs();
        }
    }
    Ok(total)
}

/// Formats a rational point as `(p/q,...)`.
pub fn fmt_point(m: &RationalPoint) -> String {
    format!("({},{},{})", m[0], m[1], m[2])
}

impl Serialize for LatticeVec3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LatticeVec3 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for LatticeVec3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (x,y,z), got '{s}'")))?;
        let parts: Vec<Int> = inner
            .split(',')
            .map(|p| p.trim().parse::<Int>().map_err(|e| Error::Parse(format!("'{p}': {e}"))))
            .collect::<Result<_>>()?;
        match <[Int; 3]>::try_from(parts) {
            Ok([x, y, z]) => Ok(LatticeVec3 { x, y, z }),
            Err(_) => Err(Error::Parse(format!("expected three coordinates in '{s}'"))),
        }
    }
}
