//! Weighted projective 3-spaces P(a0, a1, a2, a3).

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Int, Rational};

/// Four positive, well-formed weights, kept in the order given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u64; 4]", into = "[u64; 4]")]
pub struct Weights([u64; 4]);

impl Weights {
    /// Rejects zero weights and weight tuples where three of them share a factor.
    pub fn new(weights: [u64; 4]) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::usage(format!("weights must be positive: {weights:?}")));
        }
        for skip in 0..4 {
            let g = (0..4)
                .filter(|&i| i != skip)
                .fold(0u64, |g, i| g.gcd(&weights[i]));
            if g != 1 {
                return Err(Error::usage(format!(
                    "weights {weights:?} are not well-formed: the weights other than a{skip} share the factor {g}"
                )));
            }
        }
        Ok(Weights(weights))
    }

    pub fn as_array(&self) -> [u64; 4] {
        self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    fn check_index(i: usize) -> Result<()> {
        if i < 4 {
            Ok(())
        } else {
            Err(Error::usage(format!("weight index {i} is out of range 0..=3")))
        }
    }
}

impl TryFrom<[u64; 4]> for Weights {
    type Error = Error;

    fn try_from(value: [u64; 4]) -> Result<Self> {
        Weights::new(value)
    }
}

impl From<Weights> for [u64; 4] {
    fn from(w: Weights) -> Self {
        w.0
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "P({a},{b},{c},{d})")
    }
}

/// A cyclic quotient type `1/r(w1, ..., wk)`; `r = 1` is a smooth point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientType {
    pub order: u64,
    pub weights: Vec<u64>,
}

impl QuotientType {
    fn new(order: u64, weights: impl IntoIterator<Item = u64>) -> Self {
        QuotientType {
            order,
            weights: weights.into_iter().map(|w| w % order).collect(),
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.order == 1
    }
}

impl fmt::Display for QuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_smooth() {
            return write!(f, "smooth");
        }
        let ws: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        write!(f, "1/{}({})", self.order, ws.join(","))
    }
}

/// `(sum a)^3 / prod a`.
pub fn wps_degree(w: &Weights) -> Rational {
    let sum = Int::from(w.sum());
    let prod: Int = w.0.iter().map(|&a| Int::from(a)).product();
    Rational::new(&sum * &sum * &sum, prod).expect("weights are positive")
}

/// `-K = O(sum a)`.
pub fn wps_anticanonical_index(w: &Weights) -> u64 {
    w.sum()
}

/// The cyclic quotient at the `i`-th coordinate vertex.
pub fn wps_vertex_singularity(w: &Weights, i: usize) -> Result<QuotientType> {
    Weights::check_index(i)?;
    let r = w.0[i];
    Ok(QuotientType::new(
        r,
        (0..4).filter(|&j| j != i).map(|j| w.0[j]),
    ))
}

/// Transversal type along the coordinate edge through vertices `i` and `j`.
pub fn wps_edge_singularity(w: &Weights, i: usize, j: usize) -> Result<QuotientType> {
    Weights::check_index(i)?;
    Weights::check_index(j)?;
    if i == j {
        return Err(Error::usage("an edge needs two distinct vertices"));
    }
    let g = w.0[i].gcd(&w.0[j]);
    Ok(QuotientType::new(
        g,
        (0..4).filter(|&k| k != i && k != j).map(|k| w.0[k]),
    ))
}

/// Whether every weight divides the anticanonical index.
pub fn wps_is_gorenstein(w: &Weights) -> bool {
    let s = w.sum();
    w.0.iter().all(|&a| s.is_multiple_of(a))
}

/// `O(1).C = (-K.C) / m` when `-K = O(m)`.
pub fn fractional_hyperplane_degree(m: i64, minus_k_dot_c: i64) -> Result<Rational> {
    if m <= 0 {
        return Err(Error::usage(format!("index must be positive, got {m}")));
    }
    Rational::new(minus_k_dot_c, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: [u64; 4]) -> Weights {
        Weights::new(a).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(wps_degree(&w([1, 1, 1, 1])), Rational::from(64));
        assert_eq!(wps_degree(&w([3, 1, 1, 1])), Rational::from(72));
        assert_eq!(wps_degree(&w([6, 4, 1, 1])), Rational::from(72));
        assert_eq!(wps_degree(&w([2, 1, 1, 1])), Rational::new(125, 2).unwrap());
    }

    #[test]
    fn indices() {
        assert_eq!(wps_anticanonical_index(&w([6, 4, 1, 1])), 12);
        assert_eq!(wps_anticanonical_index(&w([3, 1, 1, 1])), 6);
        assert_eq!(wps_anticanonical_index(&w([1, 1, 1, 1])), 4);
    }

    #[test]
    fn vertices() {
        let x = w([6, 4, 1, 1]);
        assert_eq!(wps_vertex_singularity(&x, 0).unwrap().to_string(), "1/6(4,1,1)");
        assert_eq!(wps_vertex_singularity(&x, 1).unwrap().to_string(), "1/4(2,1,1)");
        assert!(wps_vertex_singularity(&x, 3).unwrap().is_smooth());
        assert!(wps_vertex_singularity(&x, 4).is_err());
    }

    #[test]
    fn edges() {
        let x = w([6, 4, 1, 1]);
        assert_eq!(wps_edge_singularity(&x, 0, 1).unwrap().to_string(), "1/2(1,1)");
        assert!(wps_edge_singularity(&x, 0, 2).unwrap().is_smooth());
        let y = w([3, 1, 1, 1]);
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert!(wps_edge_singularity(&y, i, j).unwrap().is_smooth());
                }
            }
        }
        assert!(wps_edge_singularity(&x, 1, 1).is_err());
    }

    #[test]
    fn gorenstein() {
        assert!(wps_is_gorenstein(&w([6, 4, 1, 1])));
        assert!(wps_is_gorenstein(&w([3, 1, 1, 1])));
        assert!(!wps_is_gorenstein(&w([5, 1, 1, 1])));
    }

    #[test]
    fn well_formedness() {
        assert!(Weights::new([2, 2, 2, 1]).is_err());
        assert!(Weights::new([0, 1, 1, 1]).is_err());
        assert!(Weights::new([6, 4, 2, 1]).is_err());
        assert!(Weights::new([2, 2, 1, 1]).is_ok());
    }

    #[test]
    fn fractional_degrees() {
        assert_eq!(fractional_hyperplane_degree(12, 1).unwrap(), Rational::new(1, 12).unwrap());
        assert_eq!(fractional_hyperplane_degree(12, 2).unwrap(), Rational::new(1, 6).unwrap());
        assert_eq!(fractional_hyperplane_degree(6, 4).unwrap(), Rational::new(2, 3).unwrap());
        assert!(fractional_hyperplane_degree(0, 1).is_err());
    }

    #[test]
    fn serde_rejects_ill_formed() {
        assert!(serde_json::from_str::<Weights>("[2,2,2,1]").is_err());
        let x: Weights = serde_json::from_str("[6,4,1,1]").unwrap();
        assert_eq!(x, w([6, 4, 1, 1]));
    }
}
