//! Brute-force and cross-module oracles for the closed-form formulas.

use fano64::bundles::{chi_rank2, degree_p1_bundle, p1_bundle_anticanonical, triple_intersection, BundleClass, RankTwoBundleData};
use fano64::lattice::{Int, LatticeVec3, Rational};
use fano64::surfaces::{canonical_class, intersect, is_nef, BaseSurface, SurfaceClass};
use fano64::toric::{anticanonical_polytope, gorenstein_support, polytope_degree, Fan};
use fano64::wps::{wps_degree, wps_is_gorenstein, Weights};

/// Top intersection numbers on P(E) from the relation `D^2 = c1 D - c2`,
/// expanded monomial by monomial: a class is `(D-coefficient, pullback)`.
fn hirsch_cube(data: &RankTwoBundleData, cls: &BundleClass) -> Int {
    let c1 = data.c1();
    let c2 = data.c2();
    let a = &cls.d_coeff;
    let b = &cls.pullback;
    let dot = |x: &SurfaceClass, y: &SurfaceClass| intersect(x, y).unwrap();
    // D^3 = D (c1 D - c2) = c1 D^2 - c2 D = c1 (c1 D - c2) - c2 D, whose degree is c1^2 - c2.
    let d3 = dot(c1, c1) - c2;
    // D^2 . B = (c1 D - c2) . B = c1 . B.
    let d2b = dot(c1, b);
    // D . B . B = B^2, and B^3 = 0 on a surface.
    let db2 = dot(b, b);
    let three = Int::from(3);
    a * a * a * d3 + &three * a * a * d2b + &three * a * db2
}

#[test]
fn hirsch_expansion_matches_closed_form_on_a_grid() {
    let mut bases = vec![BaseSurface::ProjectivePlane];
    bases.extend((0..=4).map(BaseSurface::Hirzebruch));
    for base in bases {
        for a in -5i64..=5 {
            let bs: Vec<i64> = if base == BaseSurface::ProjectivePlane { vec![0] } else { (-5..=5).collect() };
            for b in bs {
                for c2 in -5i64..=5 {
                    let c1 = SurfaceClass::new(base, a, b).unwrap();
                    let data = RankTwoBundleData::new(base, c1, c2).unwrap();
                    let anti = p1_bundle_anticanonical(&data);
                    assert_eq!(
                        hirsch_cube(&data, &anti),
                        degree_p1_bundle(&data),
                        "{base} c1 = ({a},{b}) c2 = {c2}"
                    );
                    assert_eq!(triple_intersection(&data, &anti).unwrap(), degree_p1_bundle(&data));
                }
            }
        }
    }
}

/// Number of sections of a nef line bundle by counting lattice points:
/// monomials of degree `a` on P^2, and `sum_{i=0}^{a} (b - i n + 1)` on F_n.
fn h0_nef(d: &SurfaceClass) -> i64 {
    let a: i64 = d.a().try_into().unwrap();
    let b: i64 = d.b().try_into().unwrap();
    match d.surface() {
        BaseSurface::ProjectivePlane => {
            // x^i y^j z^(a-i-j)
            (0..=a).map(|i| (0..=(a - i)).count() as i64).sum()
        }
        BaseSurface::Hirzebruch(n) => {
            let n = i64::from(n);
            let mut count = 0;
            for i in 0..=a {
                for _ in 0..=(b - i * n) {
                    count += 1;
                }
            }
            count
        }
    }
}

#[test]
fn split_bundle_euler_characteristic_counts_sections() {
    // For nef line bundles all higher cohomology vanishes, so chi = h^0.
    let mut cases = 0;
    for n in 0..=4u32 {
        for (a1, b1, a2, b2) in nef_pairs(n) {
            let base = BaseSurface::Hirzebruch(n);
            let d1 = SurfaceClass::ruled(n, a1, b1);
            let d2 = SurfaceClass::ruled(n, a2, b2);
            let c1 = d1.try_add(&d2).unwrap();
            let c2 = intersect(&d1, &d2).unwrap();
            let data = RankTwoBundleData::new(base, c1, c2).unwrap();
            assert_eq!(chi_rank2(&data), Rational::from(h0_nef(&d1) + h0_nef(&d2)));
            cases += 1;
        }
    }
    for k1 in 0..=6i64 {
        for k2 in 0..=6i64 {
            let data = RankTwoBundleData::new(BaseSurface::ProjectivePlane, SurfaceClass::plane(k1 + k2), k1 * k2).unwrap();
            let expected = h0_nef(&SurfaceClass::plane(k1)) + h0_nef(&SurfaceClass::plane(k2));
            assert_eq!(chi_rank2(&data), Rational::from(expected));
            assert_eq!(expected, (k1 + 2) * (k1 + 1) / 2 + (k2 + 2) * (k2 + 1) / 2);
        }
    }
    assert!(cases > 100);
}

fn nef_pairs(n: u32) -> Vec<(i64, i64, i64, i64)> {
    let ni = i64::from(n);
    let nef: Vec<(i64, i64)> = (0..=3)
        .flat_map(|a| (a * ni..=a * ni + 3).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for &(a1, b1) in &nef {
        for &(a2, b2) in &nef {
            assert!(is_nef(&SurfaceClass::ruled(n, a1, b1)));
            out.push((a1, b1, a2, b2));
        }
    }
    out
}

#[test]
fn canonical_class_is_minus_the_sum_of_toric_divisors() {
    // Rays (1,0), (0,1), (-1,n), (0,-1) of the F_n fan give the divisors l, h + n l, l, h.
    for n in 0..=4u32 {
        let l = SurfaceClass::ruled(n, 0, 1);
        let h = SurfaceClass::ruled(n, 1, 0);
        let h_inf = SurfaceClass::ruled(n, 1, i64::from(n));
        let boundary = l.try_add(&l).unwrap().try_add(&h).unwrap().try_add(&h_inf).unwrap();
        assert_eq!(boundary.neg(), canonical_class(BaseSurface::Hirzebruch(n)));
    }
}

/// The fan of P(a0, a1, a2, 1): rays e1, e2, e3 and -(a0, a1, a2).
fn wps_fan(w: [u64; 4]) -> Fan {
    assert_eq!(w[3], 1);
    let v = |x: i64, y: i64, z: i64| LatticeVec3::new(x, y, z);
    let last = v(-(w[0] as i64), -(w[1] as i64), -(w[2] as i64));
    Fan::new(
        vec![v(1, 0, 0), v(0, 1, 0), v(0, 0, 1), last],
        vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]],
    )
    .unwrap()
}

#[test]
fn weighted_projective_degree_matches_toric_volume() {
    let mut checked = 0;
    for a0 in 1..=7u64 {
        for a1 in 1..=a0 {
            for a2 in 1..=a1 {
                let Ok(w) = Weights::new([a0, a1, a2, 1]) else { continue };
                let fan = wps_fan(w.as_array());
                let poly = anticanonical_polytope(&fan).unwrap();
                assert_eq!(polytope_degree(&poly).unwrap(), wps_degree(&w), "{w}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 50);
}

#[test]
fn weighted_projective_gorenstein_matches_cone_supports() {
    for a0 in 1..=8u64 {
        for a1 in 1..=a0 {
            for a2 in 1..=a1 {
                let Ok(w) = Weights::new([a0, a1, a2, 1]) else { continue };
                let fan = wps_fan(w.as_array());
                let all = (0..4).all(|c| gorenstein_support(&fan.cone_rays(c)).is_some());
                assert_eq!(all, wps_is_gorenstein(&w), "{w}");
            }
        }
    }
}

#[test]
fn p1_bundle_cones_have_degree_64() {
    for n in [0u32, 1] {
        let base = BaseSurface::Hirzebruch(n);
        let data = RankTwoBundleData::new(base, canonical_class(base).neg(), 0).unwrap();
        assert_eq!(degree_p1_bundle(&data), Int::from(64));
    }
}
