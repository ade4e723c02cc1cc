use fano64::bundles::{
    chi_hirzebruch_expanded, chi_hirzebruch_factored, chi_rank2, degree_p1_bundle, kg2_integral, rr_dim_anticanonical,
    solve_c2_for_degree, twist, RankTwoBundleData,
};
use fano64::lattice::{det3, Int, LatticeVec3, Rational};
use fano64::ledger::{blowup_curve_degree, genus_of_degree, project_from_center, Chain, Move};
use fano64::surfaces::{intersect, BaseSurface, SurfaceClass};
use fano64::wps::{wps_anticanonical_index, wps_degree, wps_is_gorenstein, wps_vertex_singularity, Weights};
use proptest::prelude::*;

fn vec3() -> impl Strategy<Value = LatticeVec3> {
    (-20i64..=20, -20i64..=20, -20i64..=20).prop_map(|(x, y, z)| LatticeVec3::new(x, y, z))
}

fn base() -> impl Strategy<Value = BaseSurface> {
    prop_oneof![
        Just(BaseSurface::ProjectivePlane),
        (0u32..=6).prop_map(BaseSurface::Hirzebruch),
    ]
}

fn class_on(base: BaseSurface) -> impl Strategy<Value = SurfaceClass> {
    (-8i64..=8, -8i64..=8).prop_map(move |(a, b)| match base {
        BaseSurface::ProjectivePlane => SurfaceClass::plane(a),
        BaseSurface::Hirzebruch(n) => SurfaceClass::ruled(n, a, b),
    })
}

fn bundle() -> impl Strategy<Value = (RankTwoBundleData, SurfaceClass)> {
    base().prop_flat_map(|b| {
        (class_on(b), class_on(b), -30i64..=30)
            .prop_map(move |(c1, tw, c2)| (RankTwoBundleData::new(b, c1, c2).unwrap(), tw))
    })
}

proptest! {
    #[test]
    fn det3_is_alternating(a in vec3(), b in vec3(), c in vec3()) {
        prop_assert_eq!(det3(&a, &b, &c), -det3(&b, &a, &c));
        prop_assert_eq!(det3(&a, &b, &c), det3(&b, &c, &a));
        prop_assert_eq!(det3(&a, &a, &c), Int::from(0));
    }

    #[test]
    fn det3_is_multilinear(a in vec3(), a2 in vec3(), b in vec3(), c in vec3(), k in -5i64..=5) {
        let sum = &a + &a2;
        prop_assert_eq!(det3(&sum, &b, &c), det3(&a, &b, &c) + det3(&a2, &b, &c));
        let scaled = LatticeVec3::new(a.x.clone() * k, a.y.clone() * k, a.z.clone() * k);
        prop_assert_eq!(det3(&scaled, &b, &c), det3(&a, &b, &c) * k);
    }

    #[test]
    fn det3_is_cross_then_dot(a in vec3(), b in vec3(), c in vec3()) {
        prop_assert_eq!(det3(&a, &b, &c), a.dot(&b.cross(&c)));
    }

    #[test]
    fn rationals_round_trip(p in -1_000_000i64..=1_000_000, q in 1i64..=1_000_000) {
        let r = Rational::new(p, q).unwrap();
        let text = r.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), r.clone());
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), r.clone());
        // Display is always reduced with a positive denominator.
        prop_assert!(!text.contains("/-"));
        prop_assert_eq!(r.denom() > &Int::from(1), text.contains('/'));
    }

    #[test]
    fn intersection_is_symmetric_and_bilinear(
        (x, y, z) in base().prop_flat_map(|b| (class_on(b), class_on(b), class_on(b))),
        k in -4i64..=4,
    ) {
        prop_assert_eq!(intersect(&x, &y).unwrap(), intersect(&y, &x).unwrap());
        let xy = x.try_add(&y).unwrap();
        prop_assert_eq!(intersect(&xy, &z).unwrap(), intersect(&x, &z).unwrap() + intersect(&y, &z).unwrap());
        prop_assert_eq!(intersect(&x.scale(k), &z).unwrap(), intersect(&x, &z).unwrap() * k);
    }

    #[test]
    fn twisting_preserves_degree((data, b) in bundle()) {
        let twisted = twist(&data, &b).unwrap();
        prop_assert_eq!(degree_p1_bundle(&twisted), degree_p1_bundle(&data));
        // The discriminant c1^2 - 4 c2 is twist invariant too.
        let disc = |d: &RankTwoBundleData| intersect(d.c1(), d.c1()).unwrap() - Int::from(4) * d.c2();
        prop_assert_eq!(disc(&twisted), disc(&data));
        let back = twist(&twisted, &b.neg()).unwrap();
        prop_assert_eq!(back, data);
    }

    #[test]
    fn degree_is_six_k2_plus_two_c1_squared_minus_eight_c2((data, _) in bundle()) {
        let k2 = fano64::surfaces::k_squared(data.base());
        let c1sq = intersect(data.c1(), data.c1()).unwrap();
        let expected = Int::from(6) * k2 + Int::from(2) * c1sq - Int::from(8) * data.c2();
        prop_assert_eq!(degree_p1_bundle(&data), expected);
    }

    #[test]
    fn solving_for_c2_inverts_the_degree((data, _) in bundle()) {
        let degree = degree_p1_bundle(&data);
        let sol = solve_c2_for_degree(data.base(), data.c1(), degree).unwrap();
        prop_assert!(sol.integral);
        prop_assert_eq!(sol.c2, Rational::from(data.c2().clone()));
    }

    #[test]
    fn riemann_roch_forms_agree(n in 0u32..=6, a in -10i64..=10, b in -10i64..=10, c in -20i64..=20) {
        let (a, b, c) = (Int::from(a), Int::from(b), Int::from(c));
        let expanded = chi_hirzebruch_expanded(n, &a, &b, &c);
        prop_assert_eq!(&expanded, &chi_hirzebruch_factored(n, &a, &b, &c));
        let data = RankTwoBundleData::new(BaseSurface::Hirzebruch(n), SurfaceClass::ruled(n, a, b), c).unwrap();
        prop_assert_eq!(&expanded, &chi_rank2(&data));
        prop_assert!(expanded.is_integer());
    }

    #[test]
    fn wps_invariants_ignore_weight_order(ws in prop::array::uniform4(1u64..=12), perm in Just([0usize, 1, 2, 3]).prop_shuffle()) {
        if let Ok(w) = Weights::new(ws) {
            let permuted = Weights::new(perm.map(|i| ws[i])).unwrap();
            prop_assert_eq!(wps_degree(&w), wps_degree(&permuted));
            prop_assert_eq!(wps_anticanonical_index(&w), wps_anticanonical_index(&permuted));
            prop_assert_eq!(wps_is_gorenstein(&w), wps_is_gorenstein(&permuted));
            for (slot, &i) in perm.iter().enumerate() {
                prop_assert_eq!(
                    wps_vertex_singularity(&permuted, slot).unwrap().order,
                    wps_vertex_singularity(&w, i).unwrap().order
                );
            }
        }
    }

    #[test]
    fn gorenstein_means_every_vertex_weight_sum_is_divisible(ws in prop::array::uniform4(1u64..=16)) {
        if let Ok(w) = Weights::new(ws) {
            let by_vertex = (0..4).all(|i| {
                let q = wps_vertex_singularity(&w, i).unwrap();
                q.weights.iter().sum::<u64>() % q.order == 0
            });
            prop_assert_eq!(by_vertex, wps_is_gorenstein(&w));
        }
    }

    #[test]
    fn genus_and_projection_bookkeeping(half in 2i64..=200, k in 0i64..=10) {
        let rec = genus_of_degree(2 * half).unwrap();
        prop_assert_eq!(rec.degree, 2 * rec.genus - 2);
        prop_assert_eq!(rec.ambient_dim, rec.genus + 1);
        match project_from_center(&rec, k) {
            Ok(p) => {
                prop_assert_eq!(rec.genus - p.genus, k + 1);
                prop_assert_eq!(rec.ambient_dim - p.ambient_dim, k + 1);
            }
            Err(_) => prop_assert!(rec.degree <= 2 * (k + 1)),
        }
    }

    #[test]
    fn rr_dim_tracks_genus(half in 1i64..=200) {
        let d = 2 * half;
        prop_assert_eq!(rr_dim_anticanonical(d).unwrap(), Int::from(genus_of_degree(d).unwrap().ambient_dim));
        prop_assert!(rr_dim_anticanonical(d + 1).is_err());
        prop_assert_eq!(kg2_integral(d), d % 8 == 0);
    }

    #[test]
    fn rational_curve_blowups_compose(start in 20i64..=100, cs in prop::collection::vec(-6i64..=6, 0..4)) {
        let moves = cs.iter().map(|&c| Move::BlowupCurve { minus_k_dot_c: c, genus: 0 });
        if let Ok(chain) = Chain::run(start, moves) {
            let expected = cs.iter().fold(start, |d, c| d - 2 * c - 2);
            prop_assert_eq!(chain.final_degree(), expected);
        }
    }

    #[test]
    fn higher_genus_curves_cost_less(d in 40i64..=100, c in -4i64..=8, g in 0i64..=5) {
        if let (Ok(rational), Ok(curve)) = (blowup_curve_degree(d, c, 0), blowup_curve_degree(d, c, g)) {
            prop_assert_eq!(curve - rational, 2 * g);
        }
    }
}
