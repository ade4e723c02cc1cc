use fano64::elimination::{
    classification_summary, reproduce, CaseRecord, Stage, Verdict, Witness, CONE_OVER_F1, CONE_OVER_P1XP1,
};
use fano64::lattice::Rational;

#[test]
fn every_contradiction_reverifies_and_nothing_unexpected_survives() {
    let report = reproduce(None).unwrap();
    assert!(report.ok(), "{:#?}", report.problems);
    let mut witnesses = 0;
    for r in &report.records {
        assert!(r.verified(), "{}", r.label);
        match &r.verdict {
            Verdict::ArithmeticContradiction { witness, .. } => {
                assert!(witness.verify());
                witnesses += 1;
            }
            Verdict::Survives { construction } => {
                assert!(construction == CONE_OVER_P1XP1 || construction == CONE_OVER_F1);
            }
            Verdict::GeometricArgument { argument } => assert!(!argument.is_empty(), "{}", r.label),
        }
    }
    assert!(witnesses >= 20);
}

#[test]
fn stages_are_self_contained() {
    let full = reproduce(None).unwrap();
    let mut joined: Vec<CaseRecord> = Vec::new();
    for stage in Stage::ALL {
        let part = reproduce(Some(stage)).unwrap();
        assert!(part.ok());
        assert!(part.records.iter().all(|r| r.stage == stage));
        joined.extend(part.records);
    }
    assert_eq!(joined, full.records);
}

#[test]
fn reproduction_is_deterministic() {
    let a = serde_json::to_string(&reproduce(None).unwrap()).unwrap();
    let b = serde_json::to_string(&reproduce(None).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn rank_two_sweep_has_no_exceptions() {
    let report = reproduce(Some(Stage::RankTwoSections)).unwrap();
    for r in &report.records {
        if let Some(c2) = r.get("c2'") {
            if !matches!(r.verdict, Verdict::ArithmeticContradiction { .. }) {
                assert!(c2.is_negative(), "{}", r.label);
                assert!(r.get("chi(E')").unwrap().is_positive(), "{}", r.label);
            }
        }
    }
    let corners = report
        .records
        .iter()
        .filter(|r| matches!(r.verdict, Verdict::ArithmeticContradiction { witness: Witness::InfeasibleCorner { .. }, .. }))
        .count();
    assert_eq!(corners, 10);
}

#[test]
fn seven_threefolds_of_degree_64() {
    let items = classification_summary().unwrap();
    let names: Vec<&str> = items.iter().map(|i| i.name.as_str()).collect();
    assert_eq!(names.len(), 7);
    assert!(names.contains(&CONE_OVER_P1XP1) && names.contains(&CONE_OVER_F1));
    for item in &items {
        assert_eq!(item.degree, 64);
        assert!(item.chains.iter().all(|c| c.final_degree() == 64));
    }
}

#[test]
fn tampered_witnesses_fail() {
    let report = reproduce(None).unwrap();
    for r in &report.records {
        let Verdict::ArithmeticContradiction { witness, .. } = &r.verdict else { continue };
        let tampered = match witness.clone() {
            Witness::NonIntegralC2 { c1, target, c2 } => Witness::NonIntegralC2 { c1, target, c2: c2 + Rational::from(1) },
            Witness::TautologicalPlane { target, d_cubed, .. } => Witness::TautologicalPlane {
                target,
                plane_k_squared: d_cubed.clone(),
                d_cubed,
            },
            Witness::NonIntegralKg2 { kg2, .. } => Witness::NonIntegralKg2 { degree: 64, kg2 },
            Witness::SplitChiMissesTargets { mut targets, chis } => {
                targets.push(11);
                Witness::SplitChiMissesTargets { targets, chis }
            }
            Witness::InfeasibleCorner { n, a, b, chi, c2_twisted, forced } => Witness::InfeasibleCorner {
                n,
                a,
                b,
                chi: chi + 1,
                c2_twisted,
                forced,
            },
            Witness::LedgerMismatch { start, center_dim, target, .. } => Witness::LedgerMismatch {
                start,
                center_dim,
                target,
                result: target,
            },
            Witness::OddDegree { source_degree, drop, degree } => Witness::OddDegree {
                source_degree,
                drop: drop + 1,
                degree,
            },
            Witness::CenterDimension { g, g_prime, center_dim, .. } => Witness::CenterDimension {
                g,
                g_prime,
                center_dim,
                required_min: center_dim,
            },
        };
        assert!(!tampered.verify(), "{}", r.label);
    }
}
