use fano64::lattice::Int;
use fano64::toric::{anticanonical_polytope, cone_lattice_index, polytope_degree, validate_fan, Fan};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn det(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn unimodular(rng: &mut ChaCha8Rng) -> [[i64; 3]; 3] {
    loop {
        let m: [[i64; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-3..=3)));
        if det(&m).abs() == 1 {
            return m;
        }
    }
}

fn indices(fan: &Fan) -> Vec<Int> {
    (0..fan.cones().len())
        .filter_map(|c| <[_; 3]>::try_from(fan.cone_rays(c)).ok())
        .map(|tri| cone_lattice_index(&tri).unwrap())
        .collect()
}

#[test]
fn indices_degrees_and_findings_are_unimodular_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    for fan in [Fan::projective_space(), Fan::product_of_lines(), Fan::x66_as_printed()] {
        let degree = polytope_degree(&anticanonical_polytope(&fan).unwrap()).unwrap();
        let idx = indices(&fan);
        let report = validate_fan(&fan);
        for _ in 0..40 {
            let m = unimodular(&mut rng);
            let moved = fan.transform(&m);
            assert_eq!(indices(&moved), idx);
            assert_eq!(polytope_degree(&anticanonical_polytope(&moved).unwrap()).unwrap(), degree);
            let moved_report = validate_fan(&moved);
            assert_eq!(moved_report.is_clean(), report.is_clean());
            assert_eq!(moved_report.gorenstein_failures(), report.gorenstein_failures());
        }
    }
}
