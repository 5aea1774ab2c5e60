mod common;

use clasp::conway::potential;
use clasp::invariants::signature;
use clasp::model::*;
use common::*;
use proptest::prelude::*;

fn names() -> Vec<&'static str> {
    bundled_names()
}

#[test]
fn bundled_models_are_valid() {
    for name in names() {
        let m = bundled(name).unwrap();
        assert!(m.is_valid(), "{name}: {:?}", m.validate());
    }
    let clasp = bundled("clasp2").unwrap();
    assert_eq!(clasp.seifert.by_signs("--").unwrap(), &vec![vec![-1]]);
    assert_eq!(clasp.seifert.by_signs("++").unwrap(), &vec![vec![-1]]);
    assert_eq!(clasp.seifert.by_signs("+-").unwrap(), &vec![vec![0]]);
    assert_eq!(clasp.seifert.by_signs("-+").unwrap(), &vec![vec![0]]);
}

#[test]
fn invalid_models_are_reported() {
    let mut m = bundled("threecolor").unwrap();
    m.colors = vec![1, 1, 4];
    m.linking_matrix[0][1] = 5;
    let found: Vec<Invariant> = m.validate().into_iter().map(|v| v.invariant).collect();
    assert!(found.contains(&Invariant::ColorRange));
    assert!(found.contains(&Invariant::ColorSurjectivity));
    assert!(found.contains(&Invariant::LinkingSymmetry));
}

#[test]
fn save_and_load_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in names() {
        let m = bundled(name).unwrap();
        let path = dir.path().join(format!("{name}.json"));
        save(&m, &path).unwrap();
        assert_eq!(load(&path).unwrap(), m, "{name}");
        assert_eq!(load_str(bundled_json(name).unwrap()).unwrap(), m, "{name}");
    }
}

#[test]
fn enlargement_moves_preserve_signature_and_nullity() {
    let failures = enlargement_failures(101, 100, 10);
    assert!(failures.is_empty(), "{failures:#?}");
}

fn star_values(values: Vec<i64>) -> impl FnMut() -> i64 {
    let mut i = 0;
    move || {
        i += 1;
        values[i % values.len()]
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sign_vectors_are_transpose_symmetric(which in 0usize..7, mask in any::<usize>()) {
        let m = bundled(names()[which % names().len()]).unwrap();
        let full = (1usize << m.mu) - 1;
        let mask = mask & full;
        prop_assert_eq!(m.seifert.get(mask ^ full), &matrix_ops::transpose(m.seifert.get(mask)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sums_are_valid(a in 0usize..7, b in 0usize..7, ca in 1usize..=3, cb in 1usize..=3) {
        let (a, b) = (bundled(names()[a]).unwrap(), bundled(names()[b]).unwrap());
        let (ca, cb) = ((ca - 1) % a.mu + 1, (cb - 1) % b.mu + 1);
        let c = connected_sum(&a, &b, ca, cb).unwrap();
        prop_assert!(c.is_valid(), "{:?}", c.validate());
        prop_assert_eq!(c.mu, a.mu + b.mu - 1);
        let d = disjoint_sum(&a, &b).unwrap();
        prop_assert!(d.is_valid(), "{:?}", d.validate());
        prop_assert_eq!(d.nu, a.nu + b.nu);
    }

    #[test]
    fn mirror_and_reversal_are_involutions(which in 0usize..7, color in 1usize..=3) {
        let m = bundled(names()[which]).unwrap();
        prop_assert_eq!(mirror(&mirror(&m)), m.clone());
        let color = (color - 1) % m.mu + 1;
        let r = reverse_color(&m, color).unwrap();
        prop_assert!(r.is_valid());
        prop_assert_eq!(reverse_color(&r, color).unwrap(), m);
    }

    #[test]
    fn family_moves_preserve_the_invariants(
        which in prop::sample::select(vec!["trefoil", "clasp2", "threecolor", "fox", "hopf1"]),
        stars in prop::collection::vec(-3i64..=3, 1..8),
        j in 1usize..=3,
        k in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let m = bundled(which).unwrap();
        let j = (j - 1) % m.mu + 1;
        let k = (k - 1) % m.mu + 1;
        let mut moved = vec![t1_enlargement(&m, j, star_values(stars.clone())).unwrap()];
        if j != k {
            moved.push(t2_enlargement(&m, j, k, star_values(stars)).unwrap());
        }
        let mut rng = rng(seed);
        let points: Vec<_> = (0..3).map(|_| random_exact_point(&mut rng, m.mu, 9)).collect();
        for big in &moved {
            prop_assert!(big.is_valid(), "{:?}", big.validate());
            prop_assert_eq!(big.size(), m.size() + 2);
            if m.chi_complement.is_some() {
                prop_assert_eq!(potential(big).unwrap(), potential(&m).unwrap());
            }
            for omega in &points {
                let (a, b) = (signature(&m, omega).unwrap(), signature(big, omega).unwrap());
                prop_assert_eq!((a.sigma, a.eta), (b.sigma, b.eta), "at {}", omega);
            }
        }
    }
}
