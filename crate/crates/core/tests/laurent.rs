use clasp::laurent::{bar_involution, det, normalize_unit, LaurentMatrix, LaurentPoly};
use proptest::prelude::*;

fn poly_strategy(nvars: usize, max_exp: i32, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-max_exp..=max_exp, nvars), -5i64..=5), 0..=max_terms).prop_map(
        move |terms| {
            terms.iter().fold(LaurentPoly::zero(nvars), |acc, (e, c)| &acc + &LaurentPoly::monomial(nvars, e, *c))
        },
    )
}

fn matrix_strategy(nvars: usize, n: usize, max_exp: i32) -> impl Strategy<Value = LaurentMatrix> {
    prop::collection::vec(poly_strategy(nvars, max_exp, 2), n * n)
        .prop_map(move |entries| LaurentMatrix::from_entries(nvars, n, n, entries).unwrap())
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(m: &LaurentMatrix) -> LaurentPoly {
    let n = m.rows();
    if n == 0 {
        return LaurentPoly::one(m.nvars());
    }
    let mut total = LaurentPoly::zero(m.nvars());
    for j in 0..n {
        let minor = LaurentMatrix::from_fn(m.nvars(), n - 1, n - 1, |r, c| {
            m.get(r + 1, if c < j { c } else { c + 1 }).clone()
        });
        let term = m.get(0, j) * &cofactor_det(&minor);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

#[test]
fn determinant_examples() {
    let empty = LaurentMatrix::zeros(1, 0, 0);
    assert_eq!(det(&empty).unwrap(), LaurentPoly::one(1));
    let one = LaurentMatrix::from_entries(2, 1, 1, vec!["-1 - t1*t2".parse().unwrap()]).unwrap();
    assert_eq!(det(&one).unwrap(), "-1 - t1*t2".parse().unwrap());
    let v = LaurentMatrix::from_integers(1, &[vec![-1, 1], vec![0, -1]]).unwrap();
    let t = LaurentPoly::var(1, 0);
    let m = v.transpose().sub(&v.scale(&t)).unwrap();
    assert_eq!(det(&m).unwrap(), LaurentPoly::parse("t^2 - t + 1", 1).unwrap());
    assert!(det(&LaurentMatrix::zeros(1, 2, 3)).is_err());
}

#[test]
fn normalization_examples() {
    let p = |s: &str, n| LaurentPoly::parse(s, n).unwrap();
    assert_eq!(normalize_unit(&p("-1 - t1*t2", 2)), p("1 + t1*t2", 2));
    assert_eq!(normalize_unit(&LaurentPoly::zero(2)), LaurentPoly::zero(2));
    assert_eq!(normalize_unit(&(&p("-t^-1", 1) * &p("t^2 - t + 1", 1))), p("t^2 - t + 1", 1));
    assert_eq!(bar_involution(&p("t1*t2", 2)), p("t1^-1*t2^-1", 2));
    assert_eq!(bar_involution(&p("1 + t1*t2", 2)), p("1 + t1^-1*t2^-1", 2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly_strategy(2, 3, 4), b in poly_strategy(2, 3, 4), c in poly_strategy(2, 3, 4)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert!(!(&a * &b).terms().any(|(_, c)| c == &0.into()));
    }
}

proptest! {
    #[test]
    fn bar_is_an_involutive_ring_map(a in poly_strategy(3, 3, 4), b in poly_strategy(3, 3, 4)) {
        prop_assert_eq!(bar_involution(&bar_involution(&a)), a.clone());
        prop_assert_eq!(bar_involution(&(&a * &b)), &bar_involution(&a) * &bar_involution(&b));
        prop_assert_eq!(bar_involution(&(&a + &b)), &bar_involution(&a) + &bar_involution(&b));
    }

    #[test]
    fn normalization_ignores_units(p in poly_strategy(2, 3, 4), e in prop::collection::vec(-4i32..=4, 2), negative in any::<bool>()) {
        let u = LaurentPoly::monomial(2, &e, if negative { -1 } else { 1 });
        let n = normalize_unit(&p);
        prop_assert_eq!(normalize_unit(&(&u * &p)), n.clone());
        prop_assert_eq!(normalize_unit(&n), n.clone());
        if !p.is_zero() {
            let min = n.min_exponents().unwrap();
            prop_assert!(min.iter().all(|&x| x == 0));
            prop_assert!(n.leading_term().unwrap().1 > &0.into());
        }
    }

    #[test]
    fn determinant_is_multiplicative(
        (a, b) in (1usize..=3).prop_flat_map(|n| (matrix_strategy(2, n, 1), matrix_strategy(2, n, 1)))
    ) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(det(&ab).unwrap(), &det(&a).unwrap() * &det(&b).unwrap());
        prop_assert_eq!(det(&a.transpose()).unwrap(), det(&a).unwrap());
        prop_assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn elimination_matches_cofactor_expansion(m in (0usize..=4).prop_flat_map(|n| matrix_strategy(2, n, 2))) {
        prop_assert_eq!(det(&m).unwrap(), cofactor_det(&m));
    }
}
