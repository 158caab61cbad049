mod common;

use common::*;
use proptest::prelude::*;
use realforms_core::exactnum::{GaussRational, Quaternion, Rational};
use realforms_core::forms::FormSpec;
use realforms_core::matrix::{
    build_structured, cayley_sample, exact_det, quaternionic_structure, root_signature_matrix, signature_matrix, star,
    AnyMatrix, Matrix, Pairing, StructuredKind,
};
use realforms_core::Scalar;

type G = GaussRational;

#[test]
fn structured_examples() {
    let ip = build_structured(StructuredKind::Ip { n: 2, p: 1 }).unwrap();
    assert_eq!(ip, Matrix::diag(vec![g(1, 0), g(-1, 0)]));
    let an = build_structured(StructuredKind::An { n: 2 }).unwrap();
    assert_eq!(
        an,
        Matrix::from_rows(vec![vec![g(0, 0), g(1, 0)], vec![g(-1, 0), g(0, 0)]]).unwrap()
    );
    let jp = build_structured(StructuredKind::Jp { n: 3, p: 1 }).unwrap();
    assert_eq!(jp, Matrix::diag(vec![g(1, 0), g(0, 1), g(0, 1)]));
    assert_eq!(&jp * &jp, signature_matrix(3, 1));
    assert!(build_structured(StructuredKind::An { n: 3 }).is_err());
    assert!(build_structured(StructuredKind::Ip { n: 2, p: 3 }).is_err());
}

#[test]
fn determinant_examples() {
    assert!(exact_det(&Matrix::<Rational>::identity(3)).unwrap().is_one());
    let a4 = quaternionic_structure::<G>(4).unwrap();
    assert_eq!(exact_det(&a4).unwrap(), cofactor_det(&a4));
    assert!(exact_det(&a4).unwrap().is_one());
    let ip = signature_matrix::<Rational>(5, 2);
    assert_eq!(exact_det(&ip).unwrap(), Rational::from_int(-1));
}

#[test]
fn star_examples() {
    let m = Matrix::from_rows(vec![vec![g(0, 1)]]).unwrap();
    assert_eq!(star(&m), Matrix::from_rows(vec![vec![g(0, -1)]]).unwrap());
    let m = Matrix::from_rows(vec![vec![g(1, 0), g(0, 1)], vec![g(0, 0), g(1, 0)]]).unwrap();
    let expect = Matrix::from_rows(vec![vec![g(1, 0), g(0, 0)], vec![g(0, -1), g(1, 0)]]).unwrap();
    assert_eq!(star(&m), expect);
    let jp = root_signature_matrix(4, 2);
    let ip = signature_matrix::<G>(4, 2);
    // diagonal oracle, entry by entry
    let lhs = &(&star(&jp) * &ip) * &jp;
    let expected: Vec<G> = (0..4)
        .map(|k| {
            let j = jp.get(k, k).clone();
            j.conj() * ip.get(k, k) * &j
        })
        .collect();
    assert_eq!(lhs, Matrix::diag(expected));
    assert_eq!(&star(&jp) * &jp, Matrix::identity(4));
}

#[test]
fn structured_identities_up_to_ten() {
    for n in (2..=10).step_by(2) {
        let a = quaternionic_structure::<G>(n).unwrap();
        let id = Matrix::<G>::identity(n);
        assert_eq!(&a * &a, -&id);
        assert_eq!(a.transpose(), -&a);
        assert_eq!(a.inverse().unwrap(), -&a);
    }
    for n in 1..=8 {
        for q in 0..=n {
            let jq = root_signature_matrix(n, q);
            assert!((&(&jq * &signature_matrix(n, q)) * &jq).is_identity());
            assert_eq!(&jq * &jq, signature_matrix(n, q));
            assert!((&star(&jq) * &jq).is_identity());
        }
    }
}

#[test]
fn cayley_samples_have_determinant_one() {
    let forms = [
        FormSpec::quadratic(signature_matrix(3, 1)).unwrap(),
        FormSpec::hermitian(signature_matrix(3, 2)).unwrap(),
        FormSpec::hermitian(Matrix::from_rows(vec![vec![g(0, 0), g(0, 1)], vec![g(0, -1), g(0, 0)]]).unwrap()).unwrap(),
        FormSpec::quat_hermitian(signature_matrix(2, 1)).unwrap(),
        FormSpec::quat_antihermitian(Matrix::diag(vec![Quaternion::unit_i(), Quaternion::unit_j()])).unwrap(),
    ];
    for form in &forms {
        for seed in 0..8 {
            let m = cayley_sample(form, seed).unwrap();
            let ok = match (form, &m) {
                (FormSpec::Quadratic(s), AnyMatrix::Rational(m)) => {
                    Pairing::Bilinear.preserves(m, s) && m.det().unwrap().is_one()
                }
                (FormSpec::Hermitian(s), AnyMatrix::Gauss(m)) => {
                    Pairing::Sesquilinear.preserves(m, s) && cofactor_det(m).is_one()
                }
                (FormSpec::QuatHermitian(s) | FormSpec::QuatAntiHermitian(s), AnyMatrix::Quaternion(m)) => {
                    Pairing::Sesquilinear.preserves(m, s)
                        && realforms_core::quatlin::mu_embed(m).det().unwrap().is_one()
                }
                _ => false,
            };
            assert!(ok, "{form:?} seed {seed}");
        }
    }
}

#[test]
fn matrix_json_round_trip() {
    let m = Matrix::from_rows(vec![vec![g(0, 1), g(0, 0)], vec![g(0, 0), g(2, 0)]]).unwrap();
    let text = serde_json::to_string(&m).unwrap();
    assert_eq!(
        text,
        r#"{"rows":2,"cols":2,"scalar":"gauss","entries":["0|1","0|0","0|0","2|0"]}"#
    );
    let back: Matrix<G> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, m);
    let any: AnyMatrix = serde_json::from_str(&text).unwrap();
    assert_eq!(any, AnyMatrix::Gauss(m));
    assert!(serde_json::from_str::<Matrix<G>>(r#"{"rows":1,"cols":2,"scalar":"gauss","entries":["1|0"]}"#).is_err());
    assert!(serde_json::from_str::<Matrix<Rational>>(&text).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn det_is_multiplicative(n in 1usize..=4, s1 in any::<u64>(), s2 in any::<u64>()) {
        let a: Matrix<G> = rng_matrix(n, s1);
        let b: Matrix<G> = rng_matrix(n, s2);
        let ab = &a * &b;
        prop_assert_eq!(exact_det(&ab).unwrap(), exact_det(&a).unwrap() * exact_det(&b).unwrap());
        prop_assert_eq!(exact_det(&a).unwrap(), cofactor_det(&a));
    }

    #[test]
    fn star_reverses_products(n in 1usize..=4, s1 in any::<u64>(), s2 in any::<u64>()) {
        let a: Matrix<G> = rng_matrix(n, s1);
        let b: Matrix<G> = rng_matrix(n, s2);
        prop_assert_eq!(star(&(&a * &b)), &star(&b) * &star(&a));
        prop_assert_eq!(star(&star(&a)), a);
    }

    #[test]
    fn inverse_is_two_sided(n in 1usize..=4, seed in any::<u64>()) {
        let a: Matrix<Quaternion> = rng_matrix(n, seed);
        if let Ok(inv) = a.inverse() {
            prop_assert!((&a * &inv).is_identity());
            prop_assert!((&inv * &a).is_identity());
        } else {
            prop_assert!(a.rank() < n);
        }
    }

    #[test]
    fn cayley_membership(n in 1usize..=4, p_frac in 0usize..=4, seed in any::<u64>()) {
        let p = p_frac.min(n);
        let form = FormSpec::quadratic(signature_matrix(n, p)).unwrap();
        let AnyMatrix::Rational(m) = cayley_sample(&form, seed).unwrap() else { unreachable!() };
        let s = signature_matrix::<Rational>(n, p);
        prop_assert_eq!(&(&m.transpose() * &s) * &m, s);
        prop_assert!(m.det().unwrap().is_one());
    }
}
