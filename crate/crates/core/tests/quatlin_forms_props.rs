mod common;

use common::*;
use proptest::prelude::*;
use realforms_core::cohomology::{rep_cocycle, Family};
use realforms_core::exactnum::{GaussRational, Quaternion, Rational};
use realforms_core::forms::{
    equivalent, pfister3_class, pfister3_expand, pfister3_signature, signature_index, FormSpec, Pfister3, PfisterClass,
};
use realforms_core::matrix::{cayley_sample, signature_matrix, AnyMatrix, Matrix, Pairing};
use realforms_core::quatlin::{
    canonicalize_quat_antihermitian, canonicalize_quat_hermitian, embedded_form_matrix, in_quaternionic_image,
    mu_embed, sigma_transpose_compat,
};
use realforms_core::Scalar;

type G = GaussRational;

// Entrywise block formula, written out independently of the library.
fn mu_oracle(x: &Quaternion) -> Matrix<G> {
    let z = |re: &Rational, im: &Rational| G::new(re.clone(), im.clone());
    Matrix::from_rows(vec![
        vec![z(&x.a, &x.b), z(&x.c, &x.d)],
        vec![z(&-x.c.clone(), &x.d), z(&x.a, &-x.b.clone())],
    ])
    .unwrap()
}

fn diag_q(v: &[i64]) -> Matrix<Quaternion> {
    Matrix::diag(v.iter().map(|&x| Quaternion::from_ints(x, 0, 0, 0)).collect())
}

fn diag_r(v: &[i64]) -> Matrix<Rational> {
    Matrix::diag(v.iter().map(|&x| Rational::from_int(x)).collect())
}

#[test]
fn mu_matches_block_formula() {
    for x in [
        Quaternion::unit_i(),
        Quaternion::unit_j(),
        Quaternion::from_ints(1, -2, 3, 5),
    ] {
        assert_eq!(mu_embed(&Matrix::diag(vec![x.clone()])), mu_oracle(&x));
    }
    let i = mu_embed(&Matrix::diag(vec![Quaternion::unit_i()]));
    let j = mu_embed(&Matrix::diag(vec![Quaternion::unit_j()]));
    assert_eq!(
        &i * &j,
        Matrix::from_rows(vec![vec![g(0, 0), g(0, 1)], vec![g(0, 1), g(0, 0)]]).unwrap()
    );
}

#[test]
fn image_witness_and_identity() {
    assert!(!in_quaternionic_image(&Matrix::diag(vec![g(0, 1), g(0, 1)])).unwrap());
    assert!(in_quaternionic_image(&Matrix::<G>::identity(4)).unwrap());
    assert!(in_quaternionic_image(&Matrix::<G>::identity(3)).is_err());
}

#[test]
fn sigma_compat_on_hundred_seeded_matrices() {
    for seed in 0..100 {
        let m: Matrix<Quaternion> = rng_matrix(2, seed);
        assert!(sigma_transpose_compat(&m), "seed {seed}");
    }
}

#[test]
fn embedded_form_transports_membership() {
    let h = FormSpec::quat_hermitian(signature_matrix(2, 1)).unwrap();
    let t = embedded_form_matrix(&h).unwrap();
    assert_eq!(t.transpose(), -&t);
    let a = FormSpec::quat_antihermitian(Matrix::diag(vec![Quaternion::unit_i(), Quaternion::unit_k()])).unwrap();
    let ta = embedded_form_matrix(&a).unwrap();
    assert_eq!(ta.transpose(), ta);
    for (form, gram) in [(&h, &t), (&a, &ta)] {
        for seed in 0..10 {
            let AnyMatrix::Quaternion(m) = cayley_sample(form, seed).unwrap() else {
                unreachable!()
            };
            assert!(Pairing::Bilinear.preserves(&mu_embed(&m), gram));
        }
    }
    let singular = FormSpec::quat_hermitian(diag_q(&[1, 0]));
    assert!(singular.is_err() || embedded_form_matrix(&singular.unwrap()).is_err());
    let quadratic = FormSpec::quadratic(diag_r(&[1])).unwrap();
    assert!(embedded_form_matrix(&quadratic).is_err());
}

#[test]
fn antihermitian_rotation_on_square_norm() {
    let u = Quaternion::from_ints(0, 3, 4, 0);
    let gram = Matrix::diag(vec![u]);
    let c = canonicalize_quat_antihermitian(&FormSpec::quat_antihermitian(gram.clone()).unwrap()).unwrap();
    let d = &(&c.witness.star() * &gram) * &c.witness;
    assert_eq!(d, Matrix::diag(vec![Quaternion::unit_i()]));
    let bad = FormSpec::quat_hermitian(diag_q(&[1])).unwrap();
    assert!(canonicalize_quat_antihermitian(&bad).is_err());
}

#[test]
fn signature_index_examples() {
    assert_eq!(
        signature_index(&FormSpec::quadratic(diag_r(&[1, -1, -1])).unwrap()).unwrap(),
        1
    );
    let h = Matrix::from_rows(vec![vec![g(0, 0), g(0, 1)], vec![g(0, -1), g(0, 0)]]).unwrap();
    assert_eq!(signature_index(&FormSpec::hermitian(h).unwrap()).unwrap(), 1);
    assert_eq!(
        signature_index(&FormSpec::quadratic(diag_r(&[2, 3, 5, -7])).unwrap()).unwrap(),
        3
    );
    let degenerate = FormSpec::quadratic(diag_r(&[1, 0])).unwrap();
    assert!(matches!(
        signature_index(&degenerate),
        Err(realforms_core::Error::Degenerate { rank: 1, size: 2 })
    ));
}

#[test]
fn equivalence_examples() {
    let a = FormSpec::quadratic(diag_r(&[1, -1])).unwrap();
    let hyperbolic = Matrix::from_rows(vec![
        vec![Rational::from_int(0), Rational::from_int(1)],
        vec![Rational::from_int(1), Rational::from_int(0)],
    ])
    .unwrap();
    let b = FormSpec::quadratic(hyperbolic).unwrap();
    assert!(equivalent(&a, &b).unwrap());
    assert!(!equivalent(&FormSpec::quadratic(diag_r(&[1, 1])).unwrap(), &a).unwrap());
    let h = FormSpec::hermitian(signature_matrix(2, 1)).unwrap();
    assert!(equivalent(&a, &h).is_err());
}

#[test]
fn quat_hermitian_index_examples() {
    let idx = |v: &[i64]| {
        canonicalize_quat_hermitian(&FormSpec::quat_hermitian(diag_q(v)).unwrap())
            .unwrap()
            .index
    };
    assert_eq!(idx(&[1, -1]), 1);
    assert_eq!(idx(&[2, 3, -5]), 2);
}

#[test]
fn representative_forms_have_index_q() {
    for n in 1..=8 {
        for p in 0..=n {
            for q in (0..=n).filter(|q| (q + p) % 2 == 0) {
                let x = rep_cocycle(Family::Su, n, p, q).unwrap();
                let h = &x.b * &signature_matrix(n, p);
                let expected = (0..n).filter(|&k| h.get(k, k).re.signum() > 0).count();
                assert_eq!(expected, q);
                assert_eq!(signature_index(&FormSpec::hermitian(h).unwrap()).unwrap(), q);
            }
        }
    }
}

#[test]
fn pfister_examples_and_height_three() {
    let pf = |a: Rational, b: Rational, c: Rational| Pfister3::new(a, b, c).unwrap();
    let one = || Rational::from_int(1);
    assert_eq!(pfister3_class(&pf(one(), one(), one())), PfisterClass::Definite);
    assert_eq!(pfister3_class(&pf(-one(), one(), one())), PfisterClass::Split);
    let mut values = Vec::new();
    for num in -3i64..=3 {
        for den in 1i64..=3 {
            if num != 0 {
                values.push(Rational::new(num, den));
            }
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for a in &values {
        for b in &values {
            for c in &values {
                let p = pf(a.clone(), b.clone(), c.clone());
                let FormSpec::Quadratic(gram) = pfister3_expand(&p) else {
                    unreachable!()
                };
                let pos = gram.diagonal().iter().filter(|d| d.signum() > 0).count() as i64;
                let sig = 2 * pos - 8;
                assert!(sig == 8 || sig == 0);
                assert_eq!(pfister3_signature(&p), sig);
                seen.insert(format!("{:?}", pfister3_class(&p)));
            }
        }
    }
    assert_eq!(seen.len(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mu_is_a_ring_homomorphism(n in 1usize..=3, s1 in any::<u64>(), s2 in any::<u64>()) {
        let a: Matrix<Quaternion> = rng_matrix(n, s1);
        let b: Matrix<Quaternion> = rng_matrix(n, s2);
        prop_assert_eq!(mu_embed(&(&a * &b)), &mu_embed(&a) * &mu_embed(&b));
        prop_assert_eq!(mu_embed(&(&a + &b)), &mu_embed(&a) + &mu_embed(&b));
        prop_assert!(in_quaternionic_image(&mu_embed(&a)).unwrap());
        prop_assert!(in_quaternionic_image(&(&mu_embed(&a) * &mu_embed(&b))).unwrap());
        prop_assert_eq!((&a * &b).star(), &b.star() * &a.star());
        prop_assert!(sigma_transpose_compat(&a));
    }

    #[test]
    fn index_plus_negatives_is_size(v in prop::collection::vec(nonzero_rational(), 1..6), seed in any::<u64>()) {
        let n = v.len();
        let u: Matrix<Rational> = rng_matrix(n, seed);
        prop_assume!(u.is_invertible());
        let pos = v.iter().filter(|d| d.signum() > 0).count();
        let gram = &(&u.transpose() * &Matrix::diag(v.clone())) * &u;
        let f = FormSpec::quadratic(gram).unwrap();
        let inertia = realforms_core::forms::inertia(match &f { FormSpec::Quadratic(g) => g, _ => unreachable!() }).unwrap();
        prop_assert_eq!(inertia.positive + inertia.negative, n);
        prop_assert_eq!(signature_index(&f).unwrap(), pos);
        prop_assert!(equivalent(&f, &FormSpec::quadratic(Matrix::diag(v)).unwrap()).unwrap());
    }

    #[test]
    fn hermitian_index_is_congruence_invariant(v in prop::collection::vec(nonzero_rational(), 1..5), seed in any::<u64>()) {
        let n = v.len();
        let u: Matrix<G> = rng_matrix(n, seed);
        prop_assume!(u.is_invertible());
        let pos = v.iter().filter(|d| d.signum() > 0).count();
        let d = Matrix::diag(v.into_iter().map(G::from).collect());
        let f = FormSpec::hermitian(&(&u.star() * &d) * &u).unwrap();
        prop_assert_eq!(signature_index(&f).unwrap(), pos);
    }

    #[test]
    fn quat_index_is_congruence_invariant(v in prop::collection::vec(nonzero_rational(), 1..4), seed in any::<u64>()) {
        let n = v.len();
        let u: Matrix<Quaternion> = rng_matrix(n, seed);
        prop_assume!(u.is_invertible());
        let pos = v.iter().filter(|d| d.signum() > 0).count();
        let d = Matrix::diag(v.into_iter().map(Quaternion::from).collect());
        let f = FormSpec::quat_hermitian(&(&u.star() * &d) * &u).unwrap();
        let c = canonicalize_quat_hermitian(&f).unwrap();
        prop_assert_eq!(c.index, pos);
        let FormSpec::QuatHermitian(gram) = &f else { unreachable!() };
        let reduced = &(&c.witness.star() * gram) * &c.witness;
        prop_assert_eq!(reduced, Matrix::diag(c.diagonal.clone()));
        let signs: Vec<i8> = c.diagonal.iter().map(|x| x.a.signum()).collect();
        let mut expected = vec![1i8; pos];
        expected.extend(vec![-1i8; n - pos]);
        prop_assert_eq!(signs, expected);
    }

    #[test]
    fn antihermitian_reduces_to_pure_diagonal(n in 1usize..=3, seed in any::<u64>()) {
        let u: Matrix<Quaternion> = rng_matrix(n, seed);
        prop_assume!(u.is_invertible());
        let base = Matrix::identity(n).scale(&Quaternion::unit_j());
        let gram = &(&u.star() * &base) * &u;
        let c = canonicalize_quat_antihermitian(&FormSpec::quat_antihermitian(gram.clone()).unwrap()).unwrap();
        let d = &(&c.witness.star() * &gram) * &c.witness;
        prop_assert!(d.is_diagonal());
        prop_assert!(d.diagonal().iter().all(|x| x.is_pure() && !x.is_zero()));
    }
}
