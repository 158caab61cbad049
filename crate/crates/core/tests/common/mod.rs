#![allow(dead_code)]

use proptest::prelude::*;
use realforms_core::exactnum::{GaussRational, Quaternion, Rational};
use realforms_core::matrix::Matrix;
use realforms_core::rng::Lcg64;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| r.signum() != 0)
}

pub fn gauss() -> impl Strategy<Value = GaussRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussRational::new(re, im))
}

pub fn quaternion() -> impl Strategy<Value = Quaternion> {
    (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, d)| Quaternion::new(a, b, c, d))
}

pub fn rng_matrix<T: realforms_core::Scalar>(n: usize, seed: u64) -> Matrix<T> {
    Matrix::random(n, n, &mut Lcg64::new(seed), 5)
}

/// Cofactor expansion along the first row; independent of the elimination code.
pub fn cofactor_det(m: &Matrix<GaussRational>) -> GaussRational {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = GaussRational::from_ints(0, 0);
    for j in 0..n {
        let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
            let cc = if c < j { c } else { c + 1 };
            m.get(r + 1, cc).clone()
        });
        let term = m.get(0, j).clone() * cofactor_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

pub fn g(re: i64, im: i64) -> GaussRational {
    GaussRational::from_ints(re, im)
}
