//! The named matrices: the sign diagonal `I_p`, its square root `J_p`, and the
//! quaternionic structure `A_n`.

use serde::{Deserialize, Serialize};

use super::Matrix;
use crate::exactnum::{GaussRational, Scalar};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum StructuredKind {
    /// `diag(1 ×p, -1 ×(n-p))`
    Ip { n: usize, p: usize },
    /// `diag(1 ×p, i ×(n-p))`
    Jp { n: usize, p: usize },
    /// Block diagonal with blocks `[[0,1],[-1,0]]`; `n` even.
    An { n: usize },
}

impl StructuredKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            StructuredKind::Ip { n, p } | StructuredKind::Jp { n, p } => {
                if n == 0 || p > n {
                    return Err(Error::InvalidStructure(format!(
                        "need 0 <= p <= n, n >= 1 (n={n}, p={p})"
                    )));
                }
            }
            StructuredKind::An { n } => {
                if n == 0 || n % 2 == 1 {
                    return Err(Error::InvalidStructure(format!("A_n needs positive even n, got {n}")));
                }
            }
        }
        Ok(())
    }
}

pub fn build_structured(kind: StructuredKind) -> Result<Matrix<GaussRational>> {
    kind.validate()?;
    Ok(match kind {
        StructuredKind::Ip { n, p } => signature_matrix(n, p),
        StructuredKind::Jp { n, p } => root_signature_matrix(n, p),
        StructuredKind::An { n } => quaternionic_structure(n)?,
    })
}

/// `I_p`. Panics if `p > n`.
pub fn signature_matrix<T: Scalar>(n: usize, p: usize) -> Matrix<T> {
    assert!(p <= n, "index {p} exceeds size {n}");
    Matrix::diag((0..n).map(|j| if j < p { T::one() } else { -T::one() }).collect())
}

/// `J_p`, with `J_p² = I_p`. Panics if `p > n`.
pub fn root_signature_matrix(n: usize, p: usize) -> Matrix<GaussRational> {
    assert!(p <= n, "index {p} exceeds size {n}");
    Matrix::diag(
        (0..n)
            .map(|j| {
                if j < p {
                    GaussRational::one()
                } else {
                    GaussRational::i()
                }
            })
            .collect(),
    )
}

/// `A_n`: entry `(i, i+1) = 1` for odd `i` and `(i, i-1) = -1` for even `i`
/// (1-based). `A_n² = -Id`, `A_n^t = A_n^{-1} = -A_n`.
pub fn quaternionic_structure<T: Scalar>(n: usize) -> Result<Matrix<T>> {
    StructuredKind::An { n }.validate()?;
    Ok(Matrix::from_fn(n, n, |r, c| {
        if r % 2 == 0 && c == r + 1 {
            T::one()
        } else if r % 2 == 1 && c + 1 == r {
            -T::one()
        } else {
            T::zero()
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn g(re: i64, im: i64) -> GaussRational {
        GaussRational::from_ints(re, im)
    }

    #[test]
    fn examples() {
        let ip = build_structured(StructuredKind::Ip { n: 2, p: 1 }).unwrap();
        assert_eq!(ip, Matrix::diag(vec![g(1, 0), g(-1, 0)]));

        let a2 = build_structured(StructuredKind::An { n: 2 }).unwrap();
        let expect = Matrix::from_rows(vec![vec![g(0, 0), g(1, 0)], vec![g(-1, 0), g(0, 0)]]).unwrap();
        assert_eq!(a2, expect);

        let j = build_structured(StructuredKind::Jp { n: 3, p: 1 }).unwrap();
        assert_eq!(j, Matrix::diag(vec![g(1, 0), g(0, 1), g(0, 1)]));
        assert_eq!(&j * &j, signature_matrix(3, 1));
    }

    #[test]
    fn rejects_bad_kinds() {
        assert!(build_structured(StructuredKind::An { n: 3 }).is_err());
        assert!(build_structured(StructuredKind::Ip { n: 2, p: 3 }).is_err());
        assert!(quaternionic_structure::<Rational>(0).is_err());
    }

    #[test]
    fn determinants() {
        let a4 = quaternionic_structure::<Rational>(4).unwrap();
        assert_eq!(a4.det().unwrap(), Rational::one());
        let i2 = signature_matrix::<Rational>(5, 2);
        assert_eq!(i2.det().unwrap(), Rational::from_int(-1));
    }
}
