//! Exact sampling of form-preserving matrices through the Cayley transform.
//!
//! For a Gram matrix `S` with `S* = εS` and a random `K` with `K* = -εK`, the
//! matrix `X = S⁻¹K` satisfies `X* S = -S X`, so `(Id - X)(Id + X)⁻¹` preserves
//! `S`. Here `*` is the transpose (bilinear pairing) or the conjugate transpose
//! (sesquilinear pairing).

use super::{AnyMatrix, Matrix};
use crate::exactnum::{GaussRational, Scalar, ScalarKind};
use crate::forms::{congruence_diagonalize, FormSpec, Parity};
use crate::rng::Lcg64;
use crate::{Error, Result};

/// Default bound on numerators and denominators of random entries.
pub const DEFAULT_HEIGHT: u32 = 5;
const MAX_ATTEMPTS: u32 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    /// `M^t S M = S`
    Bilinear,
    /// `M̄^t S M = S` (`σ(M)^t S M = S` over the quaternions)
    Sesquilinear,
}

impl Pairing {
    pub fn adjoint<T: Scalar>(self, m: &Matrix<T>) -> Matrix<T> {
        match self {
            Pairing::Bilinear => m.transpose(),
            Pairing::Sesquilinear => m.star(),
        }
    }

    fn adjoint_scalar<T: Scalar>(self, x: &T) -> T {
        match self {
            Pairing::Bilinear => x.clone(),
            Pairing::Sesquilinear => x.conj(),
        }
    }

    /// Whether `M` preserves `S` under this pairing.
    pub fn preserves<T: Scalar>(self, m: &Matrix<T>, gram: &Matrix<T>) -> bool {
        m.rows() == gram.rows() && m.is_square() && &(&self.adjoint(m) * gram) * m == *gram
    }
}

/// `(Id - X)(Id + X)⁻¹`; fails with [`Error::Singular`] when `Id + X` is singular.
pub fn cayley_transform<T: Scalar>(x: &Matrix<T>) -> Result<Matrix<T>> {
    let n = x.require_square("cayley_transform")?;
    let id = Matrix::<T>::identity(n);
    let plus = (&id + x).inverse()?;
    Ok(&(&id - x) * &plus)
}

/// Samples `M` with `M* S M = S` for an `ε`-symmetric invertible `S`.
///
/// Deterministic per `seed`; a singular `Id + X` draws again from the same
/// stream, up to a fixed number of attempts.
pub fn cayley_sample_gram<T: Scalar>(gram: &Matrix<T>, pairing: Pairing, seed: u64, height: u32) -> Result<Matrix<T>> {
    let n = gram.require_square("cayley_sample")?;
    if pairing == Pairing::Bilinear && T::KIND == ScalarKind::Quaternion {
        return Err(Error::NotApplicable("bilinear pairing over the quaternions".into()));
    }
    let adj = pairing.adjoint(gram);
    let eps = if adj == *gram {
        T::one()
    } else if adj == -gram {
        -T::one()
    } else {
        return Err(Error::Symmetry {
            expected: "(anti)symmetric",
        });
    };
    let gram_inv = gram.inverse()?;
    let mut rng = Lcg64::new(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut k = Matrix::<T>::zeros(n, n);
        for i in 0..n {
            let r = T::sample(&mut rng, height);
            k.set(i, i, r.clone() - eps.clone() * pairing.adjoint_scalar(&r));
            for j in i + 1..n {
                let x = T::sample(&mut rng, height);
                k.set(j, i, -(eps.clone() * pairing.adjoint_scalar(&x)));
                k.set(i, j, x);
            }
        }
        let x = &gram_inv * &k;
        match cayley_transform(&x) {
            Ok(m) => {
                debug_assert!(pairing.preserves(&m, gram));
                return Ok(m);
            }
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SamplingFailure {
        seed,
        attempts: MAX_ATTEMPTS,
    })
}

/// Samples an element of the special isometry group of `form`.
///
/// Quadratic and quaternionic kinds come straight from the Cayley transform.
/// Unitary Cayley samples only have unit-modulus determinant, so hermitian
/// forms are first diagonalized to a real `D = W* S W`, a sample `M` of `U(D)`
/// is replaced by `M·M̄` (determinant 1), and the result is conjugated back by
/// `W`.
pub fn cayley_sample(form: &FormSpec, seed: u64) -> Result<AnyMatrix> {
    match form {
        FormSpec::Quadratic(g) => Ok(AnyMatrix::Rational(cayley_sample_gram(
            g,
            Pairing::Bilinear,
            seed,
            DEFAULT_HEIGHT,
        )?)),
        FormSpec::Hermitian(g) => {
            let dg = congruence_diagonalize(g, Parity::Hermitian)?;
            let d = Matrix::diag(dg.diagonal.clone());
            let m = cayley_sample_gram::<GaussRational>(&d, Pairing::Sesquilinear, seed, DEFAULT_HEIGHT)?;
            let m = &m * &m.conj();
            let w_inv = dg.witness.inverse()?;
            Ok(AnyMatrix::Gauss(&(&dg.witness * &m) * &w_inv))
        }
        FormSpec::QuatHermitian(g) | FormSpec::QuatAntiHermitian(g) => Ok(AnyMatrix::Quaternion(cayley_sample_gram(
            g,
            Pairing::Sesquilinear,
            seed,
            DEFAULT_HEIGHT,
        )?)),
    }
}
