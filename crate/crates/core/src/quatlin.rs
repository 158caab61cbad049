//! Quaternionic linear algebra through the embedding
//! `μ: M_m(ℍ) → M_{2m}(k̄)`, `a+bI+cJ+dK ↦ [[a+bi, c+di], [-c+di, a-bi]]`.
//!
//! The image of `μ` is `{N : N = A N̄ A⁻¹}` with `A = A_{2m}`, and
//! `μ(σ(M)^t) = A μ(M)^t A⁻¹`. A quaternionic (anti-)hermitian Gram matrix `[h]`
//! therefore becomes the `k̄`-bilinear Gram matrix `A⁻¹ μ([h])`, alternating for
//! hermitian `h` and symmetric for anti-hermitian `h`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exactnum::{GaussRational, Quaternion, Rational, Scalar};
use crate::forms::{congruence_diagonalize, sorted_diagonalization, FormSpec, Parity};
use crate::matrix::{quaternionic_structure, Matrix};
use crate::{Error, Result};

/// `μ(x)` for a single quaternion.
pub fn mu_block(x: &Quaternion) -> [[GaussRational; 2]; 2] {
    let g = |re: &Rational, im: &Rational| GaussRational::new(re.clone(), im.clone());
    [[g(&x.a, &x.b), g(&x.c, &x.d)], [g(&-&x.c, &x.d), g(&x.a, &-&x.b)]]
}

/// Entrywise `μ`; an `m × m` quaternion matrix becomes `2m × 2m` over `k̄`.
pub fn mu_embed(m: &Matrix<Quaternion>) -> Matrix<GaussRational> {
    let mut out = Matrix::zeros(2 * m.rows(), 2 * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let block = mu_block(m.get(i, j));
            for (r, row) in block.into_iter().enumerate() {
                for (c, v) in row.into_iter().enumerate() {
                    out.set(2 * i + r, 2 * j + c, v);
                }
            }
        }
    }
    out
}

/// Inverse of [`mu_embed`] on its image; `None` if `n` is not a `μ`-image.
pub fn mu_unembed(n: &Matrix<GaussRational>) -> Option<Matrix<Quaternion>> {
    if n.rows() % 2 == 1 || n.cols() % 2 == 1 {
        return None;
    }
    let (rows, cols) = (n.rows() / 2, n.cols() / 2);
    let mut out = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let alpha = n.get(2 * i, 2 * j);
            let beta = n.get(2 * i, 2 * j + 1);
            let x = Quaternion::new(alpha.re.clone(), alpha.im.clone(), beta.re.clone(), beta.im.clone());
            let block = mu_block(&x);
            if block[1][0] != *n.get(2 * i + 1, 2 * j) || block[1][1] != *n.get(2 * i + 1, 2 * j + 1) {
                return None;
            }
            out.set(i, j, x);
        }
    }
    Some(out)
}

/// `N = A_n N̄ A_n⁻¹`, the characterization of `μ(GL(n/2, ℍ))`.
pub fn in_quaternionic_image(n: &Matrix<GaussRational>) -> Result<bool> {
    let size = n.require_square("in_quaternionic_image")?;
    if size % 2 == 1 {
        return Err(Error::dim("in_quaternionic_image", "even size", size));
    }
    let a = quaternionic_structure::<GaussRational>(size)?;
    let a_inv = -&a;
    Ok(&(&a * &n.conj()) * &a_inv == *n)
}

/// Checks `μ(σ(M)^t) = A μ(M)^t A⁻¹` exactly.
pub fn sigma_transpose_compat(m: &Matrix<Quaternion>) -> bool {
    if !m.is_square() {
        return false;
    }
    let a = quaternionic_structure::<GaussRational>(2 * m.rows()).expect("even size");
    let lhs = mu_embed(&m.star());
    let rhs = &(&a * &mu_embed(m).transpose()) * &(-&a);
    lhs == rhs
}

/// `T = A⁻¹ μ([h])`: for every `M` with `σ(M)^t [h] M = [h]`,
/// `μ(M)^t T μ(M) = T`.
pub fn embedded_form_matrix(h: &FormSpec) -> Result<Matrix<GaussRational>> {
    let gram = match h {
        FormSpec::QuatHermitian(g) | FormSpec::QuatAntiHermitian(g) => g,
        other => {
            return Err(Error::KindMismatch {
                left: "quaternionic",
                right: other.kind().as_str(),
            })
        }
    };
    if !gram.is_invertible() {
        return Err(Error::Singular);
    }
    let a = quaternionic_structure::<GaussRational>(2 * gram.rows())?;
    Ok(&(-&a) * &mu_embed(gram))
}

#[derive(Debug, Clone, PartialEq)]
pub struct HermitianCanon {
    /// Number of positive pivots.
    pub index: usize,
    /// `σ(W)^t [h] W`, positives first.
    pub diagonal: Vec<Quaternion>,
    pub witness: Matrix<Quaternion>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AntiHermitianCanon {
    /// `σ(W)^t [h] W`, nonzero pure quaternions.
    pub diagonal: Vec<Quaternion>,
    pub witness: Matrix<Quaternion>,
}

fn quaternion_gram<'a>(h: &'a FormSpec, want: &'static str) -> Result<&'a Matrix<Quaternion>> {
    match (h, want) {
        (FormSpec::QuatHermitian(g), "quat-hermitian") => Ok(g),
        (FormSpec::QuatAntiHermitian(g), "quat-antihermitian") => Ok(g),
        _ => Err(Error::KindMismatch {
            left: want,
            right: h.kind().as_str(),
        }),
    }
}

/// Index and witness of a quaternionic hermitian form.
///
/// Every positive rational is a quaternion norm, so the pivots are scaled to
/// `±1` whenever the four-square search succeeds and the diagonal is then `I_p`.
pub fn canonicalize_quat_hermitian(h: &FormSpec) -> Result<HermitianCanon> {
    canonicalize_quat_hermitian_gram(quaternion_gram(h, "quat-hermitian")?)
}

pub fn canonicalize_quat_hermitian_gram(gram: &Matrix<Quaternion>) -> Result<HermitianCanon> {
    let (dg, inertia) = sorted_diagonalization(gram)?;
    Ok(HermitianCanon {
        index: inertia.positive,
        diagonal: dg.diagonal,
        witness: dg.witness,
    })
}

/// Diagonalizes a quaternionic anti-hermitian form to pure entries. Entries
/// whose norm is a rational square are additionally rotated onto the `I`
/// axis, `σ(q) u q = c·I`, with `c` stripped of square factors.
pub fn canonicalize_quat_antihermitian(h: &FormSpec) -> Result<AntiHermitianCanon> {
    canonicalize_quat_antihermitian_gram(quaternion_gram(h, "quat-antihermitian")?)
}

pub fn canonicalize_quat_antihermitian_gram(gram: &Matrix<Quaternion>) -> Result<AntiHermitianCanon> {
    let dg = congruence_diagonalize(gram, Parity::AntiHermitian)?;
    let n = gram.rows();
    let mut witness = dg.witness;
    let mut diagonal = dg.diagonal;
    for (k, entry) in diagonal.iter_mut().enumerate() {
        if let Some((q, c)) = reduce_pure_axis(entry) {
            for r in 0..n {
                witness.set(r, k, witness.get(r, k).clone() * &q);
            }
            *entry = Quaternion::unit_i().scale(&c);
        }
    }
    Ok(AntiHermitianCanon { diagonal, witness })
}

/// For a pure `u` whose norm is a rational square `s²`, returns `(q, c)` with
/// `σ(q) u q = c·I` and `c > 0` as small as square-factor stripping allows.
pub fn reduce_pure_axis(u: &Quaternion) -> Option<(Quaternion, Rational)> {
    if !u.is_pure() {
        return None;
    }
    let s = u.norm().sqrt()?;
    let axis = Quaternion::unit_i().scale(&s);
    let (q, c) = if *u == axis {
        (Quaternion::one(), s)
    } else if *u == -axis.clone() {
        (Quaternion::unit_j(), s)
    } else {
        let q = u.clone() + &axis;
        let c = q.norm() * &s;
        (q, c)
    };
    // Scale q by a rational r: c ↦ r²·c. Clear the denominator, then strip squares.
    let den = Rational::from_bigint(c.denom().clone());
    let mut int_c = (c.clone() * &den * &den).numer().clone();
    let mut r = den;
    if let Some(f) = largest_square_factor(&int_c) {
        let f2 = &f * &f;
        int_c /= f2;
        r = r / Rational::from_bigint(f);
    }
    let q = q.scale(&r);
    let c = Rational::from_bigint(int_c);
    debug_assert_eq!(q.conj() * u * &q, Quaternion::unit_i().scale(&c));
    Some((q, c))
}

// Largest f with f² | n, by trial division; None when n is out of range.
fn largest_square_factor(n: &BigInt) -> Option<BigInt> {
    let mut n = n.to_u64()?;
    if n > 1 << 40 {
        return None;
    }
    let mut f: u64 = 1;
    let mut p: u64 = 2;
    while p * p <= n {
        while n % (p * p) == 0 {
            n /= p * p;
            f *= p;
        }
        if n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    Some(BigInt::from(f))
}
