//! Congruence diagonalization `W* G W = diag(d)` of (anti-)hermitian matrices
//! over any scalar of the tower.

use crate::exactnum::{Rational, Scalar};
use crate::matrix::Matrix;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// `G* = G` (symmetric over `ℚ`)
    Hermitian,
    /// `G* = -G`
    AntiHermitian,
}

impl Parity {
    pub fn holds<T: Scalar>(self, gram: &Matrix<T>) -> bool {
        let s = gram.star();
        match self {
            Parity::Hermitian => s == *gram,
            Parity::AntiHermitian => s == -gram,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Parity::Hermitian => "hermitian",
            Parity::AntiHermitian => "anti-hermitian",
        }
    }
}

/// `witness* · gram · witness = diag(diagonal)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagonalization<T> {
    pub diagonal: Vec<T>,
    pub witness: Matrix<T>,
}

/// Positive and negative pivot counts of a hermitian diagonalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
}

// G ← E* G E and W ← W E with E = Id + λ·e_{src,dst}.
fn congruence_step<T: Scalar>(g: &mut Matrix<T>, w: &mut Matrix<T>, dst: usize, src: usize, lambda: &T) {
    g.add_col_multiple(dst, src, lambda);
    g.add_row_multiple(dst, src, &lambda.conj());
    w.add_col_multiple(dst, src, lambda);
}

fn swap_step<T: Scalar>(g: &mut Matrix<T>, w: &mut Matrix<T>, a: usize, b: usize) {
    g.swap_rows(a, b);
    g.swap_cols(a, b);
    w.swap_cols(a, b);
}

/// Exact congruence diagonalization.
///
/// Pivots on the first nonzero diagonal entry. When the remaining diagonal is
/// zero, the first nonzero off-diagonal pair `(j, l)` is folded in with
/// `col_j += col_l·λ`, `λ = g_{jl}⁻¹·u`, which leaves `u + u*` (hermitian, `u = 1`)
/// or `u - u*` (anti-hermitian, `u` a skew unit) on the diagonal.
pub fn congruence_diagonalize<T: Scalar>(gram: &Matrix<T>, parity: Parity) -> Result<Diagonalization<T>> {
    let n = gram.require_square("congruence_diagonalize")?;
    if !parity.holds(gram) {
        return Err(Error::Symmetry {
            expected: parity.name(),
        });
    }
    let unit = match parity {
        Parity::Hermitian => T::one(),
        Parity::AntiHermitian => T::skew_unit()
            .ok_or_else(|| Error::NotApplicable(format!("anti-hermitian diagonalization over {}", T::KIND)))?,
    };
    let mut g = gram.clone();
    let mut w = Matrix::<T>::identity(n);
    for k in 0..n {
        if let Some(j) = (k..n).find(|&j| !g.get(j, j).is_zero()) {
            swap_step(&mut g, &mut w, k, j);
        } else {
            let pair = (k..n)
                .flat_map(|j| (j + 1..n).map(move |l| (j, l)))
                .find(|&(j, l)| !g.get(j, l).is_zero());
            let Some((j, l)) = pair else {
                return Err(Error::Degenerate { rank: k, size: n });
            };
            let lambda = g.get(j, l).inv().unwrap() * &unit;
            congruence_step(&mut g, &mut w, j, l, &lambda);
            debug_assert!(!g.get(j, j).is_zero());
            swap_step(&mut g, &mut w, k, j);
        }
        let d_inv = g.get(k, k).inv().unwrap();
        for i in k + 1..n {
            if g.get(k, i).is_zero() {
                continue;
            }
            let lambda = -(d_inv.clone() * g.get(k, i));
            congruence_step(&mut g, &mut w, i, k, &lambda);
        }
    }
    debug_assert!(g.is_diagonal());
    Ok(Diagonalization {
        diagonal: g.diagonal(),
        witness: w,
    })
}

/// Real values of hermitian pivots (central, hence rational).
pub fn real_pivots<T: Scalar>(diag: &[T]) -> Vec<Rational> {
    diag.iter()
        .map(|d| d.to_rational().expect("hermitian pivots are central"))
        .collect()
}

pub fn inertia_of_diagonal(diag: &[Rational]) -> Inertia {
    Inertia {
        positive: diag.iter().filter(|d| d.is_positive()).count(),
        negative: diag.iter().filter(|d| d.is_negative()).count(),
    }
}

pub fn inertia<T: Scalar>(gram: &Matrix<T>) -> Result<Inertia> {
    let dg = congruence_diagonalize(gram, Parity::Hermitian)?;
    Ok(inertia_of_diagonal(&real_pivots(&dg.diagonal)))
}

/// Hermitian diagonalization reordered so positive pivots come first, with
/// each pivot scaled to `±1` whenever `|d|⁻¹` is a norm `x*x` found by
/// [`Scalar::norm_root`].
pub fn sorted_diagonalization<T: Scalar>(gram: &Matrix<T>) -> Result<(Diagonalization<T>, Inertia)> {
    let dg = congruence_diagonalize(gram, Parity::Hermitian)?;
    let pivots = real_pivots(&dg.diagonal);
    let n = pivots.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| !pivots[i].is_positive());
    let mut witness = Matrix::<T>::zeros(n, n);
    let mut diagonal = Vec::with_capacity(n);
    for (new, &old) in order.iter().enumerate() {
        let d = &pivots[old];
        let scale = match d.abs().is_one() {
            true => None,
            false => d.abs().inv().and_then(|r| T::norm_root(&r)),
        };
        let s = scale.clone().unwrap_or_else(T::one);
        for r in 0..n {
            witness.set(r, new, dg.witness.get(r, old).clone() * &s);
        }
        let entry = match scale {
            Some(_) => Rational::from_int(d.signum() as i64),
            None => d.clone(),
        };
        diagonal.push(T::from_rational(entry));
    }
    let inertia = inertia_of_diagonal(&pivots);
    Ok((Diagonalization { diagonal, witness }, inertia))
}
