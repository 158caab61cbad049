//! Exact scalars for the tower `k ⊂ k̄` and the quaternion algebra over `k`.
//!
//! `k` is modelled by [`Rational`], `k̄ = k(i)` by [`GaussRational`], the Hamilton
//! quaternions `(-1,-1 / k)` by [`Quaternion`] and roots of unity by
//! [`CycloElement`]. Only [`Rational`] carries an ordering.
//!
//! Every scalar has a canonical text encoding used for interchange:
//! `p/q` (or `p`), `re|im`, `a|b|c|d` and `m:c0,c1,...`.

mod cyclo;
mod gauss;
mod quaternion;
mod rational;

pub use cyclo::{cyclotomic_polynomial, euler_phi, primitive_unity_root, CycloElement};
pub use gauss::{gauss_conj, GaussRational};
pub use quaternion::{quat_sigma, Quaternion};
pub use rational::{rational_sign, Rational};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::rng::Lcg64;
use crate::Result;

/// Tag naming the scalar type of a matrix in the JSON encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    Rational,
    Gauss,
    Quaternion,
    Cyclo,
}

impl ScalarKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Gauss => "gauss",
            ScalarKind::Quaternion => "quaternion",
            ScalarKind::Cyclo => "cyclo",
        }
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A (possibly non-commutative) exact division ring with an involution.
///
/// `conj` is the Galois conjugation `c` on [`GaussRational`] and
/// [`CycloElement`], the standard involution `σ` on [`Quaternion`], and the
/// identity on [`Rational`]. Matrix code uses it uniformly: the conjugate
/// transpose over `Rational` is the plain transpose.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    const KIND: ScalarKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Two-sided inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;
    fn from_rational(r: Rational) -> Self;
    /// `Some` iff the element lies in the prime field.
    fn to_rational(&self) -> Option<Rational>;
    fn parse_canonical(s: &str) -> Result<Self>;
    /// Random element with numerators and denominators bounded by `height`.
    fn sample(rng: &mut Lcg64, height: u32) -> Self;
    /// A nonzero element with `conj(u) = -u`, if one exists.
    fn skew_unit() -> Option<Self>;
    /// Some `x` with `conj(x) * x = r`, found by bounded search (`r > 0`).
    fn norm_root(r: &Rational) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn encode(&self) -> String {
        self.to_string()
    }

    fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_int(v))
    }
}

/// Marker for scalars whose multiplication commutes; determinants need it.
pub trait Commutative: Scalar {}

/// Upper bound on integers handed to the sum-of-squares searches.
const SQUARES_SEARCH_LIMIT: u64 = 1 << 40;
/// Iteration budget for the four-square search.
const SQUARES_SEARCH_STEPS: u64 = 1 << 20;

fn exact_isqrt(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

fn two_squares(n: u64) -> Option<(u64, u64)> {
    let mut a = 0u64;
    while a * a <= n {
        if let Some(b) = exact_isqrt(n - a * a) {
            return Some((a, b));
        }
        a += 1;
    }
    None
}

fn four_squares(n: u64) -> Option<[u64; 4]> {
    let mut steps = 0u64;
    let mut a = n.sqrt();
    loop {
        let r1 = n - a * a;
        let mut b = r1.sqrt();
        loop {
            let r2 = r1 - b * b;
            let mut c = r2.sqrt();
            loop {
                steps += 1;
                if steps > SQUARES_SEARCH_STEPS {
                    return None;
                }
                if let Some(d) = exact_isqrt(r2 - c * c) {
                    return Some([a, b, c, d]);
                }
                if c == 0 {
                    break;
                }
                c -= 1;
            }
            if b == 0 {
                break;
            }
            b -= 1;
        }
        if a == 0 {
            return None;
        }
        a -= 1;
    }
}

/// Writes a positive rational `r` as `N / den²` with integer `N = num·den`,
/// returning `(N, den)` when `N` fits the search limit.
fn scaled_integer(r: &Rational) -> Option<(u64, BigInt)> {
    if !r.is_positive() {
        return None;
    }
    let n = r.numer() * r.denom();
    let n = n.abs().to_u64()?;
    (n <= SQUARES_SEARCH_LIMIT).then(|| (n, r.denom().clone()))
}

pub(crate) fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_zero() {
        return Some(Rational::zero());
    }
    if r.numer().is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::from_big(n, d))
}

pub(crate) fn sum_of_two_squares(r: &Rational) -> Option<(Rational, Rational)> {
    let (n, den) = scaled_integer(r)?;
    let (a, b) = two_squares(n)?;
    let den = Rational::from_bigint(den);
    Some((
        Rational::from_int(a as i64) / den.clone(),
        Rational::from_int(b as i64) / den,
    ))
}

pub(crate) fn sum_of_four_squares(r: &Rational) -> Option<[Rational; 4]> {
    let (n, den) = scaled_integer(r)?;
    let sq = four_squares(n)?;
    let den = Rational::from_bigint(den);
    Some(sq.map(|v| Rational::from_int(v as i64) / den.clone()))
}

macro_rules! forward_binops {
    ($t:ty; $($tr:ident::$m:ident),+) => {$(
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t {
                std::ops::$tr::$m(&self, &o)
            }
        }
        impl<'a> std::ops::$tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, o: &'a $t) -> $t {
                std::ops::$tr::$m(&self, o)
            }
        }
        impl<'a> std::ops::$tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t {
                std::ops::$tr::$m(self, &o)
            }
        }
    )+};
}
pub(crate) use forward_binops;
