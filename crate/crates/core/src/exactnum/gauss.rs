use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use super::{forward_binops, sum_of_two_squares, Commutative, Rational, Scalar, ScalarKind};
use crate::rng::Lcg64;
use crate::{Error, Result};

/// An element `re + im·i` of `k̄ = k(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRational::new(Rational::from_int(re), Rational::from_int(im))
    }

    pub fn i() -> Self {
        GaussRational::from_ints(0, 1)
    }

    /// `z · conj(z)`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(GaussRational::one(), |acc, _| acc * self)
    }
}

/// The nontrivial element `c` of `Gal(k̄|k)`.
pub fn gauss_conj(z: &GaussRational) -> GaussRational {
    GaussRational::new(z.re.clone(), -&z.im)
}

impl<'b> Add<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn add(self, o: &'b GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'b> Sub<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn sub(self, o: &'b GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'b> Mul<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &'b GaussRational) -> GaussRational {
        GaussRational::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

/// Panics on division by zero.
impl<'b> Div<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &'b GaussRational) -> GaussRational {
        self * &o.inv().expect("division by zero")
    }
}

forward_binops!(GaussRational; Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re, -self.im)
    }
}

impl From<Rational> for GaussRational {
    fn from(r: Rational) -> Self {
        GaussRational::new(r, Rational::zero())
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.re, self.im)
    }
}

impl FromStr for GaussRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('|').collect();
        match parts.as_slice() {
            [re, im] => Ok(GaussRational::new(re.parse()?, im.parse()?)),
            _ => Err(Error::Parse(format!("invalid gaussian rational `{s}`"))),
        }
    }
}

impl Scalar for GaussRational {
    const KIND: ScalarKind = ScalarKind::Gauss;

    fn zero() -> Self {
        GaussRational::from_ints(0, 0)
    }

    fn one() -> Self {
        GaussRational::from_ints(1, 0)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(GaussRational::new(&self.re * &n, -(&self.im * &n)))
    }

    fn conj(&self) -> Self {
        gauss_conj(self)
    }

    fn from_rational(r: Rational) -> Self {
        r.into()
    }

    fn to_rational(&self) -> Option<Rational> {
        self.is_real().then(|| self.re.clone())
    }

    fn parse_canonical(s: &str) -> Result<Self> {
        s.parse()
    }

    fn sample(rng: &mut Lcg64, height: u32) -> Self {
        GaussRational::new(Rational::sample(rng, height), Rational::sample(rng, height))
    }

    fn skew_unit() -> Option<Self> {
        Some(GaussRational::i())
    }

    fn norm_root(r: &Rational) -> Option<Self> {
        sum_of_two_squares(r).map(|(a, b)| GaussRational::new(b, a))
    }
}

impl Commutative for GaussRational {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_examples() {
        assert_eq!(
            gauss_conj(&GaussRational::from_ints(3, 2)),
            GaussRational::from_ints(3, -2)
        );
        let five = GaussRational::from_ints(5, 0);
        assert_eq!(gauss_conj(&five), five);
        let z = GaussRational::from_ints(1, 1);
        let lhs = z.clone() * GaussRational::from_ints(1, -1);
        let rhs = gauss_conj(&z) * &z;
        assert_eq!(lhs, GaussRational::from_ints(2, 0));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_and_norm() {
        let z = GaussRational::from_ints(3, 4);
        assert_eq!(z.norm(), Rational::from_int(25));
        assert!((z.clone() * z.inv().unwrap()).is_one());
        assert!(GaussRational::zero().inv().is_none());
    }

    #[test]
    fn encoding() {
        let z = GaussRational::new(Rational::new(1, 2), Rational::from_int(-3));
        assert_eq!(z.to_string(), "1/2|-3");
        assert_eq!("1/2|-3".parse::<GaussRational>().unwrap(), z);
        assert!("1|2|3".parse::<GaussRational>().is_err());
    }
}
