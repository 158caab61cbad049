use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{forward_binops, rational_sqrt, Commutative, Scalar, ScalarKind};
use crate::rng::Lcg64;
use crate::{Error, Result};

/// An element of `k`, kept in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_int(v: i64) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }

    /// Panics when `den` is zero.
    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Sign in `{-1, 0, 1}`.
    pub fn signum(&self) -> i8 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn pow(&self, e: i32) -> Rational {
        Rational(num_traits::Pow::pow(&self.0, e))
    }

    /// Exact square root when `self` is the square of a rational.
    pub fn sqrt(&self) -> Option<Rational> {
        rational_sqrt(self)
    }
}

/// Sign of `r` in the unique ordering of the rationals.
pub fn rational_sign(r: &Rational) -> i8 {
    r.signum()
}

impl<'b> Add<&'b Rational> for &Rational {
    type Output = Rational;
    fn add(self, o: &'b Rational) -> Rational {
        Rational(&self.0 + &o.0)
    }
}

impl<'b> Sub<&'b Rational> for &Rational {
    type Output = Rational;
    fn sub(self, o: &'b Rational) -> Rational {
        Rational(&self.0 - &o.0)
    }
}

impl<'b> Mul<&'b Rational> for &Rational {
    type Output = Rational;
    fn mul(self, o: &'b Rational) -> Rational {
        Rational(&self.0 * &o.0)
    }
}

/// Panics on division by zero.
impl<'b> Div<&'b Rational> for &Rational {
    type Output = Rational;
    fn div(self, o: &'b Rational) -> Rational {
        assert!(!o.0.is_zero(), "division by zero");
        Rational(&self.0 / &o.0)
    }
}

forward_binops!(Rational; Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        let parse_int = |t: &str| -> Result<BigInt> {
            if t.is_empty() || t.starts_with('+') || t.contains(char::is_whitespace) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rational::from_bigint(parse_int(s)?)),
            Some((n, d)) => {
                let n = parse_int(n)?;
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(Rational::from_big(n, d))
            }
        }
    }
}

impl Scalar for Rational {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn parse_canonical(s: &str) -> Result<Self> {
        s.parse()
    }

    fn sample(rng: &mut Lcg64, height: u32) -> Self {
        let h = height.max(1) as i64;
        Rational::new(rng.range_i64(-h, h), rng.range_i64(1, h))
    }

    fn skew_unit() -> Option<Self> {
        None
    }

    fn norm_root(r: &Rational) -> Option<Self> {
        r.sqrt()
    }
}

impl Commutative for Rational {}
