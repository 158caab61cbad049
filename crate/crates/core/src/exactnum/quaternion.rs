use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{forward_binops, sum_of_four_squares, Rational, Scalar, ScalarKind};
use crate::rng::Lcg64;
use crate::{Error, Result};

/// `a + bI + cJ + dK` in the Hamilton quaternions over `k`.
///
/// `I² = J² = K² = -1`, `IJ = K`. The standard involution `σ` negates the
/// pure part and is exposed through [`Scalar::conj`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quaternion {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quaternion::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn unit_i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn unit_j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn unit_k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    /// Reduced norm `a² + b² + c² + d²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    /// Nonzero with vanishing real part.
    pub fn is_pure(&self) -> bool {
        self.a.is_zero() && !self.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Quaternion::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }
}

/// The involution `a+bI+cJ+dK ↦ a-bI-cJ-dK`.
pub fn quat_sigma(x: &Quaternion) -> Quaternion {
    Quaternion::new(x.a.clone(), -&x.b, -&x.c, -&x.d)
}

impl<'b> Add<&'b Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &'b Quaternion) -> Quaternion {
        Quaternion::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }
}

impl<'b> Sub<&'b Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &'b Quaternion) -> Quaternion {
        Quaternion::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }
}

impl<'b> Mul<&'b Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &'b Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

forward_binops!(Quaternion; Add::add, Sub::sub, Mul::mul);

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl From<Rational> for Quaternion {
    fn from(r: Rational) -> Self {
        Quaternion::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}|{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('|').collect();
        match parts.as_slice() {
            [a, b, c, d] => Ok(Quaternion::new(a.parse()?, b.parse()?, c.parse()?, d.parse()?)),
            _ => Err(Error::Parse(format!("invalid quaternion `{s}`"))),
        }
    }
}

impl Scalar for Quaternion {
    const KIND: ScalarKind = ScalarKind::Quaternion;

    fn zero() -> Self {
        Quaternion::from_ints(0, 0, 0, 0)
    }

    fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(quat_sigma(self).scale(&n))
    }

    fn conj(&self) -> Self {
        quat_sigma(self)
    }

    fn from_rational(r: Rational) -> Self {
        r.into()
    }

    fn to_rational(&self) -> Option<Rational> {
        (self.b.is_zero() && self.c.is_zero() && self.d.is_zero()).then(|| self.a.clone())
    }

    fn parse_canonical(s: &str) -> Result<Self> {
        s.parse()
    }

    fn sample(rng: &mut Lcg64, height: u32) -> Self {
        Quaternion::new(
            Rational::sample(rng, height),
            Rational::sample(rng, height),
            Rational::sample(rng, height),
            Rational::sample(rng, height),
        )
    }

    fn skew_unit() -> Option<Self> {
        Some(Quaternion::unit_i())
    }

    fn norm_root(r: &Rational) -> Option<Self> {
        sum_of_four_squares(r).map(|[a, b, c, d]| Quaternion::new(a, b, c, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_relations() {
        let (i, j, k) = (Quaternion::unit_i(), Quaternion::unit_j(), Quaternion::unit_k());
        let m1 = -Quaternion::one();
        assert_eq!(i.clone() * &i, m1);
        assert_eq!(j.clone() * &j, m1);
        assert_eq!(k.clone() * &k, m1);
        assert_eq!(i.clone() * &j, k);
        assert_eq!(j.clone() * &i, -k.clone());
        assert_eq!(j.clone() * &k, i);
        assert_eq!(k.clone() * &i, j);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(
            quat_sigma(&Quaternion::from_ints(1, 2, 3, 4)),
            Quaternion::from_ints(1, -2, -3, -4)
        );
        let seven = Quaternion::from_ints(7, 0, 0, 0);
        assert_eq!(quat_sigma(&seven), seven);
        let (i, j) = (Quaternion::unit_i(), Quaternion::unit_j());
        let lhs = quat_sigma(&(i.clone() * &j));
        let rhs = quat_sigma(&j) * quat_sigma(&i);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, -Quaternion::unit_k());
    }

    #[test]
    fn norm_and_inverse() {
        let x = Quaternion::from_ints(1, 2, 3, 4);
        assert_eq!(quat_sigma(&x) * &x, Quaternion::from_ints(30, 0, 0, 0));
        assert!((x.clone() * x.inv().unwrap()).is_one());
        assert!((x.inv().unwrap() * &x).is_one());
        assert_eq!(x.to_string(), "1|2|3|4");
        assert_eq!("1|2|3|4".parse::<Quaternion>().unwrap(), x);
    }
}
