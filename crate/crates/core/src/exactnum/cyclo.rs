use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;

use super::{forward_binops, Commutative, Rational, Scalar, ScalarKind};
use crate::rng::Lcg64;
use crate::{Error, Result};

// Dense polynomials over the rationals, ascending degree, no trailing zeros.
type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Poly {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

/// Euclidean division; `b` must be nonzero.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    let lead_inv = b.last().expect("division by zero polynomial").inv().unwrap();
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let coef = rem.last().unwrap() * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] = &rem[shift + j] - &(&coef * bj);
        }
        quot[shift] = coef;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Returns `s` with `s·a ≡ g (mod m)` where `g` is a nonzero constant, or
/// `None` when `gcd(a, m)` is not constant.
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Poly> {
    let (mut r0, mut r1) = (trim(m.to_vec()), trim(a.to_vec()));
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let g_inv = r0[0].inv()?;
    Some(s0.iter().map(|c| c * &g_inv).collect())
}

/// Euler's totient.
pub fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

/// The `m`-th cyclotomic polynomial, by dividing `x^m - 1` by `Φ_d` for every
/// proper divisor `d` of `m`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<Rational> {
    assert!(m >= 1, "cyclotomic order must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, Poly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut p = vec![Rational::zero(); m as usize + 1];
    p[0] = Rational::from_int(-1);
    p[m as usize] = Rational::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let (q, r) = poly_divrem(&p, &cyclotomic_polynomial(d));
        debug_assert!(r.is_empty());
        p = q;
    }
    cache.lock().unwrap().insert(m, p.clone());
    p
}

/// An element of `ℚ(ζ_m)`, stored as a residue modulo `Φ_m` in the power
/// basis `1, ζ, …, ζ^{φ(m)-1}`.
///
/// Operands of different orders are lifted to the compositum
/// `ℚ(ζ_lcm)`, so equality is equality of field elements, not of encodings.
#[derive(Clone, Debug)]
pub struct CycloElement {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycloElement {
    /// Reduces an arbitrary polynomial in `ζ_order`.
    pub fn from_poly(order: u32, poly: &[Rational]) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let phi = euler_phi(order);
        let (_, mut rem) = poly_divrem(poly, &cyclotomic_polynomial(order));
        rem.resize(phi, Rational::zero());
        CycloElement { order, coeffs: rem }
    }

    pub fn from_rational_in(order: u32, r: Rational) -> Self {
        CycloElement::from_poly(order, &[r])
    }

    /// The generator `ζ_order`.
    pub fn zeta(order: u32) -> Self {
        CycloElement::from_poly(order, &[Rational::zero(), Rational::one()])
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Same element, written in `ℚ(ζ_target)`; `self.order` must divide `target`.
    pub fn lift(&self, target: u32) -> Self {
        assert!(
            target.is_multiple_of(self.order),
            "order {} does not divide {}",
            self.order,
            target
        );
        self.substitute_power(target, (target / self.order) as usize)
    }

    // p(x) ↦ p(x^e), reduced in order `order`.
    fn substitute_power(&self, order: u32, e: usize) -> Self {
        let len = if self.coeffs.is_empty() {
            1
        } else {
            (self.coeffs.len() - 1) * e + 1
        };
        let mut poly = vec![Rational::zero(); len];
        for (j, c) in self.coeffs.iter().enumerate() {
            poly[j * e] = &poly[j * e] + c;
        }
        CycloElement::from_poly(order, &poly)
    }

    fn lifted_pair(&self, other: &Self) -> (Self, Self) {
        let l = self.order.lcm(&other.order);
        (self.lift(l), other.lift(l))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(CycloElement::from_rational_in(self.order, Rational::one()), |acc, _| {
            acc * self
        })
    }

    /// Smallest `d ≥ 1` with `self^d = 1`, searched up to `bound`.
    pub fn multiplicative_order(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for d in 1..=bound {
            if acc.is_one() {
                return Some(d);
            }
            acc = acc * self;
        }
        None
    }
}

/// A primitive `n`-th root of unity in `ℚ(ζ_m)` with `m = lcm(n, 4)`, so that
/// `i` lies in the same field.
pub fn primitive_unity_root(n: u32) -> CycloElement {
    assert!(n >= 1, "root of unity order must be positive");
    let m = n.lcm(&4);
    let mut poly = vec![Rational::zero(); (m / n) as usize + 1];
    poly[(m / n) as usize] = Rational::one();
    CycloElement::from_poly(m, &poly)
}

impl PartialEq for CycloElement {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.lifted_pair(other);
        a.coeffs == b.coeffs
    }
}

impl<'b> Add<&'b CycloElement> for &CycloElement {
    type Output = CycloElement;
    fn add(self, o: &'b CycloElement) -> CycloElement {
        let (a, b) = self.lifted_pair(o);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CycloElement { order: a.order, coeffs }
    }
}

impl<'b> Sub<&'b CycloElement> for &CycloElement {
    type Output = CycloElement;
    fn sub(self, o: &'b CycloElement) -> CycloElement {
        let (a, b) = self.lifted_pair(o);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        CycloElement { order: a.order, coeffs }
    }
}

impl<'b> Mul<&'b CycloElement> for &CycloElement {
    type Output = CycloElement;
    fn mul(self, o: &'b CycloElement) -> CycloElement {
        let (a, b) = self.lifted_pair(o);
        CycloElement::from_poly(a.order, &poly_mul(&a.coeffs, &b.coeffs))
    }
}

forward_binops!(CycloElement; Add::add, Sub::sub, Mul::mul);

impl Neg for CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        CycloElement {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.order)?;
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for CycloElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("invalid cyclotomic element `{s}`: {why}"));
        let (m, rest) = s.split_once(':').ok_or_else(|| bad("missing `:`"))?;
        let order: u32 = m.parse().map_err(|_| bad("order"))?;
        if order == 0 || m.starts_with('+') {
            return Err(bad("order"));
        }
        let coeffs = rest
            .split(',')
            .map(str::parse::<Rational>)
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() != euler_phi(order) {
            return Err(bad("coefficient count must equal φ(m)"));
        }
        Ok(CycloElement { order, coeffs })
    }
}

impl Scalar for CycloElement {
    const KIND: ScalarKind = ScalarKind::Cyclo;

    fn zero() -> Self {
        CycloElement::from_rational_in(1, Rational::zero())
    }

    fn one() -> Self {
        CycloElement::from_rational_in(1, Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let s = poly_inverse_mod(&self.coeffs, &cyclotomic_polynomial(self.order))?;
        Some(CycloElement::from_poly(self.order, &s))
    }

    /// `ζ ↦ ζ^{m-1}`, complex conjugation on `ℚ(ζ_m)`.
    fn conj(&self) -> Self {
        self.substitute_power(self.order, self.order as usize - 1)
    }

    fn from_rational(r: Rational) -> Self {
        CycloElement::from_rational_in(1, r)
    }

    fn to_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Rational::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    fn parse_canonical(s: &str) -> Result<Self> {
        s.parse()
    }

    fn sample(rng: &mut Lcg64, height: u32) -> Self {
        let poly = [Rational::sample(rng, height), Rational::sample(rng, height)];
        CycloElement::from_poly(4, &poly)
    }

    fn skew_unit() -> Option<Self> {
        Some(CycloElement::zeta(4))
    }

    fn norm_root(_r: &Rational) -> Option<Self> {
        None
    }
}

impl Commutative for CycloElement {}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        for m in 1..=30 {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, euler_phi(m), "m={m}");
        }
    }

    #[test]
    fn unity_root_examples() {
        let z2 = primitive_unity_root(2);
        assert_eq!(z2.order(), 4);
        assert_eq!(z2, CycloElement::from_int(-1));

        let z4 = primitive_unity_root(4);
        assert_eq!(z4, CycloElement::zeta(4));
        assert!((z4.clone() * z4.conj()).is_one());

        let z3 = primitive_unity_root(3);
        assert_eq!(z3.order(), 12);
        assert!(z3.pow(3).is_one());
        assert!(!z3.is_one());
    }

    #[test]
    fn inverse_in_order_twelve() {
        let x = CycloElement::from_poly(12, &ints(&[2, -1, 3, 1]));
        let y = x.inv().unwrap();
        assert!((x * y).is_one());
    }

    #[test]
    fn mixed_order_arithmetic_lifts() {
        let i = CycloElement::zeta(4);
        let w = primitive_unity_root(3);
        let p = i.clone() * &w;
        assert_eq!(p.order(), 12);
        assert_eq!(p.multiplicative_order(12), Some(12));
        assert_eq!(i.lift(12), i);
    }

    #[test]
    fn encoding_round_trip() {
        let x = CycloElement::from_poly(12, &ints(&[2, -1, 3, 1]));
        let s = x.to_string();
        assert_eq!(s, "12:2,-1,3,1");
        let y: CycloElement = s.parse().unwrap();
        assert_eq!(y.to_string(), s);
        assert!("12:1,2".parse::<CycloElement>().is_err());
        assert!("0:1".parse::<CycloElement>().is_err());
    }
}
