//! 3-Pfister forms `<1,a> ⊗ <1,b> ⊗ <1,c>`, which classify octonion algebras
//! and hence the real forms of `G2`.

use serde::{Deserialize, Serialize};

use super::{signature_index, FormSpec};
use crate::exactnum::{Rational, Scalar};
use crate::matrix::Matrix;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pfister3 {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl Pfister3 {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::Parse("3-Pfister slots must be nonzero".into()));
        }
        Ok(Pfister3 { a, b, c })
    }

    pub fn slots(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PfisterClass {
    Definite,
    Split,
}

/// `diag(1, a, b, ab, c, ac, bc, abc)`.
pub fn pfister3_expand(p: &Pfister3) -> FormSpec {
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let ab = a * b;
    let diag = vec![
        Rational::one(),
        a.clone(),
        b.clone(),
        ab.clone(),
        c.clone(),
        a * c,
        b * c,
        ab * c,
    ];
    FormSpec::Quadratic(Matrix::diag(diag))
}

/// Signature `#positive - #negative` of the expansion; always 8 or 0.
pub fn pfister3_signature(p: &Pfister3) -> i64 {
    let index = signature_index(&pfister3_expand(p)).expect("3-Pfister forms are non-degenerate") as i64;
    2 * index - 8
}

pub fn pfister3_class(p: &Pfister3) -> PfisterClass {
    match pfister3_signature(p) {
        8 => PfisterClass::Definite,
        0 => PfisterClass::Split,
        other => unreachable!("3-Pfister form with signature {other}"),
    }
}
