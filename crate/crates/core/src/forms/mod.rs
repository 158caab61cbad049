//! Non-degenerate quadratic, hermitian and quaternionic forms, classified by
//! rank and index, and 3-Pfister forms.
//!
//! Over a real closed field rank and index are complete invariants for
//! quadratic and hermitian forms; quaternionic anti-hermitian forms have rank
//! as their only invariant.

mod congruence;
mod pfister;

pub use congruence::{
    congruence_diagonalize, inertia, inertia_of_diagonal, real_pivots, sorted_diagonalization, Diagonalization,
    Inertia, Parity,
};
pub use pfister::{pfister3_class, pfister3_expand, pfister3_signature, Pfister3, PfisterClass};

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::{GaussRational, Quaternion, Rational, Scalar};
use crate::matrix::{Matrix, MatrixJson};
use crate::quatlin;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormKind {
    Quadratic,
    Hermitian,
    QuatHermitian,
    #[serde(rename = "quat-antihermitian")]
    QuatAntiHermitian,
}

impl FormKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FormKind::Quadratic => "quadratic",
            FormKind::Hermitian => "hermitian",
            FormKind::QuatHermitian => "quat-hermitian",
            FormKind::QuatAntiHermitian => "quat-antihermitian",
        }
    }
}

/// A form given by its Gram matrix; the symmetry condition of the kind holds.
#[derive(Debug, Clone, PartialEq)]
pub enum FormSpec {
    /// Symmetric over `k`.
    Quadratic(Matrix<Rational>),
    /// `M̄^t = M` over `k̄`.
    Hermitian(Matrix<GaussRational>),
    /// `σ(M)^t = M` over the quaternions.
    QuatHermitian(Matrix<Quaternion>),
    /// `σ(M)^t = -M` over the quaternions.
    QuatAntiHermitian(Matrix<Quaternion>),
}

fn checked<T: Scalar>(gram: &Matrix<T>, parity: Parity, expected: &'static str) -> Result<()> {
    gram.require_square("form")?;
    if parity.holds(gram) {
        Ok(())
    } else {
        Err(Error::Symmetry { expected })
    }
}

impl FormSpec {
    pub fn quadratic(gram: Matrix<Rational>) -> Result<Self> {
        checked(&gram, Parity::Hermitian, "symmetric")?;
        Ok(FormSpec::Quadratic(gram))
    }

    pub fn hermitian(gram: Matrix<GaussRational>) -> Result<Self> {
        checked(&gram, Parity::Hermitian, "hermitian")?;
        Ok(FormSpec::Hermitian(gram))
    }

    pub fn quat_hermitian(gram: Matrix<Quaternion>) -> Result<Self> {
        checked(&gram, Parity::Hermitian, "quaternionic hermitian")?;
        Ok(FormSpec::QuatHermitian(gram))
    }

    pub fn quat_antihermitian(gram: Matrix<Quaternion>) -> Result<Self> {
        checked(&gram, Parity::AntiHermitian, "quaternionic anti-hermitian")?;
        Ok(FormSpec::QuatAntiHermitian(gram))
    }

    pub fn kind(&self) -> FormKind {
        match self {
            FormSpec::Quadratic(_) => FormKind::Quadratic,
            FormSpec::Hermitian(_) => FormKind::Hermitian,
            FormSpec::QuatHermitian(_) => FormKind::QuatHermitian,
            FormSpec::QuatAntiHermitian(_) => FormKind::QuatAntiHermitian,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            FormSpec::Quadratic(g) => g.rows(),
            FormSpec::Hermitian(g) => g.rows(),
            FormSpec::QuatHermitian(g) | FormSpec::QuatAntiHermitian(g) => g.rows(),
        }
    }

    pub fn gram_json(&self) -> MatrixJson {
        match self {
            FormSpec::Quadratic(g) => g.to_json(),
            FormSpec::Hermitian(g) => g.to_json(),
            FormSpec::QuatHermitian(g) | FormSpec::QuatAntiHermitian(g) => g.to_json(),
        }
    }

    pub fn from_parts(kind: FormKind, gram: &MatrixJson) -> Result<Self> {
        match kind {
            FormKind::Quadratic => FormSpec::quadratic(Matrix::from_json(gram)?),
            FormKind::Hermitian => FormSpec::hermitian(Matrix::from_json(gram)?),
            FormKind::QuatHermitian => FormSpec::quat_hermitian(Matrix::from_json(gram)?),
            FormKind::QuatAntiHermitian => FormSpec::quat_antihermitian(Matrix::from_json(gram)?),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormJson {
    kind: FormKind,
    gram: MatrixJson,
}

impl Serialize for FormSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FormJson {
            kind: self.kind(),
            gram: self.gram_json(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FormSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = FormJson::deserialize(d)?;
        FormSpec::from_parts(json.kind, &json.gram).map_err(de::Error::custom)
    }
}

/// Number of positive pivots of an exact congruence diagonalization.
///
/// Quaternionic hermitian forms delegate to
/// [`quatlin::canonicalize_quat_hermitian`]; anti-hermitian quaternionic forms
/// carry no index.
pub fn signature_index(f: &FormSpec) -> Result<usize> {
    match f {
        FormSpec::Quadratic(g) => Ok(inertia(g)?.positive),
        FormSpec::Hermitian(g) => Ok(inertia(g)?.positive),
        FormSpec::QuatHermitian(_) => Ok(quatlin::canonicalize_quat_hermitian(f)?.index),
        FormSpec::QuatAntiHermitian(_) => Err(Error::NotApplicable(
            "anti-hermitian quaternionic forms have no index".into(),
        )),
    }
}

/// Equivalence over the real closed field: same rank and same index.
pub fn equivalent(f: &FormSpec, g: &FormSpec) -> Result<bool> {
    if f.kind() != g.kind() {
        return Err(Error::KindMismatch {
            left: f.kind().as_str(),
            right: g.kind().as_str(),
        });
    }
    if f.size() != g.size() {
        return Ok(false);
    }
    if let FormSpec::QuatAntiHermitian(_) = f {
        quatlin::canonicalize_quat_antihermitian(f)?;
        quatlin::canonicalize_quat_antihermitian(g)?;
        return Ok(true);
    }
    Ok(signature_index(f)? == signature_index(g)?)
}
