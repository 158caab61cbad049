use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::Matrix;
use crate::exactnum::{CycloElement, GaussRational, Quaternion, Rational, Scalar, ScalarKind};
use crate::{Error, Result};

/// Wire form of a matrix: canonical scalar strings in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub scalar: ScalarKind,
    pub entries: Vec<String>,
}

impl<T: Scalar> Matrix<T> {
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            scalar: T::KIND,
            entries: self.data.iter().map(Scalar::encode).collect(),
        }
    }

    /// Accepts the matching scalar tag, or `rational` entries promoted into `T`.
    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        let data = if json.scalar == T::KIND {
            json.entries
                .iter()
                .map(|s| T::parse_canonical(s))
                .collect::<Result<Vec<_>>>()?
        } else if json.scalar == ScalarKind::Rational {
            json.entries
                .iter()
                .map(|s| s.parse::<Rational>().map(T::from_rational))
                .collect::<Result<Vec<_>>>()?
        } else {
            return Err(Error::Parse(format!(
                "expected {} matrix, found {}",
                T::KIND,
                json.scalar
            )));
        };
        Matrix::new(json.rows, json.cols, data)
    }
}

impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = MatrixJson::deserialize(d)?;
        Matrix::from_json(&json).map_err(de::Error::custom)
    }
}

/// A matrix whose scalar type is only known at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Rational(Matrix<Rational>),
    Gauss(Matrix<GaussRational>),
    Quaternion(Matrix<Quaternion>),
    Cyclo(Matrix<CycloElement>),
}

impl AnyMatrix {
    pub fn kind(&self) -> ScalarKind {
        match self {
            AnyMatrix::Rational(_) => ScalarKind::Rational,
            AnyMatrix::Gauss(_) => ScalarKind::Gauss,
            AnyMatrix::Quaternion(_) => ScalarKind::Quaternion,
            AnyMatrix::Cyclo(_) => ScalarKind::Cyclo,
        }
    }

    pub fn to_json(&self) -> MatrixJson {
        match self {
            AnyMatrix::Rational(m) => m.to_json(),
            AnyMatrix::Gauss(m) => m.to_json(),
            AnyMatrix::Quaternion(m) => m.to_json(),
            AnyMatrix::Cyclo(m) => m.to_json(),
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        Ok(match json.scalar {
            ScalarKind::Rational => AnyMatrix::Rational(Matrix::from_json(json)?),
            ScalarKind::Gauss => AnyMatrix::Gauss(Matrix::from_json(json)?),
            ScalarKind::Quaternion => AnyMatrix::Quaternion(Matrix::from_json(json)?),
            ScalarKind::Cyclo => AnyMatrix::Cyclo(Matrix::from_json(json)?),
        })
    }
}

impl Serialize for AnyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for AnyMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = MatrixJson::deserialize(d)?;
        AnyMatrix::from_json(&json).map_err(de::Error::custom)
    }
}
