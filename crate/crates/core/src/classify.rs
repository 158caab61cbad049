//! Picard-Vessiot class counts and per-class differential Galois groups.
//!
//! Classes are symbolic: a label naming a cohomology class and the real form
//! that the class carries as its Galois group.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum G2Form {
    Compact,
    Split,
}

impl G2Form {
    pub fn other(self) -> Self {
        match self {
            G2Form::Compact => G2Form::Split,
            G2Form::Split => G2Form::Compact,
        }
    }
}

/// A real form of a simple group.
///
/// `F4` and `E8` forms are opaque tags `0..=2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "variant", deny_unknown_fields)]
pub enum GroupDescriptor {
    /// `SL(n, k)`
    SLnK {
        n: usize,
    },
    /// `SL(m, ℍ)`
    SLmH {
        m: usize,
    },
    /// `SU(n, h_p)`
    SU {
        n: usize,
        p: usize,
    },
    /// `SO(n, Q_p)`, `n` odd
    SOodd {
        n: usize,
        p: usize,
    },
    /// `Sp(2n, k)`
    Sp2nK {
        n: usize,
    },
    /// `SU(n, ℍ, h_p)`, `h_p` hermitian
    SUHherm {
        n: usize,
        p: usize,
    },
    /// `SO(n, Q_p)`, `n` even
    SOeven {
        n: usize,
        p: usize,
    },
    /// `SU(m, ℍ, h)`, `h` anti-hermitian
    SUHanti {
        m: usize,
    },
    G2 {
        form: G2Form,
    },
    F4 {
        form: u8,
    },
    E8 {
        form: u8,
    },
}

fn invalid(field: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidDescriptor {
        field,
        reason: reason.into(),
    }
}

fn check_index(n: usize, p: usize) -> Result<()> {
    if p > n {
        return Err(invalid("p", format!("index {p} exceeds n = {n}")));
    }
    Ok(())
}

impl GroupDescriptor {
    pub fn validate(&self) -> Result<()> {
        use GroupDescriptor::*;
        match *self {
            SLnK { n } if n < 2 => Err(invalid("n", "SLnK needs n >= 2")),
            SLmH { m } | SUHanti { m } if m < 1 => Err(invalid("m", "needs m >= 1")),
            Sp2nK { n } if n < 1 => Err(invalid("n", "Sp2nK needs n >= 1")),
            SU { n, p } => {
                if n < 2 {
                    return Err(invalid("n", "SU needs n >= 2"));
                }
                check_index(n, p)
            }
            SOodd { n, p } => {
                if n < 3 || n % 2 == 0 {
                    return Err(invalid("n", "SOodd needs odd n >= 3"));
                }
                check_index(n, p)
            }
            SOeven { n, p } => {
                if n < 2 || n % 2 == 1 {
                    return Err(invalid("n", "SOeven needs even n >= 2"));
                }
                check_index(n, p)
            }
            SUHherm { n, p } => {
                if n < 1 {
                    return Err(invalid("n", "SUHherm needs n >= 1"));
                }
                check_index(n, p)
            }
            F4 { form } | E8 { form } if form > 2 => Err(invalid("form", "form tag must be 0, 1 or 2")),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupDescriptor::*;
        match self {
            SLnK { n } => write!(f, "SLnK{{n={n}}}"),
            SLmH { m } => write!(f, "SLmH{{m={m}}}"),
            SU { n, p } => write!(f, "SU{{n={n},p={p}}}"),
            SOodd { n, p } => write!(f, "SOodd{{n={n},p={p}}}"),
            Sp2nK { n } => write!(f, "Sp2nK{{n={n}}}"),
            SUHherm { n, p } => write!(f, "SUHherm{{n={n},p={p}}}"),
            SOeven { n, p } => write!(f, "SOeven{{n={n},p={p}}}"),
            SUHanti { m } => write!(f, "SUHanti{{m={m}}}"),
            G2 { form } => write!(
                f,
                "G2{{form={}}}",
                match form {
                    G2Form::Compact => "compact",
                    G2Form::Split => "split",
                }
            ),
            F4 { form } => write!(f, "F4{{form={form}}}"),
            E8 { form } => write!(f, "E8{{form={form}}}"),
        }
    }
}

/// Tags for classes that are not indexed by a form parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassTag {
    Trivial,
    Nontrivial,
    /// `det P > 0` in `H¹(k, SL(m, ℍ))`
    Positive,
    /// `det P < 0` in `H¹(k, SL(m, ℍ))`
    Negative,
    #[serde(rename = "nontrivial-1")]
    Nontrivial1,
    #[serde(rename = "nontrivial-2")]
    Nontrivial2,
}

impl ClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Trivial => "trivial",
            ClassTag::Nontrivial => "nontrivial",
            ClassTag::Positive => "positive",
            ClassTag::Negative => "negative",
            ClassTag::Nontrivial1 => "nontrivial-1",
            ClassTag::Nontrivial2 => "nontrivial-2",
        }
    }
}

/// The index `q` of the representative `B_q`, or a tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassLabel {
    Index(usize),
    Tag(ClassTag),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Index(q) => write!(f, "{q}"),
            ClassLabel::Tag(t) => f.write_str(t.as_str()),
        }
    }
}

impl std::str::FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(q) = s.parse::<usize>() {
            return Ok(ClassLabel::Index(q));
        }
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::Parse(format!("unknown class label {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PVClass {
    pub label: ClassLabel,
    pub group: GroupDescriptor,
    /// The class of the trivial cocycle, i.e. the extension we started from.
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationResult {
    pub input: GroupDescriptor,
    pub count: usize,
    pub classes: Vec<PVClass>,
}

/// Folds the index `p` to `min(p, n - p)` where `h_p` and `-h_p` give the same group.
pub fn canonical_group(g: &GroupDescriptor) -> GroupDescriptor {
    use GroupDescriptor::*;
    match *g {
        SU { n, p } if p <= n => SU { n, p: p.min(n - p) },
        SOodd { n, p } if p <= n => SOodd { n, p: p.min(n - p) },
        SOeven { n, p } if p <= n => SOeven { n, p: p.min(n - p) },
        other => other,
    }
}

fn indexed(n: usize, p: usize, step: usize, group: impl Fn(usize) -> GroupDescriptor) -> Vec<PVClass> {
    (p % step..=n)
        .step_by(step)
        .map(|q| PVClass {
            label: ClassLabel::Index(q),
            group: group(q),
            trivial: q == p,
        })
        .collect()
}

fn tagged(entries: &[(ClassTag, GroupDescriptor)]) -> Vec<PVClass> {
    entries
        .iter()
        .map(|&(tag, group)| PVClass {
            label: ClassLabel::Tag(tag),
            group,
            trivial: matches!(tag, ClassTag::Trivial | ClassTag::Positive),
        })
        .collect()
}

/// All Picard-Vessiot classes for an extension with Galois group `g`.
pub fn classify(g: &GroupDescriptor) -> Result<ClassificationResult> {
    use GroupDescriptor::*;
    g.validate()?;
    let canon = canonical_group(g);
    let classes = match *g {
        SLnK { .. } | Sp2nK { .. } | SUHanti { .. } => tagged(&[(ClassTag::Trivial, *g)]),
        SLmH { .. } => tagged(&[(ClassTag::Positive, *g), (ClassTag::Negative, *g)]),
        SU { n, p } => indexed(n, p, 2, |_| canon),
        SOodd { n, p } => indexed(n, p, 2, |q| SOodd { n, p: q.min(n - q) }),
        SOeven { n, p } => indexed(n, p, 2, |q| SOeven { n, p: q.min(n - q) }),
        SUHherm { n, p } => indexed(n, p, 1, |q| SUHherm { n, p: q }),
        G2 { form } => tagged(&[
            (ClassTag::Trivial, *g),
            (ClassTag::Nontrivial, G2 { form: form.other() }),
        ]),
        F4 { form } => tagged(&[
            (ClassTag::Trivial, *g),
            (ClassTag::Nontrivial1, F4 { form: (form + 1) % 3 }),
            (ClassTag::Nontrivial2, F4 { form: (form + 2) % 3 }),
        ]),
        E8 { form } => tagged(&[
            (ClassTag::Trivial, *g),
            (ClassTag::Nontrivial1, E8 { form: (form + 1) % 3 }),
            (ClassTag::Nontrivial2, E8 { form: (form + 2) % 3 }),
        ]),
    };
    Ok(ClassificationResult {
        input: *g,
        count: classes.len(),
        classes,
    })
}

/// Galois group of the class labelled `label`.
pub fn group_of_class(g: &GroupDescriptor, label: &ClassLabel) -> Result<GroupDescriptor> {
    classify(g)?
        .classes
        .into_iter()
        .find(|c| c.label == *label)
        .map(|c| c.group)
        .ok_or_else(|| Error::InvalidLabel {
            label: label.to_string(),
            group: g.to_string(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupDescriptor::*;

    fn labels(r: &ClassificationResult) -> Vec<ClassLabel> {
        r.classes.iter().map(|c| c.label).collect()
    }

    fn groups(r: &ClassificationResult) -> Vec<GroupDescriptor> {
        r.classes.iter().map(|c| c.group).collect()
    }

    #[test]
    fn classify_examples() {
        let r = classify(&SU { n: 5, p: 1 }).unwrap();
        assert_eq!(r.count, 3);
        assert_eq!(labels(&r), [1, 3, 5].map(ClassLabel::Index));
        assert!(groups(&r).iter().all(|g| *g == SU { n: 5, p: 1 }));

        let r = classify(&SOeven { n: 4, p: 0 }).unwrap();
        assert_eq!(r.count, 3);
        assert_eq!(
            groups(&r),
            vec![SOeven { n: 4, p: 0 }, SOeven { n: 4, p: 2 }, SOeven { n: 4, p: 0 }]
        );

        let r = classify(&Sp2nK { n: 3 }).unwrap();
        assert_eq!(r.count, 1);
        assert!(r.classes[0].trivial);
    }

    #[test]
    fn group_of_class_examples() {
        assert_eq!(
            group_of_class(&SOodd { n: 5, p: 1 }, &ClassLabel::Index(3)).unwrap(),
            SOodd { n: 5, p: 2 }
        );
        assert_eq!(
            group_of_class(&SU { n: 4, p: 2 }, &ClassLabel::Index(0)).unwrap(),
            SU { n: 4, p: 2 }
        );
        assert_eq!(
            group_of_class(&G2 { form: G2Form::Compact }, &ClassLabel::Tag(ClassTag::Nontrivial)).unwrap(),
            G2 { form: G2Form::Split }
        );
        assert!(matches!(
            group_of_class(&SU { n: 4, p: 2 }, &ClassLabel::Index(1)),
            Err(Error::InvalidLabel { .. })
        ));
    }

    #[test]
    fn canonical_group_examples() {
        assert_eq!(canonical_group(&SOeven { n: 4, p: 4 }), SOeven { n: 4, p: 0 });
        assert_eq!(canonical_group(&SU { n: 5, p: 4 }), SU { n: 5, p: 1 });
        assert_eq!(canonical_group(&Sp2nK { n: 2 }), Sp2nK { n: 2 });
    }

    #[test]
    fn exactly_one_trivial_class() {
        for g in [SU { n: 6, p: 3 }, SOeven { n: 6, p: 6 }, SLmH { m: 2 }, E8 { form: 1 }] {
            let r = classify(&g).unwrap();
            let trivial: Vec<_> = r.classes.iter().filter(|c| c.trivial).collect();
            assert_eq!(trivial.len(), 1);
            assert_eq!(trivial[0].group, canonical_group(&g));
        }
    }

    #[test]
    fn validation() {
        assert!(classify(&SLnK { n: 1 }).is_err());
        assert!(classify(&SOodd { n: 4, p: 0 }).is_err());
        assert!(classify(&SOeven { n: 5, p: 0 }).is_err());
        assert!(classify(&SU { n: 3, p: 4 }).is_err());
        assert!(classify(&F4 { form: 3 }).is_err());
        let err = classify(&SU { n: 3, p: 4 }).unwrap_err();
        assert!(matches!(err, Error::InvalidDescriptor { field: "p", .. }));
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(classify(&G2 { form: G2Form::Split }).unwrap()).unwrap();
        assert_eq!(v["input"], serde_json::json!({"variant": "G2", "form": "split"}));
        assert_eq!(v["classes"][1]["label"], "nontrivial");
        assert_eq!(v["classes"][1]["group"]["form"], "compact");
        let v = serde_json::to_value(SU { n: 5, p: 1 }).unwrap();
        assert_eq!(v, serde_json::json!({"variant": "SU", "n": 5, "p": 1}));
        let back: GroupDescriptor = serde_json::from_value(v).unwrap();
        assert_eq!(back, SU { n: 5, p: 1 });
        assert_eq!(
            "nontrivial-2".parse::<ClassLabel>().unwrap(),
            ClassLabel::Tag(ClassTag::Nontrivial2)
        );
        assert_eq!("4".parse::<ClassLabel>().unwrap(), ClassLabel::Index(4));
    }
}
