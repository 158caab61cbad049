use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use realforms_core::classify::{classify, G2Form, GroupDescriptor};
use realforms_core::cohomology::{
    coboundary_witness, cocycle_index, hilbert90_solve, quaternionic_fixed_sample, rep_cocycle, scalar_cocycle,
    sl_quaternionic_class, twist_by, twist_matrix, verify_cocycle, Cocycle, ConjAction, Family,
};
use realforms_core::exactnum::{CycloElement, GaussRational, Quaternion, Rational};
use realforms_core::forms::{
    equivalent, pfister3_class, pfister3_signature, signature_index, sorted_diagonalization, FormKind, FormSpec,
    Pfister3, PfisterClass,
};
use realforms_core::matrix::{
    cayley_sample, quaternionic_structure, root_signature_matrix, signature_matrix, AnyMatrix, MatrixJson, Pairing,
};
use realforms_core::quatlin::{canonicalize_quat_antihermitian, canonicalize_quat_hermitian, mu_embed};
use realforms_core::verify::{real_det_matrix, run_suites, Suite, VerifyConfig};
use realforms_core::{Matrix, Scalar};

use crate::args::*;
use crate::error::{CliError, ErrorKind};

type G = GaussRational;

/// A command's JSON payload and whether every re-check it carries passed.
pub struct Report {
    pub value: Value,
    pub ok: bool,
}

impl Report {
    fn new<T: Serialize>(payload: &T, ok: bool) -> Result<Self, CliError> {
        let value = serde_json::to_value(payload).map_err(|e| CliError {
            kind: ErrorKind::Computation,
            message: format!("serialization failed: {e}"),
        })?;
        Ok(Report { value, ok })
    }
}

pub fn execute(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Classify(a) => cmd_classify(a),
        Command::Cocycle(c) => cmd_cocycle(c),
        Command::Forms(f) => cmd_forms(f),
        Command::Sample(s) => cmd_sample(s),
        Command::Verify(v) => cmd_verify(v),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn need(v: Option<usize>, flag: &str, context: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::usage(format!("--{flag} is required for {context}")))
}

fn reject(present: bool, flag: &str, context: &str) -> Result<(), CliError> {
    if present {
        Err(CliError::usage(format!("--{flag} is not accepted for {context}")))
    } else {
        Ok(())
    }
}

// classify

pub fn descriptor_from_args(a: &ClassifyArgs) -> Result<GroupDescriptor, CliError> {
    let Some(family) = a.family else {
        let path = a
            .input_file
            .as_deref()
            .ok_or_else(|| CliError::usage("--family or --input-file is required"))?;
        return read_json(path);
    };
    let ctx = format!("family {}", family_name(family));
    let (uses_n, uses_p, uses_m, uses_form) = match family {
        GroupFamily::Sl | GroupFamily::Sp => (true, false, false, false),
        GroupFamily::Su | GroupFamily::So | GroupFamily::SuQuatHerm => (true, true, false, false),
        GroupFamily::SlQuat | GroupFamily::SuQuatAnti => (false, false, true, false),
        GroupFamily::G2 | GroupFamily::F4 | GroupFamily::E8 => (false, false, false, true),
    };
    reject(!uses_n && a.n.is_some(), "n", &ctx)?;
    reject(!uses_p && a.p.is_some(), "p", &ctx)?;
    reject(!uses_m && a.m.is_some(), "m", &ctx)?;
    reject(!uses_form && a.form.is_some(), "form", &ctx)?;
    let form = || {
        a.form
            .as_deref()
            .ok_or_else(|| CliError::usage(format!("--form is required for {ctx}")))
    };
    let tag = |s: &str| match s {
        "0" => Ok(0u8),
        "1" => Ok(1),
        "2" => Ok(2),
        _ => Err(CliError::usage(format!(
            "--form must be 0, 1 or 2 for {ctx}, got {s:?}"
        ))),
    };
    let g = match family {
        GroupFamily::Sl => GroupDescriptor::SLnK {
            n: need(a.n, "n", &ctx)?,
        },
        GroupFamily::SlQuat => GroupDescriptor::SLmH {
            m: need(a.m, "m", &ctx)?,
        },
        GroupFamily::Su => GroupDescriptor::SU {
            n: need(a.n, "n", &ctx)?,
            p: need(a.p, "p", &ctx)?,
        },
        GroupFamily::So => {
            let (n, p) = (need(a.n, "n", &ctx)?, need(a.p, "p", &ctx)?);
            if n % 2 == 1 {
                GroupDescriptor::SOodd { n, p }
            } else {
                GroupDescriptor::SOeven { n, p }
            }
        }
        GroupFamily::Sp => GroupDescriptor::Sp2nK {
            n: need(a.n, "n", &ctx)?,
        },
        GroupFamily::SuQuatHerm => GroupDescriptor::SUHherm {
            n: need(a.n, "n", &ctx)?,
            p: need(a.p, "p", &ctx)?,
        },
        GroupFamily::SuQuatAnti => GroupDescriptor::SUHanti {
            m: need(a.m, "m", &ctx)?,
        },
        GroupFamily::G2 => GroupDescriptor::G2 {
            form: match form()? {
                "compact" => G2Form::Compact,
                "split" => G2Form::Split,
                other => {
                    return Err(CliError::usage(format!(
                        "--form must be compact or split, got {other:?}"
                    )))
                }
            },
        },
        GroupFamily::F4 => GroupDescriptor::F4 { form: tag(form()?)? },
        GroupFamily::E8 => GroupDescriptor::E8 { form: tag(form()?)? },
    };
    Ok(g)
}

fn family_name(f: GroupFamily) -> &'static str {
    match f {
        GroupFamily::Sl => "sl",
        GroupFamily::SlQuat => "sl-quat",
        GroupFamily::Su => "su",
        GroupFamily::So => "so",
        GroupFamily::Sp => "sp",
        GroupFamily::SuQuatHerm => "su-quat-herm",
        GroupFamily::SuQuatAnti => "su-quat-anti",
        GroupFamily::G2 => "g2",
        GroupFamily::F4 => "f4",
        GroupFamily::E8 => "e8",
    }
}

fn cmd_classify(a: &ClassifyArgs) -> Result<Report, CliError> {
    let g = descriptor_from_args(a)?;
    g.validate()?;
    Report::new(&classify(&g)?, true)
}

// cocycle

#[derive(Serialize)]
struct CocycleOut {
    op: &'static str,
    cocycle: Cocycle,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sl_class: Option<i8>,
    verified: bool,
}

#[derive(Serialize)]
struct CheckOut {
    op: &'static str,
    action: ConjAction,
    is_cocycle: bool,
}

#[derive(Serialize)]
struct IndexOut {
    op: &'static str,
    family: &'static str,
    p: usize,
    index: usize,
}

#[derive(Serialize)]
struct WitnessOut {
    op: &'static str,
    m: MatrixJson,
    d: Vec<String>,
    index: usize,
    det_norm: String,
    det_normalized: bool,
    verified: bool,
}

#[derive(Serialize)]
struct Hilbert90Out {
    op: &'static str,
    seed: u64,
    #[serde(rename = "P")]
    p: MatrixJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    sl_class: Option<i8>,
    verified: bool,
}

fn core_family(f: CocycleFamily) -> Family {
    match f {
        CocycleFamily::Su => Family::Su,
        CocycleFamily::So => Family::So,
        CocycleFamily::Suh => Family::Suh,
    }
}

fn family_label(f: Family) -> &'static str {
    match f {
        Family::Su => "su",
        Family::So => "so",
        Family::Suh => "suh",
    }
}

fn read_cocycle(path: &Path) -> Result<Cocycle, CliError> {
    let x: Cocycle = read_json(path)?;
    x.action.validate()?;
    if x.b.rows() != x.action.size() || x.b.cols() != x.action.size() {
        return Err(CliError::input(format!(
            "B is {}x{} but the action acts on {n}x{n} matrices",
            x.b.rows(),
            x.b.cols(),
            n = x.action.size()
        )));
    }
    Ok(x)
}

/// The class of a quaternionic cocycle in `H¹(k, SL(n/2, ℍ))` when `det B = 1`.
fn sl_class_if_applicable(x: &Cocycle, seed: u64) -> Result<Option<i8>, CliError> {
    if !matches!(x.action, ConjAction::QuaternionTwist { .. }) || !x.b.det()?.is_one() {
        return Ok(None);
    }
    Ok(Some(sl_quaternionic_class(x, seed)?))
}

fn cmd_cocycle(c: &CocycleCmd) -> Result<Report, CliError> {
    match c {
        CocycleCmd::Rep { family, n, p, q } => {
            let family = core_family(*family);
            let x = rep_cocycle(family, *n, *p, *q)?;
            let index = cocycle_index(&x, family, *p)?;
            let verified = verify_cocycle(&x)? && index == *q;
            let out = CocycleOut {
                op: "rep",
                cocycle: x,
                index: Some(index),
                sl_class: None,
                verified,
            };
            Report::new(&out, verified)
        }
        CocycleCmd::Check { input_file } => {
            let x = read_cocycle(input_file)?;
            let is_cocycle = verify_cocycle(&x)?;
            let out = CheckOut {
                op: "check",
                action: x.action,
                is_cocycle,
            };
            Report::new(&out, is_cocycle)
        }
        CocycleCmd::Index { input_file, p } => {
            let x = read_cocycle(input_file)?;
            let (family, p) = match x.action {
                ConjAction::UnitaryTwist { p: ap, .. } => {
                    if p.is_some_and(|p| p != ap) {
                        return Err(CliError::usage(format!("--p disagrees with the action's p = {ap}")));
                    }
                    (Family::Su, ap)
                }
                ConjAction::Plain { .. } => (Family::So, need(*p, "p", "the plain action")?),
                ConjAction::QuaternionTwist { .. } => (Family::Suh, need(*p, "p", "the quaternionic action")?),
            };
            let index = cocycle_index(&x, family, p)?;
            let out = IndexOut {
                op: "index",
                family: family_label(family),
                p,
                index,
            };
            Report::new(&out, true)
        }
        CocycleCmd::Witness { input_file } => {
            let x = read_cocycle(input_file)?;
            let w = coboundary_witness(&x)?;
            let ConjAction::UnitaryTwist { n, p } = x.action else {
                unreachable!("the witness is only built for the unitary action")
            };
            let target = &Matrix::diag(w.d.iter().cloned().map(G::from).collect()) * &signature_matrix::<G>(n, p);
            let verified = twist_by(&x, &w.m)?.b == target && w.m.det()?.norm() == w.det_norm;
            let out = WitnessOut {
                op: "witness",
                m: w.m.to_json(),
                d: w.d.iter().map(Rational::to_string).collect(),
                index: w.index,
                det_norm: w.det_norm.to_string(),
                det_normalized: w.det_normalized,
                verified,
            };
            Report::new(&out, verified)
        }
        CocycleCmd::Hilbert90 { input_file, seed } => {
            let x = read_cocycle(input_file)?;
            let p = hilbert90_solve(&x, seed.seed)?;
            let verified = &p * &x.action.apply(&p)?.inverse()? == x.b;
            let sl_class = sl_class_if_applicable(&x, seed.seed)?;
            let out = Hilbert90Out {
                op: "hilbert90",
                seed: seed.seed,
                p: p.to_json(),
                sl_class,
                verified,
            };
            Report::new(&out, verified)
        }
        CocycleCmd::Scalar { n, zeta, seed } => {
            let z: CycloElement = zeta
                .parse::<CycloElement>()
                .or_else(|_| zeta.parse::<Rational>().map(CycloElement::from_rational))
                .map_err(|_| CliError::usage(format!("--zeta: cannot parse {zeta:?}")))?;
            let x = scalar_cocycle(*n, &z)?;
            let verified = verify_cocycle(&x)?;
            if !verified {
                return Err(CliError::input(format!(
                    "{zeta} Id is not a cocycle; zeta must be a root of unity"
                )));
            }
            let sl_class = sl_class_if_applicable(&x, seed.seed)?;
            let out = CocycleOut {
                op: "scalar",
                cocycle: x,
                index: None,
                sl_class,
                verified,
            };
            Report::new(&out, verified)
        }
    }
}

// forms

#[derive(Serialize)]
struct FormIndexOut {
    op: &'static str,
    kind: FormKind,
    rank: usize,
    index: Option<usize>,
}

#[derive(Serialize)]
struct EquivalentOut {
    op: &'static str,
    kind: FormKind,
    equivalent: bool,
}

#[derive(Serialize)]
struct CanonicalOut {
    op: &'static str,
    kind: FormKind,
    diagonal: Vec<String>,
    witness: MatrixJson,
    index: Option<usize>,
    verified: bool,
}

#[derive(Serialize)]
struct PfisterOut {
    op: &'static str,
    slots: Vec<String>,
    class: PfisterClass,
    signature: i64,
}

#[derive(Serialize)]
struct StructuredOut {
    op: &'static str,
    kind: &'static str,
    matrix: MatrixJson,
    verified: bool,
}

fn congruent_to_diagonal<T: Scalar>(gram: &Matrix<T>, witness: &Matrix<T>, diagonal: &[T]) -> bool {
    &(&witness.star() * gram) * witness == Matrix::diag(diagonal.to_vec())
}

fn canonical<T: Scalar>(
    kind: FormKind,
    gram: &Matrix<T>,
    diagonal: Vec<T>,
    witness: Matrix<T>,
    index: Option<usize>,
) -> CanonicalOut {
    CanonicalOut {
        op: "canonical",
        kind,
        verified: congruent_to_diagonal(gram, &witness, &diagonal),
        diagonal: diagonal.iter().map(Scalar::encode).collect(),
        witness: witness.to_json(),
        index,
    }
}

fn parse_rational(flag: &str, s: &str) -> Result<Rational, CliError> {
    s.parse()
        .map_err(|_| CliError::usage(format!("--{flag}: expected a rational like -3/4, got {s:?}")))
}

fn cmd_forms(f: &FormsCmd) -> Result<Report, CliError> {
    match f {
        FormsCmd::Index { input_file } => {
            let form: FormSpec = read_json(input_file)?;
            let index = match form.kind() {
                FormKind::QuatAntiHermitian => None,
                _ => Some(signature_index(&form)?),
            };
            let out = FormIndexOut {
                op: "index",
                kind: form.kind(),
                rank: form.size(),
                index,
            };
            Report::new(&out, true)
        }
        FormsCmd::Equivalent { input_file, other_file } => {
            let a: FormSpec = read_json(input_file)?;
            let b: FormSpec = read_json(other_file)?;
            let out = EquivalentOut {
                op: "equivalent",
                kind: a.kind(),
                equivalent: equivalent(&a, &b)?,
            };
            Report::new(&out, true)
        }
        FormsCmd::Canonical { input_file } => {
            let form: FormSpec = read_json(input_file)?;
            let out = match &form {
                FormSpec::Quadratic(g) => {
                    let (d, inertia) = sorted_diagonalization(g)?;
                    canonical(form.kind(), g, d.diagonal, d.witness, Some(inertia.positive))
                }
                FormSpec::Hermitian(g) => {
                    let (d, inertia) = sorted_diagonalization(g)?;
                    canonical(form.kind(), g, d.diagonal, d.witness, Some(inertia.positive))
                }
                FormSpec::QuatHermitian(g) => {
                    let c = canonicalize_quat_hermitian(&form)?;
                    canonical(form.kind(), g, c.diagonal, c.witness, Some(c.index))
                }
                FormSpec::QuatAntiHermitian(g) => {
                    let c = canonicalize_quat_antihermitian(&form)?;
                    canonical(form.kind(), g, c.diagonal, c.witness, None)
                }
            };
            let ok = out.verified;
            Report::new(&out, ok)
        }
        FormsCmd::Pfister { a, b, c } => {
            let pf = Pfister3::new(
                parse_rational("a", a)?,
                parse_rational("b", b)?,
                parse_rational("c", c)?,
            )?;
            let out = PfisterOut {
                op: "pfister",
                slots: pf.slots().iter().map(|r| r.to_string()).collect(),
                class: pfister3_class(&pf),
                signature: pfister3_signature(&pf),
            };
            Report::new(&out, true)
        }
        FormsCmd::Structured { kind, n, p, q } => {
            let n = *n;
            let ctx = "this structured matrix";
            let (name, matrix, verified) = match kind {
                StructuredName::Ip | StructuredName::Jp => {
                    reject(q.is_some(), "q", ctx)?;
                    let p = need(*p, "p", ctx)?;
                    check_range(n, p, 0)?;
                    let ip = signature_matrix::<G>(n, p);
                    if *kind == StructuredName::Ip {
                        ("ip", ip.clone(), (&ip * &ip).is_identity())
                    } else {
                        let jp = root_signature_matrix(n, p);
                        ("jp", jp.clone(), &jp * &jp == ip)
                    }
                }
                StructuredName::An => {
                    reject(p.is_some(), "p", ctx)?;
                    reject(q.is_some(), "q", ctx)?;
                    let a = quaternionic_structure::<G>(n)?;
                    let verified = (-&(&a * &a)).is_identity() && a.transpose() == -&a;
                    ("an", a, verified)
                }
                StructuredName::Dq => {
                    let (p, q) = (need(*p, "p", ctx)?, need(*q, "q", ctx)?);
                    let d = twist_matrix(n, p, q)?;
                    let (ip, iq) = (signature_matrix::<G>(n, p), signature_matrix::<G>(n, q));
                    let verified = &(&d.transpose() * &iq) * &d == ip && &(&d.star() * &ip) * &d == ip;
                    ("dq", d, verified)
                }
            };
            let out = StructuredOut {
                op: "structured",
                kind: name,
                matrix: matrix.to_json(),
                verified,
            };
            Report::new(&out, verified)
        }
    }
}

fn check_range(n: usize, p: usize, q: usize) -> Result<(), CliError> {
    if n == 0 || p > n || q > n {
        return Err(CliError::input(format!(
            "need n >= 1 and p, q <= n (n={n}, p={p}, q={q})"
        )));
    }
    Ok(())
}

// sample

#[derive(Serialize)]
struct CayleyOut {
    op: &'static str,
    seed: u64,
    form: FormSpec,
    matrix: AnyMatrix,
    verified: bool,
}

#[derive(Serialize)]
struct FixedOut {
    op: &'static str,
    seed: u64,
    matrix: MatrixJson,
    det: String,
    verified: bool,
}

#[derive(Serialize)]
struct CoboundaryOut {
    op: &'static str,
    seed: u64,
    #[serde(rename = "M")]
    m: MatrixJson,
    cocycle: Cocycle,
    verified: bool,
}

fn diagonal_form(kind: FormKindName, n: usize, p: Option<usize>) -> Result<FormSpec, CliError> {
    let ctx = "the diagonal form";
    if kind == FormKindName::QuatAntihermitian {
        reject(p.is_some(), "p", "anti-hermitian forms")?;
        check_range(n, 0, 0)?;
        return Ok(FormSpec::quat_antihermitian(Matrix::diag(vec![
            Quaternion::unit_i();
            n
        ]))?);
    }
    let p = need(p, "p", ctx)?;
    check_range(n, p, 0)?;
    Ok(match kind {
        FormKindName::Quadratic => FormSpec::quadratic(signature_matrix(n, p))?,
        FormKindName::Hermitian => FormSpec::hermitian(signature_matrix(n, p))?,
        _ => FormSpec::quat_hermitian(signature_matrix(n, p))?,
    })
}

fn cayley_verified(form: &FormSpec, m: &AnyMatrix) -> Result<bool, CliError> {
    Ok(match (form, m) {
        (FormSpec::Quadratic(s), AnyMatrix::Rational(m)) => Pairing::Bilinear.preserves(m, s) && m.det()?.is_one(),
        (FormSpec::Hermitian(s), AnyMatrix::Gauss(m)) => Pairing::Sesquilinear.preserves(m, s) && m.det()?.is_one(),
        (FormSpec::QuatHermitian(s) | FormSpec::QuatAntiHermitian(s), AnyMatrix::Quaternion(m)) => {
            Pairing::Sesquilinear.preserves(m, s) && mu_embed(m).det()?.is_one()
        }
        _ => false,
    })
}

fn cmd_sample(s: &SampleCmd) -> Result<Report, CliError> {
    match s {
        SampleCmd::Cayley {
            input_file,
            kind,
            n,
            p,
            seed,
        } => {
            let form = match (input_file, kind, n) {
                (Some(path), _, _) => read_json(path)?,
                (None, Some(kind), Some(n)) => diagonal_form(*kind, *n, *p)?,
                _ => return Err(CliError::usage("--input-file or --kind with --n is required")),
            };
            let m = cayley_sample(&form, seed.seed)?;
            let verified = cayley_verified(&form, &m)?;
            let out = CayleyOut {
                op: "cayley",
                seed: seed.seed,
                form,
                matrix: m,
                verified,
            };
            Report::new(&out, verified)
        }
        SampleCmd::Fixed { n, seed } => {
            let m = quaternionic_fixed_sample(*n, seed.seed)?;
            let det = m.det()?;
            let fixed = ConjAction::QuaternionTwist { n: *n }.apply(&m)? == m;
            let verified = fixed && det.is_real() && det.re.is_positive();
            let out = FixedOut {
                op: "fixed",
                seed: seed.seed,
                matrix: m.to_json(),
                det: det.to_string(),
                verified,
            };
            Report::new(&out, verified)
        }
        SampleCmd::Coboundary { action, n, p, seed } => {
            let action = match action {
                ActionName::Plain => {
                    reject(p.is_some(), "p", "the plain action")?;
                    ConjAction::Plain { n: *n }
                }
                ActionName::Quaternion => {
                    reject(p.is_some(), "p", "the quaternionic action")?;
                    ConjAction::QuaternionTwist { n: *n }
                }
                ActionName::Unitary => ConjAction::UnitaryTwist {
                    n: *n,
                    p: need(*p, "p", "the unitary action")?,
                },
            };
            action.validate()?;
            let m = real_det_matrix(*n, seed.seed)?;
            let x = twist_by(&Cocycle::trivial(action), &m)?;
            let verified = verify_cocycle(&x)?;
            let out = CoboundaryOut {
                op: "coboundary",
                seed: seed.seed,
                m: m.to_json(),
                cocycle: x,
                verified,
            };
            Report::new(&out, verified)
        }
    }
}

// verify

fn cmd_verify(v: &VerifyArgs) -> Result<Report, CliError> {
    let suites = if v.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        v.suites
            .iter()
            .map(|s| s.parse::<Suite>().map_err(|e| CliError::usage(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?
    };
    let cfg = VerifyConfig {
        seed: v.seed.seed,
        max_n: v.max_n,
        samples: v.samples,
    };
    cfg.validate().map_err(|e| CliError::usage(e.to_string()))?;
    let report = run_suites(&suites, &cfg)?;
    let ok = report.all_passed;
    Report::new(&report, ok)
}
