//! Randomized exact property suites.
//!
//! Every suite is deterministic for a given [`VerifyConfig`]; reports list
//! suites in name order and cases in generation order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, G2Form, GroupDescriptor};
use crate::cohomology::{
    cocycle_index, hilbert90_solve, quaternionic_fixed_sample, rep_cocycle, scalar_cocycle, sl_quaternionic_class,
    symplectic_gram, twist_by, twist_matrix, verify_cocycle, Cocycle, ConjAction, Family,
};
use crate::exactnum::{primitive_unity_root, GaussRational, Quaternion, Rational, Scalar};
use crate::forms::{pfister3_class, pfister3_signature, signature_index, FormSpec, Pfister3, PfisterClass};
use crate::matrix::{
    cayley_sample, cayley_sample_gram, quaternionic_structure, root_signature_matrix, signature_matrix, AnyMatrix,
    Matrix, Pairing, DEFAULT_HEIGHT,
};
use crate::quatlin::{
    canonicalize_quat_hermitian, embedded_form_matrix, in_quaternionic_image, mu_embed, sigma_transpose_compat,
};
use crate::rng::Lcg64;
use crate::{Error, Result};

/// Largest accepted `max_n`.
pub const MAX_N_BOUND: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Cayley,
    Cocycles,
    Counts,
    DetPositivity,
    Embedding,
    Forms,
    Hilbert90,
    Pfister,
    Transport,
    TwistIdentities,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Cayley,
        Suite::Cocycles,
        Suite::Counts,
        Suite::DetPositivity,
        Suite::Embedding,
        Suite::Forms,
        Suite::Hilbert90,
        Suite::Pfister,
        Suite::Transport,
        Suite::TwistIdentities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cayley => "cayley",
            Suite::Cocycles => "cocycles",
            Suite::Counts => "counts",
            Suite::DetPositivity => "det-positivity",
            Suite::Embedding => "embedding",
            Suite::Forms => "forms",
            Suite::Hilbert90 => "hilbert90",
            Suite::Pfister => "pfister",
            Suite::Transport => "transport",
            Suite::TwistIdentities => "twist-identities",
        }
    }

    pub fn run(self, cfg: &VerifyConfig) -> SuiteReport {
        let mut t = Tally::new(self);
        match self {
            Suite::Cayley => cayley(cfg, &mut t),
            Suite::Cocycles => cocycles(cfg, &mut t),
            Suite::Counts => counts(cfg, &mut t),
            Suite::DetPositivity => det_positivity(cfg, &mut t),
            Suite::Embedding => embedding(cfg, &mut t),
            Suite::Forms => forms(cfg, &mut t),
            Suite::Hilbert90 => hilbert90(cfg, &mut t),
            Suite::Pfister => pfister(&mut t),
            Suite::Transport => transport(cfg, &mut t),
            Suite::TwistIdentities => twist_identities(cfg, &mut t),
        }
        t.finish()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub max_n: usize,
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            max_n: 8,
            samples: 100,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n < 1 || self.max_n > MAX_N_BOUND {
            return Err(Error::dim("verify", format!("1 <= max-n <= {MAX_N_BOUND}"), self.max_n));
        }
        if self.samples < 1 {
            return Err(Error::dim("verify", "samples >= 1", self.samples));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub suites: Vec<SuiteReport>,
    pub all_passed: bool,
}

pub fn run_suites(suites: &[Suite], cfg: &VerifyConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let mut selected = suites.to_vec();
    selected.sort();
    selected.dedup();
    let suites: Vec<SuiteReport> = selected.into_iter().map(|s| s.run(cfg)).collect();
    let all_passed = suites.iter().all(|s| s.failed == 0);
    Ok(VerifyReport {
        config: *cfg,
        suites,
        all_passed,
    })
}

struct Tally {
    report: SuiteReport,
}

impl Tally {
    fn new(suite: Suite) -> Self {
        Tally {
            report: SuiteReport {
                suite,
                cases: 0,
                passed: 0,
                failed: 0,
                counterexample: None,
            },
        }
    }

    fn case(&mut self, label: impl FnOnce() -> String, outcome: Result<bool>) {
        self.report.cases += 1;
        match outcome {
            Ok(true) => self.report.passed += 1,
            Ok(false) => self.fail(label()),
            Err(e) => self.fail(format!("{}: {e}", label())),
        }
    }

    fn fail(&mut self, msg: String) {
        self.report.failed += 1;
        self.report.counterexample.get_or_insert(msg);
    }

    fn finish(self) -> SuiteReport {
        self.report
    }
}

type G = GaussRational;

fn case_seed(cfg: &VerifyConfig, k: usize) -> u64 {
    cfg.seed.wrapping_mul(1_000_003).wrapping_add(k as u64)
}

fn gsig(n: usize, p: usize) -> Matrix<G> {
    signature_matrix(n, p)
}

fn special_membership(form: &FormSpec, m: &AnyMatrix) -> Result<bool> {
    Ok(match (form, m) {
        (FormSpec::Quadratic(s), AnyMatrix::Rational(m)) => Pairing::Bilinear.preserves(m, s) && m.det()?.is_one(),
        (FormSpec::Hermitian(s), AnyMatrix::Gauss(m)) => Pairing::Sesquilinear.preserves(m, s) && m.det()?.is_one(),
        (FormSpec::QuatHermitian(s) | FormSpec::QuatAntiHermitian(s), AnyMatrix::Quaternion(m)) => {
            Pairing::Sesquilinear.preserves(m, s) && mu_embed(m).det()?.is_one()
        }
        _ => false,
    })
}

fn cayley(cfg: &VerifyConfig, t: &mut Tally) {
    let top = cfg.max_n.min(4);
    for k in 0..cfg.samples {
        let seed = case_seed(cfg, k);
        let n = 1 + k % top;
        let p = k % (n + 1);
        let form = match k % 4 {
            0 => FormSpec::quadratic(signature_matrix(n, p)),
            1 => FormSpec::hermitian(signature_matrix(n, p)),
            2 => FormSpec::quat_hermitian(signature_matrix(n, p)),
            _ => FormSpec::quat_antihermitian(Matrix::identity(n).scale(&Quaternion::unit_i())),
        };
        let outcome = form.and_then(|f| {
            let m = cayley_sample(&f, seed)?;
            let again = cayley_sample(&f, seed)?;
            Ok(m == again && special_membership(&f, &m)?)
        });
        t.case(|| format!("case {k}: n={n}, p={p}, seed={seed}"), outcome);
    }
}

fn cocycles(cfg: &VerifyConfig, t: &mut Tally) {
    for n in 1..=cfg.max_n {
        for p in 0..=n {
            for q in 0..=n {
                let mut families = vec![Family::Su, Family::So];
                if n <= 4 {
                    families.push(Family::Suh);
                }
                for family in families {
                    let Ok(x) = rep_cocycle(family, n, p, q) else { continue };
                    let outcome = verify_cocycle(&x).and_then(|ok| Ok(ok && cocycle_index(&x, family, p)? == q));
                    t.case(|| format!("{family:?} n={n} p={p} q={q}"), outcome);
                }
            }
        }
    }
}

/// Closed-form class counts.
pub fn closed_form_count(g: &GroupDescriptor) -> usize {
    use GroupDescriptor::*;
    match *g {
        SLnK { .. } | Sp2nK { .. } | SUHanti { .. } => 1,
        SLmH { .. } | G2 { .. } => 2,
        F4 { .. } | E8 { .. } => 3,
        SU { n, p } => {
            if n % 2 == 1 || p % 2 == 0 {
                n / 2 + 1
            } else {
                n / 2
            }
        }
        SOodd { n, .. } => n.div_ceil(2),
        SUHherm { n, .. } => n + 1,
        SOeven { n, p } => {
            if p % 2 == 0 {
                n / 2 + 1
            } else {
                n / 2
            }
        }
    }
}

/// Every valid descriptor with size parameter at most `max_n`.
pub fn admissible_descriptors(max_n: usize) -> Vec<GroupDescriptor> {
    use GroupDescriptor::*;
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend([SLnK { n }, SLmH { m: n }, Sp2nK { n }, SUHanti { m: n }]);
        for p in 0..=n {
            out.extend([SU { n, p }, SOodd { n, p }, SOeven { n, p }, SUHherm { n, p }]);
        }
    }
    out.extend([G2Form::Compact, G2Form::Split].map(|form| G2 { form }));
    for form in 0..3 {
        out.extend([F4 { form }, E8 { form }]);
    }
    out.retain(|g| g.validate().is_ok());
    out
}

fn counts(cfg: &VerifyConfig, t: &mut Tally) {
    for g in admissible_descriptors(cfg.max_n) {
        let outcome = classify(&g).map(|r| {
            let enumerated = match g {
                GroupDescriptor::SU { n, p } | GroupDescriptor::SOodd { n, p } | GroupDescriptor::SOeven { n, p } => {
                    (0..=n).filter(|q| (q + p) % 2 == 0).count()
                }
                GroupDescriptor::SUHherm { n, .. } => n + 1,
                _ => closed_form_count(&g),
            };
            let folded = classify(&crate::classify::canonical_group(&g)).map(|c| c.count);
            r.count == r.classes.len() && r.count == closed_form_count(&g) && r.count == enumerated && folded == Ok(r.count)
        });
        t.case(|| format!("{g}"), outcome);
    }
}

fn det_positivity(cfg: &VerifyConfig, t: &mut Tally) {
    for k in 0..cfg.samples {
        let n = 2 * (1 + k % 3);
        let seed = case_seed(cfg, k);
        let outcome = quaternionic_fixed_sample(n, seed).and_then(|m| {
            let det = m.det()?;
            Ok(det.to_rational().is_some_and(|d| d.is_positive()))
        });
        t.case(|| format!("n={n}, seed={seed}"), outcome);
    }
}

fn embedding(cfg: &VerifyConfig, t: &mut Tally) {
    for k in 0..cfg.samples {
        let n = 1 + k % 3;
        let seed = case_seed(cfg, k);
        let mut rng = Lcg64::new(seed);
        let a: Matrix<Quaternion> = Matrix::random(n, n, &mut rng, DEFAULT_HEIGHT);
        let b: Matrix<Quaternion> = Matrix::random(n, n, &mut rng, DEFAULT_HEIGHT);
        let outcome = (|| -> Result<bool> {
            let (ma, mb) = (mu_embed(&a), mu_embed(&b));
            Ok(mu_embed(&(&a * &b)) == &ma * &mb
                && mu_embed(&(&a + &b)) == &ma + &mb
                && (&a * &b).star() == &b.star() * &a.star()
                && sigma_transpose_compat(&a)
                && in_quaternionic_image(&ma)?
                && in_quaternionic_image(&(&ma * &mb))?)
        })();
        t.case(|| format!("n={n}, seed={seed}"), outcome);
    }
    let witness = Matrix::diag(vec![G::i(), G::i()]);
    t.case(
        || "diag(i, i) must lie outside the image".into(),
        in_quaternionic_image(&witness).map(|b| !b),
    );
}

fn forms(cfg: &VerifyConfig, t: &mut Tally) {
    let top = cfg.max_n.min(5);
    for k in 0..cfg.samples {
        let n = 1 + k % top;
        let seed = case_seed(cfg, k);
        let mut rng = Lcg64::new(seed);
        let diag: Vec<Rational> = (0..n)
            .map(|_| loop {
                let r = Rational::sample(&mut rng, DEFAULT_HEIGHT);
                if !r.is_zero() {
                    break r;
                }
            })
            .collect();
        let expected = diag.iter().filter(|d| d.is_positive()).count();
        let u: Matrix<Rational> = Matrix::random(n, n, &mut rng, DEFAULT_HEIGHT);
        let uq: Matrix<Quaternion> = Matrix::random(n, n, &mut rng, DEFAULT_HEIGHT);
        let outcome = (|| -> Result<bool> {
            if !u.is_invertible() || !uq.is_invertible() {
                return Ok(true);
            }
            let d = Matrix::diag(diag.clone());
            let f = FormSpec::quadratic(&(&u.transpose() * &d) * &u)?;
            let dq = Matrix::diag(diag.iter().cloned().map(Quaternion::from).collect());
            let h = FormSpec::quat_hermitian(&(&uq.star() * &dq) * &uq)?;
            let dg = Matrix::diag(diag.iter().cloned().map(G::from).collect());
            let ug: Matrix<G> = uq.map(|x| G::new(x.a.clone(), x.b.clone()));
            let herm_ok = match ug.is_invertible() {
                true => signature_index(&FormSpec::hermitian(&(&ug.star() * &dg) * &ug)?)? == expected,
                false => true,
            };
            Ok(signature_index(&f)? == expected && canonicalize_quat_hermitian(&h)?.index == expected && herm_ok)
        })();
        t.case(|| format!("n={n}, seed={seed}"), outcome);
    }
}

fn hilbert90(cfg: &VerifyConfig, t: &mut Tally) {
    let top = cfg.max_n.clamp(2, 4);
    for k in 0..cfg.samples {
        let seed = case_seed(cfg, k);
        let quaternionic = k % 2 == 1;
        let n = if quaternionic {
            2 * (1 + k % (top / 2))
        } else {
            1 + k % top
        };
        let action = if quaternionic {
            ConjAction::QuaternionTwist { n }
        } else {
            ConjAction::Plain { n }
        };
        let outcome = (|| -> Result<bool> {
            let m = real_det_matrix(n, seed)?;
            let x = twist_by(&Cocycle::trivial(action), &m)?;
            let p = hilbert90_solve(&x, seed)?;
            let mut ok = &p * &action.apply(&p)?.inverse()? == x.b;
            if quaternionic {
                ok &= sl_quaternionic_class(&x, seed)? == 1;
            }
            Ok(ok)
        })();
        t.case(|| format!("{action:?}, seed={seed}"), outcome);
    }
    for (n, order) in [(2, 2), (4, 4)] {
        let outcome = scalar_cocycle(n, &primitive_unity_root(order))
            .and_then(|x| sl_quaternionic_class(&x, cfg.seed))
            .map(|s| s == -1);
        t.case(|| format!("ζ·Id with n={n}, ζ of order {order}"), outcome);
    }
}

/// A random invertible `M` with real determinant, so `M⁻¹c(M)` has determinant one.
pub fn real_det_matrix(n: usize, seed: u64) -> Result<Matrix<G>> {
    for attempt in 0..32u64 {
        let mut rng = Lcg64::new(seed.wrapping_add(attempt));
        let m: Matrix<G> = Matrix::random(n, n, &mut rng, DEFAULT_HEIGHT);
        let d = m.det()?;
        if d.is_zero() {
            continue;
        }
        let mut fix = vec![G::one(); n];
        fix[n - 1] = d.conj();
        return Ok(&m * &Matrix::diag(fix));
    }
    Err(Error::SamplingFailure { seed, attempts: 32 })
}

fn rational_triples(height: i64) -> Vec<Rational> {
    let mut values: Vec<Rational> = Vec::new();
    for num in -height..=height {
        for den in 1..=height {
            if num != 0 {
                let r = Rational::new(num, den);
                if !values.contains(&r) {
                    values.push(r);
                }
            }
        }
    }
    values
}

fn pfister(t: &mut Tally) {
    let one = Rational::one();
    for mask in 0..8u32 {
        let slot = |bit: u32| {
            if mask & (1 << bit) == 0 {
                one.clone()
            } else {
                -one.clone()
            }
        };
        let form = Pfister3::new(slot(0), slot(1), slot(2)).unwrap();
        let expected = if mask == 0 {
            PfisterClass::Definite
        } else {
            PfisterClass::Split
        };
        t.case(|| format!("signs {mask:03b}"), Ok(pfister3_class(&form) == expected));
    }
    let values = rational_triples(3);
    for a in &values {
        for b in &values {
            for c in &values {
                let form = Pfister3::new(a.clone(), b.clone(), c.clone()).unwrap();
                let positive = a.is_positive() && b.is_positive() && c.is_positive();
                let sig = pfister3_signature(&form);
                let class = pfister3_class(&form);
                let ok = (sig == 8 && class == PfisterClass::Definite && positive)
                    || (sig == 0 && class == PfisterClass::Split && !positive);
                t.case(|| format!("({a}, {b}, {c})"), Ok(ok));
            }
        }
    }
}

fn transport(cfg: &VerifyConfig, t: &mut Tally) {
    let top = cfg.max_n.clamp(2, 5);
    for k in 0..cfg.samples {
        let seed = case_seed(cfg, k);
        let n = 2 + k % (top - 1);
        let p = k % (n + 1);
        let q = (k / (n + 1)) % (n + 1);
        let outcome = (|| -> Result<bool> {
            let ip = signature_matrix::<Rational>(n, p);
            let m = cayley_sample_gram(&ip, Pairing::Bilinear, seed, DEFAULT_HEIGHT)?;
            let m: Matrix<G> = m.map(|x| G::from(x.clone()));
            let d = twist_matrix(n, p, q)?;
            let conj = &(&d * &m) * &d.inverse()?;
            Ok(Pairing::Bilinear.preserves(&conj, &gsig(n, q)))
        })();
        t.case(|| format!("orthogonal n={n}, p={p}, q={q}, seed={seed}"), outcome);

        let m = 1 + k % 3;
        let (p, q) = (k % (m + 1), (k / (m + 1)) % (m + 1));
        let outcome = (|| -> Result<bool> {
            let h = FormSpec::quat_hermitian(signature_matrix(m, p))?;
            let FormSpec::QuatHermitian(gram) = &h else {
                unreachable!()
            };
            let sample = cayley_sample_gram(gram, Pairing::Sesquilinear, seed, DEFAULT_HEIGHT)?;
            let big = mu_embed(&sample);
            let tp = embedded_form_matrix(&h)?;
            let d = twist_matrix(2 * m, 2 * p, 2 * q)?;
            let conj = &(&d * &big) * &d.inverse()?;
            Ok(tp == symplectic_gram(m, p)
                && Pairing::Bilinear.preserves(&big, &tp)
                && Pairing::Bilinear.preserves(&conj, &symplectic_gram(m, q)))
        })();
        t.case(|| format!("symplectic m={m}, p={p}, q={q}, seed={seed}"), outcome);
    }
}

fn twist_identities(cfg: &VerifyConfig, t: &mut Tally) {
    for n in (2..=cfg.max_n).step_by(2) {
        let outcome = quaternionic_structure::<G>(n).and_then(|a| {
            let id = Matrix::<G>::identity(n);
            Ok(&a * &a == -&id && a.transpose() == -&a && a.inverse()? == -&a)
        });
        t.case(|| format!("A_{n}"), outcome);
    }
    for n in 1..=cfg.max_n {
        let id = Matrix::<G>::identity(n);
        for p in 0..=n {
            let jp = root_signature_matrix(n, p);
            t.case(
                || format!("J_p n={n} p={p}"),
                Ok(&(&jp * &gsig(n, p)) * &jp == id && &jp * &jp == gsig(n, p) && (&jp.star() * &jp).is_identity()),
            );
            for q in 0..=n {
                let outcome = twist_matrix(n, p, q).map(|d| {
                    &(&d.transpose() * &gsig(n, q)) * &d == gsig(n, p) && &(&d.star() * &gsig(n, p)) * &d == gsig(n, p)
                });
                t.case(|| format!("D_q n={n} p={p} q={q}"), outcome);
                if (p + q) % 2 == 0 {
                    let outcome = rep_cocycle(Family::Su, n, p, q).and_then(|x| verify_cocycle(&x));
                    t.case(|| format!("B_q n={n} p={p} q={q}"), outcome);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            seed: 3,
            max_n: 4,
            samples: 8,
        }
    }

    #[test]
    fn every_suite_passes_on_small_config() {
        let report = run_suites(&Suite::ALL, &small()).unwrap();
        for s in &report.suites {
            assert_eq!(s.failed, 0, "{}: {:?}", s.suite, s.counterexample);
            assert!(s.cases > 0);
        }
        assert!(report.all_passed);
    }

    #[test]
    fn reports_are_deterministic_and_sorted() {
        let a = run_suites(&[Suite::TwistIdentities, Suite::Cayley, Suite::Cayley], &small()).unwrap();
        let b = run_suites(&[Suite::Cayley, Suite::TwistIdentities], &small()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.suites.len(), 2);
        assert_eq!(a.suites[0].suite, Suite::Cayley);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_value(s).unwrap(), s.name());
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn failures_are_recorded() {
        let mut t = Tally::new(Suite::Counts);
        t.case(|| "first".into(), Ok(false));
        t.case(|| "second".into(), Err(Error::Singular));
        t.case(|| "third".into(), Ok(true));
        let r = t.finish();
        assert_eq!((r.cases, r.passed, r.failed), (3, 1, 2));
        assert_eq!(r.counterexample.as_deref(), Some("first"));
    }

    #[test]
    fn config_bounds() {
        assert!(VerifyConfig { max_n: 0, ..small() }.validate().is_err());
        assert!(VerifyConfig { max_n: 13, ..small() }.validate().is_err());
        assert!(VerifyConfig { samples: 0, ..small() }.validate().is_err());
    }
}
