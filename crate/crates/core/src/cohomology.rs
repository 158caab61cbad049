//! Galois 1-cocycles for `Gal(k̄|k) = {1, c}`.
//!
//! A cocycle is a single matrix `B` with `B·c(B) = Id`, where `c` is one of the
//! twisted conjugations of [`ConjAction`]. Classes are identified by signatures
//! of hermitian matrices built from `B`, never by orbit search.

use serde::{Deserialize, Serialize};

use crate::exactnum::{CycloElement, GaussRational, Rational, Scalar};
use crate::forms::{inertia, sorted_diagonalization};
use crate::matrix::{quaternionic_structure, root_signature_matrix, signature_matrix, Matrix, DEFAULT_HEIGHT};
use crate::quatlin::{canonicalize_quat_hermitian_gram, mu_unembed};
use crate::rng::Lcg64;
use crate::{Error, Result};

/// Attempts made by the randomized constructions before giving up.
pub const MAX_ATTEMPTS: u32 = 32;

type GMatrix = Matrix<GaussRational>;

/// The nontrivial element `c` acting on `n × n` matrices over `k̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", deny_unknown_fields)]
pub enum ConjAction {
    /// `c(M) = M̄`
    Plain { n: usize },
    /// `c(M) = A_n M̄ A_n⁻¹`
    QuaternionTwist { n: usize },
    /// `c(M) = I_p (M̄^t)⁻¹ I_p`, defined on invertible matrices only
    UnitaryTwist { n: usize, p: usize },
}

impl ConjAction {
    pub fn size(&self) -> usize {
        match *self {
            ConjAction::Plain { n } | ConjAction::QuaternionTwist { n } | ConjAction::UnitaryTwist { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ConjAction::Plain { n } if n == 0 => Err(Error::dim("action", "n >= 1", n)),
            ConjAction::QuaternionTwist { n } if n == 0 || n % 2 == 1 => Err(Error::dim("action", "even n >= 2", n)),
            ConjAction::UnitaryTwist { n, p } if n == 0 || p > n => {
                Err(Error::dim("action", "n >= 1 and p <= n", format!("n={n}, p={p}")))
            }
            _ => Ok(()),
        }
    }

    pub fn apply(&self, m: &GMatrix) -> Result<GMatrix> {
        self.validate()?;
        let n = m.require_square("conj_action")?;
        if n != self.size() {
            return Err(Error::dim("conj_action", self.size(), n));
        }
        match *self {
            ConjAction::Plain { .. } => Ok(m.conj()),
            ConjAction::QuaternionTwist { n } => {
                let a = quaternionic_structure::<GaussRational>(n)?;
                Ok(&(&a * &m.conj()) * &(-&a))
            }
            ConjAction::UnitaryTwist { n, p } => {
                let ip = signature_matrix::<GaussRational>(n, p);
                Ok(&(&ip * &m.star().inverse()?) * &ip)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cocycle {
    pub action: ConjAction,
    #[serde(rename = "B")]
    pub b: GMatrix,
}

impl Cocycle {
    pub fn new(action: ConjAction, b: GMatrix) -> Self {
        Cocycle { action, b }
    }

    pub fn trivial(action: ConjAction) -> Self {
        Cocycle::new(action, Matrix::identity(action.size()))
    }
}

/// Exact check of `B·c(B) = Id`. A singular `B` under the unitary twist is not a
/// cocycle.
pub fn verify_cocycle(x: &Cocycle) -> Result<bool> {
    x.action.validate()?;
    let n = x.b.require_square("verify_cocycle")?;
    if n != x.action.size() {
        return Err(Error::dim("verify_cocycle", x.action.size(), n));
    }
    match x.action.apply(&x.b) {
        Ok(cb) => Ok((&x.b * &cb).is_identity()),
        Err(Error::Singular) => Ok(false),
        Err(e) => Err(e),
    }
}

fn require_cocycle(x: &Cocycle) -> Result<()> {
    if verify_cocycle(x)? {
        Ok(())
    } else {
        Err(Error::CocycleViolation)
    }
}

/// The cohomology `M⁻¹·B·c(M)` of `x` twisted by an invertible `M`.
pub fn twist_by(x: &Cocycle, m: &GMatrix) -> Result<Cocycle> {
    let b = &(&m.inverse()? * &x.b) * &x.action.apply(m)?;
    Ok(Cocycle::new(x.action, b))
}

/// Group context for representatives and class invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `SU(n, h_p)` inside `SL(n, k̄)` with the unitary twist.
    Su,
    /// `SO(n, I_p)` with the plain action.
    So,
    /// `SU(n, ℍ, h_p)` embedded in `Sp(2n, k̄)` with the quaternionic twist.
    Suh,
}

impl Family {
    pub fn action(self, n: usize, p: usize) -> ConjAction {
        match self {
            Family::Su => ConjAction::UnitaryTwist { n, p },
            Family::So => ConjAction::Plain { n },
            Family::Suh => ConjAction::QuaternionTwist { n: 2 * n },
        }
    }

    fn parity_constrained(self) -> bool {
        !matches!(self, Family::Suh)
    }
}

/// `A_{2n}⁻¹ I_{2p}`, the alternating form preserved by `μ(SU(n, ℍ, h_p))`.
pub fn symplectic_gram(n: usize, p: usize) -> GMatrix {
    let a = quaternionic_structure::<GaussRational>(2 * n).expect("even size");
    &(-&a) * &signature_matrix(2 * n, 2 * p)
}

/// Representative `B_q = I_q I_p` (`I_{2q} I_{2p}` for the quaternionic family).
pub fn rep_cocycle(family: Family, n: usize, p: usize, q: usize) -> Result<Cocycle> {
    if n == 0 {
        return Err(Error::dim("rep_cocycle", "n >= 1", n));
    }
    if p > n || q > n {
        return Err(Error::dim(
            "rep_cocycle",
            format!("p, q <= {n}"),
            format!("p={p}, q={q}"),
        ));
    }
    if family.parity_constrained() && (p + q) % 2 == 1 {
        return Err(Error::Parity { p, q });
    }
    let b = match family {
        Family::Su | Family::So => &signature_matrix(n, q) * &signature_matrix(n, p),
        Family::Suh => &signature_matrix(2 * n, 2 * q) * &signature_matrix(2 * n, 2 * p),
    };
    Ok(Cocycle::new(family.action(n, p), b))
}

/// Class invariant of a cocycle in the given family context.
///
/// For the unitary and orthogonal families `B·I_p` is hermitian and its index is
/// returned. For the quaternionic family `B = P·c(P)⁻¹` is solved, the twisted
/// form `P^t T P` is pulled back through `μ` and its quaternionic index returned.
pub fn cocycle_index(x: &Cocycle, family: Family, p: usize) -> Result<usize> {
    let n = x.b.require_square("cocycle_index")?;
    let (size, expected) = match family {
        Family::Suh => {
            if n % 2 == 1 {
                return Err(Error::dim("cocycle_index", "even size", n));
            }
            (n / 2, family.action(n / 2, p))
        }
        _ => (n, family.action(n, p)),
    };
    if p > size {
        return Err(Error::dim("cocycle_index", format!("p <= {size}"), p));
    }
    if x.action != expected {
        return Err(Error::NotApplicable(format!(
            "cocycle action {:?} does not match the {family:?} context {expected:?}",
            x.action
        )));
    }
    require_cocycle(x)?;
    match family {
        Family::Su => Ok(inertia(&(&x.b * &signature_matrix(n, p)))?.positive),
        Family::So => {
            let ip = signature_matrix::<GaussRational>(n, p);
            if &(&x.b.transpose() * &ip) * &x.b != ip {
                return Err(Error::NotInGroup(format!("B does not preserve I_{p}")));
            }
            Ok(inertia(&(&x.b * &ip))?.positive)
        }
        Family::Suh => {
            let t = symplectic_gram(size, p);
            if &(&x.b.transpose() * &t) * &x.b != t {
                return Err(Error::NotInGroup(format!("B does not preserve A⁻¹I_{}", 2 * p)));
            }
            let pm = hilbert90_solve(x, 0)?;
            let twisted = &(&pm.transpose() * &t) * &pm;
            let a = quaternionic_structure::<GaussRational>(n)?;
            let h = mu_unembed(&(&a * &twisted))
                .ok_or_else(|| Error::InvalidStructure("twisted form is not quaternionic".into()))?;
            Ok(canonicalize_quat_hermitian_gram(&h)?.index)
        }
    }
}

/// Averaging `P = N + B·c(N)` for a given `N`; `None` if `P` is singular.
pub fn hilbert90_from(x: &Cocycle, n: &GMatrix) -> Result<Option<GMatrix>> {
    let p = &x.b * &x.action.apply(n)?;
    let p = &p + n;
    Ok(p.is_invertible().then_some(p))
}

/// Constructive Hilbert 90: invertible `P` with `B = P·c(P)⁻¹`.
///
/// `N` is drawn from seeds `seed, seed + 1, …` until `P` is invertible.
pub fn hilbert90_solve(x: &Cocycle, seed: u64) -> Result<GMatrix> {
    if matches!(x.action, ConjAction::UnitaryTwist { .. }) {
        return Err(Error::NotApplicable(
            "Hilbert 90 needs the plain or quaternionic action".into(),
        ));
    }
    require_cocycle(x)?;
    let n = x.action.size();
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = Lcg64::new(seed.wrapping_add(attempt as u64));
        let candidate = Matrix::random(n, n, &mut rng, DEFAULT_HEIGHT);
        if let Some(p) = hilbert90_from(x, &candidate)? {
            debug_assert_eq!(&p * &x.action.apply(&p)?.inverse()?, x.b);
            return Ok(p);
        }
    }
    Err(Error::SamplingFailure {
        seed,
        attempts: MAX_ATTEMPTS,
    })
}

/// `±1`: the class of a determinant-one cocycle in `H¹(k, SL(n/2, ℍ))`,
/// read off as the sign of `det P` for a Hilbert 90 solution `P`.
pub fn sl_quaternionic_class(x: &Cocycle, seed: u64) -> Result<i8> {
    if !matches!(x.action, ConjAction::QuaternionTwist { .. }) {
        return Err(Error::NotApplicable("expected the quaternionic action".into()));
    }
    require_cocycle(x)?;
    let det = x.b.det()?;
    if !det.is_one() {
        return Err(Error::DeterminantNotOne(det.to_string()));
    }
    let p = hilbert90_solve(x, seed)?;
    let d = p.det()?;
    let r = d
        .to_rational()
        .ok_or_else(|| Error::InvalidStructure(format!("det P = {d} is not fixed by c")))?;
    Ok(r.signum())
}

/// `ζ` as a Gaussian rational when it lies in `ℚ(i)`.
pub fn cyclo_to_gauss(z: &CycloElement) -> Option<GaussRational> {
    let half = CycloElement::from_rational(Rational::new(1, 2));
    let zc = z.conj();
    let re = ((z.clone() + &zc) * &half).to_rational()?;
    let minus_i = -CycloElement::zeta(4);
    let im = ((z.clone() - &zc) * &half * &minus_i).to_rational()?;
    Some(GaussRational::new(re, im))
}

/// The scalar cocycle `ζ·Id` under the quaternionic action on `n × n` matrices.
pub fn scalar_cocycle(n: usize, zeta: &CycloElement) -> Result<Cocycle> {
    let z = cyclo_to_gauss(zeta).ok_or_else(|| Error::NotApplicable(format!("{zeta} does not lie in ℚ(i)")))?;
    let action = ConjAction::QuaternionTwist { n };
    action.validate()?;
    Ok(Cocycle::new(action, Matrix::identity(n).scale(&z)))
}

/// `D_q = J_q J_p`.
pub fn twist_matrix(n: usize, p: usize, q: usize) -> Result<GMatrix> {
    if n == 0 || p > n || q > n {
        return Err(Error::dim(
            "twist_matrix",
            "0 <= p, q <= n, n >= 1",
            format!("n={n}, p={p}, q={q}"),
        ));
    }
    Ok(&root_signature_matrix(n, q) * &root_signature_matrix(n, p))
}

/// An invertible `M` with `c(M) = M` under the quaternionic action, built as
/// `N + c(N)` and resampled until invertible.
pub fn quaternionic_fixed_sample(n: usize, seed: u64) -> Result<GMatrix> {
    let action = ConjAction::QuaternionTwist { n };
    action.validate()?;
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = Lcg64::new(seed.wrapping_add(attempt as u64));
        let m = Matrix::random(n, n, &mut rng, DEFAULT_HEIGHT);
        let m = &m + &action.apply(&m)?;
        if m.is_invertible() {
            return Ok(m);
        }
    }
    Err(Error::SamplingFailure {
        seed,
        attempts: MAX_ATTEMPTS,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoboundaryWitness {
    /// `M⁻¹·B·c(M) = diag(d)·I_p`.
    pub m: GMatrix,
    pub d: Vec<Rational>,
    /// Number of positive entries of `d`.
    pub index: usize,
    /// `det M · conj(det M)`.
    pub det_norm: Rational,
    /// Whether `M` was rescaled by a unit of `ℤ[i]` to reach determinant one.
    pub det_normalized: bool,
}

/// Explicit solution of `M⁻¹·B·c(M) = D·I_p` under the unitary twist.
///
/// Diagonalizes the hermitian matrix `H = B·I_p` as `W* H W = D` and takes
/// `M = W^{-*}`. Pivots that are norms of Gaussian rationals are scaled to `±1`.
pub fn coboundary_witness(x: &Cocycle) -> Result<CoboundaryWitness> {
    let ConjAction::UnitaryTwist { n, p } = x.action else {
        return Err(Error::NotApplicable("expected the unitary action".into()));
    };
    require_cocycle(x)?;
    let ip = signature_matrix::<GaussRational>(n, p);
    let (dg, inertia) = sorted_diagonalization(&(&x.b * &ip))?;
    let mut m = dg.witness.star().inverse()?;
    let d: Vec<Rational> = dg
        .diagonal
        .iter()
        .map(|v| v.to_rational().expect("hermitian pivots are real"))
        .collect();
    let mut det = m.det()?;
    let det_norm = det.norm();
    let mut det_normalized = false;
    if !det.is_one() {
        let units = [GaussRational::i(), -GaussRational::one(), -GaussRational::i()];
        if let Some(z) = units.iter().find(|z| (z.pow(n as u32) * &det).is_one()) {
            m = m.scale(z);
            det = m.det()?;
            det_normalized = true;
        }
    }
    debug_assert!(!det_normalized || det.is_one());
    let target = &Matrix::diag(d.iter().cloned().map(GaussRational::from).collect()) * &ip;
    if twist_by(x, &m)?.b != target {
        return Err(Error::InvalidStructure("coboundary witness failed substitution".into()));
    }
    Ok(CoboundaryWitness {
        m,
        d,
        index: inertia.positive,
        det_norm,
        det_normalized,
    })
}
