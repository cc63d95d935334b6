//! Rational coweights of the loop group and their strata index sets.
//!
//! An affine coweight is `lambda = (lambda_bar, k)` where the loop part is
//! recorded by the projection pair `(a, b)` of the one-parameter subgroup to
//! the two circle factors, with level `k = -b / a`. Positive level means
//! `ab < 0`, negative level `ab > 0`, and `b = 0` is the critical level.
//!
//! Affine real roots are `alpha + m delta` with `alpha` a finite root; their
//! coroots are `alpha^vee + m d_alpha K` where `d_alpha` is half the square
//! length of `alpha^vee` and `K = alpha_0^vee + theta^vee` is central.
//! Degrees are written in the affine simple coroot basis
//! `[c_0, c_1, ..., c_n]`, with `c_0` the coefficient of `alpha_0^vee`.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::coxeter::{min_coset_rep, min_double_coset_rep, CoxeterElement, CoxeterError, CoxeterSystem};
use crate::endoscopy::{stratification_datum, EndoscopyError, StratificationDatum};
use crate::klpoly::{parabolic_total_dimension, KLCache, KlError};
use crate::rootsys::{RationalCoweight, RootDatum, RootError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AffineError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Endoscopy(#[from] EndoscopyError),
    #[error(transparent)]
    Kl(#[from] KlError),
    #[error("the projection pair (a, b) = (0, 0) does not define a coweight")]
    ZeroPair,
    #[error("a = 0 with b != 0 is not assigned a level")]
    Unclassified,
    #[error("expected {expected} level, got {got}")]
    WrongLevel { expected: &'static str, got: LevelClass },
    #[error("degree is not in the affine positive coroot cone")]
    NotInCone,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("multiplicities at singular negative level are not implemented")]
    SingularNegative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LevelClass {
    Positive,
    Negative,
    Critical,
}

impl LevelClass {
    pub fn name(self) -> &'static str {
        match self {
            LevelClass::Positive => "positive",
            LevelClass::Negative => "negative",
            LevelClass::Critical => "critical",
        }
    }
}

impl fmt::Display for LevelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rational coweight of the loop group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineCoweight {
    pub finite: RationalCoweight,
    pub a: i64,
    pub b: i64,
}

impl AffineCoweight {
    pub fn new(finite: RationalCoweight, a: i64, b: i64) -> Result<Self, AffineError> {
        if a == 0 && b == 0 {
            return Err(AffineError::ZeroPair);
        }
        Ok(Self { finite, a, b })
    }

    /// The coweight of level `k` with finite part `finite`.
    pub fn at_level(finite: RationalCoweight, k: Rational) -> Self {
        Self {
            finite,
            a: *k.denom(),
            b: -*k.numer(),
        }
    }

    /// `k = -b / a`.
    pub fn level(&self) -> Result<Rational, AffineError> {
        classify_level(self)?;
        Ok(Rational::new(-self.b, self.a))
    }

    /// Image under inversion of the loop coordinate.
    pub fn loop_inverse(&self) -> Self {
        Self {
            finite: RationalCoweight {
                mu: self.finite.mu.iter().map(|m| -m).collect(),
                n: self.finite.n,
            },
            a: -self.a,
            b: self.b,
        }
    }
}

impl fmt::Display for AffineCoweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; a={}, b={})", self.finite, self.a, self.b)
    }
}

pub fn classify_level(x: &AffineCoweight) -> Result<LevelClass, AffineError> {
    match (x.a, x.b) {
        (0, 0) => Err(AffineError::ZeroPair),
        (_, 0) => Ok(LevelClass::Critical),
        (0, _) => Err(AffineError::Unclassified),
        (a, b) if (a < 0) != (b < 0) => Ok(LevelClass::Positive),
        _ => Ok(LevelClass::Negative),
    }
}

/// A real affine root `root + m delta` with its coroot's finite part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    /// Finite part in the simple-root basis.
    pub root: Vec<i64>,
    /// Finite part of the coroot in the simple-coroot basis.
    pub coroot: Vec<i64>,
    pub m: i64,
    /// Coefficient of `K` in the coroot per unit of `m`.
    pub d: i64,
}

impl AffineRoot {
    pub fn is_positive(&self) -> bool {
        self.m > 0 || (self.m == 0 && self.root.iter().all(|&c| c >= 0))
    }

    /// `<root + m delta, (v, k)>`.
    pub fn pair(&self, datum: &RootDatum, v: &[Rational], k: Rational) -> Rational {
        datum.pair_rational(&self.root, v) + k * Rational::from_integer(self.m)
    }
}

/// All finite roots with coroots and `d_alpha`, positive ones first.
fn signed_roots(datum: &RootDatum) -> Vec<(Vec<i64>, Vec<i64>, i64)> {
    let mut out = Vec::new();
    for sign in [1, -1] {
        for (r, c) in datum.positive_roots().iter().zip(datum.positive_coroots()) {
            let cr: Vec<Rational> = c.iter().map(|&x| Rational::from_integer(x)).collect();
            let d = (datum.form(&cr, &cr) / Rational::from_integer(2)).to_integer();
            out.push((r.iter().map(|x| sign * x).collect(), c.iter().map(|x| sign * x).collect(), d));
        }
    }
    out
}

/// Positive real affine roots with integral pairing and `m <= max_m`.
fn integral_roots(datum: &RootDatum, v: &[Rational], k: Rational, max_m: i64) -> Vec<AffineRoot> {
    let roots = signed_roots(datum);
    let mut out = Vec::new();
    for m in 0..=max_m {
        for (r, c, d) in &roots {
            let beta = AffineRoot {
                root: r.clone(),
                coroot: c.clone(),
                m,
                d: *d,
            };
            if beta.is_positive() && beta.pair(datum, v, k).is_integer() {
                out.push(beta);
            }
        }
    }
    out
}

/// `s_beta(gamma)` on roots.
fn reflect_root(datum: &RootDatum, beta: &AffineRoot, gamma: &AffineRoot) -> AffineRoot {
    let n = datum.pair_int(&gamma.root, &beta.coroot);
    AffineRoot {
        root: gamma.root.iter().zip(&beta.root).map(|(g, b)| g - n * b).collect(),
        coroot: gamma.coroot.clone(),
        m: gamma.m - n * beta.m,
        d: gamma.d,
    }
}

/// Simple system of the reflection subgroup generated by the integral roots:
/// `beta` is simple iff it is the only integral positive root made negative
/// by `s_beta`.
fn dyer_simples(datum: &RootDatum, v: &[Rational], k: Rational) -> Vec<AffineRoot> {
    let period = *k.denom();
    let candidates = integral_roots(datum, v, k, period);
    // `s_beta(gamma) < 0` forces `m_gamma <= 3 m_beta`.
    let witnesses = integral_roots(datum, v, k, 3 * period);
    candidates
        .into_iter()
        .filter(|beta| {
            !witnesses
                .iter()
                .any(|g| g != beta && !reflect_root(datum, beta, g).is_positive())
        })
        .collect()
}

/// The endoscopic affine Coxeter datum of an affine coweight.
#[derive(Clone, Debug)]
pub struct AffineStratification {
    pub x: AffineCoweight,
    pub level: LevelClass,
    pub k: Rational,
    pub datum: RootDatum,
    /// `I_zeta`: simple affine roots of the integral subsystem.
    pub simples: Vec<AffineRoot>,
    pub zeta_system: Arc<CoxeterSystem>,
    /// Generators fixing `lambda'`; at critical level only finite ones.
    pub j_zeta: Vec<usize>,
    /// Minimal coset representative with `lambda = y lambda'`.
    pub y: CoxeterElement,
    /// Finite part of `lambda'`: dominant at positive and critical level,
    /// antidominant at negative level.
    pub lambda_prime: Vec<Rational>,
}

impl AffineStratification {
    /// Action on `(v, c)`: finite part and `K`-coefficient at level `k`.
    pub fn act(&self, w: &CoxeterElement, v: &[Rational], c: Rational) -> (Vec<Rational>, Rational) {
        let mut v = v.to_vec();
        let mut c = c;
        for &i in w.word().iter().rev() {
            let beta = &self.simples[i];
            let p = beta.pair(&self.datum, &v, self.k);
            for (x, &r) in v.iter_mut().zip(&beta.coroot) {
                *x -= p * Rational::from_integer(r);
            }
            c -= p * Rational::from_integer(beta.m * beta.d);
        }
        (v, c)
    }

    /// `lambda' - w lambda'` in the affine simple coroot basis.
    pub fn degree_of(&self, w: &CoxeterElement) -> Vec<i64> {
        let (v, c) = self.act(w, &self.lambda_prime, Rational::zero());
        let c0 = (-c).to_integer();
        let theta = self.datum.highest_coroot_of_highest_root();
        let mut out = vec![c0];
        for ((a, b), t) in self.lambda_prime.iter().zip(&v).zip(theta) {
            out.push((a - b).to_integer() + c0 * t);
        }
        out
    }

    /// The degree constrained by the bound: `lambda' - w lambda'` at
    /// positive level and `w lambda' - lambda'` at negative level.
    pub fn oriented_degree(&self, w: &CoxeterElement) -> Vec<i64> {
        let d = self.degree_of(w);
        match self.level {
            LevelClass::Negative => d.into_iter().map(|x| -x).collect(),
            _ => d,
        }
    }

    /// Generators whose root lies in the finite parabolic spanned by `k_set`.
    pub fn parabolic_generators(&self, k_set: &[usize]) -> Vec<usize> {
        (0..self.simples.len())
            .filter(|&i| {
                let b = &self.simples[i];
                b.m == 0 && b.root.iter().enumerate().all(|(j, &c)| c == 0 || k_set.contains(&j))
            })
            .collect()
    }
}

/// Runs the fixed-point algorithm on the affinized coroot system.
pub fn affine_endoscopy(datum: &RootDatum, x: &AffineCoweight) -> Result<AffineStratification, AffineError> {
    if x.finite.rank() != datum.rank() {
        return Err(AffineError::DimensionMismatch {
            expected: datum.rank(),
            got: x.finite.rank(),
        });
    }
    let level = classify_level(x)?;
    let k = x.level()?;
    let v = x.finite.coords();
    let mut simples = dyer_simples(datum, &v, k);
    simples.sort_by(|a, b| a.m.cmp(&b.m));
    let cartan: Vec<Vec<i64>> = simples
        .iter()
        .map(|bi| simples.iter().map(|bj| datum.pair_int(&bj.root, &bi.coroot)).collect())
        .collect();
    let zeta_system = CoxeterSystem::from_cartan(cartan)?;

    let wrong_side = |p: Rational| match level {
        LevelClass::Negative => p.is_positive(),
        _ => p.is_negative(),
    };
    let usable = |b: &AffineRoot| level != LevelClass::Critical || b.m == 0;
    let mut lambda_prime = v;
    let mut c = Rational::zero();
    let mut word = Vec::new();
    let mut probe = AffineStratification {
        x: x.clone(),
        level,
        k,
        datum: datum.clone(),
        simples,
        zeta_system: Arc::clone(&zeta_system),
        j_zeta: Vec::new(),
        y: zeta_system.identity(),
        lambda_prime: Vec::new(),
    };
    while let Some(i) = probe
        .simples
        .iter()
        .position(|b| usable(b) && wrong_side(b.pair(datum, &lambda_prime, k)))
    {
        word.push(i);
        let s = zeta_system.generator(i)?;
        (lambda_prime, c) = probe.act(&s, &lambda_prime, c);
    }
    let j_zeta: Vec<usize> = (0..probe.simples.len())
        .filter(|&i| {
            let b = &probe.simples[i];
            usable(b) && b.pair(datum, &lambda_prime, k).is_zero()
        })
        .collect();
    probe.y = min_coset_rep(&zeta_system.element(&word)?, &j_zeta);
    probe.j_zeta = j_zeta;
    probe.lambda_prime = lambda_prime;
    Ok(probe)
}

/// Strata index set of a non-critical affine coweight.
#[derive(Clone, Debug)]
pub struct AffineStrata {
    pub level: LevelClass,
    pub bound: Vec<i64>,
    pub elements: Vec<CoxeterElement>,
}

fn check_bound(datum: &RootDatum, bound: &[i64]) -> Result<(), AffineError> {
    if bound.len() != datum.rank() + 1 {
        return Err(AffineError::DimensionMismatch {
            expected: datum.rank() + 1,
            got: bound.len(),
        });
    }
    if bound.iter().any(|&c| c < 0) {
        return Err(AffineError::NotInCone);
    }
    Ok(())
}

/// Labels `w` in the quotient by `W_J` (double quotient when `k_set` names
/// a finite parabolic) whose oriented degree is at most `bound`.
pub fn affine_strata_index(
    datum: &RootDatum,
    x: &AffineCoweight,
    bound: &[i64],
    k_set: Option<&[usize]>,
) -> Result<AffineStrata, AffineError> {
    let level = classify_level(x)?;
    if level == LevelClass::Critical {
        return Err(AffineError::WrongLevel {
            expected: "positive or negative",
            got: level,
        });
    }
    check_bound(datum, bound)?;
    let st = affine_endoscopy(datum, x)?;
    strata_with(&st, bound, k_set)
}

/// [`affine_strata_index`] for an already computed datum.
pub fn strata_with(st: &AffineStratification, bound: &[i64], k_set: Option<&[usize]>) -> Result<AffineStrata, AffineError> {
    check_bound(&st.datum, bound)?;
    // Each step up the quotient adds at least one simple coroot of height >= 1.
    let max_len = bound.iter().sum::<i64>() as usize;
    let mut elements: Vec<CoxeterElement> = st
        .zeta_system
        .elements_up_to(Some(max_len))?
        .into_iter()
        .filter(|w| st.j_zeta.iter().all(|&s| !w.has_right_descent(s)))
        .filter(|w| st.oriented_degree(w).iter().zip(bound).all(|(d, b)| d <= b))
        .collect();
    if let Some(k_set) = k_set {
        let kz = st.parabolic_generators(k_set);
        let projected: BTreeSet<CoxeterElement> = elements.iter().map(|w| min_double_coset_rep(&kz, w, &st.j_zeta)).collect();
        elements = projected.into_iter().collect();
    }
    Ok(AffineStrata {
        level: st.level,
        bound: bound.to_vec(),
        elements,
    })
}

/// `[M(w_i) : L(w_j)]` over an index set: `P_{w_i w_J, w_j w_J}(1)` at
/// positive level, `Q_{w_j, w_i}(1)` at regular negative level.
pub fn affine_multiplicities(
    st: &AffineStratification,
    index: &[CoxeterElement],
    cache: &mut KLCache,
) -> Result<Vec<Vec<u64>>, AffineError> {
    let mut out = vec![vec![0u64; index.len()]; index.len()];
    match st.level {
        LevelClass::Positive => {
            for (i, w) in index.iter().enumerate() {
                for (j, y) in index.iter().enumerate() {
                    out[i][j] = parabolic_total_dimension(cache, w, y, &st.j_zeta)?;
                }
            }
        }
        LevelClass::Negative => {
            if !st.j_zeta.is_empty() {
                return Err(AffineError::SingularNegative);
            }
            for (i, w) in index.iter().enumerate() {
                let inv = cache.inverse_kl_row(w)?;
                for (j, y) in index.iter().enumerate() {
                    if let Some(&n) = inv.get(y) {
                        out[i][j] = n.unsigned_abs();
                    }
                }
            }
        }
        LevelClass::Critical => {
            return Err(AffineError::WrongLevel {
                expected: "positive or negative",
                got: LevelClass::Critical,
            })
        }
    }
    Ok(out)
}

/// Pairs `(w, alpha)` with `lambda' - w lambda' + (alpha, lambda') delta = beta`
/// at critical level. `w` runs over the finite endoscopic quotient and
/// `alpha` over nonnegative combinations of the non-singular endoscopic
/// simple coroots, written in the simple-coroot basis of `g`.
pub fn critical_strata_index(
    datum: &RootDatum,
    x: &AffineCoweight,
    beta: &[i64],
) -> Result<(StratificationDatum, Vec<(CoxeterElement, Vec<i64>)>), AffineError> {
    let level = classify_level(x)?;
    if level != LevelClass::Critical {
        return Err(AffineError::WrongLevel {
            expected: "critical",
            got: level,
        });
    }
    check_bound(datum, beta)?;
    let sd = stratification_datum(datum, &x.finite)?;
    let c = beta[0];
    let theta = datum.highest_coroot_of_highest_root();
    let v: Vec<i64> = beta[1..].iter().zip(theta).map(|(b, t)| b - c * t).collect();

    let free: Vec<usize> = (0..sd.simples.len()).filter(|i| !sd.j_zeta.contains(i)).collect();
    let coroots = sd.simple_coroots();
    let weights: Vec<Rational> = free
        .iter()
        .map(|&i| {
            let cr: Vec<Rational> = coroots[i].iter().map(|&x| Rational::from_integer(x)).collect();
            datum.form(&cr, &sd.lambda_prime)
        })
        .collect();
    let mut alphas = Vec::new();
    let mut coeffs = vec![0i64; free.len()];
    level_set(&weights, Rational::from_integer(c), 0, &mut coeffs, &mut |cs| {
        let mut alpha = vec![0i64; datum.rank()];
        for (&i, &m) in free.iter().zip(cs) {
            for (a, r) in alpha.iter_mut().zip(&coroots[i]) {
                *a += m * r;
            }
        }
        alphas.push(alpha);
    });

    let mut out = Vec::new();
    for w in &sd.index_set {
        if sd.degree_of(w) == v {
            for alpha in &alphas {
                out.push((w.clone(), alpha.clone()));
            }
        }
    }
    Ok((sd, out))
}

/// Nonnegative integer vectors `cs` with `sum cs[i] weights[i] = target`;
/// all weights are positive.
fn level_set(weights: &[Rational], target: Rational, pos: usize, cs: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
    if pos == weights.len() {
        if target.is_zero() {
            f(cs);
        }
        return;
    }
    let mut m = 0;
    let mut left = target;
    while !left.is_negative() {
        cs[pos] = m;
        level_set(weights, left, pos + 1, cs, f);
        left -= weights[pos];
        m += 1;
    }
    cs[pos] = 0;
}
