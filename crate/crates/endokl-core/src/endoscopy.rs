//! The endoscopic Coxeter datum of a rational coweight.
//!
//! For `lambda = mu / n` the positive coroots with integral pairing form a
//! closed subsystem. Its indecomposable members `I_zeta` generate a
//! reflection subgroup `_zeta W`, which is presented here as a Coxeter
//! system in its own right. Acting by `_zeta W` moves `lambda` to the
//! dominant `lambda'`, and the parabolic quotient by the stabiliser of
//! `lambda'` indexes the strata.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::coxeter::{bruhat_matrix, min_coset_rep, parabolic_quotient, CoxeterElement, CoxeterError, CoxeterSystem};
use crate::rootsys::{dominance_compare, in_positive_cone, RationalCoweight, RootDatum, RootError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EndoscopyError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("degree is not in the positive coroot cone")]
    NotInCone,
    #[error("element {0} is not in the index set")]
    NotInIndexSet(alloc::string::String),
}

/// Indices into `datum.positive_coroots()` of the coroots with integral
/// pairing against `lambda`.
pub fn integrality_subsystem(datum: &RootDatum, lambda: &RationalCoweight) -> Result<Vec<usize>, EndoscopyError> {
    let mut out = Vec::new();
    for (k, root) in datum.positive_roots().iter().enumerate() {
        if datum.pairing(root, lambda)?.is_integer() {
            out.push(k);
        }
    }
    Ok(out)
}

/// Members of a positive subsystem that are not the sum of two members.
pub fn simple_system(datum: &RootDatum, subsystem: &[usize]) -> Vec<usize> {
    let coroots = datum.positive_coroots();
    subsystem
        .iter()
        .copied()
        .filter(|&k| {
            !subsystem.iter().any(|&a| {
                subsystem.iter().any(|&b| {
                    coroots[a]
                        .iter()
                        .zip(&coroots[b])
                        .zip(&coroots[k])
                        .all(|((x, y), z)| x + y == *z)
                })
            })
        })
        .collect()
}

/// Output of the fixed-point algorithm for a rational coweight.
#[derive(Clone, Debug)]
pub struct StratificationDatum {
    pub lambda: RationalCoweight,
    pub datum: RootDatum,
    /// `I_zeta` as indices into the positive coroots of `datum`.
    pub simples: Vec<usize>,
    pub zeta_system: Arc<CoxeterSystem>,
    /// Generators of `zeta_system` fixing `lambda_prime`.
    pub j_zeta: Vec<usize>,
    /// Minimal coset representative with `lambda = y lambda'`.
    pub y: CoxeterElement,
    pub lambda_prime: Vec<Rational>,
    /// Minimal representatives of `_zeta W / W_J`, sorted by length.
    pub index_set: Vec<CoxeterElement>,
    /// `order[i][j]` iff `index_set[i] <= index_set[j]` in the Bruhat order.
    pub order: Vec<Vec<bool>>,
}

impl StratificationDatum {
    /// Simple coroots of `_zeta W`, in the simple-coroot basis of `g`.
    pub fn simple_coroots(&self) -> Vec<Vec<i64>> {
        self.simples.iter().map(|&k| self.datum.positive_coroots()[k].clone()).collect()
    }

    /// The roots paired with [`Self::simple_coroots`].
    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        self.simples.iter().map(|&k| self.datum.positive_roots()[k].clone()).collect()
    }

    /// Action of an element of `_zeta W` on a rational coweight.
    pub fn act(&self, w: &CoxeterElement, v: &[Rational]) -> Vec<Rational> {
        let mut x = v.to_vec();
        for &i in w.word().iter().rev() {
            x = self.datum.reflect_by_root(self.simples[i], &x);
        }
        x
    }

    /// The image of `w` in the ambient Weyl group of `datum`.
    pub fn ambient_element(&self, w: &CoxeterElement) -> CoxeterElement {
        embed_in_weyl(&self.datum, &self.act(w, self.datum.rho()))
    }

    /// `lambda' - w lambda'`, an element of the coroot lattice.
    pub fn degree_of(&self, w: &CoxeterElement) -> Vec<i64> {
        self.act(w, &self.lambda_prime)
            .iter()
            .zip(&self.lambda_prime)
            .map(|(b, a)| (a - b).to_integer())
            .collect()
    }

    pub fn position(&self, w: &CoxeterElement) -> Option<usize> {
        self.index_set.iter().position(|e| e == w)
    }

    /// The weight `w lambda' - rho` of the Verma module labelled by `w`.
    pub fn verma_highest_weight(&self, w: &CoxeterElement) -> Vec<Rational> {
        self.act(w, &self.lambda_prime)
            .iter()
            .zip(self.datum.rho())
            .map(|(a, r)| a - r)
            .collect()
    }
}

/// The Weyl group element sending `rho` to the regular vector `v`.
pub(crate) fn embed_in_weyl(datum: &RootDatum, v: &[Rational]) -> CoxeterElement {
    let system = CoxeterSystem::weyl(datum);
    let mut v = v.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..datum.rank()).find(|&i| datum.pair_rational(&datum.simple_root(i), &v) < Rational::zero()) {
        word.push(i);
        v = datum.reflect_rational(i, &v);
    }
    system.element(&word).expect("indices within rank")
}

/// Endoscopic Cartan matrix `B[i][j] = <beta_i^vee, beta_j>` for simples
/// given as positive root indices.
pub(crate) fn endoscopic_cartan(datum: &RootDatum, simples: &[usize]) -> Vec<Vec<i64>> {
    simples
        .iter()
        .map(|&i| {
            simples
                .iter()
                .map(|&j| datum.pair_int(&datum.positive_roots()[j], &datum.positive_coroots()[i]))
                .collect()
        })
        .collect()
}

/// Runs the fixed-point algorithm for `lambda`.
pub fn stratification_datum(datum: &RootDatum, lambda: &RationalCoweight) -> Result<StratificationDatum, EndoscopyError> {
    if lambda.rank() != datum.rank() {
        return Err(RootError::DimensionMismatch {
            expected: datum.rank(),
            got: lambda.rank(),
        }
        .into());
    }
    let subsystem = integrality_subsystem(datum, lambda)?;
    let simples = simple_system(datum, &subsystem);
    let zeta_system = CoxeterSystem::from_cartan(endoscopic_cartan(datum, &simples))?;

    let mut lambda_prime = lambda.coords();
    let mut word = Vec::new();
    while let Some(i) = simples
        .iter()
        .position(|&k| datum.pair_rational(&datum.positive_roots()[k], &lambda_prime) < Rational::zero())
    {
        word.push(i);
        lambda_prime = datum.reflect_by_root(simples[i], &lambda_prime);
    }
    let j_zeta: Vec<usize> = (0..simples.len())
        .filter(|&i| datum.pair_rational(&datum.positive_roots()[simples[i]], &lambda_prime).is_zero())
        .collect();
    let y = min_coset_rep(&zeta_system.element(&word)?, &j_zeta);
    let index_set = parabolic_quotient(&zeta_system, &j_zeta, None)?;
    let order = bruhat_matrix(&index_set);
    Ok(StratificationDatum {
        lambda: lambda.clone(),
        datum: datum.clone(),
        simples,
        zeta_system,
        j_zeta,
        y,
        lambda_prime,
        index_set,
        order,
    })
}

/// Labels `w` whose stratum meets degree `alpha`: `lambda' - w lambda' <= alpha`.
pub fn strata_for_degree(sd: &StratificationDatum, alpha: &[i64]) -> Result<Vec<CoxeterElement>, EndoscopyError> {
    if alpha.len() != sd.datum.rank() {
        return Err(RootError::DimensionMismatch {
            expected: sd.datum.rank(),
            got: alpha.len(),
        }
        .into());
    }
    if !in_positive_cone(alpha) {
        return Err(EndoscopyError::NotInCone);
    }
    Ok(sd
        .index_set
        .iter()
        .filter(|w| dominance_compare(&sd.degree_of(w), alpha))
        .cloned()
        .collect())
}
