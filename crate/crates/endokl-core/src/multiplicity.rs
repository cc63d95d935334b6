//! Composition multiplicities of Verma modules and graded characters.
//!
//! Verma modules live over the Langlands dual algebra: their weights are
//! coweights of `g` and their positive roots are the positive coroots of
//! `g`. The module labelled by `w` in the index set has highest weight
//! `w lambda' - rho`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::coxeter::{CoxeterElement, CoxeterError};
use crate::endoscopy::StratificationDatum;
use crate::klpoly::{parabolic_total_dimension, KLCache, KlError};
use crate::poly::Polynomial;
use crate::rootsys::{in_positive_cone, RootDatum, RootError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultiplicityError {
    #[error(transparent)]
    Kl(#[from] KlError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("element {0} is not in the index set")]
    NotInIndexSet(alloc::string::String),
    #[error("highest weight is not dominant integral")]
    NotDominant,
    #[error("matrix is not unitriangular")]
    NotUnitriangular,
}

/// `[M(w lambda' - rho) : L(y lambda' - rho)]` over the index set of a
/// stratification datum, rows indexed by `w` and columns by `y`.
#[derive(Clone, Debug)]
pub struct MultiplicityMatrix {
    pub sd: StratificationDatum,
    pub entries: Vec<Vec<u64>>,
}

impl MultiplicityMatrix {
    pub fn labels(&self) -> &[CoxeterElement] {
        &self.sd.index_set
    }

    pub fn order(&self) -> &[Vec<bool>] {
        &self.sd.order
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

fn check_label(sd: &StratificationDatum, w: &CoxeterElement) -> Result<(), MultiplicityError> {
    if sd.position(w).is_none() {
        return Err(MultiplicityError::NotInIndexSet(alloc::format!("{w}")));
    }
    Ok(())
}

/// A fresh KL cache for the endoscopic group of `sd`.
pub fn cache_for(sd: &StratificationDatum) -> KLCache {
    KLCache::new(sd.zeta_system.clone())
}

/// `[M(w lambda' - rho) : L(y lambda' - rho)] = P_{w w_J, y w_J}(1)`
/// inside the endoscopic group.
pub fn verma_multiplicity(
    sd: &StratificationDatum,
    cache: &mut KLCache,
    w: &CoxeterElement,
    y: &CoxeterElement,
) -> Result<u64, MultiplicityError> {
    check_label(sd, w)?;
    check_label(sd, y)?;
    if !alloc::sync::Arc::ptr_eq(cache.system(), &sd.zeta_system) && **cache.system() != *sd.zeta_system {
        return Err(KlError::from(CoxeterError::MixedSystems).into());
    }
    Ok(parabolic_total_dimension(cache, w, y, &sd.j_zeta)?)
}

/// The full matrix, using `cache` for the KL polynomials.
pub fn multiplicity_matrix_with(sd: &StratificationDatum, cache: &mut KLCache) -> Result<MultiplicityMatrix, MultiplicityError> {
    let mut entries = vec![vec![0u64; sd.index_set.len()]; sd.index_set.len()];
    for (i, w) in sd.index_set.iter().enumerate() {
        for (j, y) in sd.index_set.iter().enumerate() {
            if sd.order[i][j] {
                entries[i][j] = verma_multiplicity(sd, cache, w, y)?;
            }
        }
    }
    Ok(MultiplicityMatrix { sd: sd.clone(), entries })
}

pub fn multiplicity_matrix(sd: &StratificationDatum) -> Result<MultiplicityMatrix, MultiplicityError> {
    multiplicity_matrix_with(sd, &mut cache_for(sd))
}

/// Inverse of a unitriangular matrix whose rows and columns are sorted by
/// length, so that it is upper triangular.
pub fn invert_unitriangular(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, MultiplicityError> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n || row[i] != 1 || row[..i].iter().any(|&x| x != 0) {
            return Err(MultiplicityError::NotUnitriangular);
        }
    }
    let mut inv = vec![vec![0i64; n]; n];
    for j in 0..n {
        for i in (0..=j).rev() {
            let s: i64 = (i + 1..=j).map(|k| m[i][k] * inv[k][j]).sum();
            inv[i][j] = i64::from(i == j) - s;
        }
    }
    Ok(inv)
}

/// `N` with `ch L(y) = sum_w N[y][w] ch M(w)`.
pub fn simple_in_verma_inversion(mm: &MultiplicityMatrix) -> Result<Vec<Vec<i64>>, MultiplicityError> {
    let m: Vec<Vec<i64>> = mm.entries.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    invert_unitriangular(&m)
}

/// Calls `f` on every nonnegative vector with entry sum at most `bound`,
/// in graded lexicographic order.
fn for_each_in_cone(rank: usize, bound: usize, mut f: impl FnMut(&[i64])) {
    fn rec(v: &mut Vec<i64>, pos: usize, left: usize, f: &mut dyn FnMut(&[i64])) {
        if pos == v.len() {
            f(v);
            return;
        }
        for c in 0..=left {
            v[pos] = c as i64;
            rec(v, pos + 1, left - c, f);
        }
        v[pos] = 0;
    }
    for total in 0..=bound {
        let mut v = vec![0i64; rank];
        rec(&mut v, 0, total, &mut |x: &[i64]| {
            if x.iter().sum::<i64>() == total as i64 {
                f(x);
            }
        });
    }
}

/// `K_alpha(q)` for every `alpha` in the positive cone of height at most `bound`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedCharacter {
    pub terms: BTreeMap<Vec<i64>, Polynomial>,
}

impl GradedCharacter {
    pub fn get(&self, alpha: &[i64]) -> Polynomial {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }
}

/// Table of the Kostant q-partition function up to total height `bound`.
pub fn costalk_character(datum: &RootDatum, bound: usize) -> GradedCharacter {
    let mut terms: BTreeMap<Vec<i64>, Polynomial> = BTreeMap::new();
    let mut keys = Vec::new();
    for_each_in_cone(datum.rank(), bound, |v| keys.push(v.to_vec()));
    for k in &keys {
        terms.insert(k.clone(), if k.iter().all(|&c| c == 0) { Polynomial::one() } else { Polynomial::zero() });
    }
    // Unbounded knapsack over parts; graded order visits `v - beta` first.
    for beta in datum.positive_coroots() {
        for k in &keys {
            let rest: Vec<i64> = k.iter().zip(beta).map(|(a, b)| a - b).collect();
            if !in_positive_cone(&rest) {
                continue;
            }
            let add = terms[&rest].shift(1);
            if !add.is_zero() {
                *terms.get_mut(k).expect("key present") += &add;
            }
        }
    }
    GradedCharacter { terms }
}

/// `K_alpha(q)`: partitions of `alpha` into positive roots of the dual
/// algebra, weighted by `q^(number of parts)`.
pub fn kostant_q(datum: &RootDatum, alpha: &[i64]) -> Polynomial {
    if alpha.len() != datum.rank() || !in_positive_cone(alpha) {
        return Polynomial::zero();
    }
    let height = alpha.iter().sum::<i64>() as usize;
    let dims: Vec<usize> = alpha.iter().map(|&a| a as usize + 1).collect();
    let size: usize = dims.iter().product();
    let index = |v: &[usize]| v.iter().zip(&dims).fold(0, |acc, (x, d)| acc * d + x);
    let mut table = vec![Polynomial::zero(); size];
    table[0] = Polynomial::one();
    let mut points: Vec<Vec<usize>> = Vec::with_capacity(size);
    for_each_in_cone(datum.rank(), height, |v| {
        if v.iter().zip(alpha).all(|(x, a)| x <= a) {
            points.push(v.iter().map(|&x| x as usize).collect());
        }
    });
    for beta in datum.positive_coroots() {
        for p in &points {
            if p.iter().zip(beta).any(|(&x, &b)| (x as i64) < b) {
                continue;
            }
            let rest: Vec<usize> = p.iter().zip(beta).map(|(&x, &b)| x - b as usize).collect();
            let add = table[index(&rest)].shift(1);
            let at = index(p);
            table[at] += &add;
        }
    }
    table[index(&alpha.iter().map(|&a| a as usize).collect::<Vec<_>>())].clone()
}

/// Weight multiplicity of a Verma module at depth `alpha`.
pub fn kostant_count(datum: &RootDatum, alpha: &[i64]) -> u64 {
    kostant_q(datum, alpha).at_one() as u64
}

/// Dimension of the simple module of the dual algebra with highest weight
/// `hw`, given in the simple-coroot basis of `g`.
pub fn weyl_dimension(datum: &RootDatum, hw: &[Rational]) -> Result<u64, MultiplicityError> {
    if hw.len() != datum.rank() {
        return Err(RootError::DimensionMismatch {
            expected: datum.rank(),
            got: hw.len(),
        }
        .into());
    }
    for i in 0..datum.rank() {
        let p = datum.pair_rational(&datum.simple_root(i), hw);
        if !p.is_integer() || p < Rational::zero() {
            return Err(MultiplicityError::NotDominant);
        }
    }
    let shifted: Vec<Rational> = hw.iter().zip(datum.rho()).map(|(a, r)| a + r).collect();
    let mut value = Rational::one();
    for root in datum.positive_roots() {
        value *= datum.pair_rational(root, &shifted) / datum.pair_rational(root, datum.rho());
    }
    Ok(value.to_integer() as u64)
}

/// `ch L(y lambda' - rho)` expanded through Verma characters, as weight
/// multiplicities indexed by depth below its highest weight, for all depths
/// of height at most `bound`.
pub fn simple_character(
    mm: &MultiplicityMatrix,
    y_index: usize,
    bound: usize,
) -> Result<BTreeMap<Vec<i64>, i64>, MultiplicityError> {
    let inv = simple_in_verma_inversion(mm)?;
    let sd = &mm.sd;
    let datum = &sd.datum;
    let top = sd.verma_highest_weight(&sd.index_set[y_index]);
    let mut out = BTreeMap::new();
    let mut depths = Vec::new();
    for_each_in_cone(datum.rank(), bound, |v| depths.push(v.to_vec()));
    for (w_index, w) in sd.index_set.iter().enumerate() {
        let coeff = inv[y_index][w_index];
        if coeff == 0 {
            continue;
        }
        let hw = sd.verma_highest_weight(w);
        // Depth of M(w)'s highest weight below that of L(y).
        let offset: Vec<i64> = top.iter().zip(&hw).map(|(a, b)| (a - b).to_integer()).collect();
        for d in &depths {
            let rel: Vec<i64> = d.iter().zip(&offset).map(|(a, b)| a - b).collect();
            let k = kostant_count(datum, &rel) as i64;
            if k != 0 {
                *out.entry(d.clone()).or_insert(0) += coeff * k;
            }
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}
