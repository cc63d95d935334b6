//! Brute-force Verma modules over the dual algebra at rank at most two.
//!
//! A weight space of depth `beta` is modelled on the words in the lowering
//! operators `f_i` of content `beta`, i.e. on the Verma module of the
//! algebra with Chevalley relations only. The Serre relations span a
//! submodule `I`, so the true Verma module is `F / I`. The contravariant
//! form on words has rank equal to the dimension of the simple quotient.
//!
//! All coefficients are scaled by the common denominator of the highest
//! weight so that the arithmetic stays in the integers.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::endoscopy::{stratification_datum, EndoscopyError, StratificationDatum};
use crate::linalg::Echelon;
use crate::multiplicity::{kostant_count, MultiplicityMatrix};
use crate::rootsys::{RationalCoweight, RootDatum};
use crate::Rational;

/// Largest rank the oracle accepts.
pub const MAX_RANK: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("oracle supports rank at most {MAX_RANK}, got {0}")]
    RankTooLarge(usize),
    #[error("depth {requested} exceeds the constructed bound {built}")]
    DepthExceeded { requested: usize, built: usize },
    #[error("depth {given} is too small for the linkage orbit; need at least {required}")]
    InsufficientDepth { given: usize, required: usize },
    #[error("weight space dimension {found} at depth {beta:?} differs from the partition count {expected}")]
    DimensionMismatch { beta: Vec<i64>, found: usize, expected: u64 },
    #[error("composition factor with highest weight {0} is outside the index set")]
    UnexpectedFactor(String),
    #[error("character peeling produced a negative multiplicity")]
    NegativeRemainder,
    #[error(transparent)]
    Endoscopy(#[from] EndoscopyError),
}

type Word = Vec<u8>;

#[derive(Clone, Debug)]
struct WeightSpace {
    words: Vec<Word>,
    index: BTreeMap<Word, usize>,
    /// Serre submodule.
    ideal: Echelon,
}

/// A Verma module over the dual algebra, truncated at a depth bound.
#[derive(Clone, Debug)]
pub struct VermaModel {
    /// `a(i, j) = <alpha_i, alpha_j^vee>`, the dual Cartan matrix.
    dual_cartan: Vec<Vec<i64>>,
    hw: Vec<Rational>,
    /// Scaled eigenvalues of `h_i` on the highest weight vector.
    hpair: Vec<i64>,
    scale: i64,
    depth: usize,
    spaces: BTreeMap<Vec<i64>, WeightSpace>,
}

fn add_unit(beta: &[i64], i: usize, sign: i64) -> Vec<i64> {
    let mut b = beta.to_vec();
    b[i] += sign;
    b
}

fn height(beta: &[i64]) -> usize {
    beta.iter().sum::<i64>() as usize
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// All nonnegative vectors of the given rank with entry sum at most `bound`,
/// in graded order.
fn cone_points(rank: usize, bound: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for total in 0..=bound as i64 {
        match rank {
            0 => {
                if total == 0 {
                    out.push(Vec::new());
                }
            }
            1 => out.push(vec![total]),
            _ => {
                for a in (0..=total).rev() {
                    out.push(vec![a, total - a]);
                }
            }
        }
    }
    out
}

impl VermaModel {
    /// Verma module with highest weight `hw` (in the simple-coroot basis of
    /// `g`), built to depth `depth`.
    pub fn new(datum: &RootDatum, hw: &[Rational], depth: usize) -> Result<Self, OracleError> {
        let n = datum.rank();
        if n > MAX_RANK {
            return Err(OracleError::RankTooLarge(n));
        }
        let a = datum.cartan_matrix();
        let dual_cartan: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect();
        let pairs: Vec<Rational> = (0..n).map(|i| datum.pair_rational(&datum.simple_root(i), hw)).collect();
        let scale = pairs.iter().fold(1i64, |acc, p| acc.lcm(p.denom()));
        let hpair = pairs.iter().map(|p| (p * Rational::from_integer(scale)).to_integer()).collect();
        let mut model = Self {
            dual_cartan,
            hw: hw.to_vec(),
            hpair,
            scale,
            depth,
            spaces: BTreeMap::new(),
        };
        for beta in cone_points(n, depth) {
            let space = model.build_space(&beta);
            let found = space.words.len() - space.ideal.rank();
            let expected = kostant_count(datum, &beta);
            if found as u64 != expected {
                return Err(OracleError::DimensionMismatch { beta, found, expected });
            }
            model.spaces.insert(beta, space);
        }
        Ok(model)
    }

    pub fn highest_weight(&self) -> &[Rational] {
        &self.hw
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    fn rank(&self) -> usize {
        self.hpair.len()
    }

    fn build_space(&self, beta: &[i64]) -> WeightSpace {
        let n = self.rank();
        let mut words: Vec<Word> = Vec::new();
        if beta.iter().all(|&b| b == 0) {
            words.push(Word::new());
        } else {
            for i in 0..n {
                if beta[i] > 0 {
                    for w in &self.spaces[&add_unit(beta, i, -1)].words {
                        let mut word = vec![i as u8];
                        word.extend_from_slice(w);
                        words.push(word);
                    }
                }
            }
        }
        words.sort();
        let index: BTreeMap<Word, usize> = words.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let width = words.len();
        let mut ideal = Echelon::new(width);
        // Left multiples of the ideal one step up.
        for i in 0..n {
            if beta[i] == 0 {
                continue;
            }
            let below = &self.spaces[&add_unit(beta, i, -1)];
            for v in below.ideal.basis() {
                let mut lifted = vec![BigInt::zero(); width];
                for (k, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        let mut word = vec![i as u8];
                        word.extend_from_slice(&below.words[k]);
                        lifted[index[&word]] = c.clone();
                    }
                }
                ideal.insert(lifted);
            }
        }
        // Serre elements times arbitrary words.
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let m = 1 - self.dual_cartan[i][j];
                let mut rest = beta.to_vec();
                rest[i] -= m;
                rest[j] -= 1;
                let Some(tail) = self.spaces.get(&rest) else { continue };
                for y in &tail.words {
                    let mut v = vec![BigInt::zero(); width];
                    for k in 0..=m {
                        let mut word = vec![i as u8; (m - k) as usize];
                        word.push(j as u8);
                        word.extend(core::iter::repeat(i as u8).take(k as usize));
                        word.extend_from_slice(y);
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        v[index[&word]] += BigInt::from(sign * binomial(m, k));
                    }
                    ideal.insert(v);
                }
            }
        }
        WeightSpace { words, index, ideal }
    }

    /// Scaled `e_i` applied to a word, as a sparse vector one level up.
    fn raise(&self, i: usize, word: &[u8]) -> Vec<(Word, i64)> {
        let mut out = Vec::new();
        let mut below = 0i64;
        for p in (0..word.len()).rev() {
            let j = word[p] as usize;
            if j == i {
                let c = self.hpair[i] - self.scale * below;
                if c != 0 {
                    let mut w = word[..p].to_vec();
                    w.extend_from_slice(&word[p + 1..]);
                    out.push((w, c));
                }
            }
            below += self.dual_cartan[i][j];
        }
        out
    }

    fn check_depth(&self, depth: usize) -> Result<(), OracleError> {
        if depth > self.depth {
            return Err(OracleError::DepthExceeded {
                requested: depth,
                built: self.depth,
            });
        }
        Ok(())
    }

    /// Weight multiplicities of the Verma module by depth.
    pub fn verma_dims(&self) -> BTreeMap<Vec<i64>, usize> {
        self.spaces
            .iter()
            .map(|(b, s)| (b.clone(), s.words.len() - s.ideal.rank()))
            .collect()
    }

    /// Weight multiplicities of the simple quotient by depth, from the rank
    /// of the contravariant form.
    pub fn simple_dims(&self, depth: usize) -> Result<BTreeMap<Vec<i64>, usize>, OracleError> {
        self.check_depth(depth)?;
        let n = self.rank();
        let mut forms: BTreeMap<Vec<i64>, Vec<Vec<BigInt>>> = BTreeMap::new();
        let mut out = BTreeMap::new();
        for beta in cone_points(n, depth) {
            let space = &self.spaces[&beta];
            let size = space.words.len();
            let form = if height(&beta) == 0 {
                vec![vec![BigInt::from(1)]]
            } else {
                let mut form = vec![vec![BigInt::zero(); size]; size];
                for (r, left) in space.words.iter().enumerate() {
                    let i = left[0] as usize;
                    let below_beta = add_unit(&beta, i, -1);
                    let below = &self.spaces[&below_beta];
                    let prev = &forms[&below_beta];
                    let r_below = below.index[&left[1..]];
                    for (c, right) in space.words.iter().enumerate() {
                        let mut acc = BigInt::zero();
                        for (w, coef) in self.raise(i, right) {
                            acc += &prev[r_below][below.index[&w]] * coef;
                        }
                        form[r][c] = acc;
                    }
                }
                form
            };
            let mut e = Echelon::new(size);
            for row in &form {
                e.insert(row.clone());
            }
            out.insert(beta.clone(), e.rank());
            forms.insert(beta, form);
        }
        Ok(out)
    }

    /// Dimensions of the spaces of singular vectors at every nonzero depth
    /// up to `depth`, omitting zeros.
    pub fn singular_vectors(&self, depth: usize) -> Result<Vec<(Vec<i64>, usize)>, OracleError> {
        self.check_depth(depth)?;
        let n = self.rank();
        let mut out = Vec::new();
        for beta in cone_points(n, depth).into_iter().skip(1) {
            let space = &self.spaces[&beta];
            let targets: Vec<Option<&WeightSpace>> = (0..n)
                .map(|i| if beta[i] > 0 { self.spaces.get(&add_unit(&beta, i, -1)) } else { None })
                .collect();
            let offsets: Vec<usize> = targets
                .iter()
                .scan(0, |acc, t| {
                    let o = *acc;
                    *acc += t.map_or(0, |s| s.words.len());
                    Some(o)
                })
                .collect();
            let width: usize = targets.iter().map(|t| t.map_or(0, |s| s.words.len())).sum();
            let mut image = Echelon::new(width);
            let mut ideal_dims = 0;
            for (i, t) in targets.iter().enumerate() {
                let Some(t) = t else { continue };
                for v in t.ideal.basis() {
                    let mut x = vec![BigInt::zero(); width];
                    for (k, c) in v.iter().enumerate() {
                        x[offsets[i] + k] = c.clone();
                    }
                    image.insert(x);
                }
                ideal_dims += t.ideal.rank();
            }
            for word in &space.words {
                let mut x = vec![BigInt::zero(); width];
                for (i, t) in targets.iter().enumerate() {
                    let Some(t) = t else { continue };
                    for (w, c) in self.raise(i, word) {
                        x[offsets[i] + t.index[&w]] += c;
                    }
                }
                image.insert(x);
            }
            let kernel = space.words.len() - (image.rank() - ideal_dims);
            let dim = kernel - space.ideal.rank();
            if dim > 0 {
                out.push((beta, dim));
            }
        }
        Ok(out)
    }
}

/// Depth needed to see the whole linkage orbit of `sd`, with a margin of two.
pub fn required_depth(sd: &StratificationDatum) -> usize {
    sd.index_set.iter().map(|w| height(&sd.degree_of(w))).max().unwrap_or(0) + 2
}

/// Composition multiplicities over the index set of `lambda`, found by
/// peeling simple characters off Verma characters from the top down.
pub fn oracle_multiplicity_matrix(
    datum: &RootDatum,
    lambda: &RationalCoweight,
    depth: Option<usize>,
) -> Result<MultiplicityMatrix, OracleError> {
    if datum.rank() > MAX_RANK {
        return Err(OracleError::RankTooLarge(datum.rank()));
    }
    let sd = stratification_datum(datum, lambda)?;
    let required = required_depth(&sd);
    let depth = depth.unwrap_or(required);
    if depth + 2 < required {
        return Err(OracleError::InsufficientDepth { given: depth, required });
    }
    let size = sd.index_set.len();
    let tops: Vec<Vec<Rational>> = sd.index_set.iter().map(|w| sd.verma_highest_weight(w)).collect();
    let offsets: Vec<usize> = sd.index_set.iter().map(|w| height(&sd.degree_of(w))).collect();
    let mut models = Vec::with_capacity(size);
    let mut simples = Vec::with_capacity(size);
    for (k, top) in tops.iter().enumerate() {
        let d = depth.saturating_sub(offsets[k]);
        let model = VermaModel::new(datum, top, d)?;
        simples.push(model.simple_dims(d)?);
        models.push(model);
    }
    let mut entries = vec![vec![0u64; size]; size];
    for (w, model) in models.iter().enumerate() {
        let mut remainder: BTreeMap<Vec<i64>, i64> =
            model.verma_dims().into_iter().map(|(b, d)| (b, d as i64)).collect();
        loop {
            remainder.retain(|_, v| *v != 0);
            let Some((beta, mult)) = remainder.iter().min_by_key(|(b, _)| (height(b), (*b).clone())).map(|(b, m)| (b.clone(), *m)) else {
                break;
            };
            if mult < 0 {
                return Err(OracleError::NegativeRemainder);
            }
            let weight: Vec<Rational> = tops[w]
                .iter()
                .zip(&beta)
                .map(|(t, b)| t - Rational::from_integer(*b))
                .collect();
            let y = tops.iter().position(|t| *t == weight).ok_or_else(|| {
                OracleError::UnexpectedFactor(alloc::format!("{}", RationalCoweight::from_coords(&weight)))
            })?;
            entries[w][y] = mult as u64;
            for (gamma, dim) in &simples[y] {
                let at: Vec<i64> = beta.iter().zip(gamma).map(|(a, b)| a + b).collect();
                if let Some(r) = remainder.get_mut(&at) {
                    *r -= mult * (*dim as i64);
                }
            }
        }
    }
    Ok(MultiplicityMatrix { sd, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn rat(v: &[i64], n: i64) -> Vec<Rational> {
        v.iter().map(|&x| Rational::new(x, n)).collect()
    }

    #[test]
    fn sl2_singular_vector() {
        let a1 = RootDatum::new(CartanType::A, 1).unwrap();
        // <alpha, hw> = 3, singular vector at depth 4.
        let m = VermaModel::new(&a1, &rat(&[3], 2), 6).unwrap();
        assert_eq!(m.singular_vectors(6).unwrap(), vec![(vec![4], 1)]);
        let simple = m.simple_dims(6).unwrap();
        assert_eq!(simple.values().sum::<usize>(), 4);
        let m = VermaModel::new(&a1, &rat(&[1], 4), 6).unwrap();
        assert!(m.singular_vectors(6).unwrap().is_empty());
        assert!(matches!(m.singular_vectors(7), Err(OracleError::DepthExceeded { .. })));
    }

    #[test]
    fn sl3_weight_spaces_and_antidominant() {
        let a2 = RootDatum::new(CartanType::A, 2).unwrap();
        let m = VermaModel::new(&a2, &rat(&[-2, -2], 1), 6).unwrap();
        assert_eq!(m.verma_dims()[&vec![1, 1]], 2);
        assert_eq!(m.verma_dims()[&vec![2, 2]], 3);
        assert!(m.singular_vectors(6).unwrap().is_empty());
        // L(0) is trivial.
        let triv = VermaModel::new(&a2, &rat(&[0, 0], 1), 4).unwrap();
        assert_eq!(triv.simple_dims(4).unwrap().values().sum::<usize>(), 1);
        let sing = triv.singular_vectors(4).unwrap();
        // One singular vector at each depth rho - w rho.
        assert_eq!(
            sing,
            vec![(vec![1, 0], 1), (vec![0, 1], 1), (vec![2, 1], 1), (vec![1, 2], 1), (vec![2, 2], 1)]
        );
    }

    #[test]
    fn rank_two_serre_in_b2_and_g2() {
        for t in [CartanType::B, CartanType::G] {
            let d = RootDatum::new(t, 2).unwrap();
            assert!(VermaModel::new(&d, &rat(&[1, 1], 3), 6).is_ok());
        }
    }

    #[test]
    fn sl2_matrices() {
        let a1 = RootDatum::new(CartanType::A, 1).unwrap();
        let mm = oracle_multiplicity_matrix(&a1, &RationalCoweight::integral(vec![1]), None).unwrap();
        assert_eq!(mm.entries, vec![vec![1, 1], vec![0, 1]]);
        let mm = oracle_multiplicity_matrix(&a1, &RationalCoweight::new(vec![1], 4).unwrap(), None).unwrap();
        assert_eq!(mm.entries, vec![vec![1]]);
    }

    #[test]
    fn sl3_rho() {
        let a2 = RootDatum::new(CartanType::A, 2).unwrap();
        let mm = oracle_multiplicity_matrix(&a2, &RationalCoweight::new(vec![2, 2], 2).unwrap(), None).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(mm.entries[i][j], u64::from(mm.sd.order[i][j]));
            }
        }
    }

    #[test]
    fn rejects_rank_three_and_shallow_depth() {
        let a3 = RootDatum::new(CartanType::A, 3).unwrap();
        assert_eq!(
            oracle_multiplicity_matrix(&a3, &RationalCoweight::integral(vec![1, 1, 1]), None).unwrap_err(),
            OracleError::RankTooLarge(3)
        );
        let a2 = RootDatum::new(CartanType::A, 2).unwrap();
        assert!(matches!(
            oracle_multiplicity_matrix(&a2, &RationalCoweight::integral(vec![1, 1]), Some(1)),
            Err(OracleError::InsufficientDepth { .. })
        ));
    }
}
