//! Coxeter systems given by a generalized Cartan matrix, and their elements.
//!
//! An element `w` is identified by the vector `w(rho)` in the contragredient
//! representation, written in fundamental-weight coordinates. Its `i`-th
//! coordinate is negative exactly when `s_i` is a left descent, which gives
//! canonical words, lengths and the Bruhat order without multiplication
//! tables. The same code serves Weyl groups, affine Weyl groups and the
//! reflection subgroups produced by the endoscopy module.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::rootsys::{is_finite_type, CartanType, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("elements belong to different Coxeter systems")]
    MixedSystems,
    #[error("unknown generator label {0}")]
    UnknownGenerator(u32),
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
    #[error("the group is infinite; a length bound is required")]
    Unbounded,
    #[error("operation requires an affine Weyl group")]
    NotAffine,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not a generalized Cartan matrix: {0}")]
    InvalidMatrix(String),
}

/// Provenance of a Coxeter system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemKind {
    /// Weyl group of a finite root datum; generator `i` is the simple
    /// reflection of node `i`.
    Weyl { cartan_type: CartanType, rank: usize },
    /// Affine Weyl group `W x| coroot lattice`; generator 0 is the affine
    /// reflection and generator `i >= 1` is finite node `i - 1`.
    Affine { cartan_type: CartanType, rank: usize },
    /// Any other system, e.g. an endoscopic reflection subgroup.
    General,
}

#[derive(Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    kind: SystemKind,
    cartan: Vec<Vec<i64>>,
    coxeter: Vec<Vec<u32>>,
    finite: bool,
    labels: Vec<u32>,
    frame: Option<RootDatum>,
}

impl CoxeterSystem {
    /// Weyl group of a finite root datum.
    pub fn weyl(datum: &RootDatum) -> Arc<Self> {
        let labels = (1..=datum.rank() as u32).collect();
        Arc::new(Self::build(
            SystemKind::Weyl {
                cartan_type: datum.cartan_type(),
                rank: datum.rank(),
            },
            datum.cartan_matrix().to_vec(),
            labels,
            None,
        ))
    }

    /// Affine Weyl group generated by the finite simple reflections and
    /// `s_0 = t_{theta^vee} s_theta` for the highest root `theta`.
    pub fn affine(datum: &RootDatum) -> Arc<Self> {
        let n = datum.rank();
        let theta = datum.highest_root();
        let theta_co = datum.highest_coroot_of_highest_root();
        let mut b = vec![vec![0i64; n + 1]; n + 1];
        b[0][0] = 2;
        for j in 0..n {
            let e = datum.simple_root(j);
            b[0][j + 1] = -datum.pair_int(&e, theta_co);
            b[j + 1][0] = -datum.pair_int(theta, &datum.simple_coroot(j));
            for i in 0..n {
                b[i + 1][j + 1] = datum.cartan_matrix()[i][j];
            }
        }
        let labels = (0..=n as u32).collect();
        Arc::new(Self::build(
            SystemKind::Affine {
                cartan_type: datum.cartan_type(),
                rank: n,
            },
            b,
            labels,
            Some(datum.clone()),
        ))
    }

    /// System of an arbitrary generalized Cartan matrix; generators are
    /// labelled `1..=rank`.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Arc<Self>, CoxeterError> {
        let n = cartan.len();
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n {
                return Err(CoxeterError::InvalidMatrix(format!("row {i} has length {}", row.len())));
            }
            if row[i] != 2 {
                return Err(CoxeterError::InvalidMatrix(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..n {
                if i != j && (row[j] > 0 || (row[j] == 0) != (cartan[j][i] == 0)) {
                    return Err(CoxeterError::InvalidMatrix(format!("bad entry ({i},{j})")));
                }
            }
        }
        let labels = (1..=n as u32).collect();
        Ok(Arc::new(Self::build(SystemKind::General, cartan, labels, None)))
    }

    fn build(kind: SystemKind, cartan: Vec<Vec<i64>>, labels: Vec<u32>, frame: Option<RootDatum>) -> Self {
        let n = cartan.len();
        let coxeter = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            1
                        } else {
                            match cartan[i][j] * cartan[j][i] {
                                0 => 2,
                                1 => 3,
                                2 => 4,
                                3 => 6,
                                _ => 0,
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        let finite = match kind {
            SystemKind::Weyl { .. } => true,
            SystemKind::Affine { .. } => false,
            SystemKind::General => is_finite_type(&cartan),
        };
        Self {
            kind,
            cartan,
            coxeter,
            finite,
            labels,
            frame,
        }
    }

    pub fn kind(&self) -> &SystemKind {
        &self.kind
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Orders `m(i, j)`; `0` stands for infinity.
    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    pub fn is_affine(&self) -> bool {
        matches!(self.kind, SystemKind::Affine { .. })
    }

    /// Finite root datum underlying an affine system.
    pub fn affine_frame(&self) -> Option<&RootDatum> {
        self.frame.as_ref()
    }

    /// Printed label of each generator.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn generator_of_label(&self, label: u32) -> Result<usize, CoxeterError> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(CoxeterError::UnknownGenerator(label))
    }

    /// Token identifying the group in cache files.
    pub fn cache_tag(&self) -> (String, usize) {
        match &self.kind {
            SystemKind::Weyl { cartan_type, rank } => (format!("{cartan_type}"), *rank),
            SystemKind::Affine { cartan_type, rank } => (format!("{cartan_type}~"), *rank),
            SystemKind::General => {
                let mut s = String::from("M");
                for (k, m) in self.coxeter.iter().flatten().enumerate() {
                    if k > 0 {
                        s.push('.');
                    }
                    s.push_str(&format!("{m}"));
                }
                (s, self.rank())
            }
        }
    }

    pub(crate) fn rho_key(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    /// Left action of generator `i` on a key.
    pub(crate) fn act_key(&self, i: usize, key: &mut [i64]) {
        let c = key[i];
        if c != 0 {
            for (j, k) in key.iter_mut().enumerate() {
                *k -= c * self.cartan[j][i];
            }
        }
    }

    pub(crate) fn key_of_word(&self, word: &[usize]) -> Vec<i64> {
        let mut key = self.rho_key();
        for &i in word.iter().rev() {
            self.act_key(i, &mut key);
        }
        key
    }

    /// Lexicographically least reduced word of the element with this key.
    pub(crate) fn word_of_key(&self, key: &[i64]) -> Vec<usize> {
        let mut key = key.to_vec();
        let mut word = Vec::new();
        while let Some(i) = key.iter().position(|&c| c < 0) {
            word.push(i);
            self.act_key(i, &mut key);
        }
        word
    }

    pub(crate) fn element_from_key(self: &Arc<Self>, key: Vec<i64>) -> CoxeterElement {
        let word = self.word_of_key(&key);
        CoxeterElement {
            system: Arc::clone(self),
            word,
            key,
        }
    }

    pub fn identity(self: &Arc<Self>) -> CoxeterElement {
        CoxeterElement {
            system: Arc::clone(self),
            word: Vec::new(),
            key: self.rho_key(),
        }
    }

    pub fn generator(self: &Arc<Self>, i: usize) -> Result<CoxeterElement, CoxeterError> {
        self.element(&[i])
    }

    /// Canonical element of an arbitrary (not necessarily reduced) word of
    /// generator indices.
    pub fn element(self: &Arc<Self>, word: &[usize]) -> Result<CoxeterElement, CoxeterError> {
        if let Some(&bad) = word.iter().find(|&&i| i >= self.rank()) {
            return Err(CoxeterError::GeneratorOutOfRange(bad));
        }
        Ok(self.element_from_key(self.key_of_word(word)))
    }

    /// Canonical element of a word written in generator labels.
    pub fn element_from_labels(self: &Arc<Self>, labels: &[u32]) -> Result<CoxeterElement, CoxeterError> {
        let word = labels
            .iter()
            .map(|&l| self.generator_of_label(l))
            .collect::<Result<Vec<_>, _>>()?;
        self.element(&word)
    }

    /// All elements of length at most `bound`, sorted by length and then
    /// canonical word. Without a bound the group must be finite.
    pub fn elements_up_to(self: &Arc<Self>, bound: Option<usize>) -> Result<Vec<CoxeterElement>, CoxeterError> {
        if bound.is_none() && !self.finite {
            return Err(CoxeterError::Unbounded);
        }
        let mut out = vec![self.identity()];
        let mut layer: BTreeSet<Vec<i64>> = BTreeSet::new();
        layer.insert(self.rho_key());
        let mut len = 0;
        while !layer.is_empty() && bound.map_or(true, |b| len < b) {
            let mut next = BTreeSet::new();
            for key in &layer {
                for i in 0..self.rank() {
                    if key[i] > 0 {
                        let mut k = key.clone();
                        self.act_key(i, &mut k);
                        next.insert(k);
                    }
                }
            }
            let mut elems: Vec<CoxeterElement> = next.iter().map(|k| self.element_from_key(k.clone())).collect();
            elems.sort();
            out.extend(elems);
            layer = next;
            len += 1;
        }
        Ok(out)
    }

    /// Group order of a finite system.
    pub fn order(self: &Arc<Self>) -> Result<usize, CoxeterError> {
        Ok(self.elements_up_to(None)?.len())
    }

    /// Longest element of the parabolic subgroup `W_J`; `W_J` must be finite.
    pub fn parabolic_longest(self: &Arc<Self>, j: &[usize]) -> Result<CoxeterElement, CoxeterError> {
        self.check_subset(j)?;
        let sub: Vec<Vec<i64>> = j.iter().map(|&a| j.iter().map(|&b| self.cartan[a][b]).collect()).collect();
        if !sub.is_empty() && !is_finite_type(&sub) {
            return Err(CoxeterError::Unbounded);
        }
        let mut w = self.identity();
        while let Some(&s) = j.iter().find(|&&s| !w.has_right_descent(s)) {
            w = w.right_mul(s);
        }
        Ok(w)
    }

    /// Longest element of a finite system.
    pub fn longest_element(self: &Arc<Self>) -> Result<CoxeterElement, CoxeterError> {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.parabolic_longest(&all)
    }

    fn check_subset(&self, j: &[usize]) -> Result<(), CoxeterError> {
        match j.iter().find(|&&s| s >= self.rank()) {
            Some(&bad) => Err(CoxeterError::GeneratorOutOfRange(bad)),
            None => Ok(()),
        }
    }
}

/// A group element in canonical form.
#[derive(Clone)]
pub struct CoxeterElement {
    system: Arc<CoxeterSystem>,
    word: Vec<usize>,
    key: Vec<i64>,
}

impl CoxeterElement {
    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    /// Lexicographically least reduced word, as generator indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Canonical word in generator labels.
    pub fn labels(&self) -> Vec<u32> {
        self.word.iter().map(|&i| self.system.labels[i]).collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// The vector `w(rho)` identifying the element.
    pub fn key(&self) -> &[i64] {
        &self.key
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn same_system(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.system, &other.system) || *self.system == *other.system
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        self.key[i] < 0
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.key.len()).filter(|&i| self.key[i] < 0).collect()
    }

    /// `w(alpha_i)` is negative.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let b = &self.system.cartan;
        let mut root = vec![0i64; b.len()];
        root[i] = 1;
        for &j in self.word.iter().rev() {
            let p: i64 = root.iter().enumerate().map(|(k, &r)| b[j][k] * r).sum();
            root[j] -= p;
        }
        root.iter().all(|&c| c <= 0)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.key.len()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// `s_i w`.
    pub fn left_mul(&self, i: usize) -> Self {
        let mut key = self.key.clone();
        self.system.act_key(i, &mut key);
        self.system.element_from_key(key)
    }

    /// `w s_i`.
    pub fn right_mul(&self, i: usize) -> Self {
        let mut word = self.word.clone();
        word.push(i);
        self.system.element_from_key(self.system.key_of_word(&word))
    }

    pub fn inverse(&self) -> Self {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        self.system.element_from_key(self.system.key_of_word(&rev))
    }
}

impl PartialEq for CoxeterElement {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key && self.same_system(other)
    }
}

impl Eq for CoxeterElement {}

impl Hash for CoxeterElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

/// Orders by length, then canonical word.
impl Ord for CoxeterElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for CoxeterElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterElement({self})")
    }
}

/// `e` for the identity, otherwise comma-separated generator labels.
impl fmt::Display for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.labels().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Canonical form of `ab`.
pub fn multiply(a: &CoxeterElement, b: &CoxeterElement) -> Result<CoxeterElement, CoxeterError> {
    if !a.same_system(b) {
        return Err(CoxeterError::MixedSystems);
    }
    let mut key = b.key.clone();
    for &i in a.word.iter().rev() {
        a.system.act_key(i, &mut key);
    }
    Ok(a.system.element_from_key(key))
}

/// Bruhat order `y <= w`, by peeling left descents of `w`.
pub fn bruhat_leq(y: &CoxeterElement, w: &CoxeterElement) -> Result<bool, CoxeterError> {
    if !y.same_system(w) {
        return Err(CoxeterError::MixedSystems);
    }
    Ok(bruhat_leq_keys(&w.system, &y.key, &w.key))
}

pub(crate) fn bruhat_leq_keys(system: &CoxeterSystem, y: &[i64], w: &[i64]) -> bool {
    let mut y = y.to_vec();
    let mut w = w.to_vec();
    let mut ly = system.word_of_key(&y).len();
    let mut lw = system.word_of_key(&w).len();
    while let Some(s) = w.iter().position(|&c| c < 0) {
        if ly > lw {
            return false;
        }
        if y[s] < 0 {
            system.act_key(s, &mut y);
            ly -= 1;
        }
        system.act_key(s, &mut w);
        lw -= 1;
    }
    y.iter().all(|&c| c == 1)
}

/// Minimal-length representatives of the cosets `w W_J`.
pub fn parabolic_quotient(
    system: &Arc<CoxeterSystem>,
    j: &[usize],
    length_bound: Option<usize>,
) -> Result<Vec<CoxeterElement>, CoxeterError> {
    system.check_subset(j)?;
    Ok(system
        .elements_up_to(length_bound)?
        .into_iter()
        .filter(|w| j.iter().all(|&s| !w.has_right_descent(s)))
        .collect())
}

/// Minimal representative of `w W_J`.
pub fn min_coset_rep(w: &CoxeterElement, j: &[usize]) -> CoxeterElement {
    let mut w = w.clone();
    while let Some(&s) = j.iter().find(|&&s| w.has_right_descent(s)) {
        w = w.right_mul(s);
    }
    w
}

/// Minimal element of the double coset `W_K w W_J`.
pub fn min_double_coset_rep(k: &[usize], w: &CoxeterElement, j: &[usize]) -> CoxeterElement {
    let mut w = w.clone();
    loop {
        if let Some(&s) = k.iter().find(|&&s| w.has_left_descent(s)) {
            w = w.left_mul(s);
        } else if let Some(&s) = j.iter().find(|&&s| w.has_right_descent(s)) {
            w = w.right_mul(s);
        } else {
            return w;
        }
    }
}

/// All elements of an affine Weyl group of length at most `bound`.
pub fn affine_elements_up_to(system: &Arc<CoxeterSystem>, bound: usize) -> Result<Vec<CoxeterElement>, CoxeterError> {
    if !system.is_affine() {
        return Err(CoxeterError::NotAffine);
    }
    system.elements_up_to(Some(bound))
}

/// Alcove-walk data for an affine system: a scaled interior point of the
/// fundamental alcove is pushed around by the affine generators.
struct AlcoveFrame<'a> {
    datum: &'a RootDatum,
    scale: i64,
}

impl<'a> AlcoveFrame<'a> {
    fn new(system: &'a CoxeterSystem) -> Result<Self, CoxeterError> {
        let datum = system.frame.as_ref().ok_or(CoxeterError::NotAffine)?;
        let height = RootDatum::height(datum.highest_root());
        Ok(Self {
            datum,
            scale: 2 * (height + 1),
        })
    }

    /// `2 rho`, the image of the base point under the identity.
    fn base(&self) -> Vec<i64> {
        let two_rho: Vec<i64> = self.datum.rho().iter().map(|r| (r * 2).to_integer()).collect();
        two_rho
    }

    fn is_descent(&self, gen: usize, q: &[i64]) -> bool {
        if gen == 0 {
            self.datum.pair_int(self.datum.highest_root(), q) > self.scale
        } else {
            self.datum.pair_int(&self.datum.simple_root(gen - 1), q) < 0
        }
    }

    fn apply(&self, gen: usize, q: &mut Vec<i64>) {
        if gen == 0 {
            let theta = self.datum.highest_root();
            let theta_co = self.datum.highest_coroot_of_highest_root();
            let p = self.datum.pair_int(theta, q);
            for (x, &c) in q.iter_mut().zip(theta_co) {
                *x += (self.scale - p) * c;
            }
        } else {
            *q = self.datum.reflect(gen - 1, q).expect("rank checked");
        }
    }

    fn word_of_point(&self, mut q: Vec<i64>) -> Vec<usize> {
        let n = self.datum.rank();
        let mut word = Vec::new();
        while let Some(g) = (0..=n).find(|&g| self.is_descent(g, &q)) {
            word.push(g);
            self.apply(g, &mut q);
        }
        word
    }
}

/// The translation `t_mu` for `mu` in the coroot lattice.
pub fn translation_element(system: &Arc<CoxeterSystem>, mu: &[i64]) -> Result<CoxeterElement, CoxeterError> {
    let frame = AlcoveFrame::new(system)?;
    let n = frame.datum.rank();
    if mu.len() != n {
        return Err(CoxeterError::DimensionMismatch { expected: n, got: mu.len() });
    }
    let q: Vec<i64> = frame
        .base()
        .iter()
        .zip(mu)
        .map(|(b, m)| b + frame.scale * m)
        .collect();
    system.element(&frame.word_of_point(q))
}

/// `x = t_mu u` with `u` in the finite Weyl group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineDecomposition {
    /// Canonical word of `u` in the finite generators (0-based finite nodes).
    pub finite_word: Vec<usize>,
    /// `mu`, in the simple-coroot basis.
    pub translation: Vec<i64>,
}

/// Splits an affine Weyl group element into finite and translation parts.
pub fn affine_decomposition(x: &CoxeterElement) -> Result<AffineDecomposition, CoxeterError> {
    let frame = AlcoveFrame::new(&x.system)?;
    let d = frame.datum;
    let n = d.rank();
    let ident = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    // Columns of the linear part and the translation part of the affine map.
    let mut cols: Vec<Vec<i64>> = (0..n).map(ident).collect();
    let mut shift = vec![0i64; n];
    let reflect_theta = |v: &[i64]| {
        let p = d.pair_int(d.highest_root(), v);
        v.iter()
            .zip(d.highest_coroot_of_highest_root())
            .map(|(a, &c)| a - p * c)
            .collect::<Vec<i64>>()
    };
    for &g in x.word.iter().rev() {
        if g == 0 {
            cols = cols.iter().map(|c| reflect_theta(c)).collect();
            shift = reflect_theta(&shift);
            for (s, &c) in shift.iter_mut().zip(d.highest_coroot_of_highest_root()) {
                *s += c;
            }
        } else {
            cols = cols.iter().map(|c| d.reflect(g - 1, c).expect("rank")).collect();
            shift = d.reflect(g - 1, &shift).expect("rank");
        }
    }
    let base = frame.base();
    let mut image = vec![0i64; n];
    for (c, &b) in cols.iter().zip(&base) {
        for (im, &x) in image.iter_mut().zip(c) {
            *im += b * x;
        }
    }
    let mut finite_word = Vec::new();
    while let Some(i) = (0..n).find(|&i| d.pair_int(&d.simple_root(i), &image) < 0) {
        finite_word.push(i);
        image = d.reflect(i, &image).expect("rank");
    }
    Ok(AffineDecomposition {
        finite_word,
        translation: shift,
    })
}

/// Length of `t_mu` from the root pairings: `sum_{alpha > 0} |<alpha, mu>|`.
pub fn translation_length(datum: &RootDatum, mu: &[i64]) -> usize {
    datum
        .positive_roots()
        .iter()
        .map(|a| datum.pair_int(a, mu).unsigned_abs() as usize)
        .sum()
}

/// Bruhat order restricted to a list of elements, as a boolean matrix.
pub fn bruhat_matrix(elems: &[CoxeterElement]) -> Vec<Vec<bool>> {
    elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| bruhat_leq_keys(&a.system, &a.key, &b.key))
                .collect()
        })
        .collect()
}

/// Index of every element in a list, keyed by its identifying vector.
pub fn index_by_key(elems: &[CoxeterElement]) -> BTreeMap<Vec<i64>, usize> {
    elems.iter().enumerate().map(|(i, e)| (e.key.clone(), i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weyl(t: CartanType, n: usize) -> Arc<CoxeterSystem> {
        CoxeterSystem::weyl(&RootDatum::new(t, n).unwrap())
    }

    fn affine(t: CartanType, n: usize) -> Arc<CoxeterSystem> {
        CoxeterSystem::affine(&RootDatum::new(t, n).unwrap())
    }

    #[test]
    fn group_orders() {
        assert_eq!(weyl(CartanType::A, 2).order().unwrap(), 6);
        assert_eq!(weyl(CartanType::B, 2).order().unwrap(), 8);
        assert_eq!(weyl(CartanType::G, 2).order().unwrap(), 12);
        assert_eq!(weyl(CartanType::A, 3).order().unwrap(), 24);
        assert_eq!(weyl(CartanType::B, 3).order().unwrap(), 48);
        assert_eq!(weyl(CartanType::D, 4).order().unwrap(), 192);
        assert_eq!(weyl(CartanType::F, 4).order().unwrap(), 1152);
    }

    #[test]
    fn a2_multiplication() {
        let w = weyl(CartanType::A, 2);
        let s1s2 = w.element(&[0, 1]).unwrap();
        let sq = multiply(&s1s2, &s1s2).unwrap();
        assert_eq!(sq.word(), &[1, 0]);
        let s1 = w.generator(0).unwrap();
        assert!(multiply(&s1, &s1).unwrap().is_identity());
        assert_eq!(multiply(&w.identity(), &s1s2).unwrap(), s1s2);
        let w0 = w.element(&[1, 0, 1]).unwrap();
        assert_eq!(w0.word(), &[0, 1, 0]);
    }

    #[test]
    fn mixed_systems_rejected() {
        let a = weyl(CartanType::A, 2).identity();
        let b = weyl(CartanType::B, 2).identity();
        assert_eq!(multiply(&a, &b), Err(CoxeterError::MixedSystems));
        assert_eq!(bruhat_leq(&a, &b), Err(CoxeterError::MixedSystems));
    }

    #[test]
    fn bruhat_examples() {
        let w = weyl(CartanType::A, 2);
        let s1 = w.generator(0).unwrap();
        let s2 = w.generator(1).unwrap();
        let w0 = w.longest_element().unwrap();
        assert!(bruhat_leq(&w.identity(), &w0).unwrap());
        assert!(!bruhat_leq(&s1, &s2).unwrap());
        assert!(!bruhat_leq(&s2, &s1).unwrap());
        assert!(bruhat_leq(&s1, &w0).unwrap());
        assert!(!bruhat_leq(&w0, &s1).unwrap());
    }

    #[test]
    fn quotient_sizes() {
        let a2 = weyl(CartanType::A, 2);
        assert_eq!(parabolic_quotient(&a2, &[0], None).unwrap().len(), 3);
        assert_eq!(parabolic_quotient(&a2, &[], None).unwrap().len(), 6);
        let b2 = weyl(CartanType::B, 2);
        assert_eq!(parabolic_quotient(&b2, &[1], None).unwrap().len(), 4);
        let aff = affine(CartanType::A, 1);
        assert_eq!(parabolic_quotient(&aff, &[1], None), Err(CoxeterError::Unbounded));
    }

    #[test]
    fn affine_a1_small_lengths() {
        let aff = affine(CartanType::A, 1);
        assert_eq!(affine_elements_up_to(&aff, 0).unwrap().len(), 1);
        let two = affine_elements_up_to(&aff, 2).unwrap();
        let words: Vec<String> = two.iter().map(|e| format!("{e}")).collect();
        assert_eq!(words, ["e", "0", "1", "0,1", "1,0"]);
        assert!(!aff.is_finite());
        assert_eq!(aff.coxeter_matrix()[0][1], 0);
        assert_eq!(affine_elements_up_to(&weyl(CartanType::A, 1), 2), Err(CoxeterError::NotAffine));
    }

    #[test]
    fn translations() {
        let aff = affine(CartanType::A, 1);
        let t = translation_element(&aff, &[1]).unwrap();
        assert_eq!(t.length(), 2);
        assert_eq!(format!("{t}"), "0,1");
        assert!(translation_element(&aff, &[0]).unwrap().is_identity());
        let dec = affine_decomposition(&t).unwrap();
        assert!(dec.finite_word.is_empty());
        assert_eq!(dec.translation, vec![1]);
        let aff2 = affine(CartanType::A, 2);
        let d2 = RootDatum::new(CartanType::A, 2).unwrap();
        assert_eq!(translation_element(&aff2, &[1, 0]).unwrap().length(), 4);
        assert_eq!(translation_length(&d2, &[1, 0]), 4);
        assert_eq!(translation_element(&weyl(CartanType::A, 2), &[1, 0]), Err(CoxeterError::NotAffine));
    }

    #[test]
    fn s0_decomposes_as_translated_reflection() {
        let d = RootDatum::new(CartanType::B, 2).unwrap();
        let aff = CoxeterSystem::affine(&d);
        let s0 = aff.generator(0).unwrap();
        let dec = affine_decomposition(&s0).unwrap();
        assert_eq!(dec.translation, d.highest_coroot_of_highest_root());
        let w = CoxeterSystem::weyl(&d);
        let u = w.element(&dec.finite_word).unwrap();
        assert_eq!(u.length(), 3);
    }

    #[test]
    fn longest_and_parabolic_longest() {
        let a3 = weyl(CartanType::A, 3);
        assert_eq!(a3.longest_element().unwrap().length(), 6);
        assert_eq!(a3.parabolic_longest(&[0, 1]).unwrap().length(), 3);
        let aff = affine(CartanType::A, 1);
        assert_eq!(aff.parabolic_longest(&[0, 1]), Err(CoxeterError::Unbounded));
        assert_eq!(aff.parabolic_longest(&[1]).unwrap().length(), 1);
    }

    #[test]
    fn cache_tags() {
        assert_eq!(weyl(CartanType::A, 3).cache_tag(), ("A".into(), 3));
        assert_eq!(affine(CartanType::A, 1).cache_tag(), ("A~".into(), 1));
        let g = CoxeterSystem::from_cartan(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(g.cache_tag(), ("M1.3.3.1".into(), 2));
        assert!(CoxeterSystem::from_cartan(vec![vec![2, 1], vec![-1, 2]]).is_err());
    }

    #[test]
    fn labels_round_trip() {
        let aff = affine(CartanType::A, 2);
        let e = aff.element_from_labels(&[0, 1, 2]).unwrap();
        assert_eq!(e.labels(), vec![0, 1, 2]);
        assert_eq!(aff.element_from_labels(&[7]), Err(CoxeterError::UnknownGenerator(7)));
        let a3 = weyl(CartanType::A, 3);
        let e = a3.element_from_labels(&[2, 1, 3, 2]).unwrap();
        assert_eq!(e.word(), &[1, 0, 2, 1]);
        assert_eq!(format!("{e}"), "2,1,3,2");
    }

    #[test]
    fn double_coset_minimum() {
        let a2 = weyl(CartanType::A, 2);
        let w0 = a2.longest_element().unwrap();
        assert_eq!(min_double_coset_rep(&[0], &w0, &[1]).length(), 2);
        let s1s2 = a2.element(&[0, 1]).unwrap();
        assert!(min_double_coset_rep(&[0], &s1s2, &[1]).is_identity());
        assert_eq!(min_coset_rep(&w0, &[0]).length(), 2);
    }
}
