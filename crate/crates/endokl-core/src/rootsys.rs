//! Finite-type root data, pairings, reflections and the Langlands dual.
//!
//! All coweights live in the simple-coroot basis, so the coroot lattice is
//! `Z^rank`. Roots are written in the simple-root basis. The Cartan matrix
//! follows `a[i][j] = <alpha_i^vee, alpha_j>`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub const ALL: [CartanType; 7] = [
        CartanType::A,
        CartanType::B,
        CartanType::C,
        CartanType::D,
        CartanType::E,
        CartanType::F,
        CartanType::G,
    ];

    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|t| t.letter() == c.to_ascii_uppercase())
    }

    /// Type of the transposed Cartan matrix.
    pub fn dual(self) -> Self {
        match self {
            CartanType::B => CartanType::C,
            CartanType::C => CartanType::B,
            t => t,
        }
    }

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        }
    }

    /// Standard Cartan matrix (Bourbaki node numbering).
    pub fn cartan_matrix(self, rank: usize) -> Result<Vec<Vec<i64>>, RootError> {
        if !self.is_valid_rank(rank) {
            return Err(RootError::InvalidType {
                letter: self.letter(),
                rank,
            });
        }
        let n = rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self {
            CartanType::A | CartanType::B | CartanType::C | CartanType::F | CartanType::G => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            CartanType::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            CartanType::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        match self {
            CartanType::B => a[n - 1][n - 2] = -2,
            CartanType::C => a[n - 2][n - 1] = -2,
            CartanType::F => a[2][1] = -2,
            CartanType::G => a[1][0] = -3,
            _ => {}
        }
        Ok(a)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for CartanType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Self::from_letter(c).ok_or_else(|| RootError::UnknownType(s.into())),
            _ => Err(RootError::UnknownType(s.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("invalid Cartan type {letter}{rank}")]
    InvalidType { letter: char, rank: usize },
    #[error("unknown Cartan type '{0}'")]
    UnknownType(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("denominator must be a positive integer, got {0}")]
    NonPositiveDenominator(i64),
    #[error("matrix is not a finite-type Cartan matrix of type {0}")]
    NotFiniteType(char),
}

/// `lambda = mu / n` with integral `mu` in the coroot lattice.
///
/// `mu` and `n` are stored exactly as given; no gcd normalisation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalCoweight {
    pub mu: Vec<i64>,
    pub n: i64,
}

impl RationalCoweight {
    pub fn new(mu: Vec<i64>, n: i64) -> Result<Self, RootError> {
        if n < 1 {
            return Err(RootError::NonPositiveDenominator(n));
        }
        Ok(Self { mu, n })
    }

    pub fn integral(mu: Vec<i64>) -> Self {
        Self { mu, n: 1 }
    }

    pub fn rank(&self) -> usize {
        self.mu.len()
    }

    /// Coordinates as exact rationals.
    pub fn coords(&self) -> Vec<Rational> {
        self.mu.iter().map(|&m| Rational::new(m, self.n)).collect()
    }

    /// Writes `coords` over their least common denominator.
    pub fn from_coords(coords: &[Rational]) -> Self {
        let n = coords
            .iter()
            .fold(1i64, |acc, c| num_integer::lcm(acc, *c.denom()));
        let mu = coords.iter().map(|c| (c * Rational::from_integer(n)).to_integer()).collect();
        Self { mu, n }
    }
}

/// Prints `c1,c2,.../n`.
impl fmt::Display for RationalCoweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.mu.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "/{}", self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    cartan_type: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    rho: Vec<Rational>,
}

impl RootDatum {
    /// Root datum of the simply connected group of the given finite type.
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<Self, RootError> {
        let cartan = cartan_type.cartan_matrix(rank)?;
        Ok(Self::from_parts(cartan_type, cartan))
    }

    /// Builds a datum from a Cartan matrix known to be of the given type,
    /// possibly with permuted nodes.
    pub fn from_cartan_matrix(
        cartan_type: CartanType,
        cartan: Vec<Vec<i64>>,
    ) -> Result<Self, RootError> {
        let rank = cartan.len();
        let standard = cartan_type.cartan_matrix(rank)?;
        if permutation_to(&cartan, &standard).is_none() {
            return Err(RootError::NotFiniteType(cartan_type.letter()));
        }
        Ok(Self::from_parts(cartan_type, cartan))
    }

    fn from_parts(cartan_type: CartanType, cartan: Vec<Vec<i64>>) -> Self {
        let rank = cartan.len();
        let (positive_roots, positive_coroots) = generate_positive_roots(&cartan);
        let mut rho = vec![Rational::zero(); rank];
        for c in &positive_coroots {
            for (r, &x) in rho.iter_mut().zip(c) {
                *r += Rational::new(x, 2);
            }
        }
        Self {
            cartan_type,
            rank,
            cartan,
            positive_roots,
            positive_coroots,
            rho,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in the simple-root basis, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive coroots in the simple-coroot basis; entry `k` is the coroot
    /// of `positive_roots()[k]`.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// Half-sum of the positive coroots.
    pub fn rho(&self) -> &[Rational] {
        &self.rho
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        unit(self.rank, i)
    }

    pub fn simple_coroot(&self, i: usize) -> Vec<i64> {
        unit(self.rank, i)
    }

    /// Index of the highest root in `positive_roots()`.
    pub fn highest_root_index(&self) -> usize {
        self.positive_roots.len() - 1
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.positive_roots[self.highest_root_index()]
    }

    pub fn highest_coroot_of_highest_root(&self) -> &[i64] {
        &self.positive_coroots[self.highest_root_index()]
    }

    /// Position of a positive root, if it is one.
    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.positive_roots.iter().position(|r| r.as_slice() == root)
    }

    /// The Langlands dual datum: transposed Cartan matrix.
    pub fn dual(&self) -> RootDatum {
        let n = self.rank;
        let t = (0..n)
            .map(|i| (0..n).map(|j| self.cartan[j][i]).collect())
            .collect();
        Self::from_parts(self.cartan_type.dual(), t)
    }

    fn check_len(&self, got: usize) -> Result<(), RootError> {
        if got != self.rank {
            return Err(RootError::DimensionMismatch {
                expected: self.rank,
                got,
            });
        }
        Ok(())
    }

    /// `<root, coweight>` for a root in the simple-root basis and an integral
    /// coweight in the simple-coroot basis.
    pub fn pair_int(&self, root: &[i64], coweight: &[i64]) -> i64 {
        let mut s = 0;
        for (k, &c) in coweight.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, &a) in root.iter().enumerate() {
                s += c * self.cartan[k][j] * a;
            }
        }
        s
    }

    /// `<root, x>` for a rational coweight given by coordinates.
    pub fn pair_rational(&self, root: &[i64], x: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (k, c) in x.iter().enumerate() {
            let t: i64 = root.iter().enumerate().map(|(j, &a)| self.cartan[k][j] * a).sum();
            s += c * Rational::from_integer(t);
        }
        s
    }

    /// Exact pairing of a root with `lambda = mu / n`.
    pub fn pairing(&self, root: &[i64], lambda: &RationalCoweight) -> Result<Rational, RootError> {
        self.check_len(root.len())?;
        self.check_len(lambda.mu.len())?;
        Ok(Rational::new(self.pair_int(root, &lambda.mu), lambda.n))
    }

    /// Simple reflection `s_i(v) = v - <alpha_i, v> alpha_i^vee`.
    pub fn reflect(&self, i: usize, v: &[i64]) -> Result<Vec<i64>, RootError> {
        self.check_len(v.len())?;
        if i >= self.rank {
            return Err(RootError::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        let p: i64 = v.iter().enumerate().map(|(k, &c)| c * self.cartan[k][i]).sum();
        let mut out = v.to_vec();
        out[i] -= p;
        Ok(out)
    }

    /// Simple reflection on rational coordinates.
    pub fn reflect_rational(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let p: Rational = v
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rational::from_integer(self.cartan[k][i]))
            .sum();
        let mut out = v.to_vec();
        out[i] -= p;
        out
    }

    /// Reflection in the positive root with index `k`, on rational coordinates.
    pub fn reflect_by_root(&self, k: usize, v: &[Rational]) -> Vec<Rational> {
        let p = self.pair_rational(&self.positive_roots[k], v);
        v.iter()
            .zip(&self.positive_coroots[k])
            .map(|(x, &c)| x - p * Rational::from_integer(c))
            .collect()
    }

    /// Applies the Weyl group word `s_{w[0]} ... s_{w[k-1]}` to `v`.
    pub fn act_word(&self, word: &[usize], v: &[Rational]) -> Vec<Rational> {
        let mut x = v.to_vec();
        for &i in word.iter().rev() {
            x = self.reflect_rational(i, &x);
        }
        x
    }

    /// `(x, y)` in the invariant form normalised so that the coroots of long
    /// roots have square length 2.
    pub fn form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let d = self.coroot_square_halves();
        let mut s = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += xi * yj * Rational::from_integer(self.cartan[i][j] * d[j]);
            }
        }
        s
    }

    /// `(alpha_j^vee, alpha_j^vee) / 2` for each simple coroot, minimal
    /// positive integers making `a[i][j] d[j]` symmetric.
    pub fn coroot_square_halves(&self) -> Vec<i64> {
        symmetrizer(&self.cartan).expect("finite-type Cartan matrices are symmetrizable")
    }

    /// Height of a vector in a simple basis.
    pub fn height(v: &[i64]) -> i64 {
        v.iter().sum()
    }
}

/// `beta <= alpha` in the dominance order: `alpha - beta` is a nonnegative
/// integer combination of simple coroots.
pub fn dominance_compare(beta: &[i64], alpha: &[i64]) -> bool {
    beta.len() == alpha.len() && alpha.iter().zip(beta).all(|(a, b)| a - b >= 0)
}

/// Whether `v` lies in the cone spanned by the simple coroots.
pub fn in_positive_cone(v: &[i64]) -> bool {
    v.iter().all(|&c| c >= 0)
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Positive roots and matching coroots by closure under simple reflections.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = cartan.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut frontier: Vec<(Vec<i64>, Vec<i64>)> = (0..n).map(|i| (unit(n, i), unit(n, i))).collect();
    for (r, _) in &frontier {
        seen.insert(r.clone());
    }
    pairs.extend(frontier.iter().cloned());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (root, coroot) in &frontier {
            for i in 0..n {
                let p: i64 = (0..n).map(|j| cartan[i][j] * root[j]).sum();
                let q: i64 = (0..n).map(|j| coroot[j] * cartan[j][i]).sum();
                let mut r = root.clone();
                r[i] -= p;
                let mut c = coroot.clone();
                c[i] -= q;
                if r.iter().all(|&x| x >= 0) && !seen.contains(&r) {
                    seen.insert(r.clone());
                    next.push((r, c));
                }
            }
        }
        pairs.extend(next.iter().cloned());
        frontier = next;
    }
    pairs.sort_by(|(a, _), (b, _)| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    pairs.into_iter().unzip()
}

/// Minimal positive integers `d` with `a[i][j] d[j] = a[j][i] d[i]`, or
/// `None` if the matrix is not symmetrizable.
pub fn symmetrizer(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        let mut stack = vec![start];
        let mut component = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                if a[j][i] == 0 {
                    return None;
                }
                let dj = di * Rational::new(a[j][i], a[i][j]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                        component.push(j);
                    }
                    Some(old) if old != dj => return None,
                    Some(_) => {}
                }
            }
        }
        let l = component
            .iter()
            .fold(1i64, |acc, &i| num_integer::lcm(acc, *d[i].unwrap().denom()));
        let scaled: Vec<i64> = component
            .iter()
            .map(|&i| (d[i].unwrap() * Rational::from_integer(l)).to_integer())
            .collect();
        let g = scaled.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
        for (&i, &s) in component.iter().zip(&scaled) {
            d[i] = Some(Rational::from_integer(s / g));
        }
    }
    Some(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
}

/// Whether the symmetrised matrix is positive definite (Sylvester's test).
pub fn is_finite_type(a: &[Vec<i64>]) -> bool {
    let Some(d) = symmetrizer(a) else {
        return false;
    };
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| Rational::from_integer(a[i][j] * d[j])).collect())
        .collect();
    for k in 0..n {
        if !m[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = m[i][k] / m[k][k];
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let t = m[k][j] * f;
                m[i][j] -= t;
            }
        }
    }
    true
}

/// A permutation `p` with `a[p[i]][p[j]] == b[i][j]`, if one exists.
pub fn permutation_to(a: &[Vec<i64>], b: &[Vec<i64>]) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn extend(
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = perm.len();
        if i == a.len() {
            return true;
        }
        for cand in 0..a.len() {
            if used[cand] {
                continue;
            }
            let ok = (0..i).all(|j| a[cand][perm[j]] == b[i][j] && a[perm[j]][cand] == b[j][i])
                && a[cand][cand] == b[i][i];
            if ok {
                used[cand] = true;
                perm.push(cand);
                if extend(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[cand] = false;
            }
        }
        false
    }
    if extend(a, b, &mut perm, &mut used) {
        Some(perm)
    } else {
        None
    }
}

/// Finite type of an irreducible Cartan matrix, up to node relabelling.
pub fn identify_cartan_type(a: &[Vec<i64>]) -> Option<CartanType> {
    let n = a.len();
    CartanType::ALL.iter().copied().find(|t| {
        t.is_valid_rank(n)
            && t
                .cartan_matrix(n)
                .ok()
                .and_then(|m| permutation_to(a, &m))
                .is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn a1_basics() {
        let d = RootDatum::new(CartanType::A, 1).unwrap();
        assert_eq!(d.positive_roots().len(), 1);
        assert_eq!(d.rho(), &[r(1, 2)]);
    }

    #[test]
    fn a2_positive_roots() {
        let d = RootDatum::new(CartanType::A, 2).unwrap();
        assert_eq!(d.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(d.positive_coroots(), d.positive_roots());
    }

    #[test]
    fn g2_and_b2_roots() {
        let g = RootDatum::new(CartanType::G, 2).unwrap();
        assert_eq!(g.positive_roots().len(), 6);
        let b = RootDatum::new(CartanType::B, 2).unwrap();
        assert_eq!(b.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
        assert_eq!(b.positive_coroots(), &[vec![1, 0], vec![0, 1], vec![2, 1], vec![1, 1]]);
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(RootDatum::new(CartanType::D, 3).is_err());
        assert!(RootDatum::new(CartanType::G, 3).is_err());
        assert!(RootDatum::new(CartanType::A, 0).is_err());
        assert!("Q".parse::<CartanType>().is_err());
        assert_eq!("b".parse::<CartanType>().unwrap(), CartanType::B);
    }

    #[test]
    fn rho_pairs_to_one_with_simple_roots() {
        for (t, n) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::G, 2), (CartanType::F, 4)] {
            let d = RootDatum::new(t, n).unwrap();
            for i in 0..n {
                assert_eq!(d.pair_rational(&d.simple_root(i), d.rho()), Rational::one());
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let d = RootDatum::new(CartanType::A, 2).unwrap();
        let half_rho = RationalCoweight::new(vec![1, 1], 2).unwrap();
        assert_eq!(d.pairing(&[1, 1], &half_rho).unwrap(), Rational::one());
        let zero = RationalCoweight::integral(vec![0, 0]);
        assert_eq!(d.pairing(&[1, 0], &zero).unwrap(), Rational::zero());
        assert!(d.pairing(&[1, 0, 0], &zero).is_err());
    }

    #[test]
    fn reflection_examples() {
        let d = RootDatum::new(CartanType::A, 2).unwrap();
        assert_eq!(d.reflect(0, &[0, 1]).unwrap(), vec![1, 1]);
        assert_eq!(d.reflect(0, &[1, 0]).unwrap(), vec![-1, 0]);
        let s_rho = d.reflect_rational(1, d.rho());
        assert_eq!(s_rho, vec![r(1, 1), r(0, 1)]);
        assert!(d.reflect(2, &[0, 0]).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_compare(&[0, 0], &[1, 1]));
        assert!(!dominance_compare(&[1, 0], &[0, 1]));
        assert!(!dominance_compare(&[0, 1], &[1, 0]));
        assert!(dominance_compare(&[1, 0], &[1, 1]));
    }

    #[test]
    fn dual_is_transpose_and_involutive() {
        let b3 = RootDatum::new(CartanType::B, 3).unwrap();
        let c3 = b3.dual();
        assert_eq!(c3.cartan_type(), CartanType::C);
        assert_eq!(c3.cartan_matrix(), CartanType::C.cartan_matrix(3).unwrap().as_slice());
        assert_eq!(c3.dual(), b3);
        let g = RootDatum::new(CartanType::G, 2).unwrap();
        assert_eq!(g.dual().dual(), g);
    }

    #[test]
    fn symmetrizer_and_form() {
        let b2 = RootDatum::new(CartanType::B, 2).unwrap();
        assert_eq!(b2.coroot_square_halves(), vec![1, 2]);
        let g2 = RootDatum::new(CartanType::G, 2).unwrap();
        assert_eq!(g2.coroot_square_halves(), vec![1, 3]);
        let theta = b2.highest_coroot_of_highest_root();
        let th: Vec<Rational> = theta.iter().map(|&x| Rational::from_integer(x)).collect();
        assert_eq!(b2.form(&th, &th), Rational::from_integer(2));
    }

    #[test]
    fn finite_type_detection() {
        assert!(is_finite_type(&CartanType::E.cartan_matrix(8).unwrap()));
        assert!(!is_finite_type(&[vec![2, -2], vec![-2, 2]]));
        assert!(!is_finite_type(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]));
    }

    #[test]
    fn identify_up_to_relabelling() {
        let m = vec![vec![2, -2], vec![-1, 2]];
        assert_eq!(identify_cartan_type(&m), Some(CartanType::B));
        let c = CartanType::C.cartan_matrix(3).unwrap();
        assert_eq!(identify_cartan_type(&c), Some(CartanType::C));
        assert_eq!(identify_cartan_type(&CartanType::F.cartan_matrix(4).unwrap()), Some(CartanType::F));
    }

    #[test]
    fn coweight_display_and_coords() {
        let l = RationalCoweight::new(vec![2, 1], 3).unwrap();
        assert_eq!(alloc::format!("{l}"), "2,1/3");
        assert_eq!(RationalCoweight::from_coords(&l.coords()), l);
        assert!(RationalCoweight::new(vec![1], 0).is_err());
    }
}
