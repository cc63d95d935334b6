//! Folding a simply-laced root datum by a diagram automorphism.
//!
//! The folded simple system is indexed by the `sigma`-orbits `O_I` of the
//! source nodes. Its Cartan matrix `B[I][J] = sum_{i in O_I} A'[i][j]` for
//! any `j in O_J` is that of the invariant subalgebra, the `g^vee` side; the
//! transpose describes the Langlands dual `g`. For `A_{2n}` with the flip an
//! orbit contains adjacent nodes, the sum has a diagonal entry 1, and the
//! datum is kept but flagged.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::rootsys::{identify_cartan_type, CartanType, RootDatum, RootError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FoldingError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("the source datum is not simply laced")]
    NotSimplyLaced,
    #[error("sigma is not a permutation of the {0} source nodes")]
    NotPermutation(usize),
    #[error("sigma does not preserve the Cartan matrix")]
    NotAutomorphism,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the level k = 0 is outside the untwisting criterion")]
    CriticalLevel,
    #[error("the A_2n folding has no ordinary folded root datum")]
    TwistedA2n,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldKind {
    Ordinary,
    /// An orbit contains two adjacent nodes.
    TwistedA2n,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Twist {
    UntwistedDescribable,
    Twisted,
}

#[derive(Clone, Debug)]
pub struct FoldingDatum {
    pub source: RootDatum,
    pub sigma: Vec<usize>,
    /// `d = ord(sigma)`.
    pub order: usize,
    /// Orbits in order of their smallest node.
    pub orbits: Vec<Vec<usize>>,
    pub orbit_of: Vec<usize>,
    /// Orbit-sum Cartan matrix of the invariant subalgebra.
    pub folded_cartan: Vec<Vec<i64>>,
    /// `d_I = (alpha_I, alpha_I) / 2` with short roots of square length 2.
    pub d: Vec<i64>,
    pub kind: FoldKind,
}

impl FoldingDatum {
    pub fn rank(&self) -> usize {
        self.orbits.len()
    }

    /// `B^T`, the Cartan matrix of the Langlands dual side.
    pub fn dual_cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| self.folded_cartan[j][i]).collect()).collect()
    }

    /// Type of the invariant subalgebra.
    pub fn invariant_type(&self) -> Option<CartanType> {
        match self.kind {
            FoldKind::Ordinary => standard_type(&self.folded_cartan).or_else(|| identify_cartan_type(&self.folded_cartan)),
            FoldKind::TwistedA2n => None,
        }
    }

    /// Type of the Langlands dual of the invariant subalgebra.
    pub fn dual_type(&self) -> Option<CartanType> {
        self.invariant_type().map(CartanType::dual)
    }

    /// The invariant subalgebra as a root datum with orbit-indexed nodes.
    pub fn invariant_datum(&self) -> Result<RootDatum, FoldingError> {
        let t = self.invariant_type().ok_or(FoldingError::TwistedA2n)?;
        Ok(RootDatum::from_cartan_matrix(t, self.folded_cartan.clone())?)
    }

    /// `sigma` applied to a vector of node coefficients.
    pub fn apply_sigma(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &c) in v.iter().enumerate() {
            out[self.sigma[i]] = c;
        }
        out
    }
}

/// Type whose standard numbering reproduces `a` exactly; separates `B_2`
/// from `C_2`.
fn standard_type(a: &[Vec<i64>]) -> Option<CartanType> {
    CartanType::ALL
        .iter()
        .copied()
        .find(|t| t.cartan_matrix(a.len()).is_ok_and(|m| m == a))
}

/// Folds `source` by the node permutation `sigma` (`i -> sigma[i]`).
pub fn fold(source: &RootDatum, sigma: &[usize]) -> Result<FoldingDatum, FoldingError> {
    let a = source.cartan_matrix();
    let n = a.len();
    if a.iter().flatten().any(|&x| x < -1) {
        return Err(FoldingError::NotSimplyLaced);
    }
    let mut seen = vec![false; n];
    if sigma.len() != n || sigma.iter().any(|&s| s >= n || core::mem::replace(&mut seen[s], true)) {
        return Err(FoldingError::NotPermutation(n));
    }
    if (0..n).any(|i| (0..n).any(|j| a[sigma[i]][sigma[j]] != a[i][j])) {
        return Err(FoldingError::NotAutomorphism);
    }

    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let mut orbit = vec![start];
        let mut i = sigma[start];
        while i != start {
            orbit.push(i);
            i = sigma[i];
        }
        orbit.sort_unstable();
        for &i in &orbit {
            orbit_of[i] = orbits.len();
        }
        orbits.push(orbit);
    }
    let order = orbits.iter().fold(1usize, |acc, o| acc.lcm(&o.len()));
    let folded_cartan: Vec<Vec<i64>> = orbits
        .iter()
        .map(|oi| orbits.iter().map(|oj| oi.iter().map(|&i| a[i][oj[0]]).sum()).collect())
        .collect();
    let kind = if (0..orbits.len()).all(|i| folded_cartan[i][i] == 2) {
        FoldKind::Ordinary
    } else {
        FoldKind::TwistedA2n
    };
    // Restricting to invariants, an orbit of k orthogonal roots has square
    // length 2/k relative to a fixed root; rescale so the shortest is 2.
    let d = orbits.iter().map(|o| (order / o.len()) as i64).collect();
    Ok(FoldingDatum {
        source: source.clone(),
        sigma: sigma.to_vec(),
        order,
        orbits,
        orbit_of,
        folded_cartan,
        d,
        kind,
    })
}

/// `a(alpha) = sum_{xi in Xi} xi(alpha~)` on a representative in the
/// simple-coroot basis of the source.
pub fn coinvariant_map_a(fd: &FoldingDatum, alpha: &[i64]) -> Result<Vec<i64>, FoldingError> {
    if alpha.len() != fd.sigma.len() {
        return Err(FoldingError::DimensionMismatch {
            expected: fd.sigma.len(),
            got: alpha.len(),
        });
    }
    let mut out = vec![0; alpha.len()];
    let mut x = alpha.to_vec();
    for _ in 0..fd.order {
        for (o, c) in out.iter_mut().zip(&x) {
            *o += c;
        }
        x = fd.apply_sigma(&x);
    }
    Ok(out)
}

/// Coordinates of the class of `alpha` in the coinvariants: orbit sums.
pub fn coinvariant_class(fd: &FoldingDatum, alpha: &[i64]) -> Result<Vec<i64>, FoldingError> {
    if alpha.len() != fd.sigma.len() {
        return Err(FoldingError::DimensionMismatch {
            expected: fd.sigma.len(),
            got: alpha.len(),
        });
    }
    Ok(fd.orbits.iter().map(|o| o.iter().map(|&i| alpha[i]).sum()).collect())
}

/// Whether the fixed points at level `k` admit the untwisted description:
/// the denominator of `k` is divisible by `d`.
pub fn untwist_classify(fd: &FoldingDatum, k: Rational) -> Result<Twist, FoldingError> {
    if *k.numer() == 0 {
        return Err(FoldingError::CriticalLevel);
    }
    if k.denom() % fd.order as i64 == 0 {
        Ok(Twist::UntwistedDescribable)
    } else {
        Ok(Twist::Twisted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn src(t: CartanType, r: usize) -> RootDatum {
        RootDatum::new(t, r).unwrap()
    }

    #[test]
    fn identity_folding() {
        let d = src(CartanType::D, 4);
        let fd = fold(&d, &[0, 1, 2, 3]).unwrap();
        assert_eq!(fd.order, 1);
        assert_eq!(fd.folded_cartan, d.cartan_matrix());
        assert_eq!(fd.invariant_type(), Some(CartanType::D));
    }

    #[test]
    fn a3_flip_is_c2() {
        let fd = fold(&src(CartanType::A, 3), &[2, 1, 0]).unwrap();
        assert_eq!(fd.order, 2);
        assert_eq!(fd.folded_cartan, [vec![2, -2], vec![-1, 2]]);
        assert_eq!(fd.invariant_type(), Some(CartanType::C));
        assert_eq!(fd.dual_type(), Some(CartanType::B));
        assert_eq!(fd.d, [1, 2]);
        assert_eq!(coinvariant_map_a(&fd, &[1, 0, 0]).unwrap(), [1, 0, 1]);
        assert_eq!(coinvariant_map_a(&fd, &[0, 1, 0]).unwrap(), [0, 2, 0]);
        assert_eq!(coinvariant_map_a(&fd, &[0, 0, 0]).unwrap(), [0, 0, 0]);
    }

    #[test]
    fn d4_triality_is_g2() {
        let fd = fold(&src(CartanType::D, 4), &[2, 1, 3, 0]).unwrap();
        assert_eq!(fd.order, 3);
        assert_eq!(fd.invariant_type(), Some(CartanType::G));
        assert_eq!(*fd.d.iter().max().unwrap(), 3);
        assert!(fd.invariant_datum().is_ok());
    }

    #[test]
    fn a4_flip_is_flagged() {
        let fd = fold(&src(CartanType::A, 4), &[3, 2, 1, 0]).unwrap();
        assert_eq!(fd.kind, FoldKind::TwistedA2n);
        assert_eq!(fd.invariant_type(), None);
        assert_eq!(fd.invariant_datum().unwrap_err(), FoldingError::TwistedA2n);
    }

    #[test]
    fn rejects_bad_sigma() {
        let a3 = src(CartanType::A, 3);
        assert_eq!(fold(&a3, &[1, 0, 2]).unwrap_err(), FoldingError::NotAutomorphism);
        assert_eq!(fold(&a3, &[0, 0, 2]).unwrap_err(), FoldingError::NotPermutation(3));
        assert_eq!(fold(&src(CartanType::B, 2), &[0, 1]).unwrap_err(), FoldingError::NotSimplyLaced);
    }

    #[test]
    fn untwisting() {
        let fd = fold(&src(CartanType::A, 3), &[2, 1, 0]).unwrap();
        assert_eq!(untwist_classify(&fd, Rational::new(1, 2)), Ok(Twist::UntwistedDescribable));
        assert_eq!(untwist_classify(&fd, Rational::new(1, 3)), Ok(Twist::Twisted));
        assert_eq!(untwist_classify(&fd, Rational::from_integer(0)), Err(FoldingError::CriticalLevel));
        let id = fold(&src(CartanType::A, 3), &[0, 1, 2]).unwrap();
        assert_eq!(untwist_classify(&id, Rational::new(5, 7)), Ok(Twist::UntwistedDescribable));
    }
}
