//! Serializable reports.

use serde::{Deserialize, Serialize};

use endokl_core::affine_strata::{AffineCoweight, AffineStratification, AffineStrata};
use endokl_core::coxeter::bruhat_matrix;
use endokl_core::folding::FoldingDatum;
use endokl_core::{CoxeterElement, MultiplicityMatrix, RationalCoweight, StratificationDatum};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaJson {
    pub mu: Vec<i64>,
    pub n: i64,
}

impl From<&RationalCoweight> for LambdaJson {
    fn from(l: &RationalCoweight) -> Self {
        Self { mu: l.mu.clone(), n: l.n }
    }
}

pub fn word_labels(elems: &[CoxeterElement]) -> Vec<String> {
    elems.iter().map(|w| w.to_string()).collect()
}

fn rationals(v: &[endokl_core::Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoscopyReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub lambda: LambdaJson,
    pub simple_coroots: Vec<Vec<i64>>,
    pub endoscopic_cartan: Vec<Vec<i64>>,
    pub singular: Vec<usize>,
    pub lambda_prime: Vec<String>,
    pub y: String,
    pub index_set: Vec<String>,
}

impl EndoscopyReport {
    pub fn new(sd: &StratificationDatum) -> Self {
        Self {
            cartan_type: sd.datum.cartan_type().to_string(),
            rank: sd.datum.rank(),
            lambda: (&sd.lambda).into(),
            simple_coroots: sd.simple_coroots(),
            endoscopic_cartan: sd.zeta_system.cartan().to_vec(),
            singular: sd.j_zeta.iter().map(|j| j + 1).collect(),
            lambda_prime: rationals(&sd.lambda_prime),
            y: sd.y.to_string(),
            index_set: word_labels(&sd.index_set),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub lambda: LambdaJson,
    pub alpha: Vec<i64>,
    pub labels: Vec<String>,
    pub degrees: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub lambda: LambdaJson,
    pub labels: Vec<String>,
    pub order: Vec<Vec<bool>>,
    pub entries: Vec<Vec<u64>>,
}

impl MultiplicityReport {
    pub fn new(mm: &MultiplicityMatrix) -> Self {
        Self {
            cartan_type: mm.sd.datum.cartan_type().to_string(),
            rank: mm.sd.datum.rank(),
            lambda: (&mm.sd.lambda).into(),
            labels: word_labels(mm.labels()),
            order: mm.order().to_vec(),
            entries: mm.entries.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub lambda: LambdaJson,
    pub a: i64,
    pub b: i64,
    pub level_class: String,
    pub bound: Vec<i64>,
    pub simple_roots: Vec<AffineRootJson>,
    pub labels: Vec<String>,
    pub degrees: Vec<Vec<i64>>,
    pub order: Vec<Vec<bool>>,
    /// Absent when the multiplicities were not requested or unavailable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineRootJson {
    pub root: Vec<i64>,
    pub m: i64,
}

impl AffineReport {
    pub fn new(x: &AffineCoweight, st: &AffineStratification, strata: &AffineStrata, entries: Option<Vec<Vec<u64>>>) -> Self {
        Self {
            cartan_type: st.datum.cartan_type().to_string(),
            rank: st.datum.rank(),
            lambda: (&x.finite).into(),
            a: x.a,
            b: x.b,
            level_class: strata.level.name().to_string(),
            bound: strata.bound.clone(),
            simple_roots: st
                .simples
                .iter()
                .map(|b| AffineRootJson { root: b.root.clone(), m: b.m })
                .collect(),
            labels: word_labels(&strata.elements),
            degrees: strata.elements.iter().map(|w| st.oriented_degree(w)).collect(),
            order: bruhat_matrix(&strata.elements),
            entries,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalPair {
    pub w: String,
    pub alpha: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub lambda: LambdaJson,
    pub a: i64,
    pub b: i64,
    pub level_class: String,
    pub bound: Vec<i64>,
    pub pairs: Vec<CriticalPair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldReport {
    pub source: String,
    pub sigma: Vec<usize>,
    pub d: usize,
    pub orbits: Vec<Vec<usize>>,
    pub folded_cartan: Vec<Vec<i64>>,
    pub d_i: Vec<i64>,
    /// Type of the invariant subalgebra, `null` for the flagged `A_2n` case.
    pub invariant_type: Option<String>,
    pub dual_type: Option<String>,
    pub twisted_a2n: bool,
}

impl FoldReport {
    /// `sigma` and orbits are reported with 1-based node labels.
    pub fn new(source: String, fd: &FoldingDatum) -> Self {
        let n = fd.rank();
        Self {
            source,
            sigma: fd.sigma.iter().map(|s| s + 1).collect(),
            d: fd.order,
            orbits: fd.orbits.iter().map(|o| o.iter().map(|i| i + 1).collect()).collect(),
            folded_cartan: fd.folded_cartan.clone(),
            d_i: fd.d.clone(),
            invariant_type: fd.invariant_type().map(|t| format!("{t}{n}")),
            dual_type: fd.dual_type().map(|t| format!("{t}{n}")),
            twisted_a2n: fd.kind == endokl_core::folding::FoldKind::TwistedA2n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlReport {
    pub system: String,
    pub y: String,
    pub w: String,
    pub coefficients: Vec<i64>,
    pub polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterReport {
    pub lambda: LambdaJson,
    pub label: String,
    pub bound: usize,
    /// `(depth below the highest weight, multiplicity)`, nonzero only.
    pub weights: Vec<(Vec<i64>, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub lambda: LambdaJson,
    pub labels: Vec<String>,
    pub kl: Vec<Vec<u64>>,
    pub oracle: Vec<Vec<u64>>,
    pub agree: bool,
}
