//! Kazhdan-Lusztig polynomials with memoisation.
//!
//! Rows `x -> P_{x,w}` are computed by induction on `l(w)` from a left
//! descent `s` of `w` and `v = sw`:
//!
//! `P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_z mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}`
//!
//! where `c = 1` if `sx < x` and the sum runs over `z < v` with `sz < z`.
//! A row stores every `x <= w`, so rows double as Bruhat lower ideals.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterElement, CoxeterError, CoxeterSystem};
use crate::poly::Polynomial;

pub type KLPolynomial = Polynomial;

/// Longest `w` accepted for infinite systems unless configured otherwise.
pub const DEFAULT_LENGTH_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KlError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("length {length} exceeds the bound {limit} for an infinite group")]
    LengthLimit { length: usize, limit: usize },
    #[error("row for a shorter element is missing")]
    MissingRow,
    #[error("conflicting cached values for w = {0}")]
    Conflict(alloc::string::String),
    #[error("malformed cached row: {0}")]
    MalformedRow(alloc::string::String),
}

/// All `P_{x,w}` for a fixed `w`, keyed by the identifying vector of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlRow {
    pub length: usize,
    /// `x -> (l(x), P_{x,w})` over the Bruhat interval `[e, w]`.
    pub entries: BTreeMap<Vec<i64>, (usize, KLPolynomial)>,
}

impl KlRow {
    pub fn get(&self, x: &[i64]) -> Option<&KLPolynomial> {
        self.entries.get(x).map(|(_, p)| p)
    }

    fn identity(key: Vec<i64>) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(key, (0, KLPolynomial::one()));
        Self { length: 0, entries }
    }
}

/// Read access to previously computed rows.
pub trait RowSource {
    fn row(&self, key: &[i64]) -> Option<Arc<KlRow>>;
}

/// `mu(z, v)`: coefficient of `q^{(l(v)-l(z)-1)/2}` in `P_{z,v}`.
fn mu_coefficient(lz: usize, lv: usize, p: &KLPolynomial) -> i64 {
    if lv <= lz || (lv - lz) % 2 == 0 {
        return 0;
    }
    p.coeff((lv - lz - 1) / 2)
}

/// Descent used for the recursion and the elements whose rows it needs.
pub fn row_dependencies(system: &CoxeterSystem, w_key: &[i64], row_v: Option<&KlRow>) -> (usize, Vec<i64>, Vec<Vec<i64>>) {
    let s = w_key.iter().position(|&c| c < 0).expect("w is not the identity");
    let mut v = w_key.to_vec();
    system.act_key(s, &mut v);
    let mut zs = Vec::new();
    if let Some(row_v) = row_v {
        for (z, (lz, p)) in &row_v.entries {
            if z[s] < 0 && z.as_slice() != v.as_slice() && mu_coefficient(*lz, row_v.length, p) != 0 {
                zs.push(z.clone());
            }
        }
    }
    (s, v, zs)
}

/// Computes the row of `w` from rows of shorter elements.
pub fn compute_row(system: &CoxeterSystem, w_key: &[i64], source: &dyn RowSource) -> Result<KlRow, KlError> {
    if w_key.iter().all(|&c| c >= 0) {
        return Ok(KlRow::identity(w_key.to_vec()));
    }
    let (s, v, _) = row_dependencies(system, w_key, None);
    let row_v = source.row(&v).ok_or(KlError::MissingRow)?;
    let (_, _, zs) = row_dependencies(system, w_key, Some(&row_v));
    let lw = row_v.length + 1;
    let mut mus = Vec::with_capacity(zs.len());
    for z in &zs {
        let (lz, p) = &row_v.entries[z];
        let row_z = source.row(z).ok_or(KlError::MissingRow)?;
        mus.push((mu_coefficient(*lz, row_v.length, p), (lw - lz) / 2, row_z));
    }
    let mut ideal: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for (x, (lx, _)) in &row_v.entries {
        ideal.insert(x.clone(), *lx);
        let mut sx = x.clone();
        system.act_key(s, &mut sx);
        let lsx = if x[s] < 0 { lx - 1 } else { lx + 1 };
        ideal.insert(sx, lsx);
    }
    let mut entries = BTreeMap::new();
    for (x, lx) in ideal {
        let c = usize::from(x[s] < 0);
        let mut sx = x.clone();
        system.act_key(s, &mut sx);
        let mut p = KLPolynomial::zero();
        if let Some(a) = row_v.get(&sx) {
            p.add_scaled_shift(a, 1, 1 - c);
        }
        if let Some(b) = row_v.get(&x) {
            p.add_scaled_shift(b, 1, c);
        }
        for (mu, shift, row_z) in &mus {
            if let Some(pz) = row_z.get(&x) {
                p.add_scaled_shift(pz, -mu, *shift);
            }
        }
        if !p.is_zero() {
            entries.insert(x, (lx, p));
        }
    }
    Ok(KlRow { length: lw, entries })
}

/// Cache statistics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    /// Number of stored `(y, w)` pairs.
    pub entries: u64,
}

/// A cached `(y, w) -> P_{y,w}` record with words in generator labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct KlRecord {
    pub w: Vec<u32>,
    pub y: Vec<u32>,
    pub coeffs: Vec<i64>,
}

/// Memoised KL polynomials of one Coxeter system.
#[derive(Clone, Debug)]
pub struct KLCache {
    system: Arc<CoxeterSystem>,
    rows: BTreeMap<Vec<i64>, Arc<KlRow>>,
    stats: CacheStats,
    length_limit: usize,
}

impl RowSource for KLCache {
    fn row(&self, key: &[i64]) -> Option<Arc<KlRow>> {
        self.rows.get(key).cloned()
    }
}

impl KLCache {
    pub fn new(system: Arc<CoxeterSystem>) -> Self {
        Self {
            system,
            rows: BTreeMap::new(),
            stats: CacheStats::default(),
            length_limit: DEFAULT_LENGTH_LIMIT,
        }
    }

    /// Sets the longest admissible `w` for infinite groups.
    pub fn with_length_limit(mut self, limit: usize) -> Self {
        self.length_limit = limit;
        self
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    pub fn stats(&self) -> CacheStats {
        let entries = self.rows.values().map(|r| r.entries.len() as u64).sum();
        CacheStats { entries, ..self.stats }
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Vec<i64>, &Arc<KlRow>)> {
        self.rows.iter()
    }

    fn check(&self, e: &CoxeterElement) -> Result<(), KlError> {
        if !(Arc::ptr_eq(e.system(), &self.system) || **e.system() == *self.system) {
            return Err(CoxeterError::MixedSystems.into());
        }
        if !self.system.is_finite() && e.length() > self.length_limit {
            return Err(KlError::LengthLimit {
                length: e.length(),
                limit: self.length_limit,
            });
        }
        Ok(())
    }

    fn ensure(&mut self, key: &[i64]) -> Result<Arc<KlRow>, KlError> {
        if let Some(r) = self.rows.get(key) {
            return Ok(Arc::clone(r));
        }
        if key.iter().any(|&c| c < 0) {
            let (_, v, _) = row_dependencies(&self.system, key, None);
            let row_v = self.ensure(&v)?;
            let (_, _, zs) = row_dependencies(&self.system, key, Some(&row_v));
            for z in zs {
                self.ensure(&z)?;
            }
        }
        let row = Arc::new(compute_row(&self.system, key, self)?);
        self.rows.insert(key.to_vec(), Arc::clone(&row));
        Ok(row)
    }

    /// Row of `w`, computing and memoising it if necessary.
    pub fn row_of(&mut self, w: &CoxeterElement) -> Result<Arc<KlRow>, KlError> {
        self.check(w)?;
        if self.rows.contains_key(w.key()) {
            self.stats.hits += 1;
        } else {
            self.stats.misses += 1;
        }
        self.ensure(w.key())
    }

    /// `P_{y,w}`; zero unless `y <= w`.
    pub fn kl_polynomial(&mut self, y: &CoxeterElement, w: &CoxeterElement) -> Result<KLPolynomial, KlError> {
        self.check(y)?;
        let row = self.row_of(w)?;
        Ok(row.get(y.key()).cloned().unwrap_or_default())
    }

    /// `P_{y,w}(1)`.
    pub fn total_dimension(&mut self, y: &CoxeterElement, w: &CoxeterElement) -> Result<u64, KlError> {
        Ok(self.kl_polynomial(y, w)?.at_one() as u64)
    }

    /// Entries `y -> N(y, w)` of the inverse of the unitriangular matrix
    /// `[P_{y,z}(1)]` on the interval `[e, w]`.
    pub fn inverse_kl_row(&mut self, w: &CoxeterElement) -> Result<BTreeMap<CoxeterElement, i64>, KlError> {
        let row_w = self.row_of(w)?;
        let mut ideal: Vec<(usize, Vec<i64>)> = row_w.entries.iter().map(|(k, (l, _))| (*l, k.clone())).collect();
        ideal.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        let mut rows = BTreeMap::new();
        for (_, z) in &ideal {
            rows.insert(z.clone(), self.ensure(z)?);
        }
        let mut inv: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (ly, y) in &ideal {
            let val = if y.as_slice() == w.key() {
                1
            } else {
                let mut acc = 0i64;
                for (z, nz) in &inv {
                    let lz = row_w.entries[z].0;
                    if lz <= *ly {
                        continue;
                    }
                    if let Some(p) = rows[z].get(y) {
                        acc += p.at_one() * nz;
                    }
                }
                -acc
            };
            inv.insert(y.clone(), val);
        }
        Ok(inv
            .into_iter()
            .map(|(k, v)| (self.system.element_from_key(k), v))
            .collect())
    }

    /// All cached polynomials as label-word records, sorted.
    pub fn records(&self) -> Vec<KlRecord> {
        let mut out = Vec::new();
        for (w, row) in &self.rows {
            let w_labels = self.system.element_from_key(w.clone()).labels();
            for (y, (_, p)) in &row.entries {
                out.push(KlRecord {
                    w: w_labels.clone(),
                    y: self.system.element_from_key(y.clone()).labels(),
                    coeffs: p.coeffs().to_vec(),
                });
            }
        }
        out.sort();
        out
    }

    /// Merges records; rows already present must agree exactly.
    pub fn import_records(&mut self, records: &[KlRecord]) -> Result<usize, KlError> {
        let mut grouped: BTreeMap<Vec<i64>, KlRow> = BTreeMap::new();
        for r in records {
            let w = self.system.element_from_labels(&r.w)?;
            let y = self.system.element_from_labels(&r.y)?;
            let row = grouped.entry(w.key().to_vec()).or_insert_with(|| KlRow {
                length: w.length(),
                entries: BTreeMap::new(),
            });
            let p = KLPolynomial::from_coeffs(r.coeffs.clone());
            if p.is_zero() {
                return Err(KlError::MalformedRow(alloc::format!("zero polynomial stored for w = {w}")));
            }
            row.entries.insert(y.key().to_vec(), (y.length(), p));
        }
        let mut added = 0;
        for (w, row) in grouped {
            self.insert_row(w, row)?;
            added += 1;
        }
        Ok(added)
    }

    /// Inserts a row computed elsewhere; idempotent for identical rows.
    pub fn insert_row(&mut self, w: Vec<i64>, row: KlRow) -> Result<(), KlError> {
        let we = self.system.element_from_key(w.clone());
        if row.length != we.length() || row.get(&w) != Some(&KLPolynomial::one()) {
            return Err(KlError::MalformedRow(alloc::format!("{we}")));
        }
        match self.rows.get(&w) {
            Some(old) if **old != row => Err(KlError::Conflict(alloc::format!("{we}"))),
            Some(_) => Ok(()),
            None => {
                self.rows.insert(w, Arc::new(row));
                Ok(())
            }
        }
    }
}

/// Total dimension for parabolic labels: `P_{w w_J, y w_J}(1)` with
/// `w, y` minimal coset representatives and `w_J` the longest element of
/// `W_J`.
pub fn parabolic_total_dimension(
    cache: &mut KLCache,
    w: &CoxeterElement,
    y: &CoxeterElement,
    j: &[usize],
) -> Result<u64, KlError> {
    let longest = cache.system().parabolic_longest(j)?;
    let wm = crate::coxeter::multiply(w, &longest)?;
    let ym = crate::coxeter::multiply(y, &longest)?;
    cache.total_dimension(&wm, &ym)
}

/// Dense table `P_{y,w}` over all pairs of a finite group, indexed as the
/// sorted element list.
pub fn full_table(system: &Arc<CoxeterSystem>) -> Result<(Vec<CoxeterElement>, Vec<Vec<KLPolynomial>>), KlError> {
    let elems = system.elements_up_to(None)?;
    let mut cache = KLCache::new(Arc::clone(system));
    let mut table = vec![vec![KLPolynomial::zero(); elems.len()]; elems.len()];
    for (j, w) in elems.iter().enumerate() {
        let row = cache.row_of(w)?;
        for (i, y) in elems.iter().enumerate() {
            if let Some(p) = row.get(y.key()) {
                table[i][j] = p.clone();
            }
        }
    }
    Ok((elems, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::bruhat_leq;
    use crate::rootsys::{CartanType, RootDatum};

    fn weyl(t: CartanType, n: usize) -> Arc<CoxeterSystem> {
        CoxeterSystem::weyl(&RootDatum::new(t, n).unwrap())
    }

    #[test]
    fn a3_singular_pair() {
        let sys = weyl(CartanType::A, 3);
        let mut cache = KLCache::new(Arc::clone(&sys));
        let w = sys.element_from_labels(&[2, 1, 3, 2]).unwrap();
        let p = cache.kl_polynomial(&sys.identity(), &w).unwrap();
        assert_eq!(p.coeffs(), &[1, 1]);
        assert_eq!(cache.total_dimension(&sys.identity(), &w).unwrap(), 2);
        assert_eq!(cache.total_dimension(&w, &w).unwrap(), 1);
    }

    #[test]
    fn zero_off_interval() {
        let sys = weyl(CartanType::A, 2);
        let mut cache = KLCache::new(Arc::clone(&sys));
        let s1 = sys.generator(0).unwrap();
        let s2 = sys.generator(1).unwrap();
        assert!(cache.kl_polynomial(&s1, &s2).unwrap().is_zero());
        assert_eq!(cache.total_dimension(&s2, &s1).unwrap(), 0);
    }

    #[test]
    fn a2_all_ones() {
        let sys = weyl(CartanType::A, 2);
        let (elems, table) = full_table(&sys).unwrap();
        for (i, y) in elems.iter().enumerate() {
            for (j, w) in elems.iter().enumerate() {
                let expected = if bruhat_leq(y, w).unwrap() { KLPolynomial::one() } else { KLPolynomial::zero() };
                assert_eq!(table[i][j], expected);
            }
        }
    }

    #[test]
    fn a1_inverse() {
        let sys = weyl(CartanType::A, 1);
        let mut cache = KLCache::new(Arc::clone(&sys));
        let s = sys.generator(0).unwrap();
        let inv = cache.inverse_kl_row(&s).unwrap();
        assert_eq!(inv[&sys.identity()], -1);
        assert_eq!(inv[&s], 1);
    }

    #[test]
    fn stats_track_hits_and_misses() {
        let sys = weyl(CartanType::A, 2);
        let mut cache = KLCache::new(Arc::clone(&sys));
        let w0 = sys.longest_element().unwrap();
        cache.kl_polynomial(&sys.identity(), &w0).unwrap();
        cache.kl_polynomial(&sys.identity(), &w0).unwrap();
        let st = cache.stats();
        assert_eq!((st.hits, st.misses), (1, 1));
        assert!(st.entries >= 6);
    }

    #[test]
    fn affine_length_limit() {
        let aff = CoxeterSystem::affine(&RootDatum::new(CartanType::A, 1).unwrap());
        let mut cache = KLCache::new(Arc::clone(&aff)).with_length_limit(3);
        let long = aff.element(&[0, 1, 0, 1]).unwrap();
        assert!(matches!(cache.kl_polynomial(&aff.identity(), &long), Err(KlError::LengthLimit { .. })));
        let short = aff.element(&[0, 1, 0]).unwrap();
        assert_eq!(cache.kl_polynomial(&aff.identity(), &short).unwrap(), KLPolynomial::one());
    }

    #[test]
    fn records_round_trip() {
        let sys = weyl(CartanType::B, 2);
        let mut a = KLCache::new(Arc::clone(&sys));
        a.row_of(&sys.longest_element().unwrap()).unwrap();
        let recs = a.records();
        let mut b = KLCache::new(Arc::clone(&sys));
        b.import_records(&recs).unwrap();
        assert_eq!(b.records(), recs);
        assert!(b.import_records(&recs).is_ok());
        let mut bad = recs.clone();
        let last = bad.len() - 1;
        bad[last].coeffs = vec![1, 1];
        assert!(b.import_records(&bad).is_err());
    }

    #[test]
    fn parabolic_values_in_rank_two() {
        let sys = weyl(CartanType::A, 2);
        let mut cache = KLCache::new(Arc::clone(&sys));
        let quotient = crate::coxeter::parabolic_quotient(&sys, &[1], None).unwrap();
        for w in &quotient {
            for y in &quotient {
                let v = parabolic_total_dimension(&mut cache, w, y, &[1]).unwrap();
                assert_eq!(v, u64::from(bruhat_leq(w, y).unwrap()));
            }
        }
    }
}
