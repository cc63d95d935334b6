//! Layer-by-layer parallel filling of a KL cache.
//!
//! Rows of elements of length `l` depend only on rows of shorter elements,
//! so each length layer is computed in parallel against a frozen snapshot
//! and merged in canonical order. The result does not depend on the thread
//! schedule.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use endokl_core::klpoly::{compute_row, KlError, KlRow, RowSource};
use endokl_core::{CoxeterElement, CoxeterSystem, KLCache};
use rayon::prelude::*;

struct Snapshot(BTreeMap<Vec<i64>, Arc<KlRow>>);

impl RowSource for Snapshot {
    fn row(&self, key: &[i64]) -> Option<Arc<KlRow>> {
        self.0.get(key).cloned()
    }
}

/// Computes the rows of all elements of length at most `max_length` (all
/// elements for a finite group when `None`). Returns the number of rows
/// computed.
pub fn fill_layers(cache: &mut KLCache, max_length: Option<usize>) -> Result<usize, KlError> {
    let system = Arc::clone(cache.system());
    let elements = system.elements_up_to(max_length)?;
    let mut layers: BTreeMap<usize, Vec<CoxeterElement>> = BTreeMap::new();
    for e in elements {
        layers.entry(e.length()).or_default().push(e);
    }
    let mut known = Snapshot(cache.rows().map(|(k, r)| (k.clone(), Arc::clone(r))).collect());
    let mut computed = 0;
    for layer in layers.values() {
        let todo: Vec<&CoxeterElement> = layer.iter().filter(|w| !known.0.contains_key(w.key())).collect();
        let rows: Vec<KlRow> = todo
            .par_iter()
            .map(|w| compute_row(&system, w.key(), &known))
            .collect::<Result<_, _>>()?;
        for (w, row) in todo.into_iter().zip(rows) {
            cache.insert_row(w.key().to_vec(), row.clone())?;
            known.0.insert(w.key().to_vec(), Arc::new(row));
            computed += 1;
        }
    }
    Ok(computed)
}

/// Every nonzero `P_{y,w}` of a finite group as text, one `w | y | coeffs`
/// line per pair in canonical order.
pub fn full_table_text(system: &Arc<CoxeterSystem>) -> Result<String, KlError> {
    let mut cache = KLCache::new(Arc::clone(system));
    fill_layers(&mut cache, None)?;
    let mut out = String::new();
    for r in cache.records() {
        let coeffs: Vec<String> = r.coeffs.iter().map(i64::to_string).collect();
        let _ = writeln!(
            out,
            "{} | {} | {}",
            crate::words::format_word(&r.w),
            crate::words::format_word(&r.y),
            coeffs.join(",")
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use endokl_core::{CartanType, RootDatum};

    #[test]
    fn matches_sequential_cache() {
        let sys = CoxeterSystem::weyl(&RootDatum::new(CartanType::B, 3).unwrap());
        let mut par = KLCache::new(Arc::clone(&sys));
        assert_eq!(fill_layers(&mut par, None).unwrap(), 48);
        let mut seq = KLCache::new(Arc::clone(&sys));
        for w in sys.elements_up_to(None).unwrap() {
            seq.row_of(&w).unwrap();
        }
        assert_eq!(par.records(), seq.records());
        assert_eq!(fill_layers(&mut par, None).unwrap(), 0);
    }

    #[test]
    fn bounded_affine_fill() {
        let sys = CoxeterSystem::affine(&RootDatum::new(CartanType::A, 1).unwrap());
        let mut cache = KLCache::new(Arc::clone(&sys));
        assert_eq!(fill_layers(&mut cache, Some(4)).unwrap(), 9);
    }
}
