//! Text format for persisted KL polynomials.
//!
//! ```text
//! KLCACHE v1
//! system A 3
//! 2,1,3,2 | e | 1,1
//! ```
//!
//! Each `system TAG RANK` line opens a section for the Coxeter system with
//! that cache tag. Record lines are `w | y | c0,c1,...` with words in
//! generator labels and `e` for the identity.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use endokl_core::klpoly::{KlError, KlRecord};
use endokl_core::KLCache;

use crate::words::{format_word, parse_word};

pub const HEADER: &str = "KLCACHE v1";

#[derive(Debug, thiserror::Error)]
pub enum CacheFileError {
    #[error("cannot access cache file: {0}")]
    Io(#[from] std::io::Error),
    #[error("unsupported cache header {0:?}, expected {HEADER:?}")]
    Version(String),
    #[error("malformed cache line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Kl(#[from] KlError),
}

/// Section key: the system's cache tag and rank.
pub type SystemKey = (String, usize);

/// Parsed contents of a cache file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CacheFile {
    pub sections: BTreeMap<SystemKey, Vec<KlRecord>>,
}

impl CacheFile {
    pub fn parse(text: &str) -> Result<Self, CacheFileError> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h.trim() == HEADER => {}
            Some((_, h)) => return Err(CacheFileError::Version(h.trim().to_string())),
            None => return Err(CacheFileError::Version(String::new())),
        }
        let mut sections: BTreeMap<SystemKey, Vec<KlRecord>> = BTreeMap::new();
        let mut current: Option<SystemKey> = None;
        for (i, raw) in lines {
            let line = raw.trim();
            let malformed = |message: &str| CacheFileError::Malformed {
                line: i + 1,
                message: message.to_string(),
            };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("system ") {
                let mut parts = rest.split_whitespace();
                let (Some(tag), Some(rank), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(malformed("expected `system TAG RANK`"));
                };
                let rank = rank.parse().map_err(|_| malformed("rank is not an integer"))?;
                let key = (tag.to_string(), rank);
                sections.entry(key.clone()).or_default();
                current = Some(key);
                continue;
            }
            let Some(key) = &current else {
                return Err(malformed("record before any `system` line"));
            };
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            let [w, y, c] = fields[..] else {
                return Err(malformed("expected `w | y | coefficients`"));
            };
            let w = parse_word(w).map_err(|e| malformed(&e))?;
            let y = parse_word(y).map_err(|e| malformed(&e))?;
            let coeffs = c
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| malformed("bad coefficient"))?;
            sections.get_mut(key).expect("section opened").push(KlRecord { w, y, coeffs });
        }
        Ok(Self { sections })
    }

    pub fn read(path: &Path) -> Result<Self, CacheFileError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Reads `path`, or returns an empty file if it does not exist.
    pub fn read_or_default(path: &Path) -> Result<Self, CacheFileError> {
        if path.exists() {
            Self::read(path)
        } else {
            Ok(Self::default())
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(HEADER);
        out.push('\n');
        for ((tag, rank), records) in &self.sections {
            let _ = writeln!(out, "system {tag} {rank}");
            for r in records {
                let coeffs: Vec<String> = r.coeffs.iter().map(i64::to_string).collect();
                let _ = writeln!(out, "{} | {} | {}", format_word(&r.w), format_word(&r.y), coeffs.join(","));
            }
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<(), CacheFileError> {
        std::fs::write(path, self.render())?;
        Ok(())
    }

    /// Replaces the section of `cache`'s system with its current records,
    /// keeping any records already stored for it.
    pub fn store(&mut self, cache: &KLCache) {
        let key = cache.system().cache_tag();
        let section = self.sections.entry(key).or_default();
        section.extend(cache.records());
        section.sort();
        section.dedup();
    }

    /// Merges another file; records for the same system are unioned.
    pub fn merge(&mut self, other: &CacheFile) {
        for (key, records) in &other.sections {
            let section = self.sections.entry(key.clone()).or_default();
            section.extend(records.iter().cloned());
            section.sort();
            section.dedup();
        }
    }

    /// Loads the section matching `cache`'s system; returns the number of
    /// rows added.
    pub fn load_into(&self, cache: &mut KLCache) -> Result<usize, CacheFileError> {
        match self.sections.get(&cache.system().cache_tag()) {
            Some(records) => Ok(cache.import_records(records)?),
            None => Ok(0),
        }
    }

    pub fn record_count(&self) -> usize {
        self.sections.values().map(Vec::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use endokl_core::{CartanType, CoxeterSystem, RootDatum};
    use std::sync::Arc;

    #[test]
    fn round_trip() {
        let sys = CoxeterSystem::weyl(&RootDatum::new(CartanType::A, 3).unwrap());
        let mut cache = KLCache::new(Arc::clone(&sys));
        let w = sys.element_from_labels(&[2, 1, 3, 2]).unwrap();
        cache.row_of(&w).unwrap();
        let mut file = CacheFile::default();
        file.store(&cache);
        let text = file.render();
        assert!(text.starts_with("KLCACHE v1\nsystem A 3\n"));
        assert!(text.contains("2,1,3,2 | e | 1,1\n"));
        let parsed = CacheFile::parse(&text).unwrap();
        assert_eq!(parsed, file);
        let mut fresh = KLCache::new(Arc::clone(&sys));
        assert!(parsed.load_into(&mut fresh).unwrap() > 0);
        assert_eq!(fresh.records(), cache.records());
    }

    #[test]
    fn rejects_other_versions_and_garbage() {
        assert!(matches!(CacheFile::parse("KLCACHE v2\n"), Err(CacheFileError::Version(_))));
        assert!(matches!(
            CacheFile::parse("KLCACHE v1\ne | e | 1\n"),
            Err(CacheFileError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            CacheFile::parse("KLCACHE v1\nsystem A 2\n1 | e\n"),
            Err(CacheFileError::Malformed { line: 3, .. })
        ));
    }

    #[test]
    fn conflicting_rows_are_rejected() {
        let sys = CoxeterSystem::weyl(&RootDatum::new(CartanType::A, 2).unwrap());
        let mut cache = KLCache::new(Arc::clone(&sys));
        cache.row_of(&sys.element_from_labels(&[1, 2]).unwrap()).unwrap();
        let bad = CacheFile::parse("KLCACHE v1\nsystem A 2\n1,2 | e | 2\n1,2 | 1,2 | 1\n").unwrap();
        assert!(matches!(bad.load_into(&mut cache), Err(CacheFileError::Kl(KlError::Conflict(_)))));
    }
}
