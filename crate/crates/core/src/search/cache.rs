use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use super::SpectrumRecord;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poset::CanonicalKey;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub delta: Rational,
    pub aigner: bool,
    /// Line of the cache file the entry came from.
    pub line: usize,
}

/// Parses `<key>\t<p/q>\t<0|1>`.
pub fn parse_cache_line(text: &str, line: usize) -> Result<(CanonicalKey, CacheEntry)> {
    let bad = |message: String| Error::Parse { line, message };
    let fields: Vec<&str> = text.split('\t').collect();
    let [key, delta, aigner] = fields[..] else {
        return Err(bad(format!(
            "expected 3 tab-separated fields, found {}",
            fields.len()
        )));
    };
    let key: CanonicalKey = key
        .parse()
        .map_err(|_| bad(format!("invalid canonical key `{key}`")))?;
    let delta: Rational = delta
        .parse()
        .map_err(|_| bad(format!("invalid rational `{delta}`")))?;
    let aigner = match aigner {
        "0" => false,
        "1" => true,
        other => return Err(bad(format!("aigner flag must be 0 or 1, found `{other}`"))),
    };
    Ok((
        key,
        CacheEntry {
            delta,
            aigner,
            line,
        },
    ))
}

/// Append-only store of search records keyed by canonical key. Lines
/// starting with `#` and blank lines are ignored.
#[derive(Debug, Default)]
pub struct SearchCache {
    path: Option<PathBuf>,
    entries: HashMap<CanonicalKey, CacheEntry>,
}

impl SearchCache {
    /// An empty cache that is never written.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads `path`, which need not exist yet. Conflicting duplicate keys
    /// are rejected.
    pub fn open(path: &Path) -> Result<Self> {
        let mut cache = Self {
            path: Some(path.to_path_buf()),
            entries: HashMap::new(),
        };
        if path.exists() {
            let text = std::fs::read_to_string(path)?;
            for (idx, raw) in text.lines().enumerate() {
                let raw = raw.trim_end_matches('\r');
                if raw.trim().is_empty() || raw.starts_with('#') {
                    continue;
                }
                let (key, entry) = parse_cache_line(raw, idx + 1)?;
                if let Some(old) = cache.entries.get(&key) {
                    if old.delta != entry.delta || old.aigner != entry.aigner {
                        return Err(Error::Parse {
                            line: idx + 1,
                            message: format!("conflicts with line {} for key {key}", old.line),
                        });
                    }
                    continue;
                }
                cache.entries.insert(key, entry);
            }
        }
        Ok(cache)
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<&CacheEntry> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Records the new entries and appends them to the backing file.
    pub fn append(&mut self, records: &[&SpectrumRecord]) -> Result<()> {
        if records.is_empty() {
            return Ok(());
        }
        if let Some(path) = &self.path {
            let file: File = OpenOptions::new().create(true).append(true).open(path)?;
            let mut out = BufWriter::new(file);
            for r in records {
                writeln!(out, "{}", r.line())?;
            }
            out.flush()?;
        }
        for r in records {
            self.entries.entry(r.key.clone()).or_insert(CacheEntry {
                delta: r.delta.clone(),
                aigner: r.aigner,
                line: 0,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::poset::{canonical_form, Poset};
    use crate::search::gap_report_with;

    #[test]
    fn line_round_trip() {
        let key = canonical_form(&Poset::e3()).unwrap();
        let record = SpectrumRecord {
            key: key.clone(),
            delta: rat(1, 3),
            aigner: true,
            chain: false,
        };
        let (k, e) = parse_cache_line(&record.line(), 4).unwrap();
        assert_eq!(k, key);
        assert_eq!(e.delta, rat(1, 3));
        assert!(e.aigner);
        assert!(parse_cache_line("zz\t1/3\t1", 1).is_err());
        assert!(parse_cache_line(&format!("{key}\t1/3"), 1).is_err());
        assert!(parse_cache_line(&format!("{key}\t1/3\t2"), 1).is_err());
        assert!(parse_cache_line(&format!("{key}\tx\t1"), 1).is_err());
    }

    #[test]
    fn reuse_across_runs() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("spectrum.tsv");
        let mut cache = SearchCache::open(&path).unwrap();
        assert!(cache.is_empty());
        let first = gap_report_with(4, 1, Some(&mut cache)).unwrap();
        assert_eq!(first.cache_hits, 0);
        let written = std::fs::read_to_string(&path).unwrap();
        assert_eq!(written.lines().count(), first.records.len());

        let mut reopened = SearchCache::open(&path).unwrap();
        assert_eq!(reopened.len(), first.records.len());
        let second = gap_report_with(5, 1, Some(&mut reopened)).unwrap();
        assert_eq!(second.cache_hits, first.records.len());
        let uncached = gap_report_with(5, 1, None).unwrap();
        assert_eq!(second.records, uncached.records);
        let total = std::fs::read_to_string(&path).unwrap().lines().count();
        assert_eq!(total, uncached.records.len());
    }

    #[test]
    fn rejects_conflicts_and_bad_flags() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.tsv");
        let key = canonical_form(&Poset::e3()).unwrap();
        std::fs::write(&path, format!("# header\n{key}\t1/3\t1\n{key}\t1/2\t1\n")).unwrap();
        let err = SearchCache::open(&path).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));

        std::fs::write(&path, format!("{key}\t1/3\t0\n")).unwrap();
        let mut cache = SearchCache::open(&path).unwrap();
        assert!(gap_report_with(3, 1, Some(&mut cache)).is_err());
    }
}
