//! Exhaustive enumeration of small width-2 posets and the spectrum of their
//! balance constants.
//!
//! Every width-2 poset on `m + n` elements, `m >= n`, is the poset of some
//! grid whose red rows and blue columns are disjoint justified staircases,
//! so enumerating staircase pairs and deduplicating by canonical key covers
//! them all.

mod cache;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

pub use cache::{parse_cache_line, CacheEntry, SearchCache};

use crate::error::{Error, Result};
use crate::exact::{format_rational, lambda, quad_compare, rat, QuadraticNumber, Rational};
use crate::grid::{delta_grid, grid_of, GridDiagram};
use crate::poset::{canonical_form, width_and_decompose, CanonicalKey, Poset, CANONICAL_LIMIT};

/// Non-increasing sequences of `len` values in `0..=max`, in lexicographic
/// order.
fn staircases(len: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for v in (0..=cap).rev() {
            prefix.push(v);
            go(len, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Every valid grid with `m` rows and `n` columns, i.e. every disjoint
/// pair of a top-right red staircase and a bottom-left blue staircase.
pub fn shape_pairs(m: usize, n: usize) -> Vec<GridDiagram> {
    let blues = staircases(n, m);
    staircases(m, n)
        .into_iter()
        .flat_map(|red| {
            blues
                .iter()
                .filter_map(move |blue| GridDiagram::from_shapes(red.clone(), blue.clone()).ok())
        })
        .collect()
}

fn check_size(n: usize) -> Result<()> {
    if n > CANONICAL_LIMIT {
        return Err(Error::CanonicalLimit {
            size: n,
            limit: CANONICAL_LIMIT,
        });
    }
    Ok(())
}

/// Canonical keys of all posets of width at most 2 on exactly `size`
/// elements, sorted.
pub fn enumerate_width2_keys(size: usize) -> Result<Vec<CanonicalKey>> {
    check_size(size)?;
    let keys: BTreeSet<CanonicalKey> = (0..=size / 2)
        .flat_map(|n| shape_pairs(size - n, n))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|g| canonical_form(&g.to_poset()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();
    Ok(keys.into_iter().collect())
}

/// Posets of width at most 2 on exactly `size` elements, one per
/// isomorphism class, canonically labeled and sorted by key.
pub fn enumerate_width2(size: usize) -> Result<Vec<Poset>> {
    Ok(enumerate_width2_keys(size)?
        .iter()
        .map(CanonicalKey::to_poset)
        .collect())
}

/// Same as [`enumerate_width2`] for every size from 1 to `max_size`.
pub fn enumerate_width2_up_to(max_size: usize) -> Result<Vec<Poset>> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        out.extend(enumerate_width2(size)?);
    }
    Ok(out)
}

/// Canonical keys of width-2 posets on `size` elements found by brute force
/// over relation sets on naturally labeled elements. Independent of the grid
/// enumeration; meant for cross-checks at small sizes.
pub fn brute_force_width2_keys(size: usize) -> Result<Vec<CanonicalKey>> {
    if size > 6 {
        return Err(Error::Precondition(
            "brute force is limited to 6 elements".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..size)
        .flat_map(|y| (0..y).map(move |x| (x, y)))
        .collect();
    let mut keys = BTreeSet::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let p = Poset::from_relations(size, &chosen)?;
        if width_and_decompose(&p).0 <= 2 {
            keys.insert(canonical_form(&p)?);
        }
    }
    Ok(keys.into_iter().collect())
}

/// Splits `p` into its finest direct-sum blocks, bottom to top, each given
/// as the list of its elements.
pub fn sum_blocks(p: &Poset) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..p.size()).collect();
    order.sort_by_key(|&x| (p.down_count(x), x));
    let mut blocks = Vec::new();
    let mut start = 0;
    for k in 1..=order.len() {
        let cut = k == order.len()
            || order[..k]
                .iter()
                .all(|&x| order[k..].iter().all(|&y| p.less(x, y)));
        if cut {
            blocks.push(order[start..k].to_vec());
            start = k;
        }
    }
    blocks
}

/// Whether `p` is a direct sum of copies of the one-element poset and of
/// the three-element poset with a single relation.
pub fn is_aigner_family(p: &Poset) -> bool {
    !p.is_empty()
        && sum_blocks(p).iter().all(|block| match block.len() {
            1 => true,
            3 => p.induced(block).relations().count() == 1,
            _ => false,
        })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumRecord {
    #[serde(serialize_with = "crate::serde_display")]
    pub key: CanonicalKey,
    #[serde(serialize_with = "crate::serde_rational")]
    pub delta: Rational,
    pub aigner: bool,
    pub chain: bool,
}

impl SpectrumRecord {
    /// `<key>\t<delta>\t<aigner 0|1>`, also the cache line format.
    pub fn line(&self) -> String {
        format!(
            "{}\t{}\t{}",
            self.key,
            format_rational(&self.delta),
            u8::from(self.aigner)
        )
    }
}

impl fmt::Display for SpectrumRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub max_size: usize,
    pub records: Vec<SpectrumRecord>,
    /// Smallest δ over non-chain posets outside the Aigner family, with the
    /// first key attaining it.
    #[serde(serialize_with = "serialize_minimum")]
    pub min_non_aigner: Option<(Rational, CanonicalKey)>,
    /// Distinct δ values with multiplicities.
    #[serde(serialize_with = "serialize_spectrum")]
    pub spectrum: BTreeMap<Rational, usize>,
    pub cache_hits: usize,
}

fn serialize_minimum<S: serde::Serializer>(
    m: &Option<(Rational, CanonicalKey)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match m {
        Some((d, k)) => s.collect_seq([format_rational(d), k.to_string()]),
        None => s.serialize_none(),
    }
}

fn serialize_spectrum<S: serde::Serializer>(
    m: &BTreeMap<Rational, usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(d, c)| (format_rational(d), c)))
}

impl SpectrumReport {
    pub fn summary_lines(&self) -> Vec<String> {
        let aigner = self.records.iter().filter(|r| r.aigner).count();
        let chains = self.records.iter().filter(|r| r.chain).count();
        let mut lines = vec![
            format!("# max-size {}", self.max_size),
            format!("# posets {}", self.records.len()),
            format!("# chains {chains}"),
            format!("# aigner {aigner}"),
            format!("# distinct-deltas {}", self.spectrum.len()),
        ];
        match &self.min_non_aigner {
            Some((d, k)) => lines.push(format!(
                "# min-non-aigner {} ({}) at {}",
                format_rational(d),
                crate::exact::decimal_approximation(d, 6),
                k
            )),
            None => lines.push("# min-non-aigner none".into()),
        }
        lines.push(format!(
            "# lambda {} ({})",
            lambda().fraction_string(),
            lambda().decimal_approximation(6)
        ));
        lines
    }
}

fn counterexample(record: &SpectrumRecord, what: &str) -> Error {
    Error::Verification(format!(
        "{what}: delta = {} for\n{}",
        format_rational(&record.delta),
        record.key.to_poset().to_text()
    ))
}

/// Checks the gap statements for one record: chains have δ = 0, Aigner
/// non-chains have δ = 1/3, every other poset has δ >= λ, and δ never
/// exceeds 1/2.
pub fn check_record(record: &SpectrumRecord) -> Result<()> {
    let third = rat(1, 3);
    if record.delta > rat(1, 2) || record.delta < Rational::zero() {
        return Err(counterexample(record, "delta outside [0, 1/2]"));
    }
    if record.chain {
        if !record.delta.is_zero() {
            return Err(counterexample(record, "chain with nonzero delta"));
        }
    } else if record.aigner {
        if record.delta != third {
            return Err(counterexample(
                record,
                "Aigner-family poset without delta = 1/3",
            ));
        }
    } else if quad_compare(&QuadraticNumber::rational(record.delta.clone()), &lambda())?.is_lt() {
        return Err(counterexample(
            record,
            "poset outside the Aigner family with delta below lambda",
        ));
    }
    Ok(())
}

fn record_for(key: &CanonicalKey) -> Result<SpectrumRecord> {
    let p = key.to_poset();
    let delta = delta_grid(&grid_of(&p)?).delta;
    Ok(SpectrumRecord {
        key: key.clone(),
        delta,
        aigner: is_aigner_family(&p),
        chain: p.is_chain(),
    })
}

/// The spectrum of all width-2 posets on 1 to `max_size` elements, with
/// every gap statement checked. `jobs` sets the worker count (0 for the
/// rayon default); results do not depend on it. Cached records are reused
/// after their Aigner flag is recomputed and compared, and new records are
/// appended to the cache.
pub fn gap_report_with(
    max_size: usize,
    jobs: usize,
    mut cache: Option<&mut SearchCache>,
) -> Result<SpectrumReport> {
    check_size(max_size)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    let mut keys = Vec::new();
    for size in 1..=max_size {
        keys.extend(pool.install(|| enumerate_width2_keys(size))?);
    }
    let cached: Vec<Option<CacheEntry>> = keys
        .iter()
        .map(|k| cache.as_ref().and_then(|c| c.get(k).cloned()))
        .collect();
    let records: Vec<SpectrumRecord> = pool.install(|| {
        keys.par_iter()
            .zip(cached.par_iter())
            .map(|(key, hit)| match hit {
                Some(entry) => {
                    let p = key.to_poset();
                    let record = SpectrumRecord {
                        key: key.clone(),
                        delta: entry.delta.clone(),
                        aigner: is_aigner_family(&p),
                        chain: p.is_chain(),
                    };
                    if record.aigner != entry.aigner {
                        return Err(Error::Parse {
                            line: entry.line,
                            message: format!("cached Aigner flag for {key} is wrong"),
                        });
                    }
                    Ok(record)
                }
                None => record_for(key),
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let cache_hits = cached.iter().flatten().count();
    if let Some(cache) = cache.as_mut() {
        let fresh: Vec<&SpectrumRecord> = records
            .iter()
            .zip(&cached)
            .filter(|(_, c)| c.is_none())
            .map(|(r, _)| r)
            .collect();
        cache.append(&fresh)?;
    }
    for record in &records {
        check_record(record)?;
    }
    let mut spectrum = BTreeMap::new();
    for r in &records {
        *spectrum.entry(r.delta.clone()).or_insert(0) += 1;
    }
    let min_non_aigner = records
        .iter()
        .filter(|r| !r.aigner && !r.chain)
        .min_by(|x, y| x.delta.cmp(&y.delta).then_with(|| x.key.cmp(&y.key)))
        .map(|r| (r.delta.clone(), r.key.clone()));
    Ok(SpectrumReport {
        max_size,
        records,
        min_non_aigner,
        spectrum,
        cache_hits,
    })
}

pub fn gap_report(max_size: usize) -> Result<SpectrumReport> {
    gap_report_with(max_size, 0, None)
}
