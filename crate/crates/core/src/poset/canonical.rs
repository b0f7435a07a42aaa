//! Isomorphism-invariant keys for small posets.
//!
//! Elements are first split into classes by iterated refinement of
//! (down-degree, up-degree, height). Positions are then filled class by
//! class, and among all such placements the lexicographically smallest
//! relation encoding is kept. The encoding lists, for each position `k`, the
//! pairs `(less(p, k), less(k, p))` for `p < k`, so every prefix of a
//! placement fixes a prefix of the encoding and branches can be cut early.
//! Incomparable twins (same strict down- and up-sets) are interchangeable,
//! so only one of them is tried at each depth.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::Poset;
use crate::error::{Error, Result};

pub const CANONICAL_LIMIT: usize = 12;

/// Canonical key: first byte is the size, then the relation encoding packed
/// most-significant bit first. Rendered as lowercase hex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonically labeled representative.
    pub fn to_poset(&self) -> Poset {
        let n = self.size();
        let mut less = vec![false; n * n];
        let mut idx = 0usize;
        let bit = |i: usize| (self.0[1 + i / 8] >> (7 - i % 8)) & 1 == 1;
        for k in 1..n {
            for p in 0..k {
                less[p * n + k] = bit(idx);
                less[k * n + p] = bit(idx + 1);
                idx += 2;
            }
        }
        Poset::from_closed_matrix(n, less)
    }

    fn from_bits(n: usize, bits: &[bool]) -> Self {
        let mut bytes = vec![n as u8];
        bytes.extend(bits.chunks(8).map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | (u8::from(b) << (7 - i)))
        }));
        CanonicalKey(bytes)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({self})")
    }
}

impl FromStr for CanonicalKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            message: format!("invalid canonical key `{s}`"),
        };
        if !s.len().is_multiple_of(2) || s.is_empty() {
            return Err(bad());
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16))
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map_err(|_| bad())?;
        let n = bytes[0] as usize;
        let expected = 1 + (n * n.saturating_sub(1)).div_ceil(8);
        if bytes.len() != expected {
            return Err(bad());
        }
        Ok(CanonicalKey(bytes))
    }
}

/// Color classes after refinement, ranked canonically.
fn refined_classes(p: &Poset) -> Vec<usize> {
    let n = p.size();
    let heights = p.heights();
    let initial: Vec<Vec<usize>> = (0..n)
        .map(|x| vec![p.down_count(x), p.up_count(x), heights[x]])
        .collect();
    let mut colors = rank(&initial);
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let mut down: Vec<usize> = (0..n)
                    .filter(|&y| p.less(y, x))
                    .map(|y| colors[y])
                    .collect();
                let mut up: Vec<usize> = (0..n)
                    .filter(|&y| p.less(x, y))
                    .map(|y| colors[y])
                    .collect();
                down.sort_unstable();
                up.sort_unstable();
                let mut sig = vec![colors[x], down.len()];
                sig.extend(down);
                sig.extend(up);
                sig
            })
            .collect();
        let refined = rank(&sigs);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&refined) == classes(&colors) {
            return refined;
        }
        colors = refined;
    }
}

fn rank(sigs: &[Vec<usize>]) -> Vec<usize> {
    let ids: BTreeMap<&Vec<usize>, usize> = {
        let mut distinct: Vec<&Vec<usize>> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        distinct
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect()
    };
    sigs.iter().map(|s| ids[s]).collect()
}

struct Search<'a> {
    p: &'a Poset,
    slot_class: Vec<usize>,
    classes: Vec<usize>,
    placed: Vec<usize>,
    used: Vec<bool>,
    bits: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl Search<'_> {
    fn twins(&self, u: usize, v: usize) -> bool {
        let p = self.p;
        !p.comparable(u, v)
            && (0..p.size())
                .filter(|&z| z != u && z != v)
                .all(|z| p.less(z, u) == p.less(z, v) && p.less(u, z) == p.less(v, z))
    }

    /// Extends the current placement. A branch is cut as soon as its
    /// encoding prefix exceeds the best complete encoding found so far; the
    /// comparison is always against the current best, which may have been
    /// replaced inside a sibling subtree.
    fn run(&mut self, depth: usize) {
        let n = self.p.size();
        if depth == n {
            if self.best.as_ref().is_none_or(|best| self.bits < *best) {
                self.best = Some(self.bits.clone());
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for x in 0..n {
            if self.used[x] || self.classes[x] != self.slot_class[depth] {
                continue;
            }
            if tried.iter().any(|&u| self.twins(u, x)) {
                continue;
            }
            tried.push(x);
            let start = self.bits.len();
            for &y in &self.placed {
                self.bits.push(self.p.less(y, x));
                self.bits.push(self.p.less(x, y));
            }
            let beaten = self
                .best
                .as_ref()
                .is_some_and(|best| self.bits.as_slice() > &best[..self.bits.len()]);
            if !beaten {
                self.used[x] = true;
                self.placed.push(x);
                self.run(depth + 1);
                self.placed.pop();
                self.used[x] = false;
            }
            self.bits.truncate(start);
        }
    }
}

/// Isomorphism-invariant key; equal keys iff isomorphic posets.
pub fn canonical_form(p: &Poset) -> Result<CanonicalKey> {
    let n = p.size();
    if n > CANONICAL_LIMIT {
        return Err(Error::CanonicalLimit {
            size: n,
            limit: CANONICAL_LIMIT,
        });
    }
    let classes = refined_classes(p);
    let mut slot_class = classes.clone();
    slot_class.sort_unstable();
    let mut search = Search {
        p,
        slot_class,
        classes,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        bits: Vec::with_capacity(n * n),
        best: None,
    };
    search.run(0);
    Ok(CanonicalKey::from_bits(n, &search.best.unwrap_or_default()))
}
