//! Finite posets, the brute-force extension oracle, chain decompositions and
//! canonical forms.

mod canonical;
mod chains;
mod oracle;

pub use canonical::{canonical_form, CanonicalKey, CANONICAL_LIMIT};
pub use chains::{all_two_chain_decompositions, width_and_decompose, TwoChainDecomposition};
pub use oracle::{
    count_extensions_oracle, delta_oracle, pair_probability_oracle, Oracle, DEFAULT_ORACLE_LIMIT,
};

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;

/// A finite strict partial order on the elements `0..size`.
///
/// The relation matrix is stored transitively closed, so `less(x, y)` is a
/// constant-time lookup. Posets are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    less: Vec<bool>,
}

/// Exact balance constant of a poset together with a pair attaining it.
///
/// `witness` is the lexicographically smallest ordered pair `(x, y)` with
/// `P(x before y) == delta`, so `x` is the element that is less likely to
/// come first. It is `None` exactly when `delta` is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    #[serde(serialize_with = "crate::serde_rational")]
    pub delta: Rational,
    pub witness: Option<(usize, usize)>,
    #[serde(serialize_with = "crate::serde_display")]
    pub extension_count: BigUint,
}

impl Poset {
    /// Transitive closure of the strict relations `u < v` in `pairs`.
    pub fn from_relations(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut less = vec![false; size * size];
        for &(u, v) in pairs {
            for e in [u, v] {
                if e >= size {
                    return Err(Error::ElementOutOfRange { element: e, size });
                }
            }
            if u == v {
                return Err(Error::Reflexive(u));
            }
            less[u * size + v] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if less[i * size + k] {
                    for j in 0..size {
                        if less[k * size + j] {
                            less[i * size + j] = true;
                        }
                    }
                }
            }
        }
        if (0..size).any(|x| less[x * size + x]) {
            return Err(Error::Cycle);
        }
        Ok(Self { size, less })
    }

    /// Builds a poset from a matrix that is already a strict order.
    /// Only used internally where closure is known to hold.
    pub(crate) fn from_closed_matrix(size: usize, less: Vec<bool>) -> Self {
        debug_assert_eq!(less.len(), size * size);
        Self { size, less }
    }

    pub fn empty() -> Self {
        Self {
            size: 0,
            less: Vec::new(),
        }
    }

    /// The one-element poset.
    pub fn singleton() -> Self {
        Self::antichain(1)
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_relations(n, &pairs).expect("chain is a partial order")
    }

    pub fn antichain(n: usize) -> Self {
        Self {
            size: n,
            less: vec![false; n * n],
        }
    }

    /// Three elements with the single relation `0 < 1`.
    pub fn e3() -> Self {
        Self::from_relations(3, &[(0, 1)]).expect("valid")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn less(&self, x: usize, y: usize) -> bool {
        self.less[x * self.size + y]
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.less(x, y) || self.less(y, x)
    }

    /// True if every pair of elements is comparable.
    pub fn is_chain(&self) -> bool {
        (0..self.size).all(|x| (x + 1..self.size).all(|y| self.comparable(x, y)))
    }

    /// All pairs `(x, y)` with `x < y`.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.size;
        (0..n).flat_map(move |x| {
            (0..n)
                .filter(move |&y| self.less(x, y))
                .map(move |y| (x, y))
        })
    }

    /// Cover relations: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .filter(|&(x, y)| !(0..self.size).any(|z| self.less(x, z) && self.less(z, y)))
            .collect()
    }

    pub fn down_count(&self, x: usize) -> usize {
        (0..self.size).filter(|&y| self.less(y, x)).count()
    }

    pub fn up_count(&self, x: usize) -> usize {
        (0..self.size).filter(|&y| self.less(x, y)).count()
    }

    /// Length of the longest chain ending at each element, counted in edges.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&x| self.down_count(x));
        let mut h = vec![0; self.size];
        for &x in &order {
            h[x] = (0..self.size)
                .filter(|&y| self.less(y, x))
                .map(|y| h[y] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// `self ⊕ other`: `other`'s elements are shifted by `self.size()` and
    /// placed above every element of `self`.
    pub fn direct_sum(&self, other: &Poset) -> Poset {
        self.combine(other, true)
    }

    /// `self ⊔ other`: no relations across the two parts.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        self.combine(other, false)
    }

    fn combine(&self, other: &Poset, stacked: bool) -> Poset {
        let n = self.size + other.size;
        let mut less = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                less[x * n + y] = match (x < self.size, y < self.size) {
                    (true, true) => self.less(x, y),
                    (false, false) => other.less(x - self.size, y - self.size),
                    (true, false) => stacked,
                    (false, true) => false,
                };
            }
        }
        Poset { size: n, less }
    }

    /// The sub-poset induced on `elements`, relabeled `0..elements.len()`
    /// in the given order.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let k = elements.len();
        let mut less = vec![false; k * k];
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                less[i * k + j] = self.less(x, y);
            }
        }
        Poset { size: k, less }
    }

    /// Relabels element `x` as `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        let n = self.size;
        assert_eq!(perm.len(), n);
        let mut less = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                if self.less(x, y) {
                    less[perm[x] * n + perm[y]] = true;
                }
            }
        }
        Poset { size: n, less }
    }

    /// Parses the plain-text poset format:
    ///
    /// ```text
    /// # comment
    /// poset 3
    /// rel 0 1
    /// ```
    pub fn parse(text: &str) -> Result<Poset> {
        let mut size = None;
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: &str| Error::Parse {
                line: line_no,
                message: message.to_string(),
            };
            let mut words = line.split_whitespace();
            match words.next() {
                Some("poset") => {
                    if size.is_some() {
                        return Err(err("duplicate `poset` header"));
                    }
                    let n = words
                        .next()
                        .and_then(|w| w.parse::<usize>().ok())
                        .ok_or_else(|| err("expected `poset <size>`"))?;
                    size = Some(n);
                }
                Some("rel") => {
                    if size.is_none() {
                        return Err(err("`rel` before `poset` header"));
                    }
                    let nums: Vec<usize> = words
                        .by_ref()
                        .take(2)
                        .map(|w| w.parse::<usize>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| err("expected `rel <u> <v>`"))?;
                    if nums.len() != 2 {
                        return Err(err("expected `rel <u> <v>`"));
                    }
                    pairs.push((nums[0], nums[1]));
                }
                Some(other) => return Err(err(&format!("unknown directive `{other}`"))),
                None => unreachable!(),
            }
            if words.next().is_some() {
                return Err(err("trailing tokens"));
            }
        }
        let size = size.ok_or(Error::Parse {
            line: 0,
            message: "missing `poset <size>` header".into(),
        })?;
        Poset::from_relations(size, &pairs)
    }

    /// Renders the poset in the text format, listing cover relations only.
    pub fn to_text(&self) -> String {
        let mut out = format!("poset {}\n", self.size);
        for (u, v) in self.covers() {
            let _ = writeln!(out, "rel {u} {v}");
        }
        out
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset({}; {:?})", self.size, self.covers())
    }
}
