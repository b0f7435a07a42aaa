//! Brute-force linear extension counting.
//!
//! Enumerates every linear extension by backtracking over minimal elements.
//! This is deliberately independent of the grid-diagram machinery so the two
//! can be cross-checked.

use num_bigint::BigUint;

use super::{BalanceReport, Poset};
use crate::error::{Error, Result};
use crate::exact::{ratio_of, Rational};

pub const DEFAULT_ORACLE_LIMIT: usize = 10;

/// Brute-force extension enumerator with a size guard.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            limit: DEFAULT_ORACLE_LIMIT,
        }
    }
}

/// Full enumeration result: `before[x][y]` counts extensions placing `x`
/// ahead of `y`.
struct Tally {
    total: u64,
    before: Vec<Vec<u64>>,
}

impl Oracle {
    /// Panics if `limit > 64`; element sets are tracked as bitmasks.
    pub fn with_limit(limit: usize) -> Self {
        assert!(limit <= 64, "oracle limit must fit a 64-bit mask");
        Self { limit }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check(&self, p: &Poset) -> Result<()> {
        if p.size() > self.limit {
            Err(Error::OracleLimit {
                size: p.size(),
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    fn tally(&self, p: &Poset) -> Result<Tally> {
        self.check(p)?;
        let n = p.size();
        let preds: Vec<u64> = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| p.less(y, x))
                    .fold(0u64, |m, y| m | 1 << y)
            })
            .collect();
        let mut tally = Tally {
            total: 0,
            before: vec![vec![0; n]; n],
        };
        let mut order = Vec::with_capacity(n);
        extend(&preds, 0, &mut order, &mut tally);
        Ok(tally)
    }

    pub fn count_extensions(&self, p: &Poset) -> Result<BigUint> {
        Ok(BigUint::from(self.tally(p)?.total))
    }

    /// Probability that `x` precedes `y` in a uniform linear extension;
    /// zero when `x == y`.
    pub fn pair_probability(&self, p: &Poset, x: usize, y: usize) -> Result<Rational> {
        for e in [x, y] {
            if e >= p.size() {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    size: p.size(),
                });
            }
        }
        let t = self.tally(p)?;
        Ok(ratio_of(
            &BigUint::from(t.before[x][y]),
            &BigUint::from(t.total),
        ))
    }

    /// Every pair probability at once: entry `[x][y]` is `P(x before y)`.
    pub fn probability_table(&self, p: &Poset) -> Result<Vec<Vec<Rational>>> {
        let t = self.tally(p)?;
        let total = BigUint::from(t.total);
        Ok(t.before
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&c| ratio_of(&BigUint::from(c), &total))
                    .collect()
            })
            .collect())
    }

    pub fn delta(&self, p: &Poset) -> Result<BalanceReport> {
        let t = self.tally(p)?;
        let n = p.size();
        // min(P(x<y), P(y<x)) is largest when the smaller count is largest
        let mut best = 0u64;
        let mut witness = None;
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let c = t.before[x][y];
                if c == 0 || c > t.total - c {
                    continue;
                }
                if c > best {
                    best = c;
                    witness = Some((x, y));
                }
            }
        }
        let total = BigUint::from(t.total);
        Ok(BalanceReport {
            delta: ratio_of(&BigUint::from(best), &total),
            witness,
            extension_count: total,
        })
    }
}

fn extend(preds: &[u64], placed: u64, order: &mut Vec<usize>, tally: &mut Tally) {
    let n = preds.len();
    if order.len() == n {
        tally.total += 1;
        for (k, &y) in order.iter().enumerate() {
            for &x in &order[..k] {
                tally.before[x][y] += 1;
            }
        }
        return;
    }
    for x in 0..n {
        if placed & (1 << x) == 0 && preds[x] & !placed == 0 {
            order.push(x);
            extend(preds, placed | 1 << x, order, tally);
            order.pop();
        }
    }
}

pub fn count_extensions_oracle(p: &Poset) -> Result<BigUint> {
    Oracle::default().count_extensions(p)
}

pub fn pair_probability_oracle(p: &Poset, x: usize, y: usize) -> Result<Rational> {
    Oracle::default().pair_probability(p, x, y)
}

pub fn delta_oracle(p: &Poset) -> Result<BalanceReport> {
    Oracle::default().delta(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    /// Independent check: count permutations of 0..n that respect `p`.
    fn count_by_permutations(p: &Poset) -> u64 {
        fn rec(p: &Poset, used: &mut Vec<bool>, seq: &mut Vec<usize>, count: &mut u64) {
            let n = p.size();
            if seq.len() == n {
                let ok = (0..n).all(|i| (i + 1..n).all(|j| !p.less(seq[j], seq[i])));
                if ok {
                    *count += 1;
                }
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    seq.push(x);
                    rec(p, used, seq, count);
                    seq.pop();
                    used[x] = false;
                }
            }
        }
        let mut count = 0;
        rec(p, &mut vec![false; p.size()], &mut Vec::new(), &mut count);
        count
    }

    #[test]
    fn extension_counts() {
        assert_eq!(count_by_permutations(&Poset::e3()), 3);
        assert_eq!(
            count_extensions_oracle(&Poset::e3()).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            count_extensions_oracle(&Poset::chain(3)).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            count_extensions_oracle(&Poset::antichain(3)).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            count_extensions_oracle(&Poset::empty()).unwrap(),
            BigUint::from(1u32)
        );
        let n = Poset::from_relations(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        assert_eq!(
            count_extensions_oracle(&n).unwrap(),
            BigUint::from(count_by_permutations(&n))
        );
    }

    #[test]
    fn pair_probabilities() {
        // E with x=0 < y=1 and z=2 isolated
        assert_eq!(
            pair_probability_oracle(&Poset::e3(), 2, 0).unwrap(),
            rat(1, 3)
        );
        assert_eq!(
            pair_probability_oracle(&Poset::chain(2), 0, 1).unwrap(),
            rat(1, 1)
        );
        assert_eq!(
            pair_probability_oracle(&Poset::antichain(2), 0, 1).unwrap(),
            rat(1, 2)
        );
        assert_eq!(
            pair_probability_oracle(&Poset::e3(), 1, 1).unwrap(),
            rat(0, 1)
        );
    }

    #[test]
    fn delta_examples() {
        let e = delta_oracle(&Poset::e3()).unwrap();
        assert_eq!(e.delta, rat(1, 3));
        // ordered pairs attaining 1/3 are (1, 2) and (2, 0)
        assert_eq!(e.witness, Some((1, 2)));
        let c = delta_oracle(&Poset::chain(5)).unwrap();
        assert_eq!(c.delta, rat(0, 1));
        assert_eq!(c.witness, None);
        let ee = Poset::e3().direct_sum(&Poset::e3());
        assert_eq!(delta_oracle(&ee).unwrap().delta, rat(1, 3));
        assert_eq!(
            delta_oracle(&Poset::antichain(2)).unwrap().witness,
            Some((0, 1))
        );
    }

    #[test]
    fn limit_is_enforced() {
        let big = Poset::chain(11);
        assert_eq!(
            count_extensions_oracle(&big),
            Err(Error::OracleLimit {
                size: 11,
                limit: 10
            })
        );
        assert!(Oracle::with_limit(12).count_extensions(&big).is_ok());
    }
}
