use super::Poset;
use crate::error::{Error, Result};

/// A partition of a poset into two chains `a_1 < ... < a_m` and
/// `b_1 < ... < b_n`. An empty `chain_b` encodes a total order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoChainDecomposition {
    pub chain_a: Vec<usize>,
    pub chain_b: Vec<usize>,
}

impl TwoChainDecomposition {
    pub fn new(chain_a: Vec<usize>, chain_b: Vec<usize>) -> Self {
        Self { chain_a, chain_b }
    }

    /// Checks that the two lists partition `p` and are increasing chains.
    pub fn validate(&self, p: &Poset) -> Result<()> {
        if self.chain_a.is_empty() && p.size() > 0 {
            return Err(Error::Precondition("first chain must be nonempty".into()));
        }
        let mut seen = vec![false; p.size()];
        for &x in self.chain_a.iter().chain(&self.chain_b) {
            if x >= p.size() {
                return Err(Error::ElementOutOfRange {
                    element: x,
                    size: p.size(),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::Precondition(format!("element {x} listed twice")));
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::Precondition(format!(
                "element {missing} not covered"
            )));
        }
        for chain in [&self.chain_a, &self.chain_b] {
            if let Some(w) = chain.windows(2).find(|w| !p.less(w[0], w[1])) {
                return Err(Error::Precondition(format!(
                    "{} is not below {} in the poset",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.chain_b.clone(), self.chain_a.clone())
    }
}

/// Maximum matching between the "left" and "right" copies of the elements,
/// with an edge `x -> y` whenever `x < y` (Kuhn's augmenting paths).
fn max_matching(p: &Poset) -> Vec<Option<usize>> {
    let n = p.size();
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    let mut visited = vec![false; n];

    fn augment(
        p: &Poset,
        x: usize,
        visited: &mut [bool],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for y in 0..p.size() {
            if p.less(x, y) && !visited[y] {
                visited[y] = true;
                if match_right[y].is_none_or(|z| augment(p, z, visited, match_right)) {
                    match_right[y] = Some(x);
                    return true;
                }
            }
        }
        false
    }

    for x in 0..n {
        visited.iter_mut().for_each(|v| *v = false);
        augment(p, x, &mut visited, &mut match_right);
    }
    // successor of x in its chain
    let mut next = vec![None; n];
    for (y, m) in match_right.iter().enumerate() {
        if let Some(x) = m {
            next[*x] = Some(y);
        }
    }
    next
}

/// Width (maximum antichain size) and, when the width is at most two, a
/// partition into two chains.
///
/// The minimum chain cover comes from a maximum matching on the comparability
/// relation (Dilworth via König). The longer chain is returned first, ties
/// broken towards the chain holding the smaller element label.
pub fn width_and_decompose(p: &Poset) -> (usize, Option<TwoChainDecomposition>) {
    let n = p.size();
    if n == 0 {
        return (0, None);
    }
    let next = max_matching(p);
    let mut has_pred = vec![false; n];
    for y in next.iter().flatten() {
        has_pred[*y] = true;
    }
    let mut chains: Vec<Vec<usize>> = (0..n)
        .filter(|&x| !has_pred[x])
        .map(|start| {
            let mut chain = vec![start];
            while let Some(y) = next[*chain.last().unwrap()] {
                chain.push(y);
            }
            chain
        })
        .collect();
    let width = chains.len();
    if width > 2 {
        return (width, None);
    }
    chains.sort_by_key(|c| (std::cmp::Reverse(c.len()), *c.iter().min().unwrap()));
    let chain_b = if width == 2 {
        chains.pop().unwrap()
    } else {
        Vec::new()
    };
    let chain_a = chains.pop().unwrap();
    (width, Some(TwoChainDecomposition { chain_a, chain_b }))
}

/// Every ordered two-chain decomposition of a small poset, by subset
/// enumeration. Intended for invariance tests.
pub fn all_two_chain_decompositions(p: &Poset) -> Vec<TwoChainDecomposition> {
    let n = p.size();
    assert!(n <= 20, "subset enumeration is exponential");
    let sorted = |set: Vec<usize>| -> Option<Vec<usize>> {
        let mut set = set;
        set.sort_by_key(|&x| p.down_count(x));
        set.windows(2).all(|w| p.less(w[0], w[1])).then_some(set)
    };
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let a: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
        let b: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) == 0).collect();
        if let (Some(a), Some(b)) = (sorted(a), sorted(b)) {
            out.push(TwoChainDecomposition::new(a, b));
        }
    }
    out
}
