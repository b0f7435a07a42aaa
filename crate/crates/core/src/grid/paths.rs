use num_bigint::BigUint;
use num_traits::Zero;

use super::GridDiagram;
use crate::error::Result;
use crate::exact::{ratio_of, Rational};
use crate::poset::{BalanceReport, Poset};

/// Forward and backward path counts.
///
/// `t[i][j]` counts valid down-right paths from `(0, 0)` to `(i, j)` and
/// `r[i][j]` counts valid paths from `(i, j)` to `(m, n)`. Points no valid
/// path can visit carry zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathTables {
    pub t: Vec<Vec<BigUint>>,
    pub r: Vec<Vec<BigUint>>,
}

impl PathTables {
    pub fn rows(&self) -> usize {
        self.t.len() - 1
    }

    pub fn cols(&self) -> usize {
        self.t[0].len() - 1
    }

    /// Number of linear extensions.
    pub fn extension_count(&self) -> &BigUint {
        &self.r[0][0]
    }

    /// Paths through point `(i, j)`.
    pub fn through(&self, i: usize, j: usize) -> BigUint {
        &self.t[i][j] * &self.r[i][j]
    }

    /// Paths that take the step `(i, j - 1) -> (i, j)`.
    fn crossing(&self, i: usize, j: usize) -> BigUint {
        &self.t[i][j - 1] * &self.r[i][j]
    }
}

/// Fills both tables by dynamic programming.
pub fn path_tables(g: &GridDiagram) -> PathTables {
    let (m, n) = (g.rows(), g.cols());
    let mut t = vec![vec![BigUint::zero(); n + 1]; m + 1];
    let mut r = vec![vec![BigUint::zero(); n + 1]; m + 1];
    for i in 0..=m {
        for j in 0..=n {
            if !g.point_valid(i, j) {
                continue;
            }
            t[i][j] = if i == 0 && j == 0 {
                BigUint::from(1u32)
            } else {
                let up = if i > 0 {
                    t[i - 1][j].clone()
                } else {
                    BigUint::zero()
                };
                let left = if j > 0 { &t[i][j - 1] } else { &BigUint::ZERO };
                up + left
            };
        }
    }
    for i in (0..=m).rev() {
        for j in (0..=n).rev() {
            if !g.point_valid(i, j) {
                continue;
            }
            r[i][j] = if i == m && j == n {
                BigUint::from(1u32)
            } else {
                let down = if i < m {
                    r[i + 1][j].clone()
                } else {
                    BigUint::zero()
                };
                let right = if j < n { &r[i][j + 1] } else { &BigUint::ZERO };
                down + right
            };
        }
    }
    PathTables { t, r }
}

/// Paths passing below cell `C(i, j)`, i.e. extensions with `a_i` before `b_j`.
pub fn count_below(tables: &PathTables, i: usize, j: usize) -> Result<BigUint> {
    check(tables, i, j)?;
    Ok((i..=tables.rows()).map(|k| tables.crossing(k, j)).sum())
}

/// Paths passing above cell `C(i, j)`, i.e. extensions with `b_j` before `a_i`.
pub fn count_above(tables: &PathTables, i: usize, j: usize) -> Result<BigUint> {
    check(tables, i, j)?;
    Ok((0..i).map(|k| tables.crossing(k, j)).sum())
}

fn check(tables: &PathTables, i: usize, j: usize) -> Result<()> {
    let (m, n) = (tables.rows(), tables.cols());
    if (1..=m).contains(&i) && (1..=n).contains(&j) {
        Ok(())
    } else {
        Err(crate::Error::CellOutOfRange {
            row: i,
            col: j,
            rows: m,
            cols: n,
        })
    }
}

/// Below-counts for every cell at once, via suffix sums down each column.
#[derive(Clone, Debug)]
pub struct CrossingCounts {
    /// `below[i - 1][j - 1]` for cell `C(i, j)`.
    pub below: Vec<Vec<BigUint>>,
    pub total: BigUint,
}

impl CrossingCounts {
    pub fn new(tables: &PathTables) -> Self {
        let (m, n) = (tables.rows(), tables.cols());
        let mut below = vec![vec![BigUint::zero(); n]; m];
        for j in 1..=n {
            let mut acc = tables.crossing(m, j);
            for i in (1..=m).rev() {
                below[i - 1][j - 1] = acc.clone();
                acc += tables.crossing(i - 1, j);
            }
        }
        Self {
            below,
            total: tables.extension_count().clone(),
        }
    }

    pub fn below(&self, i: usize, j: usize) -> &BigUint {
        &self.below[i - 1][j - 1]
    }

    pub fn above(&self, i: usize, j: usize) -> BigUint {
        &self.total - self.below(i, j)
    }
}

/// `P(a_i before b_j)` for every cell; rows are `a_1..a_m`.
pub fn probability_matrix(g: &GridDiagram) -> Vec<Vec<Rational>> {
    let counts = CrossingCounts::new(&path_tables(g));
    counts
        .below
        .iter()
        .map(|row| row.iter().map(|c| ratio_of(c, &counts.total)).collect())
        .collect()
}

/// `P(x before y)` for every ordered pair of elements of a width-2 poset,
/// indexed by poset labels. Pairs inside one chain are 0 or 1; the diagonal
/// is 0.
pub fn pair_probabilities(p: &Poset) -> Result<Vec<Vec<Rational>>> {
    let n = p.size();
    let g = super::grid_of(p)?;
    let cells = probability_matrix(&g);
    let mut out: Vec<Vec<Rational>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| Rational::from_integer(u8::from(p.less(x, y)).into()))
                .collect()
        })
        .collect();
    for i in 1..=g.rows() {
        for j in 1..=g.cols() {
            let (x, y) = (g.label_a(i), g.label_b(j));
            let pr = cells[i - 1][j - 1].clone();
            out[y][x] = Rational::from_integer(1.into()) - &pr;
            out[x][y] = pr;
        }
    }
    Ok(out)
}

/// Balance constant from the grid.
///
/// Every cell contributes `min(below, above)`; colored cells contribute zero.
/// The witness is the smallest ordered pair of poset labels `(x, y)` with
/// `P(x before y) = delta`, so it agrees with the brute-force oracle.
pub fn delta_grid(g: &GridDiagram) -> BalanceReport {
    let counts = CrossingCounts::new(&path_tables(g));
    delta_from_counts(g, &counts)
}

pub(crate) fn delta_from_counts(g: &GridDiagram, counts: &CrossingCounts) -> BalanceReport {
    let mut best = BigUint::zero();
    let mut witness: Option<(usize, usize)> = None;
    for i in 1..=g.rows() {
        for j in 1..=g.cols() {
            let below = counts.below(i, j);
            let above = counts.above(i, j);
            let low = below.min(&above);
            if low.is_zero() || *low < best {
                continue;
            }
            let (x, y) = (g.label_a(i), g.label_b(j));
            let mut candidates = Vec::with_capacity(2);
            if *below <= above {
                candidates.push((x, y));
            }
            if above <= *below {
                candidates.push((y, x));
            }
            let pick = candidates
                .into_iter()
                .min()
                .expect("one side is the minimum");
            if *low > best {
                best = low.clone();
                witness = Some(pick);
            } else if witness.is_none_or(|w| pick < w) {
                witness = Some(pick);
            }
        }
    }
    BalanceReport {
        delta: ratio_of(&best, &counts.total),
        witness,
        extension_count: counts.total.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::grid::build_grid;
    use crate::poset::{Poset, TwoChainDecomposition};

    fn e3_grid() -> GridDiagram {
        build_grid(
            &Poset::e3(),
            &TwoChainDecomposition::new(vec![0, 1], vec![2]),
        )
        .unwrap()
    }

    fn binomial(n: u64, k: u64) -> BigUint {
        (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn tables_for_e3() {
        let t = path_tables(&e3_grid());
        assert_eq!(t.t[2][1], BigUint::from(3u32));
        assert_eq!(*t.extension_count(), BigUint::from(3u32));
        assert_eq!(count_below(&t, 1, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(count_above(&t, 1, 1).unwrap(), BigUint::from(1u32));
        assert!(count_below(&t, 3, 1).is_err());
        assert!(count_above(&t, 1, 0).is_err());
    }

    #[test]
    fn free_grid_counts_binomials() {
        for (m, n) in [(1, 1), (3, 2), (4, 4), (0, 3)] {
            let g = GridDiagram::from_shapes(vec![0; m], vec![0; n]).unwrap();
            let t = path_tables(&g);
            assert_eq!(t.t[m][n], binomial((m + n) as u64, m as u64));
        }
    }

    #[test]
    fn red_cells_have_nothing_above() {
        let g = GridDiagram::from_shapes(vec![2, 1, 0], vec![1, 0]).unwrap();
        let t = path_tables(&g);
        for i in 1..=3 {
            for j in 1..=2 {
                if g.is_red(i, j) {
                    assert!(count_above(&t, i, j).unwrap().is_zero());
                }
                if g.is_blue(i, j) {
                    assert!(count_below(&t, i, j).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn probability_examples() {
        assert_eq!(
            probability_matrix(&e3_grid()),
            vec![vec![rat(2, 3)], vec![rat(1, 3)]]
        );
        let red = GridDiagram::from_shapes(vec![1], vec![0]).unwrap();
        assert_eq!(probability_matrix(&red), vec![vec![rat(1, 1)]]);
        let row = GridDiagram::from_shapes(vec![0], vec![0; 4]).unwrap();
        assert_eq!(
            probability_matrix(&row),
            vec![vec![rat(1, 5), rat(2, 5), rat(3, 5), rat(4, 5)]]
        );
    }

    #[test]
    fn delta_examples() {
        let e = delta_grid(&e3_grid());
        assert_eq!(e.delta, rat(1, 3));
        assert_eq!(e.witness, Some((1, 2)));
        for k in 1..6i64 {
            let even = GridDiagram::from_shapes(vec![0], vec![0; 2 * k as usize]).unwrap();
            assert_eq!(delta_grid(&even).delta, rat(k, 2 * k + 1));
            let odd = GridDiagram::from_shapes(vec![0], vec![0; 2 * k as usize + 1]).unwrap();
            assert_eq!(delta_grid(&odd).delta, rat(1, 2));
        }
        let chain = GridDiagram::from_shapes(vec![0; 4], vec![]).unwrap();
        let report = delta_grid(&chain);
        assert_eq!(report.delta, rat(0, 1));
        assert_eq!(report.witness, None);
        assert!(probability_matrix(&chain).iter().all(|r| r.is_empty()));
    }

    #[test]
    fn crossing_counts_match_direct_sums() {
        let g = GridDiagram::from_shapes(vec![3, 1, 1, 0], vec![2, 1, 0]).unwrap();
        let t = path_tables(&g);
        let c = CrossingCounts::new(&t);
        for i in 1..=4 {
            for j in 1..=3 {
                assert_eq!(*c.below(i, j), count_below(&t, i, j).unwrap());
                assert_eq!(c.above(i, j), count_above(&t, i, j).unwrap());
            }
        }
    }
}
