use num_bigint::BigUint;

use super::paths::{path_tables, CrossingCounts};
use super::{CellColor, GridDiagram};
use crate::error::{Error, Result};

/// Cells where `a_i` is at most as likely as not to precede `b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SRegion {
    /// Number of S-cells in each column, counted from the bottom.
    pub s_col_heights: Vec<usize>,
    /// Lattice points of the border path from `(0, 0)` to `(m, n)`.
    pub boundary_path: Vec<(usize, usize)>,
}

impl SRegion {
    pub fn contains(&self, m: usize, i: usize, j: usize) -> bool {
        i + self.s_col_heights[j - 1] > m
    }
}

/// Computes S and its border, checking that S is a bottom-left justified
/// shape containing every blue cell and no red cell, and that the border is
/// a valid path.
pub fn s_region(g: &GridDiagram) -> Result<SRegion> {
    let (m, n) = (g.rows(), g.cols());
    let counts = CrossingCounts::new(&path_tables(g));
    let in_s = |i: usize, j: usize| -> bool {
        let twice: BigUint = counts.below(i, j) * 2u32;
        twice <= counts.total
    };
    let mut heights = Vec::with_capacity(n);
    for j in 1..=n {
        let h = (1..=m).rev().take_while(|&i| in_s(i, j)).count();
        if (1..=m - h).any(|i| in_s(i, j)) {
            return Err(Error::Geometry(format!(
                "S is not bottom-justified in column {j}"
            )));
        }
        heights.push(h);
    }
    if heights.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Geometry("S is not left-justified".into()));
    }
    for i in 1..=m {
        for j in 1..=n {
            let bad = match g.color(i, j) {
                CellColor::Blue => !in_s(i, j),
                CellColor::Red => in_s(i, j),
                CellColor::Uncolored => false,
            };
            if bad {
                return Err(Error::Geometry(format!(
                    "cell ({i}, {j}) on the wrong side of S"
                )));
            }
        }
    }
    let mut path = vec![(0, 0)];
    let mut row = 0;
    for (j, &h) in heights.iter().enumerate() {
        while row < m - h {
            row += 1;
            path.push((row, j));
        }
        path.push((row, j + 1));
    }
    while row < m {
        row += 1;
        path.push((row, n));
    }
    if let Some(&(i, j)) = path.iter().find(|&&(i, j)| !g.point_valid(i, j)) {
        return Err(Error::Geometry(format!(
            "border of S leaves the grid at ({i}, {j})"
        )));
    }
    Ok(SRegion {
        s_col_heights: heights,
        boundary_path: path,
    })
}

/// Lattice points `(i, j)` other than the two corners where the grid splits as
/// a direct sum: `{a_1..a_i, b_1..b_j}` lies entirely below the rest.
///
/// A split needs `b_j < a_{i+1}` (blue cell to the lower left) and
/// `a_i < b_{j+1}` (red cell to the upper right). Conditions involving a
/// missing element hold vacuously, which covers the corner-cell cases.
pub fn detect_direct_sum(g: &GridDiagram) -> Vec<(usize, usize)> {
    let (m, n) = (g.rows(), g.cols());
    let mut splits = Vec::new();
    for i in 0..=m {
        for j in 0..=n {
            if (i, j) == (0, 0) || (i, j) == (m, n) {
                continue;
            }
            let blue_ok = i == m || j == 0 || g.is_blue(i + 1, j);
            let red_ok = j == n || i == 0 || g.is_red(i, j + 1);
            if blue_ok && red_ok {
                splits.push((i, j));
            }
        }
    }
    splits
}
