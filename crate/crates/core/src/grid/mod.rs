//! Grid diagrams of width-2 posets and lattice-path counting.
//!
//! A poset split into chains `a_1 < ... < a_m` and `b_1 < ... < b_n` is drawn
//! as an `m x n` grid of cells. Row `i` belongs to `a_i` and column `j` to
//! `b_j`; row 0 is at the top. Cell `C(i, j)` is red when `a_i < b_j` and
//! blue when `b_j < a_i`. Red cells hug the top-right corner and blue cells
//! the bottom-left corner.
//!
//! Linear extensions correspond to down-right lattice paths from `(0, 0)` to
//! `(m, n)` that stay between the two colored regions: being at point
//! `(i, j)` means `a_1..a_i` and `b_1..b_j` have been placed.

mod logconcave;
mod paths;
mod region;

pub use logconcave::{
    check_log_concavity, check_sequence, prefix_sums_logconcave, LogConcavityReport, Violation,
};
pub use paths::{
    count_above, count_below, delta_grid, pair_probabilities, path_tables, probability_matrix,
    CrossingCounts, PathTables,
};
pub use region::{detect_direct_sum, s_region, SRegion};

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poset::{Poset, TwoChainDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellColor {
    Uncolored,
    Red,
    Blue,
}

impl CellColor {
    pub fn glyph(self) -> char {
        match self {
            CellColor::Uncolored => '.',
            CellColor::Red => 'R',
            CellColor::Blue => 'B',
        }
    }
}

/// Two disjoint staircases in an `m x n` grid.
///
/// Rows and columns are 1-based in the accessors, matching the usual cell
/// naming `C(i, j)`; the vectors themselves are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridDiagram {
    m: usize,
    n: usize,
    red_row_lengths: Vec<usize>,
    blue_col_heights: Vec<usize>,
    labels_a: Vec<usize>,
    labels_b: Vec<usize>,
    // smallest column index a path may occupy in row i (0..=m)
    min_col: Vec<usize>,
    // smallest row index a path may occupy in column j (0..=n)
    min_row: Vec<usize>,
}

impl GridDiagram {
    /// Grid from its two shapes. Labels default to `a_i -> i - 1` and
    /// `b_j -> m + j - 1`.
    pub fn from_shapes(red_row_lengths: Vec<usize>, blue_col_heights: Vec<usize>) -> Result<Self> {
        let m = red_row_lengths.len();
        let n = blue_col_heights.len();
        Self::with_labels(
            red_row_lengths,
            blue_col_heights,
            (0..m).collect(),
            (m..m + n).collect(),
        )
    }

    fn with_labels(
        red_row_lengths: Vec<usize>,
        blue_col_heights: Vec<usize>,
        labels_a: Vec<usize>,
        labels_b: Vec<usize>,
    ) -> Result<Self> {
        let m = red_row_lengths.len();
        let n = blue_col_heights.len();
        let shape_err = |msg: String| Err(Error::BadDecomposition(msg));
        if red_row_lengths.iter().any(|&r| r > n) || blue_col_heights.iter().any(|&b| b > m) {
            return shape_err("shape exceeds grid".into());
        }
        if red_row_lengths.windows(2).any(|w| w[0] < w[1]) {
            return shape_err("red rows are not top-right justified".into());
        }
        if blue_col_heights.windows(2).any(|w| w[0] < w[1]) {
            return shape_err("blue columns are not bottom-left justified".into());
        }
        let min_col: Vec<usize> = (0..=m)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    blue_col_heights.iter().take_while(|&&h| h > m - i).count()
                }
            })
            .collect();
        let min_row: Vec<usize> = (0..=n)
            .map(|j| {
                if j == 0 {
                    0
                } else {
                    red_row_lengths.iter().take_while(|&&r| r > n - j).count()
                }
            })
            .collect();
        let grid = Self {
            m,
            n,
            red_row_lengths,
            blue_col_heights,
            labels_a,
            labels_b,
            min_col,
            min_row,
        };
        for i in 1..=m {
            for j in 1..=n {
                if grid.is_red(i, j) && grid.is_blue(i, j) {
                    return shape_err(format!("cell ({i}, {j}) is both red and blue"));
                }
            }
        }
        Ok(grid)
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn red_row_lengths(&self) -> &[usize] {
        &self.red_row_lengths
    }

    pub fn blue_col_heights(&self) -> &[usize] {
        &self.blue_col_heights
    }

    /// Poset label of `a_i` (1-based `i`).
    pub fn label_a(&self, i: usize) -> usize {
        self.labels_a[i - 1]
    }

    /// Poset label of `b_j` (1-based `j`).
    pub fn label_b(&self, j: usize) -> usize {
        self.labels_b[j - 1]
    }

    pub fn is_red(&self, i: usize, j: usize) -> bool {
        j + self.red_row_lengths[i - 1] > self.n
    }

    pub fn is_blue(&self, i: usize, j: usize) -> bool {
        i + self.blue_col_heights[j - 1] > self.m
    }

    pub fn color(&self, i: usize, j: usize) -> CellColor {
        if self.is_red(i, j) {
            CellColor::Red
        } else if self.is_blue(i, j) {
            CellColor::Blue
        } else {
            CellColor::Uncolored
        }
    }

    /// Whether a valid path may pass through point `(i, j)`: the placed
    /// elements must form a down-set.
    pub fn point_valid(&self, i: usize, j: usize) -> bool {
        i <= self.m && j <= self.n && j >= self.min_col[i] && i >= self.min_row[j]
    }

    /// The poset drawn by this grid, labeled as the grid's chains.
    pub fn to_poset(&self) -> Poset {
        let size = self.m + self.n;
        let mut pairs = Vec::new();
        for i in 1..self.m {
            pairs.push((self.label_a(i), self.label_a(i + 1)));
        }
        for j in 1..self.n {
            pairs.push((self.label_b(j), self.label_b(j + 1)));
        }
        for i in 1..=self.m {
            for j in 1..=self.n {
                match self.color(i, j) {
                    CellColor::Red => pairs.push((self.label_a(i), self.label_b(j))),
                    CellColor::Blue => pairs.push((self.label_b(j), self.label_a(i))),
                    CellColor::Uncolored => {}
                }
            }
        }
        Poset::from_relations(size, &pairs).expect("grid shapes always describe a poset")
    }

    /// ASCII drawing with row 0 at the top. Vertex rows show `+`, or `*` for
    /// points on `boundary`; cell rows show `.`, `R` or `B`.
    pub fn render_ascii(&self, boundary: Option<&[(usize, usize)]>) -> String {
        let on_path = |i: usize, j: usize| boundary.is_some_and(|b| b.contains(&(i, j)));
        let mut out = String::new();
        for i in 0..=self.m {
            let vertices: Vec<String> = (0..=self.n)
                .map(|j| if on_path(i, j) { "*" } else { "+" }.to_string())
                .collect();
            let _ = writeln!(out, "{}", vertices.join(" "));
            if i < self.m {
                let cells: String = (1..=self.n)
                    .map(|j| format!(" {}", self.color(i + 1, j).glyph()))
                    .collect();
                let _ = writeln!(out, "{cells}");
            }
        }
        out
    }
}

/// Grid diagram of `p` with respect to `dec`.
pub fn build_grid(p: &Poset, dec: &TwoChainDecomposition) -> Result<GridDiagram> {
    dec.validate(p)?;
    let (a, b) = (&dec.chain_a, &dec.chain_b);
    let red: Vec<usize> = a
        .iter()
        .map(|&x| b.iter().filter(|&&y| p.less(x, y)).count())
        .collect();
    let blue: Vec<usize> = b
        .iter()
        .map(|&y| a.iter().filter(|&&x| p.less(y, x)).count())
        .collect();
    let grid = GridDiagram::with_labels(red, blue, a.clone(), b.clone()).map_err(|e| match e {
        Error::BadDecomposition(msg) => {
            Error::BadDecomposition(format!("decomposition inconsistent with poset: {msg}"))
        }
        other => other,
    })?;
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            let color = grid.color(i + 1, j + 1);
            if (color == CellColor::Red) != p.less(x, y)
                || (color == CellColor::Blue) != p.less(y, x)
            {
                return Err(Error::BadDecomposition(
                    "decomposition inconsistent with poset".into(),
                ));
            }
        }
    }
    Ok(grid)
}

/// Grid of a width-2 poset using the canonical chain cover.
pub fn grid_of(p: &Poset) -> Result<GridDiagram> {
    match crate::poset::width_and_decompose(p) {
        (w, _) if w > 2 => Err(Error::WidthTooLarge(w)),
        (_, Some(dec)) => build_grid(p, &dec),
        (_, None) => Ok(GridDiagram::from_shapes(Vec::new(), Vec::new())?),
    }
}
