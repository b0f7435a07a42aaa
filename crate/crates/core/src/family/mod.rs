//! The family `T_n` of width-2 posets whose balance constants decrease to
//! `beta = (5864893 + 27*sqrt(57)) / 16812976`.
//!
//! `T_n` is described by its grid diagram: `2n + 21` rows and `2n + 20`
//! columns, symmetric under a half turn. The valid lattice points of each
//! row form an interval. The first ten rows are read off the support of the
//! reference corner table, the last ten follow by symmetry, and the middle
//! is a band of period two in which rows `2m + 8` and `2m + 9` both allow
//! columns `2m + 6 ..= 2m + 10`.
//!
//! Every claim about the family is checked against the raw path counts;
//! nothing here is taken from the recurrences without comparing.

mod appendix;
mod tables;

pub use appendix::{verify_appendix, verify_appendix_bounded, AppendixReport, CheckResult};
pub use tables::Side;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exact::{ratio_of, Rational};
use crate::grid::{delta_grid, path_tables, CrossingCounts, GridDiagram, PathTables};
use crate::poset::Poset;

pub const DEFAULT_APPENDIX_BOUND: usize = 200;

/// Grid and path tables of `T_n`.
#[derive(Clone, Debug)]
pub struct TnGeometry {
    pub n: usize,
    pub grid: GridDiagram,
    pub tables: PathTables,
}

/// The sequences attached to `T_n`, read from the path tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TnState {
    pub n: usize,
    /// `a[m - 1] = a_m` for `1 <= m <= n + 1`.
    pub a: Vec<BigUint>,
    pub b: Vec<BigUint>,
    /// `f[m - 1] = a_m / b_m`.
    pub f: Vec<Rational>,
    /// Number of linear extensions of `T_n`.
    pub p: BigUint,
}

impl TnState {
    /// The same sequences from `(a_1, b_1) = (19212, 35784)` and the transfer
    /// `(a, b) -> (3a + 3b, 4a + 6b)`, without any path counting.
    pub fn from_recurrence(n: usize) -> Self {
        let mut a = vec![BigUint::from(19212u32)];
        let mut b = vec![BigUint::from(35784u32)];
        for m in 0..n {
            let (am, bm) = (&a[m], &b[m]);
            let next_a = am * 3u32 + bm * 3u32;
            let next_b = am * 4u32 + bm * 6u32;
            a.push(next_a);
            b.push(next_b);
        }
        let p = &a[n] * 16572u32 + &b[n] * 19212u32;
        Self::assemble(n, a, b, p)
    }

    fn assemble(n: usize, a: Vec<BigUint>, b: Vec<BigUint>, p: BigUint) -> Self {
        let f = a.iter().zip(&b).map(|(x, y)| ratio_of(x, y)).collect();
        Self { n, a, b, f, p }
    }

    /// `a_m`, 1-based.
    pub fn a_at(&self, m: usize) -> &BigUint {
        &self.a[m - 1]
    }

    /// `b_m`, 1-based.
    pub fn b_at(&self, m: usize) -> &BigUint {
        &self.b[m - 1]
    }

    /// Paths above `C(1, 1)`: `5781 a_{n+1} + 6702 b_{n+1}`.
    pub fn minority_count(&self) -> BigUint {
        self.a_at(self.n + 1) * 5781u32 + self.b_at(self.n + 1) * 6702u32
    }

    /// `x * a_{n+1} + y * b_{n+1}`.
    pub fn combine(&self, x: u32, y: u32) -> BigUint {
        self.a_at(self.n + 1) * x + self.b_at(self.n + 1) * y
    }
}

impl TnGeometry {
    pub fn rows(&self) -> usize {
        2 * self.n + 21
    }

    pub fn cols(&self) -> usize {
        2 * self.n + 20
    }

    pub fn t(&self, i: usize, j: usize) -> &BigUint {
        &self.tables.t[i][j]
    }

    pub fn r(&self, i: usize, j: usize) -> &BigUint {
        &self.tables.r[i][j]
    }

    /// Rows and columns of the rectangle `R_m`: rows `2m+9 ..= 2m+11`,
    /// columns `2m+9 ..= 2m+10`.
    pub fn rectangle(
        m: usize,
    ) -> (
        std::ops::RangeInclusive<usize>,
        std::ops::RangeInclusive<usize>,
    ) {
        (2 * m + 9..=2 * m + 11, 2 * m + 9..=2 * m + 10)
    }
}

/// Interval of valid columns in each row `0..=2n+21`.
fn row_intervals(n: usize) -> Result<Vec<(usize, usize)>> {
    let rows = 2 * n + 21;
    let cols = 2 * n + 20;
    let mut corner = Vec::with_capacity(10);
    for (i, row) in tables::TOP_T.iter().take(10).enumerate() {
        let lo = row.iter().position(|&v| v != 0);
        let hi = row.iter().rposition(|&v| v != 0);
        match (lo, hi) {
            (Some(lo), Some(hi)) if row[lo..=hi].iter().all(|&v| v != 0) => corner.push((lo, hi)),
            _ => return Err(geometry(format!("corner row {i} has no interval support"))),
        }
    }
    let mut intervals = vec![(0, 0); rows + 1];
    for (i, &iv) in corner.iter().enumerate() {
        intervals[i] = iv;
        intervals[rows - i] = (cols - iv.1, cols - iv.0);
    }
    for (i, iv) in intervals.iter_mut().enumerate().take(rows - 9).skip(10) {
        let m = (i - 8) / 2;
        *iv = (2 * m + 6, 2 * m + 10);
    }
    Ok(intervals)
}

fn geometry(msg: String) -> Error {
    Error::Geometry(format!("geometry reconstruction failed: {msg}"))
}

/// Builds `T_n` and checks it against every anchor: the corner table, the
/// half-turn symmetry, the values `a_m`, `b_m` on the diagonal and their
/// transfer across each rectangle, and the extension count.
pub fn build_tn(n: usize) -> Result<(TnGeometry, TnState)> {
    if n == 0 {
        return Err(Error::Precondition("T_n needs n >= 1".into()));
    }
    let rows = 2 * n + 21;
    let cols = 2 * n + 20;
    let intervals = row_intervals(n)?;
    if intervals
        .windows(2)
        .any(|w| w[0].0 > w[1].0 || w[0].1 > w[1].1)
    {
        return Err(geometry("row intervals are not monotone".into()));
    }
    // blue cells of row i are columns 1..=L(i); red cells are columns past H(i-1)
    let red_row_lengths: Vec<usize> = (1..=rows).map(|i| cols - intervals[i - 1].1).collect();
    let blue_col_heights: Vec<usize> = (1..=cols)
        .map(|j| (1..=rows).filter(|&i| intervals[i].0 >= j).count())
        .collect();
    let grid = GridDiagram::from_shapes(red_row_lengths, blue_col_heights)
        .map_err(|e| geometry(e.to_string()))?;
    for (i, &(lo, hi)) in intervals.iter().enumerate() {
        for j in 0..=cols {
            if grid.point_valid(i, j) != (lo..=hi).contains(&j) {
                return Err(geometry(format!(
                    "point ({i}, {j}) disagrees with its row interval"
                )));
            }
        }
    }
    let tables = path_tables(&grid);
    let geo = TnGeometry { n, grid, tables };

    for (i, row) in tables::TOP_T.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if *geo.t(i, j) != BigUint::from(v) {
                return Err(geometry(format!(
                    "t[{i}][{j}] = {} but the corner table has {v}",
                    geo.t(i, j)
                )));
            }
        }
    }
    for i in 0..=rows {
        for j in 0..=cols {
            if geo.r(i, j) != geo.t(rows - i, cols - j) {
                return Err(geometry(format!("half-turn symmetry fails at ({i}, {j})")));
            }
        }
    }
    let a: Vec<BigUint> = (1..=n + 1)
        .map(|m| geo.t(2 * m + 8, 2 * m + 8).clone())
        .collect();
    let b: Vec<BigUint> = (1..=n + 1)
        .map(|m| geo.t(2 * m + 9, 2 * m + 8).clone())
        .collect();
    let state = TnState::assemble(n, a, b, geo.tables.extension_count().clone());
    let expected = TnState::from_recurrence(n);
    if state != expected {
        return Err(geometry(
            "diagonal values do not follow the transfer (a, b) -> (3a+3b, 4a+6b)".into(),
        ));
    }
    if *geo.t(rows, cols) != state.combine(16572, 19212) {
        return Err(geometry(
            "extension count differs from 16572 a_{n+1} + 19212 b_{n+1}".into(),
        ));
    }
    Ok((geo, state))
}

/// `delta(T_n)` from the closed form, confirmed against a scan of every
/// cell of the grid.
pub fn tn_delta(n: usize) -> Result<Rational> {
    let (geo, state) = build_tn(n)?;
    tn_delta_of(&geo, &state)
}

pub(crate) fn tn_delta_of(geo: &TnGeometry, state: &TnState) -> Result<Rational> {
    let closed = ratio_of(&state.minority_count(), &state.p);
    let scanned = delta_grid(&geo.grid);
    if scanned.delta != closed {
        return Err(Error::Verification(format!(
            "delta(T_{}) claim violated: closed form {closed}, full scan {}",
            geo.n, scanned.delta
        )));
    }
    Ok(closed)
}

/// The poset `T_n`, recovered from path counts alone: `a_i < b_j` exactly
/// when no path passes above `C(i, j)`, and `b_j < a_i` exactly when none
/// passes below. `a_i` is labeled `i - 1` and `b_j` is `2n + 20 + j`.
pub fn tn_export_poset(n: usize) -> Result<Poset> {
    let (geo, _) = build_tn(n)?;
    Ok(export_from_counts(&geo))
}

fn export_from_counts(geo: &TnGeometry) -> Poset {
    let (rows, cols) = (geo.rows(), geo.cols());
    let counts = CrossingCounts::new(&geo.tables);
    let mut pairs = Vec::new();
    pairs.extend((1..rows).map(|i| (i - 1, i)));
    pairs.extend((1..cols).map(|j| (rows + j - 1, rows + j)));
    for i in 1..=rows {
        for j in 1..=cols {
            let (x, y) = (i - 1, rows + j - 1);
            if counts.above(i, j) == BigUint::ZERO {
                pairs.push((x, y));
            }
            if *counts.below(i, j) == BigUint::ZERO {
                pairs.push((y, x));
            }
        }
    }
    Poset::from_relations(rows + cols, &pairs).expect("path counts describe a poset")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{build_grid, detect_direct_sum};
    use crate::poset::{width_and_decompose, TwoChainDecomposition};

    #[test]
    fn t1_anchors() {
        let (geo, state) = build_tn(1).unwrap();
        assert_eq!(*geo.t(10, 10), BigUint::from(19212u32));
        assert_eq!(*geo.t(11, 10), BigUint::from(35784u32));
        assert_eq!(*state.a_at(2), BigUint::from(164988u32));
        assert_eq!(*state.b_at(2), BigUint::from(291552u32));
        assert_eq!(state.p, BigUint::from(16572u64 * 164988 + 19212 * 291552));
        assert_eq!(*geo.r(0, 1), state.combine(5781, 6702));
    }

    #[test]
    fn t1_delta_closed_form() {
        let expected = ratio_of(
            &BigUint::from(5781u64 * 164988 + 6702 * 291552),
            &BigUint::from(16572u64 * 164988 + 19212 * 291552),
        );
        assert_eq!(tn_delta(1).unwrap(), expected);
    }

    #[test]
    fn band_values() {
        let (geo, state) = build_tn(4).unwrap();
        for m in 1..=4 {
            let (am, bm) = (state.a_at(m), state.b_at(m));
            assert_eq!(geo.t(2 * m + 8, 2 * m + 9), am);
            assert_eq!(geo.t(2 * m + 8, 2 * m + 10), am);
            assert_eq!(*geo.t(2 * m + 9, 2 * m + 9), am + bm);
            assert_eq!(*geo.t(2 * m + 9, 2 * m + 10), am * 2u32 + bm);
            assert_eq!(*geo.t(2 * m + 10, 2 * m + 9), am + bm * 2u32);
        }
    }

    #[test]
    fn recurrence_and_dp_agree() {
        for n in [1, 2, 7, 15] {
            let (_, state) = build_tn(n).unwrap();
            assert_eq!(state, TnState::from_recurrence(n));
        }
        assert!(build_tn(0).is_err());
    }

    #[test]
    fn exported_poset_round_trip() {
        let (geo, _) = build_tn(1).unwrap();
        let p = tn_export_poset(1).unwrap();
        assert_eq!(p.size(), 45);
        assert_eq!(width_and_decompose(&p).0, 2);
        let dec = TwoChainDecomposition::new((0..23).collect(), (23..45).collect());
        let rebuilt = build_grid(&p, &dec).unwrap();
        assert_eq!(rebuilt, geo.grid);
        assert_eq!(path_tables(&rebuilt), geo.tables);
        assert!(detect_direct_sum(&geo.grid).is_empty());
    }
}
