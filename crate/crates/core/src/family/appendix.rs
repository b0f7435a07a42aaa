//! Exact checks of every numeric claim about `T_n`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use super::tables::{Side, BOTTOM_C, BOTTOM_D, CORNER_CELLS, TOP_T};
use super::{build_tn, tn_delta_of, TnGeometry, TnState, DEFAULT_APPENDIX_BOUND};
use crate::error::{Error, Result};
use crate::exact::{beta, rat, rat_from_int, ratio_limit, QuadraticNumber};
use crate::grid::{CellColor, CrossingCounts};

/// One verified claim. `index` is the `m` the claim is about, or `n` for
/// claims about the whole grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub index: usize,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "CHECK {} {} {}", self.name, self.index, status)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixReport {
    pub n: usize,
    pub checks: Vec<CheckResult>,
}

impl AppendixReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `CHECK <name> <m> PASS|FAIL`, one per line.
    pub fn lines(&self) -> Vec<String> {
        self.checks.iter().map(|c| c.to_string()).collect()
    }
}

struct Recorder {
    checks: Vec<CheckResult>,
}

impl Recorder {
    fn push(&mut self, name: &str, index: usize, passed: bool, detail: String) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            index,
            passed,
            detail,
        });
    }

    fn compare<T: PartialEq + fmt::Display>(&mut self, name: &str, index: usize, lhs: T, rhs: T) {
        let passed = lhs == rhs;
        self.push(name, index, passed, format!("{lhs} vs {rhs}"));
    }

    fn less<T: PartialOrd + fmt::Display>(&mut self, name: &str, index: usize, lhs: T, rhs: T) {
        let passed = lhs < rhs;
        self.push(name, index, passed, format!("{lhs} < {rhs}"));
    }
}

/// Runs every check for `T_n` with the default size bound.
pub fn verify_appendix(n: usize) -> Result<AppendixReport> {
    verify_appendix_bounded(n, DEFAULT_APPENDIX_BOUND)
}

pub fn verify_appendix_bounded(n: usize, bound: usize) -> Result<AppendixReport> {
    if n == 0 || n > bound {
        return Err(Error::Precondition(format!(
            "n must lie in 1..={bound}, got {n}"
        )));
    }
    let (geo, state) = build_tn(n)?;
    let mut rec = Recorder { checks: Vec::new() };
    corner_tables(&geo, &state, &mut rec);
    corner_cells(&geo, &state, &mut rec);
    rectangles(&geo, &state, &mut rec);
    ratios(&state, &mut rec);
    log_convexity(&state, &mut rec);
    closed_form(&state, &mut rec);
    constants(&state, &mut rec);
    let full_scan = tn_delta_of(&geo, &state);
    rec.push(
        "full-scan-delta",
        n,
        full_scan.is_ok(),
        full_scan.map_or_else(|e| e.to_string(), |d| d.to_string()),
    );
    Ok(AppendixReport {
        n,
        checks: rec.checks,
    })
}

fn corner_tables(geo: &TnGeometry, state: &TnState, rec: &mut Recorder) {
    let (rows, cols, n) = (geo.rows(), geo.cols(), geo.n);
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for i in 0..12 {
        for j in 0..11 {
            if *geo.t(i, j) != BigUint::from(TOP_T[i][j]) {
                top.push(format!("t[{i}][{j}] = {}", geo.t(i, j)));
            }
            let expected = state.combine(BOTTOM_C[i][j], BOTTOM_D[i][j]);
            if *geo.t(rows - i, cols - j) != expected {
                bottom.push(format!(
                    "t[M-{i}][N-{j}] = {} expected {expected}",
                    geo.t(rows - i, cols - j)
                ));
            }
        }
    }
    rec.push("corner-t-table", n, top.is_empty(), top.join("; "));
    rec.push("corner-cd-tables", n, bottom.is_empty(), bottom.join("; "));
    rec.compare(
        "extension-count",
        n,
        state.p.clone(),
        state.combine(16572, 19212),
    );
    rec.compare("r-0-1", n, geo.r(0, 1).clone(), state.minority_count());
}

fn corner_cells(geo: &TnGeometry, state: &TnState, rec: &mut Recorder) {
    let n = geo.n;
    let counts = CrossingCounts::new(&geo.tables);
    let uncolored: Vec<(usize, usize)> = (1..=11)
        .flat_map(|i| (1..=10).map(move |j| (i, j)))
        .filter(|&(i, j)| geo.grid.color(i, j) == CellColor::Uncolored)
        .collect();
    let listed: Vec<(usize, usize)> = CORNER_CELLS.iter().map(|&(i, j, ..)| (i, j)).collect();
    rec.push(
        "corner-uncolored-cells",
        n,
        uncolored == listed,
        format!("{} uncolored cells", uncolored.len()),
    );
    let minority = state.minority_count();
    for &(i, j, side, x, y) in &CORNER_CELLS {
        let below = counts.below(i, j).clone();
        let above = counts.above(i, j);
        let (designated, other) = match side {
            Side::Above => (&above, &below),
            Side::Below => (&below, &above),
        };
        let expected = state.combine(x, y);
        let name = format!("cell-{i}-{j}");
        rec.push(
            &name,
            n,
            *designated == expected,
            format!("{side:?} {designated} expected {expected}, other side {other}"),
        );
        // the designated side is the minority and no more balanced than C(1, 1)
        let bounded = if (i, j) == (1, 1) {
            designated * 2u32 < counts.total
        } else {
            *designated < minority
        };
        rec.push(
            &format!("{name}-bound"),
            n,
            bounded,
            format!("{designated} vs {minority}"),
        );
    }
}

fn rectangles(geo: &TnGeometry, state: &TnState, rec: &mut Recorder) {
    let n = state.n;
    let counts = CrossingCounts::new(&geo.tables);
    let minority = state.minority_count();
    for m in 1..=n {
        let (am, bm) = (state.a_at(m), state.b_at(m));
        let k = n + 1 - m;
        let (ak, bk) = (state.a_at(k), state.b_at(k));
        let (r0, c0) = (2 * m + 8, 2 * m + 8);

        let form = geo.t(r0 + 1, c0 + 2);
        let two_a_b = am * 2u32 + bm;
        rec.push(
            "band-corner-form",
            m,
            *form == two_a_b,
            format!(
                "t[2m+9][2m+10] = {form}; 2a+b = {two_a_b}; a+2b = {}",
                am + bm * 2u32
            ),
        );

        let top_left = am * (ak + bk * 3u32);
        rec.compare(
            "rect-top-left-count",
            m,
            counts.above(r0 + 1, c0 + 1),
            top_left.clone(),
        );
        rec.less("rect-top-left", m, top_left, minority.clone());

        let top_right = am * bk;
        rec.compare(
            "rect-top-right-count",
            m,
            counts.above(r0 + 1, c0 + 2),
            top_right.clone(),
        );
        rec.less("rect-top-right", m, top_right, minority.clone());

        let middle_right = &two_a_b * bk;
        rec.compare(
            "rect-middle-right-count",
            m,
            counts.above(r0 + 2, c0 + 2),
            middle_right.clone(),
        );
        rec.less("rect-middle-right", m, middle_right, minority.clone());
    }
}

fn ratios(state: &TnState, rec: &mut Recorder) {
    let (lo, hi) = (rat(194, 1927), rat(98, 167));
    for (idx, f) in state.f.iter().enumerate() {
        let m = idx + 1;
        rec.push("ratio-window", m, lo < *f && *f < hi, format!("f = {f}"));
        if let Some(next) = state.f.get(idx + 1) {
            let three = rat(3, 1);
            let mapped = (f * &three + &three) / (f * rat(4, 1) + rat(6, 1));
            rec.compare("ratio-step", m, next.clone(), mapped);
            rec.less("ratio-increasing", m, f.clone(), next.clone());
        }
    }
}

fn log_convexity(state: &TnState, rec: &mut Recorder) {
    for m in 1..state.n {
        let outer = state.b_at(m) * state.b_at(m + 2);
        let middle = state.b_at(m + 1) * state.b_at(m + 1);
        rec.push(
            "b-log-convex",
            m,
            outer >= middle,
            format!("{outer} >= {middle}"),
        );
    }
}

fn closed_form(state: &TnState, rec: &mut Recorder) {
    let q =
        |a: i64, b: i64| QuadraticNumber::new(rat(a, 1), rat(b, 1), 57).expect("57 is square-free");
    let root57 = q(0, 1);
    let up = q(9, 1) / QuadraticNumber::rational(rat(2, 1));
    let down = up.conjugate();
    let c_up = q(12906, 2542);
    let c_down = q(-12906, 2542);
    rec.push(
        "b-closed-form-coefficient",
        state.n,
        c_down.signum() == Ordering::Greater,
        c_down.to_string(),
    );
    for i in 1..=state.n {
        let value = (&c_up * &up.pow(i as u32) + &c_down * &down.pow(i as u32)) / root57.clone();
        let expected = rat_from_int(num_bigint::BigInt::from(state.b_at(i).clone()));
        rec.push(
            "b-closed-form",
            i,
            value.to_rational() == Some(expected.clone()),
            format!("{value} vs {expected}"),
        );
    }
}

fn constants(state: &TnState, rec: &mut Recorder) {
    let n = state.n;
    let big = |x: &BigUint| rat_from_int(num_bigint::BigInt::from(x.clone()));
    let phi = ratio_limit();
    let one = QuadraticNumber::rational(rat(1, 1));

    let lhs = state.a_at(n) * 44151u32 + state.b_at(n) * 57555u32;
    rec.compare("transfer-identity", n, lhs, state.minority_count());

    let product = &phi * &(&phi + &one);
    rec.push(
        "limit-product",
        n,
        product.quad_compare(&one) == Ok(Ordering::Less),
        product.to_string(),
    );

    let lower = QuadraticNumber::new(rat(-16203, 14717), rat(2982, 14717), 57).expect("valid");
    let f1 = QuadraticNumber::rational(big(state.a_at(1)) / big(state.b_at(1)));
    rec.push(
        "first-ratio-bound",
        n,
        lower.quad_compare(&f1) == Ok(Ordering::Less),
        format!("{lower} < {f1}"),
    );

    let f_last = QuadraticNumber::rational(state.f[n].clone());
    rec.push(
        "ratio-below-limit",
        n,
        f_last.quad_compare(&phi) == Ok(Ordering::Less),
        format!("{f_last} < {phi}"),
    );

    // delta(T_n) -> (5781 phi + 6702) / (16572 phi + 19212), which must be beta
    let num =
        &phi * &QuadraticNumber::rational(rat(5781, 1)) + QuadraticNumber::rational(rat(6702, 1));
    let den =
        &phi * &QuadraticNumber::rational(rat(16572, 1)) + QuadraticNumber::rational(rat(19212, 1));
    let limit = num / den;
    rec.push("beta-limit", n, limit == beta(), limit.to_string());

    let delta = QuadraticNumber::rational(big(&state.minority_count()) / big(&state.p));
    rec.push(
        "above-beta",
        n,
        delta.quad_compare(&beta()) == Ok(Ordering::Greater),
        delta.decimal_string(12),
    );
}
