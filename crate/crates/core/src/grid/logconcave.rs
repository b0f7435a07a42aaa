use num_bigint::BigUint;
use num_traits::Zero;

use super::paths::PathTables;
use crate::error::{Error, Result};

/// Where a table row or column first fails the log-concavity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// `'t'` or `'r'`.
    pub table: char,
    /// `true` for a row, `false` for a column.
    pub is_row: bool,
    /// Row or column index.
    pub line: usize,
    /// Position along the line.
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogConcavityReport {
    pub lines_checked: usize,
    pub first_violation: Option<Violation>,
}

impl LogConcavityReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks one sequence: the nonzero entries must be contiguous and satisfy
/// `c[i]^2 >= c[i-1] * c[i+1]`. Returns the first bad index.
pub fn check_sequence(c: &[BigUint]) -> std::result::Result<(), usize> {
    let first = c.iter().position(|x| !x.is_zero());
    let Some(first) = first else { return Ok(()) };
    let last = c.iter().rposition(|x| !x.is_zero()).expect("nonempty");
    if let Some(k) = (first..=last).find(|&k| c[k].is_zero()) {
        return Err(k);
    }
    for k in first + 1..last {
        if &c[k] * &c[k] < &c[k - 1] * &c[k + 1] {
            return Err(k);
        }
    }
    Ok(())
}

/// Runs [`check_sequence`] over every row and column of both tables.
pub fn check_log_concavity(tables: &PathTables) -> LogConcavityReport {
    let n = tables.cols();
    let mut lines_checked = 0;
    for (name, table) in [('t', &tables.t), ('r', &tables.r)] {
        for (i, row) in table.iter().enumerate() {
            lines_checked += 1;
            if let Err(index) = check_sequence(row) {
                return LogConcavityReport {
                    lines_checked,
                    first_violation: Some(Violation {
                        table: name,
                        is_row: true,
                        line: i,
                        index,
                    }),
                };
            }
        }
        for j in 0..=n {
            lines_checked += 1;
            let col: Vec<BigUint> = table.iter().map(|row| row[j].clone()).collect();
            if let Err(index) = check_sequence(&col) {
                return LogConcavityReport {
                    lines_checked,
                    first_violation: Some(Violation {
                        table: name,
                        is_row: false,
                        line: j,
                        index,
                    }),
                };
            }
        }
    }
    LogConcavityReport {
        lines_checked,
        first_violation: None,
    }
}

/// Prefix sums of a positive log-concave sequence, which are again
/// log-concave. The output is checked before it is returned.
pub fn prefix_sums_logconcave(c: &[BigUint]) -> Result<Vec<BigUint>> {
    if c.iter().any(|x| x.is_zero()) {
        return Err(Error::Precondition("sequence must be positive".into()));
    }
    if let Err(k) = check_sequence(c) {
        return Err(Error::Precondition(format!(
            "sequence is not log-concave at index {k}"
        )));
    }
    let d: Vec<BigUint> = c
        .iter()
        .scan(BigUint::zero(), |acc, x| {
            *acc += x;
            Some(acc.clone())
        })
        .collect();
    check_sequence(&d)
        .map_err(|k| Error::Verification(format!("prefix sums not log-concave at index {k}")))?;
    Ok(d)
}
