//! The `balance` command line. Exit status is 0 on success, 1 for bad
//! input and 2 when a mathematical check fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cases::{bounds_reach_lambda, verify_cases};
use crate::error::{Error, Result};
use crate::exact::{
    beta, decimal_approximation, format_rational, quad_compare, QuadraticNumber, Rational,
};
use crate::family::{build_tn, tn_delta, verify_appendix};
use crate::grid::{delta_grid, grid_of, pair_probabilities, s_region};
use crate::poset::{delta_oracle, width_and_decompose, BalanceReport, Oracle, Poset};
use crate::search::{gap_report_with, SearchCache};

#[derive(Parser, Debug)]
#[command(
    name = "balance",
    version,
    about = "Exact balance constants of finite posets"
)]
pub struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Grid,
    Oracle,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Balance constant with a witness pair.
    Delta {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "grid")]
        method: Method,
    },
    /// P(x before y) for every ordered pair.
    Probabilities {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "grid")]
        method: Method,
    },
    /// Grid diagram with the border of the region S.
    Grid { file: PathBuf },
    /// Balance constant of T_n.
    Tn {
        #[arg(long)]
        n: usize,
        /// Also run every appendix check and compare with beta.
        #[arg(long)]
        verify: bool,
    },
    /// Every numeric claim about T_n, one CHECK line each.
    VerifyAppendix {
        #[arg(long)]
        n: usize,
    },
    /// Lower bounds from the nine case systems.
    VerifyCases,
    /// Spectrum of all width-2 posets up to a size.
    Search {
        #[arg(long)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Append-only result cache.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Number of linear extensions by brute force.
    Oracle { file: PathBuf },
}

fn load(path: &Path) -> Result<Poset> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Poset::parse(&text)
}

fn approx(x: &Rational) -> String {
    decimal_approximation(x, 6)
}

/// Names elements `a1, a2, ...` and `b1, b2, ...` along the canonical chain
/// cover when the width is at most 2, plain labels otherwise.
fn element_names(p: &Poset) -> Vec<String> {
    let mut names: Vec<String> = (0..p.size()).map(|x| x.to_string()).collect();
    if let (w, Some(dec)) = width_and_decompose(p) {
        if w <= 2 {
            for (i, &x) in dec.chain_a.iter().enumerate() {
                names[x] = format!("a{}", i + 1);
            }
            for (j, &y) in dec.chain_b.iter().enumerate() {
                names[y] = format!("b{}", j + 1);
            }
        }
    }
    names
}

fn balance(p: &Poset, method: Method) -> Result<BalanceReport> {
    let grid = || -> Result<BalanceReport> { Ok(delta_grid(&grid_of(p)?)) };
    match method {
        Method::Grid => grid(),
        Method::Oracle => delta_oracle(p),
        Method::Both => {
            let (g, o) = (grid()?, delta_oracle(p)?);
            if g != o {
                return Err(Error::Verification(format!(
                    "grid gives delta {} witness {:?}, oracle gives {} witness {:?}",
                    g.delta, g.witness, o.delta, o.witness
                )));
            }
            Ok(g)
        }
    }
}

/// `P(x before y)` for all pairs, in poset labels.
fn pair_matrix(p: &Poset, method: Method) -> Result<Vec<Vec<Rational>>> {
    let from_grid = || pair_probabilities(p);
    match method {
        Method::Grid => from_grid(),
        Method::Oracle => Oracle::default().probability_table(p),
        Method::Both => {
            let (g, o) = (from_grid()?, Oracle::default().probability_table(p)?);
            if g != o {
                return Err(Error::Verification(
                    "grid and oracle probability tables differ".into(),
                ));
            }
            Ok(g)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let json = cli.json;
    let mut ok = true;
    match &cli.command {
        Command::Delta { file, method } => {
            let p = load(file)?;
            let report = balance(&p, *method)?;
            let names = element_names(&p);
            let witness = report
                .witness
                .map(|(x, y)| (names[x].clone(), names[y].clone()));
            if json {
                let value = json!({
                    "delta": format_rational(&report.delta),
                    "decimal": approx(&report.delta),
                    "witness": witness,
                    "extensions": report.extension_count.to_string(),
                });
                writeln!(out, "{value}")?;
            } else {
                let w = witness.map_or("none".to_string(), |(x, y)| format!("({x}, {y})"));
                writeln!(
                    out,
                    "delta = {} ({}), witness {w}",
                    format_rational(&report.delta),
                    approx(&report.delta)
                )?;
            }
        }
        Command::Probabilities { file, method } => {
            let p = load(file)?;
            let m = pair_matrix(&p, *method)?;
            let names = element_names(&p);
            let cell = |x: usize, y: usize| {
                if x == y {
                    "-".to_string()
                } else {
                    format_rational(&m[x][y])
                }
            };
            if json {
                let rows: Vec<Vec<String>> = (0..p.size())
                    .map(|x| (0..p.size()).map(|y| cell(x, y)).collect())
                    .collect();
                writeln!(out, "{}", json!({ "names": names, "matrix": rows }))?;
            } else {
                let width = (0..p.size())
                    .flat_map(|x| (0..p.size()).map(move |y| (x, y)))
                    .map(|(x, y)| cell(x, y).len())
                    .chain(names.iter().map(String::len))
                    .max()
                    .unwrap_or(1);
                let header: Vec<String> = names.iter().map(|s| format!("{s:>width$}")).collect();
                writeln!(out, "{:>width$} {}", "", header.join(" "))?;
                for (x, name) in names.iter().enumerate() {
                    let row: Vec<String> = (0..p.size())
                        .map(|y| format!("{:>width$}", cell(x, y)))
                        .collect();
                    writeln!(out, "{name:>width$} {}", row.join(" "))?;
                }
            }
        }
        Command::Grid { file } => {
            let p = load(file)?;
            let g = grid_of(&p)?;
            let s = s_region(&g)?;
            let picture = g.render_ascii(Some(&s.boundary_path));
            if json {
                let value = json!({
                    "rows": g.rows(),
                    "cols": g.cols(),
                    "red_row_lengths": g.red_row_lengths(),
                    "blue_col_heights": g.blue_col_heights(),
                    "s_col_heights": s.s_col_heights,
                    "boundary": s.boundary_path,
                    "ascii": picture,
                });
                writeln!(out, "{value}")?;
            } else {
                let a: Vec<String> = (1..=g.rows()).map(|i| g.label_a(i).to_string()).collect();
                let b: Vec<String> = (1..=g.cols()).map(|j| g.label_b(j).to_string()).collect();
                writeln!(out, "rows a: {}", a.join(" "))?;
                writeln!(out, "cols b: {}", b.join(" "))?;
                write!(out, "{picture}")?;
            }
        }
        Command::Tn { n, verify } => {
            let (geo, state) = build_tn(*n)?;
            let delta = tn_delta(*n)?;
            let mut value = json!({
                "n": n,
                "elements": geo.rows() + geo.cols(),
                "extensions": state.p.to_string(),
                "delta": format_rational(&delta),
                "decimal": decimal_approximation(&delta, 9),
            });
            let mut lines = vec![
                format!(
                    "T_{n}: {} elements, {} linear extensions",
                    geo.rows() + geo.cols(),
                    state.p
                ),
                format!(
                    "delta = {} ({})",
                    format_rational(&delta),
                    decimal_approximation(&delta, 9)
                ),
            ];
            if *verify {
                let above =
                    quad_compare(&QuadraticNumber::rational(delta.clone()), &beta())?.is_gt();
                let report = verify_appendix(*n)?;
                let failed = report.failures().count();
                ok = above && failed == 0;
                lines.push(format!(
                    "beta = {} ({})",
                    beta().fraction_string(),
                    beta().decimal_approximation(9)
                ));
                lines.push(format!(
                    "delta > beta: {}",
                    if above { "PASS" } else { "FAIL" }
                ));
                lines.push(format!(
                    "appendix checks: {} of {} pass",
                    report.checks.len() - failed,
                    report.checks.len()
                ));
                value["above_beta"] = json!(above);
                value["checks"] = json!(report.checks.len());
                value["failed"] = json!(failed);
            }
            if json {
                writeln!(out, "{value}")?;
            } else {
                for l in lines {
                    writeln!(out, "{l}")?;
                }
            }
        }
        Command::VerifyAppendix { n } => {
            let report = verify_appendix(*n)?;
            ok = report.passed();
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&report).map_err(|e| Error::Io(e.to_string()))?
                )?;
            } else {
                for l in report.lines() {
                    writeln!(out, "{l}")?;
                }
            }
        }
        Command::VerifyCases => {
            let outcomes = verify_cases()?;
            let above = bounds_reach_lambda(&outcomes)?;
            ok = above && outcomes.iter().all(|o| o.passed);
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({ "cases": outcomes, "bounds_at_least_lambda": above })
                )?;
            } else {
                for o in &outcomes {
                    writeln!(out, "{o}")?;
                }
            }
        }
        Command::Search {
            max_size,
            jobs,
            cache,
        } => {
            let mut store = cache.as_deref().map(SearchCache::open).transpose()?;
            let report = gap_report_with(*max_size, *jobs, store.as_mut())?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&report).map_err(|e| Error::Io(e.to_string()))?
                )?;
            } else {
                for r in &report.records {
                    writeln!(out, "{r}")?;
                }
                for l in report.summary_lines() {
                    writeln!(out, "{l}")?;
                }
            }
        }
        Command::Oracle { file } => {
            let p = load(file)?;
            let e = Oracle::default().count_extensions(&p)?;
            if json {
                writeln!(out, "{}", json!({ "extensions": e.to_string() }))?;
            } else {
                writeln!(out, "extensions = {e}")?;
            }
        }
    }
    Ok(ok)
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 2,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_verification_failure() {
                2
            } else {
                1
            }
        }
    }
}
