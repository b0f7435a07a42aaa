//! Draws the grid diagram of a width-2 poset with the border of S, then
//! prints the path tables and their log-concavity report.
//!
//! Usage: `cargo run --example grid_diagram -- [poset-file]`

use poset_balance::grid::{check_log_concavity, detect_direct_sum, grid_of, path_tables, s_region};
use poset_balance::poset::Poset;

const DEFAULT: &str = "poset 6\nrel 0 1\nrel 1 2\nrel 3 4\nrel 4 5\nrel 0 4\nrel 3 2\n";

fn main() -> poset_balance::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let p = Poset::parse(&text)?;
    let g = grid_of(&p)?;
    let s = s_region(&g)?;
    print!("{}", g.render_ascii(Some(&s.boundary_path)));
    let tables = path_tables(&g);
    println!("extensions: {}", tables.extension_count());
    for (name, table) in [("t", &tables.t), ("r", &tables.r)] {
        println!("{name}:");
        for row in table {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
            println!("{}", cells.join(""));
        }
    }
    let report = check_log_concavity(&tables);
    println!(
        "log-concave lines: {} checked, passed = {}",
        report.lines_checked,
        report.passed()
    );
    println!("direct-sum splits: {:?}", detect_direct_sum(&g));
    Ok(())
}
