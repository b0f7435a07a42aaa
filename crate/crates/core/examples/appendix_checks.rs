//! Runs every exact check on the family T_n and prints one line per check.
//!
//! ```text
//! cargo run --example appendix_checks -- 10
//! ```

use poset_balance::family::verify_appendix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(3), |s| s.parse())?;
    let report = verify_appendix(n)?;
    for check in &report.checks {
        println!("{check}");
    }
    let failed = report.failures().count();
    println!("{} checks, {failed} failed", report.checks.len());
    if failed > 0 {
        std::process::exit(2);
    }
    Ok(())
}
