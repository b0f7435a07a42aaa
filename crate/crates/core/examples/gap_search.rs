//! Spectrum of balance constants over all small width-2 posets.
//!
//! Usage: `cargo run --release --example gap_search -- [max-size] [jobs]`

use std::process::ExitCode;
use std::time::Instant;

use poset_balance::search::gap_report_with;

fn main() -> ExitCode {
    let mut args = std::env::args().skip(1);
    let max_size: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let jobs: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let start = Instant::now();
    match gap_report_with(max_size, jobs, None) {
        Ok(report) => {
            for line in report.summary_lines() {
                println!("{line}");
            }
            let smallest: Vec<String> = report
                .spectrum
                .keys()
                .take(6)
                .map(|d| d.to_string())
                .collect();
            println!("# smallest deltas {}", smallest.join(" "));
            println!("# elapsed {:.1?}", start.elapsed());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}
