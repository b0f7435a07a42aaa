//! Solves the nine case systems exactly and prints each bound with its
//! certificate.

use num_traits::Zero;
use poset_balance::cases::{
    bounds_reach_lambda, build_case_system, case4_analyze, case9_analyze, lp_minimize_exact,
    verify_cases, CaseSystem,
};
use poset_balance::exact::format_rational;

fn main() -> poset_balance::Result<()> {
    for k in 1..=9 {
        let CaseSystem::Linear(lp) = build_case_system(k)? else {
            continue;
        };
        let sol = lp_minimize_exact(&lp)?;
        println!("case {k}: optimum {}", format_rational(&sol.optimum));
        for (c, y) in lp.constraints.iter().zip(&sol.certificate.multipliers) {
            if !y.is_zero() {
                println!("    {:>6} * [{}]", format_rational(y), c);
            }
        }
    }
    let four = case4_analyze()?;
    println!(
        "case 4: threshold {} ({:?})",
        four.threshold.fraction_string(),
        four.passed()
    );
    let nine = case9_analyze()?;
    for c in &nine.checks {
        println!(
            "case 9: {} {}",
            c.name,
            if c.passed { "ok" } else { "FAILED" }
        );
    }
    let outcomes = verify_cases()?;
    for o in &outcomes {
        println!("{o}");
    }
    println!(
        "bounds at least lambda: {}",
        bounds_reach_lambda(&outcomes)?
    );
    Ok(())
}
