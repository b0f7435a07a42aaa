//! The family T_n: sizes, extension counts and balance constants
//! approaching beta from above.
//!
//! Usage: `cargo run --release --example tn_family -- [max-n]`

use poset_balance::exact::{beta, decimal_string, QuadraticNumber};
use poset_balance::family::{build_tn, tn_delta};

fn main() -> poset_balance::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    let b = beta();
    println!("beta = {} ~ {}", b.fraction_string(), b.decimal_string(12));
    for n in 1..=max_n {
        let (geo, state) = build_tn(n)?;
        let delta = tn_delta(n)?;
        let gap = QuadraticNumber::rational(delta.clone()).try_sub(&b)?;
        println!(
            "n = {n:>2}  |T_n| = {:>3}  e = {:.3e}  delta ~ {}  delta - beta ~ {:.3e}",
            geo.rows() + geo.cols(),
            state.p.to_string().parse::<f64>().unwrap_or(f64::INFINITY),
            decimal_string(&delta, 12),
            gap.to_f64()
        );
    }
    Ok(())
}
