//! The closed-form constants as exact quadratic irrationals, with their
//! order checked exactly.

use std::cmp::Ordering;

use poset_balance::exact::{beta, case4_optimum, lambda, quad_compare, ratio_limit};

fn main() -> poset_balance::Result<()> {
    let named = [
        ("lambda", lambda()),
        ("beta", beta()),
        ("case 4 threshold", case4_optimum()),
        ("a_m / b_m limit", ratio_limit()),
    ];
    for (name, x) in &named {
        println!(
            "{name:>17} = {:<36} ~ {}",
            x.fraction_string(),
            x.decimal_string(15)
        );
    }
    let third = poset_balance::exact::rat(1, 3);
    let third = poset_balance::exact::QuadraticNumber::rational(third);
    let chain = [&third, &named[0].1, &named[1].1, &named[2].1];
    for pair in chain.windows(2) {
        assert_eq!(quad_compare(pair[0], pair[1])?, Ordering::Less);
    }
    println!("1/3 < lambda < beta < case 4 threshold, exactly");
    Ok(())
}
