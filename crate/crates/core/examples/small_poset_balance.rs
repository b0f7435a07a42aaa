//! Balance constants of a few small posets, by lattice paths and by brute
//! force.

use poset_balance::grid::{delta_grid, grid_of};
use poset_balance::poset::{delta_oracle, Poset};

fn main() -> poset_balance::Result<()> {
    let one = Poset::singleton();
    let e = Poset::e3();
    let examples = [
        ("E", e.clone()),
        ("1+E+1", one.direct_sum(&e).direct_sum(&one)),
        ("2-antichain", Poset::antichain(2)),
        ("1+(1|1)", one.direct_sum(&Poset::antichain(2))),
        (
            "two 2-chains",
            Poset::chain(2).disjoint_union(&Poset::chain(2)),
        ),
        ("4-chain", Poset::chain(4)),
    ];
    for (name, p) in examples {
        let grid = delta_grid(&grid_of(&p)?);
        let oracle = delta_oracle(&p)?;
        assert_eq!(grid, oracle);
        println!(
            "{name:>14}: delta = {:<5} e(P) = {:<3} witness {:?}",
            grid.delta.to_string(),
            grid.extension_count,
            grid.witness
        );
    }
    Ok(())
}
