use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

use poset_balance::exact::Rational;
use poset_balance::grid::{
    build_grid, delta_grid, detect_direct_sum, grid_of, probability_matrix, s_region, CellColor,
    GridDiagram,
};
use poset_balance::poset::{
    all_two_chain_decompositions, canonical_form, delta_oracle, Oracle, Poset,
};

fn staircase(len: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=max, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

/// Valid grid diagrams with `m + n <= 8`.
fn grids() -> impl Strategy<Value = GridDiagram> {
    (0usize..=4, 0usize..=4)
        .prop_flat_map(|(m, n)| (staircase(m, n), staircase(n, m)))
        .prop_filter_map("shapes overlap", |(red, blue)| {
            GridDiagram::from_shapes(red, blue).ok()
        })
}

/// A width-2 poset with its elements shuffled.
fn width2_posets() -> impl Strategy<Value = Poset> {
    grids().prop_flat_map(|g| {
        let p = g.to_poset();
        let n = p.size();
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |perm| p.relabel(&perm))
    })
}

/// Arbitrary posets on up to `max` elements.
fn posets(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        prop::collection::vec(prop::bool::weighted(0.35), pairs.len()).prop_map(move |keep| {
            let chosen: Vec<_> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&p, _)| p)
                .collect();
            Poset::from_relations(n, &chosen).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn direct_sum_takes_max(p in posets(5), q in posets(4)) {
        let (dp, dq) = (delta_oracle(&p).unwrap().delta, delta_oracle(&q).unwrap().delta);
        let sum = delta_oracle(&p.direct_sum(&q)).unwrap();
        prop_assert_eq!(sum.delta, dp.clone().max(dq.clone()));
        let union = delta_oracle(&p.disjoint_union(&q)).unwrap();
        prop_assert!(union.delta >= dp.max(dq));
    }

    #[test]
    fn every_decomposition_gives_the_same_answer(p in width2_posets()) {
        let oracle = Oracle::default();
        let expected = oracle.delta(&p).unwrap();
        let table = oracle.probability_table(&p).unwrap();
        let decs = all_two_chain_decompositions(&p);
        prop_assert!(!decs.is_empty() || p.is_empty());
        for dec in &decs {
            let g = build_grid(&p, dec).unwrap();
            let report = delta_grid(&g);
            prop_assert_eq!(&report.delta, &expected.delta);
            prop_assert_eq!(&report.extension_count, &expected.extension_count);
            let probs = probability_matrix(&g);
            for i in 1..=g.rows() {
                for j in 1..=g.cols() {
                    prop_assert_eq!(&probs[i - 1][j - 1], &table[g.label_a(i)][g.label_b(j)]);
                }
            }
        }
    }

    #[test]
    fn pair_probabilities_are_complementary(p in width2_posets()) {
        let table = Oracle::default().probability_table(&p).unwrap();
        for (x, row) in table.iter().enumerate() {
            for (y, pxy) in row.iter().enumerate() {
                if x != y {
                    prop_assert_eq!(pxy + &table[y][x], Rational::one());
                }
                if p.less(x, y) {
                    prop_assert!(pxy.is_one());
                }
            }
        }
    }

    #[test]
    fn splits_are_exactly_the_direct_sum_cuts(g in grids()) {
        let p = g.to_poset();
        let (m, n) = (g.rows(), g.cols());
        let found = detect_direct_sum(&g);
        for i in 0..=m {
            for j in 0..=n {
                if (i, j) == (0, 0) || (i, j) == (m, n) {
                    continue;
                }
                let lower: Vec<usize> = (1..=i).map(|k| g.label_a(k)).chain((1..=j).map(|k| g.label_b(k))).collect();
                let upper: Vec<usize> = (0..p.size()).filter(|x| !lower.contains(x)).collect();
                let cut = lower.iter().all(|&x| upper.iter().all(|&y| p.less(x, y)));
                prop_assert_eq!(found.contains(&(i, j)), cut, "point ({}, {})", i, j);
            }
        }
    }

    #[test]
    fn s_region_separates_colors(g in grids()) {
        let s = s_region(&g).unwrap();
        let (m, n) = (g.rows(), g.cols());
        let path = &s.boundary_path;
        prop_assert_eq!(path.first(), Some(&(0, 0)));
        prop_assert_eq!(path.last(), Some(&(m, n)));
        prop_assert_eq!(path.len(), m + n + 1);
        for w in path.windows(2) {
            let step = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            prop_assert!(step == (1, 0) || step == (0, 1));
        }
        for i in 1..=m {
            for j in 1..=n {
                match g.color(i, j) {
                    CellColor::Blue => prop_assert!(s.contains(m, i, j)),
                    CellColor::Red => prop_assert!(!s.contains(m, i, j)),
                    CellColor::Uncolored => {}
                }
            }
        }
    }

    #[test]
    fn canonical_key_ignores_labels(p in width2_posets(), seed in any::<u64>()) {
        let n = p.size();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let key = canonical_form(&p).unwrap();
        prop_assert_eq!(&canonical_form(&p.relabel(&perm)).unwrap(), &key);
        prop_assert_eq!(canonical_form(&key.to_poset()).unwrap(), key);
    }

    #[test]
    fn text_round_trip(p in posets(7)) {
        let back = Poset::parse(&p.to_text()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn grid_count_matches_oracle(p in width2_posets()) {
        let g = grid_of(&p).unwrap();
        let count = Oracle::default().count_extensions(&p).unwrap();
        prop_assert_eq!(&delta_grid(&g).extension_count, &count);
        prop_assert!(count > BigUint::zero());
    }
}
