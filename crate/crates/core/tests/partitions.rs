mod common;

use connpart_core::partition::{enumerate, PartitionFamily, SetPartition};
use num_bigint::BigUint;
use proptest::prelude::*;

fn all(n: usize) -> Vec<SetPartition> {
    enumerate(n, PartitionFamily::All).unwrap().collect()
}

#[test]
fn family_cardinalities_match_recurrences() {
    let bell = common::bell_numbers(10);
    let catalan = common::catalan_numbers(10);
    for n in 1..=10 {
        let count = |k| enumerate(n, k).unwrap().count();
        assert_eq!(BigUint::from(count(PartitionFamily::All)), bell[n], "Bell n={n}");
        assert_eq!(count(PartitionFamily::Noncrossing) as u64, catalan[n], "Catalan n={n}");
        assert_eq!(count(PartitionFamily::Interval), 1 << (n - 1), "interval n={n}");
        if n % 2 == 0 {
            assert_eq!(count(PartitionFamily::Pairing) as u64, common::double_factorial_odd(n / 2), "pairing n={n}");
        }
    }
}

#[test]
fn closure_is_the_least_noncrossing_coarsening() {
    for n in 1..=8 {
        let nc: Vec<_> = enumerate(n, PartitionFamily::Noncrossing).unwrap().collect();
        for sigma in all(n) {
            let closed = sigma.closure();
            assert!(closed.is_noncrossing());
            assert!(sigma.leq(&closed).unwrap());
            for tau in nc.iter().filter(|t| sigma.leq(t).unwrap()) {
                assert!(closed.leq(tau).unwrap(), "{sigma}: {closed} not below {tau}");
            }
        }
    }
}

#[test]
fn closure_is_idempotent_and_monotone() {
    for n in 1..=6 {
        let parts = all(n);
        for a in &parts {
            let ca = a.closure();
            assert_eq!(ca.closure(), ca);
            for b in parts.iter().filter(|b| a.leq(b).unwrap()) {
                assert!(ca.leq(&b.closure()).unwrap(), "{a} <= {b}");
            }
        }
    }
}

#[test]
fn connected_iff_closure_is_one_block() {
    for n in 1..=9 {
        for p in all(n) {
            assert_eq!(p.is_connected(), p.closure().block_count() == 1, "{p}");
        }
    }
}

#[test]
fn connected_implies_irreducible() {
    for n in 1..=8 {
        for p in all(n).into_iter().filter(SetPartition::is_connected) {
            assert!(p.is_irreducible(), "{p}");
        }
    }
}

#[test]
fn interval_partitions_are_their_own_hull_and_noncrossing() {
    for n in 1..=8 {
        for p in all(n) {
            assert_eq!(p.is_interval(), p.interval_hull() == p, "{p}");
            if p.is_interval() {
                assert!(p.is_noncrossing());
            }
        }
    }
}

#[test]
fn noncrossing_iff_crossing_components_are_single_blocks() {
    for n in 1..=8 {
        for p in all(n) {
            let singles = p.crossing_components().iter().all(|c| c.len() == 1);
            assert_eq!(p.is_noncrossing(), singles, "{p}");
        }
    }
}

#[test]
fn connected_definition_by_brute_force() {
    // no interval [i, j] other than [1, n] is a union of blocks
    for n in 1..=7 {
        for p in all(n) {
            let blocks = p.blocks();
            let mut connected = true;
            for i in 1..=n {
                for j in i..=n {
                    if (i, j) == (1, n) {
                        continue;
                    }
                    let union = blocks
                        .iter()
                        .filter(|b| b.iter().any(|&e| e >= i && e <= j))
                        .all(|b| b.iter().all(|&e| e >= i && e <= j));
                    if union {
                        connected = false;
                    }
                }
            }
            assert_eq!(p.is_connected(), connected, "{p}");
        }
    }
}

fn arb_partition() -> impl Strategy<Value = SetPartition> {
    (1usize..=14)
        .prop_flat_map(|n| proptest::collection::vec(0usize..n, n))
        .prop_map(|labels| {
            let n = labels.len();
            let mut blocks = vec![Vec::new(); n];
            for (i, l) in labels.into_iter().enumerate() {
                blocks[l].push(i + 1);
            }
            blocks.retain(|b| !b.is_empty());
            SetPartition::from_blocks(&blocks).unwrap()
        })
}

proptest! {
    #[test]
    fn text_syntax_round_trips(p in arb_partition()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<SetPartition>().unwrap(), p.clone());
        let reversed: Vec<String> = text.split('/').rev().map(|b| b.split(',').rev().collect::<Vec<_>>().join(",")).collect();
        prop_assert_eq!(reversed.join("/").parse::<SetPartition>().unwrap(), p);
    }

    #[test]
    fn block_sizes_sum_to_n(p in arb_partition()) {
        let sizes = p.block_sizes();
        prop_assert_eq!(sizes.iter().sum::<usize>(), p.n());
        prop_assert_eq!(sizes.len(), p.block_count());
    }

    #[test]
    fn closure_is_above_and_noncrossing(p in arb_partition()) {
        let c = p.closure();
        prop_assert!(c.is_noncrossing());
        prop_assert!(p.leq(&c).unwrap());
        prop_assert_eq!(c.closure(), c);
    }
}
