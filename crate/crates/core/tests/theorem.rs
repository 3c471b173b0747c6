mod common;

use connpart_core::cumulants::{cumulant_to_moment, gaussian, moment_to_cumulant, poisson, Flavor, Sequence};
use connpart_core::partition::{enumerate, PartitionFamily};
use connpart_core::scalar::rational;
use connpart_core::theorem::{
    block_polynomial, boolean_from_classical, boolean_from_free, c_tilde, closure_fibers, count_connected,
    count_connected_pairings, free_from_classical, random_classical, verify,
};
use connpart_core::{LambdaPoly, Rational, Ring};

#[test]
fn free_cumulants_from_connected_partitions() {
    for seed in 0..4 {
        let kappa = random_classical(seed, 9);
        let m = cumulant_to_moment(&kappa).unwrap();
        let c = moment_to_cumulant(&m, Flavor::Free).unwrap();
        let h = moment_to_cumulant(&m, Flavor::Boolean).unwrap();
        for n in 1..=9 {
            assert_eq!(&free_from_classical(&kappa, n).unwrap(), c.get(n), "seed={seed} n={n}");
            assert_eq!(&boolean_from_classical(&kappa, n).unwrap(), h.get(n), "seed={seed} n={n}");
            assert_eq!(&boolean_from_free(&c, n).unwrap(), h.get(n), "seed={seed} n={n}");
        }
    }
}

#[test]
fn c_tilde_is_multiplicative_and_regroups_the_moments() {
    let kappa = random_classical(17, 8);
    let m = cumulant_to_moment(&kappa).unwrap();
    let c = moment_to_cumulant(&m, Flavor::Free).unwrap();
    let single: Vec<Rational> = (1..=8).map(|n| free_from_classical(&kappa, n).unwrap()).collect();
    for n in 1..=8 {
        let fibers = closure_fibers(&kappa, n).unwrap();
        let nc: Vec<_> = enumerate(n, PartitionFamily::Noncrossing).unwrap().collect();
        // fibers sit exactly over NC_n and cover Π_n once
        assert!(fibers.keys().all(|p| p.is_noncrossing()));
        let covered: u64 = fibers.values().map(|(_, count)| count).sum();
        assert_eq!(covered.to_string(), common::bell_numbers(n)[n].to_string());
        let mut total = rational(0);
        for pi in &nc {
            let value = fibers.get(pi).map(|(v, _)| v.clone()).unwrap_or_else(|| rational(0));
            let product = pi.block_sizes().iter().fold(rational(1), |acc, &s| acc * &single[s - 1]);
            assert_eq!(value, product, "{pi}");
            assert_eq!(value, c.on_blocks(pi).unwrap(), "{pi}");
            total += &value;
        }
        assert_eq!(&total, m.get(n));
    }
}

#[test]
fn c_tilde_single_partition_matches_fibers() {
    let kappa = random_classical(3, 6);
    let fibers = closure_fibers(&kappa, 6).unwrap();
    for pi in enumerate(6, PartitionFamily::Noncrossing).unwrap().step_by(7) {
        let expected = fibers.get(&pi).map(|(v, _)| v.clone()).unwrap_or_else(|| rational(0));
        assert_eq!(c_tilde(&pi, &kappa).unwrap(), expected);
    }
}

#[test]
fn gaussian_free_cumulants_count_connected_pairings() {
    let c = moment_to_cumulant(&cumulant_to_moment(&gaussian::<Rational>(10)).unwrap(), Flavor::Free).unwrap();
    for n in (2..=10).step_by(2) {
        assert_eq!(c.get(n), &rational(count_connected_pairings(n).unwrap() as i64));
        assert_eq!(c.get(n - 1), &rational(0));
    }
}

#[test]
fn poisson_free_cumulants_count_connected_partitions() {
    let c = moment_to_cumulant(&cumulant_to_moment(&poisson(rational(1), 10)).unwrap(), Flavor::Free).unwrap();
    for n in 1..=10 {
        assert_eq!(c.get(n), &rational(count_connected(n).unwrap() as i64), "n={n}");
    }
}

#[test]
fn block_polynomial_is_the_formal_poisson_free_cumulant() {
    let kappa = poisson(LambdaPoly::lambda(), 9);
    let c = moment_to_cumulant(&cumulant_to_moment(&kappa).unwrap(), Flavor::Free).unwrap();
    for n in 1..=9 {
        let poly = block_polynomial(n).unwrap();
        assert_eq!(poly, free_from_classical(&kappa, n).unwrap());
        assert_eq!(&poly, c.get(n));
        assert_eq!(poly.eval(&rational(1)), rational(count_connected(n).unwrap() as i64));
    }
}

#[test]
fn formal_weights_work_for_boolean_sums_too() {
    let kappa = poisson(LambdaPoly::lambda(), 6);
    let h = moment_to_cumulant(&cumulant_to_moment(&kappa).unwrap(), Flavor::Boolean).unwrap();
    for n in 1..=6 {
        assert_eq!(&boolean_from_classical(&kappa, n).unwrap(), h.get(n));
    }
    assert!(!h.get(3).is_zero());
}

#[test]
fn verification_report_is_all_equal() {
    let checks = verify(7, 5, 42).unwrap();
    assert_eq!(checks.len(), 5 * 7 * 4);
    assert!(checks.iter().all(|c| c.equal()));
}

#[test]
fn mismatched_flavors_are_rejected() {
    let free = Sequence::new(Flavor::Free, vec![rational(1); 3]);
    assert!(boolean_from_classical(&free, 2).is_err());
    let classical = poisson(rational(1), 3);
    assert!(boolean_from_free(&classical, 2).is_err());
}
