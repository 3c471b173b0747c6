//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use connpart_core::cumulants::{Flavor, Sequence};
use connpart_core::incidence::{moebius_invert, Direction};
use connpart_core::scalar::{ratio, rational};
use connpart_core::{Rational, SetPartition};
use num_bigint::BigUint;

/// Bell numbers `B_0..=B_max` from the Bell triangle.
pub fn bell_numbers(max: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::from(1u32)];
    let mut row = vec![BigUint::from(1u32)];
    for _ in 1..=max {
        let mut next = vec![row.last().unwrap().clone()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

/// Catalan numbers `C_0..=C_max` from `C_{n+1} = Σ C_i C_{n-i}`.
pub fn catalan_numbers(max: usize) -> Vec<u64> {
    let mut c = vec![1u64];
    for n in 0..max {
        c.push((0..=n).map(|i| c[i] * c[n - i]).sum());
    }
    c
}

/// `(2k-1)!!`.
pub fn double_factorial_odd(k: usize) -> u64 {
    (1..=k as u64).map(|i| 2 * i - 1).product()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Small rationals from a deterministic linear congruential stream.
pub fn lcg_rationals(seed: u64, len: usize) -> Vec<Rational> {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as i64
    };
    (0..len)
        .map(|_| ratio(next() % 41 - 20, next() % 9 + 1))
        .collect()
}

/// Cumulant `k_n` of the given flavor by explicit Möbius inversion of
/// `π ↦ m_π` over the flavor's lattice, read off at `1̂_n`.
pub fn moebius_cumulant(moments: &Sequence<Rational>, flavor: Flavor, n: usize) -> Rational {
    let lattice = flavor.lattice().unwrap();
    let values: BTreeMap<SetPartition, Rational> = lattice
        .elements(n)
        .unwrap()
        .into_iter()
        .map(|p| {
            let v = p.block_sizes().iter().fold(rational(1), |acc, &s| acc * moments.get(s));
            (p, v)
        })
        .collect();
    let inverted = moebius_invert(&values, Direction::Down, lattice).unwrap();
    inverted[&SetPartition::coarsest(n)].clone()
}
