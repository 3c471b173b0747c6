//! Free and boolean cumulants as sums over connected and irreducible
//! partitions, and the counting results that follow.
//!
//! With `κ` the classical cumulants of a moment sequence,
//!
//! * `c_n = Σ_{π connected} κ_π`,
//! * `h_n = Σ_{π irreducible} κ_π = Σ_{π noncrossing irreducible} c_π`.
//!
//! The proof groups partitions by their noncrossing closure: the fiber over
//! `π ∈ NC_n` sums to `c̃_π`, fibers are multiplicative over the blocks of
//! `π`, and the fiber over `1̂_n` is exactly the set of connected partitions.
//! All sums here stream over enumerations.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cumulants::{cumulant_to_moment, moment_to_cumulant, Flavor, Sequence};
use crate::error::{invalid, Result};
use crate::partition::{enumerate, PartitionFamily, SetPartition};
use crate::scalar::{LambdaPoly, Rational, Ring};

fn weighted_sum<R: Ring>(
    seq: &Sequence<R>,
    expected: Flavor,
    n: usize,
    family: PartitionFamily,
) -> Result<R> {
    if seq.flavor() != expected {
        return Err(invalid(alloc::format!("expected {expected} cumulants, got {}", seq.flavor())));
    }
    if n == 0 || n > seq.order() {
        return Err(invalid(alloc::format!("n = {n} outside 1..={}", seq.order())));
    }
    let mut acc = R::zero();
    for p in enumerate(n, family)? {
        acc += &seq.on_blocks(&p)?;
    }
    Ok(acc)
}

/// `c_n = Σ_{π ∈ Π^conn_n} κ_π`.
pub fn free_from_classical<R: Ring>(classical: &Sequence<R>, n: usize) -> Result<R> {
    weighted_sum(classical, Flavor::Classical, n, PartitionFamily::Connected)
}

/// `h_n = Σ_{π ∈ Π^irr_n} κ_π`.
pub fn boolean_from_classical<R: Ring>(classical: &Sequence<R>, n: usize) -> Result<R> {
    weighted_sum(classical, Flavor::Classical, n, PartitionFamily::Irreducible)
}

/// `h_n = Σ_{π ∈ NC^irr_n} c_π`.
pub fn boolean_from_free<R: Ring>(free: &Sequence<R>, n: usize) -> Result<R> {
    weighted_sum(free, Flavor::Free, n, PartitionFamily::NcIrreducible)
}

/// `c̃_π = Σ_{σ : closure(σ) = π} κ_σ` for noncrossing `π`.
pub fn c_tilde<R: Ring>(pi: &SetPartition, classical: &Sequence<R>) -> Result<R> {
    if !pi.is_noncrossing() {
        return Err(invalid(alloc::format!("{pi} is not noncrossing")));
    }
    if classical.flavor() != Flavor::Classical {
        return Err(invalid("c̃ needs classical cumulants"));
    }
    let mut acc = R::zero();
    for sigma in enumerate(pi.n(), PartitionFamily::All)? {
        if sigma.refines(pi) && sigma.closure() == *pi {
            acc += &classical.on_blocks(&sigma)?;
        }
    }
    Ok(acc)
}

/// Every `c̃_π` over `NC_n` from a single pass over `Π_n`, together with the
/// number of partitions in each closure fiber.
pub fn closure_fibers<R: Ring>(classical: &Sequence<R>, n: usize) -> Result<BTreeMap<SetPartition, (R, u64)>> {
    if classical.flavor() != Flavor::Classical {
        return Err(invalid("closure fibers need classical cumulants"));
    }
    let mut fibers: BTreeMap<SetPartition, (R, u64)> = BTreeMap::new();
    for sigma in enumerate(n, PartitionFamily::All)? {
        let weight = classical.on_blocks(&sigma)?;
        let entry = fibers.entry(sigma.closure()).or_insert_with(|| (R::zero(), 0));
        entry.0 += &weight;
        entry.1 += 1;
    }
    Ok(fibers)
}

/// Number of connected partitions of `[n]`.
pub fn count_connected(n: usize) -> Result<u64> {
    Ok(enumerate(n, PartitionFamily::Connected)?.count() as u64)
}

/// Number of connected pairings of `[n]`, `n` even.
pub fn count_connected_pairings(n: usize) -> Result<u64> {
    Ok(enumerate(n, PartitionFamily::ConnectedPairing)?.count() as u64)
}

/// `Σ_{π ∈ Π^conn_n} λ^{|π|}`, the free cumulant `c_n` of the Poisson law
/// with formal rate `λ`.
pub fn block_polynomial(n: usize) -> Result<LambdaPoly> {
    let mut counts: Vec<u64> = Vec::new();
    for p in enumerate(n, PartitionFamily::Connected)? {
        let blocks = p.block_count();
        if counts.len() <= blocks {
            counts.resize(blocks + 1, 0);
        }
        counts[blocks] += 1;
    }
    Ok(LambdaPoly::new(
        counts.into_iter().map(|c| crate::scalar::rational(c as i64)).collect(),
    ))
}

/// Partial Dobinski sum `e^{-1} Σ_{k=0}^{terms} k^n / k!`, approximating the
/// Bell number `B_n`. Floating point.
pub fn dobinski(n: u32, terms: u32) -> f64 {
    let mut sum = if n == 0 { 1.0 } else { 0.0 };
    let mut factorial = 1.0f64;
    for k in 1..=terms {
        factorial *= k as f64;
        let mut power = 1.0f64;
        for _ in 0..n {
            power *= k as f64;
        }
        sum += power / factorial;
    }
    sum / core::f64::consts::E
}

/// Identity checked by [`verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `Σ_{Π^conn} κ_π` against the noncrossing free cumulant.
    FreeFromClassical,
    /// `Σ_{Π^irr} κ_π` against the boolean cumulant.
    BooleanFromClassical,
    /// `Σ_{NC^irr} c_π` against the boolean cumulant.
    BooleanFromFree,
    /// `Σ_{π ∈ NC_n} c̃_π` against `m_n`.
    ClosureRegrouping,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::FreeFromClassical,
        Identity::BooleanFromClassical,
        Identity::BooleanFromFree,
        Identity::ClosureRegrouping,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::FreeFromClassical => "free-from-classical",
            Identity::BooleanFromClassical => "boolean-from-classical",
            Identity::BooleanFromFree => "boolean-from-free",
            Identity::ClosureRegrouping => "closure-regrouping",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One exact comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub identity: Identity,
    pub n: usize,
    pub seed: u64,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Check {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Random classical cumulants `κ_1..κ_order` with numerators in
/// `[-100, 100]` and denominators in `[1, 100]`, reproducible from `seed`.
pub fn random_classical(seed: u64, order: usize) -> Sequence<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..order)
        .map(|_| {
            let num: i64 = rng.gen_range(-100..=100);
            let den: i64 = rng.gen_range(1..=100);
            crate::scalar::ratio(num, den)
        })
        .collect();
    Sequence::new(Flavor::Classical, values)
}

/// Runs every [`Identity`] for `n = 1..=max_n` on `trials` random cumulant
/// sequences. Trial `t` uses seed `seed + t`; checks come out ordered by
/// trial, then `n`, then identity.
pub fn verify(max_n: usize, trials: usize, seed: u64) -> Result<Vec<Check>> {
    if max_n == 0 {
        return Err(invalid("max_n must be at least 1"));
    }
    let mut checks = Vec::with_capacity(trials * max_n * Identity::ALL.len());
    for t in 0..trials {
        checks.extend(verify_trial(max_n, seed.wrapping_add(t as u64))?);
    }
    Ok(checks)
}

/// The checks of [`verify`] for a single seed.
pub fn verify_trial(max_n: usize, seed: u64) -> Result<Vec<Check>> {
    let kappa = random_classical(seed, max_n);
    let moments = cumulant_to_moment(&kappa)?;
    let free = moment_to_cumulant(&moments, Flavor::Free)?;
    let boolean = moment_to_cumulant(&moments, Flavor::Boolean)?;
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let regrouped = closure_fibers(&kappa, n)?
            .into_values()
            .fold(Rational::zero(), |acc, (w, _)| acc + w);
        for identity in Identity::ALL {
            let (lhs, rhs) = match identity {
                Identity::FreeFromClassical => (free_from_classical(&kappa, n)?, free.get(n).clone()),
                Identity::BooleanFromClassical => (boolean_from_classical(&kappa, n)?, boolean.get(n).clone()),
                Identity::BooleanFromFree => (boolean_from_free(&free, n)?, boolean.get(n).clone()),
                Identity::ClosureRegrouping => (regrouped.clone(), moments.get(n).clone()),
            };
            checks.push(Check { identity, n, seed, lhs, rhs });
        }
    }
    Ok(checks)
}
