//! Moment-cumulant transforms for classical, free and boolean cumulants.
//!
//! Moments are indexed from 1 with an implicit `m_0 = 1`. Each cumulant
//! flavor belongs to a lattice (`Π_n`, `NC_n`, `I_n`) and is defined by
//! `m_n = Σ_{π ∈ L_n} Π_{B ∈ π} k_{|B|}`.
//!
//! The production path evaluates that lattice sum by splitting off the
//! block that contains `1`:
//!
//! * full lattice: the block has `k` elements chosen among `n`, the rest is
//!   any partition of the remaining `n - k`, giving `C(n-1, k-1) κ_k m_{n-k}`;
//! * interval lattice: the block is `[1, k]`, giving `h_k m_{n-k}`;
//! * noncrossing lattice: the block's `s` elements cut `[n]` into `s` gaps
//!   that are filled independently, giving `c_s [z^{n-s}] M(z)^s`.
//!
//! The `k = n` term is the cumulant itself, so the recursion is triangular
//! in both directions. [`lattice_sum`] evaluates the same sum by brute
//! enumeration, and the `*_series` functions go through generating functions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::incidence::{LatticeKind, Multiplicative};
use crate::partition::{enumerate, SetPartition};
use crate::scalar::{rational, Rational, Ring};
use crate::series::{self, FormalPowerSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Moments,
    Classical,
    Free,
    Boolean,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [Flavor::Moments, Flavor::Classical, Flavor::Free, Flavor::Boolean];
    pub const CUMULANTS: [Flavor; 3] = [Flavor::Classical, Flavor::Free, Flavor::Boolean];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Moments => "moments",
            Flavor::Classical => "classical",
            Flavor::Free => "free",
            Flavor::Boolean => "boolean",
        }
    }

    /// The lattice a cumulant flavor inverts over; `None` for moments.
    pub fn lattice(self) -> Option<LatticeKind> {
        match self {
            Flavor::Moments => None,
            Flavor::Classical => Some(LatticeKind::Full),
            Flavor::Free => Some(LatticeKind::Noncrossing),
            Flavor::Boolean => Some(LatticeKind::Interval),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Flavor::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| invalid(alloc::format!("unknown sequence flavor {s:?}")))
    }
}

/// Values `v_1, ..., v_N` tagged with what they are.
#[derive(Clone, Debug, PartialEq)]
pub struct Sequence<R> {
    flavor: Flavor,
    values: Vec<R>,
}

impl<R> Sequence<R> {
    /// `values[0]` is `v_1`.
    pub fn new(flavor: Flavor, values: Vec<R>) -> Self {
        Sequence { flavor, values }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn into_values(self) -> Vec<R> {
        self.values
    }

    /// `v_n` for `1 ≤ n ≤ order`.
    pub fn get(&self, n: usize) -> &R {
        assert!(n >= 1 && n <= self.values.len(), "index {n} outside 1..={}", self.values.len());
        &self.values[n - 1]
    }
}

impl<R: Ring> Sequence<R> {
    /// `v_π = Π_{B ∈ π} v_{|B|}`.
    pub fn on_blocks(&self, p: &SetPartition) -> Result<R> {
        self.multiplicative().on_blocks(p)
    }

    pub fn multiplicative(&self) -> Multiplicative<R> {
        Multiplicative::new(self.values.clone())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Sequence::new(self.flavor, self.values[..order.min(self.order())].to_vec())
    }
}

fn require(seq_flavor: Flavor, allowed: &[Flavor]) -> Result<()> {
    if allowed.contains(&seq_flavor) {
        Ok(())
    } else {
        Err(invalid(alloc::format!("sequence of {seq_flavor} not accepted here")))
    }
}

/// Coefficient of `z^degree` in `(Σ_j m_j z^j)^power`, with `m[0] = m_0`.
fn power_coefficient<R: Ring>(m: &[R], power: usize, degree: usize) -> R {
    let mut acc = vec![R::zero(); degree + 1];
    acc[0] = R::one();
    for _ in 0..power {
        let mut next = vec![R::zero(); degree + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, mj) in m.iter().enumerate().take(degree + 1 - i) {
                next[i + j] += &(a.clone() * mj);
            }
        }
        acc = next;
    }
    acc.swap_remove(degree)
}

/// `Σ_{π ∈ L_n, π ≠ 1̂} Π k_{|B|}` from `k_1..k_{n-1}` and `m_0..m_{n-1}`.
fn lower_terms<R: Ring>(flavor: Flavor, k: &[R], m: &[R], n: usize) -> R {
    let mut acc = R::zero();
    match flavor {
        Flavor::Classical => {
            // C(n-1, j-1) for j = 1..n-1
            let mut binom: Rational = rational(1);
            for j in 1..n {
                if j > 1 {
                    binom = binom * rational((n - j + 1) as i64) / rational((j - 1) as i64);
                }
                acc += &(k[j - 1].clone() * &m[n - j] * &R::from_rational(binom.clone()));
            }
        }
        Flavor::Boolean => {
            for j in 1..n {
                acc += &(k[j - 1].clone() * &m[n - j]);
            }
        }
        Flavor::Free => {
            for s in 1..n {
                if k[s - 1].is_zero() {
                    continue;
                }
                acc += &(k[s - 1].clone() * &power_coefficient(m, s, n - s));
            }
        }
        Flavor::Moments => unreachable!("moments have no lattice"),
    }
    acc
}

/// Cumulants of the given flavor from a moment sequence.
pub fn moment_to_cumulant<R: Ring>(moments: &Sequence<R>, flavor: Flavor) -> Result<Sequence<R>> {
    require(moments.flavor, &[Flavor::Moments])?;
    require(flavor, &Flavor::CUMULANTS)?;
    let mut m = Vec::with_capacity(moments.order() + 1);
    m.push(R::one());
    m.extend(moments.values.iter().cloned());
    let mut k: Vec<R> = Vec::with_capacity(moments.order());
    for n in 1..=moments.order() {
        let below = lower_terms(flavor, &k, &m, n);
        k.push(m[n].clone() - &below);
    }
    Ok(Sequence::new(flavor, k))
}

/// Moments from a cumulant sequence of any flavor.
pub fn cumulant_to_moment<R: Ring>(cumulants: &Sequence<R>) -> Result<Sequence<R>> {
    require(cumulants.flavor, &Flavor::CUMULANTS)?;
    let k = &cumulants.values;
    let mut m = Vec::with_capacity(k.len() + 1);
    m.push(R::one());
    for n in 1..=k.len() {
        let below = lower_terms(cumulants.flavor, k, &m, n);
        m.push(k[n - 1].clone() + &below);
    }
    m.remove(0);
    Ok(Sequence::new(Flavor::Moments, m))
}

/// Converts between any two flavors, routing through moments.
pub fn transform<R: Ring>(x: &Sequence<R>, target: Flavor) -> Result<Sequence<R>> {
    if x.flavor == target {
        return Ok(x.clone());
    }
    let moments = match x.flavor {
        Flavor::Moments => x.clone(),
        _ => cumulant_to_moment(x)?,
    };
    match target {
        Flavor::Moments => Ok(moments),
        _ => moment_to_cumulant(&moments, target),
    }
}

/// `Σ_{π ∈ L_n} Π_{B ∈ π} k_{|B|}` by enumerating the lattice of the
/// cumulant flavor. This is `m_n` when `k` are the cumulants of `m`.
pub fn lattice_sum<R: Ring>(cumulants: &Sequence<R>, n: usize) -> Result<R> {
    let lattice = cumulants
        .flavor
        .lattice()
        .ok_or_else(|| invalid("lattice sums need a cumulant sequence"))?;
    if n > cumulants.order() {
        return Err(invalid(alloc::format!("n = {n} exceeds sequence order {}", cumulants.order())));
    }
    let mut acc = R::zero();
    for p in enumerate(n, lattice.family())? {
        acc += &cumulants.on_blocks(&p)?;
    }
    Ok(acc)
}

fn factorials<R: Ring>(order: usize) -> Vec<R> {
    let mut out = Vec::with_capacity(order + 1);
    out.push(R::one());
    for n in 1..=order {
        let next = out[n - 1].clone() * &R::from_integer(n as i64);
        out.push(next);
    }
    out
}

fn series_of<R: Ring>(values: &[R], head: R) -> FormalPowerSeries<R> {
    FormalPowerSeries::from_fn(values.len(), |n| if n == 0 { head.clone() } else { values[n - 1].clone() })
}

fn tail<R: Ring>(s: FormalPowerSeries<R>) -> Vec<R> {
    let mut coeffs = s.into_coefficients();
    coeffs.remove(0);
    coeffs
}

/// Generating-function route for [`moment_to_cumulant`]: classical cumulants
/// from `log` of the exponential moment series, boolean from `1 - 1/M`,
/// free from [`series::solve_free`].
pub fn moment_to_cumulant_series<R: Ring>(moments: &Sequence<R>, flavor: Flavor) -> Result<Sequence<R>> {
    require(flavor, &Flavor::CUMULANTS)?;
    let values = match flavor {
        Flavor::Classical => {
            let k = series::egf_of(moments)?.log()?;
            let fact = factorials::<R>(moments.order());
            tail(k).into_iter().zip(&fact[1..]).map(|(c, f)| c * f).collect()
        }
        Flavor::Boolean => {
            let inv = series::ogf_of(moments)?.inverse()?;
            tail(-&inv)
        }
        Flavor::Free => tail(series::solve_free(&series::ogf_of(moments)?)?),
        Flavor::Moments => unreachable!(),
    };
    Ok(Sequence::new(flavor, values))
}

/// Generating-function route for [`cumulant_to_moment`].
pub fn cumulant_to_moment_series<R: Ring>(cumulants: &Sequence<R>) -> Result<Sequence<R>> {
    require(cumulants.flavor, &Flavor::CUMULANTS)?;
    let order = cumulants.order();
    let values = match cumulants.flavor {
        Flavor::Classical => {
            let fact = factorials::<R>(order);
            let k = FormalPowerSeries::from_fn(order, |n| {
                if n == 0 {
                    R::zero()
                } else {
                    cumulants.values[n - 1].clone() * &fact[n].unit_inverse().expect("n! is a unit")
                }
            });
            tail(k.exp()?).into_iter().zip(&fact[1..]).map(|(c, f)| c * f).collect()
        }
        Flavor::Boolean => {
            let one_minus_h = -&series_of(&cumulants.values, -R::one());
            tail(one_minus_h.inverse()?)
        }
        Flavor::Free => tail(series::free_moments(&series_of(&cumulants.values, R::one()))?),
        Flavor::Moments => unreachable!(),
    };
    Ok(Sequence::new(Flavor::Moments, values))
}

/// Classical cumulants of the standard Gaussian: `κ_2 = 1`, all others 0.
pub fn gaussian<R: Ring>(order: usize) -> Sequence<R> {
    Sequence::new(
        Flavor::Classical,
        (1..=order).map(|n| if n == 2 { R::one() } else { R::zero() }).collect(),
    )
}

/// Classical cumulants of the Poisson law with the given rate: all equal to it.
pub fn poisson<R: Ring>(rate: R, order: usize) -> Sequence<R> {
    Sequence::new(Flavor::Classical, vec![rate; order])
}

/// `v_n ↦ t^n v_n`: the sequence of the dilated variable `t·a`.
pub fn dilate<R: Ring>(x: &Sequence<R>, t: &R) -> Sequence<R> {
    let mut power = R::one();
    let values = x
        .values
        .iter()
        .map(|v| {
            power = power.clone() * t;
            v.clone() * &power
        })
        .collect();
    Sequence::new(x.flavor, values)
}

fn check_pair<R>(a: &Sequence<R>, b: &Sequence<R>) -> Result<()> {
    require(a.flavor, &[Flavor::Moments])?;
    require(b.flavor, &[Flavor::Moments])?;
    if a.order() != b.order() {
        return Err(invalid(alloc::format!("orders differ: {} vs {}", a.order(), b.order())));
    }
    Ok(())
}

/// Moments of the classical convolution: product of exponential moment
/// series, i.e. the binomial convolution of the moments.
pub fn convolve_classical<R: Ring>(a: &Sequence<R>, b: &Sequence<R>) -> Result<Sequence<R>> {
    check_pair(a, b)?;
    let product = &series::egf_of(a)? * &series::egf_of(b)?;
    let fact = factorials::<R>(a.order());
    let values = tail(product).into_iter().zip(&fact[1..]).map(|(c, f)| c * f).collect();
    Ok(Sequence::new(Flavor::Moments, values))
}

/// Moments of the boolean convolution: `H_a + H_b` reassembled through
/// `M = 1/(1 - H)`.
pub fn convolve_boolean<R: Ring>(a: &Sequence<R>, b: &Sequence<R>) -> Result<Sequence<R>> {
    check_pair(a, b)?;
    let h = |m: &Sequence<R>| -> Result<FormalPowerSeries<R>> {
        let inv = series::ogf_of(m)?.inverse()?;
        Ok(&FormalPowerSeries::one(m.order()) - &inv)
    };
    let sum = &h(a)? + &h(b)?;
    let m = (&FormalPowerSeries::one(a.order()) - &sum).inverse()?;
    Ok(Sequence::new(Flavor::Moments, tail(m)))
}

/// Moments of the free convolution: free cumulants add.
pub fn convolve_free<R: Ring>(a: &Sequence<R>, b: &Sequence<R>) -> Result<Sequence<R>> {
    check_pair(a, b)?;
    let ca = moment_to_cumulant(a, Flavor::Free)?;
    let cb = moment_to_cumulant(b, Flavor::Free)?;
    let sum = ca.values.iter().zip(&cb.values).map(|(x, y)| x.clone() + y).collect();
    cumulant_to_moment(&Sequence::new(Flavor::Free, sum))
}
