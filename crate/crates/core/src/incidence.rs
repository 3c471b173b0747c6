//! Incidence algebra of the partition lattice and its noncrossing and
//! interval sublattices.
//!
//! Interval functions assign a ring element to each comparable pair
//! `σ ≤ π` of a lattice. Segments are walked by filtering the lattice
//! enumeration with refinement tests.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::error::{invalid, Error, Result};
use crate::partition::{enumerate, PartitionFamily, SetPartition};
use crate::scalar::{rational, Rational, Ring};

/// One of the three lattices of partitions of `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeKind {
    Full,
    Noncrossing,
    Interval,
}

impl LatticeKind {
    pub fn family(self) -> PartitionFamily {
        match self {
            LatticeKind::Full => PartitionFamily::All,
            LatticeKind::Noncrossing => PartitionFamily::Noncrossing,
            LatticeKind::Interval => PartitionFamily::Interval,
        }
    }

    pub fn contains(self, p: &SetPartition) -> bool {
        self.family().contains(p)
    }

    /// Members of the lattice over `[n]`, in enumeration order.
    pub fn elements(self, n: usize) -> Result<Vec<SetPartition>> {
        Ok(enumerate(n, self.family())?.collect())
    }
}

/// Checks that `[lower, upper]` is a segment of `kind`.
pub fn check_segment(kind: LatticeKind, lower: &SetPartition, upper: &SetPartition) -> Result<()> {
    if !lower.leq(upper)? {
        return Err(Error::Incomparable {
            lower: lower.to_string(),
            upper: upper.to_string(),
        });
    }
    for p in [lower, upper] {
        if !kind.contains(p) {
            return Err(invalid(alloc::format!("{p} is not in the {kind:?} lattice")));
        }
    }
    Ok(())
}

/// Members `z` of the lattice with `lower ≤ z ≤ upper`.
fn segment<'a>(kind: LatticeKind, lower: &SetPartition, upper: &'a SetPartition) -> impl Iterator<Item = SetPartition> + 'a {
    let lower = lower.clone();
    enumerate(upper.n(), kind.family())
        .expect("n validated by the caller")
        .filter(move |z| lower.refines(z) && z.refines(upper))
}

/// An element of the incidence algebra.
pub trait IntervalFunction<R: Ring> {
    fn lattice(&self) -> LatticeKind;

    /// Value on a segment the caller has already validated.
    fn value(&self, lower: &SetPartition, upper: &SetPartition) -> R;

    fn eval(&self, lower: &SetPartition, upper: &SetPartition) -> Result<R> {
        check_segment(self.lattice(), lower, upper)?;
        Ok(self.value(lower, upper))
    }
}

/// Convolution identity.
#[derive(Clone, Copy, Debug)]
pub struct Delta(pub LatticeKind);

impl<R: Ring> IntervalFunction<R> for Delta {
    fn lattice(&self) -> LatticeKind {
        self.0
    }

    fn value(&self, lower: &SetPartition, upper: &SetPartition) -> R {
        if lower == upper {
            R::one()
        } else {
            R::zero()
        }
    }
}

/// Constant one on every segment.
#[derive(Clone, Copy, Debug)]
pub struct Zeta(pub LatticeKind);

impl<R: Ring> IntervalFunction<R> for Zeta {
    fn lattice(&self) -> LatticeKind {
        self.0
    }

    fn value(&self, _: &SetPartition, _: &SetPartition) -> R {
        R::one()
    }
}

/// An interval function given by a closure.
pub struct FnInterval<F> {
    kind: LatticeKind,
    rule: F,
}

impl<F> FnInterval<F> {
    pub fn new(kind: LatticeKind, rule: F) -> Self {
        FnInterval { kind, rule }
    }
}

impl<R: Ring, F: Fn(&SetPartition, &SetPartition) -> R> IntervalFunction<R> for FnInterval<F> {
    fn lattice(&self) -> LatticeKind {
        self.kind
    }

    fn value(&self, lower: &SetPartition, upper: &SetPartition) -> R {
        (self.rule)(lower, upper)
    }
}

/// `(f * g)(σ, π) = Σ_{σ ≤ z ≤ π} f(σ, z) g(z, π)`, with `z` ranging over
/// the common lattice of `f` and `g`.
pub fn convolve<R, F, G>(f: &F, g: &G, lower: &SetPartition, upper: &SetPartition) -> Result<R>
where
    R: Ring,
    F: IntervalFunction<R> + ?Sized,
    G: IntervalFunction<R> + ?Sized,
{
    let kind = f.lattice();
    if g.lattice() != kind {
        return Err(invalid("convolution of functions on different lattices"));
    }
    check_segment(kind, lower, upper)?;
    let mut acc = R::zero();
    for z in segment(kind, lower, upper) {
        let term = f.value(lower, &z);
        if term.is_zero() {
            continue;
        }
        acc += &(term * &g.value(&z, upper));
    }
    Ok(acc)
}

/// Exponents `(k_1, k_2, ...)` of a segment `[σ, π]` of the full lattice:
/// `k_j` blocks of `π` are made of exactly `j` blocks of `σ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SegmentType {
    exponents: Vec<usize>,
}

impl SegmentType {
    pub fn from_exponents(mut exponents: Vec<usize>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        SegmentType { exponents }
    }

    /// `k_j`, zero beyond the stored range.
    pub fn exponent(&self, j: usize) -> usize {
        j.checked_sub(1)
            .and_then(|i| self.exponents.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// `Σ j·k_j`, the number of blocks of the lower partition.
    pub fn rank(&self) -> usize {
        self.exponents.iter().enumerate().map(|(i, k)| (i + 1) * k).sum()
    }

    /// `(j, k_j)` for the nonzero exponents.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| (i + 1, k))
    }

    /// The partition `ρ` of `[rank]` with `[0̂, ρ]` of this type: blocks in
    /// ascending size, laid out as consecutive runs.
    fn representative(&self) -> SetPartition {
        let mut code = Vec::with_capacity(self.rank());
        let mut label = 0;
        for (j, k) in self.iter() {
            for _ in 0..k {
                code.extend(core::iter::repeat_n(label, j));
                label += 1;
            }
        }
        SetPartition::from_code(&code).expect("runs form a restricted growth string")
    }
}

impl fmt::Debug for SegmentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SegmentType(")?;
        for (n, (j, k)) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "k{j}={k}")?;
        }
        f.write_str(")")
    }
}

/// Type of the segment `[lower, upper]` in the full lattice.
pub fn segment_type(lower: &SetPartition, upper: &SetPartition) -> Result<SegmentType> {
    check_segment(LatticeKind::Full, lower, upper)?;
    Ok(segment_type_unchecked(lower, upper))
}

fn segment_type_unchecked(lower: &SetPartition, upper: &SetPartition) -> SegmentType {
    // lower-blocks per upper-block, read off at the first element of each lower-block
    let mut inside = vec![0usize; upper.block_count()];
    let mut seen = 0;
    for i in 0..lower.n() {
        if lower.label(i) == seen {
            inside[upper.label(i)] += 1;
            seen += 1;
        }
    }
    let mut exponents = vec![0; lower.block_count()];
    for j in inside {
        exponents[j - 1] += 1;
    }
    SegmentType::from_exponents(exponents)
}

/// Möbius function of one of the lattices, memoized.
///
/// On the full lattice values are cached per [`SegmentType`] and computed on
/// the representative segment `[0̂_m, ρ]` of that type. On the sublattices
/// whole rows `z ↦ μ(σ, z)` are cached per lower end `σ`.
///
/// The cache lives in a `RefCell`; use one instance per thread.
#[derive(Debug)]
pub struct Moebius {
    kind: LatticeKind,
    by_type: RefCell<BTreeMap<SegmentType, Rational>>,
    rows: RefCell<BTreeMap<SetPartition, BTreeMap<SetPartition, Rational>>>,
}

impl Moebius {
    pub fn new(kind: LatticeKind) -> Self {
        Moebius {
            kind,
            by_type: RefCell::new(BTreeMap::new()),
            rows: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    /// `μ(lower, upper)`, validating the segment.
    pub fn get(&self, lower: &SetPartition, upper: &SetPartition) -> Result<Rational> {
        check_segment(self.kind, lower, upper)?;
        Ok(self.raw(lower, upper))
    }

    fn raw(&self, lower: &SetPartition, upper: &SetPartition) -> Rational {
        if lower == upper {
            return rational(1);
        }
        match self.kind {
            LatticeKind::Full => self.of_type(&segment_type_unchecked(lower, upper)),
            _ => self.row_value(lower, upper),
        }
    }

    fn of_type(&self, t: &SegmentType) -> Rational {
        if let Some(v) = self.by_type.borrow().get(t) {
            return v.clone();
        }
        let top = t.representative();
        let bottom = SetPartition::finest(top.n());
        let value = if top == bottom {
            rational(1)
        } else {
            let mut acc = rational(0);
            for z in segment(LatticeKind::Full, &bottom, &top) {
                if z != top {
                    acc += &self.raw(&bottom, &z);
                }
            }
            -acc
        };
        self.by_type.borrow_mut().insert(t.clone(), value.clone());
        value
    }

    fn row_value(&self, lower: &SetPartition, upper: &SetPartition) -> Rational {
        if let Some(row) = self.rows.borrow().get(lower) {
            return row[upper].clone();
        }
        let mut above: Vec<SetPartition> = enumerate(lower.n(), self.kind.family())
            .expect("validated")
            .filter(|z| lower.refines(z))
            .collect();
        // anything strictly below z has more blocks than z
        above.sort_by_key(|z| core::cmp::Reverse(z.block_count()));
        let mut values: Vec<Rational> = Vec::with_capacity(above.len());
        for (i, z) in above.iter().enumerate() {
            let v = if z == lower {
                rational(1)
            } else {
                let mut acc = rational(0);
                for (w, mu) in above[..i].iter().zip(&values) {
                    if w.block_count() > z.block_count() && w.refines(z) {
                        acc += mu;
                    }
                }
                -acc
            };
            values.push(v);
        }
        let row: BTreeMap<_, _> = above.into_iter().zip(values).collect();
        let value = row[upper].clone();
        self.rows.borrow_mut().insert(lower.clone(), row);
        value
    }
}

impl<R: Ring> IntervalFunction<R> for Moebius {
    fn lattice(&self) -> LatticeKind {
        self.kind
    }

    fn value(&self, lower: &SetPartition, upper: &SetPartition) -> R {
        R::from_rational(self.raw(lower, upper))
    }
}

/// `μ(lower, upper)` in the chosen lattice, with a fresh cache.
pub fn moebius(kind: LatticeKind, lower: &SetPartition, upper: &SetPartition) -> Result<Rational> {
    Moebius::new(kind).get(lower, upper)
}

/// A multiplicative function on the full lattice, fixed by `(f_1, f_2, ...)`:
/// its value on a segment of type `(k_j)` is `Π f_j^{k_j}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Multiplicative<R> {
    values: Vec<R>,
}

impl<R: Ring> Multiplicative<R> {
    /// `values[0]` is `f_1`.
    pub fn new(values: Vec<R>) -> Self {
        Multiplicative { values }
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    /// `f_j`, for `1 ≤ j ≤ len`.
    pub fn at(&self, j: usize) -> Option<&R> {
        j.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn on_type(&self, t: &SegmentType) -> Result<R> {
        let mut acc = R::one();
        for (j, k) in t.iter() {
            let f = self.at(j).ok_or_else(|| {
                invalid(alloc::format!("multiplicative function needs f_{j}, has {}", self.values.len()))
            })?;
            acc = acc * &f.pow(k);
        }
        Ok(acc)
    }

    /// `f_π = Π_{B ∈ π} f_{|B|}`, the value on `[0̂, π]`.
    pub fn on_blocks(&self, p: &SetPartition) -> Result<R> {
        let mut acc = R::one();
        for size in p.block_sizes() {
            let f = self
                .at(size)
                .ok_or_else(|| invalid(alloc::format!("multiplicative function needs f_{size}")))?;
            acc = acc * f;
        }
        Ok(acc)
    }
}

impl<R: Ring> IntervalFunction<R> for Multiplicative<R> {
    fn lattice(&self) -> LatticeKind {
        LatticeKind::Full
    }

    /// Panics if the sequence is too short for the segment; [`eval`](Self::eval)
    /// and [`eval_multiplicative`] report that as an error instead.
    fn value(&self, lower: &SetPartition, upper: &SetPartition) -> R {
        self.on_type(&segment_type_unchecked(lower, upper))
            .expect("multiplicative sequence too short for segment")
    }

    fn eval(&self, lower: &SetPartition, upper: &SetPartition) -> Result<R> {
        self.on_type(&segment_type(lower, upper)?)
    }
}

pub fn eval_multiplicative<R: Ring>(f: &Multiplicative<R>, lower: &SetPartition, upper: &SetPartition) -> Result<R> {
    f.eval(lower, upper)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Sums over `y ≤ x`.
    Down,
    /// Sums over `y ≥ x`.
    Up,
}

fn lattice_domain<R>(values: &BTreeMap<SetPartition, R>, kind: LatticeKind) -> Result<Vec<SetPartition>> {
    let n = values
        .keys()
        .next()
        .ok_or_else(|| invalid("empty value table"))?
        .n();
    let elements = kind.elements(n)?;
    if elements.len() != values.len() || !elements.iter().all(|e| values.contains_key(e)) {
        return Err(invalid(alloc::format!(
            "value table is not indexed by the {kind:?} lattice over [{n}]"
        )));
    }
    Ok(elements)
}

/// Summation against ζ: `Down` gives `F(x) = Σ_{y ≤ x} g(y)`, `Up` gives
/// `F(x) = Σ_{y ≥ x} g(y)`.
pub fn zeta_sum<R: Ring>(
    values: &BTreeMap<SetPartition, R>,
    direction: Direction,
    kind: LatticeKind,
) -> Result<BTreeMap<SetPartition, R>> {
    let elements = lattice_domain(values, kind)?;
    Ok(elements
        .iter()
        .map(|x| {
            let mut acc = R::zero();
            for y in &elements {
                let related = match direction {
                    Direction::Down => y.refines(x),
                    Direction::Up => x.refines(y),
                };
                if related {
                    acc += &values[y];
                }
            }
            (x.clone(), acc)
        })
        .collect())
}

/// Möbius inversion: `Down` gives `g(x) = Σ_{y ≤ x} f(y) μ(y, x)`, `Up`
/// gives `g(x) = Σ_{y ≥ x} μ(x, y) f(y)`. Inverse to [`zeta_sum`].
pub fn moebius_invert<R: Ring>(
    values: &BTreeMap<SetPartition, R>,
    direction: Direction,
    kind: LatticeKind,
) -> Result<BTreeMap<SetPartition, R>> {
    let elements = lattice_domain(values, kind)?;
    let mu = Moebius::new(kind);
    Ok(elements
        .iter()
        .map(|x| {
            let mut acc = R::zero();
            for y in &elements {
                let coefficient = match direction {
                    Direction::Down if y.refines(x) => mu.raw(y, x),
                    Direction::Up if x.refines(y) => mu.raw(x, y),
                    _ => continue,
                };
                acc += &(values[y].clone() * &R::from_rational(coefficient));
            }
            (x.clone(), acc)
        })
        .collect())
}

/// First elements of the non-initial blocks of an interval partition, as a
/// bitmask over `{2, ..., n}` (bit `i - 2` for element `i`). Reverses order:
/// `σ ≤ π` iff the image of `π` is a subset of the image of `σ`.
pub fn boolean_image(p: &SetPartition) -> Result<u64> {
    if !p.is_interval() {
        return Err(invalid(alloc::format!("{p} is not an interval partition")));
    }
    if p.n() > 65 {
        return Err(invalid("ground set too large for a 64-bit image"));
    }
    let code = p.code();
    Ok((1..p.n())
        .filter(|&i| code[i] != code[i - 1])
        .fold(0u64, |mask, i| mask | 1 << (i - 1)))
}
