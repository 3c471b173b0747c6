//! Truncated formal power series over an exact ring.
//!
//! A series of order `N` carries the coefficients `a_0, ..., a_N`. Binary
//! operations truncate to the smaller order of their operands, and nothing
//! ever extends the order silently.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::cumulants::{Flavor, Sequence};
use crate::error::{invalid, Result};
use crate::scalar::Ring;

/// Truncation order used when a caller has no preference.
pub const DEFAULT_ORDER: usize = 12;

#[derive(Clone, PartialEq)]
pub struct FormalPowerSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> FormalPowerSeries<R> {
    /// Series with coefficients `a_0, ..., a_N`; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        FormalPowerSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Self::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| R::zero())
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    /// The series `z` (or `0` at order zero).
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = R::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `z^k`; `None` beyond the order.
    pub fn coeff(&self, k: usize) -> Option<&R> {
        self.coeffs.get(k)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self::new(self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// `z · self`, keeping the order.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(R::zero());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        Self::new(coeffs)
    }

    fn zip(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |k| f(&self.coeffs[k], &other.coeffs[k]))
    }

    fn cauchy(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += &(a.clone() * b);
            }
        }
        Self::new(out)
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let head = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| invalid(alloc::format!("constant term {} is not a unit", self.coeffs[0])))?;
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(head.clone());
        for n in 1..=self.order() {
            let mut acc = R::zero();
            for k in 1..=n {
                acc += &(self.coeffs[k].clone() * &out[n - k]);
            }
            out.push(-(acc * &head));
        }
        Ok(Self::new(out))
    }

    /// `self ∘ inner`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(invalid("inner series of a composition must vanish at zero"));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// `exp(self)`, via `n b_n = Σ_{k=1}^{n} k a_k b_{n-k}`; needs `a_0 = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(invalid("exp needs a series with zero constant term"));
        }
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(R::one());
        for n in 1..=self.order() {
            let mut acc = R::zero();
            for k in 1..=n {
                acc += &(self.coeffs[k].clone() * &out[n - k] * &R::from_integer(k as i64));
            }
            out.push(acc.div_integer(n as i64));
        }
        Ok(Self::new(out))
    }

    /// `log(self)`, via `n a_n = n f_n - Σ_{k=1}^{n-1} k a_k f_{n-k}`; needs `f_0 = 1`.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != R::one() {
            return Err(invalid("log needs a series with constant term 1"));
        }
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(R::zero());
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone() * &R::from_integer(n as i64);
            for k in 1..n {
                acc -= &(out[k].clone() * &self.coeffs[n - k] * &R::from_integer(k as i64));
            }
            out.push(acc.div_integer(n as i64));
        }
        Ok(Self::new(out))
    }
}

impl<R: Ring> Add for &FormalPowerSeries<R> {
    type Output = FormalPowerSeries<R>;
    fn add(self, rhs: Self) -> FormalPowerSeries<R> {
        self.zip(rhs, |a, b| a.clone() + b)
    }
}

impl<R: Ring> Sub for &FormalPowerSeries<R> {
    type Output = FormalPowerSeries<R>;
    fn sub(self, rhs: Self) -> FormalPowerSeries<R> {
        self.zip(rhs, |a, b| a.clone() - b)
    }
}

impl<R: Ring> Mul for &FormalPowerSeries<R> {
    type Output = FormalPowerSeries<R>;
    fn mul(self, rhs: Self) -> FormalPowerSeries<R> {
        self.cauchy(rhs)
    }
}

impl<R: Ring> Neg for &FormalPowerSeries<R> {
    type Output = FormalPowerSeries<R>;
    fn neg(self) -> FormalPowerSeries<R> {
        FormalPowerSeries::new(self.coeffs.iter().map(|a| -a.clone()).collect())
    }
}

impl<R: Ring> fmt::Debug for FormalPowerSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "; O(z^{})]", self.order() + 1)
    }
}

/// Free cumulant series `C` of a moment series `M`, the unique solution of
/// `M(z) = C(z M(z))` with `C_0 = 1`.
///
/// `[z^n] C(zM)` is `c_n` plus terms in `c_0..c_{n-1}`, so the coefficients
/// are solved one order at a time.
pub fn solve_free<R: Ring>(moments: &FormalPowerSeries<R>) -> Result<FormalPowerSeries<R>> {
    if moments.coeffs[0] != R::one() {
        return Err(invalid("moment series must have constant term 1"));
    }
    let order = moments.order();
    let z_m = moments.shift_up();
    // powers[k] = (zM)^k
    let mut powers = vec![FormalPowerSeries::one(order)];
    let mut c: Vec<R> = vec![R::one()];
    for n in 1..=order {
        let next = &powers[n - 1] * &z_m;
        powers.push(next);
        let mut acc = moments.coeffs[n].clone();
        for (k, ck) in c.iter().enumerate() {
            acc -= &(ck.clone() * &powers[k].coeffs[n]);
        }
        c.push(acc);
    }
    Ok(FormalPowerSeries::new(c))
}

/// Inverse of [`solve_free`]: the moment series `M` with `M = C(zM)`,
/// found by fixed-point iteration (each pass fixes one more coefficient).
pub fn free_moments<R: Ring>(cumulants: &FormalPowerSeries<R>) -> Result<FormalPowerSeries<R>> {
    if cumulants.coeffs[0] != R::one() {
        return Err(invalid("free cumulant series must have constant term 1"));
    }
    let order = cumulants.order();
    let mut m = FormalPowerSeries::one(order);
    for _ in 0..order {
        m = cumulants.compose(&m.shift_up())?;
    }
    Ok(m)
}

fn require_moments<R>(seq: &Sequence<R>) -> Result<()> {
    if seq.flavor() != Flavor::Moments {
        return Err(invalid(alloc::format!("expected moments, got {}", seq.flavor())));
    }
    Ok(())
}

/// `F(z) = Σ m_n z^n / n!` with `m_0 = 1`.
pub fn egf_of<R: Ring>(moments: &Sequence<R>) -> Result<FormalPowerSeries<R>> {
    require_moments(moments)?;
    let mut factorial = R::one();
    Ok(FormalPowerSeries::from_fn(moments.order(), |n| {
        if n == 0 {
            return R::one();
        }
        factorial = factorial.clone() * &R::from_integer(n as i64);
        let inv = factorial.unit_inverse().expect("n! is invertible over the rationals");
        moments.get(n).clone() * &inv
    }))
}

/// `M(z) = 1 + Σ m_n z^n`.
pub fn ogf_of<R: Ring>(moments: &Sequence<R>) -> Result<FormalPowerSeries<R>> {
    require_moments(moments)?;
    Ok(FormalPowerSeries::from_fn(moments.order(), |n| {
        if n == 0 {
            R::one()
        } else {
            moments.get(n).clone()
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, rational, Rational};

    fn s(values: &[i64]) -> FormalPowerSeries<Rational> {
        FormalPowerSeries::new(values.iter().map(|&v| rational(v)).collect())
    }

    #[test]
    fn product_of_conjugates() {
        assert_eq!(&s(&[1, 1, 0]) * &s(&[1, -1, 0]), s(&[1, 0, -1]));
    }

    #[test]
    fn orders_truncate_to_the_smaller() {
        let sum = &s(&[1, 2, 3, 4]) + &s(&[1, 1]);
        assert_eq!(sum, s(&[2, 3]));
    }

    #[test]
    fn scaling() {
        assert_eq!(s(&[1, 2, 3]).scale(&ratio(1, 2)), FormalPowerSeries::new(vec![ratio(1, 2), rational(1), ratio(3, 2)]));
    }

    #[test]
    fn geometric_inverse() {
        assert_eq!(s(&[1, -1, 0, 0, 0]).inverse().unwrap(), s(&[1, 1, 1, 1, 1]));
        assert_eq!(s(&[1]).inverse().unwrap(), s(&[1]));
        assert!(s(&[0, 1]).inverse().is_err());
    }

    #[test]
    fn inverse_of_one_minus_h() {
        // H = z + z^2: M = 1/(1 - H) = 1 + z + 2z^2 + 3z^3
        let m = (&s(&[1, 0, 0, 0]) - &s(&[0, 1, 1, 0])).inverse().unwrap();
        assert_eq!(m, s(&[1, 1, 2, 3]));
    }

    #[test]
    fn composition() {
        let f = s(&[3, 1, 4, 1, 5]);
        assert_eq!(f.compose(&FormalPowerSeries::variable(4)).unwrap(), f);
        let geometric = s(&[1, 1, 1, 1]);
        // 1/(1 - z - z^2) = 1 + z + 2z^2 + 3z^3
        assert_eq!(geometric.compose(&s(&[0, 1, 1, 0])).unwrap(), s(&[1, 1, 2, 3]));
        assert!(f.compose(&s(&[1, 1, 0, 0, 0])).is_err());
    }

    #[test]
    fn exp_of_log_one_plus_z() {
        let order = 8;
        let log1p = FormalPowerSeries::from_fn(order, |k| {
            if k == 0 {
                rational(0)
            } else {
                ratio(if k % 2 == 1 { 1 } else { -1 }, k as i64)
            }
        });
        let e = FormalPowerSeries::<Rational>::variable(order).exp().unwrap();
        assert_eq!(e.compose(&log1p).unwrap(), s(&[1, 1, 0, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn exponential_coefficients() {
        let e = FormalPowerSeries::<Rational>::variable(6).exp().unwrap();
        let mut fact: i64 = 1;
        for k in 0..=6 {
            if k > 0 {
                fact *= k as i64;
            }
            assert_eq!(e.coeff(k).unwrap(), &ratio(1, fact));
        }
        assert_eq!(FormalPowerSeries::<Rational>::zero(4).exp().unwrap(), FormalPowerSeries::one(4));
    }

    #[test]
    fn exp_log_round_trip() {
        let a = s(&[0, 1, 1, 0, 0, 0]);
        assert_eq!(a.exp().unwrap().log().unwrap(), a);
        assert!(s(&[1, 1]).exp().is_err());
        assert!(s(&[2, 1]).log().is_err());
    }

    #[test]
    fn free_cumulants_of_examples() {
        assert_eq!(solve_free(&s(&[1, 0, 0, 0])).unwrap(), s(&[1, 0, 0, 0]));
        // Gaussian moments
        let c = solve_free(&s(&[1, 0, 1, 0, 3, 0, 15])).unwrap();
        assert_eq!(c, s(&[1, 0, 1, 0, 1, 0, 4]));
        // Bell moments
        let c = solve_free(&s(&[1, 1, 2, 5, 15])).unwrap();
        assert_eq!(c, s(&[1, 1, 1, 1, 2]));
        assert!(solve_free(&s(&[2, 1])).is_err());
    }

    #[test]
    fn free_moments_inverts_solve_free() {
        let m = s(&[1, 3, -2, 7, 0, 5, 1]);
        assert_eq!(free_moments(&solve_free(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn generating_functions_of_moments() {
        let gauss = Sequence::new(Flavor::Moments, [0, 1, 0, 3].map(rational).to_vec());
        assert_eq!(egf_of(&gauss).unwrap().coeff(2).unwrap(), &ratio(1, 2));
        let bell = Sequence::new(Flavor::Moments, [1, 2, 5].map(rational).to_vec());
        assert_eq!(ogf_of(&bell).unwrap(), s(&[1, 1, 2, 5]));
        let zero = Sequence::new(Flavor::Moments, vec![rational(0); 3]);
        assert_eq!(ogf_of(&zero).unwrap(), FormalPowerSeries::one(3));
        assert_eq!(egf_of(&zero).unwrap(), FormalPowerSeries::one(3));
        let wrong = Sequence::new(Flavor::Free, vec![rational(0); 3]);
        assert!(egf_of(&wrong).is_err());
    }
}
