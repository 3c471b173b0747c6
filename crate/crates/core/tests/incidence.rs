mod common;

use connpart_core::incidence::{
    boolean_image, convolve, eval_multiplicative, moebius, segment_type, Delta, IntervalFunction, LatticeKind,
    Moebius, Multiplicative, Zeta,
};
use connpart_core::scalar::rational;
use connpart_core::{Rational, SetPartition};

const LATTICES: [LatticeKind; 3] = [LatticeKind::Full, LatticeKind::Noncrossing, LatticeKind::Interval];

#[test]
fn zeta_and_moebius_are_inverse_on_small_lattices() {
    for kind in LATTICES {
        let mu = Moebius::new(kind);
        for n in 1..=5 {
            let elements = kind.elements(n).unwrap();
            for a in &elements {
                for b in elements.iter().filter(|b| a.leq(b).unwrap()) {
                    let delta: Rational = Delta(kind).value(a, b);
                    let left: Rational = convolve(&Zeta(kind), &mu, a, b).unwrap();
                    let right: Rational = convolve(&mu, &Zeta(kind), a, b).unwrap();
                    assert_eq!(left, delta, "{kind:?} {a} {b}");
                    assert_eq!(right, delta, "{kind:?} {a} {b}");
                }
            }
        }
    }
}

#[test]
fn full_lattice_moebius_is_signed_factorial() {
    for n in 1..=8 {
        let expected = rational(if n % 2 == 1 { 1 } else { -1 } * common::factorial(n - 1) as i64);
        let got = moebius(LatticeKind::Full, &SetPartition::finest(n), &SetPartition::coarsest(n)).unwrap();
        assert_eq!(got, expected, "n={n}");
    }
}

#[test]
fn interval_moebius_is_signed_unit() {
    for n in 1..=8 {
        let got = moebius(LatticeKind::Interval, &SetPartition::finest(n), &SetPartition::coarsest(n)).unwrap();
        assert_eq!(got, rational(if n % 2 == 1 { 1 } else { -1 }));
    }
}

#[test]
fn noncrossing_moebius_is_signed_catalan() {
    let catalan = common::catalan_numbers(8);
    for n in 1..=8 {
        let got = moebius(LatticeKind::Noncrossing, &SetPartition::finest(n), &SetPartition::coarsest(n)).unwrap();
        let sign = if n % 2 == 1 { 1 } else { -1 };
        assert_eq!(got, rational(sign * catalan[n - 1] as i64), "n={n}");
    }
}

#[test]
fn full_moebius_depends_only_on_segment_type() {
    let mu = Moebius::new(LatticeKind::Full);
    let elements = LatticeKind::Full.elements(6).unwrap();
    let mut seen = std::collections::BTreeMap::new();
    for a in &elements {
        for b in elements.iter().filter(|b| a.leq(b).unwrap()) {
            let t = segment_type(a, b).unwrap();
            let v = mu.get(a, b).unwrap();
            // oracle: Π ((-1)^{j-1} (j-1)!)^{k_j}
            let closed = t.iter().fold(rational(1), |acc, (j, k)| {
                let f = rational(if j % 2 == 1 { 1 } else { -1 } * common::factorial(j - 1) as i64);
                (0..k).fold(acc, |acc, _| acc * &f)
            });
            assert_eq!(v, closed, "{a} {b}");
            assert_eq!(seen.entry(t).or_insert_with(|| v.clone()), &v);
        }
    }
}

#[test]
fn interval_lattice_is_anti_isomorphic_to_subsets() {
    for n in 1..=8 {
        let elements = LatticeKind::Interval.elements(n).unwrap();
        assert_eq!(elements.len(), 1 << (n - 1));
        let images: Vec<u64> = elements.iter().map(|p| boolean_image(p).unwrap()).collect();
        let mut sorted = images.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted, (0..1u64 << (n - 1)).collect::<Vec<_>>());
        for (a, ia) in elements.iter().zip(&images) {
            for (b, ib) in elements.iter().zip(&images) {
                assert_eq!(a.leq(b).unwrap(), ib & !ia == 0, "{a} {b}");
            }
        }
    }
}

#[test]
fn multiplicative_functions_are_closed_under_convolution() {
    let f = Multiplicative::new(common::lcg_rationals(3, 7));
    let g = Multiplicative::new(common::lcg_rationals(11, 7));
    // (f * g) on [0̂_j, 1̂_j] gives the sequence of the product
    let h: Vec<Rational> = (1..=7)
        .map(|j| convolve(&f, &g, &SetPartition::finest(j), &SetPartition::coarsest(j)).unwrap())
        .collect();
    let h = Multiplicative::new(h);
    for n in 1..=7 {
        let elements = LatticeKind::Full.elements(n).unwrap();
        for a in &elements {
            for b in elements.iter().filter(|b| a.leq(b).unwrap()) {
                let direct: Rational = convolve(&f, &g, a, b).unwrap();
                assert_eq!(direct, eval_multiplicative(&h, a, b).unwrap(), "{a} {b}");
            }
        }
    }
}

#[test]
fn poisson_weights_count_blocks() {
    let lambda = connpart_core::LambdaPoly::lambda();
    let f = Multiplicative::new(vec![lambda.clone(); 6]);
    for p in LatticeKind::Full.elements(6).unwrap() {
        let v = eval_multiplicative(&f, &SetPartition::finest(6), &p).unwrap();
        assert_eq!(v, connpart_core::Ring::pow(&lambda, p.block_count()));
    }
}
