use kforge_core::gauss::q;
use kforge_core::{Gauss, Rational, TruncatedSeries};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-5i128..=5, 1i128..=4).prop_map(|(n, d)| q(n, d))
}

fn gauss() -> impl Strategy<Value = Gauss> {
    (rational(), rational()).prop_map(|(re, im)| Gauss::new(re, im))
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(gauss(), order + 1).prop_map(move |c| TruncatedSeries::from_coeffs(c, order))
}

fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    series(order).prop_map(move |s| {
        let mut c = s.coeffs().to_vec();
        c[0] = Gauss::int(1);
        TruncatedSeries::from_coeffs(c, order)
    })
}

fn nilpotent(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    series(order).prop_map(move |s| {
        let mut c = s.coeffs().to_vec();
        c[0] = Gauss::int(0);
        TruncatedSeries::from_coeffs(c, order)
    })
}

fn triple() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
    (0usize..=8).prop_flat_map(|n| (series(n), series(n), series(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws((a, b, c) in triple()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn inverse_is_two_sided(s in (0usize..=8).prop_flat_map(series)) {
        prop_assume!(*s.constant_term() != Gauss::int(0));
        let inv = s.invert().unwrap();
        let one = TruncatedSeries::one(s.order());
        prop_assert_eq!(s.mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.mul(&s).unwrap(), one);
    }

    #[test]
    fn binomial_powers_add(s in (0usize..=7).prop_flat_map(unit_series), p in rational(), r in rational()) {
        let lhs = s.binom_pow(&p).unwrap().mul(&s.binom_pow(&r).unwrap()).unwrap();
        prop_assert_eq!(lhs, s.binom_pow(&(p + r)).unwrap());
    }

    #[test]
    fn exp_and_log_are_inverse(s in (0usize..=7).prop_flat_map(nilpotent)) {
        let one = TruncatedSeries::one(s.order());
        prop_assert_eq!(s.log1p_series().unwrap().exp_series().unwrap(), one.add(&s).unwrap());
        let e = s.exp_series().unwrap().sub(&one).unwrap();
        prop_assert_eq!(e.log1p_series().unwrap(), s);
    }

    #[test]
    fn integer_powers_agree(s in (0usize..=6).prop_flat_map(unit_series), k in 0u32..5) {
        prop_assert_eq!(s.binom_pow(&q(k as i128, 1)).unwrap(), s.pow(k));
        let inverse_power = s.binom_pow(&q(-(k as i128), 1)).unwrap();
        prop_assert_eq!(inverse_power, s.pow(k).invert().unwrap());
    }
}

#[test]
fn known_expansions() {
    let n = 5;
    let x = TruncatedSeries::var(n);
    // e^x = sum x^k / k!
    let factorials = [1, 1, 2, 6, 24, 120];
    let expected = TruncatedSeries::from_rationals(&factorials.map(|f| q(1, f)), n);
    assert_eq!(x.exp_series().unwrap(), expected);
    // (1 + x)^(1/2): 1, 1/2, -1/8, 1/16, -5/128, 7/256
    let sqrt = [q(1, 1), q(1, 2), q(-1, 8), q(1, 16), q(-5, 128), q(7, 256)];
    let one_plus_x = TruncatedSeries::linear(Gauss::int(1), Gauss::int(1), n);
    assert_eq!(one_plus_x.binom_pow(&q(1, 2)).unwrap(), TruncatedSeries::from_rationals(&sqrt, n));
    assert!(TruncatedSeries::constant(Gauss::int(2), n).binom_pow(&q(1, 2)).is_err());
}
