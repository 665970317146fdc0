use kforge_core::gauss::q;
use kforge_core::generators::Generators;
use kforge_core::{DiffOp, Gauss, Rational};
use proptest::prelude::*;

fn jacobi(a: &DiffOp, b: &DiffOp, c: &DiffOp) -> DiffOp {
    let t1 = a.commutator(&b.commutator(c).unwrap()).unwrap();
    let t2 = b.commutator(&c.commutator(a).unwrap()).unwrap();
    let t3 = c.commutator(&a.commutator(b).unwrap()).unwrap();
    t1.add(&t2).unwrap().add(&t3).unwrap()
}

fn metric(signs: &[bool]) -> Vec<Rational> {
    signs.iter().map(|&s| q(if s { 1 } else { -1 }, 1)).collect()
}

#[test]
fn jacobi_on_generator_table() {
    let g = Generators::new(4, 2).unwrap();
    for eps in [-1, 1] {
        let eta = metric(&[eps == 1, true, true, true]);
        let mut table: Vec<DiffOp> = g.igl_basis().into_iter().map(|(_, x)| x).collect();
        for mu in 0..4 {
            for nu in mu + 1..4 {
                table.push(g.m(&eta, mu, nu));
            }
        }
        table.push(g.trace());
        for i in 0..table.len() {
            for j in i + 1..table.len() {
                for k in j + 1..table.len() {
                    assert!(jacobi(&table[i], &table[j], &table[k]).is_zero(), "eps={eps} ({i},{j},{k})");
                }
            }
        }
    }
}

#[test]
fn traceless_generators_sum_to_zero() {
    for n in 2..=5 {
        let g = Generators::new(n, 1).unwrap();
        let sum = (0..n).fold(g.zero(), |acc, mu| acc.add(&g.traceless(mu)).unwrap());
        assert!(sum.is_zero());
    }
}

#[test]
fn weyl_extension_relations() {
    let g = Generators::new(4, 1).unwrap();
    let eta = metric(&[false, true, true, true]);
    let l = g.trace();
    for mu in 0..4 {
        assert_eq!(g.p(mu).commutator(&l).unwrap(), g.p(mu));
        for nu in 0..4 {
            assert!(g.m(&eta, mu, nu).commutator(&l).unwrap().is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn orthogonal_relations_any_signature(signs in prop::collection::vec(any::<bool>(), 2..=5)) {
        let n = signs.len();
        let g = Generators::new(n, 1).unwrap();
        let eta = metric(&signs);
        let m = |a: usize, b: usize| g.m(&eta, a, b);
        let c = |k: &Rational| Gauss::real(*k);
        let delta = |a: usize, b: usize| if a == b { eta[a] } else { q(0, 1) };
        for mu in 0..n {
            for nu in 0..n {
                prop_assert_eq!(m(mu, nu), m(nu, mu).neg());
                for rho in 0..n {
                    let lhs = m(mu, nu).commutator(&g.p(rho)).unwrap();
                    let rhs = g.p(mu).scale(&c(&delta(nu, rho))).sub(&g.p(nu).scale(&c(&delta(mu, rho)))).unwrap();
                    prop_assert_eq!(lhs, rhs);
                    for la in 0..n {
                        let lhs = m(mu, nu).commutator(&m(rho, la)).unwrap();
                        let rhs = m(mu, la).scale(&c(&delta(nu, rho)))
                            .add(&m(nu, rho).scale(&c(&delta(mu, la)))).unwrap()
                            .sub(&m(mu, rho).scale(&c(&delta(nu, la)))).unwrap()
                            .sub(&m(nu, la).scale(&c(&delta(mu, rho)))).unwrap();
                        prop_assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

/// A random operator of total degree at most 3 with coefficients in `Q(i)[a]`.
fn operator() -> impl Strategy<Value = DiffOp> {
    let factor = (0usize..3, any::<bool>());
    let term = (prop::collection::vec(factor, 0..=3), -3i128..=3, -2i128..=2, 0u32..=2);
    prop::collection::vec(term, 1..=4).prop_map(|terms| {
        let g = Generators::new(3, 3).unwrap();
        let mut out = g.zero();
        for (factors, re, im, apow) in terms {
            let mut t = g.one();
            for (k, is_x) in factors {
                t = t.mul(&if is_x { g.x(k) } else { g.p(k) }).unwrap();
            }
            let c = Gauss::new(q(re, 1), q(im, 1));
            out = out.add(&t.scale(&c).scale_a(apow)).unwrap();
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn operator_product_is_associative(a in operator(), b in operator(), c in operator()) {
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_distributes(a in operator(), b in operator(), c in operator()) {
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn random_operators_satisfy_jacobi(a in operator(), b in operator(), c in operator()) {
        prop_assert!(jacobi(&a, &b, &c).is_zero());
    }
}

#[test]
fn canonical_commutation() {
    let g = Generators::new(3, 2).unwrap();
    for mu in 0..3 {
        for nu in 0..3 {
            let c = g.p(mu).commutator(&g.x(nu)).unwrap();
            let expected = if mu == nu { g.one() } else { g.zero() };
            assert_eq!(c, expected);
        }
    }
    // ∂ x = x ∂ + 1 in normal order
    let prod = g.p(1).mul(&g.x(1)).unwrap();
    assert_eq!(prod.text(), "1 + x1*d1");
}
