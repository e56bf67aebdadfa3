use almost_hopf::almost_group::catalog::{cyclic, standard_structures, swap_pair};
use almost_hopf::almost_group::AlmostGroup;
use almost_hopf::bicross_dual::{bicrossproduct, dual_bicrossproduct};
use almost_hopf::exact_linear::{add, apply_linear, scale, tensor, LinComb, Rational};
use almost_hopf::loop_factor::{act, random_samples, verify_unitarity, TOL_U};
use almost_hopf::matched_pair::MatchedPair;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d))
}

fn lincomb() -> impl Strategy<Value = LinComb<usize>> {
    prop::collection::vec((0usize..6, rational()), 0..6).prop_map(LinComb::from_terms)
}

/// `Z/n₁ × … × Z/n_k` as a group, through its Cayley table.
fn cyclic_product(orders: &[usize]) -> AlmostGroup {
    let size: usize = orders.iter().product();
    let digits = |mut x: usize| {
        orders
            .iter()
            .map(|&n| {
                let d = x % n;
                x /= n;
                d
            })
            .collect::<Vec<_>>()
    };
    let index = |ds: &[usize]| {
        ds.iter()
            .zip(orders)
            .rev()
            .fold(0, |acc, (&d, &n)| acc * n + d)
    };
    let table: Vec<Vec<usize>> = (0..size)
        .map(|x| {
            (0..size)
                .map(|y| {
                    let s: Vec<usize> = digits(x)
                        .iter()
                        .zip(digits(y))
                        .zip(orders)
                        .map(|((a, b), n)| (a + b) % n)
                        .collect();
                    index(&s)
                })
                .collect()
        })
        .collect();
    AlmostGroup::from_group(&table, 0).unwrap()
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if let Some(inv) = a.recip() {
            prop_assert_eq!(&a * &inv, Rational::one());
        }
    }

    #[test]
    fn tensor_is_bilinear(a in lincomb(), b in lincomb(), c in lincomb(), r in rational()) {
        prop_assert_eq!(tensor(&add(&a, &b), &c), add(&tensor(&a, &c), &tensor(&b, &c)));
        prop_assert_eq!(tensor(&c, &add(&a, &b)), add(&tensor(&c, &a), &tensor(&c, &b)));
        prop_assert_eq!(tensor(&scale(&r, &a), &c), scale(&r, &tensor(&a, &c)));
    }

    #[test]
    fn apply_linear_is_linear(a in lincomb(), b in lincomb(), r in rational()) {
        let f = |&k: &usize| Some(LinComb::from_terms([(k % 3, Rational::from_integer(k as i64 + 1)), (7, Rational::new(1, 2))]));
        let fa = apply_linear(f, &a).unwrap();
        let fb = apply_linear(f, &b).unwrap();
        prop_assert_eq!(apply_linear(f, &add(&a, &b)).unwrap(), add(&fa, &fb));
        prop_assert_eq!(apply_linear(f, &scale(&r, &a)).unwrap(), scale(&r, &fa));
    }

    #[test]
    fn groups_are_almost_groups(orders in prop::collection::vec(1usize..5, 1..3)) {
        let g = cyclic_product(&orders);
        prop_assert!(g.verify_axioms().passed);
    }

    #[test]
    fn trivial_pairs_give_groups_and_hopf_algebras(n in 1usize..5, m in 1usize..5) {
        let mp = MatchedPair::trivial(cyclic(n), cyclic(m)).unwrap();
        prop_assert!(mp.verify_matched().passed);
        prop_assert!(mp.doublecross().unwrap().verify_axioms().passed);
        let h = bicrossproduct(&mp).unwrap();
        let hd = dual_bicrossproduct(&mp).unwrap();
        prop_assert!(h.hopf().verify_hopf().passed);
        prop_assert!(hd.hopf().verify_hopf().passed);
        for x in 0..h.dim() {
            prop_assert_eq!(h.star(h.star(x)), x);
            prop_assert_eq!(hd.star(hd.star(x)), x);
        }
    }

    #[test]
    fn act_keeps_pole_positions(seed in any::<u64>(), n in 2usize..4) {
        for x in random_samples(seed, 1, n, 3) {
            let (r, l) = act(&x.s, &x.u).unwrap();
            prop_assert_eq!(r.poles(), x.u.poles());
            prop_assert_eq!(l.poles(), x.s.poles());
            let report = verify_unitarity(&[r, l], 20, TOL_U, seed).unwrap();
            prop_assert!(report.passed, "{}", report);
        }
    }
}

#[test]
fn norms_are_central_and_in_j() {
    for (name, g) in standard_structures() {
        let j = g.j_elements();
        for x in 0..g.len() {
            let xi = g.i_op(x).unwrap();
            let norm = g.mul(x, xi).unwrap();
            assert!(j.contains(&norm), "{name}");
            assert_eq!(norm, g.mul(xi, x).unwrap(), "{name}");
            for &e in &j {
                assert_eq!(g.mul(e, x).unwrap(), g.mul(x, e).unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn pair_construction_of_small_abelian_groups() {
    let groups = (1..=6)
        .map(cyclic)
        .chain([cyclic_product(&[2, 2]), cyclic_product(&[2, 3])]);
    for a in groups {
        assert!(swap_pair(&a).verify_axioms().passed, "|A| = {}", a.len());
    }
}
