use super::*;
use crate::almost_group::catalog::{
    constant_product, cyclic, swap_pair, symmetric, unit_and_absorbing,
};
use crate::hopf_core::check_names as hc;
use crate::matched_pair::conjugation_pair;

fn trivial(
    g: crate::almost_group::AlmostGroup,
    m: crate::almost_group::AlmostGroup,
) -> MatchedPair {
    MatchedPair::trivial(g, m).unwrap()
}

fn sum(xs: &[usize]) -> Vector {
    Vector::from_terms(xs.iter().map(|&x| (x, Rational::one())))
}

fn instances() -> Vec<MatchedPair> {
    vec![
        trivial(cyclic(2), cyclic(2)),
        trivial(swap_pair(&cyclic(2)), cyclic(2)),
        trivial(constant_product(), unit_and_absorbing()),
        trivial(cyclic(3), swap_pair(&cyclic(2))),
        conjugation_pair(&symmetric(3)).unwrap(),
    ]
}

#[test]
fn trivial_z2_formulas() {
    let mp = trivial(cyclic(2), cyclic(2));
    let h = bicrossproduct(&mp).unwrap();
    for x in 0..4 {
        assert_eq!(h.hopf().antipode_basis(x), &Vector::basis(x));
    }
    let j = h.index(0, 0);
    assert_eq!(
        h.hopf().unit_basis(j).unwrap(),
        &sum(&[h.index(0, 0), h.index(0, 1)])
    );
    assert_eq!(h.hopf().names()[h.index(1, 0)], "1⊗δ_0");

    let hd = dual_bicrossproduct(&mp).unwrap();
    for s in 0..2 {
        for u in 0..2 {
            for t in 0..2 {
                for v in 0..2 {
                    let got = hd.hopf().mul_basis(hd.index(s, u), hd.index(t, v));
                    let want = if s == t {
                        Vector::basis(hd.index(s, (u + v) % 2))
                    } else {
                        Vector::zero()
                    };
                    assert_eq!(got, &want);
                }
            }
        }
    }
}

#[test]
fn dual_counit() {
    let mp = trivial(swap_pair(&cyclic(2)), cyclic(2));
    let hd = dual_bicrossproduct(&mp).unwrap();
    let g = mp.g();
    let u = g.index_of("(0,1)").unwrap();
    let uui = g.index_of("(1,1)").unwrap();
    assert_eq!(
        hd.hopf().counit_basis(hd.index(0, u)),
        &Vector::basis(hd.index(0, uui))
    );
    assert!(hd.hopf().counit_basis(hd.index(1, u)).is_zero());
}

#[test]
fn constructions_pass_every_suite() {
    for mp in instances() {
        let r = verify_bicross_suite(&mp).unwrap();
        assert!(r.passed, "{r}");
        let hd = dual_bicrossproduct(&mp).unwrap();
        let r = hd.verify_star();
        assert!(r.passed, "{r}");
    }
}

#[test]
fn unmatched_pairs_are_rejected() {
    let mut mp = trivial(cyclic(3), cyclic(3));
    mp.set_left(1, 1, 2);
    assert!(matches!(bicrossproduct(&mp), Err(BicrossError::Pair(_))));
    assert!(matches!(
        dual_bicrossproduct(&mp),
        Err(BicrossError::Pair(_))
    ));
}

#[test]
fn pairing_examples() {
    let mp = trivial(cyclic(3), cyclic(2));
    let h = bicrossproduct(&mp).unwrap();
    let hd = dual_bicrossproduct(&mp).unwrap();
    let x = hd.index(1, 2);
    assert_eq!(
        pairing(&hd, &h, &Vector::basis(x), &Vector::basis(h.index(1, 2))).unwrap(),
        Rational::one()
    );
    assert!(
        pairing(&hd, &h, &Vector::basis(x), &Vector::basis(h.index(0, 2)))
            .unwrap()
            .is_zero()
    );
    let v = &Vector::term(x, Rational::from_integer(2)) + &Vector::basis(hd.index(0, 1));
    assert_eq!(
        pairing(&hd, &h, &v, &Vector::basis(h.index(1, 2))).unwrap(),
        Rational::from_integer(2)
    );

    let other = bicrossproduct(&trivial(
        cyclic(3),
        cyclic(2).with_labels(vec!["a".into(), "b".into()]).unwrap(),
    ))
    .unwrap();
    assert_eq!(
        pairing(&hd, &other, &v, &v),
        Err(BicrossError::MismatchedSources)
    );
    assert!(matches!(
        pairing(&hd, &h, &Vector::basis(99), &v),
        Err(BicrossError::IndexOutOfRange { index: 99, .. })
    ));
}

#[test]
fn perturbed_antipode_breaks_duality() {
    let mp = trivial(cyclic(2), cyclic(2));
    let mut h = bicrossproduct(&mp).unwrap();
    let hd = dual_bicrossproduct(&mp).unwrap();
    h.hopf_mut().set_antipode(1, Vector::basis(2));
    let r = verify_duality(&hd, &h).unwrap();
    let c = r.check(ANTIPODE_DUALITY).unwrap();
    assert!(!c.passed);
    assert!(!c.witnesses.is_empty());
    assert!(r.check(PRODUCT_DUALITY).unwrap().passed);
}

#[test]
fn duality_instance_counts() {
    let mp = trivial(cyclic(2), cyclic(2));
    let r = verify_duality(
        &dual_bicrossproduct(&mp).unwrap(),
        &bicrossproduct(&mp).unwrap(),
    )
    .unwrap();
    assert!(r.passed);
    assert_eq!(r.check(PRODUCT_DUALITY).unwrap().instances, 64);
    assert_eq!(r.check(ANTIPODE_DUALITY).unwrap().instances, 16);
    assert_eq!(r.check(COUNIT_UNIT_DUALITY).unwrap().instances, 4);
}

#[test]
fn star_under_trivial_actions() {
    let mp = trivial(swap_pair(&cyclic(3)), cyclic(2));
    let h = bicrossproduct(&mp).unwrap();
    for s in 0..2 {
        for u in 0..9 {
            assert_eq!(h.star(h.index(s, u)), h.index(mp.m().i_op(s).unwrap(), u));
        }
    }
    assert!(h.verify_star().passed);
}

#[test]
fn star_is_nontrivial_for_conjugation() {
    let mp = conjugation_pair(&symmetric(3)).unwrap();
    let h = bicrossproduct(&mp).unwrap();
    assert!((0..h.dim()).any(|x| h.split(h.star(x)).1 != h.split(x).1));
    for x in 0..h.dim() {
        assert_eq!(h.star(h.star(x)), x);
    }
}

#[test]
fn corrupted_star_fails_comultiplicativity() {
    let mp = trivial(cyclic(2), cyclic(2));
    let mut h = bicrossproduct(&mp).unwrap();
    let (a, b) = (h.index(0, 1), h.index(1, 1));
    h.set_star(a, b);
    let r = h.verify_star();
    let c = r.check(STAR_COMULTIPLICATIVE).unwrap();
    assert!(!c.passed);
    assert!(c
        .witnesses
        .iter()
        .any(|w| w.tuple == vec!["0⊗δ_1".to_string()]));
}

#[test]
fn antipode_props_on_conjugation_pair() {
    let mp = conjugation_pair(&symmetric(3)).unwrap();
    let h = bicrossproduct(&mp).unwrap();
    let r = h.hopf().verify_antipode_props();
    assert!(r.passed);
    assert!(r.check(hc::COUNIT_ANTIPODE).unwrap().instances == 36);
}

#[test]
fn json_export_tags_construction() {
    let mp = trivial(cyclic(2), cyclic(2));
    let v: serde_json::Value =
        serde_json::from_str(&bicrossproduct(&mp).unwrap().to_json()).unwrap();
    assert_eq!(v["construction"], "bicross");
    let v: serde_json::Value =
        serde_json::from_str(&dual_bicrossproduct(&mp).unwrap().to_json()).unwrap();
    assert_eq!(v["construction"], "dualBicross");
    assert_eq!(v["basis"][1], "δ_0⊗1");
}

fn zn_instance(n: usize) -> (BicrossAlgebra, DualBicrossAlgebra, InverseData) {
    let mp = trivial(cyclic(n), cyclic(n));
    let data = InverseData::derive(&mp).unwrap();
    (
        bicrossproduct(&mp).unwrap(),
        dual_bicrossproduct(&mp).unwrap(),
        data,
    )
}

#[test]
fn cyclic_pairs_are_mutually_inverse() {
    for n in 1..=5 {
        let (h, _, data) = zn_instance(n);
        let r = check_mutually_inverse(h.pair(), &data);
        assert!(r.passed, "{r}");
        assert!(r.checks.iter().all(|c| c.instances > 0));
    }
}

#[test]
fn t_on_z3() {
    let (h, hd, data) = zn_instance(3);
    assert_eq!(data.inv_g(), &[0, 2, 1]);
    assert_eq!(h.t_map(&data, h.index(1, 2)), Vector::basis(hd.index(1, 2)));
    assert_eq!(hd.hopf().names()[hd.index(1, 2)], "δ_1⊗2");
    let j = h.index(0, 0);
    assert_eq!(h.t_j_map(&data, j).unwrap(), Vector::basis(hd.index(0, 0)));
    assert!(h.t_j_map(&data, h.index(1, 0)).is_err());
}

#[test]
fn self_duality_on_cyclic_pairs() {
    for n in [2, 3] {
        let (h, hd, data) = zn_instance(n);
        let r = verify_self_duality(&h, &hd, &data).unwrap();
        assert!(r.passed, "{r}");
        assert_eq!(r.check(PHI_MULTIPLICATIVE).unwrap().instances, n.pow(4));
    }
}

#[test]
fn corrupted_inverse_data_is_caught() {
    let (h, hd, data) = zn_instance(3);
    let mut bad = data.clone();
    bad.set_dx_inverse(1, 1);
    let r = verify_self_duality(&h, &hd, &bad).unwrap();
    assert!(!r.passed);
    assert!(!r.check(DOUBLECROSS_GROUP).unwrap().passed);

    let mut bad = data;
    bad.set_inv_g(1, 1);
    let r = verify_self_duality(&h, &hd, &bad).unwrap();
    let c = r.check(PHI_BIJECTIVE).unwrap();
    assert!(!c.passed);
    assert_eq!(c.witnesses[0].lhs_text, "rank 6");
    assert!(!r.check(PHI_MULTIPLICATIVE).unwrap().passed);
}

#[test]
fn cardinality_of_j_blocks_mutual_inverse() {
    let mp = trivial(swap_pair(&cyclic(2)), cyclic(2));
    let dx = mp.doublecross().unwrap();
    let e = dx.identity().unwrap();
    let dx_inverse = (0..dx.len())
        .map(|x| (0..dx.len()).find(|&y| dx.mul(x, y).unwrap() == e).unwrap())
        .collect();
    let data = InverseData::new(&mp, vec![0, 1, 1, 0], vec![0, 3], dx_inverse).unwrap();
    let r = check_mutually_inverse(&mp, &data);
    let c = r.check(INVERSE_J_BIJECTION).unwrap();
    assert!(!c.passed);
    assert!(c.witnesses.iter().any(|w| w.lhs_text == "|J_G| = 2"));
}

#[test]
fn inverse_data_shape_is_validated() {
    let mp = trivial(cyclic(2), cyclic(2));
    assert!(InverseData::new(&mp, vec![0], vec![0, 1], vec![0, 1, 2, 3]).is_err());
    assert!(InverseData::new(&mp, vec![0, 7], vec![0, 1], vec![0, 1, 2, 3]).is_err());
    let no_group = trivial(constant_product(), cyclic(2));
    assert!(matches!(
        InverseData::derive(&no_group),
        Err(BicrossError::NoInverseData(_))
    ));
}

#[test]
fn conjugation_pair_fails_the_action_condition() {
    let mp = conjugation_pair(&symmetric(3)).unwrap();
    let data = InverseData::derive(&mp).unwrap();
    let r = check_mutually_inverse(&mp, &data);
    assert!(r.check(DOUBLECROSS_GROUP).unwrap().passed);
    assert!(!r.check(INVERSE_ACTIONS).unwrap().passed);
}
