use super::check_names::*;
use crate::hopf_core::{AlmostHopfStructure, Tensor2, Vector};
use crate::report::Check;

/// Involution, order reversal of products, and compatibility with `Δ`
/// (factorwise, no flip), `η`, `ε` and `S` for a basis-level `*`.
pub fn star_checks(h: &AlmostHopfStructure, star: &[usize]) -> Vec<Check> {
    let n = h.dim();
    let st = |v: &Vector| v.map_keys(|&k| star[k]);
    let names = h.names();
    let cmp = |check: &mut Check, tuple: &[usize], lhs: &Vector, rhs: &Vector| {
        check.compare(h.basis(), names, tuple, lhs, rhs);
    };

    let mut involution = Check::new(STAR_INVOLUTION);
    for x in 0..n {
        cmp(
            &mut involution,
            &[x],
            &Vector::basis(star[star[x]]),
            &Vector::basis(x),
        );
    }

    let mut antimul = Check::new(STAR_ANTIMULTIPLICATIVE);
    for x in 0..n {
        for y in 0..n {
            let lhs = st(h.mul_basis(x, y));
            let rhs = h.mul_basis(star[y], star[x]);
            cmp(&mut antimul, &[x, y], &lhs, rhs);
        }
    }

    let mut comul = Check::new(STAR_COMULTIPLICATIVE);
    for x in 0..n {
        let lhs = h.comul_basis(star[x]);
        let rhs: Tensor2 = h.comul_basis(x).map_keys(|&(a, b)| (star[a], star[b]));
        comul.compare(h.basis(), names, &[x], lhs, &rhs);
    }

    let mut unit = Check::new(STAR_UNIT);
    for &a in h.j_basis() {
        let lhs = st(h.unit_basis(a).expect("a is in j_basis"));
        let sa = star[a];
        match h.unit_basis(sa) {
            Ok(rhs) => {
                cmp(&mut unit, &[a], &lhs, rhs);
            }
            Err(e) => {
                unit.expect(
                    false,
                    vec![names[a].clone()],
                    &[a],
                    || lhs.render(names),
                    || e.to_string(),
                );
            }
        }
    }

    let mut counit = Check::new(STAR_COUNIT);
    let mut antipode = Check::new(STAR_ANTIPODE);
    for x in 0..n {
        let lhs = h.counit_basis(star[x]);
        let rhs = st(h.counit_basis(x));
        cmp(&mut counit, &[x], lhs, &rhs);

        let lhs = st(h.antipode_basis(x));
        let rhs = h.antipode_basis(star[x]);
        cmp(&mut antipode, &[x], &lhs, rhs);
    }

    vec![involution, antimul, comul, unit, counit, antipode]
}
