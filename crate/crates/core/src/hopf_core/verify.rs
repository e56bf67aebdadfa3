use super::{AlmostHopfStructure, HopfReport, Tensor2, Tensor3, Vector};
use crate::report::{Check, Report};

/// Check names used in [`HopfReport`]s.
pub mod names {
    pub const ASSOCIATIVITY: &str = "associativity";
    pub const J_COMMUTATIVE: &str = "j-commutative";
    pub const J_CLOSED: &str = "j-closed";
    pub const COASSOCIATIVITY: &str = "coassociativity";
    pub const COUNIT_IN_J: &str = "counit-in-j";
    pub const COUNIT_TWISTED: &str = "counit-twisted";
    pub const UNIT_EXCHANGE: &str = "unit-exchange";
    pub const ANTIPODE_LEFT: &str = "antipode-left";
    pub const ANTIPODE_RIGHT: &str = "antipode-right";
    pub const COMUL_MULTIPLICATIVE: &str = "comul-multiplicative";
    pub const COUNIT_MULTIPLICATIVE: &str = "counit-multiplicative";
    pub const UNIT_MULTIPLICATIVE: &str = "unit-multiplicative";
    pub const ANTIPODE_ANTIMULTIPLICATIVE: &str = "antipode-antimultiplicative";
    pub const ANTIPODE_ANTICOMULTIPLICATIVE: &str = "antipode-anticomultiplicative";
    pub const COUNIT_ANTIPODE: &str = "counit-antipode";
    pub const UNIT_ANTIPODE: &str = "unit-antipode";
}

use names::*;

impl AlmostHopfStructure {
    fn check_eq<K: crate::exact_linear::TensorKey>(
        &self,
        check: &mut Check,
        tuple: &[usize],
        lhs: &crate::exact_linear::LinComb<K>,
        rhs: &crate::exact_linear::LinComb<K>,
    ) {
        check.compare(&self.basis, &self.names, tuple, lhs, rhs);
    }

    /// `η(v)` or a failure recorded against `check` when `v ∉ H_J`.
    fn checked_unit(
        &self,
        check: &mut Check,
        tuple: &[usize],
        lhs: &Vector,
        v: &Vector,
    ) -> Option<Vector> {
        match self.unit(v) {
            Ok(u) => Some(u),
            Err(e) => {
                let names = tuple.iter().map(|&i| self.names[i].clone()).collect();
                check.expect(
                    false,
                    names,
                    tuple,
                    || lhs.render(&self.names),
                    || e.to_string(),
                );
                None
            }
        }
    }

    /// Exhaustive check of every almost-Hopf-algebra axiom on basis tuples.
    pub fn verify_hopf(&self) -> HopfReport {
        let n = self.dim();
        let js = self.j_basis.clone();

        let mut assoc = Check::new(ASSOCIATIVITY);
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul_basis(x, y);
                for z in 0..n {
                    let lhs = self.multiply(xy, &Vector::basis(z));
                    let rhs = self.multiply(&Vector::basis(x), self.mul_basis(y, z));
                    self.check_eq(&mut assoc, &[x, y, z], &lhs, &rhs);
                }
            }
        }

        let mut j_comm = Check::new(J_COMMUTATIVE);
        let mut j_closed = Check::new(J_CLOSED);
        for &a in &js {
            for &b in &js {
                let ab = self.mul_basis(a, b);
                self.check_eq(&mut j_comm, &[a, b], ab, self.mul_basis(b, a));
                let names = vec![self.names[a].clone(), self.names[b].clone()];
                j_closed.expect(
                    self.in_j_span(ab),
                    names,
                    &[a, b],
                    || ab.render(&self.names),
                    || "an element of H_J".to_string(),
                );
            }
        }

        let mut coassoc = Check::new(COASSOCIATIVITY);
        let mut counit_in_j = Check::new(COUNIT_IN_J);
        let mut counit_twisted = Check::new(COUNIT_TWISTED);
        let mut antipode_left = Check::new(ANTIPODE_LEFT);
        let mut antipode_right = Check::new(ANTIPODE_RIGHT);
        for x in 0..n {
            let dx = self.comul_basis(x);
            let mut lhs = Tensor3::zero();
            let mut rhs = Tensor3::zero();
            for ((a, b), c) in dx.terms() {
                for ((a1, a2), c1) in self.comul_basis(*a).terms() {
                    lhs.add_term((*a1, (*a2, *b)), c * c1);
                }
                for ((b1, b2), c2) in self.comul_basis(*b).terms() {
                    rhs.add_term((*a, (*b1, *b2)), c * c2);
                }
            }
            self.check_eq(&mut coassoc, &[x], &lhs, &rhs);

            let ex = self.counit_basis(x);
            let names = vec![self.names[x].clone()];
            counit_in_j.expect(
                self.in_j_span(ex),
                names,
                &[x],
                || ex.render(&self.names),
                || "an element of H_J".to_string(),
            );

            let mut left = Tensor2::zero();
            let mut right = Tensor2::zero();
            for ((a, b), c) in dx.terms() {
                for (ea, ca) in self.counit_basis(*a).terms() {
                    left.add_term((*ea, *b), c * ca);
                }
                // τ(a ⊗ ε(b)) = ε(b) ⊗ a
                for (eb, cb) in self.counit_basis(*b).terms() {
                    right.add_term((*eb, *a), c * cb);
                }
            }
            self.check_eq(&mut counit_twisted, &[x], &left, &right);

            let s_id = self.multiply_tensor(dx, |a| self.antipode_basis(a).clone(), Vector::basis);
            let id_s = self.multiply_tensor(dx, Vector::basis, |b| self.antipode_basis(b).clone());
            if let Some(ee) = self.checked_unit(&mut antipode_left, &[x], &s_id, ex) {
                self.check_eq(&mut antipode_left, &[x], &s_id, &ee);
            }
            if let Some(ee) = self.checked_unit(&mut antipode_right, &[x], &id_s, ex) {
                self.check_eq(&mut antipode_right, &[x], &id_s, &ee);
            }
        }

        let mut unit_exchange = Check::new(UNIT_EXCHANGE);
        for &a in &js {
            let ea = &self.unit[self.j_pos[a].unwrap()];
            for x in 0..n {
                let e_x = Vector::basis(x);
                let lhs = self.multiply(ea, &e_x);
                let rhs = self.multiply(&e_x, ea);
                self.check_eq(&mut unit_exchange, &[a, x], &lhs, &rhs);
            }
        }

        let mut comul_mult = Check::new(COMUL_MULTIPLICATIVE);
        let mut counit_mult = Check::new(COUNIT_MULTIPLICATIVE);
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul_basis(x, y);
                let lhs = self.comultiply(xy);
                let rhs = self.multiply2(self.comul_basis(x), self.comul_basis(y));
                self.check_eq(&mut comul_mult, &[x, y], &lhs, &rhs);

                let lhs = self.counit(xy);
                let rhs = self.multiply(self.counit_basis(x), self.counit_basis(y));
                self.check_eq(&mut counit_mult, &[x, y], &lhs, &rhs);
            }
        }

        let mut unit_mult = Check::new(UNIT_MULTIPLICATIVE);
        for &a in &js {
            for &b in &js {
                let ua = &self.unit[self.j_pos[a].unwrap()];
                let ub = &self.unit[self.j_pos[b].unwrap()];
                let rhs = self.multiply(ua, ub);
                if let Some(lhs) =
                    self.checked_unit(&mut unit_mult, &[a, b], &rhs, self.mul_basis(a, b))
                {
                    self.check_eq(&mut unit_mult, &[a, b], &lhs, &rhs);
                }
            }
        }

        Report::new(
            "almost Hopf algebra axioms",
            vec![
                assoc,
                j_comm,
                j_closed,
                coassoc,
                counit_in_j,
                counit_twisted,
                unit_exchange,
                antipode_left,
                antipode_right,
                comul_mult,
                counit_mult,
                unit_mult,
            ],
        )
    }

    /// `S(xy) = S(y)S(x)` on every basis pair.
    pub fn check_antipode_antimul(&self) -> Check {
        let n = self.dim();
        let mut check = Check::new(ANTIPODE_ANTIMULTIPLICATIVE);
        for x in 0..n {
            for y in 0..n {
                let lhs = self.antipode(self.mul_basis(x, y));
                let rhs = self.multiply(self.antipode_basis(y), self.antipode_basis(x));
                self.check_eq(&mut check, &[x, y], &lhs, &rhs);
            }
        }
        check
    }

    /// `Δ(Sx) = (S⊗S)τΔx` on every basis element.
    pub fn check_antipode_anticomul(&self) -> Check {
        let mut check = Check::new(ANTIPODE_ANTICOMULTIPLICATIVE);
        for x in 0..self.dim() {
            let lhs = self.comultiply(self.antipode_basis(x));
            let mut rhs = Tensor2::zero();
            for ((a, b), c) in self.comul_basis(x).terms() {
                let t =
                    crate::exact_linear::tensor(self.antipode_basis(*b), self.antipode_basis(*a));
                rhs.add_scaled(c, &t);
            }
            self.check_eq(&mut check, &[x], &lhs, &rhs);
        }
        check
    }

    /// `ε(Sx) = S(εx)`, with `S` restricted to `H_J` on the right.
    pub fn check_counit_antipode(&self) -> Check {
        let mut check = Check::new(COUNIT_ANTIPODE);
        for x in 0..self.dim() {
            let lhs = self.counit(self.antipode_basis(x));
            let rhs = self.antipode(self.counit_basis(x));
            self.check_eq(&mut check, &[x], &lhs, &rhs);
        }
        check
    }

    /// `S(η(a)) = η(S(a))` for `a` in `j_basis`.
    pub fn check_unit_antipode(&self) -> Check {
        let mut check = Check::new(UNIT_ANTIPODE);
        for (p, &a) in self.j_basis.iter().enumerate() {
            let lhs = self.antipode(&self.unit[p]);
            if let Some(rhs) = self.checked_unit(&mut check, &[a], &lhs, self.antipode_basis(a)) {
                self.check_eq(&mut check, &[a], &lhs, &rhs);
            }
        }
        check
    }

    /// Antipode reverses products and coproducts and commutes with `η` and `ε`.
    pub fn verify_antipode_props(&self) -> HopfReport {
        Report::new(
            "antipode compatibility",
            vec![
                self.check_antipode_antimul(),
                self.check_antipode_anticomul(),
                self.check_counit_antipode(),
                self.check_unit_antipode(),
            ],
        )
    }

    /// [`verify_hopf`](Self::verify_hopf) followed by the antipode anti-multiplicativity check.
    pub fn verify_hopf_full(&self) -> HopfReport {
        let mut report = self.verify_hopf();
        report.push(self.check_antipode_antimul());
        report
    }
}
