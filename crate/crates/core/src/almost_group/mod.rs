//! Finite almost groups given by explicit tables.
//!
//! An almost group is a semigroup with an involutive anti-automorphism `i` and
//! a central subset `J` which contains every `g·g^i`. With `J = {e}` it is a
//! group. Elements are dense indices; labels only matter at I/O boundaries.

pub(crate) mod agrp;
pub mod catalog;

use std::collections::HashSet;

use bitvec::vec::BitVec;
use serde::Serialize;

pub use agrp::{format_agrp, parse_agrp, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlmostGroupError {
    #[error("an almost group needs at least one element")]
    Empty,
    #[error("{what}: expected {expected} entries, found {found}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("{what}: index {index} out of range for {size} elements")]
    IndexOutOfRange {
        what: String,
        index: usize,
        size: usize,
    },
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group is not abelian: {x}·{y} ≠ {y}·{x}")]
    NotAbelian { x: String, y: String },
    #[error("almost group axioms fail ({count} violations, first: {first})")]
    AxiomsFailed { count: usize, first: String },
}

/// Axiom identifiers used in [`Violation::axiom`].
pub mod axiom {
    pub const ASSOCIATIVITY: &str = "associativity";
    pub const I_ANTIHOMOMORPHISM: &str = "i-antihomomorphism";
    pub const J_CENTRAL: &str = "j-central";
    pub const NORM_COMMUTES: &str = "norm-commutes";
    pub const NORM_IN_J: &str = "norm-in-j";
    pub const I_INVOLUTION: &str = "i-involution";
    pub const J_CLOSED_MUL: &str = "j-closed-mul";
    pub const J_CLOSED_I: &str = "j-closed-i";
}

/// A failed axiom instance together with the elements that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        AxiomReport {
            passed: violations.is_empty(),
            violations,
        }
    }

    pub fn count(&self, axiom: &str) -> usize {
        self.violations.iter().filter(|v| v.axiom == axiom).count()
    }

    pub fn first(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    pub(crate) fn into_result(self) -> Result<(), AlmostGroupError> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(AlmostGroupError::AxiomsFailed {
                count: self.violations.len(),
                first: format!("{} at ({})", v.axiom, v.labels.join(", ")),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostGroup {
    labels: Vec<String>,
    mul: Vec<usize>,
    inv: Vec<usize>,
    j: BitVec,
}

impl AlmostGroup {
    /// Assembles a structure from raw tables. Only shape and ranges are checked;
    /// the axioms are checked by [`AlmostGroup::verify_axioms`].
    pub fn build(
        elements: Vec<String>,
        mul: Vec<Vec<usize>>,
        inv_i: Vec<usize>,
        j: Vec<usize>,
    ) -> Result<Self, AlmostGroupError> {
        let n = elements.len();
        if n == 0 {
            return Err(AlmostGroupError::Empty);
        }
        let mut seen = HashSet::new();
        for l in &elements {
            if !seen.insert(l.as_str()) {
                return Err(AlmostGroupError::DuplicateLabel(l.clone()));
            }
        }
        if mul.len() != n {
            return Err(AlmostGroupError::DimensionMismatch {
                what: "multiplication table rows".into(),
                expected: n,
                found: mul.len(),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(AlmostGroupError::DimensionMismatch {
                    what: format!("multiplication table row {r}"),
                    expected: n,
                    found: row.len(),
                });
            }
            for &x in row {
                check_index("multiplication table", x, n)?;
                flat.push(x);
            }
        }
        if inv_i.len() != n {
            return Err(AlmostGroupError::DimensionMismatch {
                what: "i map".into(),
                expected: n,
                found: inv_i.len(),
            });
        }
        for &x in &inv_i {
            check_index("i map", x, n)?;
        }
        let mut bits = BitVec::repeat(false, n);
        for &x in &j {
            check_index("J", x, n)?;
            bits.set(x, true);
        }
        Ok(AlmostGroup {
            labels: elements,
            mul: flat,
            inv: inv_i,
            j: bits,
        })
    }

    /// Views a group table as an almost group with `J = {e}` and `i` the group inverse.
    pub fn from_group(table: &[Vec<usize>], identity: usize) -> Result<Self, AlmostGroupError> {
        let n = table.len();
        if n == 0 {
            return Err(AlmostGroupError::Empty);
        }
        let labels = (0..n).map(|k| k.to_string()).collect();
        // reuse build for the shape checks; i is filled in below
        let mut g = Self::build(labels, table.to_vec(), (0..n).collect(), vec![])?;
        check_index("identity", identity, n)?;
        for x in 0..n {
            if g.m(identity, x) != x || g.m(x, identity) != x {
                return Err(AlmostGroupError::NotAGroup(format!(
                    "{identity} is not an identity for {x}"
                )));
            }
        }
        if let Some((x, y, z)) = g.associativity_failure() {
            return Err(AlmostGroupError::NotAGroup(format!(
                "({x}·{y})·{z} ≠ {x}·({y}·{z})"
            )));
        }
        for x in 0..n {
            let inverse = (0..n).find(|&y| g.m(x, y) == identity && g.m(y, x) == identity);
            match inverse {
                Some(y) => g.inv[x] = y,
                None => {
                    return Err(AlmostGroupError::NotAGroup(format!("{x} has no inverse")));
                }
            }
        }
        g.j.set(identity, true);
        Ok(g)
    }

    /// `A×A` with componentwise product, `(a,b)^i = (b,a)` and `J` the diagonal.
    pub fn pair_construction(a: &AlmostGroup) -> Result<Self, AlmostGroupError> {
        let e = a.group_identity().ok_or_else(|| {
            AlmostGroupError::NotAGroup("expected a group with J = {e}".to_string())
        })?;
        let n = a.len();
        for x in 0..n {
            if a.m(x, a.inv(x)) != e {
                return Err(AlmostGroupError::NotAGroup(format!(
                    "i({}) is not the inverse of {}",
                    a.labels[x], a.labels[x]
                )));
            }
            for y in 0..x {
                if a.m(x, y) != a.m(y, x) {
                    return Err(AlmostGroupError::NotAbelian {
                        x: a.labels[x].clone(),
                        y: a.labels[y].clone(),
                    });
                }
            }
        }
        let idx = |x: usize, y: usize| x * n + y;
        let mut labels = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        let mut inv = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                labels.push(format!("({},{})", a.labels[x], a.labels[y]));
                inv.push(idx(y, x));
                let mut row = Vec::with_capacity(n * n);
                for z in 0..n {
                    for w in 0..n {
                        row.push(idx(a.m(x, z), a.m(y, w)));
                    }
                }
                mul.push(row);
            }
        }
        let j = (0..n).map(|x| idx(x, x)).collect();
        Self::build(labels, mul, inv, j)
    }

    /// Componentwise product with `J = J_A × J_B`.
    pub fn direct_product(a: &AlmostGroup, b: &AlmostGroup) -> Result<Self, AlmostGroupError> {
        let (na, nb) = (a.len(), b.len());
        let idx = |x: usize, y: usize| x * nb + y;
        let mut labels = Vec::new();
        let mut mul = Vec::new();
        let mut inv = Vec::new();
        let mut j = Vec::new();
        for x in 0..na {
            for y in 0..nb {
                labels.push(format!("({},{})", a.labels[x], b.labels[y]));
                inv.push(idx(a.inv(x), b.inv(y)));
                if a.is_j(x) && b.is_j(y) {
                    j.push(idx(x, y));
                }
                let mut row = Vec::with_capacity(na * nb);
                for z in 0..na {
                    for w in 0..nb {
                        row.push(idx(a.m(x, z), b.m(y, w)));
                    }
                }
                mul.push(row);
            }
        }
        Self::build(labels, mul, inv, j)
    }

    /// Replaces the element labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlmostGroupError> {
        if labels.len() != self.len() {
            return Err(AlmostGroupError::DimensionMismatch {
                what: "labels".into(),
                expected: self.len(),
                found: labels.len(),
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(AlmostGroupError::DuplicateLabel(l.clone()));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mul(&self, x: usize, y: usize) -> Result<usize, AlmostGroupError> {
        check_index("element", x, self.len())?;
        check_index("element", y, self.len())?;
        Ok(self.m(x, y))
    }

    pub fn i_op(&self, x: usize) -> Result<usize, AlmostGroupError> {
        check_index("element", x, self.len())?;
        Ok(self.inv(x))
    }

    pub fn in_j(&self, x: usize) -> Result<bool, AlmostGroupError> {
        check_index("element", x, self.len())?;
        Ok(self.is_j(x))
    }

    /// Indices of `J` in ascending order.
    pub fn j_elements(&self) -> Vec<usize> {
        self.j.iter_ones().collect()
    }

    /// Row-major copy of the multiplication table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.len()).map(<[usize]>::to_vec).collect()
    }

    pub fn i_map(&self) -> &[usize] {
        &self.inv
    }

    #[inline]
    pub(crate) fn m(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.labels.len() + y]
    }

    #[inline]
    pub(crate) fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    #[inline]
    pub(crate) fn is_j(&self, x: usize) -> bool {
        self.j[x]
    }

    /// Two-sided identity of the table, if any.
    pub fn identity(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&e| (0..n).all(|x| self.m(e, x) == x && self.m(x, e) == x))
    }

    /// The identity when the structure is a group presented with `J = {e}`.
    pub fn group_identity(&self) -> Option<usize> {
        let js = self.j_elements();
        match js.as_slice() {
            [e] if self.identity() == Some(*e) => Some(*e),
            _ => None,
        }
    }

    /// The two-sided inverse of `x` under the table identity, by search.
    pub fn group_inverse(&self, x: usize) -> Option<usize> {
        let e = self.identity()?;
        (0..self.len()).find(|&y| self.m(x, y) == e && self.m(y, x) == e)
    }

    fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let xy = self.m(x, y);
                for z in 0..n {
                    if self.m(xy, z) != self.m(x, self.m(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    fn violation(&self, axiom: &str, witness: Vec<usize>) -> Violation {
        Violation {
            axiom: axiom.to_string(),
            labels: witness.iter().map(|&x| self.labels[x].clone()).collect(),
            witness,
        }
    }

    /// Exhaustively checks every almost-group axiom, collecting all violations.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let xy = self.m(x, y);
                for z in 0..n {
                    if self.m(xy, z) != self.m(x, self.m(y, z)) {
                        out.push(self.violation(axiom::ASSOCIATIVITY, vec![x, y, z]));
                    }
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                if self.inv(self.m(g, h)) != self.m(self.inv(h), self.inv(g)) {
                    out.push(self.violation(axiom::I_ANTIHOMOMORPHISM, vec![g, h]));
                }
            }
        }
        for j in self.j.iter_ones() {
            for g in 0..n {
                if self.m(j, g) != self.m(g, j) {
                    out.push(self.violation(axiom::J_CENTRAL, vec![j, g]));
                }
            }
        }
        for g in 0..n {
            let gi = self.inv(g);
            if self.m(g, gi) != self.m(gi, g) {
                out.push(self.violation(axiom::NORM_COMMUTES, vec![g]));
            }
            if !self.is_j(self.m(g, gi)) {
                out.push(self.violation(axiom::NORM_IN_J, vec![g]));
            }
        }
        for g in 0..n {
            if self.inv(self.inv(g)) != g {
                out.push(self.violation(axiom::I_INVOLUTION, vec![g]));
            }
        }
        for a in self.j.iter_ones() {
            for b in self.j.iter_ones() {
                if !self.is_j(self.m(a, b)) {
                    out.push(self.violation(axiom::J_CLOSED_MUL, vec![a, b]));
                }
            }
            if !self.is_j(self.inv(a)) {
                out.push(self.violation(axiom::J_CLOSED_I, vec![a]));
            }
        }
        AxiomReport::from_violations(out)
    }

    /// `Ok` iff [`AlmostGroup::verify_axioms`] passes.
    pub fn require_verified(&self) -> Result<(), AlmostGroupError> {
        self.verify_axioms().into_result()
    }
}

fn check_index(what: &str, index: usize, size: usize) -> Result<(), AlmostGroupError> {
    if index < size {
        Ok(())
    } else {
        Err(AlmostGroupError::IndexOutOfRange {
            what: what.to_string(),
            index,
            size,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;

    #[test]
    fn singleton_is_valid() {
        let g = AlmostGroup::build(vec!["e".into()], vec![vec![0]], vec![0], vec![0]).unwrap();
        assert!(g.verify_axioms().passed);
    }

    #[test]
    fn non_square_table_is_rejected() {
        let err = AlmostGroup::build(
            vec!["a".into(), "b".into()],
            vec![vec![0, 1], vec![1]],
            vec![0, 1],
            vec![0],
        )
        .unwrap_err();
        assert!(matches!(err, AlmostGroupError::DimensionMismatch { .. }));
    }

    #[test]
    fn build_errors() {
        let dup = AlmostGroup::build(
            vec!["a".into(), "a".into()],
            vec![vec![0, 0], vec![0, 0]],
            vec![0, 1],
            vec![0],
        );
        assert_eq!(
            dup.unwrap_err(),
            AlmostGroupError::DuplicateLabel("a".into())
        );
        let oob = AlmostGroup::build(vec!["a".into()], vec![vec![3]], vec![0], vec![0]);
        assert!(matches!(
            oob.unwrap_err(),
            AlmostGroupError::IndexOutOfRange { index: 3, .. }
        ));
        assert_eq!(
            AlmostGroup::build(vec![], vec![], vec![], vec![]).unwrap_err(),
            AlmostGroupError::Empty
        );
    }

    #[test]
    fn constant_product_example() {
        let g = constant_product();
        assert!(g.verify_axioms().passed);
        let (b, c) = (g.index_of("b").unwrap(), g.index_of("c").unwrap());
        assert_eq!(g.label(g.mul(b, c).unwrap()), "a");
    }

    #[test]
    fn unit_and_absorbing_example() {
        assert!(unit_and_absorbing().verify_axioms().passed);
    }

    #[test]
    fn cyclic_two_as_group() {
        let g = cyclic(2);
        assert!(g.verify_axioms().passed);
        assert_eq!(g.j_elements(), vec![0]);
        assert_eq!(g.i_op(1).unwrap(), 1);
    }

    #[test]
    fn identity_involution_on_z3_breaks_norm_axiom() {
        let z3 = cyclic(3);
        let g =
            AlmostGroup::build(z3.labels().to_vec(), z3.table(), vec![0, 1, 2], vec![0]).unwrap();
        let report = g.verify_axioms();
        assert!(!report.passed);
        let v = report.first(axiom::NORM_IN_J).unwrap();
        assert_eq!(v.witness, vec![1]);
        assert_eq!(report.count(axiom::NORM_IN_J), 2);
        assert_eq!(report.count(axiom::ASSOCIATIVITY), 0);
    }

    #[test]
    fn s3_from_group() {
        let s3 = symmetric(3);
        assert_eq!(s3.len(), 6);
        assert!(s3.verify_axioms().passed);
        for x in 0..6 {
            let e = s3.identity().unwrap();
            assert_eq!(s3.mul(x, s3.i_op(x).unwrap()).unwrap(), e);
        }
    }

    #[test]
    fn from_group_rejects_non_groups() {
        // no identity
        let t = vec![vec![0, 0], vec![0, 0]];
        assert!(matches!(
            AlmostGroup::from_group(&t, 0).unwrap_err(),
            AlmostGroupError::NotAGroup(_)
        ));
        // identity but no inverse for 1
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            AlmostGroup::from_group(&t, 0).unwrap_err(),
            AlmostGroupError::NotAGroup(_)
        ));
    }

    #[test]
    fn pair_construction_on_z2() {
        let p = AlmostGroup::pair_construction(&cyclic(2)).unwrap();
        assert_eq!(p.len(), 4);
        let lbl: Vec<&str> = p.j_elements().iter().map(|&x| p.label(x)).collect();
        assert_eq!(lbl, vec!["(0,0)", "(1,1)"]);
        let x01 = p.index_of("(0,1)").unwrap();
        let x11 = p.index_of("(1,1)").unwrap();
        assert_eq!(p.label(p.i_op(x01).unwrap()), "(1,0)");
        assert_eq!(p.label(p.mul(x01, x11).unwrap()), "(1,0)");
        assert!(p.verify_axioms().passed);
    }

    #[test]
    fn pair_construction_on_z3() {
        let p = AlmostGroup::pair_construction(&cyclic(3)).unwrap();
        assert_eq!(p.len(), 9);
        assert_eq!(p.j_elements().len(), 3);
        assert!(p.verify_axioms().passed);
    }

    #[test]
    fn pair_construction_rejects_s3() {
        assert!(matches!(
            AlmostGroup::pair_construction(&symmetric(3)).unwrap_err(),
            AlmostGroupError::NotAbelian { .. }
        ));
    }

    #[test]
    fn lookups_check_ranges() {
        let g = cyclic(2);
        assert!(g.mul(0, 2).is_err());
        assert!(g.i_op(5).is_err());
        assert!(g.in_j(2).is_err());
        assert!(g.in_j(0).unwrap());
    }
}
