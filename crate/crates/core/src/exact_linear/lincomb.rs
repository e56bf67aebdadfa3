use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::Rational;

/// Structured tag of a basis vector.
///
/// Triple tensors are always right-nested: `a⊗b⊗c` is `Pair(a, Pair(b, c))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    /// An element `x` of an almost group used as a basis vector (group algebra).
    GroupElem(usize),
    /// The indicator `δ_x` (function algebra).
    DeltaElem(usize),
    Pair(Box<BasisLabel>, Box<BasisLabel>),
}

impl BasisLabel {
    pub fn pair(left: BasisLabel, right: BasisLabel) -> Self {
        BasisLabel::Pair(Box::new(left), Box::new(right))
    }

    /// Rewrites `(a⊗b)⊗c` into the canonical `a⊗(b⊗c)`; other shapes are returned unchanged.
    pub fn reassociate(self) -> Self {
        match self {
            BasisLabel::Pair(l, r) => match *l {
                BasisLabel::Pair(a, b) => BasisLabel::Pair(a, Box::new(BasisLabel::Pair(b, r))),
                other => BasisLabel::Pair(Box::new(other), r),
            },
            other => other,
        }
    }

    /// `τ(a⊗b) = b⊗a`.
    pub fn swap(self) -> Self {
        match self {
            BasisLabel::Pair(l, r) => BasisLabel::Pair(r, l),
            other => other,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::GroupElem(i) => write!(f, "g{i}"),
            BasisLabel::DeltaElem(i) => write!(f, "d{i}"),
            BasisLabel::Pair(l, r) => write!(f, "({l}⊗{r})"),
        }
    }
}

impl fmt::Debug for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Keys that can be turned back into structural labels given a basis.
///
/// `usize` indexes into the basis; tuples become `Pair`s.
pub trait TensorKey: Ord + Clone + fmt::Debug {
    fn to_label(&self, basis: &[BasisLabel]) -> BasisLabel;
    /// Human-readable rendering, `a ⊗ b ⊗ c` for tensors.
    fn to_name(&self, names: &[String]) -> String;
}

impl TensorKey for usize {
    fn to_label(&self, basis: &[BasisLabel]) -> BasisLabel {
        basis[*self].clone()
    }
    fn to_name(&self, names: &[String]) -> String {
        names[*self].clone()
    }
}

impl<A: TensorKey, B: TensorKey> TensorKey for (A, B) {
    fn to_label(&self, basis: &[BasisLabel]) -> BasisLabel {
        BasisLabel::pair(self.0.to_label(basis), self.1.to_label(basis))
    }
    fn to_name(&self, names: &[String]) -> String {
        format!("{} ⊗ {}", self.0.to_name(names), self.1.to_name(names))
    }
}

/// Finite formal linear combination `Σ c_k·k` with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single basis vector `1·key`.
    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Adds `coeff·key` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `scale·other` in place.
    pub fn add_scaled(&mut self, scale: &Rational, other: &LinComb<K>) {
        for (k, c) in other.terms() {
            self.add_term(k.clone(), scale * c);
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), r * c)).collect(),
        }
    }

    /// Relabels every term; colliding images are summed.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Linear extension of a total basis map.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in self.terms() {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Keeps only the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: TensorKey> LinComb<K> {
    /// Converts index keys into structural basis labels.
    pub fn to_labels(&self, basis: &[BasisLabel]) -> LinComb<BasisLabel> {
        self.map_keys(|k| k.to_label(basis))
    }

    /// Renders the combination with element names instead of indices.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(k, c)| {
                let name = k.to_name(names);
                if c.is_one() {
                    format!("[{name}]")
                } else {
                    format!("{c}·[{name}]")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl<A: Ord + Clone, B: Ord + Clone> LinComb<(A, B)> {
    /// `τ`, the tensor flip.
    pub fn swap(&self) -> LinComb<(B, A)> {
        self.map_keys(|(a, b)| (b.clone(), a.clone()))
    }
}

impl<A: Ord + Clone, B: Ord + Clone, C: Ord + Clone> LinComb<((A, B), C)> {
    /// `(a⊗b)⊗c ↦ a⊗(b⊗c)`.
    pub fn reassociate(&self) -> LinComb<(A, (B, C))> {
        self.map_keys(|((a, b), c)| (a.clone(), (b.clone(), c.clone())))
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "({c})·{k}")?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[derive(Serialize)]
struct TermRef<'a> {
    label: String,
    c: &'a Rational,
}

impl<K: Ord + fmt::Display> Serialize for LinComb<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            seq.serialize_element(&TermRef {
                label: k.to_string(),
                c,
            })?;
        }
        seq.end()
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        add(self, rhs)
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(&Rational::from_integer(-1), rhs);
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&Rational::from_integer(-1))
    }
}

pub fn add<K: Ord + Clone>(a: &LinComb<K>, b: &LinComb<K>) -> LinComb<K> {
    let mut out = a.clone();
    out.add_scaled(&Rational::one(), b);
    out
}

pub fn scale<K: Ord + Clone>(r: &Rational, a: &LinComb<K>) -> LinComb<K> {
    a.scale(r)
}

/// Bilinear tensor product over index-style keys.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(a: &LinComb<A>, b: &LinComb<B>) -> LinComb<(A, B)> {
    let mut out = LinComb::zero();
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            out.add_term((ka.clone(), kb.clone()), ca * cb);
        }
    }
    out
}

/// Tensor product over structural labels, producing `Pair(l, r)` terms.
pub fn tensor_labels(a: &LinComb<BasisLabel>, b: &LinComb<BasisLabel>) -> LinComb<BasisLabel> {
    tensor(a, b).map_keys(|(l, r)| BasisLabel::pair(l.clone(), r.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("linear map is undefined on basis label {label}")]
pub struct UndefinedLabel {
    pub label: String,
}

/// Linear extension `Σ c·f(label)` of a partially defined basis map.
pub fn apply_linear<K, L, F>(f: F, a: &LinComb<K>) -> Result<LinComb<L>, UndefinedLabel>
where
    K: Ord + Clone + fmt::Debug,
    L: Ord + Clone,
    F: Fn(&K) -> Option<LinComb<L>>,
{
    let mut out = LinComb::zero();
    for (k, c) in a.terms() {
        let image = f(k).ok_or_else(|| UndefinedLabel {
            label: format!("{k:?}"),
        })?;
        out.add_scaled(c, &image);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(i: usize) -> LinComb<BasisLabel> {
        LinComb::basis(BasisLabel::DeltaElem(i))
    }

    fn q(p: i64, r: i64) -> Rational {
        Rational::new(p, r)
    }

    #[test]
    fn add_and_scale_examples() {
        let a = d(0).scale(&q(2, 1));
        let b = d(0).scale(&q(3, 1));
        assert_eq!(add(&a, &b), d(0).scale(&q(5, 1)));
        assert!(add(&d(0), &d(0).scale(&q(-1, 1))).is_zero());
        let x = LinComb::basis(BasisLabel::GroupElem(4)).scale(&q(3, 1));
        assert_eq!(
            scale(&q(1, 2), &x),
            LinComb::term(BasisLabel::GroupElem(4), q(3, 2))
        );
    }

    #[test]
    fn tensor_examples() {
        let ab = tensor_labels(&d(0), &d(1));
        assert_eq!(
            ab,
            LinComb::basis(BasisLabel::pair(
                BasisLabel::DeltaElem(0),
                BasisLabel::DeltaElem(1)
            ))
        );
        let sum = tensor_labels(&add(&d(0), &d(1)), &d(2));
        assert_eq!(sum.len(), 2);
        assert_eq!(
            sum.coeff(&BasisLabel::pair(
                BasisLabel::DeltaElem(1),
                BasisLabel::DeltaElem(2)
            )),
            Rational::one()
        );
        assert!(tensor_labels(&LinComb::zero(), &d(3)).is_zero());
    }

    #[test]
    fn apply_linear_examples() {
        let a = d(0).scale(&q(2, 1));
        let id = apply_linear(|k: &BasisLabel| Some(LinComb::basis(k.clone())), &a).unwrap();
        assert_eq!(id, a);

        // x ↦ x^i on a three-element set where i swaps 0 and 2
        let inv = [2usize, 1, 0];
        let s = apply_linear(
            |k: &BasisLabel| match k {
                BasisLabel::DeltaElem(i) => Some(d(inv[*i])),
                _ => None,
            },
            &a,
        )
        .unwrap();
        assert_eq!(s, d(2).scale(&q(2, 1)));

        let err = apply_linear(|_: &BasisLabel| None::<LinComb<BasisLabel>>, &a).unwrap_err();
        assert!(err.label.contains("d0"));
    }

    #[test]
    fn reassociation_is_canonical() {
        let l = BasisLabel::pair(
            BasisLabel::pair(BasisLabel::DeltaElem(0), BasisLabel::DeltaElem(1)),
            BasisLabel::DeltaElem(2),
        );
        let r = BasisLabel::pair(
            BasisLabel::DeltaElem(0),
            BasisLabel::pair(BasisLabel::DeltaElem(1), BasisLabel::DeltaElem(2)),
        );
        assert_eq!(l.reassociate(), r);
        assert_eq!(r.clone().reassociate(), r);

        let idx: LinComb<((usize, usize), usize)> = LinComb::basis(((0, 1), 2));
        assert_eq!(idx.reassociate(), LinComb::basis((0, (1, 2))));
    }

    #[test]
    fn serializes_sorted_terms() {
        let a = add(&d(2), &d(0).scale(&q(-1, 3)));
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(
            json,
            r#"[{"label":"d0","c":"-1/3"},{"label":"d2","c":"1/1"}]"#
        );
    }
}
