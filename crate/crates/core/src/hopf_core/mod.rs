//! Almost Hopf algebras stored as structure-constant tables over a finite basis.
//!
//! The counit lands in, and the unit starts from, the commutative subalgebra
//! `H_J` spanned by `j_basis` rather than the ground field.

mod constructions;
mod export;
mod verify;

use std::collections::HashMap;

use crate::almost_group::AlmostGroupError;
use crate::exact_linear::{apply_linear, BasisLabel, LinComb, UndefinedLabel};

pub use constructions::{function_algebra, group_algebra};
pub use export::{MapEntry, MulEntry, StructureExport, Term};
pub use verify::names as check_names;

/// Element of `H`, keyed by basis index.
pub type Vector = LinComb<usize>;
/// Element of `H⊗H`.
pub type Tensor2 = LinComb<(usize, usize)>;
/// Element of `H⊗H⊗H`, right-nested.
pub type Tensor3 = LinComb<(usize, (usize, usize))>;

pub type HopfReport = crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("{what}: expected {expected} entries, found {found}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("{what} refers to basis index {index}, but the basis has {size} elements")]
    IndexOutOfRange {
        what: String,
        index: usize,
        size: usize,
    },
    #[error("duplicate basis label {0}")]
    DuplicateBasis(String),
    #[error("j_basis index {0} is not a basis index")]
    BadJBasis(usize),
    #[error("source almost group is invalid: {0}")]
    InvalidGroup(#[from] AlmostGroupError),
    #[error("basis index {0} is outside H_J")]
    NotInJ(usize),
}

/// Raw tables for [`AlmostHopfStructure::from_tables`].
#[derive(Debug, Clone, Default)]
pub struct StructureTables {
    pub basis: Vec<BasisLabel>,
    pub names: Vec<String>,
    pub j_basis: Vec<usize>,
    /// Row-major `n×n`: entry `x*n + y` is `x·y`.
    pub mul: Vec<Vector>,
    pub comul: Vec<Tensor2>,
    pub counit: Vec<Vector>,
    /// Aligned with `j_basis`.
    pub unit: Vec<Vector>,
    pub antipode: Vec<Vector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostHopfStructure {
    basis: Vec<BasisLabel>,
    names: Vec<String>,
    index: HashMap<BasisLabel, usize>,
    j_basis: Vec<usize>,
    j_pos: Vec<Option<usize>>,
    mul: Vec<Vector>,
    comul: Vec<Tensor2>,
    counit: Vec<Vector>,
    unit: Vec<Vector>,
    antipode: Vec<Vector>,
}

impl AlmostHopfStructure {
    pub fn from_tables(t: StructureTables) -> Result<Self, HopfError> {
        let n = t.basis.len();
        let dim = |what: &str, expected: usize, found: usize| {
            if expected == found {
                Ok(())
            } else {
                Err(HopfError::DimensionMismatch {
                    what: what.to_string(),
                    expected,
                    found,
                })
            }
        };
        dim("names", n, t.names.len())?;
        dim("mul", n * n, t.mul.len())?;
        dim("comul", n, t.comul.len())?;
        dim("counit", n, t.counit.len())?;
        dim("antipode", n, t.antipode.len())?;
        dim("unit", t.j_basis.len(), t.unit.len())?;

        let mut index = HashMap::with_capacity(n);
        for (k, b) in t.basis.iter().enumerate() {
            if index.insert(b.clone(), k).is_some() {
                return Err(HopfError::DuplicateBasis(b.to_string()));
            }
        }
        let mut j_pos = vec![None; n];
        for (p, &j) in t.j_basis.iter().enumerate() {
            if j >= n || j_pos[j].is_some() {
                return Err(HopfError::BadJBasis(j));
            }
            j_pos[j] = Some(p);
        }
        let range = |what: &str, k: usize| {
            if k < n {
                Ok(())
            } else {
                Err(HopfError::IndexOutOfRange {
                    what: what.to_string(),
                    index: k,
                    size: n,
                })
            }
        };
        for v in t
            .mul
            .iter()
            .chain(&t.counit)
            .chain(&t.unit)
            .chain(&t.antipode)
        {
            for &k in v.keys() {
                range("structure map", k)?;
            }
        }
        for v in &t.comul {
            for &(a, b) in v.keys() {
                range("comul", a)?;
                range("comul", b)?;
            }
        }
        Ok(AlmostHopfStructure {
            basis: t.basis,
            names: t.names,
            index,
            j_basis: t.j_basis,
            j_pos,
            mul: t.mul,
            comul: t.comul,
            counit: t.counit,
            unit: t.unit,
            antipode: t.antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn j_basis(&self) -> &[usize] {
        &self.j_basis
    }

    pub fn in_j(&self, x: usize) -> bool {
        self.j_pos[x].is_some()
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Basis index by display name.
    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn e(&self, x: usize) -> Vector {
        Vector::basis(x)
    }

    // basis-level structure maps

    pub fn mul_basis(&self, x: usize, y: usize) -> &Vector {
        &self.mul[x * self.dim() + y]
    }

    pub fn comul_basis(&self, x: usize) -> &Tensor2 {
        &self.comul[x]
    }

    pub fn counit_basis(&self, x: usize) -> &Vector {
        &self.counit[x]
    }

    pub fn antipode_basis(&self, x: usize) -> &Vector {
        &self.antipode[x]
    }

    /// `η` on a basis element of `H_J`.
    pub fn unit_basis(&self, j: usize) -> Result<&Vector, HopfError> {
        self.j_pos[j]
            .map(|p| &self.unit[p])
            .ok_or(HopfError::NotInJ(j))
    }

    // linear extensions

    pub fn multiply(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                out.add_scaled(&(cx * cy), self.mul_basis(*x, *y));
            }
        }
        out
    }

    pub fn comultiply(&self, a: &Vector) -> Tensor2 {
        a.map_linear(|&x| self.comul[x].clone())
    }

    pub fn counit(&self, a: &Vector) -> Vector {
        a.map_linear(|&x| self.counit[x].clone())
    }

    pub fn antipode(&self, a: &Vector) -> Vector {
        a.map_linear(|&x| self.antipode[x].clone())
    }

    /// `η`, defined only on the span of `j_basis`.
    pub fn unit(&self, a: &Vector) -> Result<Vector, UndefinedLabel> {
        apply_linear(|&x: &usize| self.j_pos[x].map(|p| self.unit[p].clone()), a)
    }

    /// Product in `H⊗H`: `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn multiply2(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((x1, x2), cx) in a.terms() {
            for ((y1, y2), cy) in b.terms() {
                let c = cx * cy;
                let left = self.mul_basis(*x1, *y1);
                let right = self.mul_basis(*x2, *y2);
                for (l, cl) in left.terms() {
                    for (r, cr) in right.terms() {
                        out.add_term((*l, *r), &(&c * cl) * cr);
                    }
                }
            }
        }
        out
    }

    /// `·∘(f⊗g)` applied to a tensor.
    pub fn multiply_tensor(
        &self,
        t: &Tensor2,
        f: impl Fn(usize) -> Vector,
        g: impl Fn(usize) -> Vector,
    ) -> Vector {
        let mut out = Vector::zero();
        for ((a, b), c) in t.terms() {
            out.add_scaled(c, &self.multiply(&f(*a), &g(*b)));
        }
        out
    }

    /// Whether every term of `a` lies in `H_J`.
    pub fn in_j_span(&self, a: &Vector) -> bool {
        a.keys().all(|&k| self.in_j(k))
    }

    // mutation hooks, used to build negative controls

    pub fn set_mul(&mut self, x: usize, y: usize, v: Vector) {
        let n = self.dim();
        self.mul[x * n + y] = v;
    }

    pub fn set_comul(&mut self, x: usize, v: Tensor2) {
        self.comul[x] = v;
    }

    pub fn set_counit(&mut self, x: usize, v: Vector) {
        self.counit[x] = v;
    }

    pub fn set_antipode(&mut self, x: usize, v: Vector) {
        self.antipode[x] = v;
    }

    pub fn set_unit(&mut self, j: usize, v: Vector) -> Result<(), HopfError> {
        let p = self.j_pos[j].ok_or(HopfError::NotInJ(j))?;
        self.unit[p] = v;
        Ok(())
    }

    /// Structural-label view of `x·y`.
    pub fn mul_labels(&self, x: &BasisLabel, y: &BasisLabel) -> Option<LinComb<BasisLabel>> {
        let (x, y) = (self.index_of(x)?, self.index_of(y)?);
        Some(self.mul_basis(x, y).to_labels(&self.basis))
    }

    /// Converts a label-keyed combination to basis indices.
    pub fn to_vector(&self, a: &LinComb<BasisLabel>) -> Result<Vector, UndefinedLabel> {
        apply_linear(|l: &BasisLabel| self.index_of(l).map(Vector::basis), a)
    }
}
