//! The bicrossproduct `H = kM▷◀k(G)` of a matched pair, its dual
//! `H' = k(M)◀▶kG`, the pairing between them, the `*` operation and the
//! self-duality map of a mutually inverse pair.
//!
//! Both algebras index the basis element over `(s,u) ∈ M×G` as `s*|G| + u`,
//! so the pairing is the Kronecker pairing on indices.

mod mutual;
mod star;

use crate::exact_linear::{BasisLabel, Rational};
use crate::hopf_core::{
    AlmostHopfStructure, HopfError, HopfReport, StructureTables, Tensor2, Vector,
};
use crate::matched_pair::{MatchedPair, MatchedPairError};
use crate::report::{Check, Report};

pub use mutual::{check_mutually_inverse, verify_self_duality, verify_t_props, InverseData};
pub use star::star_checks;

/// Check names used in the reports of this module.
pub mod check_names {
    pub const COUNIT_UNIT_DUALITY: &str = "counit-unit-duality";
    pub const UNIT_COUNIT_DUALITY: &str = "unit-counit-duality";
    pub const ANTIPODE_DUALITY: &str = "antipode-duality";
    pub const PRODUCT_DUALITY: &str = "product-coproduct-duality";
    pub const COPRODUCT_DUALITY: &str = "coproduct-product-duality";

    pub const STAR_INVOLUTION: &str = "star-involution";
    pub const STAR_ANTIMULTIPLICATIVE: &str = "star-antimultiplicative";
    pub const STAR_COMULTIPLICATIVE: &str = "star-comultiplicative";
    pub const STAR_UNIT: &str = "star-unit";
    pub const STAR_COUNIT: &str = "star-counit";
    pub const STAR_ANTIPODE: &str = "star-antipode";

    pub const DOUBLECROSS_GROUP: &str = "doublecross-group";
    pub const INVERSE_CARRIERS: &str = "inverse-carriers";
    pub const INVERSE_J_BIJECTION: &str = "inverse-j-bijection";
    pub const INVERSE_COMMUTES_WITH_I: &str = "inverse-commutes-with-i";
    pub const INVERSE_ACTIONS: &str = "inverse-actions";

    pub const T_ANTIMULTIPLICATIVE: &str = "t-antimultiplicative";
    pub const T_ANTICOMULTIPLICATIVE: &str = "t-anticomultiplicative";
    pub const T_ANTIPODE: &str = "t-antipode";
    pub const T_STAR: &str = "t-star";
    pub const T_UNIT: &str = "t-unit";
    pub const T_COUNIT: &str = "t-counit";

    pub const PHI_BIJECTIVE: &str = "phi-bijective";
    pub const PHI_MULTIPLICATIVE: &str = "phi-multiplicative";
    pub const PHI_COMULTIPLICATIVE: &str = "phi-comultiplicative";
    pub const PHI_UNIT: &str = "phi-unit";
    pub const PHI_COUNIT: &str = "phi-counit";
    pub const PHI_ANTIPODE: &str = "phi-antipode";
}

use check_names::*;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BicrossError {
    #[error(transparent)]
    Pair(#[from] MatchedPairError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("the two algebras come from different matched pairs")]
    MismatchedSources,
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("no mutual-inverse data: {0}")]
    NoInverseData(String),
}

fn index(mp: &MatchedPair, s: usize, u: usize) -> usize {
    s * mp.g().len() + u
}

fn split(mp: &MatchedPair, x: usize) -> (usize, usize) {
    (x / mp.g().len(), x % mp.g().len())
}

/// `H = kM▷◀k(G)` on the basis `s⊗δ_u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicrossAlgebra {
    hopf: AlmostHopfStructure,
    pair: MatchedPair,
    star: Vec<usize>,
}

/// `H' = k(M)◀▶kG` on the basis `δ_s⊗u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualBicrossAlgebra {
    hopf: AlmostHopfStructure,
    pair: MatchedPair,
    star: Vec<usize>,
}

macro_rules! common_accessors {
    ($t:ty) => {
        impl $t {
            pub fn hopf(&self) -> &AlmostHopfStructure {
                &self.hopf
            }

            /// Mutable access for negative controls.
            pub fn hopf_mut(&mut self) -> &mut AlmostHopfStructure {
                &mut self.hopf
            }

            pub fn pair(&self) -> &MatchedPair {
                &self.pair
            }

            pub fn dim(&self) -> usize {
                self.hopf.dim()
            }

            /// Basis index of `(s,u) ∈ M×G`.
            pub fn index(&self, s: usize, u: usize) -> usize {
                index(&self.pair, s, u)
            }

            pub fn split(&self, x: usize) -> (usize, usize) {
                split(&self.pair, x)
            }

            /// `*` on a basis element.
            pub fn star(&self, x: usize) -> usize {
                self.star[x]
            }

            /// Conjugate-linear extension of `*`; over ℚ this is linear.
            pub fn star_vec(&self, v: &Vector) -> Vector {
                v.map_keys(|&k| self.star[k])
            }

            pub fn star_table(&self) -> &[usize] {
                &self.star
            }

            /// Overwrites one value of `*`; used for negative controls.
            pub fn set_star(&mut self, x: usize, y: usize) {
                self.star[x] = y;
            }

            pub fn verify_star(&self) -> HopfReport {
                Report::new("star operation", star_checks(&self.hopf, &self.star))
            }
        }
    };
}

common_accessors!(BicrossAlgebra);
common_accessors!(DualBicrossAlgebra);

/// `(s⊗δ_u)(t⊗δ_v) = δ_{u,t▷v} st⊗δ_v`, `Δ(s⊗δ_u) = Σ_{xy=u} s⊗δ_x⊗(s◁x)⊗δ_y`,
/// `S(s⊗δ_u) = (s◁u)^i⊗δ_{(s▷u)^i}`, `ε(s⊗δ_u) = ss^i⊗δ_u` for `u ∈ J_G`,
/// `η(j⊗δ_n) = Σ_{zz^i=n} j⊗δ_z`.
pub fn bicrossproduct(mp: &MatchedPair) -> Result<BicrossAlgebra, BicrossError> {
    mp.require_matched()?;
    let (g, m) = (mp.g(), mp.m());
    let (ng, nm) = (g.len(), m.len());
    let n = ng * nm;
    let idx = |s, u| index(mp, s, u);
    let g_i = g.i_map();
    let m_i = m.i_map();
    let gm = |x, y| g.mul(x, y).expect("in range");
    let mm = |x, y| m.mul(x, y).expect("in range");

    let mut mul = vec![Vector::zero(); n * n];
    for s in 0..nm {
        for u in 0..ng {
            for t in 0..nm {
                for v in 0..ng {
                    if u == mp.right(t, v) {
                        mul[idx(s, u) * n + idx(t, v)] = Vector::basis(idx(mm(s, t), v));
                    }
                }
            }
        }
    }
    let mut comul = vec![Tensor2::zero(); n];
    let mut counit = vec![Vector::zero(); n];
    let mut antipode = Vec::with_capacity(n);
    for s in 0..nm {
        for u in 0..ng {
            let x = idx(s, u);
            for a in 0..ng {
                for b in 0..ng {
                    if gm(a, b) == u {
                        comul[x].add_term((idx(s, a), idx(mp.left(s, a), b)), Rational::one());
                    }
                }
            }
            if g.is_j(u) {
                counit[x] = Vector::basis(idx(mm(s, m_i[s]), u));
            }
            antipode.push(Vector::basis(idx(m_i[mp.left(s, u)], g_i[mp.right(s, u)])));
        }
    }
    let mut j_basis = Vec::new();
    let mut unit = Vec::new();
    for j in m.j_elements() {
        for nj in g.j_elements() {
            j_basis.push(idx(j, nj));
            unit.push(Vector::from_terms(
                (0..ng)
                    .filter(|&z| gm(z, g_i[z]) == nj)
                    .map(|z| (idx(j, z), Rational::one())),
            ));
        }
    }
    let mut basis = Vec::with_capacity(n);
    let mut names = Vec::with_capacity(n);
    let mut star = Vec::with_capacity(n);
    for s in 0..nm {
        for u in 0..ng {
            basis.push(BasisLabel::pair(
                BasisLabel::GroupElem(s),
                BasisLabel::DeltaElem(u),
            ));
            names.push(format!("{}⊗δ_{}", m.label(s), g.label(u)));
            star.push(idx(m_i[s], mp.right(s, u)));
        }
    }
    let hopf = AlmostHopfStructure::from_tables(StructureTables {
        basis,
        names,
        j_basis,
        mul,
        comul,
        counit,
        unit,
        antipode,
    })?;
    Ok(BicrossAlgebra {
        hopf,
        pair: mp.clone(),
        star,
    })
}

/// `(δ_s⊗u)(δ_t⊗v) = δ_{s◁u,t} δ_s⊗uv`, `Δ(δ_s⊗u) = Σ_{ab=s} δ_a⊗(b▷u)⊗δ_b⊗u`,
/// `S(δ_s⊗u) = δ_{(s◁u)^i}⊗(s▷u)^i`, `ε(δ_s⊗u) = δ_s⊗uu^i` for `s ∈ J_M`,
/// `η(δ_j⊗n) = Σ_{aa^i=j} δ_a⊗n`.
pub fn dual_bicrossproduct(mp: &MatchedPair) -> Result<DualBicrossAlgebra, BicrossError> {
    mp.require_matched()?;
    let (g, m) = (mp.g(), mp.m());
    let (ng, nm) = (g.len(), m.len());
    let n = ng * nm;
    let idx = |s, u| index(mp, s, u);
    let g_i = g.i_map();
    let m_i = m.i_map();
    let gm = |x, y| g.mul(x, y).expect("in range");
    let mm = |x, y| m.mul(x, y).expect("in range");

    let mut mul = vec![Vector::zero(); n * n];
    for s in 0..nm {
        for u in 0..ng {
            let t = mp.left(s, u);
            for v in 0..ng {
                mul[idx(s, u) * n + idx(t, v)] = Vector::basis(idx(s, gm(u, v)));
            }
        }
    }
    let mut comul = vec![Tensor2::zero(); n];
    let mut counit = vec![Vector::zero(); n];
    let mut antipode = Vec::with_capacity(n);
    for s in 0..nm {
        for u in 0..ng {
            let x = idx(s, u);
            for a in 0..nm {
                for b in 0..nm {
                    if mm(a, b) == s {
                        comul[x].add_term((idx(a, mp.right(b, u)), idx(b, u)), Rational::one());
                    }
                }
            }
            if m.is_j(s) {
                counit[x] = Vector::basis(idx(s, gm(u, g_i[u])));
            }
            antipode.push(Vector::basis(idx(m_i[mp.left(s, u)], g_i[mp.right(s, u)])));
        }
    }
    let mut j_basis = Vec::new();
    let mut unit = Vec::new();
    for j in m.j_elements() {
        for nj in g.j_elements() {
            j_basis.push(idx(j, nj));
            unit.push(Vector::from_terms(
                (0..nm)
                    .filter(|&a| mm(a, m_i[a]) == j)
                    .map(|a| (idx(a, nj), Rational::one())),
            ));
        }
    }
    let mut basis = Vec::with_capacity(n);
    let mut names = Vec::with_capacity(n);
    let mut star = Vec::with_capacity(n);
    for s in 0..nm {
        for u in 0..ng {
            basis.push(BasisLabel::pair(
                BasisLabel::DeltaElem(s),
                BasisLabel::GroupElem(u),
            ));
            names.push(format!("δ_{}⊗{}", m.label(s), g.label(u)));
            star.push(idx(mp.left(s, u), g_i[u]));
        }
    }
    let hopf = AlmostHopfStructure::from_tables(StructureTables {
        basis,
        names,
        j_basis,
        mul,
        comul,
        counit,
        unit,
        antipode,
    })?;
    Ok(DualBicrossAlgebra {
        hopf,
        pair: mp.clone(),
        star,
    })
}

impl BicrossAlgebra {
    pub fn to_json(&self) -> String {
        self.hopf.to_json(Some("bicross"))
    }
}

impl DualBicrossAlgebra {
    pub fn to_json(&self) -> String {
        self.hopf.to_json(Some("dualBicross"))
    }
}

/// `⟨δ_s⊗u, t⊗δ_v⟩ = δ_{s,t}δ_{u,v}`, extended bilinearly.
pub fn pairing(
    dual: &DualBicrossAlgebra,
    h: &BicrossAlgebra,
    x: &Vector,
    y: &Vector,
) -> Result<Rational, BicrossError> {
    if dual.pair != h.pair {
        return Err(BicrossError::MismatchedSources);
    }
    let dim = h.dim();
    for &k in x.keys().chain(y.keys()) {
        if k >= dim {
            return Err(BicrossError::IndexOutOfRange { index: k, dim });
        }
    }
    let mut out = Rational::zero();
    for (k, c) in x.terms() {
        let d = y.coeff(k);
        if !d.is_zero() {
            out += &(c * &d);
        }
    }
    Ok(out)
}

/// `⟨x⊗x', y⊗y'⟩ = ⟨x,y⟩⟨x',y'⟩` on tensors of basis indices.
fn pair_tensors(x: &Tensor2, y: &Tensor2) -> Rational {
    let mut out = Rational::zero();
    for (k, c) in x.terms() {
        let d = y.coeff(k);
        if !d.is_zero() {
            out += &(c * &d);
        }
    }
    out
}

/// Exhaustive check that `H'` and `H` are dual under [`pairing`].
pub fn verify_duality(
    dual: &DualBicrossAlgebra,
    h: &BicrossAlgebra,
) -> Result<HopfReport, BicrossError> {
    if dual.pair != h.pair {
        return Err(BicrossError::MismatchedSources);
    }
    let (hd, hh) = (&dual.hopf, &h.hopf);
    let n = hh.dim();
    let names = |xs: &[(bool, usize)]| -> Vec<String> {
        xs.iter()
            .map(|&(is_dual, k)| {
                if is_dual {
                    hd.names()[k].clone()
                } else {
                    hh.names()[k].clone()
                }
            })
            .collect()
    };
    let pv = |a: &Vector, b: &Vector| -> Rational {
        let mut out = Rational::zero();
        for (k, c) in a.terms() {
            out += &(c * &b.coeff(k));
        }
        out
    };

    let mut counit_unit = Check::new(COUNIT_UNIT_DUALITY);
    for x in 0..n {
        for &y in hh.j_basis() {
            let lhs = pv(hd.counit_basis(x), &Vector::basis(y));
            let rhs = pv(&Vector::basis(x), hh.unit_basis(y)?);
            counit_unit.compare_scalar(names(&[(true, x), (false, y)]), &[x, y], &lhs, &rhs);
        }
    }
    let mut unit_counit = Check::new(UNIT_COUNIT_DUALITY);
    for &x in hd.j_basis() {
        for y in 0..n {
            let lhs = pv(&Vector::basis(x), hh.counit_basis(y));
            let rhs = pv(hd.unit_basis(x)?, &Vector::basis(y));
            unit_counit.compare_scalar(names(&[(true, x), (false, y)]), &[x, y], &lhs, &rhs);
        }
    }
    let mut antipode = Check::new(ANTIPODE_DUALITY);
    for x in 0..n {
        for y in 0..n {
            let lhs = hd.antipode_basis(x).coeff(&y);
            let rhs = hh.antipode_basis(y).coeff(&x);
            antipode.compare_scalar(names(&[(true, x), (false, y)]), &[x, y], &lhs, &rhs);
        }
    }
    let mut product = Check::new(PRODUCT_DUALITY);
    let mut coproduct = Check::new(COPRODUCT_DUALITY);
    for a in 0..n {
        for b in 0..n {
            let ab = hd.mul_basis(a, b);
            let hab = hh.mul_basis(a, b);
            for y in 0..n {
                // ⟨x·x', y⟩ = ⟨x⊗x', Δy⟩
                let lhs = ab.coeff(&y);
                let rhs = hh.comul_basis(y).coeff(&(a, b));
                if lhs == rhs {
                    product.instances += 1;
                } else {
                    product.compare_scalar(
                        names(&[(true, a), (true, b), (false, y)]),
                        &[a, b, y],
                        &lhs,
                        &rhs,
                    );
                }
                // ⟨x, y·y'⟩ = ⟨Δ'x, y⊗y'⟩
                let lhs = hab.coeff(&y);
                let rhs = pair_tensors(hd.comul_basis(y), &Tensor2::basis((a, b)));
                if lhs == rhs {
                    coproduct.instances += 1;
                } else {
                    coproduct.compare_scalar(
                        names(&[(true, y), (false, a), (false, b)]),
                        &[y, a, b],
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(Report::new(
        "duality between H' and H",
        vec![counit_unit, unit_counit, antipode, product, coproduct],
    ))
}

/// Builds `H` and `H'` and runs every exhaustive suite on them: the axioms,
/// antipode compatibility, duality and the `*` identities.
pub fn verify_bicross_suite(mp: &MatchedPair) -> Result<HopfReport, BicrossError> {
    let h = bicrossproduct(mp)?;
    let hd = dual_bicrossproduct(mp)?;
    let mut report = Report::new("bicrossproduct suite", vec![]);
    for (tag, alg) in [("H", &h.hopf), ("H'", &hd.hopf)] {
        for part in [alg.verify_hopf(), alg.verify_antipode_props()] {
            for mut c in part.checks {
                c.name = format!("{tag}:{}", c.name);
                report.push(c);
            }
        }
    }
    report.extend(verify_duality(&hd, &h)?);
    for (tag, star) in [("H", h.verify_star()), ("H'", hd.verify_star())] {
        for mut c in star.checks {
            c.name = format!("{tag}:{}", c.name);
            report.push(c);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
