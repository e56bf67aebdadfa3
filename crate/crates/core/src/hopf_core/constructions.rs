use super::{AlmostHopfStructure, HopfError, StructureTables, Tensor2, Vector};
use crate::almost_group::AlmostGroup;
use crate::exact_linear::{BasisLabel, Rational};

/// The function algebra `k(G)` on the basis `δ_x`.
///
/// `δ_x·δ_y = δ_{x,y}δ_x`, `Δδ_x = Σ_{yz=x} δ_y⊗δ_z`, `Sδ_x = δ_{x^i}`,
/// `εδ_x = δ_x` for `x ∈ J` (else 0) and `ηδ_j = Σ_{zz^i=j} δ_z`.
pub fn function_algebra(g: &AlmostGroup) -> Result<AlmostHopfStructure, HopfError> {
    g.require_verified()?;
    let n = g.len();
    let mut mul = vec![Vector::zero(); n * n];
    for x in 0..n {
        mul[x * n + x] = Vector::basis(x);
    }
    let mut comul = vec![Tensor2::zero(); n];
    for y in 0..n {
        for z in 0..n {
            comul[g.m(y, z)].add_term((y, z), Rational::one());
        }
    }
    let counit = (0..n)
        .map(|x| {
            if g.is_j(x) {
                Vector::basis(x)
            } else {
                Vector::zero()
            }
        })
        .collect();
    let j_basis = g.j_elements();
    let unit = j_basis
        .iter()
        .map(|&j| {
            Vector::from_terms(
                (0..n)
                    .filter(|&z| g.m(z, g.inv(z)) == j)
                    .map(|z| (z, Rational::one())),
            )
        })
        .collect();
    AlmostHopfStructure::from_tables(StructureTables {
        basis: (0..n).map(BasisLabel::DeltaElem).collect(),
        names: g.labels().iter().map(|l| format!("δ_{l}")).collect(),
        j_basis,
        mul,
        comul,
        counit,
        unit,
        antipode: (0..n).map(|x| Vector::basis(g.inv(x))).collect(),
    })
}

/// The almost group algebra `kG`: `Δx = x⊗x`, `Sx = x^i`, `εx = xx^i`, `ηj = j`.
pub fn group_algebra(g: &AlmostGroup) -> Result<AlmostHopfStructure, HopfError> {
    g.require_verified()?;
    let n = g.len();
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            mul.push(Vector::basis(g.m(x, y)));
        }
    }
    let j_basis = g.j_elements();
    AlmostHopfStructure::from_tables(StructureTables {
        basis: (0..n).map(BasisLabel::GroupElem).collect(),
        names: g.labels().to_vec(),
        unit: j_basis.iter().map(|&j| Vector::basis(j)).collect(),
        j_basis,
        mul,
        comul: (0..n).map(|x| Tensor2::basis((x, x))).collect(),
        counit: (0..n).map(|x| Vector::basis(g.m(x, g.inv(x)))).collect(),
        antipode: (0..n).map(|x| Vector::basis(g.inv(x))).collect(),
    })
}
