//! Mutually inverse matched pairs and the self-duality map `T∘S : H → H'`.
//!
//! The inverse of `u ∈ G` is an element `u⁻¹ ∈ M` and vice versa, so the
//! inverse data is a pair of maps `G → M`, `M → G` together with the group
//! inverse of `G⋈M`.

use super::check_names::*;
use super::{BicrossAlgebra, BicrossError, DualBicrossAlgebra};
use crate::exact_linear::rank;
use crate::hopf_core::{HopfError, HopfReport, Tensor2, Vector};
use crate::matched_pair::MatchedPair;
use crate::report::{Check, Report};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseData {
    inv_g: Vec<usize>,
    inv_m: Vec<usize>,
    dx_inverse: Vec<usize>,
}

impl InverseData {
    /// `inv_g[u] = u⁻¹ ∈ M`, `inv_m[s] = s⁻¹ ∈ G`, and `dx_inverse` indexed
    /// like [`MatchedPair::dx_index`].
    pub fn new(
        mp: &MatchedPair,
        inv_g: Vec<usize>,
        inv_m: Vec<usize>,
        dx_inverse: Vec<usize>,
    ) -> Result<Self, BicrossError> {
        let (ng, nm) = (mp.g().len(), mp.m().len());
        let shape = |what: &str, v: &[usize], len: usize, bound: usize| {
            if v.len() != len {
                return Err(BicrossError::NoInverseData(format!(
                    "{what} has {} entries, expected {len}",
                    v.len()
                )));
            }
            match v.iter().find(|&&x| x >= bound) {
                Some(x) => Err(BicrossError::NoInverseData(format!(
                    "{what} value {x} out of range for {bound} elements"
                ))),
                None => Ok(()),
            }
        };
        shape("inverse on G", &inv_g, ng, nm)?;
        shape("inverse on M", &inv_m, nm, ng)?;
        shape("doublecross inverse", &dx_inverse, ng * nm, ng * nm)?;
        Ok(InverseData {
            inv_g,
            inv_m,
            dx_inverse,
        })
    }

    /// Derives the data when `G⋈M` is a group and `G`, `M` are groups whose
    /// inverses can be matched up by element label (as for `G = M`).
    pub fn derive(mp: &MatchedPair) -> Result<Self, BicrossError> {
        let missing = |m: String| BicrossError::NoInverseData(m);
        let dx = mp.doublecross_unchecked();
        let e = dx
            .identity()
            .ok_or_else(|| missing("the doublecross product has no identity".into()))?;
        let n = dx.len();
        let dx_inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| dx.m(x, y) == e && dx.m(y, x) == e)
                    .ok_or_else(|| {
                        missing(format!("{} has no inverse in the doublecross", dx.label(x)))
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let (g, m) = (mp.g(), mp.m());
        let transfer = |from: &crate::almost_group::AlmostGroup,
                        to: &crate::almost_group::AlmostGroup| {
            (0..from.len())
                .map(|x| {
                    let y = from.group_inverse(x).ok_or_else(|| {
                        missing(format!("{} has no group inverse", from.label(x)))
                    })?;
                    to.index_of(from.label(y)).ok_or_else(|| {
                        missing(format!(
                            "no element labelled {} on the other side",
                            from.label(y)
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let inv_g = transfer(g, m)?;
        let inv_m = transfer(m, g)?;
        Self::new(mp, inv_g, inv_m, dx_inverse)
    }

    pub fn inv_g(&self) -> &[usize] {
        &self.inv_g
    }

    pub fn inv_m(&self) -> &[usize] {
        &self.inv_m
    }

    pub fn dx_inverse(&self) -> &[usize] {
        &self.dx_inverse
    }

    /// Overwrites one value of the inverse on `G`; used for negative controls.
    pub fn set_inv_g(&mut self, u: usize, s: usize) {
        assert!(s < self.inv_m.len(), "M index out of range");
        self.inv_g[u] = s;
    }

    /// Overwrites one value of the doublecross inverse; used for negative controls.
    pub fn set_dx_inverse(&mut self, x: usize, y: usize) {
        assert!(y < self.dx_inverse.len(), "doublecross index out of range");
        self.dx_inverse[x] = y;
    }

    /// `T(s⊗δ_u) = δ_{u⁻¹}⊗s⁻¹` on basis indices.
    fn t(&self, mp: &MatchedPair, x: usize) -> usize {
        let ng = mp.g().len();
        let (s, u) = (x / ng, x % ng);
        self.inv_g[u] * ng + self.inv_m[s]
    }
}

impl BicrossAlgebra {
    /// `T(s⊗δ_u) = δ_{u⁻¹}⊗s⁻¹ ∈ H'`.
    pub fn t_map(&self, data: &InverseData, x: usize) -> Vector {
        Vector::basis(data.t(&self.pair, x))
    }

    /// `T_J(j⊗δ_n) = δ_{n⁻¹}⊗j⁻¹`, defined on `H_J` only.
    pub fn t_j_map(&self, data: &InverseData, j: usize) -> Result<Vector, BicrossError> {
        if !self.hopf.in_j(j) {
            return Err(HopfError::NotInJ(j).into());
        }
        Ok(self.t_map(data, j))
    }
}

/// The five conditions for a mutually inverse matched pair. Inverses of
/// elements of `G` live in `M` and vice versa; the maps between them must be
/// mutually inverse bijections that reverse products.
pub fn check_mutually_inverse(mp: &MatchedPair, data: &InverseData) -> HopfReport {
    let (g, m) = (mp.g(), mp.m());
    let (ng, nm) = (g.len(), m.len());
    let dx = mp.doublecross_unchecked();
    let (ig, im) = (&data.inv_g, &data.inv_m);
    let gl = |u: usize| g.label(u).to_string();
    let ml = |s: usize| m.label(s).to_string();
    let dl = |x: usize| dx.label(x).to_string();

    let mut group = Check::new(DOUBLECROSS_GROUP);
    match dx.identity() {
        None => {
            group.expect(
                false,
                vec![],
                &[],
                || "no identity".into(),
                || "a two-sided identity".into(),
            );
        }
        Some(e) => {
            for x in 0..dx.len() {
                let y = data.dx_inverse[x];
                let ok = dx.m(x, y) == e && dx.m(y, x) == e;
                group.expect(
                    ok,
                    vec![dl(x)],
                    &[x],
                    || format!("x·x⁻¹ = {}, x⁻¹·x = {}", dl(dx.m(x, y)), dl(dx.m(y, x))),
                    || dl(e),
                );
            }
        }
    }

    let mut carriers = Check::new(INVERSE_CARRIERS);
    for u in 0..ng {
        carriers.expect(
            im[ig[u]] == u,
            vec![gl(u)],
            &[u],
            || format!("(u⁻¹)⁻¹ = {}", gl(im[ig[u]])),
            || gl(u),
        );
        for v in 0..ng {
            let lhs = ig[g.m(u, v)];
            let rhs = m.m(ig[v], ig[u]);
            carriers.expect(
                lhs == rhs,
                vec![gl(u), gl(v)],
                &[u, v],
                || ml(lhs),
                || ml(rhs),
            );
        }
    }
    for s in 0..nm {
        carriers.expect(
            ig[im[s]] == s,
            vec![ml(s)],
            &[s],
            || format!("(s⁻¹)⁻¹ = {}", ml(ig[im[s]])),
            || ml(s),
        );
        for t in 0..nm {
            let lhs = im[m.m(s, t)];
            let rhs = g.m(im[t], im[s]);
            carriers.expect(
                lhs == rhs,
                vec![ml(s), ml(t)],
                &[s, t],
                || gl(lhs),
                || gl(rhs),
            );
        }
    }

    let mut j_bijection = Check::new(INVERSE_J_BIJECTION);
    let (jg, jm) = (g.j_elements(), m.j_elements());
    let mut hit = vec![false; nm];
    for &u in &jg {
        let s = ig[u];
        let ok = m.is_j(s) && !hit[s];
        hit[s] = true;
        j_bijection.expect(
            ok,
            vec![gl(u)],
            &[u],
            || ml(s),
            || "a fresh element of J_M".into(),
        );
    }
    j_bijection.expect(
        jg.len() == jm.len(),
        vec![],
        &[],
        || format!("|J_G| = {}", jg.len()),
        || format!("|J_M| = {}", jm.len()),
    );

    let mut commutes = Check::new(INVERSE_COMMUTES_WITH_I);
    for x in 0..dx.len() {
        let lhs = dx.inv(data.dx_inverse[x]);
        let rhs = data.dx_inverse[dx.inv(x)];
        commutes.expect(lhs == rhs, vec![dl(x)], &[x], || dl(lhs), || dl(rhs));
    }
    for u in 0..ng {
        let (lhs, rhs) = (m.inv(ig[u]), ig[g.inv(u)]);
        commutes.expect(lhs == rhs, vec![gl(u)], &[u], || ml(lhs), || ml(rhs));
    }
    for s in 0..nm {
        let (lhs, rhs) = (g.inv(im[s]), im[m.inv(s)]);
        commutes.expect(lhs == rhs, vec![ml(s)], &[s], || gl(lhs), || gl(rhs));
    }

    let mut actions = Check::new(INVERSE_ACTIONS);
    for s in 0..nm {
        for u in 0..ng {
            // u⁻¹ ▷ s⁻¹ = (s◁u)⁻¹ and u⁻¹ ◁ s⁻¹ = (s▷u)⁻¹
            let lhs = mp.right(ig[u], im[s]);
            let rhs = im[mp.left(s, u)];
            actions.expect(
                lhs == rhs,
                vec![ml(s), gl(u)],
                &[s, u],
                || gl(lhs),
                || gl(rhs),
            );
            let lhs = mp.left(ig[u], im[s]);
            let rhs = ig[mp.right(s, u)];
            actions.expect(
                lhs == rhs,
                vec![ml(s), gl(u)],
                &[s, u],
                || ml(lhs),
                || ml(rhs),
            );
        }
    }

    Report::new(
        "mutually inverse matched pair",
        vec![group, carriers, j_bijection, commutes, actions],
    )
}

fn same_source(h: &BicrossAlgebra, hd: &DualBicrossAlgebra) -> Result<(), BicrossError> {
    if h.pair == hd.pair {
        Ok(())
    } else {
        Err(BicrossError::MismatchedSources)
    }
}

/// `T` reverses products and coproducts and commutes with `S`, `*`, `η`, `ε`.
pub fn verify_t_props(
    h: &BicrossAlgebra,
    hd: &DualBicrossAlgebra,
    data: &InverseData,
) -> Result<HopfReport, BicrossError> {
    same_source(h, hd)?;
    let (hh, dd) = (&h.hopf, &hd.hopf);
    let mp = &h.pair;
    let n = hh.dim();
    let t = |x: usize| data.t(mp, x);
    let tv = |v: &Vector| v.map_keys(|&k| t(k));
    let hn = |xs: &[usize]| {
        xs.iter()
            .map(|&x| hh.names()[x].clone())
            .collect::<Vec<_>>()
    };
    let cmp = |c: &mut Check, tuple: &[usize], lhs: &Vector, rhs: &Vector| {
        c.compare_with(|| hn(tuple), tuple, dd.basis(), dd.names(), lhs, rhs);
    };

    let mut antimul = Check::new(T_ANTIMULTIPLICATIVE);
    for x in 0..n {
        for y in 0..n {
            let lhs = tv(hh.mul_basis(x, y));
            cmp(&mut antimul, &[x, y], &lhs, dd.mul_basis(t(y), t(x)));
        }
    }

    let mut anticomul = Check::new(T_ANTICOMULTIPLICATIVE);
    let mut antipode = Check::new(T_ANTIPODE);
    let mut star = Check::new(T_STAR);
    let mut counit = Check::new(T_COUNIT);
    for x in 0..n {
        let lhs: Tensor2 = hh.comul_basis(x).map_keys(|&(a, b)| (t(a), t(b)));
        let rhs = dd.comul_basis(t(x)).swap();
        anticomul.compare_with(|| hn(&[x]), &[x], dd.basis(), dd.names(), &lhs, &rhs);

        cmp(
            &mut antipode,
            &[x],
            dd.antipode_basis(t(x)),
            &tv(hh.antipode_basis(x)),
        );
        cmp(
            &mut star,
            &[x],
            &Vector::basis(hd.star(t(x))),
            &Vector::basis(t(h.star(x))),
        );
        cmp(
            &mut counit,
            &[x],
            dd.counit_basis(t(x)),
            &tv(hh.counit_basis(x)),
        );
    }

    let mut unit = Check::new(T_UNIT);
    for &a in hh.j_basis() {
        let lhs = tv(hh.unit_basis(a)?);
        match dd.unit_basis(t(a)) {
            Ok(rhs) => cmp(&mut unit, &[a], &lhs, rhs),
            Err(e) => {
                unit.expect(
                    false,
                    hn(&[a]),
                    &[a],
                    || lhs.render(dd.names()),
                    || e.to_string(),
                );
            }
        }
    }

    Ok(Report::new(
        "the map T",
        vec![antimul, anticomul, antipode, star, unit, counit],
    ))
}

/// Checks that `Φ = T∘S : H → H'` is an isomorphism of almost Hopf algebras,
/// after the mutual-inverse conditions and the properties of `T` itself.
pub fn verify_self_duality(
    h: &BicrossAlgebra,
    hd: &DualBicrossAlgebra,
    data: &InverseData,
) -> Result<HopfReport, BicrossError> {
    same_source(h, hd)?;
    let mut report = check_mutually_inverse(&h.pair, data);
    report.extend(verify_t_props(h, hd, data)?);

    let (hh, dd) = (&h.hopf, &hd.hopf);
    let mp = &h.pair;
    let n = hh.dim();
    let t = |x: usize| data.t(mp, x);
    let phi = |v: &Vector| hh.antipode(v).map_keys(|&k| t(k));
    let phi_b = |x: usize| phi(&Vector::basis(x));
    let hn = |xs: &[usize]| {
        xs.iter()
            .map(|&x| hh.names()[x].clone())
            .collect::<Vec<_>>()
    };
    let cmp = |c: &mut Check, tuple: &[usize], lhs: &Vector, rhs: &Vector| {
        c.compare_with(|| hn(tuple), tuple, dd.basis(), dd.names(), lhs, rhs);
    };

    let mut bijective = Check::new(PHI_BIJECTIVE);
    let images: Vec<Vector> = (0..n).map(phi_b).collect();
    let r = rank(&images);
    bijective.expect(
        r == n,
        vec![],
        &[],
        || format!("rank {r}"),
        || format!("rank {n}"),
    );

    let mut mult = Check::new(PHI_MULTIPLICATIVE);
    for x in 0..n {
        for y in 0..n {
            let lhs = phi(hh.mul_basis(x, y));
            let rhs = dd.multiply(&images[x], &images[y]);
            cmp(&mut mult, &[x, y], &lhs, &rhs);
        }
    }

    let mut comul = Check::new(PHI_COMULTIPLICATIVE);
    let mut counit = Check::new(PHI_COUNIT);
    let mut antipode = Check::new(PHI_ANTIPODE);
    for x in 0..n {
        let lhs = dd.comultiply(&images[x]);
        let mut rhs = Tensor2::zero();
        for ((a, b), c) in hh.comul_basis(x).terms() {
            rhs.add_scaled(c, &crate::exact_linear::tensor(&images[*a], &images[*b]));
        }
        comul.compare_with(|| hn(&[x]), &[x], dd.basis(), dd.names(), &lhs, &rhs);

        // ε'Φ = Φ_J ε, where Φ_J = T_J∘S on H_J
        cmp(
            &mut counit,
            &[x],
            &dd.counit(&images[x]),
            &phi(hh.counit_basis(x)),
        );
        cmp(
            &mut antipode,
            &[x],
            &dd.antipode(&images[x]),
            &phi(hh.antipode_basis(x)),
        );
    }

    let mut unit = Check::new(PHI_UNIT);
    for &a in hh.j_basis() {
        let lhs = phi(hh.unit_basis(a)?);
        let pa = &images[a];
        let rhs = if hh.in_j_span(hh.antipode_basis(a)) {
            dd.unit(pa).ok()
        } else {
            None
        };
        match rhs {
            Some(rhs) => cmp(&mut unit, &[a], &lhs, &rhs),
            None => {
                unit.expect(
                    false,
                    hn(&[a]),
                    &[a],
                    || lhs.render(dd.names()),
                    || format!("η'({}) undefined", pa.render(dd.names())),
                );
            }
        }
    }

    for c in [bijective, mult, comul, unit, counit, antipode] {
        report.push(c);
    }
    report.title = "self-duality by T∘S".into();
    Ok(report)
}
