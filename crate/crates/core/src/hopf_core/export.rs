use serde::Serialize;

use super::AlmostHopfStructure;
use crate::exact_linear::Rational;

/// One term `c·e_k` of a structure constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term<K> {
    pub k: K,
    pub c: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MulEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapEntry<K> {
    pub i: usize,
    pub terms: Vec<Term<K>>,
}

/// Sparse JSON view of the structure tables; zero entries are omitted and
/// everything is ordered by ascending index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureExport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    pub basis: Vec<String>,
    pub j_basis: Vec<usize>,
    pub mul: Vec<MulEntry>,
    pub comul: Vec<MapEntry<[usize; 2]>>,
    pub counit: Vec<MapEntry<usize>>,
    pub unit: Vec<MapEntry<usize>>,
    pub antipode: Vec<MapEntry<usize>>,
}

fn terms<K: Ord + Clone, T>(
    v: &crate::exact_linear::LinComb<K>,
    f: impl Fn(&K) -> T,
) -> Vec<Term<T>> {
    v.terms()
        .map(|(k, c)| Term {
            k: f(k),
            c: c.clone(),
        })
        .collect()
}

impl AlmostHopfStructure {
    pub fn export(&self, construction: Option<&str>) -> StructureExport {
        let n = self.dim();
        let mut mul = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.mul_basis(i, j);
                if !v.is_zero() {
                    mul.push(MulEntry {
                        i,
                        j,
                        terms: terms(v, |&k| k),
                    });
                }
            }
        }
        let map = |vs: &mut dyn Iterator<Item = (usize, &super::Vector)>| {
            vs.filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| MapEntry {
                    i,
                    terms: terms(v, |&k| k),
                })
                .collect::<Vec<_>>()
        };
        let comul = (0..n)
            .filter(|&i| !self.comul_basis(i).is_zero())
            .map(|i| MapEntry {
                i,
                terms: terms(self.comul_basis(i), |&(a, b)| [a, b]),
            })
            .collect();
        StructureExport {
            construction: construction.map(str::to_string),
            basis: self.names.clone(),
            j_basis: self.j_basis.clone(),
            mul,
            comul,
            counit: map(&mut (0..n).map(|i| (i, self.counit_basis(i)))),
            unit: map(&mut self.j_basis.iter().zip(&self.unit).map(|(&j, v)| (j, v))),
            antipode: map(&mut (0..n).map(|i| (i, self.antipode_basis(i)))),
        }
    }

    pub fn to_json(&self, construction: Option<&str>) -> String {
        serde_json::to_string_pretty(&self.export(construction)).expect("export serializes")
    }
}

#[cfg(test)]
mod tests {
    use crate::almost_group::catalog::cyclic;
    use crate::hopf_core::function_algebra;

    #[test]
    fn sparse_export_of_function_algebra() {
        let h = function_algebra(&cyclic(2)).unwrap();
        let e = h.export(Some("fn"));
        assert_eq!(e.mul.len(), 2);
        assert_eq!(e.counit.len(), 1);
        assert_eq!(e.comul[1].terms.len(), 2);
        let v: serde_json::Value = serde_json::from_str(&h.to_json(Some("fn"))).unwrap();
        assert_eq!(v["construction"], "fn");
        assert_eq!(v["basis"][1], "δ_1");
        assert_eq!(v["jBasis"][0], 0);
        assert_eq!(v["comul"][1]["terms"][0]["k"][0], 0);
        assert_eq!(v["unit"][0]["terms"][1]["c"], "1/1");
    }

    #[test]
    fn export_is_deterministic() {
        let h = function_algebra(&cyclic(4)).unwrap();
        assert_eq!(h.to_json(None), h.to_json(None));
        assert!(!h.to_json(None).contains("construction"));
    }
}
