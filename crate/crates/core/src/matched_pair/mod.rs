//! Matched pairs of almost groups and the doublecross product `G⋈M`.
//!
//! `M` acts on `G` from the left by `s▷u` and `G` acts on `M` from the right
//! by `s◁u`. Both actions are dense `|M|×|G|` tables indexed by `s*|G| + u`.

mod mpair;

use crate::almost_group::{AlmostGroup, AlmostGroupError, AxiomReport, Violation};

pub use mpair::{format_mpair, load_mpair, parse_mpair, write_mpair_files, MpairError};

/// Rule identifiers used in matched-pair [`Violation`]s.
pub mod rule {
    /// `s◁(uv) = (s◁u)◁v`
    pub const LEFT_MUL: &str = "left-action-mul";
    /// `(st)◁u = (s◁(t▷u))(t◁u)`
    pub const LEFT_PROD: &str = "left-action-prod";
    /// `(st)▷u = s▷(t▷u)`
    pub const RIGHT_PROD: &str = "right-action-prod";
    /// `s▷(uv) = (s▷u)((s◁u)▷v)`
    pub const RIGHT_MUL: &str = "right-action-mul";
    /// `(s◁u)^i ▷ (s▷u)^i = u^i`
    pub const I_RIGHT: &str = "i-right";
    /// `(s◁u)^i ◁ (s▷u)^i = s^i`
    pub const I_LEFT: &str = "i-left";
    /// `j▷u = u` and `j◁u = j` for `j ∈ J_M`
    pub const VACUUM_M: &str = "vacuum-m";
    /// `s▷j = j` and `s◁j = s` for `j ∈ J_G`
    pub const VACUUM_G: &str = "vacuum-g";
    /// `(s◁w)^i(s◁w) = ss^i = s^is`
    pub const NORM_LEFT: &str = "norm-left";
    /// `(s▷w)(s▷w)^i = ww^i = w^iw`
    pub const NORM_RIGHT: &str = "norm-right";
    /// Prefix for axiom failures of `G` itself.
    pub const G_PREFIX: &str = "G:";
    /// Prefix for axiom failures of `M` itself.
    pub const M_PREFIX: &str = "M:";
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatchedPairError {
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
    #[error(transparent)]
    Group(#[from] AlmostGroupError),
    #[error("matched pair rules fail ({count} violations, first: {first})")]
    NotMatched { count: usize, first: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPair {
    g: AlmostGroup,
    m: AlmostGroup,
    right: Vec<usize>,
    left: Vec<usize>,
}

/// Which carrier an index in a witness tuple refers to.
#[derive(Clone, Copy)]
enum Side {
    G,
    M,
}

impl MatchedPair {
    /// `right[s][u] = s▷u ∈ G` and `left[s][u] = s◁u ∈ M`, rows indexed by `s ∈ M`.
    pub fn new(
        g: AlmostGroup,
        m: AlmostGroup,
        right: Vec<Vec<usize>>,
        left: Vec<Vec<usize>>,
    ) -> Result<Self, MatchedPairError> {
        let (ng, nm) = (g.len(), m.len());
        let flatten = |what: &str, rows: Vec<Vec<usize>>, bound: usize| {
            if rows.len() != nm {
                return Err(MatchedPairError::DimensionMismatch {
                    what: format!("{what} rows"),
                    expected: nm,
                    found: rows.len(),
                });
            }
            let mut flat = Vec::with_capacity(nm * ng);
            for row in rows {
                if row.len() != ng {
                    return Err(MatchedPairError::DimensionMismatch {
                        what: format!("{what} row"),
                        expected: ng,
                        found: row.len(),
                    });
                }
                for x in row {
                    if x >= bound {
                        return Err(MatchedPairError::IndexOutOfRange {
                            what: what.to_string(),
                            index: x,
                            size: bound,
                        });
                    }
                    flat.push(x);
                }
            }
            Ok(flat)
        };
        let right = flatten("right action", right, ng)?;
        let left = flatten("left action", left, nm)?;
        Ok(MatchedPair { g, m, right, left })
    }

    /// Trivial actions `s▷u = u`, `s◁u = s`.
    pub fn trivial(g: AlmostGroup, m: AlmostGroup) -> Result<Self, MatchedPairError> {
        g.require_verified()?;
        m.require_verified()?;
        let right = (0..m.len()).map(|_| (0..g.len()).collect()).collect();
        let left = (0..m.len()).map(|s| vec![s; g.len()]).collect();
        Self::new(g, m, right, left)
    }

    pub fn g(&self) -> &AlmostGroup {
        &self.g
    }

    pub fn m(&self) -> &AlmostGroup {
        &self.m
    }

    /// `s▷u`
    pub fn right(&self, s: usize, u: usize) -> usize {
        self.right[s * self.g.len() + u]
    }

    /// `s◁u`
    pub fn left(&self, s: usize, u: usize) -> usize {
        self.left[s * self.g.len() + u]
    }

    /// Overwrites one entry of `◁`; used for negative controls.
    pub fn set_left(&mut self, s: usize, u: usize, value: usize) {
        let ng = self.g.len();
        self.left[s * ng + u] = value;
    }

    /// Overwrites one entry of `▷`; used for negative controls.
    pub fn set_right(&mut self, s: usize, u: usize, value: usize) {
        let ng = self.g.len();
        self.right[s * ng + u] = value;
    }

    fn violation(&self, rule: &str, tuple: &[(Side, usize)]) -> Violation {
        Violation {
            axiom: rule.to_string(),
            witness: tuple.iter().map(|&(_, x)| x).collect(),
            labels: tuple
                .iter()
                .map(|&(side, x)| match side {
                    Side::G => self.g.label(x).to_string(),
                    Side::M => self.m.label(x).to_string(),
                })
                .collect(),
        }
    }

    /// Exhaustive check of every matched-pair rule, including the axioms of
    /// `G` and `M` (prefixed `G:` / `M:`) and the derived norm identities.
    pub fn verify_matched(&self) -> AxiomReport {
        let (g, m) = (&self.g, &self.m);
        let (ng, nm) = (g.len(), m.len());
        let mut out = Vec::new();
        for (prefix, grp) in [(rule::G_PREFIX, g), (rule::M_PREFIX, m)] {
            for mut v in grp.verify_axioms().violations {
                v.axiom = format!("{prefix}{}", v.axiom);
                out.push(v);
            }
        }
        use Side::{G, M};

        for s in 0..nm {
            for u in 0..ng {
                let su = self.left(s, u);
                for v in 0..ng {
                    if self.left(s, g.m(u, v)) != self.left(su, v) {
                        out.push(self.violation(rule::LEFT_MUL, &[(M, s), (G, u), (G, v)]));
                    }
                    let lhs = self.right(s, g.m(u, v));
                    let rhs = g.m(self.right(s, u), self.right(su, v));
                    if lhs != rhs {
                        out.push(self.violation(rule::RIGHT_MUL, &[(M, s), (G, u), (G, v)]));
                    }
                }
            }
        }
        for s in 0..nm {
            for t in 0..nm {
                let st = m.m(s, t);
                for u in 0..ng {
                    let tu = self.right(t, u);
                    if self.left(st, u) != m.m(self.left(s, tu), self.left(t, u)) {
                        out.push(self.violation(rule::LEFT_PROD, &[(M, s), (M, t), (G, u)]));
                    }
                    if self.right(st, u) != self.right(s, tu) {
                        out.push(self.violation(rule::RIGHT_PROD, &[(M, s), (M, t), (G, u)]));
                    }
                }
            }
        }
        for s in 0..nm {
            for u in 0..ng {
                let a = m.inv(self.left(s, u));
                let b = g.inv(self.right(s, u));
                if self.right(a, b) != g.inv(u) {
                    out.push(self.violation(rule::I_RIGHT, &[(M, s), (G, u)]));
                }
                if self.left(a, b) != m.inv(s) {
                    out.push(self.violation(rule::I_LEFT, &[(M, s), (G, u)]));
                }
            }
        }
        for j in m.j_elements() {
            for u in 0..ng {
                if self.right(j, u) != u || self.left(j, u) != j {
                    out.push(self.violation(rule::VACUUM_M, &[(M, j), (G, u)]));
                }
            }
        }
        for j in g.j_elements() {
            for s in 0..nm {
                if self.right(s, j) != j || self.left(s, j) != s {
                    out.push(self.violation(rule::VACUUM_G, &[(M, s), (G, j)]));
                }
            }
        }
        for s in 0..nm {
            let ssi = m.m(s, m.inv(s));
            let sis = m.m(m.inv(s), s);
            for w in 0..ng {
                let x = self.left(s, w);
                let lhs = m.m(m.inv(x), x);
                if lhs != ssi || ssi != sis {
                    out.push(self.violation(rule::NORM_LEFT, &[(M, s), (G, w)]));
                }
                let y = self.right(s, w);
                let lhs = g.m(y, g.inv(y));
                let wwi = g.m(w, g.inv(w));
                if lhs != wwi || wwi != g.m(g.inv(w), w) {
                    out.push(self.violation(rule::NORM_RIGHT, &[(M, s), (G, w)]));
                }
            }
        }
        AxiomReport::from_violations(out)
    }

    pub fn require_matched(&self) -> Result<(), MatchedPairError> {
        let r = self.verify_matched();
        match r.violations.first() {
            None => Ok(()),
            Some(v) => Err(MatchedPairError::NotMatched {
                count: r.violations.len(),
                first: format!("{} at ({})", v.axiom, v.labels.join(", ")),
            }),
        }
    }

    /// Index of `(u,s)` in the doublecross carrier.
    pub fn dx_index(&self, u: usize, s: usize) -> usize {
        u * self.m.len() + s
    }

    /// Inverse of [`MatchedPair::dx_index`].
    pub fn dx_split(&self, x: usize) -> (usize, usize) {
        (x / self.m.len(), x % self.m.len())
    }

    /// `G⋈M`: `(u,s)(v,t) = (u(s▷v), (s◁v)t)`, `(u,s)^i = (s^i▷u^i, s^i◁u^i)`,
    /// `J = J_G×J_M`.
    pub fn doublecross(&self) -> Result<AlmostGroup, MatchedPairError> {
        self.require_matched()?;
        Ok(self.doublecross_unchecked())
    }

    pub(crate) fn doublecross_unchecked(&self) -> AlmostGroup {
        let (g, m) = (&self.g, &self.m);
        let (ng, nm) = (g.len(), m.len());
        let mut labels = Vec::with_capacity(ng * nm);
        let mut mul = Vec::with_capacity(ng * nm);
        let mut inv = Vec::with_capacity(ng * nm);
        let mut j = Vec::new();
        for u in 0..ng {
            for s in 0..nm {
                labels.push(format!("({},{})", g.label(u), m.label(s)));
                let si = m.inv(s);
                let ui = g.inv(u);
                inv.push(self.dx_index(self.right(si, ui), self.left(si, ui)));
                if g.is_j(u) && m.is_j(s) {
                    j.push(self.dx_index(u, s));
                }
                let mut row = Vec::with_capacity(ng * nm);
                for v in 0..ng {
                    for t in 0..nm {
                        row.push(self.dx_index(g.m(u, self.right(s, v)), m.m(self.left(s, v), t)));
                    }
                }
                mul.push(row);
            }
        }
        AlmostGroup::build(labels, mul, inv, j).expect("doublecross tables are well-formed")
    }
}

/// `M = G` a group acting on itself by conjugation `s▷u = sus⁻¹`, with `s◁u = s`.
pub fn conjugation_pair(g: &AlmostGroup) -> Result<MatchedPair, MatchedPairError> {
    g.group_identity()
        .ok_or_else(|| AlmostGroupError::NotAGroup("expected a group with J = {e}".into()))?;
    let n = g.len();
    let right = (0..n)
        .map(|s| (0..n).map(|u| g.m(g.m(s, u), g.inv(s))).collect())
        .collect();
    let left = (0..n).map(|s| vec![s; n]).collect();
    MatchedPair::new(g.clone(), g.clone(), right, left)
}
