//! Pole reversal of two basic factors and the actions it defines.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::{theta, BasicFactor, ComplexMatrix, LoopError, MeromorphicLoop, Projection};

/// Relative distance below which `β` counts as `ᾱ`.
pub const DEGENERATE_REL: f64 = 1e-9;
/// Relative distance below which two poles count as equal in the act preconditions.
pub const COINCIDENT_REL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Generic,
    /// `β = ᾱ`: `P₃ = 1−P₁`, `P₄ = 1−P₂`.
    Degenerate,
}

/// `|β − ᾱ| ≤ 1e−9·max(1,|α|)`.
pub fn is_degenerate(alpha: Complex64, beta: Complex64) -> bool {
    (beta - alpha.conj()).norm() <= DEGENERATE_REL * alpha.norm().max(1.0)
}

/// Rewrites `Φ_{α,P₁}Φ_{β,P₂}` as `Φ_{β,P₃}Φ_{α,P₄}` for poles in opposite
/// half planes. Returns `(g₁, g₂)` with poles `β` and `α` and the branch taken.
pub fn reverse_pair(
    f1: &BasicFactor,
    f2: &BasicFactor,
) -> Result<(BasicFactor, BasicFactor, Branch), LoopError> {
    let (alpha, beta) = (f1.alpha, f2.alpha);
    if alpha.im * beta.im >= 0.0 {
        return Err(LoopError::SameHalfPlane { alpha, beta });
    }
    let n = f1.dim();
    if f2.dim() != n {
        return Err(LoopError::DimensionMismatch {
            expected: n,
            rows: f2.dim(),
            cols: f2.dim(),
        });
    }
    if is_degenerate(alpha, beta) {
        let g1 = BasicFactor {
            alpha: beta,
            p: f1.p.complement(),
        };
        let g2 = BasicFactor {
            alpha,
            p: f2.p.complement(),
        };
        return Ok((g1, g2, Branch::Degenerate));
    }
    let id = ComplexMatrix::identity(n, n);
    let p1 = f1.p.matrix();
    // V₃ = (P₁⊥ + θ_α(β)P₁)V₂
    let a = &id + p1.map(|z| z * (theta(alpha, beta) - 1.0));
    let p3 = Projection::onto(&(a * f2.p.matrix()));
    // V₄ = (P₃⊥ + θ_β(α)⁻¹P₃)V₁
    let b = &id + p3.matrix().map(|z| z * (1.0 / theta(beta, alpha) - 1.0));
    let p4 = Projection::onto(&(b * p1));
    Ok((
        BasicFactor { alpha: beta, p: p3 },
        BasicFactor { alpha, p: p4 },
        Branch::Generic,
    ))
}

type QMatrix = Vec<Vec<num_complex::Complex<BigRational>>>;

fn exact(m: &ComplexMatrix) -> Option<QMatrix> {
    let q = |x: f64| BigRational::from_float(x);
    (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| {
                    Some(num_complex::Complex::new(
                        q(m[(i, j)].re)?,
                        q(m[(i, j)].im)?,
                    ))
                })
                .collect()
        })
        .collect()
}

fn qmul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc =
                        num_complex::Complex::new(BigRational::zero(), BigRational::zero());
                    for k in 0..n {
                        acc += a[i][k].clone() * b[k][j].clone();
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn qadd(a: &QMatrix, b: &QMatrix) -> QMatrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| {
            r.iter()
                .zip(s)
                .map(|(x, y)| x.clone() + y.clone())
                .collect()
        })
        .collect()
}

fn qcomplement(a: &QMatrix) -> QMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let one = if i == j {
                        BigRational::from_integer(1.into())
                    } else {
                        BigRational::zero()
                    };
                    num_complex::Complex::new(one, BigRational::zero()) - a[i][j].clone()
                })
                .collect()
        })
        .collect()
}

/// Laurent coefficients `[z⁻¹, z⁰, z¹]` of `(A⊥ + z^a A)(B⊥ + z^b B)` for
/// `a, b ∈ {−1, 1}`.
fn laurent(pa: &QMatrix, a: i32, pb: &QMatrix, b: i32) -> [QMatrix; 3] {
    let (qa, qb) = (qcomplement(pa), qcomplement(pb));
    let zero = qmul(pa, &qcomplement(pa));
    let mut out = [zero.clone(), zero.clone(), zero];
    let mut put = |power: i32, m: QMatrix| {
        let k = (power + 1) as usize;
        out[k] = qadd(&out[k], &m);
    };
    put(0, qmul(&qa, &qb));
    put(a, qmul(pa, &qb));
    put(b, qmul(&qa, pb));
    put(a + b, qmul(pa, pb));
    out
}

/// Exact check, over the dyadic rationals the entries of `P₁`, `P₂` denote,
/// that `(P₁⊥ + zP₁)(P₂⊥ + z⁻¹P₂) = (P₃⊥ + z⁻¹P₃)(P₄⊥ + zP₄)` coefficientwise
/// with `P₃ = 1−P₁` and `P₄ = 1−P₂`. `None` if an entry is not finite.
pub fn degenerate_laurent_check(p1: &Projection, p2: &Projection) -> Option<bool> {
    let q1 = exact(p1.matrix())?;
    let q2 = exact(p2.matrix())?;
    let q3 = qcomplement(&q1);
    let q4 = qcomplement(&q2);
    Some(laurent(&q1, 1, &q2, -1) == laurent(&q3, -1, &q4, 1))
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= COINCIDENT_REL * a.norm().max(b.norm()).max(1.0)
}

/// The act preconditions: every pole of `s` in one open half plane and every
/// pole of `u` in the other, all poles distinct, and no pole of `s`
/// conjugate to a pole of `u`.
pub fn check_act_preconditions(s: &MeromorphicLoop, u: &MeromorphicLoop) -> Result<(), LoopError> {
    if s.dim() != u.dim() {
        return Err(LoopError::Precondition(format!(
            "loops have sizes {} and {}",
            s.dim(),
            u.dim()
        )));
    }
    let side = |l: &MeromorphicLoop, name: &str| -> Result<Option<bool>, LoopError> {
        let mut sides = l.factors.iter().map(BasicFactor::upper);
        match sides.next() {
            None => Ok(None),
            Some(first) if sides.all(|x| x == first) => Ok(Some(first)),
            Some(_) => Err(LoopError::Precondition(format!(
                "{name} has poles in both half planes"
            ))),
        }
    };
    if let (Some(a), Some(b)) = (side(s, "s")?, side(u, "u")?) {
        if a == b {
            return Err(LoopError::Precondition(
                "s and u have poles in the same half plane".into(),
            ));
        }
    }
    let poles: Vec<Complex64> = s.poles().into_iter().chain(u.poles()).collect();
    for (k, &a) in poles.iter().enumerate() {
        for &b in &poles[..k] {
            if close(a, b) {
                return Err(LoopError::Precondition(format!("repeated pole {a}")));
            }
        }
    }
    for a in s.poles() {
        for b in u.poles() {
            if close(a, b.conj()) {
                return Err(LoopError::Precondition(format!(
                    "poles {a} and {b} are complex conjugate"
                )));
            }
        }
    }
    Ok(())
}

/// Bubbles the factors of `u` leftward through those of `s`, returning
/// `(s▷u, s◁u)` with `su = (s▷u)(s◁u)`.
pub fn act(
    s: &MeromorphicLoop,
    u: &MeromorphicLoop,
) -> Result<(MeromorphicLoop, MeromorphicLoop), LoopError> {
    check_act_preconditions(s, u)?;
    let (k, m) = (s.len(), u.len());
    let mut list: Vec<BasicFactor> = s.factors.iter().chain(&u.factors).cloned().collect();
    for j in 0..m {
        for p in (j + 1..=k + j).rev() {
            let (g1, g2, _) = reverse_pair(&list[p - 1], &list[p])?;
            list[p - 1] = g1;
            list[p] = g2;
        }
    }
    let rest = list.split_off(m);
    Ok((
        MeromorphicLoop {
            n: s.n,
            factors: list,
        },
        MeromorphicLoop {
            n: s.n,
            factors: rest,
        },
    ))
}

/// `s▷u`
pub fn act_right(s: &MeromorphicLoop, u: &MeromorphicLoop) -> Result<MeromorphicLoop, LoopError> {
    Ok(act(s, u)?.0)
}

/// `s◁u`
pub fn act_left(s: &MeromorphicLoop, u: &MeromorphicLoop) -> Result<MeromorphicLoop, LoopError> {
    Ok(act(s, u)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loop_factor::frob;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn factor(alpha: Complex64, v: &[Complex64]) -> BasicFactor {
        BasicFactor::new(alpha, Projection::onto_vector(v)).unwrap()
    }

    fn residual(a: &[&BasicFactor], b: &[&BasicFactor]) -> f64 {
        let prod = |fs: &[&BasicFactor], lam: Complex64| {
            fs.iter().fold(ComplexMatrix::identity(2, 2), |acc, f| {
                acc * f.eval(lam).unwrap()
            })
        };
        [-7.0, -1.5, 0.3, 2.0, 9.0]
            .iter()
            .map(|&x| frob(&(prod(a, c(x, 0.0)) - prod(b, c(x, 0.0)))))
            .fold(0.0, f64::max)
    }

    #[test]
    fn worked_example() {
        let one = c(1.0, 0.0);
        let f1 = factor(c(0.0, 1.0), &[one, c(0.0, 0.0)]);
        let f2 = factor(c(0.0, -2.0), &[one, one]);
        assert!((theta(c(0.0, 1.0), c(0.0, -2.0)) - c(1.0 / 3.0, 0.0)).norm() < 1e-15);
        let (g1, g2, branch) = reverse_pair(&f1, &f2).unwrap();
        assert_eq!(branch, Branch::Generic);
        assert_eq!(g1.alpha(), c(0.0, -2.0));
        assert_eq!(g2.alpha(), c(0.0, 1.0));
        let want = [[0.1, 0.3], [0.3, 0.9]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((g1.projection().matrix()[(i, j)] - c(want[i][j], 0.0)).norm() < 1e-14);
            }
        }
        assert!(residual(&[&f1, &f2], &[&g1, &g2]) < 1e-12);
    }

    #[test]
    fn degenerate_branch() {
        let f1 = factor(c(1.0, 1.0), &[c(1.0, 0.0), c(0.0, 2.0)]);
        let f2 = factor(c(1.0, -1.0), &[c(3.0, 0.0), c(1.0, 1.0)]);
        let (g1, g2, branch) = reverse_pair(&f1, &f2).unwrap();
        assert_eq!(branch, Branch::Degenerate);
        assert_eq!(g1.projection(), &f1.projection().complement());
        assert_eq!(g2.projection(), &f2.projection().complement());
        assert!(residual(&[&f1, &f2], &[&g1, &g2]) < 1e-12);
        assert_eq!(
            degenerate_laurent_check(f1.projection(), f2.projection()),
            Some(true)
        );
    }

    #[test]
    fn laurent_check_rejects_wrong_projections() {
        // the complement formula only works for the degenerate pairing;
        // swapping the roles of P₁ and P₂ breaks it
        let p1 = Projection::onto_vector(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let p2 = Projection::onto_vector(&[c(1.0, 0.0), c(1.0, 0.0)]);
        let q1 = exact(p1.matrix()).unwrap();
        let q2 = exact(p2.matrix()).unwrap();
        assert_ne!(laurent(&q1, 1, &q2, -1), laurent(&q2, -1, &q1, 1));
    }

    #[test]
    fn identity_factors_stay_identity() {
        let z = Projection::zero(2);
        let f1 = BasicFactor::new(c(0.0, 1.0), z.clone()).unwrap();
        let f2 = BasicFactor::new(c(2.0, -1.0), z).unwrap();
        let (g1, g2, _) = reverse_pair(&f1, &f2).unwrap();
        assert_eq!(g1.projection().rank(), 0);
        assert_eq!(g2.projection().rank(), 0);
    }

    #[test]
    fn same_half_plane_rejected() {
        let f = factor(c(0.0, 1.0), &[c(1.0, 0.0), c(0.0, 0.0)]);
        let g = factor(c(1.0, 2.0), &[c(1.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(
            reverse_pair(&f, &g),
            Err(LoopError::SameHalfPlane { .. })
        ));
    }

    #[test]
    fn act_on_two_by_two_factors() {
        let s = MeromorphicLoop::new(
            2,
            vec![
                factor(c(0.0, 1.0), &[c(1.0, 0.0), c(0.5, 0.0)]),
                factor(c(2.0, 0.5), &[c(0.0, 1.0), c(1.0, 0.0)]),
            ],
        )
        .unwrap();
        let u = MeromorphicLoop::new(
            2,
            vec![
                factor(c(-1.0, -1.0), &[c(1.0, 0.0), c(1.0, 0.0)]),
                factor(c(3.0, -2.0), &[c(2.0, 0.0), c(0.0, -1.0)]),
            ],
        )
        .unwrap();
        let (r, l) = act(&s, &u).unwrap();
        assert_eq!(r.poles(), u.poles());
        assert_eq!(l.poles(), s.poles());
        let lhs: Vec<&BasicFactor> = s.factors().iter().chain(u.factors()).collect();
        let rhs: Vec<&BasicFactor> = r.factors().iter().chain(l.factors()).collect();
        assert!(residual(&lhs, &rhs) < 1e-8);
    }

    #[test]
    fn vacuum_action() {
        let s = MeromorphicLoop::single(factor(c(0.0, 1.0), &[c(1.0, 0.0), c(0.5, 0.0)]));
        let e = MeromorphicLoop::identity(2);
        let (r, l) = act(&s, &e).unwrap();
        assert!(r.is_empty());
        assert_eq!(l, s);
    }

    #[test]
    fn preconditions() {
        let s = MeromorphicLoop::single(factor(c(1.0, 1.0), &[c(1.0, 0.0), c(0.0, 0.0)]));
        let conj = MeromorphicLoop::single(factor(c(1.0, -1.0), &[c(0.0, 1.0), c(1.0, 0.0)]));
        assert!(matches!(act(&s, &conj), Err(LoopError::Precondition(_))));
        assert!(matches!(act(&s, &s), Err(LoopError::Precondition(_))));
        let mixed = s.mul(&MeromorphicLoop::single(factor(
            c(4.0, -1.0),
            &[c(1.0, 0.0), c(0.0, 0.0)],
        )));
        assert!(matches!(
            act(&mixed, &MeromorphicLoop::identity(2)),
            Err(LoopError::Precondition(_))
        ));
    }
}
