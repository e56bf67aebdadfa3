//! Meromorphic loops `λ ↦ GL_n(ℂ)`, unitary on the real axis and normalised to
//! the identity at infinity, carried as ordered products of basic factors
//! `Φ_{α,P}(λ) = P⊥ + θ_α(λ)P` with `θ_α(λ) = (λ−ᾱ)/(λ−α)`.
//!
//! Loops with poles in the upper half plane form `M`, those with poles in the
//! lower half plane form `G`. Loops are never refactored; the actions only
//! reorder factors pairwise.

mod io;
mod numeric;
mod reverse;

use nalgebra::DMatrix;
pub use num_complex::Complex64;

pub use io::{FactorFile, LoopFile};
pub use numeric::names as identity_names;
pub use numeric::{
    random_factor, random_loop, random_projection, random_samples, sample_lambdas, verify_act,
    verify_matched_numeric, verify_mutually_inverse_numeric, verify_reverse_pair, verify_unitarity,
    Identity, LoopSample, NumericReport,
};
pub use reverse::{
    act, act_left, act_right, check_act_preconditions, degenerate_laurent_check, is_degenerate,
    reverse_pair, Branch,
};

pub type ComplexMatrix = DMatrix<Complex64>;

/// Hermitian and idempotent tolerance for projections (Frobenius norm).
pub const TOL_H: f64 = 1e-10;
/// Unitarity tolerance on the real axis.
pub const TOL_U: f64 = 1e-9;
/// Evaluation closer than this to a pole is an error.
pub const POLE_EPS: f64 = 1e-12;
/// Largest supported matrix size.
pub const MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LoopError {
    #[error("matrix size {0} is outside 1..={MAX_DIM}")]
    BadDimension(usize),
    #[error("expected a {expected}×{expected} matrix, found {rows}×{cols}")]
    DimensionMismatch {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("matrix has a non-finite entry")]
    NonFinite,
    #[error("P is not Hermitian: ‖P−P†‖ = {0:e}")]
    NotHermitian(f64),
    #[error("P is not idempotent: ‖P²−P‖ = {0:e}")]
    NotIdempotent(f64),
    #[error("pole {0} lies on the real axis")]
    RealPole(Complex64),
    #[error("evaluation at λ = {lambda} is within {POLE_EPS:e} of the pole {pole}")]
    AtPole { lambda: Complex64, pole: Complex64 },
    #[error("poles {alpha} and {beta} lie in the same half plane")]
    SameHalfPlane { alpha: Complex64, beta: Complex64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid loop file: {0}")]
    Format(String),
}

/// `θ_α(λ) = (λ−ᾱ)/(λ−α)`.
pub fn theta(alpha: Complex64, lambda: Complex64) -> Complex64 {
    (lambda - alpha.conj()) / (lambda - alpha)
}

/// Frobenius norm.
pub fn frob(m: &ComplexMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn check_square(n: usize, m: &ComplexMatrix) -> Result<(), LoopError> {
    if m.nrows() != n || m.ncols() != n {
        return Err(LoopError::DimensionMismatch {
            expected: n,
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(())
}

/// A Hermitian projection matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Projection(ComplexMatrix);

impl Projection {
    pub fn new(p: ComplexMatrix) -> Result<Self, LoopError> {
        let n = p.nrows();
        if !(1..=MAX_DIM).contains(&n) {
            return Err(LoopError::BadDimension(n));
        }
        check_square(n, &p)?;
        if p.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(LoopError::NonFinite);
        }
        let herm = frob(&(&p - p.adjoint()));
        if herm > TOL_H {
            return Err(LoopError::NotHermitian(herm));
        }
        let idem = frob(&(&p * &p - &p));
        if idem > TOL_H {
            return Err(LoopError::NotIdempotent(idem));
        }
        Ok(Projection(p))
    }

    pub fn zero(n: usize) -> Self {
        Projection(ComplexMatrix::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        Projection(ComplexMatrix::identity(n, n))
    }

    /// Orthogonal projection onto the column span of `vectors`: column-pivoted
    /// Gram–Schmidt with reorthogonalisation, dropping directions whose
    /// remaining norm is below `1e−10` of the largest column.
    pub fn onto(vectors: &ComplexMatrix) -> Self {
        let n = vectors.nrows();
        let mut rest: Vec<nalgebra::DVector<Complex64>> =
            vectors.column_iter().map(|c| c.into_owned()).collect();
        let scale = rest.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let mut q: Vec<nalgebra::DVector<Complex64>> = Vec::new();
        while q.len() < n {
            let Some((k, norm)) = rest
                .iter()
                .map(|c| c.norm())
                .enumerate()
                .max_by(|a, b| a.1.total_cmp(&b.1))
            else {
                break;
            };
            if norm <= 1e-10 * scale || scale == 0.0 {
                break;
            }
            let mut v = rest.swap_remove(k);
            for _ in 0..2 {
                for e in &q {
                    let d = e.dotc(&v);
                    v -= e * d;
                }
            }
            v /= Complex64::from(v.norm());
            for c in rest.iter_mut() {
                let d = v.dotc(c);
                *c -= &v * d;
            }
            q.push(v);
        }
        let mut p = ComplexMatrix::zeros(n, n);
        for e in &q {
            p += e * e.adjoint();
        }
        // symmetrize away rounding
        Projection((&p + p.adjoint()).scale(0.5))
    }

    /// Projection onto the span of a single vector.
    pub fn onto_vector(v: &[Complex64]) -> Self {
        Self::onto(&ComplexMatrix::from_column_slice(v.len(), 1, v))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    /// `P⊥ = 1 − P`.
    pub fn complement(&self) -> Self {
        Projection(ComplexMatrix::identity(self.dim(), self.dim()) - &self.0)
    }

    pub fn rank(&self) -> usize {
        self.0.trace().re.round() as usize
    }

    /// Whether `P` is `0` or `1` within [`TOL_H`], so the factor is scalar.
    pub fn is_scalar(&self) -> bool {
        let n = self.dim();
        frob(&self.0) <= TOL_H || frob(&(&self.0 - ComplexMatrix::identity(n, n))) <= TOL_H
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasicFactor {
    alpha: Complex64,
    p: Projection,
}

impl BasicFactor {
    pub fn new(alpha: Complex64, p: Projection) -> Result<Self, LoopError> {
        if alpha.im == 0.0 || !alpha.re.is_finite() || !alpha.im.is_finite() {
            return Err(LoopError::RealPole(alpha));
        }
        Ok(BasicFactor { alpha, p })
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn projection(&self) -> &Projection {
        &self.p
    }

    pub fn dim(&self) -> usize {
        self.p.dim()
    }

    pub fn upper(&self) -> bool {
        self.alpha.im > 0.0
    }

    /// `P⊥ + θ_α(λ)P = 1 + (θ_α(λ) − 1)P`.
    pub fn eval(&self, lambda: Complex64) -> Result<ComplexMatrix, LoopError> {
        if (lambda - self.alpha).norm() <= POLE_EPS {
            return Err(LoopError::AtPole {
                lambda,
                pole: self.alpha,
            });
        }
        let n = self.dim();
        let t = theta(self.alpha, lambda);
        Ok(ComplexMatrix::identity(n, n) + self.p.0.map(|z| z * (t - 1.0)))
    }

    /// `Φ^i_{α,P} = Φ_{α,P⊥}`.
    pub fn i_op(&self) -> Self {
        BasicFactor {
            alpha: self.alpha,
            p: self.p.complement(),
        }
    }

    /// `Φ_{α,P}^{-1} = Φ_{ᾱ,P}`.
    pub fn inverse(&self) -> Self {
        BasicFactor {
            alpha: self.alpha.conj(),
            p: self.p.clone(),
        }
    }
}

/// An ordered product of basic factors; the empty product is the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct MeromorphicLoop {
    n: usize,
    factors: Vec<BasicFactor>,
}

impl MeromorphicLoop {
    pub fn identity(n: usize) -> Self {
        MeromorphicLoop { n, factors: vec![] }
    }

    pub fn new(n: usize, factors: Vec<BasicFactor>) -> Result<Self, LoopError> {
        if !(1..=MAX_DIM).contains(&n) {
            return Err(LoopError::BadDimension(n));
        }
        for f in &factors {
            check_square(n, f.p.matrix())?;
        }
        Ok(MeromorphicLoop { n, factors })
    }

    pub fn single(f: BasicFactor) -> Self {
        MeromorphicLoop {
            n: f.dim(),
            factors: vec![f],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[BasicFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn poles(&self) -> Vec<Complex64> {
        self.factors.iter().map(|f| f.alpha).collect()
    }

    /// Every factor is scalar, so the loop is a scalar function times `1`.
    pub fn in_j(&self) -> bool {
        self.factors.iter().all(|f| f.p.is_scalar())
    }

    /// Ordered product of the factor values, left to right.
    pub fn eval(&self, lambda: Complex64) -> Result<ComplexMatrix, LoopError> {
        let mut out = ComplexMatrix::identity(self.n, self.n);
        for f in &self.factors {
            out *= f.eval(lambda)?;
        }
        Ok(out)
    }

    /// Concatenation of factor lists.
    pub fn mul(&self, other: &MeromorphicLoop) -> MeromorphicLoop {
        assert_eq!(self.n, other.n, "loops of different sizes");
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        MeromorphicLoop { n: self.n, factors }
    }

    /// Reverse the list and replace each `P` by `P⊥`.
    pub fn i_op(&self) -> MeromorphicLoop {
        MeromorphicLoop {
            n: self.n,
            factors: self.factors.iter().rev().map(BasicFactor::i_op).collect(),
        }
    }

    /// Reverse the list and move each pole `α` to `ᾱ`.
    pub fn inverse(&self) -> MeromorphicLoop {
        MeromorphicLoop {
            n: self.n,
            factors: self
                .factors
                .iter()
                .rev()
                .map(BasicFactor::inverse)
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn diag10() -> Projection {
        let z = c(0.0, 0.0);
        Projection::new(ComplexMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), z, z, z])).unwrap()
    }

    #[test]
    fn basic_factor_value() {
        let f = BasicFactor::new(c(0.0, 1.0), diag10()).unwrap();
        let v = f.eval(c(2.0, 0.0)).unwrap();
        assert!((v[(0, 0)] - c(0.6, 0.8)).norm() < 1e-15);
        assert!((v[(1, 1)] - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(v[(0, 1)], c(0.0, 0.0));
        assert!(matches!(f.eval(c(0.0, 1.0)), Err(LoopError::AtPole { .. })));
    }

    #[test]
    fn identity_loop() {
        let l = MeromorphicLoop::identity(3);
        assert_eq!(l.eval(c(1.5, 0.0)).unwrap(), ComplexMatrix::identity(3, 3));
        assert!(l.in_j());
    }

    #[test]
    fn projection_validation() {
        let bad = ComplexMatrix::from_row_slice(
            2,
            2,
            &[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        );
        assert!(matches!(
            Projection::new(bad),
            Err(LoopError::NotHermitian(_))
        ));
        let bad = ComplexMatrix::from_row_slice(
            2,
            2,
            &[c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        );
        assert!(matches!(
            Projection::new(bad),
            Err(LoopError::NotIdempotent(_))
        ));
        assert!(Projection::new(ComplexMatrix::zeros(9, 9)).is_err());
        assert!(BasicFactor::new(c(1.0, 0.0), diag10()).is_err());
    }

    #[test]
    fn projection_onto_span() {
        let p = Projection::onto_vector(&[c(1.0, 0.0), c(3.0, 0.0)]);
        let want = [[0.1, 0.3], [0.3, 0.9]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((p.matrix()[(i, j)] - c(want[i][j], 0.0)).norm() < 1e-14);
            }
        }
        assert_eq!(p.rank(), 1);
        assert!(Projection::new(p.matrix().clone()).is_ok());
        assert_eq!(Projection::onto(&ComplexMatrix::zeros(2, 2)).rank(), 0);
    }

    #[test]
    fn i_and_inverse_are_involutions() {
        let f = BasicFactor::new(c(0.5, 2.0), diag10()).unwrap();
        let g = BasicFactor::new(
            c(-1.0, -1.0),
            Projection::onto_vector(&[c(1.0, 0.0), c(0.0, 1.0)]),
        )
        .unwrap();
        let l = MeromorphicLoop::new(2, vec![f.clone(), g]).unwrap();
        assert_eq!(l.i_op().i_op(), l);
        assert_eq!(l.inverse().inverse(), l);
        assert_eq!(l.i_op().factors()[1].alpha(), f.alpha());
        assert_eq!(l.inverse().factors()[1].alpha(), c(0.5, -2.0));
        // (x⁻¹)^i and (x^i)⁻¹ coincide as factor lists
        assert_eq!(l.inverse().i_op(), l.i_op().inverse());
    }

    #[test]
    fn inverse_evaluates_to_inverse() {
        let f = BasicFactor::new(c(0.5, 2.0), diag10()).unwrap();
        let g = BasicFactor::new(
            c(-1.0, -1.0),
            Projection::onto_vector(&[c(1.0, 0.0), c(0.0, 1.0)]),
        )
        .unwrap();
        let l = MeromorphicLoop::new(2, vec![f, g]).unwrap();
        for lam in [-3.0, 0.25, 7.5] {
            let lam = c(lam, 0.0);
            let prod = l.inverse().eval(lam).unwrap() * l.eval(lam).unwrap();
            assert!(frob(&(prod - ComplexMatrix::identity(2, 2))) < 1e-12);
        }
    }
}
