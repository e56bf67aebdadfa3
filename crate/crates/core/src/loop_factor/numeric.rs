//! Seeded sampling and residual-based verification of loop identities.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    act, frob, reverse_pair, BasicFactor, ComplexMatrix, LoopError, MeromorphicLoop, Projection,
};

/// Real sample points are drawn from `[−LAMBDA_RANGE, LAMBDA_RANGE]`.
pub const LAMBDA_RANGE: f64 = 10.0;
/// Excluded half-width around the real part of every pole.
pub const POLE_GAP: f64 = 1e-6;
/// Point at which normalisation at infinity is checked.
pub const FAR_LAMBDA: f64 = 1e8;
pub const FAR_TOL: f64 = 1e-6;
/// Minimum distance between generated poles and the conjugates of other poles.
pub const MIN_SEPARATION: f64 = 0.5;

/// `n` real points avoiding the real parts of `poles`.
pub fn sample_lambdas(rng: &mut impl Rng, count: usize, poles: &[Complex64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x: f64 = rng.random_range(-LAMBDA_RANGE..=LAMBDA_RANGE);
        if poles.iter().all(|p| (x - p.re).abs() > POLE_GAP) {
            out.push(x);
        }
    }
    out
}

fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect()
}

/// Projection onto the span of `rank` random vectors.
pub fn random_projection(rng: &mut impl Rng, n: usize, rank: usize) -> Projection {
    let cols: Vec<Complex64> = (0..rank).flat_map(|_| random_vector(rng, n)).collect();
    Projection::onto(&ComplexMatrix::from_column_slice(n, rank, &cols))
}

/// A random factor whose pole is at least [`MIN_SEPARATION`] from every
/// pole in `taken` and from their conjugates. The new pole is added to `taken`.
pub fn random_factor(
    rng: &mut impl Rng,
    n: usize,
    upper: bool,
    taken: &mut Vec<Complex64>,
) -> BasicFactor {
    let alpha = loop {
        let im: f64 = rng.random_range(0.5..3.0);
        let a = Complex64::new(rng.random_range(-5.0..5.0), if upper { im } else { -im });
        if taken
            .iter()
            .all(|&p| (a - p).norm() >= MIN_SEPARATION && (a - p.conj()).norm() >= MIN_SEPARATION)
        {
            break a;
        }
    };
    taken.push(alpha);
    let rank = rng.random_range(1..n.max(2));
    BasicFactor::new(alpha, random_projection(rng, n, rank.min(n))).expect("pole is off the axis")
}

pub fn random_loop(
    rng: &mut impl Rng,
    n: usize,
    factors: usize,
    upper: bool,
    taken: &mut Vec<Complex64>,
) -> MeromorphicLoop {
    let fs = (0..factors)
        .map(|_| random_factor(rng, n, upper, taken))
        .collect();
    MeromorphicLoop::new(n, fs).expect("sizes agree")
}

/// `s, t` on one side of the real axis and `u, v` on the other.
#[derive(Debug, Clone, PartialEq)]
pub struct LoopSample {
    pub s: MeromorphicLoop,
    pub t: MeromorphicLoop,
    pub u: MeromorphicLoop,
    pub v: MeromorphicLoop,
}

impl LoopSample {
    /// Random sample with between 1 and `max_factors` factors per loop,
    /// `s, t` with upper poles and all poles well separated.
    pub fn random(rng: &mut impl Rng, n: usize, max_factors: usize) -> Self {
        let mut taken = Vec::new();
        let mut next = |upper: bool, taken: &mut Vec<Complex64>| {
            let k = rng.random_range(1..=max_factors.max(1));
            random_loop(rng, n, k, upper, taken)
        };
        LoopSample {
            s: next(true, &mut taken),
            t: next(true, &mut taken),
            u: next(false, &mut taken),
            v: next(false, &mut taken),
        }
    }

    pub fn loops(&self) -> [&MeromorphicLoop; 4] {
        [&self.s, &self.t, &self.u, &self.v]
    }
}

/// `count` samples drawn from a ChaCha stream seeded with `seed`.
pub fn random_samples(seed: u64, count: usize, n: usize, max_factors: usize) -> Vec<LoopSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| LoopSample::random(&mut rng, n, max_factors))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Identity {
    pub name: String,
    #[serde(rename = "maxResidual")]
    pub max_residual: f64,
    pub evaluations: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericReport {
    pub title: String,
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub passed: bool,
    pub identities: Vec<Identity>,
}

impl NumericReport {
    pub fn max_residual(&self) -> f64 {
        self.identities
            .iter()
            .map(|i| i.max_residual)
            .fold(0.0, f64::max)
    }

    pub fn identity(&self, name: &str) -> Option<&Identity> {
        self.identities.iter().find(|i| i.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

impl std::fmt::Display for NumericReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "{}: {} (seed {}, {} λ per instance, tol {:e})",
            self.title,
            if self.passed { "PASS" } else { "FAIL" },
            self.seed,
            self.samples,
            self.tol
        )?;
        for i in &self.identities {
            writeln!(
                f,
                "  {}  {:<24} max residual {:.3e} over {} evaluations",
                if i.passed { "ok  " } else { "FAIL" },
                i.name,
                i.max_residual,
                i.evaluations
            )?;
        }
        Ok(())
    }
}

/// Accumulates residuals per identity, in insertion order.
struct Recorder {
    rng: ChaCha8Rng,
    samples: usize,
    tol: f64,
    identities: Vec<Identity>,
}

impl Recorder {
    fn new(seed: u64, samples: usize, tol: f64) -> Self {
        Recorder {
            rng: ChaCha8Rng::seed_from_u64(seed),
            samples,
            tol,
            identities: Vec::new(),
        }
    }

    fn slot(&mut self, name: &str) -> &mut Identity {
        let k = match self.identities.iter().position(|i| i.name == name) {
            Some(k) => k,
            None => {
                self.identities.push(Identity {
                    name: name.to_string(),
                    max_residual: 0.0,
                    evaluations: 0,
                    passed: true,
                });
                self.identities.len() - 1
            }
        };
        &mut self.identities[k]
    }

    fn record(&mut self, name: &str, residual: f64, evaluations: usize) {
        let tol = self.tol;
        let slot = self.slot(name);
        slot.max_residual = slot.max_residual.max(residual);
        slot.evaluations += evaluations;
        // NaN residuals fail
        slot.passed = slot.max_residual <= tol && !residual.is_nan();
    }

    /// Records `max ‖lhs(λ) − rhs(λ)‖_F` over fresh sample points.
    fn compare(
        &mut self,
        name: &str,
        lhs: &[&MeromorphicLoop],
        rhs: &[&MeromorphicLoop],
    ) -> Result<(), LoopError> {
        let poles: Vec<Complex64> = lhs.iter().chain(rhs).flat_map(|l| l.poles()).collect();
        let lams = sample_lambdas(&mut self.rng, self.samples, &poles);
        let mut worst = 0.0f64;
        for &x in &lams {
            let lam = Complex64::new(x, 0.0);
            let d = frob(&(product(lhs, lam)? - product(rhs, lam)?));
            worst = if d.is_nan() { f64::NAN } else { worst.max(d) };
        }
        self.record(name, worst, lams.len());
        Ok(())
    }

    fn finish(self, title: &str, seed: u64) -> NumericReport {
        NumericReport {
            title: title.to_string(),
            seed,
            samples: self.samples,
            tol: self.tol,
            passed: self.identities.iter().all(|i| i.passed),
            identities: self.identities,
        }
    }
}

fn product(ls: &[&MeromorphicLoop], lam: Complex64) -> Result<ComplexMatrix, LoopError> {
    let n = ls.first().map_or(1, |l| l.dim());
    let mut out = ComplexMatrix::identity(n, n);
    for l in ls {
        out *= l.eval(lam)?;
    }
    Ok(out)
}

/// `f₁f₂ = g₁g₂` for the reversed pair.
pub fn verify_reverse_pair(
    f1: &BasicFactor,
    f2: &BasicFactor,
    samples: usize,
    tol: f64,
    seed: u64,
) -> Result<NumericReport, LoopError> {
    let (g1, g2, _) = reverse_pair(f1, f2)?;
    let lhs = MeromorphicLoop::new(f1.dim(), vec![f1.clone(), f2.clone()])?;
    let rhs = MeromorphicLoop::new(f1.dim(), vec![g1, g2])?;
    let mut rec = Recorder::new(seed, samples, tol);
    rec.compare("reverse-pair", &[&lhs], &[&rhs])?;
    Ok(rec.finish("pole reversal", seed))
}

/// `(s▷u, s◁u)` together with the residual of `su = (s▷u)(s◁u)`.
pub fn verify_act(
    s: &MeromorphicLoop,
    u: &MeromorphicLoop,
    samples: usize,
    tol: f64,
    seed: u64,
) -> Result<(MeromorphicLoop, MeromorphicLoop, NumericReport), LoopError> {
    let (r, l) = act(s, u)?;
    let mut rec = Recorder::new(seed, samples, tol);
    rec.compare(names::FACTORIZATION, &[s, u], &[&r, &l])?;
    let report = rec.finish("loop actions", seed);
    Ok((r, l, report))
}

pub mod names {
    pub const FACTORIZATION: &str = "factorization";
    pub const RIGHT_PROD: &str = "right-prod";
    pub const LEFT_PROD: &str = "left-prod";
    pub const RIGHT_MUL: &str = "right-mul";
    pub const LEFT_MUL: &str = "left-mul";
    pub const I_RIGHT: &str = "i-right";
    pub const I_LEFT: &str = "i-left";
    pub const VACUUM: &str = "vacuum";
    pub const INVERSE_RIGHT: &str = "inverse-right";
    pub const INVERSE_LEFT: &str = "inverse-left";
    pub const INVERSE_I: &str = "inverse-i";
    pub const DOUBLECROSS_INVERSE: &str = "doublecross-inverse";
    pub const UNITARITY: &str = "unitarity";
    pub const NORMALIZATION: &str = "normalization";
}

/// The matched-pair rules on each sample, by evaluation:
/// `su = (s▷u)(s◁u)`, `s▷(t▷u) = st▷u`, `(s◁(t▷u))(t◁u) = st◁u`,
/// `s▷uv = (s▷u)((s◁u)▷v)`, `(s◁u)◁v = s◁uv`, the two `i` rules and the
/// vacuum rules. Precondition violations are errors, not failures.
pub fn verify_matched_numeric(
    samples: &[LoopSample],
    n_lambda: usize,
    tol: f64,
    seed: u64,
) -> Result<NumericReport, LoopError> {
    use names::*;
    let mut rec = Recorder::new(seed, n_lambda, tol);
    for x in samples {
        let (s, t, u, v) = (&x.s, &x.t, &x.u, &x.v);
        let (su_r, su_l) = act(s, u)?;
        rec.compare(FACTORIZATION, &[s, u], &[&su_r, &su_l])?;

        let st = s.mul(t);
        let (tu_r, tu_l) = act(t, u)?;
        let (stu_r, stu_l) = act(&st, u)?;
        let (s_tu_r, s_tu_l) = act(s, &tu_r)?;
        rec.compare(RIGHT_PROD, &[&s_tu_r], &[&stu_r])?;
        rec.compare(LEFT_PROD, &[&s_tu_l, &tu_l], &[&stu_l])?;

        let uv = u.mul(v);
        let (suv_r, suv_l) = act(s, &uv)?;
        let (slu_v_r, slu_v_l) = act(&su_l, v)?;
        rec.compare(RIGHT_MUL, &[&suv_r], &[&su_r, &slu_v_r])?;
        rec.compare(LEFT_MUL, &[&slu_v_l], &[&suv_l])?;

        let (ir, il) = act(&su_l.i_op(), &su_r.i_op())?;
        rec.compare(I_RIGHT, &[&ir], &[&u.i_op()])?;
        rec.compare(I_LEFT, &[&il], &[&s.i_op()])?;

        let e = MeromorphicLoop::identity(s.dim());
        let (se_r, se_l) = act(s, &e)?;
        let (eu_r, eu_l) = act(&e, u)?;
        rec.compare(VACUUM, &[&se_r], &[&e])?;
        rec.compare(VACUUM, &[&se_l], &[s])?;
        rec.compare(VACUUM, &[&eu_r], &[u])?;
        rec.compare(VACUUM, &[&eu_l], &[&e])?;
    }
    Ok(rec.finish("matched pair of loops", seed))
}

/// The mutual-inverse identities `u⁻¹▷s⁻¹ = (s◁u)⁻¹`, `u⁻¹◁s⁻¹ = (s▷u)⁻¹`,
/// `(x⁻¹)^i = (x^i)⁻¹`, `(su)⁻¹ = (u⁻¹▷s⁻¹)(u⁻¹◁s⁻¹)`, and unitarity of every
/// loop involved.
pub fn verify_mutually_inverse_numeric(
    samples: &[LoopSample],
    n_lambda: usize,
    tol: f64,
    seed: u64,
) -> Result<NumericReport, LoopError> {
    use names::*;
    let mut rec = Recorder::new(seed, n_lambda, tol);
    let mut all = Vec::new();
    for x in samples {
        let (s, u) = (&x.s, &x.u);
        let (r, l) = act(s, u)?;
        let (ir, il) = act(&u.inverse(), &s.inverse())?;
        rec.compare(INVERSE_RIGHT, &[&ir], &[&l.inverse()])?;
        rec.compare(INVERSE_LEFT, &[&il], &[&r.inverse()])?;
        rec.compare(DOUBLECROSS_INVERSE, &[&s.mul(u).inverse()], &[&ir, &il])?;
        for y in [s, u] {
            rec.compare(INVERSE_I, &[&y.inverse().i_op()], &[&y.i_op().inverse()])?;
        }
        all.extend([s.clone(), u.clone(), r, l, ir, il]);
    }
    let unit = verify_unitarity(&all, 20, tol, seed)?;
    let mut report = rec.finish("mutually inverse loops", seed);
    report.passed &= unit.passed;
    report.identities.extend(unit.identities);
    Ok(report)
}

/// `‖Φ(λ)†Φ(λ) − 1‖_F` at `samples` real points per loop, and
/// `‖Φ(λ) − 1‖_F` at `λ = 1e8` against [`FAR_TOL`].
pub fn verify_unitarity(
    loops: &[MeromorphicLoop],
    samples: usize,
    tol: f64,
    seed: u64,
) -> Result<NumericReport, LoopError> {
    use names::*;
    let mut rec = Recorder::new(seed, samples, tol);
    for l in loops {
        let n = l.dim();
        let id = ComplexMatrix::identity(n, n);
        let lams = sample_lambdas(&mut rec.rng, samples, &l.poles());
        let mut worst = 0.0f64;
        for x in lams {
            let m = l.eval(Complex64::new(x, 0.0))?;
            worst = worst.max(frob(&(m.adjoint() * &m - &id)));
        }
        rec.record(UNITARITY, worst, samples);
        let far = frob(&(l.eval(Complex64::new(FAR_LAMBDA, 0.0))? - &id));
        let slot = rec.slot(NORMALIZATION);
        slot.max_residual = slot.max_residual.max(far);
        slot.evaluations += 1;
        slot.passed = slot.max_residual <= FAR_TOL;
    }
    Ok(rec.finish("unitarity on the real axis", seed))
}
