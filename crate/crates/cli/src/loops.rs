//! The `loop` subcommands.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use almost_hopf::loop_factor::{
    random_samples, verify_act, verify_matched_numeric, verify_mutually_inverse_numeric,
    verify_reverse_pair, LoopError, LoopFile, LoopSample, MeromorphicLoop, NumericReport,
};
use clap::Args;
use serde_json::json;

use crate::config::{read, CliError, Outcome, RunConfig};

/// Random sampling used when no loop files are given.
#[derive(Args, Debug, Clone)]
pub struct RandomArgs {
    /// Number of random samples.
    #[arg(long, default_value_t = 5)]
    pub random: usize,
    /// Matrix size of random loops.
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Largest number of factors per random loop.
    #[arg(long, default_value_t = 3)]
    pub max_factors: usize,
}

fn load(path: &Path) -> Result<MeromorphicLoop, CliError> {
    MeromorphicLoop::from_json(&read(path)?).map_err(|e| CliError::input(path, e))
}

/// Precondition violations are input errors, not failed identities.
fn numeric(e: LoopError) -> CliError {
    CliError::Usage(e.to_string())
}

fn describe(name: &str, l: &MeromorphicLoop) -> String {
    let mut out = format!("{name}: {} factor(s)\n", l.len());
    for f in l.factors() {
        let a = f.alpha();
        let _ = writeln!(
            out,
            "  pole {:+.6}{:+.6}i  rank {}",
            a.re,
            a.im,
            f.projection().rank()
        );
    }
    out
}

fn outcome(cfg: &RunConfig, report: &NumericReport, loops: &[(&str, &MeromorphicLoop)]) -> Outcome {
    let body = if cfg.json() {
        let mut value = json!({ "report": report });
        for (name, l) in loops {
            value[*name] = serde_json::to_value(LoopFile::from(*l)).expect("serializable");
        }
        serde_json::to_string_pretty(&value).expect("serializable")
    } else {
        let mut out = String::new();
        for (name, l) in loops {
            out.push_str(&describe(name, l));
        }
        out.push_str(&report.to_string());
        out
    };
    Outcome::new(body, report.passed)
}

pub fn reverse(cfg: &RunConfig, first: &Path, second: &Path) -> Result<Outcome, CliError> {
    let single = |p: &Path| {
        let l = load(p)?;
        match l.factors() {
            [f] => Ok(f.clone()),
            fs => Err(CliError::input(
                p,
                format!("expected one factor, found {}", fs.len()),
            )),
        }
    };
    let (f1, f2) = (single(first)?, single(second)?);
    let (g1, g2, _) = almost_hopf::loop_factor::reverse_pair(&f1, &f2).map_err(numeric)?;
    let report = verify_reverse_pair(&f1, &f2, cfg.samples, cfg.tol, cfg.seed).map_err(numeric)?;
    let (g1, g2) = (MeromorphicLoop::single(g1), MeromorphicLoop::single(g2));
    Ok(outcome(cfg, &report, &[("g1", &g1), ("g2", &g2)]))
}

pub fn act(cfg: &RunConfig, s: &Path, u: &Path) -> Result<Outcome, CliError> {
    let (s, u) = (load(s)?, load(u)?);
    let (r, l, report) = verify_act(&s, &u, cfg.samples, cfg.tol, cfg.seed).map_err(numeric)?;
    Ok(outcome(cfg, &report, &[("right", &r), ("left", &l)]))
}

fn samples(
    paths: &[PathBuf],
    expected: usize,
    random: &RandomArgs,
    seed: u64,
) -> Result<Vec<LoopSample>, CliError> {
    match paths.len() {
        0 => {
            if !(1..=almost_hopf::loop_factor::MAX_DIM).contains(&random.dim)
                || random.max_factors == 0
            {
                return Err(CliError::Usage(
                    "--dim must be in 1..=8 and --max-factors at least 1".into(),
                ));
            }
            Ok(random_samples(
                seed,
                random.random,
                random.dim,
                random.max_factors,
            ))
        }
        k if k == expected => {
            let mut loops = paths
                .iter()
                .map(|p| load(p))
                .collect::<Result<Vec<_>, _>>()?;
            if expected == 2 {
                let n = loops[0].dim();
                loops.insert(1, MeromorphicLoop::identity(n));
                loops.push(MeromorphicLoop::identity(n));
            }
            let mut it = loops.into_iter();
            let mut next = || it.next().expect("four loops");
            Ok(vec![LoopSample {
                s: next(),
                t: next(),
                u: next(),
                v: next(),
            }])
        }
        k => Err(CliError::Usage(format!(
            "expected 0 or {expected} loop files, got {k}"
        ))),
    }
}

pub fn verify_matched(
    cfg: &RunConfig,
    paths: &[PathBuf],
    random: &RandomArgs,
) -> Result<Outcome, CliError> {
    let xs = samples(paths, 4, random, cfg.seed)?;
    let report = verify_matched_numeric(&xs, cfg.samples, cfg.tol, cfg.seed).map_err(numeric)?;
    Ok(outcome(cfg, &report, &[]))
}

pub fn verify_mutinv(
    cfg: &RunConfig,
    paths: &[PathBuf],
    random: &RandomArgs,
) -> Result<Outcome, CliError> {
    let xs = samples(paths, 2, random, cfg.seed)?;
    let report =
        verify_mutually_inverse_numeric(&xs, cfg.samples, cfg.tol, cfg.seed).map_err(numeric)?;
    Ok(outcome(cfg, &report, &[]))
}
