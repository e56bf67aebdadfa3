//! The exact-arithmetic commands: groups, Hopf structures and bicrossproducts.

use std::fmt::Write;
use std::path::Path;

use almost_hopf::almost_group::{parse_agrp, AlmostGroup, AxiomReport};
use almost_hopf::bicross_dual::{
    bicrossproduct, dual_bicrossproduct, verify_duality, verify_self_duality, InverseData,
};
use almost_hopf::hopf_core::{function_algebra, group_algebra, AlmostHopfStructure};
use almost_hopf::matched_pair::load_mpair;
use almost_hopf::report::Report;
use serde_json::json;

use crate::config::{read, CliError, Outcome, RunConfig};
use crate::{BicrossCheck, Construction, Emit};

fn load_group(path: &Path) -> Result<AlmostGroup, CliError> {
    parse_agrp(&read(path)?).map_err(|e| CliError::input(path, e))
}

fn axiom_text(title: &str, r: &AxiomReport) -> String {
    let mut out = format!("{title}: {}\n", if r.passed { "PASS" } else { "FAIL" });
    for v in &r.violations {
        let _ = writeln!(out, "  FAIL  {} at ({})", v.axiom, v.labels.join(", "));
    }
    out
}

fn axiom_outcome(cfg: &RunConfig, title: &str, r: &AxiomReport) -> Outcome {
    let body = if cfg.json() {
        let value = json!({ "title": title, "passed": r.passed, "violations": r.violations });
        serde_json::to_string_pretty(&value).expect("serializable")
    } else {
        axiom_text(title, r)
    };
    Outcome::new(body, r.passed)
}

fn report_outcome(cfg: &RunConfig, r: &Report) -> Outcome {
    let body = if cfg.json() {
        serde_json::to_string_pretty(r).expect("serializable")
    } else {
        r.to_string()
    };
    Outcome::new(body, r.passed)
}

pub fn verify_group(cfg: &RunConfig, path: &Path) -> Result<Outcome, CliError> {
    let g = load_group(path)?;
    Ok(axiom_outcome(
        cfg,
        "almost group axioms",
        &g.verify_axioms(),
    ))
}

pub fn verify_hopf(
    cfg: &RunConfig,
    path: &Path,
    construction: Construction,
) -> Result<Outcome, CliError> {
    let g = load_group(path)?;
    let axioms = g.verify_axioms();
    if !axioms.passed {
        return Ok(axiom_outcome(cfg, "almost group axioms", &axioms));
    }
    let (h, name) = match construction {
        Construction::Fn => (function_algebra(&g), "k(G)"),
        Construction::Grp => (group_algebra(&g), "kG"),
    };
    let h = h.map_err(|e| CliError::input(path, e))?;
    Ok(report_outcome(cfg, &hopf_report(&h, name)))
}

fn hopf_report(h: &AlmostHopfStructure, name: &str) -> Report {
    let mut r = h.verify_hopf();
    r.extend(h.verify_antipode_props());
    r.title = format!("almost Hopf axioms of {name}");
    r
}

pub fn bicross(
    cfg: &RunConfig,
    path: &Path,
    emit: Emit,
    dual: bool,
    check: Option<BicrossCheck>,
) -> Result<Outcome, CliError> {
    let mp = load_mpair(path).map_err(|e| CliError::input(path, e))?;
    let matched = mp.verify_matched();
    if !matched.passed {
        return Ok(axiom_outcome(cfg, "matched pair rules", &matched));
    }
    let fail = |e: almost_hopf::bicross_dual::BicrossError| CliError::input(path, e);
    let h = bicrossproduct(&mp).map_err(fail)?;
    let hd = dual_bicrossproduct(&mp).map_err(fail)?;
    if emit == Emit::Structure {
        let body = if dual { hd.to_json() } else { h.to_json() };
        return Ok(Outcome::new(body, true));
    }
    let report = match check {
        None if dual => hopf_report(hd.hopf(), "the dual bicrossproduct"),
        None => hopf_report(h.hopf(), "the bicrossproduct"),
        Some(BicrossCheck::Duality) => verify_duality(&hd, &h).map_err(fail)?,
        Some(BicrossCheck::Star) if dual => hd.verify_star(),
        Some(BicrossCheck::Star) => h.verify_star(),
        Some(BicrossCheck::Selfdual) => match InverseData::derive(&mp) {
            Ok(data) => verify_self_duality(&h, &hd, &data).map_err(fail)?,
            // no candidate inverse maps at all: the pair is not mutually inverse
            Err(e) => {
                let body = if cfg.json() {
                    let value = json!({ "title": "self-duality", "passed": false, "reason": e.to_string() });
                    serde_json::to_string_pretty(&value).expect("serializable")
                } else {
                    format!("self-duality: FAIL\n  {e}\n")
                };
                return Ok(Outcome::new(body, false));
            }
        },
    };
    Ok(report_outcome(cfg, &report))
}
