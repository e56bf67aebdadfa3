use almost_hopf::almost_group::catalog::{cyclic, symmetric};
use almost_hopf::almost_group::parse_agrp;
use almost_hopf::bicross_dual::{
    bicrossproduct, dual_bicrossproduct, verify_self_duality, InverseData,
};
use almost_hopf::hopf_core::{AlmostHopfStructure, Vector};
use almost_hopf::loop_factor::{self, frob, BasicFactor, Branch, Complex64, Projection};
use almost_hopf::matched_pair::{conjugation_pair, MatchedPair};
use serde_json::{json, Value};

fn render(v: Value) -> String {
    serde_json::to_string(&v).expect("serializable")
}

pub fn verify_group(text: &str) -> Result<String, String> {
    let g = parse_agrp(text).map_err(|e| e.to_string())?;
    let report = g.verify_axioms();
    let table: Vec<Vec<&str>> = g
        .table()
        .iter()
        .map(|row| row.iter().map(|&x| g.label(x)).collect())
        .collect();
    Ok(render(json!({
        "passed": report.passed,
        "elements": g.labels(),
        "table": table,
        "j": g.j_elements().iter().map(|&j| g.label(j)).collect::<Vec<_>>(),
        "violations": report.violations,
    })))
}

fn matrix(p: &Projection) -> Vec<Vec<[f64; 2]>> {
    let m = p.matrix();
    (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| [m[(i, j)].re, m[(i, j)].im])
                .collect()
        })
        .collect()
}

pub fn reverse_pair(
    alpha_re: f64,
    alpha_im: f64,
    beta_re: f64,
    beta_im: f64,
    angle1: f64,
    angle2: f64,
) -> Result<String, String> {
    let dir = |a: f64| {
        Projection::onto_vector(&[Complex64::new(a.cos(), 0.0), Complex64::new(a.sin(), 0.0)])
    };
    let err = |e: loop_factor::LoopError| e.to_string();
    let f1 = BasicFactor::new(Complex64::new(alpha_re, alpha_im), dir(angle1)).map_err(err)?;
    let f2 = BasicFactor::new(Complex64::new(beta_re, beta_im), dir(angle2)).map_err(err)?;
    let (g1, g2, branch) = loop_factor::reverse_pair(&f1, &f2).map_err(err)?;
    // the product identity at a few real points
    let mut residual = 0.0f64;
    for x in [-5.0, -1.0, 0.5, 2.0, 7.0] {
        let lam = Complex64::new(x, 0.0);
        let lhs = f1.eval(lam).map_err(err)? * f2.eval(lam).map_err(err)?;
        let rhs = g1.eval(lam).map_err(err)? * g2.eval(lam).map_err(err)?;
        residual = residual.max(frob(&(lhs - rhs)));
    }
    Ok(render(json!({
        "branch": if branch == Branch::Degenerate { "degenerate" } else { "generic" },
        "P1": matrix(f1.projection()),
        "P2": matrix(f2.projection()),
        "P3": matrix(g1.projection()),
        "P4": matrix(g2.projection()),
        "residual": residual,
    })))
}

fn named_pair(name: &str) -> Result<MatchedPair, String> {
    let mp = match name {
        "Z2" => MatchedPair::trivial(cyclic(2), cyclic(2)),
        "Z3" => MatchedPair::trivial(cyclic(3), cyclic(3)),
        "Z4" => MatchedPair::trivial(cyclic(4), cyclic(4)),
        "S3" => conjugation_pair(&symmetric(3)),
        other => return Err(format!("unknown pair `{other}`")),
    };
    mp.map_err(|e| e.to_string())
}

fn table(h: &AlmostHopfStructure) -> Vec<Vec<String>> {
    (0..h.dim())
        .map(|x| {
            (0..h.dim())
                .map(|y| {
                    h.multiply(&Vector::basis(x), &Vector::basis(y))
                        .render(h.names())
                })
                .collect()
        })
        .collect()
}

pub fn bicross_table(pair: &str, dual: bool) -> Result<String, String> {
    let mp = named_pair(pair)?;
    let h = bicrossproduct(&mp).map_err(|e| e.to_string())?;
    let hd = dual_bicrossproduct(&mp).map_err(|e| e.to_string())?;
    let shown = if dual { hd.hopf() } else { h.hopf() };
    let axioms = shown.verify_hopf();
    let selfdual = match InverseData::derive(&mp) {
        Ok(data) => {
            let r = verify_self_duality(&h, &hd, &data).map_err(|e| e.to_string())?;
            json!({
                "passed": r.passed,
                "checks": r.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed })).collect::<Vec<_>>(),
            })
        }
        Err(e) => json!({ "passed": false, "reason": e.to_string() }),
    };
    Ok(render(json!({
        "basis": shown.names(),
        "table": table(shown),
        "axiomsPassed": axioms.passed,
        "selfDuality": selfdual,
    })))
}
