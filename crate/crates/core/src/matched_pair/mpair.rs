//! `.mpair` files: two `.agrp` references followed by both action tables.
//!
//! ```text
//! G z2.agrp
//! M z2.agrp
//! right 0 0 : 0
//! left 0 0 : 0
//! ...
//! ```
//!
//! Paths are resolved relative to the directory of the `.mpair` file. Every
//! `(s,u)` needs exactly one `right` and one `left` line.

use std::fmt::Write;
use std::path::Path;

use super::{MatchedPair, MatchedPairError};
use crate::almost_group::agrp::content_lines;
use crate::almost_group::{format_agrp, parse_agrp, AlmostGroup, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MpairError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{kind} {s} {u}` entry")]
    Missing { kind: String, s: String, u: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Group {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Pair(#[from] MatchedPairError),
}

fn syntax(line: usize, message: impl Into<String>) -> MpairError {
    MpairError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses `.mpair` text, resolving the `G`/`M` references through `load`.
pub fn parse_mpair(
    text: &str,
    mut load: impl FnMut(&str) -> Result<AlmostGroup, MpairError>,
) -> Result<MatchedPair, MpairError> {
    let mut lines = content_lines(text);
    let mut header = |key: &str| -> Result<AlmostGroup, MpairError> {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| syntax(0, format!("expected `{key} <path>`")))?;
        match line.split_once(char::is_whitespace) {
            Some((k, path)) if k == key && !path.trim().is_empty() => load(path.trim()),
            _ => Err(syntax(ln, format!("expected `{key} <path>`"))),
        }
    };
    let g = header("G")?;
    let m = header("M")?;
    let (ng, nm) = (g.len(), m.len());

    let mut right: Vec<Option<usize>> = vec![None; nm * ng];
    let mut left: Vec<Option<usize>> = vec![None; nm * ng];
    for (ln, line) in lines {
        let (head, value) = line
            .split_once(':')
            .ok_or_else(|| syntax(ln, "expected `right|left <s> <u> : <value>`"))?;
        let words: Vec<&str> = head.split_whitespace().collect();
        let [kind, s, u] = words[..] else {
            return Err(syntax(ln, "expected `right|left <s> <u> : <value>`"));
        };
        let find = |grp: &AlmostGroup, label: &str, what: &str| {
            grp.index_of(label)
                .ok_or_else(|| syntax(ln, format!("unknown {what} element `{label}`")))
        };
        let s = find(&m, s, "M")?;
        let u = find(&g, u, "G")?;
        let value = value.trim();
        let (table, target) = match kind {
            "right" => (&mut right, find(&g, value, "G")?),
            "left" => (&mut left, find(&m, value, "M")?),
            other => return Err(syntax(ln, format!("unknown entry kind `{other}`"))),
        };
        let slot = &mut table[s * ng + u];
        if slot.is_some() {
            return Err(syntax(ln, format!("duplicate `{kind}` entry")));
        }
        *slot = Some(target);
    }

    let complete = |kind: &str, table: Vec<Option<usize>>| -> Result<Vec<Vec<usize>>, MpairError> {
        let mut rows = vec![Vec::with_capacity(ng); nm];
        for (k, x) in table.into_iter().enumerate() {
            let (s, u) = (k / ng, k % ng);
            rows[s].push(x.ok_or_else(|| MpairError::Missing {
                kind: kind.to_string(),
                s: m.label(s).to_string(),
                u: g.label(u).to_string(),
            })?);
        }
        Ok(rows)
    };
    let right = complete("right", right)?;
    let left = complete("left", left)?;
    Ok(MatchedPair::new(g, m, right, left)?)
}

/// Reads a `.mpair` file and the `.agrp` files it references.
pub fn load_mpair(path: &Path) -> Result<MatchedPair, MpairError> {
    let read = |p: &Path| {
        std::fs::read_to_string(p).map_err(|e| MpairError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        })
    };
    let text = read(path)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    parse_mpair(&text, |rel| {
        let p = dir.join(rel);
        parse_agrp(&read(&p)?).map_err(|source| MpairError::Group {
            path: p.display().to_string(),
            source,
        })
    })
}

/// Renders `mp` with the given `G`/`M` references.
pub fn format_mpair(mp: &MatchedPair, g_ref: &str, m_ref: &str) -> String {
    let (g, m) = (mp.g(), mp.m());
    let mut out = format!("G {g_ref}\nM {m_ref}\n");
    for s in 0..m.len() {
        for u in 0..g.len() {
            let _ = writeln!(
                out,
                "right {} {} : {}",
                m.label(s),
                g.label(u),
                g.label(mp.right(s, u))
            );
        }
    }
    for s in 0..m.len() {
        for u in 0..g.len() {
            let _ = writeln!(
                out,
                "left {} {} : {}",
                m.label(s),
                g.label(u),
                m.label(mp.left(s, u))
            );
        }
    }
    out
}

/// Writes `mp` next to its component `.agrp` files under `dir`.
pub fn write_mpair_files(mp: &MatchedPair, dir: &Path, stem: &str) -> std::io::Result<()> {
    let g_name = format!("{stem}.g.agrp");
    let m_name = format!("{stem}.m.agrp");
    std::fs::write(dir.join(&g_name), format_agrp(mp.g()))?;
    std::fs::write(dir.join(&m_name), format_agrp(mp.m()))?;
    std::fs::write(
        dir.join(format!("{stem}.mpair")),
        format_mpair(mp, &g_name, &m_name),
    )
}
