//! Line-oriented manifest format.
//!
//! ```text
//! # leading comment lines are kept as metadata
//! [manifold]
//! name = e3_plus          # optional
//! dim = 3
//! epsilon = 1             # required when [phi]/[xi]/[eta] are present
//!
//! [metric]                # dim rows of dim rationals
//! 1 0 0
//! 0 1 0
//! 0 0 1
//!
//! [brackets]              # i < j, 1-based; omitted pairs are zero
//! 1 3 = 1:1
//! 2 3 = 2:1
//!
//! [phi]                   # row i: coefficients of φ e_i
//! 1 0 0
//! 0 1 0
//! 0 0 0
//!
//! [xi]
//! 0 0 1
//!
//! [eta]
//! 0 0 1
//!
//! [tparams]               # either `preset = NAME[:a0,a1]` or all of a0..a7
//! preset = concircular
//! ```
//!
//! `#` starts a comment anywhere. CRLF line endings are accepted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::frame::{FrameSpec, BRACKET_VALENCE, METRIC_VALENCE};
use crate::paracontact::ParacontactSpec;
use crate::rational::Rational;
use crate::tcurv::{PresetSpec, TParams};
use crate::tensor::{Slot, Tensor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TParamsSource {
    Preset(PresetSpec),
    Explicit([Rational; 8]),
}

impl TParamsSource {
    pub fn resolve(&self, m: usize) -> Result<TParams> {
        match self {
            TParamsSource::Preset(p) => p.resolve(m),
            TParamsSource::Explicit(a) => Ok(TParams::explicit(a.clone())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub name: Option<String>,
    pub comments: Vec<String>,
    pub epsilon: Option<Rational>,
    pub frame: FrameSpec,
    pub pc: Option<ParacontactSpec>,
    pub tparams: Option<TParamsSource>,
}

const SECTIONS: [&str; 7] = ["manifold", "metric", "brackets", "phi", "xi", "eta", "tparams"];

struct Line<'a> {
    number: usize,
    text: &'a str,
}

fn parse_rational(line: usize, tok: &str) -> Result<Rational> {
    tok.parse()
        .map_err(|e| Error::parse(line, format!("bad rational `{tok}`: {e}")))
}

fn parse_row(line: &Line<'_>, dim: usize) -> Result<Vec<Rational>> {
    let row = line
        .text
        .split_whitespace()
        .map(|t| parse_rational(line.number, t))
        .collect::<Result<Vec<_>>>()?;
    if row.len() != dim {
        return Err(Error::parse(
            line.number,
            format!("expected {dim} entries in row, found {}", row.len()),
        ));
    }
    Ok(row)
}

fn parse_rows(lines: &[Line<'_>], dim: usize, rows: usize, section: &str, header: usize) -> Result<Vec<Vec<Rational>>> {
    if lines.len() != rows {
        let at = lines.get(rows).map_or(header, |l| l.number);
        return Err(Error::parse(
            at,
            format!("[{section}] needs {rows} row(s), found {}", lines.len()),
        ));
    }
    lines.iter().map(|l| parse_row(l, dim)).collect()
}

fn parse_key_values<'a>(lines: &[Line<'a>], section: &str) -> Result<BTreeMap<&'a str, (usize, &'a str)>> {
    let mut out = BTreeMap::new();
    for l in lines {
        let (k, v) = l
            .text
            .split_once('=')
            .ok_or_else(|| Error::parse(l.number, format!("expected `key = value` in [{section}]")))?;
        let (k, v) = (k.trim(), v.trim());
        if out.insert(k, (l.number, v)).is_some() {
            return Err(Error::parse(l.number, format!("duplicate key `{k}` in [{section}]")));
        }
    }
    Ok(out)
}

fn parse_index(line: usize, tok: &str, dim: usize) -> Result<usize> {
    let i: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("bad index `{tok}`")))?;
    if i == 0 || i > dim {
        return Err(Error::parse(line, format!("index {i} out of range 1..={dim}")));
    }
    Ok(i - 1)
}

fn parse_brackets(lines: &[Line<'_>], dim: usize) -> Result<Tensor> {
    let mut c = Tensor::zeros(dim, &BRACKET_VALENCE);
    let mut seen = BTreeMap::new();
    for l in lines {
        let (lhs, rhs) = l
            .text
            .split_once('=')
            .ok_or_else(|| Error::parse(l.number, "expected `i j = k:coeff ...`"))?;
        let idx: Vec<&str> = lhs.split_whitespace().collect();
        let [i, j] = idx.as_slice() else {
            return Err(Error::parse(l.number, "bracket needs exactly two frame indices"));
        };
        let (i, j) = (parse_index(l.number, i, dim)?, parse_index(l.number, j, dim)?);
        if i >= j {
            return Err(Error::parse(l.number, format!("bracket pair ({}, {}) must have i < j", i + 1, j + 1)));
        }
        if seen.insert((i, j), l.number).is_some() {
            return Err(Error::parse(l.number, format!("duplicate bracket pair ({}, {})", i + 1, j + 1)));
        }
        let mut ks = Vec::new();
        for term in rhs.split_whitespace() {
            let (k, v) = term
                .split_once(':')
                .ok_or_else(|| Error::parse(l.number, format!("expected `k:coeff`, found `{term}`")))?;
            let k = parse_index(l.number, k, dim)?;
            if ks.contains(&k) {
                return Err(Error::parse(l.number, format!("component {} repeated", k + 1)));
            }
            ks.push(k);
            let v = parse_rational(l.number, v)?;
            c.set(&[k, j, i], -&v);
            c.set(&[k, i, j], v);
        }
    }
    Ok(c)
}

fn parse_tparams(lines: &[Line<'_>], header: usize) -> Result<TParamsSource> {
    let kv = parse_key_values(lines, "tparams")?;
    if let Some(&(line, value)) = kv.get("preset") {
        if kv.len() > 1 {
            return Err(Error::parse(line, "[tparams] takes either `preset` or a0..a7, not both"));
        }
        let spec: PresetSpec = value.parse().map_err(|e: Error| Error::parse(line, e.to_string()))?;
        return Ok(TParamsSource::Preset(spec));
    }
    for (k, &(line, _)) in &kv {
        let ok = k.len() == 2 && k.starts_with('a') && matches!(k.as_bytes()[1], b'0'..=b'7');
        if !ok {
            return Err(Error::parse(line, format!("unknown key `{k}` in [tparams]")));
        }
    }
    let mut coeffs: [Rational; 8] = Default::default();
    for (i, slot) in coeffs.iter_mut().enumerate() {
        let key = format!("a{i}");
        let &(line, value) = kv
            .get(key.as_str())
            .ok_or_else(|| Error::parse(header, format!("[tparams] is missing `{key}`")))?;
        *slot = parse_rational(line, value)?;
    }
    Ok(TParamsSource::Explicit(coeffs))
}

pub fn parse_manifest(text: &str) -> Result<Manifest> {
    let mut comments = Vec::new();
    let mut in_header = true;
    let mut sections: Vec<(&str, usize, Vec<Line<'_>>)> = Vec::new();
    let mut last_line = 0;

    for (n, raw) in text.lines().enumerate() {
        let number = n + 1;
        last_line = number;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        if in_header {
            if let Some(c) = raw.trim_start().strip_prefix('#') {
                comments.push(c.strip_prefix(' ').unwrap_or(c).trim_end().to_string());
                continue;
            }
        }
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        in_header = false;
        if let Some(name) = content.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let name = name.trim();
            if !SECTIONS.contains(&name) {
                return Err(Error::parse(number, format!("unknown section [{name}]")));
            }
            if sections.iter().any(|(s, _, _)| *s == name) {
                return Err(Error::parse(number, format!("duplicate section [{name}]")));
            }
            sections.push((name, number, Vec::new()));
            continue;
        }
        match sections.last_mut() {
            Some((_, _, lines)) => lines.push(Line { number, text: content }),
            None => return Err(Error::parse(number, "content before the first section")),
        }
    }

    let eof = last_line + 1;
    let section = |name: &str| sections.iter().find(|(s, _, _)| *s == name).map(|(_, h, l)| (*h, l.as_slice()));
    let missing = |name: &str| Error::parse(eof, format!("missing required section [{name}]"));

    let (_, manifold) = section("manifold").ok_or_else(|| missing("manifold"))?;
    let kv = parse_key_values(manifold, "manifold")?;
    for (k, &(line, _)) in &kv {
        if !["name", "dim", "epsilon"].contains(k) {
            return Err(Error::parse(line, format!("unknown key `{k}` in [manifold]")));
        }
    }
    let &(dim_line, dim_txt) = kv.get("dim").ok_or_else(|| Error::parse(eof, "[manifold] is missing `dim`"))?;
    let dim: usize = dim_txt
        .parse()
        .map_err(|_| Error::parse(dim_line, format!("bad dimension `{dim_txt}`")))?;
    if dim < 2 {
        return Err(Error::parse(dim_line, "dimension must be at least 2"));
    }
    let epsilon = match kv.get("epsilon") {
        None => None,
        Some(&(line, v)) => {
            let e = parse_rational(line, v)?;
            if e.abs() != Rational::one() {
                return Err(Error::parse(line, "epsilon must be 1 or -1"));
            }
            Some(e)
        }
    };
    let name = kv.get("name").map(|&(_, v)| v.to_string());

    let (metric_header, metric_lines) = section("metric").ok_or_else(|| missing("metric"))?;
    let metric_rows = parse_rows(metric_lines, dim, dim, "metric", metric_header)?;
    let metric = Tensor::matrix(&metric_rows, METRIC_VALENCE)?;

    let brackets = match section("brackets") {
        Some((_, lines)) => parse_brackets(lines, dim)?,
        None => Tensor::zeros(dim, &BRACKET_VALENCE),
    };
    let frame = FrameSpec::new(brackets, metric)?;

    let present: Vec<&str> = ["phi", "xi", "eta"].into_iter().filter(|s| section(s).is_some()).collect();
    let pc = match present.len() {
        0 => None,
        3 => {
            let (h, lines) = section("phi").expect("present");
            let rows = parse_rows(lines, dim, dim, "phi", h)?;
            // row i holds φ e_i, i.e. column i of the (Up, Down) tensor
            let phi = Tensor::from_fn(dim, &[Slot::Up, Slot::Down], |ix| rows[ix[1]][ix[0]].clone());
            let (h, lines) = section("xi").expect("present");
            let xi = parse_rows(lines, dim, 1, "xi", h)?.remove(0);
            let (h, lines) = section("eta").expect("present");
            let eta = parse_rows(lines, dim, 1, "eta", h)?.remove(0);
            let eps = epsilon
                .clone()
                .ok_or_else(|| Error::parse(eof, "[manifold] needs `epsilon` when a paracontact structure is given"))?;
            Some(ParacontactSpec::new(
                phi,
                Tensor::vector(xi, Slot::Up),
                Tensor::vector(eta, Slot::Down),
                eps,
            )?)
        }
        _ => {
            let absent = ["phi", "xi", "eta"].into_iter().find(|s| !present.contains(s)).expect("one absent");
            return Err(missing(absent));
        }
    };

    let tparams = match section("tparams") {
        Some((h, lines)) => Some(parse_tparams(lines, h)?),
        None => None,
    };

    Ok(Manifest {
        name,
        comments,
        epsilon,
        frame,
        pc,
        tparams,
    })
}

fn write_row(out: &mut String, row: impl Iterator<Item = Rational>) {
    let cells: Vec<String> = row.map(|r| r.to_string()).collect();
    out.push_str(&cells.join(" "));
    out.push('\n');
}

/// Canonical text form; `parse_manifest(&serialize_manifest(m)) == m`.
pub fn serialize_manifest(m: &Manifest) -> String {
    let mut out = String::new();
    for c in &m.comments {
        if c.is_empty() {
            out.push_str("#\n");
        } else {
            let _ = writeln!(out, "# {c}");
        }
    }
    let dim = m.frame.dim();
    out.push_str("[manifold]\n");
    if let Some(n) = &m.name {
        let _ = writeln!(out, "name = {n}");
    }
    let _ = writeln!(out, "dim = {dim}");
    if let Some(e) = &m.epsilon {
        let _ = writeln!(out, "epsilon = {e}");
    }

    out.push_str("\n[metric]\n");
    let g = m.frame.metric();
    for i in 0..dim {
        write_row(&mut out, (0..dim).map(|j| g.get(&[i, j]).clone()));
    }

    out.push_str("\n[brackets]\n");
    for i in 0..dim {
        for j in i + 1..dim {
            let terms: Vec<String> = m
                .frame
                .bracket(i, j)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| format!("{}:{v}", k + 1))
                .collect();
            if !terms.is_empty() {
                let _ = writeln!(out, "{} {} = {}", i + 1, j + 1, terms.join(" "));
            }
        }
    }

    if let Some(pc) = &m.pc {
        out.push_str("\n[phi]\n");
        for i in 0..dim {
            write_row(&mut out, (0..dim).map(|a| pc.phi().get(&[a, i]).clone()));
        }
        out.push_str("\n[xi]\n");
        write_row(&mut out, pc.xi().entries().iter().cloned());
        out.push_str("\n[eta]\n");
        write_row(&mut out, pc.eta().entries().iter().cloned());
    }

    match &m.tparams {
        None => {}
        Some(TParamsSource::Preset(p)) => {
            let _ = write!(out, "\n[tparams]\npreset = {p}\n");
        }
        Some(TParamsSource::Explicit(a)) => {
            out.push_str("\n[tparams]\n");
            for (i, v) in a.iter().enumerate() {
                let _ = writeln!(out, "a{i} = {v}");
            }
        }
    }
    out
}
