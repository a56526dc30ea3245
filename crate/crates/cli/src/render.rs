use std::fmt::Write as _;

use paratensor::reference::format_vector;
use paratensor::symmetry::theorem_conditions;
use paratensor::{GeometryCache, Preset, Status, Tensor};

use crate::verify::VerifyReport;

fn status(s: Option<Status>) -> String {
    s.map_or_else(|| "-".to_string(), |s| s.to_string())
}

pub fn verify_text(r: &VerifyReport) -> String {
    let mut out = String::new();
    let eps = r.epsilon.as_ref().map_or_else(|| "none".to_string(), ToString::to_string);
    let _ = writeln!(out, "manifest {} (dim {}, epsilon {eps})", r.manifest, r.dim);
    if let Some(ts) = r.timestamp {
        let _ = writeln!(out, "timestamp {ts}");
    }
    if let Some(g) = &r.geometry {
        let _ = writeln!(out, "scalar curvature r = {}", g.scalar);
    }

    out.push_str("\nchecks\n");
    for c in &r.checks {
        let _ = writeln!(out, "  {c}");
    }

    if !r.verdicts.is_empty() {
        out.push_str("\nverdicts\n");
        for v in &r.verdicts {
            let _ = writeln!(
                out,
                "  {:<20} local {:<4}  global {:<4}  {}{}",
                v.params,
                status(v.local),
                status(v.global),
                v.conditions.verdict,
                if v.conditions.thm41_applicable { "" } else { "  (c3 = c4 = c5 = 0)" }
            );
        }
    }

    if !r.paper_discrepancies.is_empty() {
        out.push_str("\npublished example table\n");
        for d in &r.paper_discrepancies {
            let tag = if d.agrees { "agrees " } else { "DIFFERS" };
            let _ = writeln!(out, "  {tag} {}: published {}, engine {}", d.item, d.published, d.engine);
        }
    }

    if !r.skipped.is_empty() {
        out.push_str("\nskipped\n");
        for s in &r.skipped {
            let _ = writeln!(out, "  {s}");
        }
    }

    let failed = r.checks.iter().filter(|c| !c.passed()).count();
    let _ = writeln!(out, "\n{} checks, {failed} failed", r.checks.len());
    out
}

/// Nonzero entries, 1-based, one per line.
fn tensor_lines(out: &mut String, name: &str, t: &Tensor) {
    let _ = writeln!(out, "{name}");
    let mut any = false;
    for (ix, v) in t.iter() {
        if v.is_zero() {
            continue;
        }
        any = true;
        let idx: Vec<String> = ix.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(out, "  [{}] = {v}", idx.join(","));
    }
    if !any {
        out.push_str("  0\n");
    }
}

pub fn geometry_text(name: &str, geom: &GeometryCache) -> String {
    let m = geom.dim();
    let mut out = String::new();
    let _ = writeln!(out, "manifest {name} (dim {m})\n");
    out.push_str("connection nabla_{e_i} e_j\n");
    for i in 0..m {
        for j in 0..m {
            let _ = writeln!(out, "  nabla_e{} e{} = {}", i + 1, j + 1, format_vector(&geom.conn.nabla(i, j)));
        }
    }
    out.push('\n');
    tensor_lines(&mut out, "riemann R[l,i,j,k] (R(e_i,e_j)e_k = sum_l R[l,i,j,k] e_l)", &geom.riemann);
    out.push('\n');
    tensor_lines(&mut out, "ricci S[j,k]", &geom.ricci);
    out.push('\n');
    tensor_lines(&mut out, "ricci operator Q[a,b] (Q e_b = sum_a Q[a,b] e_a)", &geom.ricci_op);
    let _ = writeln!(out, "\nscalar curvature r = {}", geom.scalar);
    out
}

pub fn presets_text(m: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "presets in dimension {m}");
    for p in Preset::ALL {
        match p.params(m) {
            Err(e) => {
                let _ = writeln!(out, "  {:<16} {e}", p.name());
            }
            Ok(params) => {
                let coeffs: Vec<String> = params.coeffs.iter().map(ToString::to_string).collect();
                let c = theorem_conditions(&params, m);
                let _ = writeln!(
                    out,
                    "  {:<16} {:<4} a = ({})  c = ({}, {}, {}, {}, {})  {}{}",
                    p.name(),
                    p.symbol(),
                    coeffs.join(", "),
                    c.c1,
                    c.c2,
                    c.c3,
                    c.c4,
                    c.c5,
                    c.verdict,
                    if c.thm41_applicable { "" } else { "  thm41 n/a" }
                );
            }
        }
    }
    out
}
