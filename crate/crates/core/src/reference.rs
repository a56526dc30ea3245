//! Comparison of the engine's geometry with the printed example table for
//! the E3(ε) frame (`[e1,e3] = e1`, `[e2,e3] = e2`, `g = diag(1, 1, ε)`).
//!
//! The printed table repeats the bracket pair (e1,e2), gives nonzero
//! `∇_{e3} e1` and `∇_{e3} e2`, and its curvature and Ricci entries do not
//! match the connection it lists. Every entry is reported, agreeing or not.

use serde::Serialize;

use crate::catalog;
use crate::curvature::GeometryCache;
use crate::frame::FrameSpec;
use crate::paracontact::ParacontactSpec;
use crate::rational::{q, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub item: String,
    pub published: String,
    pub engine: String,
    pub agrees: bool,
}

/// `Some(ε)` when the frame and structure are exactly E3(ε).
pub fn detect_e3(spec: &FrameSpec, pc: Option<&ParacontactSpec>) -> Option<i64> {
    [1, -1].into_iter().find(|&eps| {
        *spec == catalog::e3_frame(eps) && pc.is_none_or(|p| *p == catalog::e3_paracontact(eps))
    })
}

/// Linear combination such as `-e1 + 2 e3`, or `0`.
pub fn format_vector(v: &[Rational]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.signum() < 0;
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn vec3(a: i64, b: i64, c: i64) -> Vec<Rational> {
    vec![q(a, 1), q(b, 1), q(c, 1)]
}

fn entry(item: String, published: String, engine: String) -> TableEntry {
    let agrees = published == engine;
    TableEntry {
        item,
        published,
        engine,
        agrees,
    }
}

fn column(t: &crate::tensor::Tensor, fixed: &[usize]) -> Vec<Rational> {
    (0..3)
        .map(|l| {
            let mut ix = vec![l];
            ix.extend_from_slice(fixed);
            t.get(&ix).clone()
        })
        .collect()
}

/// Entry-by-entry comparison for E3(ε). `geom` must belong to E3(ε).
pub fn e3_table_comparison(eps: i64, geom: &GeometryCache) -> Vec<TableEntry> {
    let e = eps;
    let mut out = vec![entry(
        "bracket [e2,e3]".into(),
        "listed as [e1,e2] = e2 (pair repeated)".into(),
        "[e2,e3] = e2".into(),
    )];

    // ∇_{e_i} e_j, printed values
    let nabla: [((usize, usize), Vec<Rational>); 9] = [
        ((0, 0), vec3(0, 0, -e)),
        ((1, 0), vec3(0, 0, 0)),
        ((2, 0), vec3(-1, 0, 0)),
        ((0, 1), vec3(0, 0, 0)),
        ((1, 1), vec3(0, 0, -e)),
        ((2, 1), vec3(0, -1, 0)),
        ((0, 2), vec3(1, 0, 0)),
        ((1, 2), vec3(0, 1, 0)),
        ((2, 2), vec3(0, 0, 0)),
    ];
    for ((i, j), published) in nabla {
        out.push(entry(
            format!("nabla_e{} e{}", i + 1, j + 1),
            format_vector(&published),
            format_vector(&geom.conn.nabla(i, j)),
        ));
    }

    // R(e_i, e_j) e_k, printed values
    let curvature: [((usize, usize, usize), Vec<Rational>); 9] = [
        ((0, 1, 0), vec3(0, e, 0)),
        ((1, 2, 0), vec3(0, 0, 0)),
        ((0, 2, 0), vec3(0, 0, 2 * e)),
        ((0, 1, 1), vec3(-e, 0, 0)),
        ((1, 2, 1), vec3(0, 0, 2 * e)),
        ((0, 2, 1), vec3(0, 0, 0)),
        ((0, 1, 2), vec3(0, 0, 0)),
        ((1, 2, 2), vec3(0, 0, 0)),
        ((0, 2, 2), vec3(0, 0, 0)),
    ];
    for ((i, j, k), published) in curvature {
        out.push(entry(
            format!("R(e{},e{})e{}", i + 1, j + 1, k + 1),
            format_vector(&published),
            format_vector(&column(&geom.riemann, &[i, j, k])),
        ));
    }

    let ricci_published = [q(-(e + 2), 1), q(-(e + 2), 1), q(0, 1)];
    for (i, published) in ricci_published.iter().enumerate() {
        out.push(entry(
            format!("S(e{},e{})", i + 1, i + 1),
            published.to_string(),
            geom.ricci.get(&[i, i]).to_string(),
        ));
    }
    out.push(entry(
        "r".into(),
        q(-2 * (e + 2), 1).to_string(),
        geom.scalar.to_string(),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_vectors() {
        assert_eq!(format_vector(&vec3(0, 0, 0)), "0");
        assert_eq!(format_vector(&vec3(-1, 0, 2)), "-e1 + 2 e3");
        assert_eq!(format_vector(&[q(1, 2), q(-1, 1), q(0, 1)]), "1/2 e1 - e2");
    }

    #[test]
    fn scalar_entry_agrees_only_for_plus() {
        for (eps, agrees) in [(1, true), (-1, false)] {
            let geom = GeometryCache::new(&catalog::e3_frame(eps)).unwrap();
            let table = e3_table_comparison(eps, &geom);
            let r = table.iter().find(|t| t.item == "r").unwrap();
            assert_eq!(r.agrees, agrees);
            assert_eq!(r.engine, (-6 * eps).to_string());
        }
    }

    #[test]
    fn flags_connection_conflicts() {
        let geom = GeometryCache::new(&catalog::e3_frame(1)).unwrap();
        let table = e3_table_comparison(1, &geom);
        let bad: Vec<&str> = table.iter().filter(|t| !t.agrees).map(|t| t.item.as_str()).collect();
        assert!(bad.contains(&"nabla_e3 e1"));
        assert!(bad.contains(&"nabla_e3 e2"));
        assert!(!bad.contains(&"nabla_e1 e3"));
        assert!(bad.contains(&"bracket [e2,e3]"));
    }

    #[test]
    fn detects_only_e3() {
        assert_eq!(detect_e3(&catalog::e3_frame(-1), Some(&catalog::e3_paracontact(-1))), Some(-1));
        assert_eq!(detect_e3(&catalog::heisenberg_frame(), None), None);
    }
}
