//! DOT and JSON forms of a [`DegenerationGraph`].

use crate::degen::{DegenerationGraph, EdgeStatus};
use crate::error::Result;
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Dot,
    Json,
}

fn dot_id(id: &str) -> String {
    if id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') && !id.starts_with(|c: char| c.is_ascii_digit()) {
        id.to_string()
    } else {
        format!("\"{}\"", id.replace('"', "\\\""))
    }
}

/// Solid edges are witnessed, dashed ones transitive; edges without a
/// witness are grey and labelled.
pub fn emit_dot(g: &DegenerationGraph) -> String {
    let mut out = String::from("digraph degenerations {\n");
    if !g.nodes.is_empty() {
        out.push_str("  rankdir=TB;\n");
    }
    for n in &g.nodes {
        let _ = writeln!(out, "  {} [label=\"{}\\nder {}\"];", dot_id(&n.id), n.id, n.fingerprint.der_dim);
    }
    for e in &g.edges {
        let mut attrs = vec![format!(
            "style={}",
            if e.status.is_direct() { "solid" } else { "dashed" }
        )];
        if !e.status.is_witnessed() {
            attrs.push("color=gray".into());
        }
        let mut label = Vec::new();
        if matches!(e.status, EdgeStatus::Unwitnessed | EdgeStatus::TransitiveUnwitnessed) {
            label.push(e.status.to_string());
        }
        if e.improper {
            label.push("improper".into());
        }
        if !label.is_empty() {
            attrs.push(format!("label=\"{}\"", label.join(", ")));
        }
        let _ = writeln!(out, "  {} -> {} [{}];", dot_id(&e.source), dot_id(&e.target), attrs.join(", "));
    }
    out.push_str("}\n");
    out
}

pub fn emit_json(g: &DegenerationGraph) -> String {
    serde_json::to_string_pretty(g).expect("plain data serializes")
}

pub fn parse_graph_json(text: &str) -> Result<DegenerationGraph> {
    Ok(serde_json::from_str(text)?)
}

/// One line per node and edge.
pub fn emit_text(g: &DegenerationGraph) -> String {
    let mut out = String::new();
    for n in &g.nodes {
        let _ = writeln!(out, "node {} der {} orbit {}", n.id, n.fingerprint.der_dim, n.orbit_dim);
    }
    for e in &g.edges {
        let _ = writeln!(
            out,
            "edge {} -> {} {}{}",
            e.source,
            e.target,
            e.status,
            if e.improper { " improper" } else { "" }
        );
    }
    for r in &g.refutations {
        let _ = writeln!(out, "refuted {} -> {} by {}", r.source, r.target, r.fired.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degen::build_graph;
    use crate::shell::{catalog::Catalog, witnesses};

    #[test]
    fn empty_graph() {
        let g = DegenerationGraph::default();
        assert_eq!(emit_dot(&g), "digraph degenerations {\n}\n");
        assert_eq!(parse_graph_json(&emit_json(&g)).unwrap(), g);
    }

    #[test]
    fn seven_dim_graph() {
        let ids = witnesses::nodes(7);
        let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
        let mut g = build_graph(&Catalog, &ids, &witnesses::claims_7().unwrap()).unwrap();
        g.refute("D7_14", "D7_13").unwrap();
        let dot = emit_dot(&g);
        assert!(dot.contains("  D7_14 -> D7_07 [style=solid];"));
        assert!(dot.contains("D7_12 -> D7_04 [style=solid, color=gray, label=\"UNWITNESSED\"]"));
        assert_eq!(parse_graph_json(&emit_json(&g)).unwrap(), g);
        assert!(emit_text(&g).contains("refuted D7_14 -> D7_13 by der_dim strict"));
    }
}
