//! The graph text format.
//!
//! One declaration per line; `#` starts a comment. An optional header line
//! `!type dag|admg|mag|summary` (default `admg`) selects the structural
//! invariants the parser enforces. `vertex <label>` declares an isolated
//! vertex; edges are written `a -> b`, `a <-> b` or `a - b`. Vertex
//! indices are assigned in order of first mention.
//!
//! Serialization emits the header, vertex declarations sorted by label,
//! then edges sorted by kind (directed, bidirected, undirected) and
//! endpoint labels. Parsing a serialized graph reproduces it exactly.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, GraphType, MixedGraph};

/// Parses the text format. See the module docs for the grammar.
pub fn parse(text: &str) -> Result<MixedGraph> {
    let mut gtype: Option<GraphType> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, u32> = HashMap::new();
    let mut edges: Vec<(u32, u32, EdgeKind)> = Vec::new();
    let mut saw_content = false;

    let intern = |label: &str,
                  labels: &mut Vec<String>,
                  index: &mut HashMap<String, u32>|
     -> u32 {
        if let Some(&i) = index.get(label) {
            return i;
        }
        let i = labels.len() as u32;
        labels.push(label.to_string());
        index.insert(label.to_string(), i);
        i
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse {
            line: lineno + 1,
            msg,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["!type", name] => {
                if saw_content || gtype.is_some() {
                    return Err(err("'!type' must be the first declaration".into()));
                }
                gtype = Some(
                    GraphType::from_name(name)
                        .ok_or_else(|| err(format!("unknown graph type '{name}'")))?,
                );
            }
            ["vertex", label] => {
                saw_content = true;
                check_label(label).map_err(|m| err(m))?;
                if index.contains_key(*label) {
                    return Err(err(format!("vertex '{label}' already declared")));
                }
                intern(label, &mut labels, &mut index);
            }
            [a, op, b] => {
                saw_content = true;
                let kind = match *op {
                    "->" => EdgeKind::Directed,
                    "<->" => EdgeKind::Bidirected,
                    "-" => EdgeKind::Undirected,
                    other => return Err(err(format!("unknown edge operator '{other}'"))),
                };
                check_label(a).map_err(|m| err(m))?;
                check_label(b).map_err(|m| err(m))?;
                let u = intern(a, &mut labels, &mut index);
                let v = intern(b, &mut labels, &mut index);
                edges.push((u, v, kind));
            }
            _ => return Err(err(format!("unrecognized declaration '{line}'"))),
        }
    }

    MixedGraph::new(labels, edges, gtype.unwrap_or_default())
}

fn check_label(label: &str) -> std::result::Result<(), String> {
    if label.is_empty() {
        return Err("empty vertex label".into());
    }
    if matches!(label, "vertex" | "->" | "<->" | "-") || label.starts_with('!') {
        return Err(format!("reserved token '{label}' cannot be a vertex label"));
    }
    Ok(())
}

/// Serializes a graph to the canonical text form.
pub fn serialize(g: &MixedGraph) -> String {
    let mut out = format!("!type {}\n", g.gtype().name());
    let mut labels: Vec<&str> = g.labels().iter().map(String::as_str).collect();
    labels.sort_unstable();
    for label in labels {
        out.push_str("vertex ");
        out.push_str(label);
        out.push('\n');
    }
    let mut lines: Vec<(EdgeKind, String, String)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (g.label(e.u).to_string(), g.label(e.v).to_string());
            match e.kind {
                EdgeKind::Directed => (e.kind, a, b),
                _ => (e.kind, a.clone().min(b.clone()), a.max(b)),
            }
        })
        .collect();
    lines.sort();
    for (kind, a, b) in lines {
        out.push_str(&format!("{a} {} {b}\n", kind.symbol()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_edge_kinds_and_comments() {
        let g = parse("# a comment\n!type summary\nvertex solo\na - b # trailing\nb -> c\nc <-> d\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.vertex("solo"), Some(0));
    }

    #[test]
    fn default_type_is_admg() {
        let g = parse("1 -> 2").unwrap();
        assert_eq!(g.gtype(), GraphType::Admg);
    }

    #[test]
    fn unknown_tokens_are_rejected() {
        assert!(matches!(parse("a => b"), Err(Error::Parse { .. })));
        assert!(matches!(parse("a b c d"), Err(Error::Parse { .. })));
        assert!(matches!(parse("!type pag\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("a -> b\n!type dag"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("vertex a\nvertex a"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn serialize_parse_round_trip() {
        let g = parse("!type summary\nb -> z\na - c\nvertex q\nz <-> y\n").unwrap();
        let text = serialize(&g);
        let g2 = parse(&text).unwrap();
        assert!(g.same_structure(&g2));
        // Canonical-form files are fixed points of parse-then-serialize.
        assert_eq!(serialize(&g2), text);
    }
}
