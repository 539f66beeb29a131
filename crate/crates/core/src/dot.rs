//! Graphviz output for class posets and egg-box diagrams.
//!
//! Node names are the relation letter followed by the class id (`L3`,
//! `R1`, `J0`); nodes and edges are emitted in sorted order so the text
//! depends only on the structure.

use std::fmt::Write;

use crate::error::Result;
use crate::green::{GreenStructure, Preorder, Relation};

fn relation_of(k: Preorder) -> Relation {
    match k {
        Preorder::L => Relation::L,
        Preorder::R => Relation::R,
        Preorder::J => Relation::J,
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn member_list(members: &[usize], label: &dyn Fn(usize) -> String) -> String {
    members
        .iter()
        .map(|&a| label(a))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Hasse diagram of the `K`-class poset, larger classes on top.
pub fn class_poset(g: &GreenStructure, k: Preorder, label: &dyn Fn(usize) -> String) -> String {
    let name = k.name();
    let mut out = format!("digraph {name} {{\n  rankdir=TB;\n  node [shape=box];\n");
    for (c, members) in g.classes(relation_of(k)).iter().enumerate() {
        let text = format!("{name}{c}: {}", member_list(members, label));
        writeln!(out, "  {name}{c} [label={}];", quote(&text)).unwrap();
    }
    let mut edges = g.covers(k).to_vec();
    edges.sort_unstable();
    for (up, low) in edges {
        writeln!(out, "  {name}{up} -> {name}{low};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Every D-class as an HTML-like table: rows are R-classes, columns are
/// L-classes, cells list the H-class members.
pub fn eggbox(g: &GreenStructure, label: &dyn Fn(usize) -> String) -> Result<String> {
    let mut out = String::from("digraph eggbox {\n  node [shape=plaintext];\n");
    for d in 0..g.class_count(Relation::D) {
        let grid = g.eggbox(d)?;
        let mut html = String::from("<table border=\"0\" cellborder=\"1\" cellspacing=\"0\">");
        for (i, row) in grid.elements.iter().enumerate() {
            html.push_str("<tr>");
            for (j, cell) in row.iter().enumerate() {
                let text = member_list(cell, label)
                    .replace('&', "&amp;")
                    .replace('<', "&lt;")
                    .replace('>', "&gt;");
                write!(
                    html,
                    "<td port=\"R{}_L{}\">{text}</td>",
                    grid.rows[i], grid.cols[j]
                )
                .unwrap();
            }
            html.push_str("</tr>");
        }
        html.push_str("</table>");
        writeln!(out, "  D{d} [label=<{html}>];").unwrap();
    }
    let mut edges: Vec<(usize, usize)> = d_covers(g);
    edges.sort_unstable();
    for (up, low) in edges {
        writeln!(out, "  D{up} -> D{low};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// Covers between D-classes induced by the J-order. For finite objects
/// D = J, so these are the J covers renamed.
fn d_covers(g: &GreenStructure) -> Vec<(usize, usize)> {
    let d_of_j = |c: usize| {
        let rep = g.classes(Relation::J)[c][0];
        g.class_of(Relation::D, rep)
    };
    g.covers(Preorder::J)
        .iter()
        .map(|&(u, l)| (d_of_j(u), d_of_j(l)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    #[test]
    fn poset_is_deterministic() {
        let s = named::t2();
        let g = GreenStructure::of(&s);
        let a = class_poset(&g, Preorder::L, &|x| s.label(x));
        let b = class_poset(&GreenStructure::of(&s), Preorder::L, &|x| s.label(x));
        assert_eq!(a, b);
        assert!(a.contains("L0 [label="));
        assert_eq!(a.matches(" -> ").count(), g.covers(Preorder::L).len());
    }

    #[test]
    fn eggbox_has_one_node_per_d_class() {
        let s = named::t2();
        let g = GreenStructure::of(&s);
        let text = eggbox(&g, &|x| s.label(x)).unwrap();
        assert_eq!(text.matches("[label=<").count(), 2);
        assert!(text.contains("D0 -> D1") || text.contains("D1 -> D0"));
    }
}
