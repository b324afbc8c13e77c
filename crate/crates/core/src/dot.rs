//! Graphviz export with landmark sets filled in colour.

use std::fmt::Write;

use crate::graph::Graph;
use crate::zoo::LandmarkAtlas;

const PALETTE: [&str; 8] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a6cee3", "#f781bf", "#999999",
];

/// Landmark kinds that get a colour, in priority order.
fn kind(name: &str) -> Option<usize> {
    if name.starts_with("S_") || name.starts_with("pair_") {
        Some(0)
    } else if name.starts_with("U_") || name.starts_with("K_") {
        Some(1)
    } else if name.contains("frontier") {
        Some(2)
    } else if name.starts_with("Z1_") || name.starts_with("Z2_") {
        Some(3)
    } else if name == "blue_ray" {
        Some(4)
    } else if name.starts_with("track_") {
        Some(5)
    } else if name.starts_with("entry_") {
        Some(6)
    } else if name == "v20" || name == "u" || name == "w" {
        Some(7)
    } else {
        None
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT text for `g`. A vertex in several landmarks takes the colour of the
/// highest-priority kind; its tooltip lists every landmark it belongs to.
pub fn export_dot(g: &Graph, atlas: Option<&LandmarkAtlas>) -> String {
    let mut colour: Vec<Option<usize>> = vec![None; g.n()];
    let mut member: Vec<Vec<&str>> = vec![Vec::new(); g.n()];
    if let Some(atlas) = atlas {
        for (name, ids) in atlas.iter() {
            let k = kind(name);
            for &v in ids.iter().filter(|&&v| v < g.n()) {
                member[v].push(name);
                colour[v] = match (colour[v], k) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
            }
        }
    }
    let mut out = String::from("graph G {\n  node [shape=circle, fontsize=8];\n");
    for v in 0..g.n() {
        let label = g.label(v).map_or_else(|| v.to_string(), escape);
        write!(out, "  {v} [label=\"{label}\"").unwrap();
        if let Some(k) = colour[v] {
            write!(out, ", style=filled, fillcolor=\"{}\"", PALETTE[k]).unwrap();
        }
        if !member[v].is_empty() {
            write!(out, ", tooltip=\"{}\"", escape(&member[v].join(" "))).unwrap();
        }
        out.push_str("];\n");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{gen_standard, Family};

    #[test]
    fn path_of_three() {
        let g = gen_standard(Family::Path(3)).unwrap();
        let dot = export_dot(&g, None);
        assert_eq!(dot.matches("label=").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 2);
        assert!(dot.starts_with("graph G {"));
    }

    #[test]
    fn landmarks_coloured() {
        let g = gen_standard(Family::Path(3)).unwrap();
        let mut atlas = LandmarkAtlas::default();
        atlas.insert("S_1", vec![1]);
        atlas.insert("eps_frontier", vec![1, 2]);
        let dot = export_dot(&g, Some(&atlas));
        assert!(dot.contains(&format!(
            "1 [label=\"1\", style=filled, fillcolor=\"{}\"",
            PALETTE[0]
        )));
        assert!(dot.contains(&format!("fillcolor=\"{}\"", PALETTE[2])));
        assert!(dot.contains("tooltip=\"S_1 eps_frontier\""));
        assert!(!dot.contains("0 [label=\"0\", style"));
    }
}
