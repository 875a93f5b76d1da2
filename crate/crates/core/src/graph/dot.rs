use std::fmt::Write as _;

use super::Graph;
use crate::decomposition::SdKePartition;
use crate::error::{Error, Result};
use crate::matching::Matching;

const SD_COLOR: &str = "black";
const KE_COLOR: &str = "blue";
const MATCHED_COLOR: &str = "red";

/// Renders `g` as an undirected DOT graph. Nodes are named by label.
///
/// Matched edges are drawn thick and red; with a partition, SD vertices are
/// filled black and KE vertices blue.
pub fn export_dot(
    g: &Graph,
    partition: Option<&SdKePartition>,
    matching: Option<&Matching>,
) -> Result<String> {
    if let Some(m) = matching {
        m.validate(g)?;
    }
    let mut side = vec![None; g.order()];
    if let Some(p) = partition {
        for &v in p.sd_vertices.iter().chain(&p.ke_vertices) {
            g.check_vertex(v)?;
        }
        if p.sd_vertices.len() + p.ke_vertices.len() != g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: p.sd_vertices.len() + p.ke_vertices.len(),
                n: g.order(),
            });
        }
        for &v in &p.sd_vertices {
            side[v] = Some(SD_COLOR);
        }
        for &v in &p.ke_vertices {
            side[v] = Some(KE_COLOR);
        }
    }

    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match side[v] {
            Some(color) => writeln!(
                out,
                "  \"{}\" [style=filled, fillcolor={color}, fontcolor=white];",
                g.label(v)
            ),
            None => writeln!(out, "  \"{}\";", g.label(v)),
        }
        .unwrap();
    }
    for e in g.edges() {
        let matched = matching.is_some_and(|m| m.mate(e.u) == e.v);
        write!(out, "  \"{}\" -- \"{}\"", g.label(e.u), g.label(e.v)).unwrap();
        if matched {
            write!(out, " [color={MATCHED_COLOR}, penwidth=3, matched=true]").unwrap();
        }
        out.push_str(";\n");
    }
    out.push_str("}\n");
    Ok(out)
}
