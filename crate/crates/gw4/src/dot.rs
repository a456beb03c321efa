//! Graphviz export. Points render as circles labeled with their sign,
//! surfaces as boxes labeled n=<euler>; edges carry the weight and the
//! edge Euler number when it is defined.

use crate::euler::edge_euler;
use crate::graph::{GraphOfWeights, VertexKind};

fn quoted(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(g: &GraphOfWeights) -> String {
    let mut out = String::from("graph gw {\n");
    for (id, kind) in g.vertices() {
        let attrs = match kind {
            VertexKind::Point { sign } => {
                format!("shape=circle, label=\"{id}\\n{sign}\"")
            }
            VertexKind::Surface { euler } => {
                format!("shape=box, label=\"{id}\\nn={euler}\"")
            }
        };
        out.push_str(&format!("  {} [{attrs}];\n", quoted(id)));
    }
    for (id, e) in g.edges() {
        let mut label = format!("{id}: w={}", e.label);
        if let Ok(n) = edge_euler(g, id) {
            label.push_str(&format!(", n_e={n}"));
        }
        out.push_str(&format!(
            "  {} -- {} [label=\"{label}\"];\n",
            quoted(&e.ends.0),
            quoted(&e.ends.1)
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{model, ModelName};

    #[test]
    fn dot_structure() {
        let g = model(ModelName::P, 2, 3).unwrap();
        let dot = export_dot(&g);
        assert!(dot.starts_with("graph gw {\n"));
        assert!(dot.ends_with("}\n"));
        assert!(dot.contains("\"p1\" [shape=circle, label=\"p1\\n+\"];"));
        assert!(dot.contains("\"p2\" [shape=circle, label=\"p2\\n-\"];"));
        assert!(dot.contains("\"p1\" -- \"p3\" [label=\"e3: w=3, n_e=1\"];"));
    }

    #[test]
    fn dot_surface_box() {
        let mut g = GraphOfWeights::new();
        g.add_surface("F", -2).unwrap();
        let dot = export_dot(&g);
        assert!(dot.contains("\"F\" [shape=box, label=\"F\\nn=-2\"];"));
    }
}
