use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::InputError;
use crate::graph::{Edge, PlanarGraph};
use crate::weight::Weight;

/// On-disk graph format.
///
/// `edges[i] = [u, v, "w"]`; `rotation[x]` lists edge-ends (2i at u, 2i+1 at v);
/// `terminal_faces` are given as edge-id lists.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphDocument {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, Weight)>,
    pub rotation: Vec<Vec<usize>>,
    #[serde(default)]
    pub terminals: Vec<usize>,
    #[serde(default)]
    pub terminal_faces: Vec<Vec<usize>>,
}

/// A parsed instance: graph, terminals, and terminal faces as face ids.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: PlanarGraph,
    pub terminals: Vec<usize>,
    pub faces: Vec<usize>,
}

impl GraphDocument {
    pub fn from_graph(g: &PlanarGraph, terminals: &[usize], faces: &[usize]) -> Self {
        GraphDocument {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|e| (e.u, e.v, e.weight.clone())).collect(),
            rotation: g.rotations().to_vec(),
            terminals: terminals.to_vec(),
            terminal_faces: faces.iter().map(|&f| g.face(f).edges.clone()).collect(),
        }
    }

    pub fn into_instance(self) -> Result<Instance, InputError> {
        let edges = self.edges.into_iter().map(|(u, v, w)| Edge::new(u, v, w)).collect();
        let graph = PlanarGraph::new(self.vertices, edges, self.rotation)?;
        for &t in &self.terminals {
            if t >= graph.vertex_count() {
                return Err(InputError::BadTerminal(t));
            }
        }
        let mut faces = Vec::new();
        for (i, fe) in self.terminal_faces.iter().enumerate() {
            let mut want = fe.clone();
            want.sort_unstable();
            want.dedup();
            let id = graph
                .faces()
                .iter()
                .position(|f| f.edges == want)
                .ok_or(InputError::FaceNotFound(i))?;
            faces.push(id);
        }
        Ok(Instance { graph, terminals: self.terminals, faces })
    }
}

pub fn parse_instance(json: &str) -> Result<Instance, InputError> {
    let doc: GraphDocument = serde_json::from_str(json)?;
    doc.into_instance()
}

pub fn instance_to_json(g: &PlanarGraph, terminals: &[usize], faces: &[usize]) -> String {
    serde_json::to_string_pretty(&GraphDocument::from_graph(g, terminals, faces)).expect("serializable")
}

/// Graphviz rendering; terminals are boxes, `highlight` vertices are filled.
pub fn to_dot(g: &PlanarGraph, terminals: &[usize], highlight: &[usize], labels: Option<&[String]>) -> String {
    let mut s = String::from("graph G {\n  node [shape=circle, fontsize=8];\n");
    for v in 0..g.vertex_count() {
        let label = labels.map_or_else(|| v.to_string(), |l| l[v].clone());
        let mut attrs = format!("label=\"{label}\"");
        if terminals.contains(&v) {
            attrs.push_str(", shape=box");
        }
        if highlight.contains(&v) {
            attrs.push_str(", style=filled, fillcolor=lightgrey");
        }
        let _ = writeln!(s, "  {v} [{attrs}];");
    }
    for (i, e) in g.edges().iter().enumerate() {
        let _ = writeln!(s, "  {} -- {} [label=\"{}\", id=\"e{i}\"];", e.u, e.v, e.weight);
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = r#"{
        "vertices": 4,
        "edges": [[0,1,"1"],[1,2,"2"],[2,3,"3"],[3,0,"4"]],
        "rotation": [[0,7],[2,1],[4,3],[6,5]],
        "terminals": [0,2],
        "terminal_faces": [[3,2,1,0]]
    }"#;

    #[test]
    fn round_trip() {
        let inst = parse_instance(SQUARE).unwrap();
        assert_eq!(inst.graph.faces().len(), 2);
        assert_eq!(inst.faces, vec![0]);
        let back = instance_to_json(&inst.graph, &inst.terminals, &inst.faces);
        let again = parse_instance(&back).unwrap();
        assert_eq!(again.graph.edges(), inst.graph.edges());
        assert!(to_dot(&inst.graph, &inst.terminals, &[], None).contains("0 -- 1"));
    }

    #[test]
    fn bad_weight_is_rejected() {
        let bad = SQUARE.replace("\"4\"", "\"-4\"");
        assert!(matches!(parse_instance(&bad), Err(InputError::Json(_))));
    }
}
