use serde::{Deserialize, Serialize};

use super::InclusionGraph;

/// Edge list with 1-based vertex indices in canonical family order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListDoc {
    pub n: usize,
    pub m: usize,
    /// Vertex sets, as 1-based element lists.
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub u: usize,
    pub v: usize,
    pub kind: String,
}

impl EdgeListDoc {
    pub fn from_graph(g: &InclusionGraph) -> Self {
        EdgeListDoc {
            n: g.n(),
            m: g.edge_count(),
            vertices: g.vertices().iter().map(|w| w.to_vec()).collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeDoc { u: e.u + 1, v: e.v + 1, kind: e.kind.as_str().to_string() })
                .collect(),
        }
    }

    /// `n m` header followed by one `i j kind` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for e in &self.edges {
            out.push_str(&format!("{} {} {}\n", e.u, e.v, e.kind));
        }
        out
    }
}
