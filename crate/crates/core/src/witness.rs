use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph, Vertex};

/// The graph a subdivision witness models.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pattern {
    K5,
    K33,
    /// Two copies of K5 glued along one edge. Vertices 0 and 1 are the ends
    /// of the shared (central) edge, 2..5 and 5..8 the two halves.
    M,
    Custom(Graph),
}

pub const M_CENTRAL: (Vertex, Vertex) = (0, 1);

pub fn m_graph() -> Graph {
    let mut g = Graph::empty(8);
    for half in [[0, 1, 2, 3, 4], [0, 1, 5, 6, 7]] {
        for (i, &u) in half.iter().enumerate() {
            for &v in &half[i + 1..] {
                g.add_edge(u, v).expect("simple");
            }
        }
    }
    g
}

impl Pattern {
    pub fn graph(&self) -> Graph {
        match self {
            Pattern::K5 => Graph::complete(5),
            Pattern::K33 => Graph::complete_bipartite(3, 3),
            Pattern::M => m_graph(),
            Pattern::Custom(g) => g.normalized().0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Pattern::K5 => "K5",
            Pattern::K33 => "K33",
            Pattern::M => "M",
            Pattern::Custom(_) => "custom",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchPath {
    /// Pattern edge `(i, j)` with `i < j`.
    pub pattern_edge: (usize, usize),
    /// Host vertices from `corners[i]` to `corners[j]`.
    pub vertices: Vec<Vertex>,
}

/// A subdivision of a pattern graph inside a host graph: pattern vertex `i`
/// sits on host vertex `corners[i]`, and each pattern edge is realised by a
/// host path between the corresponding corners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionWitness {
    pub pattern: Pattern,
    pub corners: Vec<Vertex>,
    pub paths: Vec<BranchPath>,
}

impl SubdivisionWitness {
    pub fn corner_set(&self) -> BTreeSet<Vertex> {
        self.corners.iter().copied().collect()
    }

    pub fn path(&self, i: usize, j: usize) -> Option<&[Vertex]> {
        let key = (i.min(j), i.max(j));
        self.paths
            .iter()
            .find(|p| p.pattern_edge == key)
            .map(|p| p.vertices.as_slice())
    }

    /// Host path between the corners of pattern vertices `i` and `j`,
    /// oriented from `i` to `j`.
    pub fn oriented_path(&self, i: usize, j: usize) -> Option<Vec<Vertex>> {
        let mut p = self.path(i, j)?.to_vec();
        if i > j {
            p.reverse();
        }
        Some(p)
    }

    pub fn edges(&self) -> BTreeSet<Edge> {
        self.paths
            .iter()
            .flat_map(|p| p.vertices.windows(2).map(|w| Edge::new(w[0], w[1])))
            .collect()
    }

    /// The subdivision as a subgraph of the host.
    pub fn subgraph(&self) -> Graph {
        let mut g = Graph::edge_subgraph(&self.edges());
        for &c in &self.corners {
            g.add_vertex(c);
        }
        g
    }

    /// Checks the witness against `host`: injective corners, one path per
    /// pattern edge with matching ends, paths made of host edges, and path
    /// interiors disjoint from each other and from the corners.
    pub fn validate(&self, host: &Graph) -> Result<(), String> {
        let pattern = self.pattern.graph();
        if self.corners.len() != pattern.vertex_count() {
            return Err(format!(
                "{} corners for a {}-vertex pattern",
                self.corners.len(),
                pattern.vertex_count()
            ));
        }
        let corners = self.corner_set();
        if corners.len() != self.corners.len() {
            return Err("corner map is not injective".into());
        }
        for (i, &c) in self.corners.iter().enumerate() {
            if !host.has_vertex(c) {
                return Err(format!("corner {c} not in host"));
            }
            if host.degree(c) < pattern.degree(i) {
                return Err(format!("corner {c} has host degree below pattern degree"));
            }
        }
        let wanted: BTreeSet<(usize, usize)> = pattern.edges().map(Edge::endpoints).collect();
        let given: BTreeSet<(usize, usize)> = self.paths.iter().map(|p| p.pattern_edge).collect();
        if wanted != given || given.len() != self.paths.len() {
            return Err("branch paths do not match the pattern edges".into());
        }
        let mut interior_seen = BTreeSet::new();
        for p in &self.paths {
            let (i, j) = p.pattern_edge;
            let v = &p.vertices;
            if v.len() < 2 || v[0] != self.corners[i] || v[v.len() - 1] != self.corners[j] {
                return Err(format!("path for {i}-{j} has wrong endpoints"));
            }
            for w in v.windows(2) {
                if !host.has_edge(w[0], w[1]) {
                    return Err(format!("path for {i}-{j} uses non-edge {}-{}", w[0], w[1]));
                }
            }
            for &x in &v[1..v.len() - 1] {
                if corners.contains(&x) || !interior_seen.insert(x) {
                    return Err(format!("path interiors are not disjoint at {x}"));
                }
            }
        }
        Ok(())
    }
}
