use std::collections::{BTreeSet, VecDeque};

use super::{Edge, Graph, Vertex};

/// A bridge of a graph relative to a subgraph `H`: either a chord of `H`, or
/// a component of `G - V(H)` together with its edges into `V(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeOf {
    pub attachments: BTreeSet<Vertex>,
    pub internal: BTreeSet<Vertex>,
    pub edges: BTreeSet<Edge>,
}

impl BridgeOf {
    pub fn is_chord(&self) -> bool {
        self.internal.is_empty()
    }

    pub fn graph(&self) -> Graph {
        Graph::edge_subgraph(&self.edges)
    }
}

pub fn bridges_of(
    g: &Graph,
    h_vertices: &BTreeSet<Vertex>,
    h_edges: &BTreeSet<Edge>,
) -> Vec<BridgeOf> {
    let mut out = Vec::new();
    for e in g.edges() {
        if h_vertices.contains(&e.u()) && h_vertices.contains(&e.v()) && !h_edges.contains(&e) {
            out.push(BridgeOf {
                attachments: BTreeSet::from([e.u(), e.v()]),
                internal: BTreeSet::new(),
                edges: BTreeSet::from([e]),
            });
        }
    }

    let mut seen: BTreeSet<Vertex> = BTreeSet::new();
    for s in g.vertices() {
        if h_vertices.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut bridge = BridgeOf {
            attachments: BTreeSet::new(),
            internal: BTreeSet::new(),
            edges: BTreeSet::new(),
        };
        let mut queue = VecDeque::from([s]);
        seen.insert(s);
        while let Some(v) = queue.pop_front() {
            bridge.internal.insert(v);
            for w in g.neighbors(v) {
                bridge.edges.insert(Edge::new(v, w));
                if h_vertices.contains(&w) {
                    bridge.attachments.insert(w);
                } else if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        out.push(bridge);
    }
    out
}
