//! The obstruction catalog and the procedures that verify and regenerate it.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CatalogError, GraphError};
use crate::graph::{canonical_form, format, Edge, Graph, Vertex};
use crate::structure::is_k33_free;
use crate::toroidality::{decide_toroidal, Status};
use crate::witness::{m_graph, M_CENTRAL};

const CATALOG: &str = include_str!("../data/catalog.g6");

/// Largest graph the split closure will produce.
pub const SPLIT_VERTEX_CEILING: usize = 16;

pub const MINOR_ORDER: [&str; 4] = ["G1", "G2", "G3", "G4"];
pub const TOPOLOGICAL: [&str; 11] = [
    "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionKind {
    MinorOrder,
    TopologicalOnly,
    Reference,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionRecord {
    pub name: String,
    pub graph: Graph,
    pub kind: ObstructionKind,
}

fn kind_of(name: &str) -> ObstructionKind {
    if MINOR_ORDER.contains(&name) {
        ObstructionKind::MinorOrder
    } else if TOPOLOGICAL.contains(&name) {
        ObstructionKind::TopologicalOnly
    } else {
        ObstructionKind::Reference
    }
}

impl ObstructionRecord {
    pub fn new(name: &str, graph: Graph) -> Result<Self, CatalogError> {
        let record = ObstructionRecord {
            name: name.to_string(),
            graph,
            kind: kind_of(name),
        };
        record.check()?;
        Ok(record)
    }

    fn check(&self) -> Result<(), CatalogError> {
        let invalid = |reason: String| CatalogError::Invalid {
            name: self.name.clone(),
            reason,
        };
        if self.graph.min_degree() < 3 {
            return Err(invalid(format!(
                "minimum degree {}",
                self.graph.min_degree()
            )));
        }
        if self.kind != ObstructionKind::Reference && !is_k33_free(&self.graph) {
            return Err(invalid("contains a K3,3 subdivision".into()));
        }
        Ok(())
    }
}

/// M with its central edge replaced by K5 - e, the ends of the missing edge
/// identified with the ends of the central edge.
pub fn g4() -> Graph {
    let (x, y) = M_CENTRAL;
    let mut g = m_graph();
    g.remove_edge(Edge::new(x, y));
    let k5e = Graph::complete(5)
        .delete_edge(Edge::new(0, 1))
        .expect("K5 has edge 0-1");
    g.union_with(&k5e.relabel(|v| match v {
        0 => x,
        1 => y,
        other => other + 6,
    }));
    g
}

/// Parses `name graph6` lines; `#` starts a comment.
pub fn parse_catalog(text: &str) -> Result<Vec<ObstructionRecord>, CatalogError> {
    let mut out = Vec::new();
    let mut names = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let malformed = |msg: String| CatalogError::Malformed { line: i + 1, msg };
        let mut fields = line.split_whitespace();
        let (Some(name), Some(code), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed("expected `name graph6`".into()));
        };
        if !names.insert(name.to_string()) {
            return Err(malformed(format!("duplicate name {name}")));
        }
        let graph = format::parse_graph6(code).map_err(|e| match e {
            GraphError::Parse { msg, .. } => malformed(msg),
            other => malformed(other.to_string()),
        })?;
        out.push(ObstructionRecord::new(name, graph)?);
    }
    Ok(out)
}

pub fn builtin(name: &str) -> Result<Graph, CatalogError> {
    match name {
        "K5" => Ok(Graph::complete(5)),
        "K33" | "K3,3" => Ok(Graph::complete_bipartite(3, 3)),
        "M" => Ok(m_graph()),
        "G4" => Ok(g4()),
        _ => parse_catalog(CATALOG)
            .expect("bundled catalog is valid")
            .into_iter()
            .find(|r| r.name == name)
            .map(|r| r.graph)
            .ok_or_else(|| CatalogError::UnknownName(name.to_string())),
    }
}

/// G1 to G11 in order, from the bundled data plus the constructed G4.
pub fn catalog() -> Vec<ObstructionRecord> {
    catalog_from(CATALOG).expect("bundled catalog is valid")
}

/// Like [`catalog`], reading the transcribed entries from `text`.
pub fn catalog_from(text: &str) -> Result<Vec<ObstructionRecord>, CatalogError> {
    let mut records = parse_catalog(text)?;
    if !records.iter().any(|r| r.name == "G4") {
        records.push(ObstructionRecord::new("G4", g4())?);
    }
    let rank = |name: &str| {
        TOPOLOGICAL
            .iter()
            .position(|&n| n == name)
            .unwrap_or(usize::MAX)
    };
    records.sort_by_key(|r| (rank(&r.name), r.name.clone()));
    Ok(records)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerificationKind {
    Minor,
    Topological,
}

impl fmt::Display for VerificationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerificationKind::Minor => "minor",
            VerificationKind::Topological => "topological",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeOutcome {
    pub edge: Edge,
    pub deleted: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contracted: Option<Status>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: VerificationKind,
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub status: Status,
    pub outcomes: Vec<EdgeOutcome>,
    pub passed: bool,
    pub failures: Vec<String>,
}

impl VerificationReport {
    /// Whether some contraction leaves the graph non-toroidal.
    pub fn fails_contraction(&self) -> bool {
        self.outcomes
            .iter()
            .any(|o| o.contracted.is_some_and(|s| s != Status::Toroidal))
    }
}

fn verify(g: &Graph, kind: VerificationKind) -> VerificationReport {
    let mut failures = Vec::new();
    if g.min_degree() < 3 {
        failures.push(format!("minimum degree {} < 3", g.min_degree()));
    }
    let status = decide_toroidal(g).status;
    match status {
        Status::NonToroidal => {}
        Status::Toroidal => failures.push("graph is toroidal".into()),
        Status::NotInClass => failures.push("graph contains a K3,3 subdivision".into()),
    }
    let edges: Vec<Edge> = g.edges().collect();
    let outcomes: Vec<EdgeOutcome> = edges
        .par_iter()
        .map(|&e| EdgeOutcome {
            edge: e,
            deleted: decide_toroidal(&g.delete_edge(e).expect("edge of g")).status,
            contracted: (kind == VerificationKind::Minor)
                .then(|| decide_toroidal(&g.contract_edge(e).expect("edge of g")).status),
        })
        .collect();
    for o in &outcomes {
        if o.deleted != Status::Toroidal {
            failures.push(format!("deleting {} leaves {}", o.edge, o.deleted));
        }
        if let Some(s) = o.contracted.filter(|&s| s != Status::Toroidal) {
            failures.push(format!("contracting {} leaves {}", o.edge, s));
        }
    }
    VerificationReport {
        kind,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        min_degree: g.min_degree(),
        status,
        outcomes,
        passed: failures.is_empty(),
        failures,
    }
}

/// Non-toroidal, minimum degree three, and toroidal after deleting or
/// contracting any single edge.
pub fn verify_minor_obstruction(g: &Graph) -> VerificationReport {
    verify(g, VerificationKind::Minor)
}

/// Non-toroidal, minimum degree three, and toroidal after deleting any
/// single edge.
pub fn verify_topological_obstruction(g: &Graph) -> VerificationReport {
    verify(g, VerificationKind::Topological)
}

/// Replaces `vertex` by two adjacent vertices, the old one keeping `keep`
/// and a new one taking `moved`. Both parts have at least two neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitOperation {
    pub vertex: Vertex,
    pub keep: BTreeSet<Vertex>,
    pub moved: BTreeSet<Vertex>,
}

impl SplitOperation {
    /// Returns the split graph and the label of the new vertex.
    pub fn apply(&self, g: &Graph) -> (Graph, Vertex) {
        let w = g.next_label();
        let mut h = g.clone();
        h.add_vertex(w);
        for &x in &self.moved {
            h.remove_edge(Edge::new(self.vertex, x));
            h.add_edge(w, x).expect("distinct");
        }
        h.add_edge(self.vertex, w).expect("distinct");
        (h, w)
    }
}

/// Every split of every vertex, each unordered partition once.
pub fn splits(g: &Graph) -> Vec<SplitOperation> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let nbrs: Vec<Vertex> = g.neighbors(v).collect();
        let d = nbrs.len();
        if d < 4 {
            continue;
        }
        // The first neighbour always stays, so each partition appears once.
        for mask in 0u64..1 << (d - 1) {
            let moved: BTreeSet<Vertex> = (1..d)
                .filter(|&i| mask >> (i - 1) & 1 == 1)
                .map(|i| nbrs[i])
                .collect();
            if moved.len() < 2 || d - moved.len() < 2 {
                continue;
            }
            let keep = nbrs
                .iter()
                .copied()
                .filter(|x| !moved.contains(x))
                .collect();
            out.push(SplitOperation {
                vertex: v,
                keep,
                moved,
            });
        }
    }
    out
}

fn is_obstruction(g: &Graph) -> bool {
    is_k33_free(g) && verify_topological_obstruction(g).passed
}

/// Closure of `seeds` under vertex splitting, keeping only K3,3-free
/// topological obstructions, one graph per isomorphism class. Graphs that
/// fail the filter are not split further; nothing above
/// [`SPLIT_VERTEX_CEILING`] vertices is generated.
pub fn enumerate_splits(seeds: &[Graph]) -> Vec<Graph> {
    let mut seen: HashSet<String> = HashSet::new();
    let mut candidates: Vec<Graph> = Vec::new();
    for g in seeds {
        let (g, _) = g.normalized();
        if seen.insert(canonical_form(&g)) {
            candidates.push(g);
        }
    }
    let mut accepted: Vec<Graph> = Vec::new();
    while !candidates.is_empty() {
        let passing: Vec<Graph> = candidates.into_par_iter().filter(is_obstruction).collect();
        let generated: Vec<(String, Graph)> = passing
            .par_iter()
            .filter(|g| g.vertex_count() < SPLIT_VERTEX_CEILING)
            .flat_map_iter(|g| {
                splits(g).into_iter().map(move |s| {
                    let (h, _) = s.apply(g);
                    (canonical_form(&h), h)
                })
            })
            .collect();
        accepted.extend(passing);
        candidates = Vec::new();
        for (key, h) in generated {
            if seen.insert(key) {
                candidates.push(h);
            }
        }
    }
    accepted.sort_by_key(|g| (g.vertex_count(), g.edge_count(), canonical_form(g)));
    accepted
}
