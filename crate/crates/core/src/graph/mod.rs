//! Simple undirected graphs and the combinatorial operations the rest of the
//! crate is built on.

mod blocks;
mod bridges;
mod canon;
pub mod format;
mod minor;
mod subdivision;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use blocks::{blocks, Block, BlockDecomposition};
pub use bridges::{bridges_of, BridgeOf};
pub use canon::{automorphisms, canonical_form, canonical_labeling, is_isomorphic};
pub use minor::{find_minor, has_minor, MinorWitness};
pub use subdivision::{find_subdivision, find_subdivision_pinned, has_subdivision};

use crate::error::GraphError;

pub type Vertex = usize;

/// An undirected edge with endpoints stored in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Panics on a loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(u: Vertex, v: Vertex) -> Self {
        Self::try_new(u, v).expect("self-loop")
    }

    pub fn try_new(u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge(u, v)),
            std::cmp::Ordering::Greater => Ok(Edge(v, u)),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(u)),
        }
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn has_endpoint(self, w: Vertex) -> bool {
        self.0 == w || self.1 == w
    }

    /// The endpoint that is not `w`.
    pub fn other(self, w: Vertex) -> Vertex {
        if self.0 == w {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A finite simple undirected graph on integer-labelled vertices.
///
/// Labels need not be contiguous: subgraphs keep the labels of their host so
/// that witnesses and side components can be read against the original input.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={:?}, E=[", self.vertices().collect::<Vec<_>>())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on `0..n`.
    pub fn empty(n: usize) -> Self {
        let mut g = Self::new();
        for v in 0..n {
            g.add_vertex(v);
        }
        g
    }

    /// Graph on `0..n` with the given edges. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::UnknownVertex(u.max(v)));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(Edge(u, v));
            }
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert_edge(Edge(u, v));
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let mut g = Self::empty(n);
        for v in 0..n {
            g.insert_edge(Edge::new(v, (v + 1) % n));
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.insert_edge(Edge(v - 1, v));
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Self::empty(10);
        for i in 0..5 {
            g.insert_edge(Edge::new(i, (i + 1) % 5));
            g.insert_edge(Edge::new(i, i + 5));
            g.insert_edge(Edge::new(5 + i, 5 + (i + 2) % 5));
        }
        g
    }

    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    /// Adds `uv`, creating missing endpoints. Returns whether the edge is new.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        let e = Edge::try_new(u, v)?;
        self.add_vertex(u);
        self.add_vertex(v);
        Ok(self.insert_edge(e))
    }

    fn insert_edge(&mut self, e: Edge) -> bool {
        let fresh = self.adj.entry(e.0).or_default().insert(e.1);
        self.adj.entry(e.1).or_default().insert(e.0);
        fresh
    }

    pub fn remove_edge(&mut self, e: Edge) -> bool {
        let removed = self.adj.get_mut(&e.0).is_some_and(|n| n.remove(&e.1));
        if removed {
            self.adj.get_mut(&e.1).map(|n| n.remove(&e.0));
        }
        removed
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> bool {
        let Some(nbrs) = self.adj.remove(&v) else {
            return false;
        };
        for w in nbrs {
            self.adj.get_mut(&w).map(|n| n.remove(&v));
        }
        true
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| Edge(u, v)))
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges().collect()
    }

    /// Neighbours of `v` in increasing order; empty if `v` is absent.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|n| n.iter().copied())
    }

    pub fn neighbor_set(&self, v: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.values().map(BTreeSet::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn induced_subgraph(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let mut g = Graph::new();
        for &v in keep {
            if let Some(nbrs) = self.adj.get(&v) {
                g.adj.insert(v, nbrs.intersection(keep).copied().collect());
            }
        }
        g
    }

    /// The subgraph formed by the given edges and their endpoints.
    pub fn edge_subgraph<'a, I>(edges: I) -> Graph
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = Graph::new();
        for &e in edges {
            g.insert_edge(e);
        }
        g
    }

    /// Adds every vertex and edge of `other`.
    pub fn union_with(&mut self, other: &Graph) {
        for v in other.vertices() {
            self.add_vertex(v);
        }
        for e in other.edges() {
            self.insert_edge(e);
        }
    }

    pub fn is_subgraph_of(&self, host: &Graph) -> bool {
        self.vertices().all(|v| host.has_vertex(v)) && self.edges().all(|e| host.contains_edge(e))
    }

    /// Copy of the graph with labels sent through `map`, which must be injective
    /// on the vertex set.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Graph {
        let mut g = Graph::new();
        for v in self.vertices() {
            g.add_vertex(map(v));
        }
        for e in self.edges() {
            g.insert_edge(Edge::new(map(e.0), map(e.1)));
        }
        g
    }

    /// Relabels vertices to `0..n` in increasing label order. Returns the
    /// normalized graph and the original label of each new vertex.
    pub fn normalized(&self) -> (Graph, Vec<Vertex>) {
        let labels: Vec<Vertex> = self.vertices().collect();
        let index: BTreeMap<Vertex, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        (self.relabel(|v| index[&v]), labels)
    }

    pub fn is_normalized(&self) -> bool {
        self.adj.keys().enumerate().all(|(i, &v)| i == v)
    }

    /// Disjoint union; vertices of `other` are shifted past this graph's
    /// largest label.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.next_label();
        let mut g = self.clone();
        g.union_with(&other.relabel(|v| v + shift));
        g
    }

    /// Smallest label larger than every current label.
    pub fn next_label(&self) -> Vertex {
        self.adj.keys().next_back().map_or(0, |&v| v + 1)
    }

    /// Replaces `e` by a path through a fresh vertex, which is returned.
    pub fn subdivide(&mut self, e: Edge) -> Result<Vertex, GraphError> {
        if !self.remove_edge(e) {
            return Err(GraphError::UnknownEdge(e));
        }
        let w = self.next_label();
        self.insert_edge(Edge::new(e.0, w));
        self.insert_edge(Edge::new(w, e.1));
        Ok(w)
    }

    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for w in self.neighbors(v) {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Shortest path from `s` to any vertex of `targets`, moving only through
    /// vertices accepted by `allowed` (endpoints are always allowed).
    pub fn shortest_path(
        &self,
        s: Vertex,
        targets: &BTreeSet<Vertex>,
        allowed: impl Fn(Vertex) -> bool,
    ) -> Option<Vec<Vertex>> {
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([s]);
        parent.insert(s, s);
        while let Some(v) = queue.pop_front() {
            if v != s && targets.contains(&v) {
                let mut path = vec![v];
                let mut cur = v;
                while cur != s {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            if v != s && !allowed(v) {
                continue;
            }
            for w in self.neighbors(v) {
                if parent.contains_key(&w) {
                    continue;
                }
                if targets.contains(&w) || allowed(w) {
                    parent.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// `self - e`.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        if !g.remove_edge(e) {
            return Err(GraphError::UnknownEdge(e));
        }
        Ok(g)
    }

    /// `self / e`: the larger endpoint is merged into the smaller one, and
    /// parallel edges and loops are dropped.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.contains_edge(e) {
            return Err(GraphError::UnknownEdge(e));
        }
        let (keep, gone) = e.endpoints();
        let mut g = self.clone();
        let moved: Vec<Vertex> = g.neighbors(gone).collect();
        g.remove_vertex(gone);
        for w in moved {
            if w != keep {
                g.insert_edge(Edge::new(keep, w));
            }
        }
        Ok(g)
    }

    /// Repeatedly replaces a degree-2 vertex by an edge joining its two
    /// neighbours, except where that edge already exists.
    pub fn suppress_degree_two(&self) -> Graph {
        let mut g = self.clone();
        loop {
            let candidate = g.vertices().find(|&v| {
                if g.degree(v) != 2 {
                    return false;
                }
                let mut it = g.neighbors(v);
                let (a, b) = (it.next().unwrap(), it.next().unwrap());
                !g.has_edge(a, b)
            });
            let Some(v) = candidate else {
                return g;
            };
            let nbrs: Vec<Vertex> = g.neighbors(v).collect();
            g.remove_vertex(v);
            g.insert_edge(Edge::new(nbrs[0], nbrs[1]));
        }
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let edges: Vec<(Vertex, Vertex)> = self.edges().map(Edge::endpoints).collect();
        let vertices: Vec<Vertex> = self.vertices().collect();
        (vertices, edges).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (vertices, edges): (Vec<Vertex>, Vec<(Vertex, Vertex)>) = Deserialize::deserialize(d)?;
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (u, v) in edges {
            g.add_edge(u, v).map_err(serde::de::Error::custom)?;
        }
        Ok(g)
    }
}

/// Compact adjacency used by the search routines: vertices are `0..n` and
/// `labels[i]` is the label of vertex `i` in the source graph.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub n: usize,
    pub labels: Vec<Vertex>,
    pub adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Dense {
    pub fn new(g: &Graph) -> Self {
        let labels: Vec<Vertex> = g.vertices().collect();
        let index: BTreeMap<Vertex, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = labels.len();
        let mut matrix = vec![false; n * n];
        let adj: Vec<Vec<usize>> = labels
            .iter()
            .map(|&v| g.neighbors(v).map(|w| index[&w]).collect())
            .collect();
        for (i, nbrs) in adj.iter().enumerate() {
            for &j in nbrs {
                matrix[i * n + j] = true;
            }
        }
        Dense {
            n,
            labels,
            adj,
            matrix,
        }
    }

    #[inline]
    pub fn has(&self, i: usize, j: usize) -> bool {
        self.matrix[i * self.n + j]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }
}
