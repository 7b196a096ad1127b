//! Minor containment by branching over edge contractions.
//!
//! `h` is a minor of `g` exactly when some set of contractions of `g` leaves a
//! graph containing `h` as a subgraph, so the search only contracts and tests
//! for a subgraph copy at every node. Quotient graphs are deduplicated by
//! canonical form.

use std::collections::{BTreeSet, HashSet};

use super::{canonical_form, Dense, Graph, Vertex};

/// Branch sets of a minor model: `branch_sets[i]` is the connected set of host
/// vertices contracted onto pattern vertex `i` (pattern normalised to `0..k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub branch_sets: Vec<BTreeSet<Vertex>>,
}

impl MinorWitness {
    /// Disjoint, connected branch sets with an edge of `g` between the sets
    /// of every edge of `h`.
    pub fn validate(&self, g: &Graph, h: &Graph) -> Result<(), String> {
        let (h, _) = h.normalized();
        if self.branch_sets.len() != h.vertex_count() {
            return Err("wrong number of branch sets".into());
        }
        let mut seen = BTreeSet::new();
        for set in &self.branch_sets {
            if set.is_empty() {
                return Err("empty branch set".into());
            }
            for &v in set {
                if !g.has_vertex(v) || !seen.insert(v) {
                    return Err(format!("vertex {v} missing or reused"));
                }
            }
            if !g.induced_subgraph(set).is_connected() {
                return Err("disconnected branch set".into());
            }
        }
        for e in h.edges() {
            let (a, b) = (&self.branch_sets[e.u()], &self.branch_sets[e.v()]);
            if !a.iter().any(|&x| g.neighbors(x).any(|y| b.contains(&y))) {
                return Err(format!("no host edge for pattern edge {e}"));
            }
        }
        Ok(())
    }
}

pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    find_minor(g, h).is_some()
}

pub fn find_minor(g: &Graph, h: &Graph) -> Option<MinorWitness> {
    let (hn, _) = h.normalized();
    let pattern = Dense::new(&hn);
    if pattern.n == 0 {
        return Some(MinorWitness {
            branch_sets: Vec::new(),
        });
    }
    let sets: Vec<BTreeSet<Vertex>> = g.vertices().map(|v| BTreeSet::from([v])).collect();
    let mut visited = HashSet::new();
    search(g, &pattern, sets, &mut visited)
}

fn quotient(g: &Graph, sets: &[BTreeSet<Vertex>]) -> Graph {
    let mut owner = std::collections::BTreeMap::new();
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            owner.insert(v, i);
        }
    }
    let mut q = Graph::empty(sets.len());
    for e in g.edges() {
        let (a, b) = (owner[&e.u()], owner[&e.v()]);
        if a != b {
            q.add_edge(a, b).expect("distinct");
        }
    }
    q
}

fn search(
    g: &Graph,
    pattern: &Dense,
    sets: Vec<BTreeSet<Vertex>>,
    visited: &mut HashSet<String>,
) -> Option<MinorWitness> {
    let q = quotient(g, &sets);
    if q.edge_count() < pattern_edges(pattern) {
        return None;
    }
    if !visited.insert(canonical_form(&q)) {
        return None;
    }
    let host = Dense::new(&q);
    if let Some(map) = find_subgraph(&host, pattern) {
        return Some(MinorWitness {
            branch_sets: map.into_iter().map(|i| sets[i].clone()).collect(),
        });
    }
    if q.vertex_count() <= pattern.n {
        return None;
    }
    for e in q.edges() {
        let mut next: Vec<BTreeSet<Vertex>> = Vec::with_capacity(sets.len() - 1);
        for (i, s) in sets.iter().enumerate() {
            if i == e.v() {
                continue;
            }
            let mut s = s.clone();
            if i == e.u() {
                s.extend(sets[e.v()].iter().copied());
            }
            next.push(s);
        }
        if let Some(w) = search(g, pattern, next, visited) {
            return Some(w);
        }
    }
    None
}

fn pattern_edges(p: &Dense) -> usize {
    p.adj.iter().map(Vec::len).sum::<usize>() / 2
}

/// Non-induced subgraph isomorphism: returns the host vertex for each
/// pattern vertex.
pub(crate) fn find_subgraph(host: &Dense, pattern: &Dense) -> Option<Vec<usize>> {
    if pattern.n > host.n {
        return None;
    }
    // Degree sequence domination.
    let mut hd: Vec<usize> = (0..host.n).map(|i| host.degree(i)).collect();
    let mut pd: Vec<usize> = (0..pattern.n).map(|i| pattern.degree(i)).collect();
    hd.sort_unstable_by(|a, b| b.cmp(a));
    pd.sort_unstable_by(|a, b| b.cmp(a));
    if pd.iter().zip(&hd).any(|(p, h)| p > h) {
        return None;
    }

    let mut order = Vec::with_capacity(pattern.n);
    let mut placed = vec![false; pattern.n];
    while order.len() < pattern.n {
        let next = (0..pattern.n)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| {
                let links = order.iter().filter(|&&j| pattern.has(i, j)).count();
                (links, pattern.degree(i), usize::MAX - i)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; pattern.n];
    let mut used = vec![false; host.n];
    if extend(host, pattern, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    host: &Dense,
    pattern: &Dense,
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let i = order[k];
    let placed_nbrs: Vec<usize> = pattern.adj[i]
        .iter()
        .filter(|&&j| map[j] != usize::MAX)
        .map(|&j| map[j])
        .collect();
    let candidates: Vec<usize> = match placed_nbrs.first() {
        Some(&anchor) => host.adj[anchor].clone(),
        None => (0..host.n).collect(),
    };
    for c in candidates {
        if used[c]
            || host.degree(c) < pattern.degree(i)
            || !placed_nbrs.iter().all(|&x| host.has(c, x))
        {
            continue;
        }
        map[i] = c;
        used[c] = true;
        if extend(host, pattern, order, k + 1, map, used) {
            return true;
        }
        used[c] = false;
        map[i] = usize::MAX;
    }
    false
}
