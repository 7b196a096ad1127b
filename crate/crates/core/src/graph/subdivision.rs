//! Exhaustive search for a subdivision of a small pattern graph.
//!
//! Corners are placed one pattern vertex at a time; as soon as both ends of a
//! pattern edge are placed, a branch path is routed between them through
//! unused vertices. Interchangeable pattern vertices (twins) are placed in
//! increasing host order so each subdivision is found once per twin class
//! ordering.

use std::collections::VecDeque;

use super::{Dense, Graph, Vertex};
use crate::witness::{BranchPath, Pattern, SubdivisionWitness};

pub fn has_subdivision(g: &Graph, h: &Graph) -> bool {
    find_subdivision(g, &Pattern::Custom(h.clone())).is_some()
}

pub fn find_subdivision(g: &Graph, pattern: &Pattern) -> Option<SubdivisionWitness> {
    find_subdivision_pinned(g, pattern, &[])
}

/// Like [`find_subdivision`], but pattern vertex `i` must land on host vertex
/// `v` for every `(i, v)` in `pins`.
pub fn find_subdivision_pinned(
    g: &Graph,
    pattern: &Pattern,
    pins: &[(usize, Vertex)],
) -> Option<SubdivisionWitness> {
    let h = Dense::new(&pattern.graph());
    let host = Dense::new(g);
    if h.n > host.n {
        return None;
    }
    let mut pinned = vec![None; h.n];
    for &(i, v) in pins {
        pinned[i] = Some(host.index_of(v)?);
    }

    let order = placement_order(&h, &pinned);
    let mut rank = vec![0; h.n];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    // Twin classes: only pinned-free vertices take part in symmetry breaking.
    let mut twin_prev: Vec<Option<usize>> = vec![None; h.n];
    for (r, &i) in order.iter().enumerate() {
        if pinned[i].is_some() {
            continue;
        }
        twin_prev[i] = order[..r]
            .iter()
            .rev()
            .copied()
            .find(|&j| pinned[j].is_none() && are_twins(&h, i, j));
    }

    let mut s = State {
        h: &h,
        host: &host,
        order,
        rank,
        pinned,
        twin_prev,
        corner: vec![usize::MAX; h.n],
        used: vec![false; host.n],
        paths: Vec::new(),
    };
    if !s.place(0) {
        return None;
    }
    let corners = s.corner.iter().map(|&c| host.labels[c]).collect();
    let mut paths: Vec<BranchPath> = s
        .paths
        .iter()
        .map(|(i, j, p)| {
            let mut vertices: Vec<Vertex> = p.iter().map(|&x| host.labels[x]).collect();
            let (a, b) = (*i.min(j), *i.max(j));
            if *i != a {
                vertices.reverse();
            }
            BranchPath {
                pattern_edge: (h.labels[a], h.labels[b]),
                vertices,
            }
        })
        .collect();
    paths.sort_by_key(|p| p.pattern_edge);
    Some(SubdivisionWitness {
        pattern: pattern.clone(),
        corners,
        paths,
    })
}

fn are_twins(h: &Dense, i: usize, j: usize) -> bool {
    (0..h.n).all(|k| k == i || k == j || h.has(i, k) == h.has(j, k))
}

/// Pinned vertices first, then a connected order preferring high degree.
fn placement_order(h: &Dense, pinned: &[Option<usize>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..h.n).filter(|&i| pinned[i].is_some()).collect();
    let mut placed = vec![false; h.n];
    for &i in &order {
        placed[i] = true;
    }
    while order.len() < h.n {
        let next = (0..h.n)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| {
                let links = order.iter().filter(|&&j| h.has(i, j)).count();
                (links, h.degree(i), usize::MAX - i)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

struct State<'a> {
    h: &'a Dense,
    host: &'a Dense,
    order: Vec<usize>,
    rank: Vec<usize>,
    pinned: Vec<Option<usize>>,
    twin_prev: Vec<Option<usize>>,
    corner: Vec<usize>,
    used: Vec<bool>,
    paths: Vec<(usize, usize, Vec<usize>)>,
}

impl State<'_> {
    fn place(&mut self, r: usize) -> bool {
        if r == self.order.len() {
            return true;
        }
        let i = self.order[r];
        let candidates: Vec<usize> = match self.pinned[i] {
            Some(c) => vec![c],
            None => (0..self.host.n).collect(),
        };
        let floor = self.twin_prev[i].map_or(0, |j| self.corner[j] + 1);
        for c in candidates {
            if c < floor || self.used[c] || self.host.degree(c) < self.h.degree(i) {
                continue;
            }
            self.corner[i] = c;
            self.used[c] = true;
            let targets: Vec<usize> = self.h.adj[i]
                .iter()
                .copied()
                .filter(|&j| self.rank[j] < r)
                .collect();
            if self.capacity_ok(r) && self.route(i, &targets, 0, r) {
                return true;
            }
            self.used[c] = false;
            self.corner[i] = usize::MAX;
        }
        false
    }

    /// Every placed corner still has enough free or directly usable
    /// neighbours for its unrouted pattern edges.
    fn capacity_ok(&self, r: usize) -> bool {
        for &i in &self.order[..=r] {
            let c = self.corner[i];
            let pending: Vec<usize> = self.h.adj[i]
                .iter()
                .copied()
                .filter(|&j| !self.routed(i, j))
                .collect();
            if pending.is_empty() {
                continue;
            }
            let avail = self.host.adj[c]
                .iter()
                .filter(|&&x| !self.used[x] || pending.iter().any(|&j| self.corner[j] == x))
                .count();
            if avail < pending.len() {
                return false;
            }
        }
        true
    }

    fn routed(&self, i: usize, j: usize) -> bool {
        self.paths
            .iter()
            .any(|&(a, b, _)| (a == i && b == j) || (a == j && b == i))
    }

    fn route(&mut self, i: usize, targets: &[usize], k: usize, r: usize) -> bool {
        if k == targets.len() {
            return self.place(r + 1);
        }
        let j = targets[k];
        let (from, to) = (self.corner[i], self.corner[j]);
        let mut path = vec![from];
        self.route_dfs(i, j, from, to, &mut path, targets, k, r)
    }

    #[allow(clippy::too_many_arguments)]
    fn route_dfs(
        &mut self,
        i: usize,
        j: usize,
        at: usize,
        to: usize,
        path: &mut Vec<usize>,
        targets: &[usize],
        k: usize,
        r: usize,
    ) -> bool {
        let nbrs = self.host.adj[at].clone();
        if nbrs.contains(&to) {
            path.push(to);
            self.paths.push((i, j, path.clone()));
            if self.capacity_ok(r) && self.route(i, targets, k + 1, r) {
                return true;
            }
            self.paths.pop();
            path.pop();
        }
        for x in nbrs {
            if self.used[x] || !self.reachable(x, to) {
                continue;
            }
            self.used[x] = true;
            path.push(x);
            if self.route_dfs(i, j, x, to, path, targets, k, r) {
                return true;
            }
            path.pop();
            self.used[x] = false;
        }
        false
    }

    /// Whether `to` is adjacent to the free region reachable from `x`.
    fn reachable(&self, x: usize, to: usize) -> bool {
        let mut seen = vec![false; self.host.n];
        let mut queue = VecDeque::from([x]);
        seen[x] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.host.adj[v] {
                if w == to {
                    return true;
                }
                if !seen[w] && !self.used[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }
}
