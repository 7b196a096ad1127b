//! Canonical labelling by colour refinement plus individualisation.
//!
//! Every leaf of the search tree is visited, so the cost grows with the size
//! of the automorphism group. That is fine for the graphs handled here
//! (at most a few dozen vertices, groups of size at most a few hundred
//! thousand).

use super::format::to_graph6;
use super::{Dense, Graph, Vertex};

/// Refines an ordered colouring until it is equitable. Cell order depends only
/// on isomorphism-invariant data.
fn refine(d: &Dense, colors: &mut Vec<usize>) {
    let n = d.n;
    let mut cells = colors.iter().max().map_or(0, |&c| c + 1);
    loop {
        let mut keyed: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; cells];
                for &w in &d.adj[v] {
                    counts[colors[w]] += 1;
                }
                (colors[v], counts, v)
            })
            .collect();
        keyed.sort();
        let mut next = vec![0usize; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (keyed[i].0 != keyed[i - 1].0 || keyed[i].1 != keyed[i - 1].1) {
                c += 1;
            }
            next[keyed[i].2] = c;
        }
        let new_cells = if n == 0 { 0 } else { c + 1 };
        *colors = next;
        if new_cells == cells {
            return;
        }
        cells = new_cells;
    }
}

fn certificate(d: &Dense, colors: &[usize]) -> Vec<u64> {
    // Row-major upper triangle of the relabelled adjacency matrix, packed.
    let n = d.n;
    let mut inv = vec![0usize; n];
    for (v, &c) in colors.iter().enumerate() {
        inv[c] = v;
    }
    let mut bits = Vec::with_capacity((n * n).div_ceil(64));
    let mut word = 0u64;
    let mut used = 0;
    for i in 0..n {
        for j in i + 1..n {
            word = (word << 1) | u64::from(d.has(inv[i], inv[j]));
            used += 1;
            if used == 64 {
                bits.push(word);
                word = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        bits.push(word << (64 - used));
    }
    bits
}

struct Search<'a> {
    d: &'a Dense,
    best: Option<Vec<u64>>,
    best_leaves: Vec<Vec<usize>>,
    keep_all: bool,
}

impl Search<'_> {
    fn run(&mut self, mut colors: Vec<usize>) {
        refine(self.d, &mut colors);
        let n = self.d.n;
        let cells = colors.iter().max().map_or(0, |&c| c + 1);
        if cells == n {
            let cert = certificate(self.d, &colors);
            match &self.best {
                Some(b) if *b > cert => {}
                Some(b) if *b == cert => {
                    if self.keep_all {
                        self.best_leaves.push(colors);
                    }
                }
                _ => {
                    self.best = Some(cert);
                    self.best_leaves = vec![colors];
                }
            }
            return;
        }
        // First cell of size > 1.
        let mut sizes = vec![0usize; cells];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..cells).find(|&c| sizes[c] > 1).unwrap();
        for v in 0..n {
            if colors[v] != target {
                continue;
            }
            let child: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| {
                    if c > target || (c == target && w != v) {
                        c + 1
                    } else {
                        c
                    }
                })
                .collect();
            self.run(child);
        }
    }
}

fn search(d: &Dense, keep_all: bool) -> Vec<Vec<usize>> {
    let mut s = Search {
        d,
        best: None,
        best_leaves: Vec::new(),
        keep_all,
    };
    s.run(vec![0; d.n]);
    s.best_leaves
}

/// Returns `pos` where `pos[i]` is the canonical position of dense vertex `i`,
/// together with the dense view it refers to.
fn canonical_positions(g: &Graph) -> (Dense, Vec<usize>) {
    let d = Dense::new(g);
    let pos = search(&d, false).into_iter().next().unwrap_or_default();
    (d, pos)
}

/// Canonical relabelling: maps each vertex label of `g` to its position in
/// the canonical order.
pub fn canonical_labeling(g: &Graph) -> Vec<(Vertex, usize)> {
    let (d, pos) = canonical_positions(g);
    d.labels.iter().copied().zip(pos).collect()
}

/// A string that is equal for two graphs exactly when they are isomorphic
/// (the graph6 encoding of the canonically relabelled graph).
pub fn canonical_form(g: &Graph) -> String {
    let (d, pos) = canonical_positions(g);
    let mut c = Graph::empty(d.n);
    for i in 0..d.n {
        for &j in &d.adj[i] {
            if i < j {
                c.add_edge(pos[i], pos[j]).expect("simple");
            }
        }
    }
    to_graph6(&c)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// All automorphisms of `g`, each as a list of `(v, image of v)` pairs in
/// vertex order.
pub fn automorphisms(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    let d = Dense::new(g);
    let leaves = search(&d, true);
    let Some(first) = leaves.first() else {
        return vec![Vec::new()];
    };
    let mut inv_first = vec![0usize; d.n];
    for (v, &p) in first.iter().enumerate() {
        inv_first[p] = v;
    }
    leaves
        .iter()
        .map(|leaf| {
            // v -> position under `leaf` -> vertex at that position under `first`.
            (0..d.n)
                .map(|v| (d.labels[v], d.labels[inv_first[leaf[v]]]))
                .collect()
        })
        .collect()
}
