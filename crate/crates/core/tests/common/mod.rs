#![allow(dead_code)]

use std::collections::HashMap;

use ktorus::graph::canonical_form;
use ktorus::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

/// All graphs on exactly `n` vertices for each `n <= max_n`, one per
/// isomorphism class, built by adding a vertex with every possible
/// neighbourhood and keeping one graph per canonical form.
pub fn graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(0)]];
    for n in 1..=max_n {
        let prev = &levels[n - 1];
        let found: Vec<(String, Graph)> = prev
            .par_iter()
            .flat_map_iter(|g| {
                (0u32..1 << (n - 1)).map(move |mask| {
                    let mut h = g.clone();
                    h.add_vertex(n - 1);
                    for v in 0..n - 1 {
                        if mask >> v & 1 == 1 {
                            h.add_edge(v, n - 1).unwrap();
                        }
                    }
                    (canonical_form(&h), h)
                })
            })
            .collect();
        let mut unique: HashMap<String, Graph> = HashMap::new();
        for (key, g) in found {
            unique.entry(key).or_insert(g);
        }
        let mut level: Vec<(String, Graph)> = unique.into_iter().collect();
        level.sort_by(|a, b| a.0.cmp(&b.0));
        levels.push(level.into_iter().map(|(_, g)| g).collect());
    }
    levels
}

/// Glues `b` onto `a` along an edge (identifying `b`'s edge `bu-bv` with
/// `a`'s edge `au-av`) and optionally deletes the shared edge.
pub fn two_sum(
    a: &Graph,
    b: &Graph,
    ae: (usize, usize),
    be: (usize, usize),
    keep_edge: bool,
) -> Graph {
    let offset = a.next_label();
    let mut g = a.clone();
    g.union_with(&b.relabel(|v| {
        if v == be.0 {
            ae.0
        } else if v == be.1 {
            ae.1
        } else {
            v + offset
        }
    }));
    if !keep_edge {
        g.remove_edge(ktorus::Edge::new(ae.0, ae.1));
    }
    g
}

/// Random graphs in the class built from K5's, K5 - e's and small planar
/// pieces glued at vertices and along edges, capped at `max_n` vertices.
pub fn random_k33_free_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut g = piece(&mut rng);
        let pieces = rng.gen_range(1..=3);
        for _ in 0..pieces {
            let p = piece(&mut rng);
            if g.vertex_count() + p.vertex_count() > max_n + 2 {
                break;
            }
            let ge: Vec<ktorus::Edge> = g.edges().collect();
            let pe: Vec<ktorus::Edge> = p.edges().collect();
            let (e, f) = (
                ge[rng.gen_range(0..ge.len())],
                pe[rng.gen_range(0..pe.len())],
            );
            g = match rng.gen_range(0..3) {
                0 => {
                    // Share a single vertex.
                    let off = g.next_label();
                    let mut h = g.clone();
                    h.union_with(&p.relabel(|v| if v == f.u() { e.u() } else { v + off }));
                    h
                }
                1 => two_sum(&g, &p, e.endpoints(), f.endpoints(), true),
                _ => two_sum(&g, &p, e.endpoints(), f.endpoints(), false),
            };
        }
        // A few random edge deletions and subdivisions for variety.
        for _ in 0..rng.gen_range(0..3) {
            let es: Vec<ktorus::Edge> = g.edges().collect();
            let e = es[rng.gen_range(0..es.len())];
            if rng.gen_bool(0.5) {
                g.remove_edge(e);
            } else if g.vertex_count() < max_n {
                g.subdivide(e).unwrap();
            }
        }
        let (g, _) = g.normalized();
        if g.vertex_count() <= max_n && g.edge_count() > 0 && ktorus::structure::is_k33_free(&g) {
            out.push(g);
        }
    }
    out
}

fn piece(rng: &mut StdRng) -> Graph {
    match rng.gen_range(0..6) {
        0 | 1 => Graph::complete(5),
        2 => Graph::complete(5)
            .delete_edge(ktorus::Edge::new(0, 1))
            .unwrap(),
        3 => Graph::complete(4),
        4 => Graph::cycle(rng.gen_range(3..6)),
        _ => {
            let mut w = Graph::cycle(4);
            for v in 0..4 {
                w.add_edge(v, 4).unwrap();
            }
            w
        }
    }
}
