//! Planarity testing by path addition (Demoucron, Malgrange and Pertuiset)
//! and Kuratowski subgraph extraction.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::ClassError;
use crate::graph::{blocks, bridges_of, Edge, Graph, Vertex};
pub use crate::witness::{BranchPath, Pattern, SubdivisionWitness};

pub fn is_planar(g: &Graph) -> bool {
    nonplanar_block(g).is_none()
}

/// Edges of some non-planar block of `g`, if there is one.
fn nonplanar_block(g: &Graph) -> Option<BTreeSet<Edge>> {
    let v = g.vertices().filter(|&v| g.degree(v) > 0).count();
    if v < 5 || g.edge_count() < 9 {
        return None;
    }
    blocks(g)
        .blocks
        .into_iter()
        .find(|b| !block_is_planar(&b.graph()))
        .map(|b| b.edges)
}

/// Path addition on a 2-connected graph.
fn block_is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n < 5 || m < 9 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let Some(cycle) = find_cycle(g) else {
        return true;
    };
    let mut hv: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let mut he: BTreeSet<Edge> = (0..cycle.len())
        .map(|i| Edge::new(cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect();
    let mut faces: Vec<Vec<Vertex>> = vec![cycle.clone(), cycle.into_iter().rev().collect()];

    while he.len() < m {
        let fragments = bridges_of(g, &hv, &he);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("unembedded edges leave a fragment");
        let frag = &fragments[fi];
        let path = fragment_path(frag);
        for &x in &path {
            hv.insert(x);
        }
        for w in path.windows(2) {
            he.insert(Edge::new(w[0], w[1]));
        }
        let face = faces.swap_remove(face_idx);
        let (a, b) = split_face(&face, &path);
        faces.push(a);
        faces.push(b);
    }
    true
}

fn find_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let e = g.edges().next()?;
    let mut rest = g.clone();
    rest.remove_edge(e);
    rest.shortest_path(e.u(), &BTreeSet::from([e.v()]), |_| true)
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(frag: &crate::graph::BridgeOf) -> Vec<Vertex> {
    if frag.is_chord() {
        let e = *frag.edges.iter().next().unwrap();
        return vec![e.u(), e.v()];
    }
    let fg = frag.graph();
    let start = *frag.attachments.iter().next().unwrap();
    let mut targets = frag.attachments.clone();
    targets.remove(&start);
    fg.shortest_path(start, &targets, |x| frag.internal.contains(&x))
        .expect("fragment of a 2-connected graph has two attachments")
}

/// Splits a face cycle along a path whose ends lie on it.
fn split_face(face: &[Vertex], path: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let k = face.len();
    let a = path[0];
    let b = path[path.len() - 1];
    let ia = face.iter().position(|&x| x == a).unwrap();
    let ib = face.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];

    let mut first = Vec::new();
    let mut i = ia;
    loop {
        first.push(face[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % k;
    }
    first.extend(inner.iter().rev());

    let mut second = Vec::new();
    let mut i = ib;
    loop {
        second.push(face[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % k;
    }
    second.extend(inner.iter());
    (first, second)
}

/// A Kuratowski subdivision (of K5 or K3,3) inside a non-planar graph.
pub fn kuratowski_witness(g: &Graph) -> Result<SubdivisionWitness, ClassError> {
    let block = nonplanar_block(g).ok_or(ClassError::Planar)?;
    let mut kept: BTreeSet<Edge> = block;
    let all: Vec<Edge> = kept.iter().copied().collect();
    for e in all {
        kept.remove(&e);
        if block_is_planar_edges(&kept) {
            kept.insert(e);
        }
    }
    let k = Graph::edge_subgraph(&kept);
    Ok(classify(&k))
}

fn block_is_planar_edges(edges: &BTreeSet<Edge>) -> bool {
    is_planar(&Graph::edge_subgraph(edges))
}

/// Reads off corners and branch paths of a minimal non-planar graph.
fn classify(k: &Graph) -> SubdivisionWitness {
    let corners: Vec<Vertex> = k.vertices().filter(|&v| k.degree(v) >= 3).collect();
    let index: BTreeMap<Vertex, usize> = corners.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut raw: Vec<(usize, usize, Vec<Vertex>)> = Vec::new();
    for &c in &corners {
        for first in k.neighbors(c) {
            let mut path = vec![c, first];
            let mut prev = c;
            let mut cur = first;
            while !index.contains_key(&cur) {
                let next = k.neighbors(cur).find(|&x| x != prev).expect("degree 2");
                prev = cur;
                cur = next;
                path.push(cur);
            }
            let (i, j) = (index[&c], index[&cur]);
            if i < j {
                raw.push((i, j, path));
            }
        }
    }
    if corners.len() == 5 {
        SubdivisionWitness {
            pattern: Pattern::K5,
            corners,
            paths: raw
                .into_iter()
                .map(|(i, j, vertices)| BranchPath {
                    pattern_edge: (i, j),
                    vertices,
                })
                .collect(),
        }
    } else {
        assert_eq!(
            corners.len(),
            6,
            "minimal non-planar graph has 5 or 6 corners"
        );
        // 2-colour the corner graph to recover the bipartition.
        let mut side = [usize::MAX; 6];
        side[0] = 0;
        let mut changed = true;
        while changed {
            changed = false;
            for &(i, j, _) in &raw {
                if side[i] != usize::MAX && side[j] == usize::MAX {
                    side[j] = 1 - side[i];
                    changed = true;
                } else if side[j] != usize::MAX && side[i] == usize::MAX {
                    side[i] = 1 - side[j];
                    changed = true;
                }
            }
        }
        let mut order: Vec<usize> = (0..6).filter(|&i| side[i] == 0).collect();
        order.extend((0..6).filter(|&i| side[i] == 1));
        let mut slot = [0usize; 6];
        for (p, &i) in order.iter().enumerate() {
            slot[i] = p;
        }
        let mut paths: Vec<BranchPath> = raw
            .into_iter()
            .map(|(i, j, mut vertices)| {
                let (a, b) = (slot[i], slot[j]);
                if a > b {
                    vertices.reverse();
                }
                BranchPath {
                    pattern_edge: (a.min(b), a.max(b)),
                    vertices,
                }
            })
            .collect();
        paths.sort_by_key(|p| p.pattern_edge);
        SubdivisionWitness {
            pattern: Pattern::K33,
            corners: order.iter().map(|&i| corners[i]).collect(),
            paths,
        }
    }
}

/// A K5 subdivision in a non-planar graph with no K3,3 subdivision.
///
/// If extraction produces a K3,3 subdivision instead, the input is outside
/// the class and that witness is returned as the error.
pub fn find_k5_subdivision(g: &Graph) -> Result<SubdivisionWitness, ClassError> {
    let w = kuratowski_witness(g)?;
    match w.pattern {
        Pattern::K5 => Ok(w),
        _ => Err(ClassError::K33Found(Box::new(w))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        assert!(!is_planar(&Graph::petersen()));
        assert!(is_planar(
            &Graph::complete(5).delete_edge(Edge::new(0, 1)).unwrap()
        ));
        assert!(is_planar(&Graph::cycle(7)));
        assert!(is_planar(&Graph::empty(3)));
    }

    #[test]
    fn planar_grid_and_wheel() {
        let mut grid = Graph::new();
        for r in 0..4 {
            for c in 0..4 {
                let v = r * 4 + c;
                if c < 3 {
                    grid.add_edge(v, v + 1).unwrap();
                }
                if r < 3 {
                    grid.add_edge(v, v + 4).unwrap();
                }
            }
        }
        assert!(is_planar(&grid));
        let mut wheel = Graph::cycle(8);
        for v in 0..8 {
            wheel.add_edge(v, 8).unwrap();
        }
        assert!(is_planar(&wheel));
    }

    #[test]
    fn witness_for_k5() {
        let w = kuratowski_witness(&Graph::complete(5)).unwrap();
        assert_eq!(w.pattern, Pattern::K5);
        w.validate(&Graph::complete(5)).unwrap();
        assert!(w.paths.iter().all(|p| p.vertices.len() == 2));
    }

    #[test]
    fn witness_for_k33() {
        let g = Graph::complete_bipartite(3, 3);
        let w = kuratowski_witness(&g).unwrap();
        assert_eq!(w.pattern, Pattern::K33);
        w.validate(&g).unwrap();
    }

    #[test]
    fn witness_for_subdivided_k5_uses_degree_four_corners() {
        let mut g = Graph::complete(5);
        for e in Graph::complete(5).edges() {
            g.subdivide(e).unwrap();
        }
        let w = kuratowski_witness(&g).unwrap();
        assert_eq!(w.pattern, Pattern::K5);
        assert_eq!(w.corner_set(), (0..5).collect());
        w.validate(&g).unwrap();
    }

    #[test]
    fn planar_input_is_rejected() {
        assert!(matches!(
            kuratowski_witness(&Graph::complete(4)),
            Err(ClassError::Planar)
        ));
    }

    #[test]
    fn find_k5_examples() {
        let w = find_k5_subdivision(&Graph::complete(5)).unwrap();
        assert_eq!(w.corner_set(), (0..5).collect());
        let m = crate::witness::m_graph();
        let w = find_k5_subdivision(&m).unwrap();
        w.validate(&m).unwrap();
        assert!(w.corners.contains(&0) && w.corners.contains(&1));
        assert!(matches!(
            find_k5_subdivision(&Graph::complete_bipartite(3, 3)),
            Err(ClassError::K33Found(_))
        ));
    }

    #[test]
    fn euler_bound_screen() {
        // Dense graphs beyond 3n - 6 edges are never planar.
        for n in 5..9 {
            let g = Graph::complete(n);
            assert!(g.edge_count() > 3 * n - 6);
            assert!(!is_planar(&g));
        }
    }
}
