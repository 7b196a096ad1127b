use std::collections::BTreeSet;

use super::{Edge, Graph, Vertex};

/// One block: a maximal 2-connected subgraph, a single cut edge, or an
/// isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: BTreeSet<Vertex>,
    pub edges: BTreeSet<Edge>,
}

impl Block {
    pub fn graph(&self) -> Graph {
        let mut g = Graph::edge_subgraph(&self.edges);
        for &v in &self.vertices {
            g.add_vertex(v);
        }
        g
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: BTreeSet<Vertex>,
}

/// Block/cut-vertex decomposition (Hopcroft–Tarjan, iterative DFS).
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let dense = super::Dense::new(g);
    let n = dense.n;
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = BlockDecomposition::default();
    let mut is_cut = vec![false; n];

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if dense.adj[root].is_empty() {
            out.blocks.push(Block {
                vertices: BTreeSet::from([dense.labels[root]]),
                edges: BTreeSet::new(),
            });
            continue;
        }
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < dense.adj[v].len() {
                let w = dense.adj[v][*next];
                *next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let mut block = Block {
                    vertices: BTreeSet::new(),
                    edges: BTreeSet::new(),
                };
                while let Some((a, b)) = edge_stack.pop() {
                    let (la, lb) = (dense.labels[a], dense.labels[b]);
                    block.vertices.insert(la);
                    block.vertices.insert(lb);
                    block.edges.insert(Edge::new(la, lb));
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                out.blocks.push(block);
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    out.cut_vertices = (0..n)
        .filter(|&i| is_cut[i])
        .map(|i| dense.labels[i])
        .collect();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let d = blocks(&g);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, BTreeSet::from([2]));
    }

    #[test]
    fn k5_is_one_block() {
        let d = blocks(&Graph::complete(5));
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].edges.len(), 10);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn path_blocks_are_edges() {
        let d = blocks(&Graph::path(4));
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, BTreeSet::from([1, 2]));
    }

    #[test]
    fn every_edge_in_exactly_one_block() {
        let mut g = Graph::complete(4).disjoint_union(&Graph::cycle(5));
        g.add_edge(3, 4).unwrap();
        g.add_edge(20, 21).unwrap();
        g.add_vertex(30);
        let d = blocks(&g);
        let mut seen = BTreeSet::new();
        for b in &d.blocks {
            for e in &b.edges {
                assert!(seen.insert(*e));
            }
        }
        assert_eq!(seen, g.edge_set());
        for (i, a) in d.blocks.iter().enumerate() {
            for b in &d.blocks[i + 1..] {
                let shared: Vec<_> = a.vertices.intersection(&b.vertices).collect();
                assert!(shared.len() <= 1);
                for v in shared {
                    assert!(d.cut_vertices.contains(v));
                }
            }
        }
        assert_eq!(d.cut_vertices, BTreeSet::from([3, 4]));
    }
}
