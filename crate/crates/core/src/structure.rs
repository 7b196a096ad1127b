//! Bridges of a corner set, side components and the K3,3-free class check.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::ClassError;
use crate::graph::{blocks, bridges_of, canonical_form, find_subdivision, Edge, Graph, Vertex};
use crate::planarity::{is_planar, kuratowski_witness};
use crate::witness::{BranchPath, Pattern, SubdivisionWitness};

/// Union of all bridges of the corner set attached to one corner pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideComponent {
    pub corners: (Vertex, Vertex),
    pub subgraph: Graph,
    pub augmented: Graph,
}

impl SideComponent {
    fn new(corners: (Vertex, Vertex), subgraph: Graph) -> Self {
        let mut augmented = subgraph.clone();
        augmented
            .add_edge(corners.0, corners.1)
            .expect("corners are distinct");
        SideComponent {
            corners,
            subgraph,
            augmented,
        }
    }

    pub fn has_corner_edge(&self) -> bool {
        self.subgraph.has_edge(self.corners.0, self.corners.1)
    }

    /// A single edge joining the two corners.
    pub fn is_trivial(&self) -> bool {
        self.subgraph.edge_count() == 1 && self.has_corner_edge()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SideDecomposition {
    pub witness: SubdivisionWitness,
    pub corner_set: BTreeSet<Vertex>,
    /// One component per pattern edge, in the order of the witness paths.
    pub components: Vec<SideComponent>,
}

impl SideDecomposition {
    pub fn component(&self, a: Vertex, b: Vertex) -> Option<&SideComponent> {
        self.components
            .iter()
            .find(|c| c.corners == (a, b) || c.corners == (b, a))
    }

    /// Indices of components whose augmentation is non-planar.
    pub fn nonplanar_augmented(&self) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&i| !is_planar(&self.components[i].augmented))
            .collect()
    }
}

/// Splits a 2-connected graph along the corners of a K5 (or M) subdivision.
pub fn decompose_by_corners(
    g: &Graph,
    w: &SubdivisionWitness,
) -> Result<SideDecomposition, ClassError> {
    if !matches!(w.pattern, Pattern::K5 | Pattern::M) {
        return Err(ClassError::Precondition(format!(
            "side components need a K5 or M subdivision, got {}",
            w.pattern
        )));
    }
    w.validate(g).map_err(ClassError::Precondition)?;
    let corner_set = w.corner_set();
    let pattern = w.pattern.graph();
    let slot: BTreeMap<Vertex, usize> =
        w.corners.iter().enumerate().map(|(i, &c)| (c, i)).collect();

    let mut grouped: BTreeMap<(usize, usize), Vec<Graph>> = BTreeMap::new();
    for bridge in bridges_of(g, &corner_set, &BTreeSet::new()) {
        let attached: Vec<usize> = bridge.attachments.iter().map(|a| slot[a]).collect();
        match attached.len() {
            2 if pattern.has_edge(attached[0], attached[1]) => {
                let key = (attached[0].min(attached[1]), attached[0].max(attached[1]));
                grouped.entry(key).or_default().push(bridge.graph());
            }
            0 | 1 => {
                return Err(ClassError::Precondition(
                    "graph is not 2-connected relative to the corner set".into(),
                ))
            }
            _ => {
                let mut region = w.subgraph();
                region.union_with(&bridge.graph());
                return Err(k33_in(&region, g));
            }
        }
    }

    let mut components = Vec::with_capacity(w.paths.len());
    for path in &w.paths {
        let (i, j) = path.pattern_edge;
        let mut sub = Graph::new();
        for part in grouped.remove(&(i, j)).unwrap_or_default() {
            sub.union_with(&part);
        }
        components.push(SideComponent::new((w.corners[i], w.corners[j]), sub));
    }
    Ok(SideDecomposition {
        witness: w.clone(),
        corner_set,
        components,
    })
}

/// Side components of an M subdivision, keyed by the edges of M.
pub fn m_side_components(
    g: &Graph,
    w: &SubdivisionWitness,
) -> Result<SideDecomposition, ClassError> {
    if w.pattern != Pattern::M {
        return Err(ClassError::Precondition(format!(
            "expected an M subdivision, got {}",
            w.pattern
        )));
    }
    decompose_by_corners(g, w)
}

/// The K3,3 subdivision promised when a bridge meets too many corners.
fn k33_in(region: &Graph, g: &Graph) -> ClassError {
    match find_subdivision(region, &Pattern::K33).or_else(|| find_subdivision(g, &Pattern::K33)) {
        Some(w) => ClassError::K33Found(Box::new(w)),
        None => {
            ClassError::Precondition("bridge on three corners without a K3,3 subdivision".into())
        }
    }
}

pub fn is_special(sc: &SideComponent) -> bool {
    !sc.has_corner_edge() && is_planar(&sc.subgraph) && !is_planar(&sc.augmented)
}

pub fn is_k33_free(g: &Graph) -> bool {
    find_k33(g).is_none()
}

/// A K3,3 subdivision of `g`, if there is one.
///
/// Planar blocks are skipped; a non-planar block either yields a K3,3
/// directly from its Kuratowski subgraph or from a bridge meeting three
/// corners, or else the question is pushed down to the augmented side
/// components. A witness found in an augmented component that uses the
/// added corner edge `ab` is lifted back by routing through a third corner.
pub fn find_k33(g: &Graph) -> Option<SubdivisionWitness> {
    let mut known_free = HashSet::new();
    search_k33(g, &mut known_free)
}

fn search_k33(g: &Graph, known_free: &mut HashSet<String>) -> Option<SubdivisionWitness> {
    if is_planar(g) {
        return None;
    }
    let key = canonical_form(g);
    if known_free.contains(&key) {
        return None;
    }
    for block in blocks(g).blocks {
        let bg = block.graph();
        if is_planar(&bg) {
            continue;
        }
        let w = kuratowski_witness(&bg).expect("block is non-planar");
        if w.pattern == Pattern::K33 {
            return Some(w);
        }
        let dec = match decompose_by_corners(&bg, &w) {
            Ok(d) => d,
            Err(ClassError::K33Found(w)) => return Some(*w),
            Err(e) => panic!("decomposition of a 2-connected block failed: {e}"),
        };
        for comp in &dec.components {
            if is_planar(&comp.augmented) {
                continue;
            }
            if let Some(inner) = search_k33(&comp.augmented, known_free) {
                return Some(lift(inner, &comp.subgraph, &dec));
            }
        }
    }
    known_free.insert(key);
    None
}

/// Replaces a use of the virtual edge `ab` by a path `a .. c .. b` through
/// another corner `c` of the subdivision.
fn lift(w: SubdivisionWitness, real: &Graph, dec: &SideDecomposition) -> SubdivisionWitness {
    let Some(comp) = dec.components.iter().find(|c| c.subgraph == *real) else {
        return w;
    };
    let (a, b) = comp.corners;
    if comp.has_corner_edge() {
        return w;
    }
    let ia = dec.witness.corners.iter().position(|&x| x == a).unwrap();
    let ib = dec.witness.corners.iter().position(|&x| x == b).unwrap();
    let pattern = dec.witness.pattern.graph();
    let c = (0..dec.witness.corners.len())
        .find(|&k| k != ia && k != ib && pattern.has_edge(k, ia) && pattern.has_edge(k, ib))
        .expect("K5 and M have a common neighbour for every edge");
    let mut detour = dec.witness.oriented_path(ia, c).unwrap();
    detour.pop();
    detour.extend(dec.witness.oriented_path(c, ib).unwrap());

    let paths = w
        .paths
        .into_iter()
        .map(|p| {
            let mut out: Vec<Vertex> = Vec::with_capacity(p.vertices.len());
            for &x in &p.vertices {
                if let Some(&prev) = out.last() {
                    if (prev, x) == (a, b) {
                        out.pop();
                        out.extend(detour.iter().copied());
                        continue;
                    }
                    if (prev, x) == (b, a) {
                        out.pop();
                        out.extend(detour.iter().rev().copied());
                        continue;
                    }
                }
                out.push(x);
            }
            BranchPath {
                pattern_edge: p.pattern_edge,
                vertices: out,
            }
        })
        .collect();
    SubdivisionWitness {
        pattern: w.pattern,
        corners: w.corners,
        paths,
    }
}

/// Edges of `g` covered by the components of a decomposition.
pub fn covered_edges(dec: &SideDecomposition) -> BTreeSet<Edge> {
    dec.components
        .iter()
        .flat_map(|c| c.subgraph.edges().collect::<Vec<_>>())
        .collect()
}
