//! Rotation systems, face tracing and exact orientable genus by exhaustive
//! search.
//!
//! A rotation system fixes a cyclic order of neighbours at every vertex; the
//! faces of the induced orientable embedding are the orbits of
//! `(u -> v) |-> (v -> next neighbour of v after u)`, and the genus follows
//! from Euler's formula. Nothing here depends on the planarity or
//! toroidality modules, so it can be used to check them.

use std::collections::{BTreeMap, BTreeSet};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::error::OracleError;
use crate::graph::{automorphisms, format, Graph, Vertex};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Cyclic neighbour order at each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    pub order: BTreeMap<Vertex, Vec<Vertex>>,
}

impl Rotation {
    /// Neighbours in increasing order at every vertex.
    pub fn sorted(g: &Graph) -> Self {
        Rotation {
            order: g
                .vertices()
                .map(|v| (v, g.neighbors(v).collect()))
                .collect(),
        }
    }

    /// Reverses every cyclic order (the mirror-image embedding).
    pub fn reversed(&self) -> Self {
        Rotation {
            order: self
                .order
                .iter()
                .map(|(&v, o)| (v, o.iter().rev().copied().collect()))
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let rows: Vec<(Vertex, Vec<Vertex>)> =
            self.order.iter().map(|(&v, o)| (v, o.clone())).collect();
        format::format_adjacency(&rows)
    }

    pub fn from_text(text: &str) -> Result<Self, crate::GraphError> {
        Ok(Rotation {
            order: format::parse_adjacency(text)?.into_iter().collect(),
        })
    }

    /// Each cyclic order rotated to start at its smallest neighbour.
    fn normal_form(&self) -> Vec<(Vertex, Vec<Vertex>)> {
        self.order
            .iter()
            .map(|(&v, o)| {
                let mut o = o.clone();
                if let Some(p) = o.iter().enumerate().min_by_key(|(_, &x)| x).map(|(i, _)| i) {
                    o.rotate_left(p);
                }
                (v, o)
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct RotationEmbedding {
    pub graph: Graph,
    pub rotation: Rotation,
    /// Each face as the cyclic sequence of vertices it visits.
    pub faces: Vec<Vec<Vertex>>,
    pub genus: usize,
}

impl RotationEmbedding {
    pub fn face_lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }
}

pub fn trace_faces(g: &Graph, rotation: &Rotation) -> Result<RotationEmbedding, OracleError> {
    for v in g.vertices() {
        let given = rotation.order.get(&v).map(Vec::as_slice).unwrap_or(&[]);
        let mut sorted = given.to_vec();
        sorted.sort_unstable();
        let nbrs: Vec<Vertex> = g.neighbors(v).collect();
        if sorted != nbrs {
            return Err(OracleError::MalformedRotation(format!(
                "order at {v} is not a permutation of its neighbours"
            )));
        }
    }
    if let Some(v) = rotation.order.keys().find(|&&v| !g.has_vertex(v)) {
        return Err(OracleError::MalformedRotation(format!(
            "vertex {v} not in graph"
        )));
    }
    // next[(v, u)] = neighbour of v following u.
    let mut next: BTreeMap<(Vertex, Vertex), Vertex> = BTreeMap::new();
    for (&v, o) in &rotation.order {
        for (i, &u) in o.iter().enumerate() {
            next.insert((v, u), o[(i + 1) % o.len()]);
        }
    }
    let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    let mut faces = Vec::new();
    for e in g.edges() {
        for start in [(e.u(), e.v()), (e.v(), e.u())] {
            if seen.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            loop {
                seen.insert(d);
                face.push(d.0);
                d = (d.1, next[&(d.1, d.0)]);
                if d == start {
                    break;
                }
            }
            faces.push(face);
        }
    }
    let genus = euler_genus(g, faces.len());
    Ok(RotationEmbedding {
        graph: g.clone(),
        rotation: rotation.clone(),
        faces,
        genus,
    })
}

/// Genus from `V - E + F = 2 - 2g` summed over components with edges.
fn euler_genus(g: &Graph, faces: usize) -> usize {
    let comps = g
        .components()
        .into_iter()
        .filter(|c| c.iter().any(|&v| g.degree(v) > 0))
        .count() as i64;
    let v = g.vertices().filter(|&v| g.degree(v) > 0).count() as i64;
    let twice = 2 * comps - v + g.edge_count() as i64 - faces as i64;
    debug_assert!(twice >= 0 && twice % 2 == 0, "Euler characteristic parity");
    (twice / 2) as usize
}

/// Number of rotation systems, `prod (deg(v) - 1)!`, saturating.
pub fn rotation_count(g: &Graph) -> u128 {
    g.vertices()
        .map(|v| (1..g.degree(v).max(1) as u128).product::<u128>())
        .fold(1u128, |a, b| a.saturating_mul(b))
}

/// Dart arrays for one connected component.
struct Darts {
    labels: Vec<Vertex>,
    /// Darts leaving each vertex.
    at: Vec<Vec<usize>>,
    head: Vec<usize>,
    tail: Vec<usize>,
    rev: Vec<usize>,
}

impl Darts {
    fn new(g: &Graph, component: &BTreeSet<Vertex>) -> Self {
        let labels: Vec<Vertex> = component.iter().copied().collect();
        let index: BTreeMap<Vertex, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut at = vec![Vec::new(); labels.len()];
        let mut head = Vec::new();
        let mut tail = Vec::new();
        let mut id: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (i, &v) in labels.iter().enumerate() {
            for w in g.neighbors(v) {
                let d = head.len();
                tail.push(i);
                head.push(index[&w]);
                at[i].push(d);
                id.insert((i, index[&w]), d);
            }
        }
        let rev = (0..head.len()).map(|d| id[&(head[d], tail[d])]).collect();
        Darts {
            labels,
            at,
            head,
            tail,
            rev,
        }
    }

    fn len(&self) -> usize {
        self.head.len()
    }
}

const NONE: usize = usize::MAX;

/// Branch-and-bound search for a rotation system with at least `target`
/// faces. Faces are traced while the rotation is being built; a branch is
/// cut when the closed faces plus the most faces the untraced darts could
/// still form (each needs at least three darts) fall short of the target.
struct FaceSearch<'a> {
    darts: &'a Darts,
    target: usize,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    in_face: Vec<bool>,
    marked: usize,
    faces: usize,
    nodes: u64,
    budget: u64,
}

impl<'a> FaceSearch<'a> {
    fn new(darts: &'a Darts, target: usize, budget: u64) -> Self {
        let n = darts.len();
        FaceSearch {
            darts,
            target,
            sigma: vec![NONE; n],
            sigma_inv: vec![NONE; n],
            in_face: vec![false; n],
            marked: 0,
            faces: 0,
            nodes: 0,
            budget,
        }
    }

    fn run(&mut self) -> Result<bool, OracleError> {
        if self.darts.len() == 0 {
            return Ok(self.target <= 1);
        }
        // Degree-1 vertices have a forced rotation.
        for v in 0..self.darts.at.len() {
            if self.darts.at[v].len() == 1 {
                let d = self.darts.at[v][0];
                self.sigma[d] = d;
                self.sigma_inv[d] = d;
            }
        }
        self.in_face[0] = true;
        self.marked = 1;
        self.walk(0, 0)
    }

    /// Whether setting `sigma[a] = b` keeps the partial rotation at the
    /// vertex extendable to a single cycle.
    fn can_link(&self, a: usize, b: usize) -> bool {
        if self.sigma_inv[b] != NONE || self.sigma[a] != NONE {
            return false;
        }
        let deg = self.darts.at[self.darts.tail[a]].len();
        let mut len = 1;
        let mut x = b;
        while x != NONE {
            if x == a {
                return len == deg;
            }
            x = self.sigma[x];
            len += 1;
        }
        true
    }

    fn walk(&mut self, start: usize, cur: usize) -> Result<bool, OracleError> {
        let mut trail: Vec<usize> = Vec::new();
        let mut closed = 0;
        let (mut start, mut cur) = (start, cur);
        let outcome = loop {
            let t = self.darts.rev[cur];
            let n = self.sigma[t];
            if n == NONE {
                break self.branch(start, cur, t)?;
            }
            if n == start {
                self.faces += 1;
                closed += 1;
                match (0..self.darts.len()).find(|&d| !self.in_face[d]) {
                    None => break self.faces >= self.target,
                    Some(d) => {
                        self.in_face[d] = true;
                        self.marked += 1;
                        trail.push(d);
                        start = d;
                        cur = d;
                    }
                }
            } else {
                debug_assert!(!self.in_face[n]);
                self.in_face[n] = true;
                self.marked += 1;
                trail.push(n);
                cur = n;
            }
        };
        if !outcome {
            for d in trail {
                self.in_face[d] = false;
                self.marked -= 1;
            }
            self.faces -= closed;
        }
        Ok(outcome)
    }

    fn branch(&mut self, start: usize, cur: usize, t: usize) -> Result<bool, OracleError> {
        let remaining = self.darts.len() - self.marked;
        if self.faces + 1 + remaining / 3 < self.target {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::BudgetExceeded {
                budget: self.budget,
            });
        }
        let v = self.darts.tail[t];
        for &b in &self.darts.at[v] {
            if b == t || !self.can_link(t, b) {
                continue;
            }
            if b != start && self.in_face[b] {
                continue;
            }
            self.sigma[t] = b;
            self.sigma_inv[b] = t;
            let found = if b == start {
                // Re-enter the loop, which will see the closing link.
                self.walk(start, cur)?
            } else {
                self.in_face[b] = true;
                self.marked += 1;
                let r = self.walk(start, b)?;
                if !r {
                    self.in_face[b] = false;
                    self.marked -= 1;
                }
                r
            };
            if found {
                return Ok(true);
            }
            self.sigma[t] = NONE;
            self.sigma_inv[b] = NONE;
        }
        Ok(false)
    }

    fn rotation(&self) -> BTreeMap<Vertex, Vec<Vertex>> {
        let mut out = BTreeMap::new();
        for (v, ds) in self.darts.at.iter().enumerate() {
            let mut order = Vec::with_capacity(ds.len());
            if let Some(&first) = ds.first() {
                let mut d = first;
                loop {
                    order.push(self.darts.labels[self.darts.head[d]]);
                    d = self.sigma[d];
                    if d == first || d == NONE {
                        break;
                    }
                }
            }
            out.insert(self.darts.labels[v], order);
        }
        out
    }
}

/// Finds a rotation of one connected component with genus at most `genus`.
fn component_embedding(
    g: &Graph,
    component: &BTreeSet<Vertex>,
    genus: usize,
    budget: u64,
) -> Result<Option<BTreeMap<Vertex, Vec<Vertex>>>, OracleError> {
    let darts = Darts::new(g, component);
    let v = component.len() as i64;
    let e = (darts.len() / 2) as i64;
    if e <= 1 {
        return Ok(Some(Rotation::sorted(&g.induced_subgraph(component)).order));
    }
    let target = e - v + 2 - 2 * genus as i64;
    if target <= 1 {
        // Any rotation has at least one face.
        return Ok(Some(Rotation::sorted(&g.induced_subgraph(component)).order));
    }
    let mut search = FaceSearch::new(&darts, target as usize, budget);
    if search.run()? {
        Ok(Some(search.rotation()))
    } else {
        Ok(None)
    }
}

fn component_min_genus(
    g: &Graph,
    component: &BTreeSet<Vertex>,
    budget: u64,
) -> Result<usize, OracleError> {
    let v = component.len() as i64;
    let e = component.iter().map(|&x| g.degree(x)).sum::<usize>() as i64 / 2;
    // F <= 2E/3 gives a first lower bound once every face has length three.
    let mut genus = if e >= 2 {
        ((e - 3 * v + 6).max(0) as usize).div_ceil(6)
    } else {
        0
    };
    loop {
        if component_embedding(g, component, genus, budget)?.is_some() {
            return Ok(genus);
        }
        genus += 1;
    }
}

/// Orientable genus of `g` by exhaustive rotation search. The search is
/// exact; `budget` caps the number of branching nodes per component and is
/// reported as an error rather than a guess when exceeded.
pub fn min_genus_bruteforce(g: &Graph, budget: u64) -> Result<usize, OracleError> {
    g.components()
        .iter()
        .map(|c| component_min_genus(g, c, budget))
        .sum()
}

/// A rotation system of genus at most `genus`, if one exists. Genus is
/// additive over components, so each component is given the least genus it
/// needs and the total is compared against `genus`.
pub fn find_embedding(
    g: &Graph,
    genus: usize,
    budget: u64,
) -> Result<Option<RotationEmbedding>, OracleError> {
    let mut order = BTreeMap::new();
    let mut total = 0;
    for c in g.components() {
        let need = component_min_genus(g, &c, budget)?;
        total += need;
        if total > genus {
            return Ok(None);
        }
        let rot = component_embedding(g, &c, need, budget)?.expect("genus just established");
        order.extend(rot);
    }
    trace_faces(g, &Rotation { order }).map(Some)
}

/// Calls `f` with every rotation system of `g` (first neighbour fixed at each
/// vertex). Refuses when there are more than `budget` of them.
pub fn for_each_rotation(
    g: &Graph,
    budget: u64,
    mut f: impl FnMut(&Rotation),
) -> Result<(), OracleError> {
    if rotation_count(g) > u128::from(budget) {
        return Err(OracleError::BudgetExceeded { budget });
    }
    let vertices: Vec<Vertex> = g.vertices().collect();
    let perms: Vec<Vec<Vec<Vertex>>> = vertices
        .iter()
        .map(|&v| {
            let nbrs: Vec<Vertex> = g.neighbors(v).collect();
            match nbrs.split_first() {
                None => vec![Vec::new()],
                Some((&first, rest)) => permutations(rest)
                    .into_iter()
                    .map(|mut p| {
                        p.insert(0, first);
                        p
                    })
                    .collect(),
            }
        })
        .collect();
    let mut idx = vec![0usize; vertices.len()];
    let mut rotation = Rotation {
        order: vertices
            .iter()
            .map(|&v| (v, perms_first(&perms, v, &vertices)))
            .collect(),
    };
    loop {
        f(&rotation);
        // Odometer step.
        let mut k = 0;
        loop {
            if k == vertices.len() {
                return Ok(());
            }
            idx[k] += 1;
            if idx[k] < perms[k].len() {
                rotation.order.insert(vertices[k], perms[k][idx[k]].clone());
                break;
            }
            idx[k] = 0;
            rotation.order.insert(vertices[k], perms[k][0].clone());
            k += 1;
        }
    }
}

fn perms_first(perms: &[Vec<Vec<Vertex>>], v: Vertex, vertices: &[Vertex]) -> Vec<Vertex> {
    let k = vertices.iter().position(|&x| x == v).unwrap();
    perms[k][0].clone()
}

fn permutations(items: &[Vertex]) -> Vec<Vec<Vertex>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Number of inequivalent genus-1 rotation systems, where two rotation
/// systems are equivalent when a graph automorphism, optionally combined
/// with reversing every cyclic order, maps one onto the other.
pub fn count_torus_embeddings(g: &Graph, budget: u64) -> Result<usize, OracleError> {
    let auts: Vec<BTreeMap<Vertex, Vertex>> = automorphisms(g)
        .into_iter()
        .map(|a| a.into_iter().collect())
        .collect();
    let mut classes: BTreeSet<Vec<(Vertex, Vec<Vertex>)>> = BTreeSet::new();
    let mut err = None;
    for_each_rotation(g, budget, |rot| {
        if err.is_some() {
            return;
        }
        match trace_faces(g, rot) {
            Ok(emb) if emb.genus == 1 => {
                let key = auts
                    .iter()
                    .flat_map(|a| {
                        let mapped = Rotation {
                            order: rot
                                .order
                                .iter()
                                .map(|(v, o)| (a[v], o.iter().map(|w| a[w]).collect()))
                                .collect(),
                        };
                        [mapped.normal_form(), mapped.reversed().normal_form()]
                    })
                    .min()
                    .expect("identity automorphism");
                classes.insert(key);
            }
            Ok(_) => {}
            Err(e) => err = Some(e),
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(classes.len()),
    }
}

/// Randomised local search for a rotation of genus at most `max_genus`.
/// Only ever proves an upper bound: `None` says nothing about the genus.
pub fn random_embedding_search(
    g: &Graph,
    max_genus: usize,
    iterations: u64,
    seed: u64,
) -> Option<RotationEmbedding> {
    let mut rng = StdRng::seed_from_u64(seed);
    let shuffled = |rng: &mut StdRng| Rotation {
        order: g
            .vertices()
            .map(|v| {
                let mut o: Vec<Vertex> = g.neighbors(v).collect();
                o.shuffle(rng);
                (v, o)
            })
            .collect(),
    };
    let movable: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let mut current = shuffled(&mut rng);
    let mut best = trace_faces(g, &current).ok()?;
    let mut current_faces = best.faces.len();
    for step in 0..iterations {
        if best.genus <= max_genus {
            return Some(best);
        }
        if movable.is_empty() {
            return None;
        }
        if step % 20_000 == 19_999 {
            current = shuffled(&mut rng);
            current_faces = trace_faces(g, &current).ok()?.faces.len();
        }
        let v = movable[rng.gen_range(0..movable.len())];
        let mut candidate = current.clone();
        let o = candidate.order.get_mut(&v).unwrap();
        let i = rng.gen_range(0..o.len());
        let j = rng.gen_range(0..o.len());
        o.swap(i, j);
        let emb = trace_faces(g, &candidate).ok()?;
        if emb.faces.len() >= current_faces || rng.gen_bool(0.02) {
            current_faces = emb.faces.len();
            current = candidate;
            if emb.genus < best.genus {
                best = emb;
            }
        }
    }
    (best.genus <= max_genus).then_some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k7_rotation() -> Rotation {
        // Vertex i sees i+1, i+3, i+2, i+6, i+4, i+5 (mod 7) in cyclic order.
        Rotation {
            order: (0..7)
                .map(|i| (i, [1, 3, 2, 6, 4, 5].iter().map(|d| (i + d) % 7).collect()))
                .collect(),
        }
    }

    #[test]
    fn k4_planar_rotation() {
        let g = Graph::complete(4);
        // Planar embedding: 0 in the middle of triangle 1-2-3.
        let rot = Rotation {
            order: BTreeMap::from([
                (0, vec![1, 2, 3]),
                (1, vec![0, 3, 2]),
                (2, vec![0, 1, 3]),
                (3, vec![0, 2, 1]),
            ]),
        };
        let emb = trace_faces(&g, &rot).unwrap();
        assert_eq!(emb.faces.len(), 4);
        assert_eq!(emb.genus, 0);
    }

    #[test]
    fn k5_every_rotation_has_positive_genus() {
        let g = Graph::complete(5);
        let mut count = 0;
        for_each_rotation(&g, DEFAULT_BUDGET, |rot| {
            count += 1;
            assert!(trace_faces(&g, rot).unwrap().genus >= 1);
        })
        .unwrap();
        assert_eq!(count, 7776);
    }

    #[test]
    fn k7_symmetric_rotation_is_a_triangulation_of_the_torus() {
        let g = Graph::complete(7);
        let emb = trace_faces(&g, &k7_rotation()).unwrap();
        assert_eq!(emb.faces.len(), 14);
        assert!(emb.faces.iter().all(|f| f.len() == 3));
        assert_eq!(emb.genus, 1);
    }

    #[test]
    fn malformed_rotation_is_rejected() {
        let g = Graph::complete(4);
        let mut rot = Rotation::sorted(&g);
        rot.order.insert(0, vec![1, 2]);
        assert!(matches!(
            trace_faces(&g, &rot),
            Err(OracleError::MalformedRotation(_))
        ));
    }

    #[test]
    fn min_genus_examples() {
        assert_eq!(
            min_genus_bruteforce(&Graph::complete(4), DEFAULT_BUDGET),
            Ok(0)
        );
        assert_eq!(
            min_genus_bruteforce(&Graph::complete(5), DEFAULT_BUDGET),
            Ok(1)
        );
        assert_eq!(
            min_genus_bruteforce(&Graph::complete_bipartite(3, 3), DEFAULT_BUDGET),
            Ok(1)
        );
        assert_eq!(
            min_genus_bruteforce(&Graph::petersen(), DEFAULT_BUDGET),
            Ok(1)
        );
        assert_eq!(
            min_genus_bruteforce(&Graph::complete(6), DEFAULT_BUDGET),
            Ok(1)
        );
        assert_eq!(
            min_genus_bruteforce(&Graph::complete(7), DEFAULT_BUDGET),
            Ok(1)
        );
        assert_eq!(min_genus_bruteforce(&Graph::path(2), DEFAULT_BUDGET), Ok(0));
        assert_eq!(
            min_genus_bruteforce(&Graph::empty(3), DEFAULT_BUDGET),
            Ok(0)
        );
    }

    #[test]
    fn genus_is_additive_over_components() {
        let two = Graph::complete(5).disjoint_union(&Graph::complete_bipartite(3, 3));
        assert_eq!(min_genus_bruteforce(&two, DEFAULT_BUDGET), Ok(2));
    }

    #[test]
    fn exhaustive_and_branch_and_bound_agree_on_small_graphs() {
        for g in [
            Graph::complete(5),
            Graph::complete_bipartite(3, 3),
            Graph::complete(5)
                .delete_edge(crate::Edge::new(0, 1))
                .unwrap(),
            Graph::complete_bipartite(3, 4),
        ] {
            let mut best = usize::MAX;
            for_each_rotation(&g, DEFAULT_BUDGET, |r| {
                best = best.min(trace_faces(&g, r).unwrap().genus);
            })
            .unwrap();
            assert_eq!(min_genus_bruteforce(&g, DEFAULT_BUDGET), Ok(best));
        }
    }

    #[test]
    fn budget_refusal() {
        assert_eq!(
            count_torus_embeddings(&Graph::complete(7), 1000),
            Err(OracleError::BudgetExceeded { budget: 1000 })
        );
        assert!(matches!(
            min_genus_bruteforce(&Graph::complete(8), 10),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn torus_embedding_counts() {
        assert_eq!(
            count_torus_embeddings(&Graph::complete(5), DEFAULT_BUDGET),
            Ok(6)
        );
        assert_eq!(
            count_torus_embeddings(&Graph::cycle(3), DEFAULT_BUDGET),
            Ok(0)
        );
    }

    #[test]
    fn reversal_preserves_genus() {
        let g = Graph::petersen();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let rot = Rotation {
                order: g
                    .vertices()
                    .map(|v| {
                        let mut o: Vec<Vertex> = g.neighbors(v).collect();
                        o.shuffle(&mut rng);
                        (v, o)
                    })
                    .collect(),
            };
            let a = trace_faces(&g, &rot).unwrap();
            let b = trace_faces(&g, &rot.reversed()).unwrap();
            assert_eq!(a.genus, b.genus);
        }
    }

    #[test]
    fn found_embedding_traces_to_requested_genus() {
        let m = crate::m_graph();
        let emb = find_embedding(&m, 1, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(emb.genus, 1);
        assert!(find_embedding(&Graph::complete(5), 0, DEFAULT_BUDGET)
            .unwrap()
            .is_none());
    }

    #[test]
    fn random_search_finds_torus_embedding_of_k5() {
        let emb = random_embedding_search(&Graph::complete(5), 1, 100_000, 1).unwrap();
        assert_eq!(emb.genus, 1);
    }

    #[test]
    fn rotation_text_roundtrip() {
        let r = k7_rotation();
        assert_eq!(Rotation::from_text(&r.to_text()).unwrap(), r);
    }
}
