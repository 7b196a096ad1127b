//! Torus embeddability of graphs with no K3,3 subdivision.
//!
//! Genus is additive over blocks, so only a graph with exactly one
//! non-planar block needs work. In that block a K5 subdivision is found and
//! the graph is cut into its ten side components; the number of non-planar
//! augmented components, speciality of the odd one out, and if needed an M
//! subdivision with all augmented components planar decide the answer.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ClassError;
use crate::graph::{blocks, find_subdivision, find_subdivision_pinned, Edge, Graph, Vertex};
use crate::planarity::{find_k5_subdivision, is_planar};
use crate::structure::{
    decompose_by_corners, find_k33, is_special, m_side_components, SideComponent, SideDecomposition,
};
use crate::witness::{BranchPath, Pattern, SubdivisionWitness, M_CENTRAL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Toroidal,
    NonToroidal,
    NotInClass,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Toroidal => "Toroidal",
            Status::NonToroidal => "NonToroidal",
            Status::NotInClass => "NotInClass",
        };
        f.write_str(s)
    }
}

/// Planarity table row for one side component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub corners: (Vertex, Vertex),
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub has_corner_edge: bool,
    pub planar: bool,
    pub augmented_planar: bool,
}

impl ComponentReport {
    fn of(sc: &SideComponent) -> Self {
        ComponentReport {
            corners: sc.corners,
            vertices: sc.subgraph.vertices().collect(),
            edges: sc.subgraph.edges().collect(),
            has_corner_edge: sc.has_corner_edge(),
            planar: is_planar(&sc.subgraph),
            augmented_planar: is_planar(&sc.augmented),
        }
    }

    fn subgraph(&self) -> Graph {
        let mut g = Graph::edge_subgraph(&self.edges);
        for &v in &self.vertices {
            g.add_vertex(v);
        }
        g
    }
}

fn table(dec: &SideDecomposition) -> Vec<ComponentReport> {
    dec.components.iter().map(ComponentReport::of).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum Certificate {
    AllPlanarBlocks {
        blocks: usize,
    },
    #[serde(rename = "Case-i")]
    CaseI {
        witness: SubdivisionWitness,
        components: Vec<ComponentReport>,
    },
    #[serde(rename = "Case-ii")]
    CaseII {
        witness: SubdivisionWitness,
        components: Vec<ComponentReport>,
        special: usize,
    },
    #[serde(rename = "Case-iii")]
    CaseIII {
        k5: SubdivisionWitness,
        witness: SubdivisionWitness,
        components: Vec<ComponentReport>,
    },
    TwoNonplanarBlocks {
        blocks: [Vec<Vertex>; 2],
    },
    TwoNonplanarAugmented {
        witness: SubdivisionWitness,
        components: Vec<ComponentReport>,
        nonplanar: [usize; 2],
    },
    FailedMCase {
        k5: SubdivisionWitness,
        witness: SubdivisionWitness,
        components: Vec<ComponentReport>,
        nonplanar: Vec<usize>,
    },
    NoValidM {
        witness: SubdivisionWitness,
        components: Vec<ComponentReport>,
        nonplanar: usize,
    },
    K33Found {
        witness: SubdivisionWitness,
    },
}

impl Certificate {
    pub fn tag(&self) -> &'static str {
        match self {
            Certificate::AllPlanarBlocks { .. } => "AllPlanarBlocks",
            Certificate::CaseI { .. } => "Case-i",
            Certificate::CaseII { .. } => "Case-ii",
            Certificate::CaseIII { .. } => "Case-iii",
            Certificate::TwoNonplanarBlocks { .. } => "TwoNonplanarBlocks",
            Certificate::TwoNonplanarAugmented { .. } => "TwoNonplanarAugmented",
            Certificate::FailedMCase { .. } => "FailedMCase",
            Certificate::NoValidM { .. } => "NoValidM",
            Certificate::K33Found { .. } => "K33Found",
        }
    }

    pub fn status(&self) -> Status {
        match self {
            Certificate::AllPlanarBlocks { .. }
            | Certificate::CaseI { .. }
            | Certificate::CaseII { .. }
            | Certificate::CaseIII { .. } => Status::Toroidal,
            Certificate::K33Found { .. } => Status::NotInClass,
            _ => Status::NonToroidal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToroidalityVerdict {
    pub status: Status,
    pub certificate: Certificate,
}

impl ToroidalityVerdict {
    fn new(certificate: Certificate) -> Self {
        ToroidalityVerdict {
            status: certificate.status(),
            certificate,
        }
    }

    pub fn is_toroidal(&self) -> bool {
        self.status == Status::Toroidal
    }

    pub fn case_tag(&self) -> &'static str {
        self.certificate.tag()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdicts always serialise")
    }
}

impl fmt::Display for ToroidalityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.case_tag())
    }
}

pub fn decide_toroidal(g: &Graph) -> ToroidalityVerdict {
    if let Some(w) = find_k33(g) {
        return ToroidalityVerdict::new(Certificate::K33Found { witness: w });
    }
    let decomposition = blocks(g);
    let nonplanar: Vec<Graph> = decomposition
        .blocks
        .iter()
        .map(|b| b.graph())
        .filter(|b| !is_planar(b))
        .collect();
    let certificate = match nonplanar.as_slice() {
        [] => Certificate::AllPlanarBlocks {
            blocks: decomposition.blocks.len(),
        },
        [block] => decide_block(block),
        [first, second, ..] => Certificate::TwoNonplanarBlocks {
            blocks: [first.vertices().collect(), second.vertices().collect()],
        },
    };
    ToroidalityVerdict::new(certificate)
}

/// The three-case criterion on a 2-connected non-planar K3,3-free graph.
fn decide_block(block: &Graph) -> Certificate {
    let class_violation = |e: ClassError| match e {
        ClassError::K33Found(w) => Certificate::K33Found { witness: *w },
        other => panic!("K3,3-free block broke a decomposition invariant: {other}"),
    };
    let w = match find_k5_subdivision(block) {
        Ok(w) => w,
        Err(e) => return class_violation(e),
    };
    let dec = match decompose_by_corners(block, &w) {
        Ok(d) => d,
        Err(e) => return class_violation(e),
    };
    let nonplanar = dec.nonplanar_augmented();
    let components = table(&dec);
    match nonplanar.as_slice() {
        [] => Certificate::CaseI {
            witness: w,
            components,
        },
        [i, j, ..] => Certificate::TwoNonplanarAugmented {
            witness: w,
            components,
            nonplanar: [*i, *j],
        },
        [i] => {
            let f = &dec.components[*i];
            if is_special(f) {
                return Certificate::CaseII {
                    witness: w,
                    components,
                    special: *i,
                };
            }
            let tm = match build_m_subdivision(block, &w, f) {
                Ok(tm) => tm,
                Err(ClassError::NoM) => {
                    return Certificate::NoValidM {
                        witness: w,
                        components,
                        nonplanar: *i,
                    }
                }
                Err(e) => return class_violation(e),
            };
            let mdec = match m_side_components(block, &tm) {
                Ok(d) => d,
                Err(e) => return class_violation(e),
            };
            let bad = mdec.nonplanar_augmented();
            let mcomponents = table(&mdec);
            if bad.is_empty() {
                Certificate::CaseIII {
                    k5: w,
                    witness: tm,
                    components: mcomponents,
                }
            } else {
                Certificate::FailedMCase {
                    k5: w,
                    witness: tm,
                    components: mcomponents,
                    nonplanar: bad,
                }
            }
        }
    }
}

/// An M subdivision whose central path joins the corners `a`, `b` of the
/// non-planar side component `f`.
///
/// First a K5 subdivision through `a` and `b` is looked for inside the
/// augmented component and glued to the rest of `w`; if that does not give a
/// valid M subdivision, an exhaustive search pinned at `a`, `b` runs, and
/// finally an unpinned one.
pub fn build_m_subdivision(
    g: &Graph,
    w: &SubdivisionWitness,
    f: &SideComponent,
) -> Result<SubdivisionWitness, ClassError> {
    if w.pattern != Pattern::K5 {
        return Err(ClassError::Precondition("expected a K5 subdivision".into()));
    }
    if is_planar(&f.augmented) {
        return Err(ClassError::Precondition(
            "side component has a planar augmentation".into(),
        ));
    }
    let (a, b) = f.corners;
    if let Some(tm) = glue(g, w, f) {
        return Ok(tm);
    }
    let (x, y) = M_CENTRAL;
    find_subdivision_pinned(g, &Pattern::M, &[(x, a), (y, b)])
        .or_else(|| find_subdivision(g, &Pattern::M))
        .ok_or(ClassError::NoM)
}

fn glue(g: &Graph, w: &SubdivisionWitness, f: &SideComponent) -> Option<SubdivisionWitness> {
    let (a, b) = f.corners;
    let inner = find_subdivision_pinned(&f.augmented, &Pattern::K5, &[(0, a), (1, b)])?;
    let ia = w.corners.iter().position(|&c| c == a)?;
    let ib = w.corners.iter().position(|&c| c == b)?;
    let outer: Vec<usize> = (0..5).filter(|&k| k != ia && k != ib).collect();

    let central_inner = inner.oriented_path(0, 1)?;
    let central = if central_inner.len() > 2 || g.has_edge(a, b) && central_inner.len() == 2 {
        central_inner
    } else {
        w.oriented_path(ia, ib)?
    };

    let mut corners = vec![a, b];
    corners.extend(outer.iter().map(|&k| w.corners[k]));
    corners.extend(inner.corners[2..].iter().copied());
    // Pattern indices: 0 = a, 1 = b, 2..5 the outer corners of w, 5..8 those
    // of the inner subdivision.
    let from_w = |k: usize| -> usize {
        if k == ia {
            0
        } else if k == ib {
            1
        } else {
            2 + outer.iter().position(|&o| o == k).unwrap()
        }
    };
    let mut paths = vec![BranchPath {
        pattern_edge: (0, 1),
        vertices: central,
    }];
    for p in &w.paths {
        let (i, j) = p.pattern_edge;
        if (i, j) == (ia.min(ib), ia.max(ib)) {
            continue;
        }
        let (s, t) = (from_w(i), from_w(j));
        let vertices = if s < t {
            p.vertices.clone()
        } else {
            p.vertices.iter().rev().copied().collect()
        };
        paths.push(BranchPath {
            pattern_edge: (s.min(t), s.max(t)),
            vertices,
        });
    }
    for p in &inner.paths {
        let (i, j) = p.pattern_edge;
        if (i, j) == (0, 1) {
            continue;
        }
        let map = |k: usize| if k < 2 { k } else { k + 3 };
        paths.push(BranchPath {
            pattern_edge: (map(i), map(j)),
            vertices: p.vertices.clone(),
        });
    }
    paths.sort_by_key(|p| p.pattern_edge);
    let tm = SubdivisionWitness {
        pattern: Pattern::M,
        corners,
        paths,
    };
    tm.validate(g).ok()?;
    Some(tm)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockKind {
    Planar,
    ToroidalNonplanar,
    NonToroidal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockVerdict {
    pub vertices: Vec<Vertex>,
    pub kind: BlockKind,
}

/// Per-block classification. The whole graph is toroidal exactly when at
/// most one block is non-planar and that block is toroidal.
pub fn genus_additivity_check(g: &Graph) -> Result<Vec<BlockVerdict>, ClassError> {
    if let Some(w) = find_k33(g) {
        return Err(ClassError::K33Found(Box::new(w)));
    }
    Ok(blocks(g)
        .blocks
        .iter()
        .map(|b| {
            let bg = b.graph();
            let kind = if is_planar(&bg) {
                BlockKind::Planar
            } else if decide_block(&bg).status() == Status::Toroidal {
                BlockKind::ToroidalNonplanar
            } else {
                BlockKind::NonToroidal
            };
            BlockVerdict {
                vertices: b.vertices.iter().copied().collect(),
                kind,
            }
        })
        .collect())
}

pub fn additivity_says_toroidal(verdicts: &[BlockVerdict]) -> bool {
    let nonplanar: Vec<&BlockVerdict> = verdicts
        .iter()
        .filter(|v| v.kind != BlockKind::Planar)
        .collect();
    match nonplanar.as_slice() {
        [] => true,
        [one] => one.kind == BlockKind::ToroidalNonplanar,
        _ => false,
    }
}

/// Replays every claim of a certificate against `g` with the planarity
/// module and the witness validators.
pub fn verify_certificate(g: &Graph, verdict: &ToroidalityVerdict) -> Result<(), String> {
    let cert = &verdict.certificate;
    if verdict.status != cert.status() {
        return Err("status does not match certificate".into());
    }
    let check_table = |components: &[ComponentReport]| -> Result<(), String> {
        for (k, c) in components.iter().enumerate() {
            let sub = c.subgraph();
            if !sub.is_subgraph_of(g) {
                return Err(format!("component {k} is not a subgraph"));
            }
            let mut aug = sub.clone();
            aug.add_edge(c.corners.0, c.corners.1)
                .map_err(|e| e.to_string())?;
            if is_planar(&sub) != c.planar || is_planar(&aug) != c.augmented_planar {
                return Err(format!("planarity claim for component {k} does not replay"));
            }
            if sub.has_edge(c.corners.0, c.corners.1) != c.has_corner_edge {
                return Err(format!(
                    "corner edge claim for component {k} does not replay"
                ));
            }
        }
        Ok(())
    };
    let check_decomposition =
        |w: &SubdivisionWitness, components: &[ComponentReport]| -> Result<(), String> {
            w.validate(g)?;
            check_table(components)?;
            let edges: BTreeSet<Edge> = components
                .iter()
                .flat_map(|c| c.edges.iter().copied())
                .collect();
            let total: usize = components.iter().map(|c| c.edges.len()).sum();
            if edges.len() != total {
                return Err("components overlap in an edge".into());
            }
            if components.len() != w.paths.len() {
                return Err("one component per pattern edge expected".into());
            }
            Ok(())
        };
    match cert {
        Certificate::AllPlanarBlocks { .. } => {
            if blocks(g).blocks.iter().all(|b| is_planar(&b.graph())) {
                Ok(())
            } else {
                Err("a block is non-planar".into())
            }
        }
        Certificate::TwoNonplanarBlocks { blocks: bs } => {
            for b in bs {
                let set: BTreeSet<Vertex> = b.iter().copied().collect();
                if is_planar(&g.induced_subgraph(&set)) {
                    return Err("claimed non-planar block is planar".into());
                }
            }
            let shared = bs[0].iter().filter(|v| bs[1].contains(v)).count();
            if shared > 1 {
                return Err("blocks share more than a cut vertex".into());
            }
            Ok(())
        }
        Certificate::CaseI {
            witness,
            components,
        } => {
            check_decomposition(witness, components)?;
            if components.iter().all(|c| c.augmented_planar) {
                Ok(())
            } else {
                Err("non-planar augmented component in case i".into())
            }
        }
        Certificate::CaseII {
            witness,
            components,
            special,
        } => {
            check_decomposition(witness, components)?;
            let s = components
                .get(*special)
                .ok_or("special index out of range")?;
            let others_planar = components
                .iter()
                .enumerate()
                .all(|(k, c)| k == *special || c.augmented_planar);
            if others_planar && !s.has_corner_edge && s.planar && !s.augmented_planar {
                Ok(())
            } else {
                Err("case ii conditions do not hold".into())
            }
        }
        Certificate::CaseIII {
            k5,
            witness,
            components,
        } => {
            k5.validate(g)?;
            check_decomposition(witness, components)?;
            if witness.pattern == Pattern::M && components.iter().all(|c| c.augmented_planar) {
                Ok(())
            } else {
                Err("case iii conditions do not hold".into())
            }
        }
        Certificate::TwoNonplanarAugmented {
            witness,
            components,
            nonplanar,
        } => {
            check_decomposition(witness, components)?;
            let ok = nonplanar[0] != nonplanar[1]
                && nonplanar
                    .iter()
                    .all(|&i| components.get(i).is_some_and(|c| !c.augmented_planar));
            if ok {
                Ok(())
            } else {
                Err("claimed non-planar components are planar".into())
            }
        }
        Certificate::FailedMCase {
            k5,
            witness,
            components,
            nonplanar,
        } => {
            k5.validate(g)?;
            check_decomposition(witness, components)?;
            let ok = !nonplanar.is_empty()
                && nonplanar
                    .iter()
                    .all(|&i| components.get(i).is_some_and(|c| !c.augmented_planar));
            if ok {
                Ok(())
            } else {
                Err("claimed non-planar M components are planar".into())
            }
        }
        Certificate::NoValidM {
            witness,
            components,
            nonplanar,
        } => {
            check_decomposition(witness, components)?;
            let c = components.get(*nonplanar).ok_or("index out of range")?;
            if c.planar || c.augmented_planar {
                return Err("claimed non-planar component is planar".into());
            }
            if find_subdivision(g, &Pattern::M).is_some() {
                return Err("an M subdivision exists".into());
            }
            Ok(())
        }
        Certificate::K33Found { witness } => {
            if witness.pattern != Pattern::K33 {
                return Err("witness is not a K3,3 subdivision".into());
            }
            witness.validate(g)
        }
    }
}
