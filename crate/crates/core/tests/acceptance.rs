//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::time::Instant;

use ktorus::genus::{
    count_torus_embeddings, find_embedding, min_genus_bruteforce, trace_faces, Rotation,
    DEFAULT_BUDGET,
};
use ktorus::graph::{has_minor, is_isomorphic};
use ktorus::obstructions::{
    builtin, catalog, enumerate_splits, verify_minor_obstruction, verify_topological_obstruction,
    ObstructionRecord, MINOR_ORDER,
};
use ktorus::structure::is_k33_free;
use ktorus::toroidality::{decide_toroidal, verify_certificate, Status};
use ktorus::Graph;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 7] = [
        ("obstruction minimality", minimality),
        ("topological list", topological),
        ("split regeneration", split_regeneration),
        ("oracle agreement", oracle_agreement),
        ("K5 torus embeddings", k5_embeddings),
        ("K7 toroidality and class gating", k7),
        ("minor equivalence", minor_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail}; {secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn torus_embeddable(g: &Graph) -> bool {
    find_embedding(g, 1, DEFAULT_BUDGET)
        .expect("within oracle budget")
        .is_some()
}

/// Genus-oracle replay of the obstruction conditions, independent of the
/// decision procedure.
fn oracle_obstruction(r: &ObstructionRecord, contractions: bool) -> bool {
    if torus_embeddable(&r.graph) {
        return false;
    }
    r.graph.edges().collect::<Vec<_>>().par_iter().all(|&e| {
        torus_embeddable(&r.graph.delete_edge(e).unwrap())
            && (!contractions || torus_embeddable(&r.graph.contract_edge(e).unwrap()))
    })
}

fn minimality() -> Outcome {
    let records = catalog();
    let passing: Vec<&str> = records
        .iter()
        .filter(|r| verify_minor_obstruction(&r.graph).passed)
        .map(|r| r.name.as_str())
        .collect();
    ensure(
        passing == MINOR_ORDER,
        format!("minor verifier passes {passing:?}"),
    )?;
    for r in records
        .iter()
        .filter(|r| MINOR_ORDER.contains(&r.name.as_str()))
    {
        ensure(
            oracle_obstruction(r, true),
            format!("genus oracle disagrees on {}", r.name),
        )?;
    }
    Ok("exactly G1-G4 pass; genus oracle confirms all deletions and contractions".into())
}

fn topological() -> Outcome {
    let records = catalog();
    ensure(
        records.len() == 11,
        format!("catalog has {} graphs", records.len()),
    )?;
    let mut contraction_failures = 0;
    for r in &records {
        let report = verify_topological_obstruction(&r.graph);
        ensure(report.passed, format!("{}: {:?}", r.name, report.failures))?;
        if verify_minor_obstruction(&r.graph).fails_contraction() {
            contraction_failures += 1;
        }
        ensure(
            oracle_obstruction(r, false),
            format!("genus oracle disagrees on {}", r.name),
        )?;
    }
    ensure(
        contraction_failures == 7,
        format!("{contraction_failures} graphs fail the contraction clause"),
    )?;
    Ok("11 pass, 7 fail the contraction clause; genus oracle confirms deletions".into())
}

fn split_regeneration() -> Outcome {
    let seeds: Vec<Graph> = MINOR_ORDER.iter().map(|n| builtin(n).unwrap()).collect();
    let generated = enumerate_splits(&seeds);
    ensure(
        generated.len() == 11,
        format!("{} classes", generated.len()),
    )?;
    for r in catalog() {
        let hits = generated
            .iter()
            .filter(|g| is_isomorphic(g, &r.graph))
            .count();
        ensure(
            hits == 1,
            format!("{} matched {hits} generated graphs", r.name),
        )?;
    }
    Ok("11 classes, one per catalog graph".into())
}

fn oracle_agreement() -> Outcome {
    let levels = common::graphs_up_to(8);
    let small: Vec<&Graph> = levels[..=7]
        .iter()
        .flatten()
        .filter(|g| g.is_connected() && is_k33_free(g))
        .collect();
    let mismatches: Vec<String> = small
        .par_iter()
        .filter_map(|g| {
            let v = decide_toroidal(g);
            if let Err(e) = verify_certificate(g, &v) {
                return Some(format!("{g:?}: certificate {e}"));
            }
            let genus = min_genus_bruteforce(g, DEFAULT_BUDGET).expect("within oracle budget");
            (v.is_toroidal() != (genus <= 1)).then(|| format!("{g:?}: {v} vs genus {genus}"))
        })
        .collect();
    ensure(mismatches.is_empty(), format!("decider: {mismatches:?}"))?;

    let k33 = Graph::complete_bipartite(3, 3);
    let all: Vec<&Graph> = levels.iter().flatten().collect();
    let disagreements = all
        .par_iter()
        .filter(|g| is_k33_free(g) == has_minor(g, &k33))
        .count();
    ensure(
        disagreements == 0,
        format!("{disagreements} K3,3 disagreements"),
    )?;
    Ok(format!(
        "{} connected class graphs on <= 7 vertices agree with genus; {} graphs on <= 8 vertices agree on K3,3",
        small.len(),
        all.len()
    ))
}

fn k5_embeddings() -> Outcome {
    let n =
        count_torus_embeddings(&Graph::complete(5), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(n == 6, format!("{n} classes"))?;
    Ok("6 classes up to automorphism and reflection".into())
}

fn k7() -> Outcome {
    let g = Graph::complete(7);
    let rotation = Rotation {
        order: (0..7)
            .map(|i| (i, [1, 3, 2, 6, 4, 5].iter().map(|d| (i + d) % 7).collect()))
            .collect(),
    };
    let emb = trace_faces(&g, &rotation).map_err(|e| e.to_string())?;
    ensure(
        emb.faces.len() == 14 && emb.faces.iter().all(|f| f.len() == 3) && emb.genus == 1,
        format!("{} faces, genus {}", emb.faces.len(), emb.genus),
    )?;
    let v = decide_toroidal(&g);
    ensure(v.status == Status::NotInClass, format!("decide(K7) = {v}"))?;
    verify_certificate(&g, &v)?;
    Ok("14 triangular faces, genus 1; decide = NotInClass".into())
}

fn minor_equivalence() -> Outcome {
    let forbidden: Vec<Graph> = MINOR_ORDER.iter().map(|n| builtin(n).unwrap()).collect();
    let mut corpus: Vec<Graph> = catalog().into_iter().map(|r| r.graph).collect();
    corpus.extend(common::random_k33_free_graphs(200, 12, 2024));
    let results: Vec<(bool, bool)> = corpus
        .par_iter()
        .map(|g| {
            let toroidal = decide_toroidal(g).is_toroidal();
            let minor_free = !forbidden.iter().any(|f| has_minor(g, f));
            (toroidal, minor_free)
        })
        .collect();
    let mismatches: Vec<&Graph> = corpus
        .iter()
        .zip(&results)
        .filter(|(_, (t, m))| t != m)
        .map(|(g, _)| g)
        .collect();
    ensure(mismatches.is_empty(), format!("mismatches: {mismatches:?}"))?;
    let toroidal = results.iter().filter(|r| r.0).count();
    Ok(format!(
        "{} graphs agree, {toroidal} toroidal and {} not",
        corpus.len(),
        corpus.len() - toroidal
    ))
}
