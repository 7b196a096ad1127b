mod common;

use ktorus::genus::{min_genus_bruteforce, DEFAULT_BUDGET};
use ktorus::planarity::is_planar;
use ktorus::structure::is_k33_free;
use ktorus::toroidality::{decide_toroidal, verify_certificate};

#[test]
fn enumeration_matches_known_class_counts() {
    let levels = common::graphs_up_to(7);
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156, 1044]);
    let connected: Vec<usize> = levels
        .iter()
        .map(|l| l.iter().filter(|g| g.is_connected()).count())
        .collect();
    assert_eq!(connected[1..], [1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn decider_matches_genus_on_graphs_up_to_six_vertices() {
    for level in common::graphs_up_to(6) {
        for g in level.iter().filter(|g| g.is_connected() && is_k33_free(g)) {
            let v = decide_toroidal(g);
            verify_certificate(g, &v).unwrap();
            let genus = min_genus_bruteforce(g, DEFAULT_BUDGET).unwrap();
            assert_eq!(v.is_toroidal(), genus <= 1, "{g:?}: {v}");
        }
    }
}

#[test]
fn genus_zero_is_planarity() {
    for level in common::graphs_up_to(7) {
        for g in &level {
            let genus = min_genus_bruteforce(g, DEFAULT_BUDGET).unwrap();
            assert_eq!(genus == 0, is_planar(g), "{g:?}");
        }
    }
}
