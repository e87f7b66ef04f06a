use std::collections::BTreeSet;

use endvertex::chordal::{build_clique_graph, critical_edges, minimal_separators_chordal};
use endvertex::dispatch::{end_vertex, RunConfig};
use endvertex::dot::{clique_graph_dot, clique_path_dot};
use endvertex::graph::{distances_from, is_chordal};
use endvertex::interval::{build_clique_path, trace_procedure};
use endvertex::reduction::{build_reduction, Role};
use endvertex::samples;
use endvertex::{Algorithm, Graph, SearchKind};

fn set(g: &Graph, names: &[&str]) -> Vec<usize> {
    let mut v: Vec<usize> = names.iter().map(|s| g.vertex(s).unwrap()).collect();
    v.sort_unstable();
    v
}

/// `v_i` has id `i - 1`.
fn vs(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i - 1).collect()
}

#[test]
fn chordal18_has_ten_listed_cliques() {
    let g = samples::chordal18();
    assert!(is_chordal(&g).is_some());
    let cg = build_clique_graph(&g).unwrap();
    let expected: BTreeSet<Vec<usize>> = [
        &[1, 2, 3, 4][..],
        &[2, 3, 4, 5, 6],
        &[5, 6, 7],
        &[5, 6, 8],
        &[5, 6, 9, 10],
        &[9, 10, 11],
        &[11, 12, 13],
        &[12, 13, 14, 15],
        &[13, 16, 17],
        &[13, 15, 18],
    ]
    .iter()
    .map(|k| vs(k))
    .collect();
    let got: BTreeSet<Vec<usize>> = cg.cliques().iter().cloned().collect();
    assert_eq!(got, expected);
}

#[test]
fn chordal18_minimal_separators() {
    let g = samples::chordal18();
    let expected: BTreeSet<Vec<usize>> = [
        &[11][..],
        &[5, 6],
        &[2, 3, 4],
        &[12, 13],
        &[13],
        &[13, 15],
        &[9, 10],
    ]
    .iter()
    .map(|s| vs(s))
    .collect();
    assert_eq!(minimal_separators_chordal(&g).unwrap(), expected);
}

#[test]
fn bridge_edge_is_critical_for_every_clique_but_one() {
    let g = samples::chordal18();
    let cg = build_clique_graph(&g).unwrap();
    let k6 = cg.find_clique(&vs(&[9, 10, 11])).unwrap();
    let k7 = cg.find_clique(&vs(&[11, 12, 13])).unwrap();
    let k9 = cg.find_clique(&vs(&[13, 16, 17])).unwrap();
    let bridge = cg.edge_between(k6, k7).unwrap();
    for k in 0..cg.clique_count() {
        assert_eq!(
            critical_edges(&cg, k).contains(&bridge),
            k != k9,
            "clique {k}"
        );
    }
}

#[test]
fn chordal18_clique_graph_dot() {
    let g = samples::chordal18();
    let dot = clique_graph_dot(&g, &build_clique_graph(&g).unwrap());
    assert_eq!(dot.lines().filter(|l| l.contains("\\n")).count(), 10);
    assert!(dot.contains("[label=\"{v2,v3,v4}\", weight=3]"));
    assert_eq!(dot, clique_graph_dot(&g, &build_clique_graph(&g).unwrap()));
}

#[test]
fn chordal18_mcs_queries_route_to_mcs_plus() {
    let g = samples::chordal18();
    let r = end_vertex(
        &g,
        &RunConfig::new(SearchKind::Mcs, g.vertex("v7").unwrap()),
    )
    .unwrap();
    assert!(r.is_yes());
    assert_eq!(r.algorithm, Algorithm::ChordalMcsPlus);
}

#[test]
fn intervals8_clique_path_and_procedure() {
    let model = samples::intervals8();
    let g = model.to_graph();
    let cp = build_clique_path(&g).unwrap().unwrap();
    let expected: Vec<Vec<usize>> = [
        ["u", "z", "a"],
        ["z", "a", "c"],
        ["a", "c", "b"],
        ["c", "b", "d"],
        ["b", "d", "s"],
        ["d", "s", "w"],
    ]
    .iter()
    .map(|k| set(&g, k))
    .collect();
    let cp = if cp.cliques()[0] == expected[0] {
        cp
    } else {
        cp.reversed()
    };
    assert_eq!(cp.cliques(), &expected[..]);
    assert_eq!(model.clique_path().unwrap().cliques().len(), 6);

    let [u, w, z, b] = ["u", "w", "z", "b"].map(|s| g.vertex(s).unwrap());
    assert_eq!((cp.lp(b), cp.rp(z)), (3, 2));
    let forward = trace_procedure(&g, &cp, u, w, z).unwrap();
    assert!(!forward.answer);
    assert_eq!(forward.step, 6);
    let backward = trace_procedure(&g, &cp.reversed(), w, u, z).unwrap();
    assert!(backward.answer);
    assert_eq!(backward.step, 8);
    assert_eq!(distances_from(&g, w).unwrap()[u], Some(4));

    let dot = clique_path_dot(&g, &cp);
    assert_eq!(dot.lines().filter(|l| l.contains("\\n")).count(), 6);
}

#[test]
fn bfs7_auto_resolves_to_interval_bfs() {
    let g = samples::bfs7();
    let [s, z] = ["s", "z"].map(|v| g.vertex(v).unwrap());
    assert_eq!(distances_from(&g, s).unwrap()[z], Some(2));
    let r = end_vertex(&g, &RunConfig::new(SearchKind::Bfs, z)).unwrap();
    assert!(r.is_yes());
    assert_eq!(r.algorithm, Algorithm::IntervalBfs);
}

#[test]
fn sat4x3_general_route_uses_exact_dp() {
    let rg = build_reduction(&samples::sat4x3());
    let cfg = RunConfig {
        class: endvertex::ClassHint::General,
        ..RunConfig::new(SearchKind::Mcs, rg.z())
    };
    let r = end_vertex(&rg.graph, &cfg).unwrap();
    assert!(r.is_yes());
    assert_eq!(r.algorithm, Algorithm::ExactDp);
    assert_eq!(
        rg.roles
            .iter()
            .filter(|r| matches!(r, Role::Literal { .. }))
            .count(),
        8
    );
}
