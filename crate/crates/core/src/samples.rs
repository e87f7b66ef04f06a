//! Small named example instances used by tests, benches and the CLI.

use crate::graph::Graph;
use crate::interval::IntervalModel;
use crate::reduction::{Literal, Sat3Instance};

/// Chordal graph on `v1..v18` with ten maximal cliques. Vertex `v_i` has id
/// `i - 1`.
pub fn chordal18() -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut join = |a: &[usize], b: &[usize]| {
        for &x in a {
            for &y in b {
                edges.push((x - 1, y - 1));
            }
        }
    };
    join(&[1, 5, 6], &[2, 3, 4]);
    join(&[5, 6], &[7, 8, 9, 10]);
    join(&[12, 13], &[11, 14, 15]);
    for (a, b) in [
        (2, 3),
        (3, 4),
        (2, 4),
        (5, 6),
        (9, 10),
        (10, 11),
        (9, 11),
        (13, 16),
        (16, 17),
        (13, 17),
        (12, 13),
        (13, 18),
        (15, 18),
        (14, 15),
    ] {
        join(&[a], &[b]);
    }
    let names = (1..=18).map(|i| format!("v{i}")).collect();
    Graph::from_edges(18, edges)
        .and_then(|g| g.with_names(names))
        .expect("fixture is simple")
}

/// Eight intervals `u, z, a, b, c, s, d, w`, where no BFS from `w` ends
/// anywhere but `u`.
pub fn intervals8() -> IntervalModel {
    let rows = [
        ("u", 3, 7),
        ("z", 5, 12),
        ("a", 6, 14),
        ("b", 13, 21),
        ("c", 11, 17),
        ("s", 20, 26),
        ("d", 16, 25),
        ("w", 22, 29),
    ];
    IntervalModel::new(rows.iter().map(|&(_, lo, hi)| (lo, hi)).collect())
        .and_then(|m| m.with_names(rows.iter().map(|r| r.0.to_string()).collect()))
        .expect("fixture intervals are valid")
}

/// Seven-vertex interval graph where `z` ends the BFS `s, v, u, x, w, y, z`.
pub fn bfs7() -> Graph {
    Graph::from_labeled_edges(
        &["u", "x", "z", "y", "w", "s", "v"],
        &[
            ("s", "u"),
            ("u", "x"),
            ("x", "z"),
            ("z", "y"),
            ("y", "w"),
            ("w", "v"),
            ("v", "y"),
            ("z", "v"),
            ("v", "x"),
            ("x", "s"),
            ("s", "v"),
        ],
    )
    .expect("fixture is simple")
}

/// Four variables, three clauses:
/// `(~x1 | ~x2 | ~x3) & (x1 | ~x2 | x4) & (~x2 | ~x3 | ~x4)`.
pub fn sat4x3() -> Sat3Instance {
    let (p, n) = (Literal::pos, Literal::neg);
    Sat3Instance::new(
        4,
        vec![[n(0), n(1), n(2)], [p(0), n(1), p(3)], [n(1), n(2), n(3)]],
    )
    .expect("fixture instance is valid")
}
