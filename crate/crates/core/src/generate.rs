//! Seeded random connected graphs for each class.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::interval::IntervalModel;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Chordal,
    Interval,
    General,
}

impl GraphClass {
    pub const ALL: [GraphClass; 3] = [
        GraphClass::Chordal,
        GraphClass::Interval,
        GraphClass::General,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::Chordal => "chordal",
            GraphClass::Interval => "interval",
            GraphClass::General => "general",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown graph class {s:?}"))
    }
}

/// A connected graph of the class on `n` vertices.
pub fn random_graph<R: Rng + ?Sized>(class: GraphClass, n: usize, rng: &mut R) -> Graph {
    match class {
        GraphClass::Chordal => random_chordal(n, rng),
        GraphClass::Interval => random_interval_model(n, rng).to_graph(),
        GraphClass::General => random_general(n, rng),
    }
}

fn relabel<R: Rng + ?Sized>(n: usize, edges: BTreeSet<(usize, usize)>, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))
        .expect("generated edges are simple")
}

fn random_tree<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); k];
    for i in 1..k {
        let j = rng.gen_range(0..i);
        adj[i].push(j);
        adj[j].push(i);
    }
    adj
}

/// Intersection graph of random subtrees of a random tree.
///
/// The first vertices take one tree edge each, which keeps the graph
/// connected; the others take random subtrees of up to four nodes.
pub fn random_chordal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let k = rng.gen_range((n / 2).max(2)..=n + 1);
    let tree = random_tree(k, rng);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (v, node) in (1..k).enumerate() {
        members[node].push(v);
        members[tree[node][0]].push(v);
    }
    for v in k - 1..n {
        let size = rng.gen_range(1..=4);
        let mut sub = vec![rng.gen_range(0..k)];
        for _ in 1..size {
            let from = sub[rng.gen_range(0..sub.len())];
            let to = tree[from][rng.gen_range(0..tree[from].len())];
            if !sub.contains(&to) {
                sub.push(to);
            }
        }
        for node in sub {
            members[node].push(v);
        }
    }
    let mut edges = BTreeSet::new();
    for list in &members {
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    relabel(n, edges, rng)
}

/// Random integer intervals, each starting inside the union of the earlier
/// ones so the overlap graph is connected. Vertex ids are shuffled.
pub fn random_interval_model<R: Rng + ?Sized>(n: usize, rng: &mut R) -> IntervalModel {
    let max_len: i64 = rng.gen_range(2..=8);
    let mut intervals = Vec::with_capacity(n);
    let (mut lo, mut reach) = (0i64, 0i64);
    for i in 0..n {
        if i > 0 {
            lo = rng.gen_range(lo..=reach.min(lo + max_len));
        }
        let hi = lo + rng.gen_range(0..=max_len);
        reach = reach.max(hi);
        intervals.push((lo, hi));
    }
    intervals.shuffle(rng);
    IntervalModel::new(intervals).expect("lo <= hi by construction")
}

/// Random spanning tree plus each remaining pair with a random density.
pub fn random_general<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        edges.insert((rng.gen_range(0..v), v));
    }
    let density = rng.gen_range(0.1..0.6);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.insert((u, v));
            }
        }
    }
    relabel(n, edges, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_chordal;
    use crate::interval::build_clique_path;

    #[test]
    fn generators_are_connected_and_in_class() {
        for seed in 0..40 {
            let mut r = rng(seed);
            let n = 1 + seed as usize % 12;
            let c = random_chordal(n, &mut r);
            assert!(c.is_connected() && is_chordal(&c).is_some(), "seed {seed}");
            let m = random_interval_model(n, &mut r);
            let g = m.to_graph();
            assert!(g.is_connected());
            assert!(build_clique_path(&g).unwrap().is_some(), "seed {seed}");
            m.clique_path().unwrap().validate(&g).unwrap();
            assert!(random_general(n, &mut r).is_connected());
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let a = random_graph(GraphClass::Chordal, 10, &mut rng(7));
        let b = random_graph(GraphClass::Chordal, 10, &mut rng(7));
        assert_eq!(a, b);
    }
}
