//! The six graph searches as eligible-set machines, tie-breaking runners,
//! ordering validation by replay, and the exhaustive end-vertex oracle.
//!
//! Every search is described by the set of vertices it may visit next given
//! the visited prefix:
//!
//! * BFS: vertices whose earliest visited neighbor is earliest overall.
//! * DFS: unvisited neighbors of the latest visited vertex that still has any.
//! * LBFS: lexicographically largest label, where a label lists visited
//!   neighbors by ascending timestamp and an earlier timestamp wins.
//! * LDFS: as LBFS with labels read from the latest timestamp backwards and a
//!   later timestamp winning.
//! * MCS: most visited neighbors.
//! * MNS: inclusion-maximal sets of visited neighbors.
//!
//! When no unvisited vertex touches the visited set every unvisited vertex is
//! eligible, which only happens on disconnected inputs.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};

/// Default vertex cap for [`end_vertices_oracle`].
pub const DEFAULT_ORACLE_CAP: usize = 10;

const UNSEEN: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchKind {
    Bfs,
    Dfs,
    Lbfs,
    Ldfs,
    Mcs,
    Mns,
}

impl SearchKind {
    pub const ALL: [SearchKind; 6] = [
        SearchKind::Bfs,
        SearchKind::Dfs,
        SearchKind::Lbfs,
        SearchKind::Ldfs,
        SearchKind::Mcs,
        SearchKind::Mns,
    ];

    /// Whether the eligible set depends only on the visited set.
    pub fn is_oblivious(self) -> bool {
        matches!(self, SearchKind::Mcs | SearchKind::Mns)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SearchKind::Bfs => "bfs",
            SearchKind::Dfs => "dfs",
            SearchKind::Lbfs => "lbfs",
            SearchKind::Ldfs => "ldfs",
            SearchKind::Mcs => "mcs",
            SearchKind::Mns => "mns",
        }
    }
}

impl fmt::Display for SearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SearchKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SearchKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown search kind {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Max,
    Min,
}

/// How a runner picks among several eligible vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TieBreaker {
    /// Lowest vertex id.
    Arbitrary,
    /// Vertex with the largest (or smallest) position in a reference ordering.
    ByPriority {
        ordering: VertexOrdering,
        direction: Direction,
    },
    /// Start at the given vertex, then lowest id.
    FixedFirst(usize),
}

impl TieBreaker {
    pub fn by_priority(ordering: VertexOrdering, direction: Direction) -> Self {
        TieBreaker::ByPriority {
            ordering,
            direction,
        }
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            TieBreaker::Arbitrary => Ok(()),
            TieBreaker::ByPriority { ordering, .. } if ordering.len() != g.n() => Err(
                Error::Precondition("priority ordering must cover every vertex".into()),
            ),
            TieBreaker::ByPriority { .. } => Ok(()),
            TieBreaker::FixedFirst(v) => g.check_vertex(*v),
        }
    }

    /// Picks one vertex from a nonempty, ascending eligible set.
    pub fn choose(&self, eligible: &[usize], step: usize) -> usize {
        match self {
            TieBreaker::Arbitrary => eligible[0],
            TieBreaker::FixedFirst(v) if step == 0 && eligible.contains(v) => *v,
            TieBreaker::FixedFirst(_) => eligible[0],
            TieBreaker::ByPriority {
                ordering,
                direction,
            } => {
                let it = eligible.iter().copied();
                match direction {
                    Direction::Max => it.max_by_key(|&v| ordering.position(v)),
                    Direction::Min => it.min_by_key(|&v| ordering.position(v)),
                }
                .unwrap()
            }
        }
    }
}

/// The incremental state of one search run.
#[derive(Clone, Debug)]
pub struct SearchState<'g> {
    graph: &'g Graph,
    kind: SearchKind,
    order: Vec<usize>,
    time: Vec<usize>,
    count: Vec<usize>,
    first_nbr: Vec<usize>,
    unvisited_nbrs: Vec<usize>,
    labels: Vec<Vec<usize>>,
}

impl<'g> SearchState<'g> {
    pub fn new(graph: &'g Graph, kind: SearchKind) -> Self {
        let n = graph.n();
        let labelled = matches!(kind, SearchKind::Lbfs | SearchKind::Ldfs | SearchKind::Mns);
        SearchState {
            graph,
            kind,
            order: Vec::with_capacity(n),
            time: vec![UNSEEN; n],
            count: vec![0; n],
            first_nbr: vec![UNSEEN; n],
            unvisited_nbrs: (0..n).map(|v| graph.degree(v)).collect(),
            labels: if labelled {
                vec![Vec::new(); n]
            } else {
                Vec::new()
            },
        }
    }

    /// Replays `prefix` without checking that it is a valid partial ordering.
    pub fn from_prefix(graph: &'g Graph, kind: SearchKind, prefix: &[usize]) -> Result<Self> {
        let mut state = SearchState::new(graph, kind);
        for &v in prefix {
            graph.check_vertex(v)?;
            if state.is_visited(v) {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
            state.visit(v);
        }
        Ok(state)
    }

    pub fn kind(&self) -> SearchKind {
        self.kind
    }

    pub fn visited(&self) -> &[usize] {
        &self.order
    }

    pub fn is_visited(&self, v: usize) -> bool {
        self.time[v] != UNSEEN
    }

    pub fn is_complete(&self) -> bool {
        self.order.len() == self.graph.n()
    }

    /// Number of visited neighbors of `v`.
    pub fn visited_neighbors(&self, v: usize) -> usize {
        self.count[v]
    }

    pub fn visit(&mut self, v: usize) {
        debug_assert!(!self.is_visited(v));
        let t = self.order.len();
        self.order.push(v);
        self.time[v] = t;
        for &u in self.graph.neighbors(v) {
            self.count[u] += 1;
            self.unvisited_nbrs[u] -= 1;
            if self.first_nbr[u] == UNSEEN {
                self.first_nbr[u] = t;
            }
            if !self.labels.is_empty() {
                self.labels[u].push(t);
            }
        }
    }

    fn unvisited(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.graph.n()).filter(|&v| self.time[v] == UNSEEN)
    }

    /// The vertices that may be visited next, ascending.
    pub fn eligible(&self) -> Vec<usize> {
        if self.order.is_empty() {
            return (0..self.graph.n()).collect();
        }
        match self.kind {
            SearchKind::Mcs => self.best_by(|a, b| self.count[a].cmp(&self.count[b])),
            SearchKind::Bfs => {
                let best = self.unvisited().map(|v| self.first_nbr[v]).min();
                match best {
                    None => Vec::new(),
                    Some(t) => self
                        .unvisited()
                        .filter(|&v| self.first_nbr[v] == t)
                        .collect(),
                }
            }
            SearchKind::Dfs => match self.dfs_anchor() {
                Some(a) => self
                    .graph
                    .neighbors(a)
                    .iter()
                    .copied()
                    .filter(|&u| !self.is_visited(u))
                    .collect(),
                None => self.unvisited().collect(),
            },
            SearchKind::Lbfs => self.best_by(|a, b| lbfs_cmp(&self.labels[a], &self.labels[b])),
            SearchKind::Ldfs => self.best_by(|a, b| ldfs_cmp(&self.labels[a], &self.labels[b])),
            SearchKind::Mns => {
                let cand: Vec<usize> = self.unvisited().collect();
                cand.iter()
                    .copied()
                    .filter(|&v| {
                        let lv = &self.labels[v];
                        !cand.iter().any(|&u| {
                            let lu = &self.labels[u];
                            lu.len() > lv.len() && is_sorted_subset(lv, lu)
                        })
                    })
                    .collect()
            }
        }
    }

    fn best_by(&self, cmp: impl Fn(usize, usize) -> Ordering) -> Vec<usize> {
        let mut best: Vec<usize> = Vec::new();
        for v in self.unvisited() {
            match best.first().map(|&b| cmp(v, b)) {
                None | Some(Ordering::Equal) => best.push(v),
                Some(Ordering::Greater) => {
                    best.clear();
                    best.push(v);
                }
                Some(Ordering::Less) => {}
            }
        }
        best
    }

    /// Latest visited vertex that still has an unvisited neighbor.
    fn dfs_anchor(&self) -> Option<usize> {
        self.order
            .iter()
            .rev()
            .copied()
            .find(|&v| self.unvisited_nbrs[v] > 0)
    }

    /// A key that determines every future eligible set: two states with equal
    /// signatures have the same set of completions.
    pub fn signature(&self) -> Vec<u64> {
        let n = self.graph.n();
        let mut key = vec![0u64; n.div_ceil(64)];
        for &v in &self.order {
            key[v / 64] |= 1 << (v % 64);
        }
        match self.kind {
            SearchKind::Mcs | SearchKind::Mns => {}
            SearchKind::Bfs => key.extend(self.unvisited().map(|v| self.first_nbr[v] as u64)),
            SearchKind::Dfs => key.extend(
                self.order
                    .iter()
                    .filter(|&&v| self.unvisited_nbrs[v] > 0)
                    .map(|&v| v as u64),
            ),
            SearchKind::Lbfs | SearchKind::Ldfs => {
                for v in self.unvisited() {
                    key.push(u64::MAX);
                    key.extend(self.labels[v].iter().map(|&t| t as u64));
                }
            }
        }
        key
    }

    pub fn into_ordering(self) -> VertexOrdering {
        VertexOrdering::new(self.order).expect("search visits each vertex once")
    }
}

/// Ordering on LBFS labels; `Greater` means `a` is preferred.
fn lbfs_cmp(a: &[usize], b: &[usize]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return y.cmp(x);
        }
    }
    a.len().cmp(&b.len())
}

/// Ordering on LDFS labels; `Greater` means `a` is preferred.
fn ldfs_cmp(a: &[usize], b: &[usize]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return x.cmp(y);
        }
    }
    a.len().cmp(&b.len())
}

fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Vertices that may legally follow `prefix` in a search of the given kind.
pub fn eligible(g: &Graph, kind: SearchKind, prefix: &[usize]) -> Result<Vec<usize>> {
    Ok(SearchState::from_prefix(g, kind, prefix)?.eligible())
}

/// Runs a complete search; `start`, when given, is visited first.
pub fn run_search(
    g: &Graph,
    kind: SearchKind,
    tie: &TieBreaker,
    start: Option<usize>,
) -> Result<VertexOrdering> {
    g.require_connected()?;
    tie.validate(g)?;
    if let Some(s) = start {
        g.check_vertex(s)?;
    }
    Ok(simulate(g, kind, tie, start))
}

/// [`run_search`] without the connectivity check.
pub(crate) fn simulate(
    g: &Graph,
    kind: SearchKind,
    tie: &TieBreaker,
    start: Option<usize>,
) -> VertexOrdering {
    let mut state = SearchState::new(g, kind);
    if let Some(s) = start {
        state.visit(s);
    }
    while !state.is_complete() {
        let eligible = state.eligible();
        let v = tie.choose(&eligible, state.visited().len());
        state.visit(v);
    }
    state.into_ordering()
}

/// Whether every vertex of `sigma` was eligible when it was visited.
pub fn is_valid_ordering(g: &Graph, kind: SearchKind, sigma: &VertexOrdering) -> bool {
    if sigma.len() != g.n() {
        return false;
    }
    let mut state = SearchState::new(g, kind);
    for &v in sigma.as_slice() {
        if state.eligible().binary_search(&v).is_err() {
            return false;
        }
        state.visit(v);
    }
    true
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::CapExceeded {
            what: "oracle",
            size: g.n(),
            cap,
        });
    }
    Ok(())
}

/// All end vertices of the given search, by exhaustive exploration.
pub fn end_vertices_oracle(g: &Graph, kind: SearchKind) -> Result<BTreeSet<usize>> {
    end_vertices_oracle_with(g, kind, None, DEFAULT_ORACLE_CAP)
}

/// Oracle with an optional fixed start vertex and an explicit vertex cap.
///
/// States are deduplicated by [`SearchState::signature`]; for MCS and MNS that
/// is the visited set alone.
pub fn end_vertices_oracle_with(
    g: &Graph,
    kind: SearchKind,
    start: Option<usize>,
    cap: usize,
) -> Result<BTreeSet<usize>> {
    g.require_connected()?;
    check_cap(g, cap)?;
    let mut found = BTreeSet::new();
    if g.n() == 0 {
        return Ok(found);
    }
    let mut state = SearchState::new(g, kind);
    if let Some(s) = start {
        g.check_vertex(s)?;
        state.visit(s);
    }
    let mut seen = HashSet::new();
    explore_ends(&state, &mut seen, &mut found);
    Ok(found)
}

fn explore_ends(
    state: &SearchState<'_>,
    seen: &mut HashSet<Vec<u64>>,
    found: &mut BTreeSet<usize>,
) {
    let n = state.graph.n();
    if state.is_complete() {
        found.insert(*state.visited().last().unwrap());
        return;
    }
    if found.len() == n || !seen.insert(state.signature()) {
        return;
    }
    for v in state.eligible() {
        let mut next = state.clone();
        next.visit(v);
        explore_ends(&next, seen, found);
    }
}

/// Every valid ordering of the given kind, optionally with a fixed start.
pub fn all_orderings(
    g: &Graph,
    kind: SearchKind,
    start: Option<usize>,
    cap: usize,
) -> Result<Vec<VertexOrdering>> {
    check_cap(g, cap)?;
    let mut out = Vec::new();
    let mut state = SearchState::new(g, kind);
    if let Some(s) = start {
        g.check_vertex(s)?;
        state.visit(s);
    }
    enumerate(&state, &mut out);
    Ok(out)
}

fn enumerate(state: &SearchState<'_>, out: &mut Vec<VertexOrdering>) {
    if state.is_complete() {
        out.push(state.clone().into_ordering());
        return;
    }
    for v in state.eligible() {
        let mut next = state.clone();
        next.visit(v);
        enumerate(&next, out);
    }
}
