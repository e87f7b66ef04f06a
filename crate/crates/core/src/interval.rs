//! Interval models, clique paths, and the BFS end-vertex procedure for
//! interval graphs.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chordal::maximal_cliques;
use crate::error::{Error, Result};
use crate::exact;
use crate::graph::{bfs_distances, is_chordal, Graph, VertexOrdering};
use crate::report::{Algorithm, EndVertexReport, Stopwatch};
use crate::search::{simulate, Direction, SearchKind, TieBreaker};
use crate::sets::is_subset;

/// Default bound on backtracking states in [`build_clique_path`].
pub const DEFAULT_PATH_CAP: usize = 1 << 20;

/// Above this many vertices yes-answers come without a witness ordering.
pub const WITNESS_LIMIT: usize = 4000;

/// Maximal cliques `K_1, ..., K_p` in path order.
///
/// `lp(v)` and `rp(v)` are the first and last 1-based indices of cliques
/// containing `v`; every vertex lies in exactly the cliques between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePath {
    cliques: Vec<Vec<usize>>,
    lp: Vec<usize>,
    rp: Vec<usize>,
}

impl CliquePath {
    /// Sorts each clique and checks that every vertex of `0..n` occurs in a
    /// nonempty run of consecutive cliques.
    pub fn new(n: usize, mut cliques: Vec<Vec<usize>>) -> Result<Self> {
        let mut lp = vec![0; n];
        let mut rp = vec![0; n];
        let mut count = vec![0; n];
        for (i, k) in cliques.iter_mut().enumerate() {
            k.sort_unstable();
            k.dedup();
            for &v in k.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if lp[v] == 0 {
                    lp[v] = i + 1;
                }
                rp[v] = i + 1;
                count[v] += 1;
            }
        }
        for v in 0..n {
            if lp[v] == 0 {
                return Err(Error::Precondition(format!("vertex {v} lies in no clique")));
            }
            if count[v] != rp[v] - lp[v] + 1 {
                return Err(Error::Precondition(format!(
                    "cliques containing vertex {v} are not consecutive"
                )));
            }
        }
        Ok(CliquePath { cliques, lp, rp })
    }

    /// Number of cliques `p`.
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    /// `K_i` for `1 <= i <= p`.
    pub fn clique(&self, i: usize) -> &[usize] {
        &self.cliques[i - 1]
    }

    pub fn lp(&self, v: usize) -> usize {
        self.lp[v]
    }

    pub fn rp(&self, v: usize) -> usize {
        self.rp[v]
    }

    pub fn reversed(&self) -> Self {
        let p = self.len() + 1;
        CliquePath {
            cliques: self.cliques.iter().rev().cloned().collect(),
            lp: self.rp.iter().map(|&r| p - r).collect(),
            rp: self.lp.iter().map(|&l| p - l).collect(),
        }
    }

    /// Lowest-id vertex lying only in `K_1`.
    pub fn first_simplicial(&self) -> usize {
        *self.cliques[0]
            .iter()
            .find(|&&v| self.rp[v] == 1)
            .expect("a maximal clique at an end of a clique path has a private vertex")
    }

    /// Lowest-id vertex lying only in `K_p`; for a single clique the
    /// highest-id one, so the two ends differ whenever `n > 1`.
    pub fn last_simplicial(&self) -> usize {
        let p = self.len();
        if p == 1 {
            return *self.cliques[0].last().expect("cliques are non-empty");
        }
        *self.cliques[p - 1]
            .iter()
            .find(|&&v| self.lp[v] == p)
            .expect("a maximal clique at an end of a clique path has a private vertex")
    }

    /// Checks that this is a clique path of `g`: every `K_i` is a clique,
    /// neighbors on the path intersect without nesting, and every edge lies
    /// in some `K_i`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.lp.len() != g.n() {
            return Err(Error::Precondition(
                "clique path covers a different vertex set".into(),
            ));
        }
        for (i, k) in self.cliques.iter().enumerate() {
            if !g.is_clique(k) {
                return Err(Error::Precondition(format!("K_{} is not a clique", i + 1)));
            }
        }
        for (i, pair) in self.cliques.windows(2).enumerate() {
            let (a, b) = (&pair[0], &pair[1]);
            if is_subset(a, b) || is_subset(b, a) {
                return Err(Error::Precondition(format!(
                    "K_{} and K_{} are nested",
                    i + 1,
                    i + 2
                )));
            }
            if !a.iter().any(|v| b.binary_search(v).is_ok()) {
                return Err(Error::Precondition(format!(
                    "K_{} and K_{} are disjoint",
                    i + 1,
                    i + 2
                )));
            }
        }
        for (u, v) in g.edges() {
            if self.lp[u].max(self.lp[v]) > self.rp[u].min(self.rp[v]) {
                return Err(Error::Precondition(format!(
                    "edge {u}-{v} lies in no clique"
                )));
            }
        }
        Ok(())
    }
}

/// Closed intervals `[lo, hi]`, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalModel {
    intervals: Vec<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        if let Some(v) = intervals.iter().position(|&(lo, hi)| lo > hi) {
            return Err(Error::Precondition(format!(
                "interval of vertex {v} is empty"
            )));
        }
        Ok(IntervalModel {
            intervals,
            names: None,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.intervals.len() {
            return Err(Error::Precondition("one name per interval required".into()));
        }
        if names.iter().collect::<HashSet<_>>().len() != names.len() {
            return Err(Error::Precondition("duplicate vertex label".into()));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Parses lines `v lo hi`; `#` starts a comment line. Vertex ids follow
    /// line order and the labels are kept unless they are exactly `0..n`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels = Vec::new();
        let mut seen = HashSet::new();
        let mut intervals = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [label, lo, hi] = fields[..] else {
                return Err(Error::parse(i + 1, "expected `v lo hi`"));
            };
            let num = |s: &str| {
                s.parse::<i64>()
                    .map_err(|_| Error::parse(i + 1, format!("{s:?} is not an integer")))
            };
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(Error::parse(i + 1, "interval has lo > hi"));
            }
            if !seen.insert(label.to_string()) {
                return Err(Error::parse(i + 1, format!("duplicate vertex {label:?}")));
            }
            labels.push(label.to_string());
            intervals.push((lo, hi));
        }
        let plain = labels.iter().enumerate().all(|(i, l)| *l == i.to_string());
        let model = IntervalModel::new(intervals)?;
        if plain {
            Ok(model)
        } else {
            model.with_names(labels)
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, (lo, hi)) in self.intervals.iter().enumerate() {
            let label = self
                .names
                .as_ref()
                .map_or_else(|| v.to_string(), |n| n[v].clone());
            let _ = writeln!(out, "{label} {lo} {hi}");
        }
        out
    }

    /// Endpoints sorted by coordinate, left endpoints first on ties so that
    /// touching closed intervals overlap.
    fn events(&self) -> Vec<(i64, bool, usize)> {
        let mut ev: Vec<(i64, bool, usize)> = self
            .intervals
            .iter()
            .enumerate()
            .flat_map(|(v, &(lo, hi))| [(lo, false, v), (hi, true, v)])
            .collect();
        ev.sort_unstable();
        ev
    }

    fn sweep(&self, mut on_event: impl FnMut(bool, usize, &ActiveSet)) {
        let mut active = ActiveSet::new(self.len());
        for (_, is_end, v) in self.events() {
            on_event(is_end, v, &active);
            if is_end {
                active.remove(v);
            } else {
                active.insert(v);
            }
        }
    }

    /// The overlap graph.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        self.sweep(|is_end, v, active| {
            if !is_end {
                edges.extend(active.items.iter().map(|&u| (u, v)));
            }
        });
        let g = Graph::from_edges(self.len(), edges).expect("sweep emits each overlap once");
        match &self.names {
            Some(names) => g
                .with_names(names.clone())
                .expect("names checked on construction"),
            None => g,
        }
    }

    /// The clique path read off the sweep: the active set right before the
    /// first right endpoint after a left endpoint is a maximal clique.
    pub fn clique_path(&self) -> Result<CliquePath> {
        let mut cliques = Vec::new();
        let mut rising = false;
        self.sweep(|is_end, _, active| {
            if is_end && rising {
                cliques.push(active.items.clone());
            }
            rising = !is_end;
        });
        CliquePath::new(self.len(), cliques)
    }
}

struct ActiveSet {
    items: Vec<usize>,
    slot: Vec<usize>,
}

impl ActiveSet {
    fn new(n: usize) -> Self {
        ActiveSet {
            items: Vec::new(),
            slot: vec![usize::MAX; n],
        }
    }

    fn insert(&mut self, v: usize) {
        self.slot[v] = self.items.len();
        self.items.push(v);
    }

    fn remove(&mut self, v: usize) {
        let i = self.slot[v];
        self.items.swap_remove(i);
        if let Some(&moved) = self.items.get(i) {
            self.slot[moved] = i;
        }
        self.slot[v] = usize::MAX;
    }
}

/// Clique path of a connected graph, or `None` if it is not an interval
/// graph. Fails with `CapExceeded` past [`DEFAULT_PATH_CAP`] search states.
pub fn build_clique_path(g: &Graph) -> Result<Option<CliquePath>> {
    build_clique_path_capped(g, DEFAULT_PATH_CAP)
}

/// Backtracking consecutive-ones arrangement of the maximal cliques.
///
/// Each step must keep every open vertex (seen, not finished) and may not
/// reopen a closed one. Failed `(placed set, last clique)` states are
/// remembered.
pub fn build_clique_path_capped(g: &Graph, cap: usize) -> Result<Option<CliquePath>> {
    g.require_connected()?;
    let Some(peo) = is_chordal(g) else {
        return Ok(None);
    };
    let cliques = maximal_cliques(g, &peo)?;
    let mut arranger = Arranger::new(g.n(), &cliques, cap);
    for start in 0..cliques.len() {
        let private = cliques[start]
            .iter()
            .any(|&v| arranger.containing[v].len() == 1);
        if !private {
            continue;
        }
        let fresh = arranger.place(start);
        if arranger.extend()? {
            let ordered = arranger.order.iter().map(|&k| cliques[k].clone()).collect();
            return CliquePath::new(g.n(), ordered).map(Some);
        }
        arranger.unplace(start, fresh);
    }
    Ok(None)
}

struct Arranger<'a> {
    cliques: &'a [Vec<usize>],
    containing: Vec<Vec<usize>>,
    left: Vec<usize>,
    seen: Vec<bool>,
    placed: Vec<u64>,
    order: Vec<usize>,
    failed: HashSet<(Vec<u64>, usize)>,
    states: usize,
    cap: usize,
}

impl<'a> Arranger<'a> {
    fn new(n: usize, cliques: &'a [Vec<usize>], cap: usize) -> Self {
        let mut containing = vec![Vec::new(); n];
        for (i, k) in cliques.iter().enumerate() {
            for &v in k {
                containing[v].push(i);
            }
        }
        let left = containing.iter().map(Vec::len).collect();
        Arranger {
            cliques,
            containing,
            left,
            seen: vec![false; n],
            placed: vec![0; cliques.len().div_ceil(64)],
            order: Vec::new(),
            failed: HashSet::new(),
            states: 0,
            cap,
        }
    }

    fn is_placed(&self, k: usize) -> bool {
        self.placed[k / 64] & (1 << (k % 64)) != 0
    }

    fn place(&mut self, k: usize) -> Vec<usize> {
        self.placed[k / 64] |= 1 << (k % 64);
        self.order.push(k);
        let mut fresh = Vec::new();
        for &v in &self.cliques[k] {
            self.left[v] -= 1;
            if !self.seen[v] {
                self.seen[v] = true;
                fresh.push(v);
            }
        }
        fresh
    }

    fn unplace(&mut self, k: usize, fresh: Vec<usize>) {
        self.placed[k / 64] &= !(1 << (k % 64));
        self.order.pop();
        for &v in &self.cliques[k] {
            self.left[v] += 1;
        }
        for v in fresh {
            self.seen[v] = false;
        }
    }

    fn extend(&mut self) -> Result<bool> {
        if self.order.len() == self.cliques.len() {
            return Ok(true);
        }
        let last = *self.order.last().expect("a start clique is placed");
        let key = (self.placed.clone(), last);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        self.states += 1;
        if self.states > self.cap {
            return Err(Error::CapExceeded {
                what: "clique path search",
                size: self.states,
                cap: self.cap,
            });
        }
        let last_clique = &self.cliques[last];
        let open: Vec<usize> = last_clique
            .iter()
            .copied()
            .filter(|&v| self.left[v] > 0)
            .collect();
        if let Some(&anchor) = open.first() {
            let candidates: Vec<usize> = self.containing[anchor]
                .iter()
                .copied()
                .filter(|&k| !self.is_placed(k))
                .filter(|&k| {
                    let next = &self.cliques[k];
                    is_subset(&open, next)
                        && next.iter().all(|&x| {
                            !self.seen[x]
                                || (self.left[x] > 0 && last_clique.binary_search(&x).is_ok())
                        })
                })
                .collect();
            for k in candidates {
                let fresh = self.place(k);
                if self.extend()? {
                    return Ok(true);
                }
                self.unplace(k, fresh);
            }
        }
        self.failed.insert(key);
        Ok(false)
    }
}

/// Outcome of one call of the interval BFS procedure, with the step that
/// decided it and the start vertex `s` once chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProcedureTrace {
    pub answer: bool,
    pub step: u8,
    pub start: Option<usize>,
}

impl ProcedureTrace {
    fn at(step: u8, answer: bool, start: Option<usize>) -> Self {
        ProcedureTrace {
            answer,
            step,
            start,
        }
    }
}

struct Distances {
    u: Vec<usize>,
    w: Vec<usize>,
    z: Vec<usize>,
}

fn universal_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) + 1 == g.n()).collect()
}

/// Whether some BFS ordering ends at `z` and visits `u` before `w`.
///
/// `u` and `w` must be simplicial vertices of `K_1` and `K_p`.
pub fn bfs_end_vertex_procedure(
    g: &Graph,
    cp: &CliquePath,
    u: usize,
    w: usize,
    z: usize,
) -> Result<bool> {
    trace_procedure(g, cp, u, w, z).map(|t| t.answer)
}

/// [`bfs_end_vertex_procedure`] reporting the deciding step.
pub fn trace_procedure(
    g: &Graph,
    cp: &CliquePath,
    u: usize,
    w: usize,
    z: usize,
) -> Result<ProcedureTrace> {
    for v in [u, w, z] {
        g.check_vertex(v)?;
    }
    g.require_connected()?;
    let p = cp.len();
    if cp.lp.len() != g.n() {
        return Err(Error::Precondition(
            "clique path covers a different vertex set".into(),
        ));
    }
    if cp.rp(u) != 1 {
        return Err(Error::Precondition(format!("{u} is not simplicial in K_1")));
    }
    if cp.lp(w) != p {
        return Err(Error::Precondition(format!("{w} is not simplicial in K_p")));
    }
    let d = Distances {
        u: bfs_distances(g, u),
        w: bfs_distances(g, w),
        z: bfs_distances(g, z),
    };
    Ok(procedure(g, cp, u, w, z, &d, &universal_vertices(g)))
}

fn procedure(
    g: &Graph,
    cp: &CliquePath,
    u: usize,
    w: usize,
    z: usize,
    d: &Distances,
    universal: &[usize],
) -> ProcedureTrace {
    if z == w {
        return ProcedureTrace::at(1, true, None);
    }
    if universal.iter().any(|&v| v != z) {
        return ProcedureTrace::at(2, true, None);
    }
    let s = (0..g.n())
        .filter(|&x| d.z[x] == d.w[x] && d.w[x] >= d.u[x])
        .min_by_key(|&x| (cp.lp(x), x));
    let Some(s) = s else {
        return ProcedureTrace::at(4, false, None);
    };
    if cp.rp(z) < cp.lp(s) {
        return ProcedureTrace::at(6, false, Some(s));
    }
    if s == u {
        return ProcedureTrace::at(7, true, Some(s));
    }
    let found = g
        .neighbors(s)
        .iter()
        .any(|&v| d.u[v] + 1 == d.u[s] && d.z[v] > d.u[v]);
    ProcedureTrace::at(if found { 8 } else { 9 }, found, Some(s))
}

/// BFS end-vertex test on a connected interval graph: the universal-vertex
/// rules, then the procedure on both orientations of a clique path.
pub fn bfs_end_vertex_interval(g: &Graph, z: usize) -> Result<EndVertexReport> {
    g.check_vertex(z)?;
    g.require_connected()?;
    let mut sw = Stopwatch::default();
    if let Some(report) = universal_rule(g, z) {
        return Ok(sw.finish(report));
    }
    let cp = sw
        .time("clique path", || build_clique_path(g))?
        .ok_or(Error::NotInterval)?;
    decide(g, &cp, z, sw)
}

/// [`bfs_end_vertex_interval`] with a clique path supplied by the caller.
pub fn bfs_end_vertex_with_path(g: &Graph, cp: &CliquePath, z: usize) -> Result<EndVertexReport> {
    g.check_vertex(z)?;
    g.require_connected()?;
    if cp.lp.len() != g.n() {
        return Err(Error::Precondition(
            "clique path covers a different vertex set".into(),
        ));
    }
    let sw = Stopwatch::default();
    match universal_rule(g, z) {
        Some(report) => Ok(sw.finish(report)),
        None => decide(g, cp, z, sw),
    }
}

/// Builds the overlap graph and clique path by sweeping the model, then
/// decides. Returns the graph alongside the report.
pub fn bfs_end_vertex_model(model: &IntervalModel, z: usize) -> Result<(Graph, EndVertexReport)> {
    let mut sw = Stopwatch::default();
    let g = sw.time("overlap graph", || model.to_graph());
    let cp = sw.time("clique path", || model.clique_path())?;
    g.check_vertex(z)?;
    g.require_connected()?;
    let report = match universal_rule(&g, z) {
        Some(report) => sw.finish(report),
        None => decide(&g, &cp, z, sw)?,
    };
    Ok((g, report))
}

fn bfs_report(z: usize, yes: bool) -> EndVertexReport {
    EndVertexReport::new(z, SearchKind::Bfs, Algorithm::IntervalBfs, yes)
}

/// Any vertex other than a sole universal vertex ends some BFS; with two
/// universal vertices every vertex does.
fn universal_rule(g: &Graph, z: usize) -> Option<EndVertexReport> {
    let n = g.n();
    if n == 1 {
        return Some(bfs_report(z, true).with_witness(Some(VertexOrdering::identity(1))));
    }
    let universal = universal_vertices(g);
    let start = universal.iter().copied().find(|&v| v != z)?;
    let mut order = vec![start];
    order.extend((0..n).filter(|&v| v != start && v != z));
    order.push(z);
    Some(bfs_report(z, true).with_witness(VertexOrdering::new(order).ok()))
}

fn decide(g: &Graph, cp: &CliquePath, z: usize, mut sw: Stopwatch) -> Result<EndVertexReport> {
    if universal_vertices(g).len() == 1 {
        // z is the only universal vertex; see `universal_rule`.
        return Ok(sw.finish(bfs_report(z, false)));
    }
    let u = cp.first_simplicial();
    let w = cp.last_simplicial();
    let d = sw.time("distances", || Distances {
        u: bfs_distances(g, u),
        w: bfs_distances(g, w),
        z: bfs_distances(g, z),
    });
    let forward = sw.time("procedure", || procedure(g, cp, u, w, z, &d, &[]));
    let (trace, d) = if forward.answer {
        (forward, d)
    } else {
        let back = Distances {
            u: d.w,
            w: d.u,
            z: d.z,
        };
        let reversed = cp.reversed();
        (
            sw.time("procedure reversed", || {
                procedure(g, &reversed, w, u, z, &back, &[])
            }),
            back,
        )
    };
    if !trace.answer {
        return Ok(sw.finish(bfs_report(z, false)));
    }
    let witness = if g.n() <= WITNESS_LIMIT {
        sw.time("witness", || find_witness(g, z, trace.start, &d))?
    } else {
        None
    };
    Ok(sw.finish(bfs_report(z, true).with_witness(witness)))
}

/// Tries a handful of tie-breaking rules for a BFS (or LBFS, which is a BFS)
/// ending at `z`, falling back to the exact DP on small graphs.
fn find_witness(
    g: &Graph,
    z: usize,
    start: Option<usize>,
    d: &Distances,
) -> Result<Option<VertexOrdering>> {
    let n = g.n();
    let mut starts: Vec<usize> = start.into_iter().collect();
    starts.extend(
        (0..n).filter(|&x| Some(x) != start && x != z && d.z[x] == d.w[x] && d.w[x] >= d.u[x]),
    );
    starts.truncate(4);
    let keys: [&dyn Fn(usize) -> usize; 3] = [&|v| d.u[v], &|v| d.w[v], &|v| v];
    for &s in &starts {
        for key in keys {
            let mut rest: Vec<usize> = (0..n).filter(|&v| v != s && v != z).collect();
            rest.sort_by_key(|&v| (key(v), v));
            let mut priority = vec![s];
            priority.extend(rest);
            priority.push(z);
            let Ok(priority) = VertexOrdering::new(priority) else {
                continue;
            };
            let tie = TieBreaker::by_priority(priority, Direction::Min);
            for kind in [SearchKind::Lbfs, SearchKind::Bfs] {
                let run = simulate(g, kind, &tie, None);
                if run.end_vertex() == Some(z) {
                    return Ok(Some(run));
                }
            }
        }
    }
    if n <= exact::BFS_CAP {
        return Ok(exact::bfs_end_vertex_exact(g, z)?.witness);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_cliques_touching_endpoints() {
        let m = IntervalModel::new(vec![(0, 2), (2, 4), (4, 6)]).unwrap();
        let g = m.to_graph();
        assert_eq!(g.m(), 2);
        let cp = m.clique_path().unwrap();
        assert_eq!(cp.cliques(), &[vec![0, 1], vec![1, 2]]);
        cp.validate(&g).unwrap();
    }

    #[test]
    fn clique_path_of_complete_graph() {
        let cp = build_clique_path(&Graph::complete(4)).unwrap().unwrap();
        assert_eq!(cp.len(), 1);
        assert!(build_clique_path(&Graph::cycle(4)).unwrap().is_none());
    }

    #[test]
    fn spider_is_not_interval() {
        // subdivided claw: chordal, not interval
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(build_clique_path(&g).unwrap().is_none());
    }

    #[test]
    fn reversal_swaps_ends() {
        let cp = build_clique_path(&Graph::path(4)).unwrap().unwrap();
        let r = cp.reversed();
        assert_eq!(r.first_simplicial(), cp.last_simplicial());
        assert_eq!(r.lp(cp.first_simplicial()), 3);
        cp.validate(&Graph::path(4)).unwrap();
        r.validate(&Graph::path(4)).unwrap();
    }

    #[test]
    fn consecutiveness_enforced() {
        assert!(CliquePath::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).is_err());
        assert!(CliquePath::new(3, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn star_center_is_not_bfs_end() {
        let g = Graph::star(3);
        assert!(!bfs_end_vertex_interval(&g, 0).unwrap().is_yes());
        for z in 1..4 {
            let r = bfs_end_vertex_interval(&g, z).unwrap();
            assert!(r.is_yes());
            r.check(&g).unwrap();
        }
    }

    #[test]
    fn path_ends_only() {
        let g = Graph::path(5);
        let yes: Vec<usize> = (0..5)
            .filter(|&z| bfs_end_vertex_interval(&g, z).unwrap().is_yes())
            .collect();
        assert_eq!(yes, vec![0, 4]);
    }

    #[test]
    fn model_parse_roundtrip() {
        let m = IntervalModel::parse("# demo\na 0 3\nb 2 5\n").unwrap();
        assert_eq!(m.names().unwrap(), &["a".to_string(), "b".to_string()]);
        assert_eq!(IntervalModel::parse(&m.to_text()).unwrap(), m);
        assert!(IntervalModel::parse("a 3 1").is_err());
        assert!(IntervalModel::parse("a 1 2\na 2 3").is_err());
        let plain = IntervalModel::parse("0 1 2\n1 2 3\n").unwrap();
        assert!(plain.names().is_none());
    }
}
