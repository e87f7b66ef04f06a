//! Exponential subset-DP deciders for MCS, BFS and DFS end vertices on
//! general connected graphs. Vertex sets are `u64` bitmasks.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph, VertexOrdering};
use crate::report::{Algorithm, EndVertexReport, Stopwatch};
use crate::search::{is_valid_ordering, simulate, Direction, SearchKind, TieBreaker};

pub const MCS_CAP: usize = 22;
pub const BFS_CAP: usize = 20;
pub const DFS_CAP: usize = 18;

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

/// All submasks of `mask`, including 0 and `mask`.
fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != 0).then(|| (cur - 1) & mask);
        Some(cur)
    })
}

fn prepare(g: &Graph, z: usize, cap: usize, what: &'static str) -> Result<Vec<u64>> {
    g.check_vertex(z)?;
    let cap = cap.min(63);
    if g.n() > cap {
        return Err(Error::CapExceeded {
            what,
            size: g.n(),
            cap,
        });
    }
    g.require_connected()?;
    Ok((0..g.n()).map(|v| g.neighbor_mask(v)).collect())
}

fn checked(g: &Graph, kind: SearchKind, z: usize, order: Vec<usize>) -> Result<VertexOrdering> {
    let sigma = VertexOrdering::new(order)?;
    if sigma.end_vertex() != Some(z) || !is_valid_ordering(g, kind, &sigma) {
        return Err(Error::Disagreement(format!(
            "reconstructed {kind} witness for {z} does not check"
        )));
    }
    Ok(sigma)
}

fn report(z: usize, kind: SearchKind, witness: Option<VertexOrdering>) -> EndVertexReport {
    EndVertexReport::new(z, kind, Algorithm::ExactDp, witness.is_some()).with_witness(witness)
}

/// Dispatches to the exact decider for `kind`; `cap` defaults per kind.
pub fn end_vertex_exact(
    g: &Graph,
    kind: SearchKind,
    z: usize,
    cap: Option<usize>,
) -> Result<EndVertexReport> {
    match kind {
        SearchKind::Mcs => mcs_end_vertex_exact_with_cap(g, z, cap.unwrap_or(MCS_CAP)),
        SearchKind::Bfs => bfs_end_vertex_exact_with(g, z, None, cap.unwrap_or(BFS_CAP)),
        SearchKind::Dfs => dfs_end_vertex_exact_with_cap(g, z, cap.unwrap_or(DFS_CAP)),
        other => Err(Error::Precondition(format!(
            "no exact decider for {other}; use the oracle"
        ))),
    }
}

pub fn mcs_end_vertex_exact(g: &Graph, z: usize) -> Result<EndVertexReport> {
    mcs_end_vertex_exact_with_cap(g, z, MCS_CAP)
}

/// `f(X)`: some MCS visits exactly `X` first. `v` may follow `X` iff it has
/// the most neighbors in `X` among all unvisited vertices, `z` included.
pub fn mcs_end_vertex_exact_with_cap(g: &Graph, z: usize, cap: usize) -> Result<EndVertexReport> {
    let nb = prepare(g, z, cap, "exact MCS")?;
    let mut sw = Stopwatch::default();
    let n = g.n();
    let full = (1u64 << n) - 1;
    let target = full & !(1 << z);

    let eligible_after = |y: u64| -> u64 {
        let mut best = 0;
        let mut out = 0u64;
        for v in bits(full & !y) {
            let c = (nb[v] & y).count_ones();
            if c > best {
                best = c;
                out = 0;
            }
            if c == best {
                out |= 1 << v;
            }
        }
        out
    };

    let reach = sw.time("table", || {
        let mut reach = vec![false; 1usize << n];
        reach[0] = true;
        for y in 0..=target {
            if y & (1 << z) != 0 || !reach[y as usize] {
                continue;
            }
            for v in bits(eligible_after(y) & !(1 << z)) {
                reach[(y | 1 << v) as usize] = true;
            }
        }
        reach
    });
    if !reach[target as usize] {
        return Ok(sw.finish(report(z, SearchKind::Mcs, None)));
    }
    let witness = sw.time("witness", || {
        let mut rev = vec![z];
        let mut x = target;
        while x != 0 {
            let v = bits(x)
                .find(|&v| {
                    let y = x & !(1 << v);
                    reach[y as usize] && eligible_after(y) & (1 << v) != 0
                })
                .expect("a reachable set has a reachable predecessor");
            rev.push(v);
            x &= !(1 << v);
        }
        rev.reverse();
        checked(g, SearchKind::Mcs, z, rev)
    })?;
    Ok(sw.finish(report(z, SearchKind::Mcs, Some(witness))))
}

pub fn bfs_end_vertex_exact(g: &Graph, z: usize) -> Result<EndVertexReport> {
    bfs_end_vertex_exact_with(g, z, None, BFS_CAP)
}

/// Level-by-level DP over `(X_i, u_i)`: some BFS from `s` visits `X_i ⊆ L_i`
/// first in level `i`, then `u_i`. With `start = Some(s)` only orderings
/// beginning at `s` are considered.
pub fn bfs_end_vertex_exact_with(
    g: &Graph,
    z: usize,
    start: Option<usize>,
    cap: usize,
) -> Result<EndVertexReport> {
    let nb = prepare(g, z, cap, "exact BFS")?;
    if let Some(s) = start {
        g.check_vertex(s)?;
    }
    let mut sw = Stopwatch::default();
    if g.n() == 1 {
        return Ok(sw.finish(report(
            z,
            SearchKind::Bfs,
            Some(VertexOrdering::identity(1)),
        )));
    }
    let starts: Vec<usize> = match start {
        Some(s) => vec![s],
        None => (0..g.n()).collect(),
    };
    for s in starts.into_iter().filter(|&s| s != z) {
        let chain = sw.time("table", || bfs_chain(g, &nb, s, z));
        if let Some((levels, chain)) = chain {
            let mut priority = vec![s];
            for (level, &(x, u)) in levels.iter().zip(&chain) {
                priority.extend(bits(x));
                priority.push(u);
                priority.extend(bits(level & !x & !(1 << u)));
            }
            let tie = TieBreaker::by_priority(VertexOrdering::new(priority)?, Direction::Min);
            let run = simulate(g, SearchKind::Bfs, &tie, None);
            let witness = checked(g, SearchKind::Bfs, z, run.as_slice().to_vec())?;
            return Ok(sw.finish(report(z, SearchKind::Bfs, Some(witness))));
        }
    }
    Ok(sw.finish(report(z, SearchKind::Bfs, None)))
}

type Config = (u64, usize);

/// Levels `L_1..L_l` from `s` and an accepting chain `(X_i, u_i)`, if any.
fn bfs_chain(g: &Graph, nb: &[u64], s: usize, z: usize) -> Option<(Vec<u64>, Vec<Config>)> {
    let dist = bfs_distances(g, s);
    let ell = *dist.iter().max()?;
    if dist[z] != ell {
        return None;
    }
    let mut levels = vec![0u64; ell + 1];
    for (v, &d) in dist.iter().enumerate() {
        levels[d] |= 1 << v;
    }
    let levels = levels.split_off(1);
    let target: Config = (levels[ell - 1] & !(1 << z), z);

    // tables[i] maps each true configuration of level i+1 to a predecessor.
    let mut tables: Vec<BTreeMap<Config, Config>> = Vec::with_capacity(ell);
    let mut first = BTreeMap::new();
    for u in bits(levels[0]) {
        for x in submasks(levels[0] & !(1 << u)) {
            first.insert((x, u), (0, s));
        }
    }
    tables.push(first);

    for i in 1..ell {
        let next_level = levels[i];
        let mut next = BTreeMap::new();
        let mut expanded = std::collections::HashSet::new();
        for &(x, u) in tables[i - 1].keys() {
            let covered = bits(x).fold(0, |acc, v| acc | nb[v]) & next_level;
            if !expanded.insert((covered, u)) {
                continue;
            }
            let children = nb[u] & next_level & !covered;
            for u_next in bits(children) {
                for t in submasks(children & !(1 << u_next)) {
                    next.entry((covered | t, u_next)).or_insert((x, u));
                }
            }
        }
        tables.push(next);
    }

    if !tables[ell - 1].contains_key(&target) {
        return None;
    }
    let mut chain = vec![target];
    for i in (1..ell).rev() {
        let here = *chain.last().expect("chain is nonempty");
        chain.push(tables[i][&here]);
    }
    chain.reverse();
    Some((levels, chain))
}

pub fn dfs_end_vertex_exact(g: &Graph, z: usize) -> Result<EndVertexReport> {
    dfs_end_vertex_exact_with_cap(g, z, DFS_CAP)
}

/// `f(X, s, t)`: `G[X]` is connected and has a DFS from `s` ending at `t`.
///
/// Otherwise-case recurrence: pick `v ∈ N(t) ∩ X \ {s}` and `Y` with
/// `(N[t] ∩ X) \ {s} ⊆ Y ⊆ X \ {s}`; then `f((X \ Y) + v, s, v)` and
/// `f(Y, v, t)`. Only the vertices of `Y` outside the forced part are
/// enumerated.
pub fn dfs_end_vertex_exact_with_cap(g: &Graph, z: usize, cap: usize) -> Result<EndVertexReport> {
    let nb = prepare(g, z, cap, "exact DFS")?;
    let mut sw = Stopwatch::default();
    let n = g.n();
    if n == 1 {
        return Ok(sw.finish(report(
            z,
            SearchKind::Dfs,
            Some(VertexOrdering::identity(1)),
        )));
    }
    let full = (1u64 << n) - 1;
    let mut dp = DfsTable {
        g,
        nb: &nb,
        memo: HashMap::new(),
    };
    let start = sw.time("table", || (0..n).find(|&s| s != z && dp.f(full, s, z)));
    let Some(s) = start else {
        return Ok(sw.finish(report(z, SearchKind::Dfs, None)));
    };
    let witness = sw.time("witness", || {
        let order = dp.order(full, s, z);
        checked(g, SearchKind::Dfs, z, order)
    })?;
    Ok(sw.finish(report(z, SearchKind::Dfs, Some(witness))))
}

#[derive(Clone, Copy)]
enum Entry {
    False,
    Base,
    Split { v: usize, y: u64 },
}

struct DfsTable<'a> {
    g: &'a Graph,
    nb: &'a [u64],
    memo: HashMap<(u64, u8, u8), Entry>,
}

impl DfsTable<'_> {
    fn connected(&self, x: u64) -> bool {
        if x == 0 {
            return true;
        }
        let mut seen = 1u64 << x.trailing_zeros();
        let mut frontier = seen;
        while frontier != 0 {
            let reach = bits(frontier).fold(0, |acc, v| acc | self.nb[v]) & x & !seen;
            seen |= reach;
            frontier = reach;
        }
        seen == x
    }

    fn f(&mut self, x: u64, s: usize, t: usize) -> bool {
        !matches!(self.entry(x, s, t), Entry::False)
    }

    fn entry(&mut self, x: u64, s: usize, t: usize) -> Entry {
        let key = (x, s as u8, t as u8);
        if let Some(&e) = self.memo.get(&key) {
            return e;
        }
        let e = self.compute(x, s, t);
        self.memo.insert(key, e);
        e
    }

    fn compute(&mut self, x: u64, s: usize, t: usize) -> Entry {
        let sbit = 1u64 << s;
        if x == sbit {
            return if s == t { Entry::Base } else { Entry::False };
        }
        if s == t || !self.connected(x) {
            return Entry::False;
        }
        let nt = self.nb[t] & x;
        if nt == sbit {
            return Entry::Base;
        }
        let forced = (nt | 1 << t) & !sbit;
        let free = x & !sbit & !forced;
        for v in bits(nt & !sbit) {
            for extra in submasks(free) {
                let y = forced | extra;
                let rest = (x & !y) | 1 << v;
                if self.f(rest, s, v) && self.f(y, v, t) {
                    return Entry::Split { v, y };
                }
            }
        }
        Entry::False
    }

    /// Reconstructs the ordering certified by a true entry.
    fn order(&mut self, x: u64, s: usize, t: usize) -> Vec<usize> {
        match self.entry(x, s, t) {
            Entry::False => unreachable!("order requested for a false entry"),
            Entry::Base if x == 1 << s => vec![s],
            Entry::Base => self.leaf_last(x, s, t),
            Entry::Split { v, y } => {
                let mut head = self.order((x & !y) | 1 << v, s, v);
                head.extend(self.order(y, v, t).into_iter().skip(1));
                head
            }
        }
    }

    /// DFS of `G[X]` from `s` that postpones the leaf `t` to the end.
    fn leaf_last(&self, x: u64, s: usize, t: usize) -> Vec<usize> {
        let verts: Vec<usize> = bits(x).collect();
        let local = |v: usize| verts.binary_search(&v).expect("vertex of X");
        let sub = self.g.induced(&verts);
        let mut priority: Vec<usize> = vec![local(s)];
        priority.extend((0..verts.len()).filter(|&i| i != local(s) && i != local(t)));
        priority.push(local(t));
        let tie = TieBreaker::by_priority(
            VertexOrdering::new(priority).expect("permutation of X"),
            Direction::Min,
        );
        simulate(&sub, SearchKind::Dfs, &tie, None)
            .as_slice()
            .iter()
            .map(|&i| verts[i])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_enumeration() {
        let all: Vec<u64> = submasks(0b101).collect();
        assert_eq!(all, vec![0b101, 0b100, 0b001, 0]);
        assert_eq!(submasks(0).count(), 1);
    }

    #[test]
    fn path_middle_is_never_last() {
        let g = Graph::path(3);
        for kind in [SearchKind::Mcs, SearchKind::Bfs, SearchKind::Dfs] {
            assert!(
                !end_vertex_exact(&g, kind, 1, None).unwrap().is_yes(),
                "{kind}"
            );
            let r = end_vertex_exact(&g, kind, 0, None).unwrap();
            assert!(r.is_yes(), "{kind}");
            r.check(&g).unwrap();
        }
    }

    #[test]
    fn complete_graph_all_yes() {
        let g = Graph::complete(5);
        for z in 0..5 {
            assert!(mcs_end_vertex_exact(&g, z).unwrap().is_yes());
            assert!(bfs_end_vertex_exact(&g, z).unwrap().is_yes());
            assert!(dfs_end_vertex_exact(&g, z).unwrap().is_yes());
        }
    }

    #[test]
    fn caps_and_kinds() {
        let g = Graph::path(6);
        assert!(matches!(
            mcs_end_vertex_exact_with_cap(&g, 0, 5),
            Err(Error::CapExceeded { .. })
        ));
        assert!(end_vertex_exact(&g, SearchKind::Lbfs, 0, None).is_err());
        let disc = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            dfs_end_vertex_exact(&disc, 0),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn restricted_start() {
        let g = Graph::path(4);
        let r = bfs_end_vertex_exact_with(&g, 3, Some(0), BFS_CAP).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.witness.unwrap().first(), Some(0));
        assert!(!bfs_end_vertex_exact_with(&g, 3, Some(3), BFS_CAP)
            .unwrap()
            .is_yes());
        assert!(!bfs_end_vertex_exact_with(&g, 2, Some(1), BFS_CAP)
            .unwrap()
            .is_yes());
    }
}
