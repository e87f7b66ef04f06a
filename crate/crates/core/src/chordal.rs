//! Maximal cliques and the weighted clique graph of a chordal graph, Prim
//! orderings, critical edges, the separator-chain certificate for MCS end
//! vertices, and the end-vertex deciders for MCS, LDFS and MNS on chordal
//! graphs.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    components, is_chordal, is_perfect_elimination_ordering, is_simplicial, neighborhood_of_set,
    Graph, VertexOrdering,
};
use crate::report::{Algorithm, EndVertexReport, Stopwatch};
use crate::search::{is_valid_ordering, simulate, Direction, SearchKind, TieBreaker};
use crate::sets::{difference, intersection, is_subset};

/// Default clique-count cap for [`prim_orderings_oracle`].
pub const DEFAULT_PRIM_CAP: usize = 10;

/// An edge of the clique graph between cliques `a < b`, labelled by their
/// intersection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CliqueEdge {
    pub a: usize,
    pub b: usize,
    pub label: Vec<usize>,
}

impl CliqueEdge {
    pub fn weight(&self) -> usize {
        self.label.len()
    }

    pub fn other(&self, k: usize) -> usize {
        if k == self.a {
            self.b
        } else {
            self.a
        }
    }
}

/// Maximal cliques of a chordal graph joined whenever their intersection is a
/// minimal separator between their private parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCliqueGraph {
    cliques: Vec<Vec<usize>>,
    edges: Vec<CliqueEdge>,
    incident: Vec<Vec<usize>>,
}

impl WeightedCliqueGraph {
    fn new(cliques: Vec<Vec<usize>>, edges: Vec<CliqueEdge>) -> Self {
        let mut incident = vec![Vec::new(); cliques.len()];
        for (i, e) in edges.iter().enumerate() {
            incident[e.a].push(i);
            incident[e.b].push(i);
        }
        WeightedCliqueGraph {
            cliques,
            edges,
            incident,
        }
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn edges(&self) -> &[CliqueEdge] {
        &self.edges
    }

    pub fn clique_count(&self) -> usize {
        self.cliques.len()
    }

    /// Index of the edge joining cliques `a` and `b`, if any.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.incident[a]
            .iter()
            .copied()
            .find(|&e| self.edges[e].other(a) == b)
    }

    /// Index of the clique equal to `set` (sorted).
    pub fn find_clique(&self, set: &[usize]) -> Option<usize> {
        self.cliques.iter().position(|c| c == set)
    }

    /// Cliques reachable from `k` along edges accepted by `keep`.
    fn reach(&self, k: usize, keep: impl Fn(&CliqueEdge) -> bool) -> Vec<bool> {
        let mut seen = vec![false; self.cliques.len()];
        let mut queue = VecDeque::from([k]);
        seen[k] = true;
        while let Some(c) = queue.pop_front() {
            for &e in &self.incident[c] {
                let edge = &self.edges[e];
                let d = edge.other(c);
                if !seen[d] && keep(edge) {
                    seen[d] = true;
                    queue.push_back(d);
                }
            }
        }
        seen
    }

    /// Connected component of clique `k`, ascending.
    pub fn component(&self, k: usize) -> Vec<usize> {
        let seen = self.reach(k, |_| true);
        (0..seen.len()).filter(|&c| seen[c]).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.cliques.is_empty() || self.component(0).len() == self.cliques.len()
    }
}

/// `K_1, ..., K_k` together with one clique-graph edge per separator.
///
/// `edge_path[i]` carries label `separators[i]`. The edges are chosen to lie
/// on a common path ending at `N[z]` where the greedy repair finds one; this
/// part is best effort.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorChain {
    pub separators: Vec<Vec<usize>>,
    #[serde(default)]
    pub edge_path: Vec<(usize, usize)>,
}

/// Maximal cliques from a perfect elimination ordering, each sorted, listed
/// in lexicographic order.
pub fn maximal_cliques(g: &Graph, peo: &VertexOrdering) -> Result<Vec<Vec<usize>>> {
    if !is_perfect_elimination_ordering(g, peo) {
        return Err(Error::InvalidOrdering(
            "not a perfect elimination ordering".into(),
        ));
    }
    let later: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| peo.precedes(v, u))
                .collect()
        })
        .collect();
    // {v} + later(v) is contained in {u} + later(u) exactly when v is the
    // earliest later neighbor of u and later(u) has one more element.
    let mut dominated = vec![false; g.n()];
    for list in &later {
        if let Some(&f) = list.iter().min_by_key(|&&x| peo.position(x)) {
            if list.len() == later[f].len() + 1 {
                dominated[f] = true;
            }
        }
    }
    let mut cliques: Vec<Vec<usize>> = (0..g.n())
        .filter(|&v| !dominated[v])
        .map(|v| {
            let mut c = later[v].clone();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    cliques.sort();
    Ok(cliques)
}

fn chordal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let peo = is_chordal(g).ok_or(Error::NotChordal)?;
    maximal_cliques(g, &peo)
}

fn separated(g: &Graph, a: usize, b: usize, s: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in s {
        seen[v] = true;
    }
    let mut queue = VecDeque::from([a]);
    seen[a] = true;
    while let Some(v) = queue.pop_front() {
        if v == b {
            return false;
        }
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    true
}

/// The weighted clique graph of a connected chordal graph.
///
/// Cliques `K_i`, `K_j` are joined when `S = K_i ∩ K_j` is nonempty and
/// `K_i \ S`, `K_j \ S` fall in different components of `G - S`. Both sides
/// are cliques, so one representative per side decides it.
pub fn build_clique_graph(g: &Graph) -> Result<WeightedCliqueGraph> {
    g.require_connected()?;
    let cliques = chordal_cliques(g)?;
    let mut edges = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let label = intersection(&cliques[i], &cliques[j]);
            if label.is_empty() {
                continue;
            }
            let a = difference(&cliques[i], &label)[0];
            let b = difference(&cliques[j], &label)[0];
            if separated(g, a, b, &label) {
                edges.push(CliqueEdge { a: i, b: j, label });
            }
        }
    }
    Ok(WeightedCliqueGraph::new(cliques, edges))
}

/// Distinct edge labels, which are exactly the minimal separators.
pub fn minimal_separators_of(cg: &WeightedCliqueGraph) -> BTreeSet<Vec<usize>> {
    cg.edges.iter().map(|e| e.label.clone()).collect()
}

/// Minimal separators of a connected chordal graph read off one MCS run: a
/// vertex whose visited-neighbor count does not exceed its predecessor's
/// starts a new clique, and its visited neighbors form a minimal separator.
pub fn minimal_separators_chordal(g: &Graph) -> Result<BTreeSet<Vec<usize>>> {
    g.require_connected()?;
    if is_chordal(g).is_none() {
        return Err(Error::NotChordal);
    }
    let sigma = simulate(g, SearchKind::Mcs, &TieBreaker::Arbitrary, None);
    let mut seps = BTreeSet::new();
    let mut prev = 0;
    for &v in sigma.as_slice().iter().skip(1) {
        let before: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| sigma.precedes(u, v))
            .collect();
        if before.len() <= prev {
            seps.insert(before.clone());
        }
        prev = before.len();
    }
    Ok(seps)
}

/// `C(G) - S`: the same cliques without the edges whose label lies inside `s`.
pub fn clique_graph_minus(cg: &WeightedCliqueGraph, s: &[usize]) -> WeightedCliqueGraph {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    let edges = cg
        .edges
        .iter()
        .filter(|e| !is_subset(&e.label, &s))
        .cloned()
        .collect();
    WeightedCliqueGraph::new(cg.cliques.clone(), edges)
}

/// Index of the clique `N[z]` for a simplicial `z`.
pub fn closed_neighborhood_clique(g: &Graph, cg: &WeightedCliqueGraph, z: usize) -> Option<usize> {
    let mut closed = g.neighbors(z).to_vec();
    closed.push(z);
    closed.sort_unstable();
    cg.find_clique(&closed)
}

/// Component of `N[z]` in `cg`.
pub fn z_component(g: &Graph, cg: &WeightedCliqueGraph, z: usize) -> Option<Vec<usize>> {
    closed_neighborhood_clique(g, cg, z).map(|k| cg.component(k))
}

/// Indices of the critical edges for clique `k`: minimum-weight edges
/// reachable from `k` through strictly heavier edges.
pub fn critical_edges(cg: &WeightedCliqueGraph, k: usize) -> Vec<usize> {
    critical_edges_in(cg, &vec![true; cg.clique_count()], k)
}

fn critical_edges_in(cg: &WeightedCliqueGraph, alive: &[bool], k: usize) -> Vec<usize> {
    let live = |e: &CliqueEdge| alive[e.a] && alive[e.b];
    let Some(w) = cg
        .edges
        .iter()
        .filter(|e| live(e))
        .map(CliqueEdge::weight)
        .min()
    else {
        return Vec::new();
    };
    let reached = cg.reach(k, |e| live(e) && e.weight() > w);
    (0..cg.edges.len())
        .filter(|&i| {
            let e = &cg.edges[i];
            live(e) && e.weight() == w && (reached[e.a] || reached[e.b])
        })
        .collect()
}

/// Every order in which Prim's maximum spanning tree algorithm can add the
/// cliques. Exhaustive; refuses more than `cap` cliques.
pub fn prim_orderings_oracle(cg: &WeightedCliqueGraph, cap: usize) -> Result<BTreeSet<Vec<usize>>> {
    let l = cg.clique_count();
    if l > cap {
        return Err(Error::CapExceeded {
            what: "prim orderings",
            size: l,
            cap,
        });
    }
    if !cg.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut out = BTreeSet::new();
    let mut seq = Vec::with_capacity(l);
    let mut inside = vec![false; l];
    for start in 0..l {
        seq.push(start);
        inside[start] = true;
        extend_prim(cg, &mut seq, &mut inside, &mut out);
        inside[start] = false;
        seq.pop();
    }
    Ok(out)
}

fn extend_prim(
    cg: &WeightedCliqueGraph,
    seq: &mut Vec<usize>,
    inside: &mut [bool],
    out: &mut BTreeSet<Vec<usize>>,
) {
    if seq.len() == cg.clique_count() {
        out.insert(seq.clone());
        return;
    }
    let crossing = || cg.edges.iter().filter(|e| inside[e.a] != inside[e.b]);
    let Some(best) = crossing().map(CliqueEdge::weight).max() else {
        return;
    };
    let next: BTreeSet<usize> = crossing()
        .filter(|e| e.weight() == best)
        .map(|e| if inside[e.a] { e.b } else { e.a })
        .collect();
    for k in next {
        seq.push(k);
        inside[k] = true;
        extend_prim(cg, seq, inside, out);
        inside[k] = false;
        seq.pop();
    }
}

/// All vertex orderings generated by the clique ordering `pi`: the new
/// vertices of each clique form a block, blocks in `pi` order, any order
/// inside a block.
pub fn orderings_generated_by(cliques: &[Vec<usize>], pi: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut blocks = Vec::new();
    for &k in pi {
        let block: Vec<usize> = cliques[k]
            .iter()
            .copied()
            .filter(|&v| seen.insert(v))
            .collect();
        if !block.is_empty() {
            blocks.push(block);
        }
    }
    let mut out = vec![Vec::new()];
    for block in &blocks {
        let perms = permutations(block);
        out = out
            .iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut s = prefix.clone();
                    s.extend_from_slice(p);
                    s
                })
            })
            .collect();
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Separator chain certifying that `N[z]` can be the last clique of a Prim
/// ordering, or `None` when it cannot (including non-simplicial `z`).
///
/// Repeatedly restricts to the `z`-component `T_i`, requires all critical
/// edges for `N[z]` inside it to share one label `S_{i+1}`, and requires a
/// clique of `T_i \ T_{i+1}` containing `S_i`. Stops when `T_i = {N[z]}`;
/// the last separator must then be the non-simplicial part of `N[z]`.
pub fn theorem3_certificate(
    g: &Graph,
    cg: &WeightedCliqueGraph,
    z: usize,
) -> Result<Option<SeparatorChain>> {
    if !is_simplicial(g, z)? {
        return Ok(None);
    }
    let home = closed_neighborhood_clique(g, cg, z)
        .ok_or_else(|| Error::Precondition("N[z] is not a clique of the clique graph".into()))?;
    let l = cg.clique_count();
    let mut alive = vec![true; l];
    let mut separators: Vec<Vec<usize>> = Vec::new();
    let mut path: Vec<usize> = Vec::new();

    while alive.iter().filter(|&&a| a).count() > 1 {
        let critical = critical_edges_in(cg, &alive, home);
        let Some(&first) = critical.first() else {
            return Ok(None);
        };
        let label = cg.edges[first].label.clone();
        if critical.iter().any(|&e| cg.edges[e].label != label) {
            return Ok(None);
        }
        let keep = |e: &CliqueEdge| alive[e.a] && alive[e.b] && !is_subset(&e.label, &label);
        let next = cg.reach(home, keep);

        match separators.last() {
            None => path.push(first),
            Some(prev) => {
                let candidates: Vec<usize> = (0..l)
                    .filter(|&k| alive[k] && !next[k] && is_subset(prev, &cg.cliques[k]))
                    .collect();
                if candidates.is_empty() {
                    return Ok(None);
                }
                // Enter T_{i+1} from the side that holds the clique containing S_i.
                let crossing = candidates.iter().find_map(|&k| {
                    let side = cg.reach(k, keep);
                    cg.edges
                        .iter()
                        .position(|e| {
                            e.label == label
                                && ((side[e.a] && next[e.b]) || (side[e.b] && next[e.a]))
                        })
                        .map(|e| (k, e))
                });
                let (k, entry) = crossing.unwrap_or((candidates[0], first));
                let last = path.last_mut().expect("one edge per separator");
                let e = &cg.edges[*last];
                let outer = if alive[e.a] { e.b } else { e.a };
                if let Some(r) = cg.edge_between(outer, k) {
                    if cg.edges[r].label == *prev {
                        *last = r;
                    }
                }
                path.push(entry);
            }
        }
        separators.push(label);
        alive = next;
    }

    let nonsimplicial: Vec<usize> = {
        let mut closed = g.neighbors(z).to_vec();
        closed.push(z);
        closed.sort_unstable();
        closed
            .into_iter()
            .filter(|&v| !g.is_clique(g.neighbors(v)))
            .collect()
    };
    if separators.last().map_or(&[][..], |s| s.as_slice()) != nonsimplicial.as_slice() {
        return Ok(None);
    }
    Ok(Some(SeparatorChain {
        separators,
        edge_path: path
            .into_iter()
            .map(|e| (cg.edges[e].a, cg.edges[e].b))
            .collect(),
    }))
}

fn chordal_preamble(g: &Graph, z: usize, sw: &mut Stopwatch) -> Result<()> {
    g.check_vertex(z)?;
    g.require_connected()?;
    sw.time("recognize", || is_chordal(g))
        .ok_or(Error::NotChordal)?;
    Ok(())
}

/// MCS end-vertex test on a connected chordal graph: run MCS from `z`, then
/// rerun MCS breaking ties by the latest position in the first run; `z` is an
/// end vertex iff the second run ends there.
pub fn mcs_end_vertex_chordal(g: &Graph, z: usize) -> Result<EndVertexReport> {
    mcs_plus_with_direction(g, z, Direction::Max)
}

/// [`mcs_end_vertex_chordal`] with a configurable tie direction; `Min` is
/// wrong on purpose and exists so cross-check suites can prove they bite.
#[doc(hidden)]
pub fn mcs_plus_with_direction(
    g: &Graph,
    z: usize,
    direction: Direction,
) -> Result<EndVertexReport> {
    let mut sw = Stopwatch::default();
    chordal_preamble(g, z, &mut sw)?;
    let report = |yes| EndVertexReport::new(z, SearchKind::Mcs, Algorithm::ChordalMcsPlus, yes);
    if !is_simplicial(g, z)? {
        return Ok(sw.finish(report(false)));
    }
    let sigma = sw.time("mcs", || {
        simulate(g, SearchKind::Mcs, &TieBreaker::Arbitrary, Some(z))
    });
    let plus = sw.time("mcs+", || {
        simulate(
            g,
            SearchKind::Mcs,
            &TieBreaker::by_priority(sigma, direction),
            None,
        )
    });
    let yes = plus.end_vertex() == Some(z);
    Ok(sw.finish(report(yes).with_witness(yes.then_some(plus))))
}

/// LDFS end-vertex test on a connected chordal graph: `z` must be simplicial
/// and the minimal separators inside `N(z)` must form a chain under
/// inclusion. Yes-answers carry the chain and a constructed LDFS ordering.
pub fn ldfs_end_vertex_chordal(g: &Graph, z: usize) -> Result<EndVertexReport> {
    separator_chain_test(g, z, SearchKind::Ldfs, Algorithm::ChordalLdfs)
}

/// MNS end vertices on chordal graphs obey the same characterization as LDFS.
pub fn mns_end_vertex_chordal(g: &Graph, z: usize) -> Result<EndVertexReport> {
    separator_chain_test(g, z, SearchKind::Mns, Algorithm::ChordalMns)
}

fn separator_chain_test(
    g: &Graph,
    z: usize,
    kind: SearchKind,
    algorithm: Algorithm,
) -> Result<EndVertexReport> {
    let mut sw = Stopwatch::default();
    chordal_preamble(g, z, &mut sw)?;
    if !is_simplicial(g, z)? {
        return Ok(sw.finish(EndVertexReport::new(z, kind, algorithm, false)));
    }
    let all = sw.time("separators", || minimal_separators_chordal(g))?;
    let mut seps: Vec<Vec<usize>> = all
        .into_iter()
        .filter(|s| is_subset(s, g.neighbors(z)))
        .collect();
    seps.sort_by_key(Vec::len);
    let chain = seps
        .windows(2)
        .all(|p| p[0].len() < p[1].len() && is_subset(&p[0], &p[1]));
    if !chain {
        return Ok(sw.finish(EndVertexReport::new(z, kind, algorithm, false)));
    }
    let witness = sw
        .time("witness", || chain_witness(g, z, &seps))
        .filter(|w| is_valid_ordering(g, kind, w));
    let mut report = EndVertexReport::new(z, kind, algorithm, true).with_witness(witness);
    report.certificate = Some(SeparatorChain {
        separators: seps,
        edge_path: Vec::new(),
    });
    Ok(sw.finish(report))
}

/// LDFS ordering ending at `z` for a separator chain `S_1 ⊂ ... ⊂ S_k` in
/// `N(z)`: each `S_i \ S_{i-1}`, then the components of `G - S_k` attached
/// exactly to `S_i`, finally the rest of `N[z]` with `z` last.
fn chain_witness(g: &Graph, z: usize, seps: &[Vec<usize>]) -> Option<VertexOrdering> {
    let n = g.n();
    let empty = Vec::new();
    let outer = seps.last().unwrap_or(&empty);
    let mut removed = vec![false; n];
    for &v in outer {
        removed[v] = true;
    }
    let comps: Vec<Vec<usize>> = components(g, &removed)
        .into_iter()
        .filter(|c| c.binary_search(&z).is_err())
        .collect();
    let attached: Vec<Vec<usize>> = comps.iter().map(|c| neighborhood_of_set(g, c)).collect();

    let mut placed = vec![false; n];
    let mut priority = Vec::with_capacity(n);
    let mut push = |v: usize, priority: &mut Vec<usize>| {
        if !placed[v] && v != z {
            placed[v] = true;
            priority.push(v);
        }
    };
    let mut prev: &[usize] = &[];
    for s in seps {
        for v in difference(s, prev) {
            push(v, &mut priority);
        }
        for (c, nbhd) in comps.iter().zip(&attached) {
            if nbhd == s {
                c.iter().for_each(|&v| push(v, &mut priority));
            }
        }
        prev = s;
    }
    (0..n).for_each(|v| push(v, &mut priority));
    priority.push(z);

    let order = VertexOrdering::new(priority).ok()?;
    let run = simulate(
        g,
        SearchKind::Ldfs,
        &TieBreaker::by_priority(order, Direction::Min),
        None,
    );
    (run.end_vertex() == Some(z)).then_some(run)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two triangles sharing vertex 2.
    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn cliques_of_small_graphs() {
        let k = Graph::complete(4);
        let peo = is_chordal(&k).unwrap();
        assert_eq!(maximal_cliques(&k, &peo).unwrap(), vec![vec![0, 1, 2, 3]]);
        let p = Graph::path(3);
        let peo = is_chordal(&p).unwrap();
        assert_eq!(
            maximal_cliques(&p, &peo).unwrap(),
            vec![vec![0, 1], vec![1, 2]]
        );
        let bad = VertexOrdering::new(vec![1, 0, 2]).unwrap();
        assert!(maximal_cliques(&p, &bad).is_err());
    }

    #[test]
    fn clique_graph_small() {
        let cg = build_clique_graph(&bowtie()).unwrap();
        assert_eq!(cg.clique_count(), 2);
        assert_eq!(cg.edges().len(), 1);
        assert_eq!(cg.edges()[0].weight(), 1);
        let kn = build_clique_graph(&Graph::complete(5)).unwrap();
        assert!(kn.edges().is_empty());
        assert!(minimal_separators_of(&kn).is_empty());
        let p = build_clique_graph(&Graph::path(3)).unwrap();
        assert_eq!(minimal_separators_of(&p), BTreeSet::from([vec![1]]));
        assert!(matches!(
            build_clique_graph(&Graph::cycle(4)),
            Err(Error::NotChordal)
        ));
    }

    #[test]
    fn minus_and_components() {
        let cg = build_clique_graph(&bowtie()).unwrap();
        assert_eq!(clique_graph_minus(&cg, &[]), cg);
        let cut = clique_graph_minus(&cg, &[2]);
        assert!(cut.edges().is_empty());
        assert_eq!(cut.component(0), vec![0]);
    }

    #[test]
    fn critical_edge_single() {
        let cg = build_clique_graph(&bowtie()).unwrap();
        assert_eq!(critical_edges(&cg, 0), vec![0]);
        assert_eq!(critical_edges(&cg, 1), vec![0]);
    }

    #[test]
    fn prim_two_cliques() {
        let cg = build_clique_graph(&bowtie()).unwrap();
        let all = prim_orderings_oracle(&cg, 4).unwrap();
        assert_eq!(all, BTreeSet::from([vec![0, 1], vec![1, 0]]));
        assert!(prim_orderings_oracle(&cg, 1).is_err());
    }

    #[test]
    fn generated_orderings_count() {
        let cliques = vec![vec![0, 1, 2], vec![2, 3, 4]];
        // blocks {0,1,2} and {3,4}: 3! * 2!
        assert_eq!(orderings_generated_by(&cliques, &[0, 1]).len(), 12);
    }

    #[test]
    fn certificate_on_bowtie() {
        let g = bowtie();
        let cg = build_clique_graph(&g).unwrap();
        let chain = theorem3_certificate(&g, &cg, 0).unwrap().unwrap();
        assert_eq!(chain.separators, vec![vec![2]]);
        assert!(theorem3_certificate(&g, &cg, 2).unwrap().is_none());
    }

    #[test]
    fn deciders_on_small_graphs() {
        let g = bowtie();
        for z in 0..5 {
            let expect = z != 2;
            assert_eq!(mcs_end_vertex_chordal(&g, z).unwrap().is_yes(), expect);
            assert_eq!(ldfs_end_vertex_chordal(&g, z).unwrap().is_yes(), expect);
            assert_eq!(mns_end_vertex_chordal(&g, z).unwrap().is_yes(), expect);
        }
        let k = Graph::complete(4);
        for z in 0..4 {
            let r = mcs_end_vertex_chordal(&k, z).unwrap();
            assert!(r.is_yes());
            r.check(&k).unwrap();
        }
        assert!(matches!(
            mcs_end_vertex_chordal(&Graph::cycle(4), 0),
            Err(Error::NotChordal)
        ));
        let disc = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            ldfs_end_vertex_chordal(&disc, 0),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn mcs_separators_match_path() {
        let seps = minimal_separators_chordal(&Graph::path(5)).unwrap();
        assert_eq!(seps, BTreeSet::from([vec![1], vec![2], vec![3]]));
    }
}
