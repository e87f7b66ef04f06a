//! Undirected simple graphs over dense vertex ids, vertex orderings, and the
//! structural predicates the search and end-vertex modules build on.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::{self, SearchKind, TieBreaker};

/// An undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are sorted and duplicate free. Optional labels map ids back
/// to the names used in an input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            names: None,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before {
                return Err(Error::Precondition(format!("parallel edge at vertex {v}")));
            }
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
            names: None,
        })
    }

    /// Builds a graph from labelled edges; ids follow the order of `vertices`.
    pub fn from_labeled_edges(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let index: HashMap<&str, usize> =
            vertices.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        if index.len() != vertices.len() {
            return Err(Error::Precondition("duplicate vertex label".into()));
        }
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(l.to_string()))
        };
        let mut list = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            list.push((lookup(a)?, lookup(b)?));
        }
        Graph::from_edges(vertices.len(), list)?
            .with_names(vertices.iter().map(|s| s.to_string()).collect())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n() {
            return Err(Error::Precondition(format!(
                "{} names for {} vertices",
                names.len(),
                self.n()
            )));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::Precondition("duplicate vertex label".into()));
        }
        self.names = Some(names);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Label of `v`, or its id when the graph is unlabelled.
    pub fn label(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    /// Resolves a vertex given either by label or by numeric id.
    pub fn vertex(&self, key: &str) -> Result<usize> {
        if let Some(names) = &self.names {
            if let Some(i) = names.iter().position(|l| l == key) {
                return Ok(i);
            }
        }
        match key.parse::<usize>() {
            Ok(v) if v < self.n() => Ok(v),
            Ok(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            Err(_) => Err(Error::UnknownVertex(key.to_string())),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Neighbor set of `v` as a bitmask; requires `n <= 64`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n() <= 64);
        self.adj[v].iter().fold(0u64, |m, &u| m | (1u64 << u))
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || components(self, &vec![false; self.n()]).len() == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            let mut it = self.adj[u].iter().peekable();
            for v in u + 1..n {
                while it.peek().is_some_and(|&&x| x < v) {
                    it.next();
                }
                if it.peek() != Some(&&v) {
                    edges.push((u, v));
                }
            }
        }
        let mut g = Graph::from_edges(n, edges).expect("complement is simple");
        g.names = self.names.clone();
        g
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v]
                .iter()
                .filter(move |&&u| index[u] != usize::MAX && index[u] > i)
                .map(move |&u| (i, index[u]))
        });
        let mut g = Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>())
            .expect("induced subgraph is simple");
        if let Some(names) = &self.names {
            g.names = Some(vertices.iter().map(|&v| names[v].clone()).collect());
        }
        g
    }

    /// Whether `set` induces a complete graph.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    /// Parses the plain-text graph format.
    ///
    /// ```text
    /// # comment
    /// n m
    /// u v        (m lines)
    /// ```
    ///
    /// Numeric files need `0 <= u < v < n`. If any endpoint is not an integer
    /// the file is read as labelled: labels get ids in order of first
    /// appearance, or in the order of an optional `@vertices l1 .. ln` line
    /// placed directly after the header.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "missing header"))?;
        let mut fields = header.split_whitespace();
        let mut number = |what: &str| -> Result<usize> {
            fields
                .next()
                .ok_or_else(|| Error::parse(hline, format!("header is missing {what}")))?
                .parse()
                .map_err(|_| Error::parse(hline, format!("header {what} is not an integer")))
        };
        let n = number("n")?;
        let m = number("m")?;

        let mut declared: Option<Vec<String>> = None;
        let mut raw: Vec<(usize, &str, &str)> = Vec::with_capacity(m);
        for (line, l) in lines {
            if let Some(rest) = l.strip_prefix("@vertices") {
                if declared.is_some() || !raw.is_empty() {
                    return Err(Error::parse(
                        line,
                        "@vertices must directly follow the header",
                    ));
                }
                declared = Some(rest.split_whitespace().map(str::to_string).collect());
                continue;
            }
            let mut it = l.split_whitespace();
            match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => raw.push((line, a, b)),
                _ => return Err(Error::parse(line, "expected an edge `u v`")),
            }
        }
        if raw.len() != m {
            return Err(Error::parse(
                hline,
                format!("header announces {m} edges, found {}", raw.len()),
            ));
        }

        let numeric = declared.is_none()
            && raw
                .iter()
                .all(|(_, a, b)| a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());
        if numeric {
            let mut edges = Vec::with_capacity(m);
            for &(line, a, b) in &raw {
                let (u, v): (usize, usize) = (a.parse().unwrap(), b.parse().unwrap());
                if !(u < v && v < n) {
                    return Err(Error::parse(
                        line,
                        format!("need 0 <= u < v < {n}, got {u} {v}"),
                    ));
                }
                edges.push((u, v));
            }
            return Graph::from_edges(n, edges).map_err(|e| Error::parse(hline, e.to_string()));
        }

        let mut names: Vec<String> = declared.clone().unwrap_or_default();
        let mut index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        if index.len() != names.len() {
            return Err(Error::parse(hline, "duplicate label in @vertices"));
        }
        let mut edges = Vec::with_capacity(m);
        for &(line, a, b) in &raw {
            let mut id = |label: &str| -> Result<usize> {
                if let Some(&i) = index.get(label) {
                    return Ok(i);
                }
                if declared.is_some() {
                    return Err(Error::parse(
                        line,
                        format!("label {label:?} not in @vertices"),
                    ));
                }
                names.push(label.to_string());
                index.insert(label.to_string(), names.len() - 1);
                Ok(names.len() - 1)
            };
            let (u, v) = (id(a)?, id(b)?);
            edges.push((u, v));
        }
        if names.len() != n {
            return Err(Error::parse(
                hline,
                format!(
                    "header announces {n} vertices, found {} labels",
                    names.len()
                ),
            ));
        }
        Graph::from_edges(n, edges)
            .and_then(|g| g.with_names(names))
            .map_err(|e| Error::parse(hline, e.to_string()))
    }

    /// Serializes to the format read by [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        if let Some(names) = &self.names {
            let _ = writeln!(out, "@vertices {}", names.join(" "));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", self.label(u), self.label(v));
        }
        out
    }
}

/// A bijection from the vertices to positions `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexOrdering {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl VertexOrdering {
    /// Builds the ordering visiting `order[0]` first.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range")));
            }
            if rank[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
            rank[v] = i;
        }
        Ok(VertexOrdering { order, rank })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering::new((0..n).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position of `v`, counted from 1.
    pub fn position(&self, v: usize) -> usize {
        self.rank[v] + 1
    }

    /// Vertex at 1-based `position`.
    pub fn vertex_at(&self, position: usize) -> usize {
        self.order[position - 1]
    }

    pub fn first(&self) -> Option<usize> {
        self.order.first().copied()
    }

    pub fn end_vertex(&self) -> Option<usize> {
        self.order.last().copied()
    }

    /// `u <_σ v`.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.rank[u] < self.rank[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        VertexOrdering::new(order).unwrap()
    }
}

impl TryFrom<Vec<usize>> for VertexOrdering {
    type Error = Error;

    fn try_from(order: Vec<usize>) -> Result<Self> {
        VertexOrdering::new(order)
    }
}

impl From<VertexOrdering> for Vec<usize> {
    fn from(o: VertexOrdering) -> Self {
        o.order
    }
}

/// Whether `N[v]` induces a complete graph.
pub fn is_simplicial(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(g.is_clique(g.neighbors(v)))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Twins {
    /// `u != v` with `N[u] = N[v]`.
    pub true_twins: BTreeSet<usize>,
    /// `u != v` with `N(u) = N(v)`.
    pub false_twins: BTreeSet<usize>,
}

pub fn twin_class(g: &Graph, v: usize) -> Result<Twins> {
    g.check_vertex(v)?;
    let closed = |x: usize| {
        let mut c = g.neighbors(x).to_vec();
        c.push(x);
        c.sort_unstable();
        c
    };
    let nv = closed(v);
    let mut twins = Twins::default();
    for u in (0..g.n()).filter(|&u| u != v && g.degree(u) == g.degree(v)) {
        if g.adjacent(u, v) {
            if closed(u) == nv {
                twins.true_twins.insert(u);
            }
        } else if g.neighbors(u) == g.neighbors(v) {
            twins.false_twins.insert(u);
        }
    }
    Ok(twins)
}

/// Connected components of `G - removed`, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Neighborhood `N(C)` of a vertex set, sorted.
pub fn neighborhood_of_set(g: &Graph, set: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    let mut out: Vec<usize> = set
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().copied())
        .filter(|&u| !inside[u])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether `s` is a minimal `u`-`v` separator for some pair `u, v`.
///
/// Decided by counting full components: `s` is a minimal separator exactly
/// when at least two components of `G - s` have neighborhood equal to `s`.
pub fn is_minimal_separator(g: &Graph, s: &[usize]) -> Result<bool> {
    let mut removed = vec![false; g.n()];
    for &v in s {
        g.check_vertex(v)?;
        removed[v] = true;
    }
    let size = removed.iter().filter(|&&r| r).count();
    let full = components(g, &removed)
        .iter()
        .filter(|c| neighborhood_of_set(g, c).len() == size)
        .count();
    Ok(full >= 2)
}

/// Hop distances from `s`; `None` marks vertices in other components.
pub fn distances_from(g: &Graph, s: usize) -> Result<Vec<Option<usize>>> {
    g.check_vertex(s)?;
    Ok(bfs_distances(g, s)
        .into_iter()
        .map(|d| (d != usize::MAX).then_some(d))
        .collect())
}

/// Like [`distances_from`] with `usize::MAX` for unreachable vertices.
pub(crate) fn bfs_distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Whether `g` has an induced cycle on at least `k` vertices.
///
/// Backtracks over induced paths anchored at their smallest vertex, pruning
/// any extension that would create a chord. Exponential in the worst case;
/// meant for graphs with a few dozen vertices.
pub fn has_induced_cycle_at_least(g: &Graph, k: usize) -> bool {
    let k = k.max(3);
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        path.clear();
        path.push(start);
        on_path[start] = true;
        let found = extend_induced_path(g, k, &mut path, &mut on_path);
        on_path[start] = false;
        if found {
            return true;
        }
    }
    false
}

fn extend_induced_path(g: &Graph, k: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let start = path[0];
    let last = *path.last().unwrap();
    let interior = 1..path.len().saturating_sub(1).max(1);
    for &x in g.neighbors(last) {
        if x <= start || on_path[x] {
            continue;
        }
        if path[interior.clone()].iter().any(|&p| g.adjacent(x, p)) {
            continue;
        }
        if path.len() >= 2 && g.adjacent(x, start) {
            if path.len() + 1 >= k {
                return true;
            }
            continue;
        }
        path.push(x);
        on_path[x] = true;
        let found = extend_induced_path(g, k, path, on_path);
        on_path[x] = false;
        path.pop();
        if found {
            return true;
        }
    }
    false
}

/// Whether `peo` (first entry eliminated first) is a perfect elimination
/// ordering: every vertex's later neighbors form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, peo: &VertexOrdering) -> bool {
    if peo.len() != g.n() {
        return false;
    }
    for &v in peo.as_slice() {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| peo.precedes(v, u))
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| peo.position(u)) else {
            continue;
        };
        if later.iter().any(|&u| u != parent && !g.adjacent(u, parent)) {
            return false;
        }
    }
    true
}

/// Returns a perfect elimination ordering when `g` is chordal.
///
/// Runs maximum cardinality search and tests its reversal.
pub fn is_chordal(g: &Graph) -> Option<VertexOrdering> {
    let mcs = search::simulate(g, SearchKind::Mcs, &TieBreaker::Arbitrary, None);
    let peo = mcs.reversed();
    is_perfect_elimination_ordering(g, &peo).then_some(peo)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_numeric_and_roundtrip() {
        let g = Graph::parse("# path\n3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Graph::parse("3 1\n1 0\n").is_err());
        assert!(Graph::parse("3 2\n0 1\n").is_err());
        assert!(Graph::parse("2 1\n0 2\n").is_err());
        assert!(Graph::parse("3 2\n0 1\n0 1\n").is_err());
        assert!(Graph::parse("").is_err());
    }

    #[test]
    fn parse_labelled() {
        let g = Graph::parse("3 2\na b\nb c\n").unwrap();
        assert_eq!(g.vertex("c").unwrap(), 2);
        assert!(g.adjacent(0, 1));
        let h = Graph::parse("3 1\n@vertices x y z\nz x\n").unwrap();
        assert_eq!(h.vertex("y").unwrap(), 1);
        assert!(h.adjacent(0, 2));
        assert_eq!(Graph::parse(&h.to_text()).unwrap(), h);
        assert!(Graph::parse("3 1\n@vertices x y z\nz w\n").is_err());
    }

    #[test]
    fn simplicial_basics() {
        let k4 = Graph::complete(4);
        assert!((0..4).all(|v| is_simplicial(&k4, v).unwrap()));
        let p = Graph::path(3);
        assert!(!is_simplicial(&p, 1).unwrap());
        assert!(is_simplicial(&p, 0).unwrap());
        assert!(is_simplicial(&p, 5).is_err());
    }

    #[test]
    fn twins_basics() {
        let k3 = Graph::complete(3);
        let t = twin_class(&k3, 0).unwrap();
        assert_eq!(t.true_twins, BTreeSet::from([1, 2]));
        assert!(t.false_twins.is_empty());
        let star = Graph::star(3);
        let t = twin_class(&star, 1).unwrap();
        assert_eq!(t.false_twins, BTreeSet::from([2, 3]));
        assert!(t.true_twins.is_empty());
    }

    #[test]
    fn separators_basics() {
        let k4 = Graph::complete(4);
        assert!(!is_minimal_separator(&k4, &[0]).unwrap());
        assert!(!is_minimal_separator(&k4, &[0, 1, 2]).unwrap());
        let p = Graph::path(3);
        assert!(is_minimal_separator(&p, &[1]).unwrap());
        assert!(!is_minimal_separator(&p, &[0]).unwrap());
        let c4 = Graph::cycle(4);
        assert!(is_minimal_separator(&c4, &[0, 2]).unwrap());
        assert!(!is_minimal_separator(&c4, &[0, 1]).unwrap());
    }

    #[test]
    fn distances_basics() {
        let k5 = Graph::complete(5);
        let d = distances_from(&k5, 2).unwrap();
        assert!(d
            .iter()
            .enumerate()
            .all(|(v, &x)| x == Some(usize::from(v != 2))));
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(distances_from(&g, 0).unwrap(), vec![Some(0), Some(1), None]);
    }

    #[test]
    fn induced_cycles() {
        assert!(has_induced_cycle_at_least(&Graph::cycle(5), 5));
        assert!(!has_induced_cycle_at_least(&Graph::cycle(5), 6));
        assert!(has_induced_cycle_at_least(&Graph::cycle(4), 4));
        assert!(!has_induced_cycle_at_least(&Graph::complete(6), 4));
        // C6 complement holds induced C4s but nothing longer
        let c6c = Graph::cycle(6).complement();
        assert!(has_induced_cycle_at_least(&c6c, 4));
        assert!(!has_induced_cycle_at_least(&c6c, 5));
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&Graph::cycle(4)).is_none());
        assert!(is_chordal(&Graph::star(4)).is_some());
        let peo = is_chordal(&Graph::complete(5)).unwrap();
        assert!(is_perfect_elimination_ordering(&Graph::complete(5), &peo));
    }

    #[test]
    fn ordering_checks() {
        assert!(VertexOrdering::new(vec![0, 0]).is_err());
        assert!(VertexOrdering::new(vec![0, 2]).is_err());
        let o = VertexOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.position(2), 1);
        assert_eq!(o.vertex_at(3), 1);
        assert_eq!(o.end_vertex(), Some(1));
        assert!(o.precedes(0, 1));
        assert_eq!(o.reversed().as_slice(), &[1, 0, 2]);
    }
}
