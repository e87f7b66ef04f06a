//! 3-SAT instances and their reduction to MCS end-vertex on weakly chordal
//! graphs.

use std::fmt;
use std::fmt::Write as _;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{has_induced_cycle_at_least, Graph, VertexOrdering};
use crate::search::{is_valid_ordering, SearchKind};

/// Largest variable count accepted by [`Sat3Instance::brute_force`].
pub const BRUTE_FORCE_CAP: usize = 20;

/// Largest graph accepted by [`verify_weakly_chordal`].
pub const WEAKLY_CHORDAL_CAP: usize = 40;

/// A variable (0-based) with a polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }

    fn dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var + 1)
        } else {
            write!(f, "~x{}", self.var + 1)
        }
    }
}

/// A CNF formula whose clauses have exactly three literals over distinct
/// variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sat3Instance {
    variables: usize,
    clauses: Vec<[Literal; 3]>,
}

impl Sat3Instance {
    pub fn new(variables: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (j, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.var >= variables) {
                return Err(Error::Instance(format!(
                    "clause {} uses variable {} of {variables}",
                    j + 1,
                    l.var + 1
                )));
            }
            if c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var {
                return Err(Error::Instance(format!(
                    "clause {} repeats a variable",
                    j + 1
                )));
            }
        }
        Ok(Sat3Instance { variables, clauses })
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Reads `p cnf V C` followed by 0-terminated clauses; `c` lines are
    /// comments. Clauses may span lines.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut pending: Vec<(usize, i64)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let f: Vec<&str> = rest.split_whitespace().collect();
                let parsed = match f[..] {
                    ["cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                    _ => None,
                };
                header = Some(parsed.ok_or_else(|| Error::parse(line_no, "expected `p cnf V C`"))?);
                continue;
            }
            if header.is_none() {
                return Err(Error::parse(line_no, "clause before `p cnf` header"));
            }
            for tok in line.split_whitespace() {
                let lit: i64 = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("{tok:?} is not a literal")))?;
                if lit != 0 {
                    pending.push((line_no, lit));
                    continue;
                }
                let lits: Vec<Literal> = pending
                    .drain(..)
                    .map(|(_, l)| Literal {
                        var: l.unsigned_abs() as usize - 1,
                        positive: l > 0,
                    })
                    .collect();
                let clause: [Literal; 3] = lits.try_into().map_err(|v: Vec<Literal>| {
                    Error::parse(
                        line_no,
                        format!("clause has {} literals, expected 3", v.len()),
                    )
                })?;
                clauses.push(clause);
            }
        }
        if let Some(&(line_no, _)) = pending.first() {
            return Err(Error::parse(line_no, "clause not terminated by 0"));
        }
        let (v, c) = header.ok_or_else(|| Error::parse(0, "missing `p cnf` header"))?;
        if c != clauses.len() {
            return Err(Error::Instance(format!(
                "header announces {c} clauses, found {}",
                clauses.len()
            )));
        }
        Sat3Instance::new(v, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variables, self.clauses.len());
        for c in &self.clauses {
            let _ = writeln!(
                out,
                "{} {} {} 0",
                c[0].dimacs(),
                c[1].dimacs(),
                c[2].dimacs()
            );
        }
        out
    }

    /// `Err(Unsatisfied(j))` names the first falsified clause (1-based).
    pub fn check(&self, assignment: &[bool]) -> Result<()> {
        if assignment.len() != self.variables {
            return Err(Error::Instance(format!(
                "assignment has {} values for {} variables",
                assignment.len(),
                self.variables
            )));
        }
        match self
            .clauses
            .iter()
            .position(|c| !c.iter().any(|l| l.holds(assignment)))
        {
            Some(j) => Err(Error::Unsatisfied(j + 1)),
            None => Ok(()),
        }
    }

    pub fn satisfies(&self, assignment: &[bool]) -> bool {
        self.check(assignment).is_ok()
    }

    /// First satisfying assignment in truth-table order (all false first).
    pub fn brute_force(&self) -> Result<Option<Vec<bool>>> {
        if self.variables > BRUTE_FORCE_CAP {
            return Err(Error::CapExceeded {
                what: "truth table",
                size: self.variables,
                cap: BRUTE_FORCE_CAP,
            });
        }
        let p = self.variables;
        Ok((0u64..1 << p)
            .map(|bits| (0..p).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
            .find(|a| self.satisfies(a)))
    }

    /// Uniform random clauses over three distinct variables. Needs
    /// `variables >= 3` whenever `clauses > 0`.
    pub fn random<R: Rng + ?Sized>(variables: usize, clauses: usize, rng: &mut R) -> Result<Self> {
        if clauses > 0 && variables < 3 {
            return Err(Error::Instance(
                "three distinct variables needed per clause".into(),
            ));
        }
        let list = (0..clauses)
            .map(|_| {
                let vars = rand::seq::index::sample(rng, variables, 3);
                let mut it = vars.iter().map(|var| Literal {
                    var,
                    positive: rng.gen_bool(0.5),
                });
                [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
            })
            .collect();
        Sat3Instance::new(variables, list)
    }
}

/// What a vertex of the reduction graph stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "role")]
pub enum Role {
    Literal { var: usize, positive: bool },
    Clause { index: usize },
    A1,
    A2,
    U1,
    U2,
    B,
    Y,
    Z,
}

impl Role {
    fn label(self) -> String {
        match self {
            Role::Literal { var, positive } => Literal { var, positive }.to_string(),
            Role::Clause { index } => format!("c{}", index + 1),
            Role::A1 => "a1".into(),
            Role::A2 => "a2".into(),
            Role::U1 => "u1".into(),
            Role::U2 => "u2".into(),
            Role::B => "b".into(),
            Role::Y => "y".into(),
            Role::Z => "z".into(),
        }
    }
}

/// The reduction graph with a role per vertex.
///
/// Ids: literal `x_i` is `2i`, its negation `2i + 1`, clause `c_j` is
/// `2p + j`, followed by `a1, a2, u1, u2, b, y, z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub instance: Sat3Instance,
}

const EXTRAS: [Role; 7] = [
    Role::A1,
    Role::A2,
    Role::U1,
    Role::U2,
    Role::B,
    Role::Y,
    Role::Z,
];

impl ReductionGraph {
    pub fn literal(&self, lit: Literal) -> usize {
        2 * lit.var + usize::from(!lit.positive)
    }

    pub fn clause(&self, j: usize) -> usize {
        2 * self.instance.variables + j
    }

    /// Vertex of one of the seven extra roles.
    pub fn extra(&self, role: Role) -> usize {
        let base = 2 * self.instance.variables + self.instance.clauses.len();
        base + EXTRAS
            .iter()
            .position(|&r| r == role)
            .expect("literal and clause roles are indexed separately")
    }

    pub fn z(&self) -> usize {
        self.extra(Role::Z)
    }
}

/// Builds the reduction graph of `inst`.
pub fn build_reduction(inst: &Sat3Instance) -> ReductionGraph {
    let p = inst.variables;
    let q = inst.clauses.len();
    let lits = 0..2 * p;
    let clauses = 2 * p..2 * p + q;
    let base = 2 * p + q;
    let [a1, a2, u1, u2, b, y, z] = std::array::from_fn(|i| base + i);

    let mut roles: Vec<Role> = (0..2 * p)
        .map(|l| Role::Literal {
            var: l / 2,
            positive: l % 2 == 0,
        })
        .collect();
    roles.extend((0..q).map(|index| Role::Clause { index }));
    roles.extend(EXTRAS);

    let mut edges = Vec::new();
    for l in lits.clone() {
        for k in l + 1..2 * p {
            if k != (l ^ 1) {
                edges.push((l, k));
            }
        }
    }
    for (j, c) in inst.clauses.iter().enumerate() {
        let inside: Vec<usize> = c
            .iter()
            .map(|l| 2 * l.var + usize::from(!l.positive))
            .collect();
        for l in lits.clone().filter(|l| !inside.contains(l)) {
            edges.push((l, 2 * p + j));
        }
    }
    edges.extend([(a1, a2), (u1, u2), (y, z)]);
    for l in lits.clone() {
        edges.extend([(l, b), (l, z)]);
    }
    for hub in [a2, u1, u2, y] {
        edges.extend(lits.clone().chain(clauses.clone()).map(|v| (v, hub)));
    }

    let graph = Graph::from_edges(base + 7, edges)
        .and_then(|g| g.with_names(roles.iter().map(|r| r.label()).collect()))
        .expect("reduction edges are simple and labels distinct");
    debug_assert!(clauses.clone().all(|c| graph
        .neighbors(c)
        .iter()
        .filter(|&&v| v < 2 * p)
        .count()
        + 3
        == 2 * p));
    ReductionGraph {
        graph,
        roles,
        instance: inst.clone(),
    }
}

/// Neither `g` nor its complement has an induced cycle on five or more
/// vertices.
pub fn verify_weakly_chordal(g: &Graph) -> Result<bool> {
    if g.n() > WEAKLY_CHORDAL_CAP {
        return Err(Error::CapExceeded {
            what: "weak chordality check",
            size: g.n(),
            cap: WEAKLY_CHORDAL_CAP,
        });
    }
    Ok(!has_induced_cycle_at_least(g, 5) && !has_induced_cycle_at_least(&g.complement(), 5))
}

/// MCS ordering ending at `z` for a satisfying assignment: `a1, a2`, the
/// true literals by variable, `b`, the false literals, `u1, u2, y`, the
/// clauses, `z`.
pub fn assignment_to_ordering(rg: &ReductionGraph, assignment: &[bool]) -> Result<VertexOrdering> {
    rg.instance.check(assignment)?;
    let p = rg.instance.variables;
    let literal = |var: usize, positive: bool| rg.literal(Literal { var, positive });
    let mut order = vec![rg.extra(Role::A1), rg.extra(Role::A2)];
    order.extend((0..p).map(|i| literal(i, assignment[i])));
    order.push(rg.extra(Role::B));
    order.extend((0..p).map(|i| literal(i, !assignment[i])));
    order.extend([Role::U1, Role::U2, Role::Y].map(|r| rg.extra(r)));
    order.extend((0..rg.instance.clauses.len()).map(|j| rg.clause(j)));
    order.push(rg.z());
    let sigma = VertexOrdering::new(order)?;
    if !is_valid_ordering(&rg.graph, SearchKind::Mcs, &sigma) {
        return Err(Error::Disagreement(
            "constructed ordering is not an MCS ordering".into(),
        ));
    }
    Ok(sigma)
}

/// Reads the assignment off positions `3..=p+2` of an MCS ordering of the
/// reduction graph that ends at `z`.
pub fn ordering_to_assignment(rg: &ReductionGraph, sigma: &VertexOrdering) -> Result<Vec<bool>> {
    if sigma.len() != rg.graph.n() || !is_valid_ordering(&rg.graph, SearchKind::Mcs, sigma) {
        return Err(Error::InvalidOrdering(
            "not an MCS ordering of the reduction graph".into(),
        ));
    }
    if sigma.end_vertex() != Some(rg.z()) {
        return Err(Error::InvalidOrdering("ordering does not end at z".into()));
    }
    let p = rg.instance.variables;
    let mut assignment: Vec<Option<bool>> = vec![None; p];
    for pos in 3..p + 3 {
        match rg.roles[sigma.vertex_at(pos)] {
            Role::Literal { var, positive } if assignment[var].is_none() => {
                assignment[var] = Some(positive)
            }
            _ => {
                return Err(Error::Disagreement(format!(
                    "position {pos} does not hold a fresh literal"
                )))
            }
        }
    }
    let assignment: Vec<bool> = assignment.into_iter().map(|a| a.unwrap_or(false)).collect();
    rg.instance
        .check(&assignment)
        .map_err(|e| Error::Disagreement(format!("read-off assignment fails: {e}")))?;
    Ok(assignment)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_roundtrip() {
        let text = "c demo\np cnf 3 2\n1 -2 3 0\n-1 2\n -3 0\n";
        let inst = Sat3Instance::parse_dimacs(text).unwrap();
        assert_eq!(inst.clauses().len(), 2);
        assert_eq!(inst.clauses()[1][2], Literal::neg(2));
        assert_eq!(Sat3Instance::parse_dimacs(&inst.to_dimacs()).unwrap(), inst);
    }

    #[test]
    fn dimacs_errors() {
        assert!(Sat3Instance::parse_dimacs("p cnf 3 1\n1 2 0\n").is_err());
        assert!(Sat3Instance::parse_dimacs("p cnf 3 1\n1 1 2 0\n").is_err());
        assert!(Sat3Instance::parse_dimacs("p cnf 3 1\n1 2 3\n").is_err());
        assert!(Sat3Instance::parse_dimacs("1 2 3 0\n").is_err());
        assert!(Sat3Instance::parse_dimacs("p cnf 2 1\n1 2 3 0\n").is_err());
    }

    #[test]
    fn tiny_reduction() {
        let inst = Sat3Instance::new(1, vec![]).unwrap();
        let rg = build_reduction(&inst);
        assert_eq!(rg.graph.n(), 9);
        let deg: Vec<usize> = (0..9).map(|v| rg.graph.degree(v)).collect();
        // x1, ~x1, a1, a2, u1, u2, b, y, z
        assert_eq!(deg, vec![6, 6, 1, 3, 3, 3, 2, 3, 3]);
        let sigma = assignment_to_ordering(&rg, &[true]).unwrap();
        assert_eq!(ordering_to_assignment(&rg, &sigma).unwrap(), vec![true]);
    }

    #[test]
    fn brute_force_finds_unsat() {
        // all eight sign patterns over three variables
        let clauses = (0..8)
            .map(|m| {
                std::array::from_fn(|i| Literal {
                    var: i,
                    positive: m >> i & 1 == 1,
                })
            })
            .collect();
        let inst = Sat3Instance::new(3, clauses).unwrap();
        assert_eq!(inst.brute_force().unwrap(), None);
        let rg = build_reduction(&inst);
        assert!(matches!(
            assignment_to_ordering(&rg, &[true, true, true]),
            Err(Error::Unsatisfied(_))
        ));
    }
}
