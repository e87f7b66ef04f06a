//! Randomized agreement suites: every decider against the exhaustive oracle.

use std::collections::BTreeSet;
use std::fmt;
use std::thread;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::chordal::{
    build_clique_graph, ldfs_end_vertex_chordal, mcs_plus_with_direction, mns_end_vertex_chordal,
    orderings_generated_by, prim_orderings_oracle, theorem3_certificate, DEFAULT_PRIM_CAP,
};
use crate::error::{Error, Result};
use crate::exact::{bfs_end_vertex_exact, dfs_end_vertex_exact, mcs_end_vertex_exact};
use crate::generate::{random_graph, rng, GraphClass};
use crate::graph::{is_chordal, Graph};
use crate::interval::{bfs_end_vertex_interval, bfs_end_vertex_model, build_clique_path};
use crate::reduction::{
    assignment_to_ordering, build_reduction, ordering_to_assignment, verify_weakly_chordal,
    Sat3Instance,
};
use crate::report::EndVertexReport;
use crate::samples;
use crate::search::{all_orderings, end_vertices_oracle_with, Direction, SearchKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub seed: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl SuiteResult {
    fn new(name: impl Into<String>) -> Self {
        SuiteResult {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, seed: u64, outcome: Result<()>) {
        self.cases += 1;
        if let Err(e) = outcome {
            self.failures.push(Failure {
                seed,
                detail: e.to_string(),
            });
        }
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<20} {:>5} cases  {:>3} failures  {}",
            self.name,
            self.cases,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossCheckConfig {
    pub seed: u64,
    pub graphs_per_class: usize,
    pub min_n: usize,
    pub max_n: usize,
    /// Chordal graphs for the MCS versus Prim ordering comparison.
    pub prim_graphs: usize,
    pub prim_max_n: usize,
    pub sat_instances: usize,
    /// Tie direction handed to MCS+; anything but `Max` is a deliberate fault.
    pub mcs_direction: Direction,
}

impl Default for CrossCheckConfig {
    fn default() -> Self {
        CrossCheckConfig {
            seed: 42,
            graphs_per_class: 200,
            min_n: 4,
            max_n: 8,
            prim_graphs: 50,
            prim_max_n: 7,
            sat_instances: 100,
            mcs_direction: Direction::Max,
        }
    }
}

impl CrossCheckConfig {
    pub fn validate(&self) -> Result<()> {
        if self.min_n == 0 || self.min_n > self.max_n {
            return Err(Error::Precondition("need 0 < min_n <= max_n".into()));
        }
        if self.max_n > 10 || self.prim_max_n > 10 {
            return Err(Error::CapExceeded {
                what: "crosscheck graph size",
                size: self.max_n.max(self.prim_max_n),
                cap: 10,
            });
        }
        Ok(())
    }
}

/// Per-case seed; reproduce a failure with `rng(seed)`.
fn case_seed(base: u64, suite: u64, i: usize) -> u64 {
    base.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(suite << 32)
        .wrapping_add(i as u64)
}

fn compare(name: &str, g: &Graph, report: &EndVertexReport, expected: bool) -> Result<()> {
    report.check(g)?;
    if report.is_yes() != expected {
        return Err(Error::Disagreement(format!(
            "{name} says {} for vertex {} on {}, oracle says {expected}",
            report.is_yes(),
            report.vertex,
            g.to_text().replace('\n', "; ")
        )));
    }
    Ok(())
}

/// Checks every applicable decider on every vertex of `g`.
pub fn check_graph(g: &Graph, direction: Direction) -> Result<()> {
    let n = g.n();
    let oracle = |kind| end_vertices_oracle_with(g, kind, None, n);
    let (mcs, bfs, dfs) = (
        oracle(SearchKind::Mcs)?,
        oracle(SearchKind::Bfs)?,
        oracle(SearchKind::Dfs)?,
    );
    for z in 0..n {
        compare(
            "exact MCS",
            g,
            &mcs_end_vertex_exact(g, z)?,
            mcs.contains(&z),
        )?;
        compare(
            "exact BFS",
            g,
            &bfs_end_vertex_exact(g, z)?,
            bfs.contains(&z),
        )?;
        compare(
            "exact DFS",
            g,
            &dfs_end_vertex_exact(g, z)?,
            dfs.contains(&z),
        )?;
    }
    if is_chordal(g).is_none() {
        return Ok(());
    }
    let (ldfs, mns) = (oracle(SearchKind::Ldfs)?, oracle(SearchKind::Mns)?);
    let cg = build_clique_graph(g)?;
    for z in 0..n {
        compare(
            "MCS+",
            g,
            &mcs_plus_with_direction(g, z, direction)?,
            mcs.contains(&z),
        )?;
        compare(
            "LDFS chain test",
            g,
            &ldfs_end_vertex_chordal(g, z)?,
            ldfs.contains(&z),
        )?;
        compare(
            "MNS chain test",
            g,
            &mns_end_vertex_chordal(g, z)?,
            mns.contains(&z),
        )?;
        let cert = theorem3_certificate(g, &cg, z)?;
        if cert.is_some() != mcs.contains(&z) {
            return Err(Error::Disagreement(format!(
                "separator certificate for vertex {z} is {}, oracle says {}",
                cert.is_some(),
                mcs.contains(&z)
            )));
        }
    }
    if let Some(_cp) = build_clique_path(g)? {
        for z in 0..n {
            compare(
                "interval BFS",
                g,
                &bfs_end_vertex_interval(g, z)?,
                bfs.contains(&z),
            )?;
        }
    }
    Ok(())
}

fn agreement_suite(cfg: &CrossCheckConfig, class: GraphClass, suite: u64) -> SuiteResult {
    let mut result = SuiteResult::new(format!("agreement-{class}"));
    for i in 0..cfg.graphs_per_class {
        let seed = case_seed(cfg.seed, suite, i);
        let mut r = rng(seed);
        let n = r.gen_range(cfg.min_n..=cfg.max_n);
        let g = random_graph(class, n, &mut r);
        result.record(seed, check_graph(&g, cfg.mcs_direction));
    }
    result
}

/// MCS orderings of `g` equal the orderings generated by Prim orderings of
/// its weighted clique graph.
pub fn check_prim(g: &Graph) -> Result<()> {
    let cg = build_clique_graph(g)?;
    let mcs: BTreeSet<Vec<usize>> = all_orderings(g, SearchKind::Mcs, None, g.n())?
        .into_iter()
        .map(|o| o.as_slice().to_vec())
        .collect();
    let prim: BTreeSet<Vec<usize>> = prim_orderings_oracle(&cg, DEFAULT_PRIM_CAP)?
        .iter()
        .flat_map(|pi| orderings_generated_by(cg.cliques(), pi))
        .collect();
    if mcs != prim {
        return Err(Error::Disagreement(format!(
            "{} MCS orderings against {} Prim-generated ones",
            mcs.len(),
            prim.len()
        )));
    }
    Ok(())
}

fn prim_suite(cfg: &CrossCheckConfig) -> SuiteResult {
    let mut result = SuiteResult::new("mcs-vs-prim");
    for i in 0..cfg.prim_graphs {
        let seed = case_seed(cfg.seed, 10, i);
        let mut r = rng(seed);
        let n = r.gen_range(cfg.min_n.min(cfg.prim_max_n)..=cfg.prim_max_n);
        let g = random_graph(GraphClass::Chordal, n, &mut r);
        result.record(seed, check_prim(&g));
    }
    result
}

/// Satisfiable iff `z` ends an MCS of the reduction graph, with both
/// directions of the correspondence exercised.
pub fn check_reduction(inst: &Sat3Instance) -> Result<()> {
    let rg = build_reduction(inst);
    if !verify_weakly_chordal(&rg.graph)? {
        return Err(Error::Disagreement(
            "reduction graph is not weakly chordal".into(),
        ));
    }
    let truth = inst.brute_force()?;
    let report = mcs_end_vertex_exact(&rg.graph, rg.z())?;
    report.check(&rg.graph)?;
    if truth.is_some() != report.is_yes() {
        return Err(Error::Disagreement(format!(
            "truth table says {}, exact MCS says {} for {}",
            truth.is_some(),
            report.is_yes(),
            inst.to_dimacs().replace('\n', " ")
        )));
    }
    if let Some(a) = truth {
        assignment_to_ordering(&rg, &a)?;
    }
    if let Some(w) = &report.witness {
        ordering_to_assignment(&rg, w)?;
    }
    Ok(())
}

fn reduction_suite(cfg: &CrossCheckConfig) -> SuiteResult {
    let mut result = SuiteResult::new("sat-reduction");
    for i in 0..cfg.sat_instances {
        let seed = case_seed(cfg.seed, 20, i);
        let mut r = rng(seed);
        let p = r.gen_range(3..=4);
        let q = r.gen_range(1..=4);
        let outcome = Sat3Instance::random(p, q, &mut r).and_then(|inst| check_reduction(&inst));
        result.record(seed, outcome);
    }
    result
}

fn expect(what: &str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Disagreement(format!("fixture check failed: {what}")))
    }
}

fn chordal18_ends(direction: Direction) -> Result<()> {
    let g = samples::chordal18();
    let mut ends = BTreeSet::new();
    for z in 0..g.n() {
        if mcs_plus_with_direction(&g, z, direction)?.is_yes() {
            ends.insert(z);
        }
    }
    expect(
        "chordal18 MCS end vertices",
        ends == BTreeSet::from([0, 6, 7, 15, 16]),
    )
}

fn bfs7_end(_: Direction) -> Result<()> {
    let g = samples::bfs7();
    let z = g.vertex("z")?;
    compare("interval BFS", &g, &bfs_end_vertex_interval(&g, z)?, true)?;
    compare("exact BFS", &g, &bfs_end_vertex_exact(&g, z)?, true)
}

fn intervals8_ends(direction: Direction) -> Result<()> {
    let model = samples::intervals8();
    let g = model.to_graph();
    let ends = end_vertices_oracle_with(&g, SearchKind::Bfs, Some(g.vertex("w")?), g.n())?;
    expect(
        "BFS from w ends only at u",
        ends == BTreeSet::from([g.vertex("u")?]),
    )?;
    for name in ["z", "s", "w"] {
        expect(
            name,
            bfs_end_vertex_model(&model, g.vertex(name)?)?.1.is_yes(),
        )?;
    }
    check_graph(&g, direction)
}

/// The bundled sample instances with their known answers.
pub fn fixture_suite(direction: Direction) -> SuiteResult {
    let mut result = SuiteResult::new("fixtures");
    let checks: [fn(Direction) -> Result<()>; 5] = [
        chordal18_ends,
        |_| check_prim(&samples::bfs7()),
        bfs7_end,
        intervals8_ends,
        |_| check_reduction(&samples::sat4x3()),
    ];
    for check in checks {
        result.record(0, check(direction));
    }
    result
}

/// Runs every suite on its own thread; results come back in a fixed order.
pub fn run_all(cfg: &CrossCheckConfig) -> Result<Vec<SuiteResult>> {
    cfg.validate()?;
    Ok(thread::scope(|s| {
        let mut handles: Vec<_> = GraphClass::ALL
            .into_iter()
            .zip(0u64..)
            .map(|(class, k)| s.spawn(move || agreement_suite(cfg, class, k)))
            .collect();
        handles.push(s.spawn(|| prim_suite(cfg)));
        handles.push(s.spawn(|| reduction_suite(cfg)));
        handles.push(s.spawn(|| fixture_suite(cfg.mcs_direction)));
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    }))
}

/// Runs only the fixture suite.
pub fn run_fixtures(cfg: &CrossCheckConfig) -> Vec<SuiteResult> {
    vec![fixture_suite(cfg.mcs_direction)]
}
