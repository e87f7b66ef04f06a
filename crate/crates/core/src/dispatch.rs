//! Picks the most specific decider for a query and optionally re-checks it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chordal::{
    build_clique_graph, ldfs_end_vertex_chordal, mcs_end_vertex_chordal, mns_end_vertex_chordal,
    theorem3_certificate,
};
use crate::error::{Error, Result};
use crate::exact::end_vertex_exact;
use crate::graph::{is_chordal, Graph};
use crate::interval::{bfs_end_vertex_with_path, build_clique_path, CliquePath};
use crate::report::{Algorithm, EndVertexReport};
use crate::search::{end_vertices_oracle_with, SearchKind, DEFAULT_ORACLE_CAP};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassHint {
    #[default]
    Auto,
    Chordal,
    Interval,
    General,
}

impl ClassHint {
    pub const ALL: [ClassHint; 4] = [
        ClassHint::Auto,
        ClassHint::Chordal,
        ClassHint::Interval,
        ClassHint::General,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassHint::Auto => "auto",
            ClassHint::Chordal => "chordal",
            ClassHint::Interval => "interval",
            ClassHint::General => "general",
        }
    }
}

impl fmt::Display for ClassHint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassHint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassHint::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown class hint {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub search: SearchKind,
    pub z: usize,
    pub class: ClassHint,
    /// Largest graph the exhaustive oracle is run on.
    pub oracle_cap: usize,
    /// Overrides the per-search default cap of the exact deciders.
    pub dp_cap: Option<usize>,
    pub seed: u64,
    pub verify: bool,
}

impl RunConfig {
    pub fn new(search: SearchKind, z: usize) -> Self {
        RunConfig {
            search,
            z,
            class: ClassHint::Auto,
            oracle_cap: DEFAULT_ORACLE_CAP,
            dp_cap: None,
            seed: 0,
            verify: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.oracle_cap == 0 || self.dp_cap == Some(0) {
            return Err(Error::Precondition("caps must be positive".into()));
        }
        Ok(())
    }
}

/// Class a query resolves to once probes have run.
#[derive(Clone, Debug)]
enum Resolved {
    Chordal,
    Interval(CliquePath),
    General,
}

fn probe_interval(g: &Graph) -> Result<Option<CliquePath>> {
    match build_clique_path(g) {
        Err(Error::CapExceeded { .. }) => Ok(None),
        other => other,
    }
}

fn resolve(g: &Graph, cfg: &RunConfig) -> Result<Resolved> {
    let needs_path = cfg.search == SearchKind::Bfs;
    Ok(match cfg.class {
        ClassHint::General => Resolved::General,
        ClassHint::Chordal => {
            is_chordal(g).ok_or(Error::NotChordal)?;
            Resolved::Chordal
        }
        ClassHint::Interval => match build_clique_path(g)? {
            Some(cp) => Resolved::Interval(cp),
            None => return Err(Error::NotInterval),
        },
        ClassHint::Auto => {
            if is_chordal(g).is_none() {
                Resolved::General
            } else if needs_path {
                probe_interval(g)?.map_or(Resolved::Chordal, Resolved::Interval)
            } else {
                Resolved::Chordal
            }
        }
    })
}

/// Oracle-only report; carries no witness.
pub fn oracle_report(g: &Graph, kind: SearchKind, z: usize, cap: usize) -> Result<EndVertexReport> {
    g.check_vertex(z)?;
    let ends = end_vertices_oracle_with(g, kind, None, cap)?;
    Ok(EndVertexReport::new(
        z,
        kind,
        Algorithm::Oracle,
        ends.contains(&z),
    ))
}

/// Answers the query with the most specific algorithm for the resolved class.
///
/// Chordal (and interval) graphs use MCS+ for MCS and the separator-chain
/// test for LDFS and MNS; interval graphs use the clique-path procedure for
/// BFS. Everything else goes to the exact deciders, and LBFS, or LDFS and
/// MNS outside chordal graphs, to the oracle.
pub fn end_vertex(g: &Graph, cfg: &RunConfig) -> Result<EndVertexReport> {
    cfg.validate()?;
    g.check_vertex(cfg.z)?;
    g.require_connected()?;
    let class = resolve(g, cfg)?;
    let chordal = !matches!(class, Resolved::General);
    let report = match (cfg.search, &class) {
        (SearchKind::Mcs, _) if chordal => mcs_end_vertex_chordal(g, cfg.z)?,
        (SearchKind::Ldfs, _) if chordal => ldfs_end_vertex_chordal(g, cfg.z)?,
        (SearchKind::Mns, _) if chordal => mns_end_vertex_chordal(g, cfg.z)?,
        (SearchKind::Bfs, Resolved::Interval(cp)) => bfs_end_vertex_with_path(g, cp, cfg.z)?,
        (SearchKind::Mcs | SearchKind::Bfs | SearchKind::Dfs, _) => {
            end_vertex_exact(g, cfg.search, cfg.z, cfg.dp_cap)?
        }
        (kind, _) => oracle_report(g, kind, cfg.z, cfg.oracle_cap)?,
    };
    let report = attach_certificate(g, report)?;
    report.check(g)?;
    if cfg.verify {
        verify_against_oracle(g, &report, cfg.oracle_cap)?;
    }
    Ok(report)
}

fn attach_certificate(g: &Graph, mut report: EndVertexReport) -> Result<EndVertexReport> {
    if report.algorithm == Algorithm::ChordalMcsPlus
        && report.is_yes()
        && report.certificate.is_none()
    {
        let cg = build_clique_graph(g)?;
        report.certificate = theorem3_certificate(g, &cg, report.vertex)?;
    }
    Ok(report)
}

/// Re-derives the answer with the oracle. Returns `false` when the graph is
/// above `cap` and nothing was checked.
pub fn verify_against_oracle(g: &Graph, report: &EndVertexReport, cap: usize) -> Result<bool> {
    if g.n() > cap {
        return Ok(false);
    }
    let ends = end_vertices_oracle_with(g, report.search, None, cap)?;
    let expected = ends.contains(&report.vertex);
    if expected != report.is_yes() {
        return Err(Error::Disagreement(format!(
            "{} says {} for {} on vertex {}, oracle says {}",
            report.algorithm,
            if report.is_yes() { "yes" } else { "no" },
            report.search,
            g.label(report.vertex),
            if expected { "yes" } else { "no" },
        )));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chordal_hint_on_square_is_a_class_mismatch() {
        let cfg = RunConfig {
            class: ClassHint::Chordal,
            ..RunConfig::new(SearchKind::Mcs, 0)
        };
        assert!(matches!(
            end_vertex(&Graph::cycle(4), &cfg),
            Err(Error::NotChordal)
        ));
    }

    #[test]
    fn auto_routes_by_class() {
        let path = Graph::path(4);
        let r = end_vertex(&path, &RunConfig::new(SearchKind::Bfs, 3)).unwrap();
        assert_eq!(r.algorithm, Algorithm::IntervalBfs);
        let r = end_vertex(&path, &RunConfig::new(SearchKind::Mcs, 3)).unwrap();
        assert_eq!(r.algorithm, Algorithm::ChordalMcsPlus);
        let r = end_vertex(&Graph::cycle(5), &RunConfig::new(SearchKind::Mcs, 3)).unwrap();
        assert_eq!(r.algorithm, Algorithm::ExactDp);
        let r = end_vertex(&Graph::cycle(5), &RunConfig::new(SearchKind::Lbfs, 3)).unwrap();
        assert_eq!(r.algorithm, Algorithm::Oracle);
    }

    #[test]
    fn verify_accepts_correct_answers() {
        let cfg = RunConfig {
            verify: true,
            ..RunConfig::new(SearchKind::Dfs, 1)
        };
        assert!(!end_vertex(&Graph::path(3), &cfg).unwrap().is_yes());
    }
}
