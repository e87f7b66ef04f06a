use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::chordal::SeparatorChain;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::search::{is_valid_ordering, SearchKind};

/// Which decision procedure produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "chordal-mcs+")]
    ChordalMcsPlus,
    #[serde(rename = "chordal-ldfs")]
    ChordalLdfs,
    #[serde(rename = "chordal-mns")]
    ChordalMns,
    #[serde(rename = "interval-bfs")]
    IntervalBfs,
    #[serde(rename = "exact-dp")]
    ExactDp,
    #[serde(rename = "oracle")]
    Oracle,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::ChordalMcsPlus => "chordal-mcs+",
            Algorithm::ChordalLdfs => "chordal-ldfs",
            Algorithm::ChordalMns => "chordal-mns",
            Algorithm::IntervalBfs => "interval-bfs",
            Algorithm::ExactDp => "exact-dp",
            Algorithm::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
}

impl From<bool> for Decision {
    fn from(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseTiming {
    pub phase: String,
    pub seconds: f64,
}

/// Answer to "can `vertex` end a search of kind `search`?".
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EndVertexReport {
    pub vertex: usize,
    pub search: SearchKind,
    pub decision: Decision,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<VertexOrdering>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<SeparatorChain>,
    pub algorithm: Algorithm,
    #[serde(default)]
    pub timings: Vec<PhaseTiming>,
}

impl EndVertexReport {
    pub fn new(vertex: usize, search: SearchKind, algorithm: Algorithm, decision: bool) -> Self {
        EndVertexReport {
            vertex,
            search,
            decision: decision.into(),
            witness: None,
            certificate: None,
            algorithm,
            timings: Vec::new(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.decision == Decision::Yes
    }

    pub fn with_witness(mut self, witness: Option<VertexOrdering>) -> Self {
        self.witness = witness;
        self
    }

    /// Checks that a witness is a valid ordering ending at the queried vertex
    /// and that certificate separators grow strictly.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if let Some(w) = &self.witness {
            if !is_valid_ordering(g, self.search, w) {
                return Err(Error::InvalidOrdering(format!(
                    "witness is not a valid {} ordering",
                    self.search
                )));
            }
            if w.end_vertex() != Some(self.vertex) {
                return Err(Error::InvalidOrdering("witness ends elsewhere".into()));
            }
        }
        if let Some(c) = &self.certificate {
            if c.separators.windows(2).any(|p| p[0].len() >= p[1].len()) {
                return Err(Error::Precondition(
                    "certificate separators must strictly grow".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Collects wall-clock time per named phase.
#[derive(Debug, Default)]
pub(crate) struct Stopwatch {
    timings: Vec<PhaseTiming>,
}

impl Stopwatch {
    pub fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.push(PhaseTiming {
            phase: phase.to_string(),
            seconds: start.elapsed().as_secs_f64(),
        });
        out
    }

    pub fn finish(self, mut report: EndVertexReport) -> EndVertexReport {
        report.timings.extend(self.timings);
        report
    }
}
