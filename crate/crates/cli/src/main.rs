use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use endvertex::chordal::build_clique_graph;
use endvertex::crosscheck::{run_all, run_fixtures, CrossCheckConfig, SuiteResult};
use endvertex::dispatch::{end_vertex, ClassHint, RunConfig};
use endvertex::dot::{clique_graph_dot, clique_path_dot, graph_dot, ordering_dot};
use endvertex::exact::mcs_end_vertex_exact;
use endvertex::generate::{random_graph, random_interval_model, rng, GraphClass};
use endvertex::interval::{build_clique_path, IntervalModel};
use endvertex::reduction::{build_reduction, ordering_to_assignment, ReductionGraph, Role};
use endvertex::search::{
    end_vertices_oracle_with, is_valid_ordering, run_search, DEFAULT_ORACLE_CAP,
};
use endvertex::{
    Direction, EndVertexReport, Error, Graph, Sat3Instance, SearchKind, TieBreaker, VertexOrdering,
};

const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "endvertex",
    version,
    about = "Which vertices can a graph search visit last?"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a vertex can end a search.
    EndVertex(EndVertexArgs),
    /// Run one search and print its ordering.
    RunSearch(RunSearchArgs),
    /// Check that an ordering is valid for a search.
    ValidateOrdering(ValidateArgs),
    /// List every end vertex by exhaustive search.
    Oracle(OracleArgs),
    /// Write a random graph of a class, or a reduction graph.
    Generate(GenerateArgs),
    /// Build the reduction graph of a CNF file.
    ReduceSat(ReduceArgs),
    /// Print a graph, its clique graph or its clique path as DOT.
    ExportDot(ExportArgs),
    /// Run the randomized agreement suites.
    Crosscheck(CrosscheckArgs),
}

#[derive(Args)]
struct Input {
    /// Graph file; `-` reads stdin.
    file: PathBuf,
    /// Read the file as interval lines `v lo hi`.
    #[arg(long)]
    intervals: bool,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Verify {
    Oracle,
}

#[derive(Args)]
struct EndVertexArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    search: SearchKind,
    /// Vertex label or id.
    #[arg(long)]
    z: String,
    #[arg(long, default_value = "auto")]
    class: ClassHint,
    /// Largest graph the oracle runs on.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    cap: usize,
    /// Vertex cap of the exact deciders.
    #[arg(long)]
    dp_cap: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum)]
    verify: Option<Verify>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tie {
    /// Lowest vertex id.
    Arbitrary,
    /// Largest position in a seeded random permutation.
    Random,
}

#[derive(Args)]
struct RunSearchArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    search: SearchKind,
    #[arg(long, value_enum, default_value = "arbitrary")]
    tie: Tie,
    #[arg(long)]
    start: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    search: SearchKind,
    /// Comma- or space-separated vertex labels in visiting order.
    #[arg(long)]
    ordering: String,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    search: SearchKind,
    #[arg(long)]
    start: Option<String>,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenerateKind {
    Chordal,
    Interval,
    General,
    Reduction,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    class: GenerateKind,
    /// Number of vertices.
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Variables and clauses of a random instance for `reduction`.
    #[arg(long, default_value_t = 4)]
    vars: usize,
    #[arg(long, default_value_t = 3)]
    clauses: usize,
    /// Reduce this CNF file instead of a random instance.
    #[arg(long)]
    cnf: Option<PathBuf>,
    /// Emit interval lines instead of a graph (interval class only).
    #[arg(long)]
    intervals: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ReduceArgs {
    /// DIMACS CNF file with 3-literal clauses.
    cnf: PathBuf,
    /// Also decide satisfiability through the exact MCS decider.
    #[arg(long)]
    solve: bool,
    #[arg(short, long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum DotTarget {
    Graph,
    CliqueGraph,
    CliquePath,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value = "graph")]
    what: DotTarget,
}

#[derive(Args)]
struct CrosscheckArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    graphs: usize,
    #[arg(long, default_value_t = 4)]
    min_n: usize,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, default_value_t = 50)]
    prim: usize,
    #[arg(long, default_value_t = 100)]
    sat: usize,
    /// Run only the bundled sample instances.
    #[arg(long)]
    fixtures_only: bool,
    /// Reverse the MCS+ tie-break to check that the suites notice.
    #[arg(long, hide = true)]
    corrupt_mcs_plus: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Disagreement(_) => EXIT_DISAGREEMENT,
        _ => EXIT_INPUT,
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::EndVertex(a) => cmd_end_vertex(a),
        Command::RunSearch(a) => cmd_run_search(a),
        Command::ValidateOrdering(a) => cmd_validate(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Generate(a) => cmd_generate(a),
        Command::ReduceSat(a) => cmd_reduce(a),
        Command::ExportDot(a) => cmd_export(a),
        Command::Crosscheck(a) => cmd_crosscheck(a),
    }
}

fn read(path: &Path) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        return Ok(io::read_to_string(io::stdin())?);
    }
    Ok(fs::read_to_string(path)?)
}

fn load(input: &Input) -> Result<Graph, Error> {
    let text = read(&input.file)?;
    if input.intervals {
        Ok(IntervalModel::parse(&text)?.to_graph())
    } else {
        Graph::parse(&text)
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn names(g: &Graph, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| g.label(v)).collect()
}

/// Report plus the vertex labels so ids in the JSON can be read back.
#[derive(Serialize)]
struct ReportOut<'a> {
    #[serde(flatten)]
    report: &'a EndVertexReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<&'a [String]>,
}

fn render_report(g: &Graph, r: &EndVertexReport, verified: bool) -> String {
    let mut out = format!(
        "{} vertex={} search={} algorithm={}\n",
        if r.is_yes() { "yes" } else { "no" },
        g.label(r.vertex),
        r.search,
        r.algorithm
    );
    if let Some(w) = &r.witness {
        out += &format!(
            "witness: {}\n",
            names(g, w.as_slice().iter().copied()).join(" ")
        );
    }
    if let Some(c) = &r.certificate {
        let chain: Vec<String> = c
            .separators
            .iter()
            .map(|s| format!("{{{}}}", names(g, s.iter().copied()).join(",")))
            .collect();
        out += &format!("certificate: {}\n", chain.join(" < "));
    }
    for t in &r.timings {
        out += &format!("time {}: {:.6}s\n", t.phase, t.seconds);
    }
    if verified {
        out += "verified against oracle\n";
    }
    out
}

fn cmd_end_vertex(a: EndVertexArgs) -> Result<u8, Error> {
    let g = load(&a.input)?;
    let z = g.vertex(&a.z)?;
    let cfg = RunConfig {
        class: a.class,
        oracle_cap: a.cap,
        dp_cap: a.dp_cap,
        seed: a.seed,
        verify: a.verify.is_some(),
        ..RunConfig::new(a.search, z)
    };
    let report = end_vertex(&g, &cfg)?;
    let verified = cfg.verify && g.n() <= cfg.oracle_cap;
    if cfg.verify && !verified {
        eprintln!(
            "note: {} vertices exceed the oracle cap {}; not verified",
            g.n(),
            cfg.oracle_cap
        );
    }
    let text = match a.format {
        Format::Text => render_report(&g, &report, verified),
        Format::Json => json(&ReportOut {
            report: &report,
            vertices: g.names(),
        }),
        Format::Dot => ordering_dot(&g, report.witness.as_ref(), Some(z)),
    };
    emit(None, &text)?;
    Ok(if report.is_yes() { 0 } else { EXIT_NO })
}

fn vertex_arg(g: &Graph, v: &Option<String>) -> Result<Option<usize>, Error> {
    v.as_deref().map(|s| g.vertex(s)).transpose()
}

fn cmd_run_search(a: RunSearchArgs) -> Result<u8, Error> {
    let g = load(&a.input)?;
    let start = vertex_arg(&g, &a.start)?;
    let tie = match a.tie {
        Tie::Arbitrary => TieBreaker::Arbitrary,
        Tie::Random => {
            use rand::seq::SliceRandom;
            let mut order: Vec<usize> = (0..g.n()).collect();
            order.shuffle(&mut rng(a.seed));
            TieBreaker::by_priority(VertexOrdering::new(order)?, Direction::Max)
        }
    };
    let sigma = run_search(&g, a.search, &tie, start)?;
    let text = match a.format {
        Format::Text => names(&g, sigma.as_slice().iter().copied()).join(" ") + "\n",
        Format::Json => json(&names(&g, sigma.as_slice().iter().copied())),
        Format::Dot => ordering_dot(&g, Some(&sigma), sigma.end_vertex()),
    };
    emit(None, &text)?;
    Ok(0)
}

fn cmd_validate(a: ValidateArgs) -> Result<u8, Error> {
    let g = load(&a.input)?;
    let order = a
        .ordering
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| g.vertex(s))
        .collect::<Result<Vec<_>, _>>()?;
    let sigma = VertexOrdering::new(order)?;
    if is_valid_ordering(&g, a.search, &sigma) {
        println!(
            "valid {} ordering ending at {}",
            a.search,
            g.label(sigma.end_vertex().unwrap_or(0))
        );
        Ok(0)
    } else {
        println!("not a valid {} ordering", a.search);
        Ok(EXIT_NO)
    }
}

fn cmd_oracle(a: OracleArgs) -> Result<u8, Error> {
    let g = load(&a.input)?;
    let start = vertex_arg(&g, &a.start)?;
    let ends = end_vertices_oracle_with(&g, a.search, start, a.cap)?;
    let labels = names(&g, ends.iter().copied());
    let text = match a.format {
        Format::Json => json(&labels),
        _ => labels.join(" ") + "\n",
    };
    emit(None, &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct ReductionOut<'a> {
    graph: String,
    roles: Vec<(String, &'a Role)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    satisfiable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    assignment: Option<Vec<bool>>,
}

fn reduction_output(
    rg: &ReductionGraph,
    format: Format,
    verdict: Option<(bool, Option<Vec<bool>>)>,
) -> String {
    let g = &rg.graph;
    match format {
        Format::Json => json(&ReductionOut {
            graph: g.to_text(),
            roles: (0..g.n()).map(|v| (g.label(v), &rg.roles[v])).collect(),
            satisfiable: verdict.as_ref().map(|v| v.0),
            assignment: verdict.and_then(|v| v.1),
        }),
        Format::Dot => graph_dot(g),
        Format::Text => {
            let mut out = g.to_text();
            if let Some((sat, assignment)) = verdict {
                out += &format!("# satisfiable: {sat}\n");
                if let Some(a) = assignment {
                    let lits: Vec<String> = a
                        .iter()
                        .enumerate()
                        .map(|(i, &b)| format!("{}x{}", if b { "" } else { "~" }, i + 1))
                        .collect();
                    out += &format!("# assignment: {}\n", lits.join(" "));
                }
            }
            out
        }
    }
}

fn cmd_generate(a: GenerateArgs) -> Result<u8, Error> {
    let mut r = rng(a.seed);
    let text = match a.class {
        GenerateKind::Reduction => {
            let inst = match &a.cnf {
                Some(p) => Sat3Instance::parse_dimacs(&read(p)?)?,
                None => Sat3Instance::random(a.vars, a.clauses, &mut r)?,
            };
            reduction_output(&build_reduction(&inst), a.format, None)
        }
        GenerateKind::Interval if a.intervals => random_interval_model(a.n, &mut r).to_text(),
        kind => {
            let class = match kind {
                GenerateKind::Chordal => GraphClass::Chordal,
                GenerateKind::Interval => GraphClass::Interval,
                _ => GraphClass::General,
            };
            let g = random_graph(class, a.n, &mut r);
            match a.format {
                Format::Dot => graph_dot(&g),
                _ => g.to_text(),
            }
        }
    };
    emit(a.out.as_deref(), &text)?;
    Ok(0)
}

fn cmd_reduce(a: ReduceArgs) -> Result<u8, Error> {
    let inst = Sat3Instance::parse_dimacs(&read(&a.cnf)?)?;
    let rg = build_reduction(&inst);
    let verdict = if a.solve {
        let report = mcs_end_vertex_exact(&rg.graph, rg.z())?;
        let assignment = report
            .witness
            .as_ref()
            .map(|w| ordering_to_assignment(&rg, w))
            .transpose()?;
        Some((report.is_yes(), assignment))
    } else {
        None
    };
    let sat = verdict.as_ref().map(|v| v.0);
    emit(a.out.as_deref(), &reduction_output(&rg, a.format, verdict))?;
    Ok(if sat == Some(false) { EXIT_NO } else { 0 })
}

fn cmd_export(a: ExportArgs) -> Result<u8, Error> {
    let g = load(&a.input)?;
    let text = match a.what {
        DotTarget::Graph => graph_dot(&g),
        DotTarget::CliqueGraph => clique_graph_dot(&g, &build_clique_graph(&g)?),
        DotTarget::CliquePath => {
            let cp = build_clique_path(&g)?.ok_or(Error::NotInterval)?;
            clique_path_dot(&g, &cp)
        }
    };
    emit(None, &text)?;
    Ok(0)
}

fn cmd_crosscheck(a: CrosscheckArgs) -> Result<u8, Error> {
    let cfg = CrossCheckConfig {
        seed: a.seed,
        graphs_per_class: a.graphs,
        min_n: a.min_n,
        max_n: a.max_n,
        prim_graphs: a.prim,
        sat_instances: a.sat,
        mcs_direction: if a.corrupt_mcs_plus {
            Direction::Min
        } else {
            Direction::Max
        },
        ..CrossCheckConfig::default()
    };
    let results: Vec<SuiteResult> = if a.fixtures_only {
        cfg.validate()?;
        run_fixtures(&cfg)
    } else {
        run_all(&cfg)?
    };
    let text = match a.format {
        Format::Json => json(&results),
        _ => {
            let mut out = String::new();
            for r in &results {
                out += &format!("{r}\n");
                for f in &r.failures {
                    out += &format!("  seed {}: {}\n", f.seed, f.detail);
                }
            }
            out
        }
    };
    emit(None, &text)?;
    Ok(if results.iter().all(SuiteResult::passed) {
        0
    } else {
        EXIT_NO
    })
}
