use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use endvertex::chordal::{build_clique_graph, mcs_end_vertex_chordal, theorem3_certificate};
use endvertex::crosscheck::{run_all, CrossCheckConfig, SuiteResult};
use endvertex::exact::{bfs_end_vertex_exact, mcs_end_vertex_exact};
use endvertex::generate::{random_chordal, random_general, random_interval_model, rng};
use endvertex::interval::{bfs_end_vertex_interval, bfs_end_vertex_model};
use endvertex::reduction::{build_reduction, ordering_to_assignment, verify_weakly_chordal};
use endvertex::samples;
use endvertex::search::{end_vertices_oracle_with, is_valid_ordering};
use endvertex::{Graph, SearchKind, VertexOrdering};

const CHORDAL18_BUDGET: Duration = Duration::from_secs(1);
const SUITE_BUDGET: Duration = Duration::from_secs(300);
const MIN_GRAPHS_PER_CLASS: usize = 200;
const MIN_PRIM_GRAPHS: usize = 50;
const MIN_SAT_INSTANCES: usize = 100;
const MCS_PLUS_N: usize = 2000;
const MCS_PLUS_BUDGET: Duration = Duration::from_secs(10);
const INTERVAL_N: usize = 100_000;
const INTERVAL_BUDGET: Duration = Duration::from_secs(5);
const EXACT_MCS_N: usize = 20;
const EXACT_MCS_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ids(g: &Graph, names: &[&str]) -> Result<Vec<usize>, String> {
    names
        .iter()
        .map(|s| g.vertex(s).map_err(|e| e.to_string()))
        .collect()
}

fn names(g: &Graph, set: &[usize]) -> String {
    let v: Vec<String> = set.iter().map(|&x| g.label(x)).collect();
    format!("{{{}}}", v.join(","))
}

fn chordal18_end_vertices() -> Outcome {
    let g = samples::chordal18();
    let expected: BTreeSet<usize> = ids(&g, &["v1", "v7", "v8", "v16", "v17"])?
        .into_iter()
        .collect();
    let start = Instant::now();
    let mut plus = BTreeSet::new();
    for z in 0..g.n() {
        if mcs_end_vertex_chordal(&g, z)
            .map_err(|e| e.to_string())?
            .is_yes()
        {
            plus.insert(z);
        }
    }
    let elapsed = start.elapsed();
    let cg = build_clique_graph(&g).map_err(|e| e.to_string())?;
    let mut certified = BTreeSet::new();
    for z in 0..g.n() {
        if theorem3_certificate(&g, &cg, z)
            .map_err(|e| e.to_string())?
            .is_some()
        {
            certified.insert(z);
        }
    }
    let oracle =
        end_vertices_oracle_with(&g, SearchKind::Mcs, None, g.n()).map_err(|e| e.to_string())?;
    ensure(
        plus == expected,
        format!(
            "MCS+ gives {}",
            names(&g, &plus.iter().copied().collect::<Vec<_>>())
        ),
    )?;
    ensure(certified == expected, "separator certificates disagree")?;
    ensure(oracle == expected, "oracle disagrees")?;
    for v in ["v14", "v18"] {
        ensure(
            !plus.contains(&g.vertex(v).unwrap()),
            format!("{v} must be rejected"),
        )?;
    }
    ensure(
        elapsed <= CHORDAL18_BUDGET,
        format!("MCS+ took {elapsed:?}"),
    )?;
    Ok(format!(
        "{} via MCS+, certificates and oracle in {elapsed:?}",
        names(&g, &plus.into_iter().collect::<Vec<_>>())
    ))
}

fn chordal18_certificate() -> Outcome {
    let g = samples::chordal18();
    let cg = build_clique_graph(&g).map_err(|e| e.to_string())?;
    let chain = theorem3_certificate(&g, &cg, 0)
        .map_err(|e| e.to_string())?
        .ok_or("no certificate for v1")?;
    let expected = vec![
        ids(&g, &["v11"])?,
        ids(&g, &["v5", "v6"])?,
        ids(&g, &["v2", "v3", "v4"])?,
    ];
    ensure(
        chain.separators == expected,
        format!("got {:?}", chain.separators),
    )?;
    let shown: Vec<String> = chain.separators.iter().map(|s| names(&g, s)).collect();
    Ok(format!("chain {}", shown.join(" < ")))
}

fn bfs7_ordering() -> Outcome {
    let g = samples::bfs7();
    let order = ids(&g, &["s", "v", "u", "x", "w", "y", "z"])?;
    let sigma = VertexOrdering::new(order).map_err(|e| e.to_string())?;
    ensure(
        is_valid_ordering(&g, SearchKind::Bfs, &sigma),
        "ordering is not a BFS",
    )?;
    let z = g.vertex("z").unwrap();
    let a = bfs_end_vertex_interval(&g, z).map_err(|e| e.to_string())?;
    let b = bfs_end_vertex_exact(&g, z).map_err(|e| e.to_string())?;
    ensure(a.is_yes() && b.is_yes(), "z rejected")?;
    a.check(&g).and(b.check(&g)).map_err(|e| e.to_string())?;
    Ok("ordering valid; interval and exact BFS answer yes for z".into())
}

fn intervals8_bfs() -> Outcome {
    let model = samples::intervals8();
    let mut yes = Vec::new();
    for name in ["z", "s", "w"] {
        let z = model
            .names()
            .unwrap()
            .iter()
            .position(|s| s == name)
            .unwrap();
        let (g, r) = bfs_end_vertex_model(&model, z).map_err(|e| e.to_string())?;
        r.check(&g).map_err(|e| e.to_string())?;
        ensure(r.is_yes(), format!("{name} rejected"))?;
        yes.push(name);
    }
    let g = model.to_graph();
    let w = g.vertex("w").unwrap();
    let ends =
        end_vertices_oracle_with(&g, SearchKind::Bfs, Some(w), g.n()).map_err(|e| e.to_string())?;
    ensure(
        ends == BTreeSet::from([g.vertex("u").unwrap()]),
        "BFS from w ends elsewhere",
    )?;
    Ok(format!("yes for {}; from w only u", yes.join(",")))
}

fn sat_fixture() -> Outcome {
    let rg = build_reduction(&samples::sat4x3());
    let g = &rg.graph;
    ensure(g.n() == 18, format!("{} vertices", g.n()))?;
    ensure(
        verify_weakly_chordal(g).map_err(|e| e.to_string())?,
        "not weakly chordal",
    )?;
    let order = ids(
        g,
        &[
            "a1", "a2", "x1", "~x2", "x3", "x4", "b", "~x1", "x2", "~x3", "~x4", "u1", "u2", "y",
            "c1", "c2", "c3", "z",
        ],
    )?;
    let sigma = VertexOrdering::new(order).map_err(|e| e.to_string())?;
    ensure(
        is_valid_ordering(g, SearchKind::Mcs, &sigma),
        "listed ordering is not an MCS",
    )?;
    ensure(
        sigma.end_vertex() == Some(rg.z()),
        "listed ordering ends elsewhere",
    )?;
    let r = mcs_end_vertex_exact(g, rg.z()).map_err(|e| e.to_string())?;
    ensure(r.is_yes(), "exact MCS rejects z")?;
    let a = ordering_to_assignment(&rg, &sigma).map_err(|e| e.to_string())?;
    ensure(a == [true, false, true, true], format!("assignment {a:?}"))?;
    Ok("18 vertices, weakly chordal, ordering valid, exact MCS yes, x2 false".into())
}

fn suite(results: &[SuiteResult], name: &str, min: usize) -> Result<String, String> {
    let r = results
        .iter()
        .find(|r| r.name == name)
        .ok_or(format!("suite {name} missing"))?;
    ensure(r.cases >= min, format!("{name}: only {} cases", r.cases))?;
    if let Some(f) = r.failures.first() {
        return Err(format!("{name}: seed {}: {}", f.seed, f.detail));
    }
    Ok(format!("{name} {}", r.cases))
}

fn timing() -> Outcome {
    let g = random_chordal(MCS_PLUS_N, &mut rng(9));
    let z = (0..g.n()).find(|&v| g.neighbors(v).len() == 1).unwrap_or(0);
    let start = Instant::now();
    mcs_end_vertex_chordal(&g, z).map_err(|e| e.to_string())?;
    let t1 = start.elapsed();
    ensure(
        t1 <= MCS_PLUS_BUDGET,
        format!("MCS+ n={MCS_PLUS_N} took {t1:?}"),
    )?;

    let model = random_interval_model(INTERVAL_N, &mut rng(9));
    let start = Instant::now();
    bfs_end_vertex_model(&model, 0).map_err(|e| e.to_string())?;
    let t2 = start.elapsed();
    ensure(
        t2 <= INTERVAL_BUDGET,
        format!("interval BFS n={INTERVAL_N} took {t2:?}"),
    )?;

    let g = random_general(EXACT_MCS_N, &mut rng(9));
    let start = Instant::now();
    for z in 0..g.n() {
        mcs_end_vertex_exact(&g, z).map_err(|e| e.to_string())?;
    }
    let t3 = start.elapsed() / EXACT_MCS_N as u32;
    ensure(
        t3 <= EXACT_MCS_BUDGET,
        format!("exact MCS n={EXACT_MCS_N} took {t3:?}"),
    )?;
    Ok(format!(
        "MCS+ {t1:.2?}, interval BFS {t2:.2?}, exact MCS {t3:.2?}"
    ))
}

fn main() -> ExitCode {
    let cfg = CrossCheckConfig {
        seed: 42,
        graphs_per_class: MIN_GRAPHS_PER_CLASS,
        min_n: 4,
        max_n: 8,
        prim_graphs: MIN_PRIM_GRAPHS,
        prim_max_n: 7,
        sat_instances: MIN_SAT_INSTANCES,
        ..CrossCheckConfig::default()
    };
    let start = Instant::now();
    let suites = run_all(&cfg).map_err(|e| e.to_string());
    let suite_time = start.elapsed();
    let agreement = || -> Outcome {
        let results = suites.as_ref().map_err(Clone::clone)?;
        let parts = ["chordal", "interval", "general"]
            .map(|c| suite(results, &format!("agreement-{c}"), MIN_GRAPHS_PER_CLASS));
        let parts: Result<Vec<String>, String> = parts.into_iter().collect();
        ensure(
            suite_time <= SUITE_BUDGET,
            format!("suites took {suite_time:?}"),
        )?;
        Ok(format!("{} in {suite_time:.2?}", parts?.join(", ")))
    };
    let prim = || {
        suite(
            suites.as_ref().map_err(Clone::clone)?,
            "mcs-vs-prim",
            MIN_PRIM_GRAPHS,
        )
    };
    let sat = || {
        suite(
            suites.as_ref().map_err(Clone::clone)?,
            "sat-reduction",
            MIN_SAT_INSTANCES,
        )
    };

    let criteria: [(&str, &dyn Fn() -> Outcome); 9] = [
        (
            "MCS end vertices of the 18-vertex chordal sample",
            &chordal18_end_vertices,
        ),
        ("separator chain certificate for v1", &chordal18_certificate),
        (
            "BFS ordering ending at z on the 7-vertex sample",
            &bfs7_ordering,
        ),
        ("interval BFS on the 8-interval sample", &intervals8_bfs),
        ("3-SAT reduction sample", &sat_fixture),
        ("randomized agreement with the oracle", &agreement),
        ("MCS orderings equal Prim-generated orderings", &prim),
        ("truth table versus exact MCS on reductions", &sat),
        ("scaling smoke tests", &timing),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {title}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
