use endvertex::crosscheck::{run_all, run_fixtures, CrossCheckConfig};
use endvertex::Direction;

#[test]
fn default_suites_pass() {
    let results = run_all(&CrossCheckConfig::default()).unwrap();
    for r in &results {
        println!("{r}");
        for f in r.failures.iter().take(3) {
            println!("  seed {}: {}", f.seed, f.detail);
        }
    }
    assert!(results.iter().all(|r| r.passed()));
}

#[test]
fn reversed_mcs_plus_tie_break_is_caught() {
    let cfg = CrossCheckConfig {
        graphs_per_class: 60,
        prim_graphs: 0,
        sat_instances: 0,
        mcs_direction: Direction::Min,
        ..CrossCheckConfig::default()
    };
    let results = run_all(&cfg).unwrap();
    assert!(results.iter().any(|r| !r.passed()));
    assert!(!run_fixtures(&cfg)[0].passed());
}
