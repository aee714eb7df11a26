//! Runs without the libtest harness so the criterion lines always print.

use std::process::Command;

use poscodeg::reproduce::{run_all, run_criterion, Context};
use poscodeg_core::{catalog, Error, Hypergraph};


fn main() {
    let results = run_all(&Context::default());
    for r in &results {
        println!("criterion {} {} {}", r.id, if r.passed { "PASS" } else { "FAIL" }, r.title);
    }
    let checks: [(&str, fn()); 4] = [
        ("determinism through the binary", determinism_through_the_binary),
        ("tiny probe budget keeps the suite green", tiny_probe_budget_keeps_the_suite_green),
        ("corrupted catalog entry is caught", corrupted_catalog_entry_is_caught),
        ("missing catalog entry is a failure, not a panic", missing_catalog_entry_is_a_failure_not_a_panic),
    ];
    let mut failed = results.iter().filter(|r| !r.passed).inspect(|r| eprint!("{r}")).count();
    for (name, check) in checks {
        let ok = std::panic::catch_unwind(check).is_ok();
        println!("check {} {name}", if ok { "PASS" } else { "FAIL" });
        failed += usize::from(!ok);
    }
    if results.len() != 9 || failed > 0 {
        eprintln!("{failed} acceptance checks failed");
        std::process::exit(1);
    }
}

fn determinism_through_the_binary() {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_poscodeg"))
            .args(["search", "-F", "K4-", "--n", "6", "--json", "--jobs", jobs])
            .output()
            .expect("binary runs")
    };
    let one = run("1");
    let eight = run("8");
    assert!(one.status.success() && eight.status.success());
    assert!(!one.stdout.is_empty());
    assert_eq!(one.stdout, eight.stdout);
}

fn tiny_probe_budget_keeps_the_suite_green() {
    let ctx = Context {
        probe_budget: 10,
        ..Context::default()
    };
    let r = run_criterion(8, &ctx);
    assert!(r.passed, "{r}");
    assert!(r.notes.iter().any(|n| n.contains("not exhaustive")), "{r}");
}

/// Swaps K4- for a single edge; every graph with an edge contains it.
fn corrupted(name: &str) -> poscodeg_core::Result<Hypergraph> {
    if name == "K4-" {
        return Hypergraph::from_triples(4, &[[0, 1, 2]]);
    }
    poscodeg::named_graph(name)
}

fn corrupted_catalog_entry_is_caught() {
    let ctx = Context {
        lookup: Box::new(corrupted),
        ..Context::default()
    };
    assert!(!run_criterion(1, &ctx).passed);
    assert!(!run_criterion(2, &ctx).passed);
    assert!(run_criterion(5, &ctx).passed);
}

fn missing_catalog_entry_is_a_failure_not_a_panic() {
    let ctx = Context {
        lookup: Box::new(|name| if name == "H6" { Err(Error::UnknownGraph(name.to_string())) } else { poscodeg::named_graph(name) }),
        ..Context::default()
    };
    let r = run_criterion(3, &ctx);
    assert!(!r.passed);
    assert!(catalog::get("H6").is_ok());
}
