use std::fs;
use std::path::PathBuf;

use serde_json::Value;
use turan_core::cli::{run_command, EXIT_FAILURE, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> turan_core::cli::Outcome {
    run_command(std::iter::once("turan").chain(args.iter().copied()))
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn documented_examples() {
    let out = run(&["count", "--pattern", "b:4", "--graph", "g5:p=4"]);
    assert_eq!((out.status, first_line(&out.stdout)), (EXIT_OK, "1"));
    let out = run(&["ex", "--n", "6", "--pattern", "c4"]);
    assert_eq!((out.status, first_line(&out.stdout)), (EXIT_OK, "7"));
    let out = run(&["min-copies", "--n", "8", "--e", "22", "--pattern", "b:4"]);
    assert_eq!((out.status, first_line(&out.stdout)), (EXIT_OK, "6"));
}

#[test]
fn json_records_have_the_documented_fields() {
    let out = run(&["--json", "ex", "--n", "7", "--pattern", "family:c3,p4,k13"]);
    assert_eq!(out.status, EXIT_OK);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["value"], 4);
    assert_eq!(v["method"], "exhaustive");
    assert!(v["task"].as_str().unwrap().starts_with("ex(7"));
    assert!(v["runtime_ms"].is_u64());
    assert!(!v["witnesses"].as_array().unwrap().is_empty());

    let out = run(&[
        "witness-search",
        "--n",
        "7",
        "--e",
        "10",
        "--pattern",
        "c4",
        "--seed",
        "3",
        "--budget",
        "steps=2000,restarts=2",
        "--json",
    ]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["method"], "heuristic-upper-bound");
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn graph_inputs_and_witness_files() {
    let corpus = tmp("g6_witnesses.g6");
    let out = run(&[
        "classify",
        "--n",
        "6",
        "--e",
        "13",
        "--pattern",
        "b:4",
        "--copies",
        "1",
        "--witness-out",
        corpus.to_str().unwrap(),
    ]);
    assert_eq!((out.status, first_line(&out.stdout)), (EXIT_OK, "1"));
    let text = fs::read_to_string(&corpus).unwrap();
    assert_eq!(text.lines().count(), 1);

    let out = run(&[
        "count",
        "--pattern",
        "b:4",
        "--graph",
        corpus.to_str().unwrap(),
    ]);
    assert_eq!(first_line(&out.stdout), "1");
    let code = text.trim();
    let out = run(&["count", "--pattern", "b:4", "--graph", code]);
    assert_eq!(first_line(&out.stdout), "1");

    let out = run(&["encode", "circulant:n=6,s=1+3", "--canonical"]);
    let k33 = run(&["encode", "complete_bipartite:s=3,t=3", "--canonical"]);
    assert_eq!(out.stdout, k33.stdout);

    let out = run(&["decode", "DQc"]);
    assert!(out.stdout.starts_with("order 5 size 4"));
    let out = run(&["construct", "book:p=3", "--json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["value"]["size"], 7);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).status, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).status, EXIT_USAGE);
    assert_eq!(
        run(&["count", "--pattern", "q:3", "--graph", "C~"]).status,
        EXIT_USAGE
    );
    assert_eq!(
        run(&["count", "--pattern", "c4", "--graph", "g5:p=3"]).status,
        EXIT_USAGE
    );
    assert_eq!(
        run(&["--jobs", "0", "ex", "--n", "5", "--pattern", "c4"]).status,
        EXIT_USAGE
    );
    assert_eq!(
        run(&["verify-paper", "--scope", "everything"]).status,
        EXIT_USAGE
    );
    assert_eq!(
        run(&["min-copies", "--n", "4", "--e", "9", "--pattern", "c4"]).status,
        EXIT_FAILURE
    );
    let out = run(&["min-copies", "--n", "12", "--e", "22", "--pattern", "c4"]);
    assert_eq!(out.status, EXIT_INFEASIBLE);
    assert!(out.stderr.contains("feasibility envelope"));
    assert_eq!(run(&["--help"]).status, EXIT_OK);
    assert!(run(&["--help"]).stdout.contains("family:"));
}

#[test]
fn verify_paper_quick_scope_report() {
    let report = tmp("report.json");
    let out = run(&["verify-paper", "--report", report.to_str().unwrap()]);
    assert_eq!(out.status, EXIT_OK, "{}", out.stdout);
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["summary"]["fail"], 0);
    let claims = v["claims"].as_array().unwrap();
    let catalog = turan_core::claims::Catalog::builtin();
    assert_eq!(claims.len(), catalog.claims.len());
    for (c, rec) in claims.iter().zip(&catalog.claims) {
        assert_eq!(c["id"], rec.id.as_str());
        assert!(["pass", "fail", "skipped"].contains(&c["verdict"].as_str().unwrap()));
    }
    let verdict = |id: &str| {
        claims.iter().find(|c| c["id"] == id).unwrap()["verdict"]
            .as_str()
            .unwrap()
            .to_string()
    };
    for id in [
        "search1.ex",
        "search1.min",
        "search4.ex",
        "search4.min",
        "thm2.unique.p2.order_p+2",
        "thm2.unique.p4.order_p+3",
    ] {
        assert_eq!(verdict(id), "pass", "{id}");
    }
    assert_eq!(verdict("thm5.n12.lower"), "skipped");
}
