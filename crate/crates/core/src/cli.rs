//! The `turan` command-line driver.
//!
//! [`run_command`] does all the work and returns the exit status together
//! with the text destined for stdout and stderr, so it can be driven from
//! tests without spawning a process.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::canonical_form;
use crate::claims::{self, Catalog, Scope, Verdict, VerifyConfig};
use crate::constructions::Construction;
use crate::error::Error;
use crate::exact::{self, SearchOptions};
use crate::graph::Graph;
use crate::graph6;
use crate::heuristic::{self, SearchBudget};
use crate::pattern::{Pattern, PatternSet};

pub const EXIT_OK: i32 = 0;
/// Runtime failure, or a verification run with failing claims.
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
/// The task lies outside the exhaustive-search envelope.
pub const EXIT_INFEASIBLE: i32 = 3;

const PATTERN_HELP: &str = "\
Patterns: k:n (complete K_n), s:p (star K_{1,p}), b:p (book B_p), c4, c3,
c:n (cycle), p:n (path on n vertices), g6:<graph6>.
Families: family:a,b,... with atoms c3, p4, k13 (star K_{1,3}), k4, b2, s3, ...

Graphs: a graph6 string, a path ending in .g6 (one graph per line), or a
construction such as g5:p=4, circulant:n=6,s=1+3, book:p=5, regular:k=3,n=8,
star_witness:p=4,n=7, bounded_degree_max:n=9,d=3, complete_minus_pm:n=6.
Witness constructions: g1..g6, t4_small, t4_large (all take p=).

Exit status: 0 success, 1 failure, 2 usage error, 3 infeasible task.";

#[derive(Debug, Parser)]
#[command(
    name = "turan",
    version,
    about = "Exact and heuristic search for small Turán-type extremal graphs",
    after_help = PATTERN_HELP
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Print one JSON record instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for exhaustive and annealing searches.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Seed for annealing searches.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Annealing budget, e.g. steps=200000,restarts=20,t0=2,decay=0.99997.
    #[arg(long, global = true)]
    budget: Option<String>,
    /// Run exhaustive searches even when they exceed the default envelope.
    #[arg(long, global = true)]
    override_envelope: bool,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Graph order.
    #[arg(long)]
    n: usize,
    /// Graph size (number of edges).
    #[arg(long)]
    e: usize,
    /// Forbidden or counted pattern.
    #[arg(long)]
    pattern: String,
    /// Write the witness graphs to this .g6 file.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph and print it in graph6 with its order and size.
    Construct {
        /// Construction spec, graph6 string or .g6 file.
        graph: String,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Count the copies of a pattern in a graph.
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        graph: String,
    },
    /// Turán number ex(n, pattern) with all extremal graphs.
    Ex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Minimum number of copies of a pattern over graphs of order n, size e.
    MinCopies(SearchArgs),
    /// All graphs of order n and size e with exactly `copies` copies.
    Classify {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        copies: u64,
    },
    /// Annealing search for a graph with few copies (an upper bound only).
    WitnessSearch {
        #[command(flatten)]
        search: SearchArgs,
        /// Start the first restart from this graph, extended greedily. By
        /// default an exhaustively found extremal graph of smaller order is used.
        #[arg(long, conflicts_with = "no_hint")]
        hint: Option<String>,
        /// Start every restart from a random graph.
        #[arg(long)]
        no_hint: bool,
    },
    /// Print the graph6 encoding of a graph.
    Encode {
        /// Construction spec, graph6 string or .g6 file.
        graph: String,
        /// Use the canonical labelling.
        #[arg(long)]
        canonical: bool,
    },
    /// Decode graph6 into an order and edge list.
    Decode { graph6: String },
    /// Evaluate the shipped claim catalogue.
    VerifyPaper {
        #[arg(long, default_value = "quick")]
        scope: String,
        /// Also write the full JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print the claim catalogue instead of evaluating it.
        #[arg(long)]
        list: bool,
    },
}

/// Result of one CLI invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Serialize)]
struct Record {
    task: String,
    value: Value,
    witnesses: Vec<String>,
    method: String,
    runtime_ms: u64,
}

struct Failure {
    status: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let status = match err {
            Error::Infeasible { .. } => EXIT_INFEASIBLE,
            Error::Pattern(_) | Error::Construction(_) | Error::Graph6(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        let mut message = format!("error: {err}");
        if status == EXIT_INFEASIBLE {
            message.push_str(
                "\nhint: use witness-search for an upper bound, or --override-envelope to run anyway",
            );
        }
        Failure { status, message }
    }
}

fn io_failure(path: &Path, err: std::io::Error) -> Failure {
    Failure {
        status: EXIT_FAILURE,
        message: format!("error: {}: {err}", path.display()),
    }
}

/// Reads graphs from a graph6 string, a `.g6` file or a construction spec.
pub fn read_graphs(input: &str) -> crate::Result<Vec<Graph>, String> {
    let input = input.trim();
    if input.ends_with(".g6") {
        let text = fs::read_to_string(input).map_err(|e| format!("{input}: {e}"))?;
        let graphs = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .enumerate()
            .map(|(i, l)| graph6::decode(l).map_err(|e| format!("{input}:{}: {e}", i + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        if graphs.is_empty() {
            return Err(format!("{input}: no graphs"));
        }
        return Ok(graphs);
    }
    if input.contains(':') || input.contains('=') {
        let spec: Construction = input.parse().map_err(|e: Error| e.to_string())?;
        return spec.build().map(|g| vec![g]).map_err(|e| e.to_string());
    }
    graph6::decode(input)
        .map(|g| vec![g])
        .map_err(|e| format!("{input:?} is neither a construction spec nor graph6 ({e})"))
}

fn one_graph(input: &str) -> Result<Graph, Failure> {
    let mut graphs = read_graphs(input).map_err(|message| Failure {
        status: EXIT_USAGE,
        message: format!("error: {message}"),
    })?;
    if graphs.len() != 1 {
        return Err(Failure {
            status: EXIT_USAGE,
            message: format!("error: expected one graph, {input} holds {}", graphs.len()),
        });
    }
    Ok(graphs.remove(0))
}

fn write_corpus(path: &Option<PathBuf>, witnesses: &[String]) -> Result<(), Failure> {
    if let Some(path) = path {
        let mut text = witnesses.join("\n");
        if !text.is_empty() {
            text.push('\n');
        }
        fs::write(path, text).map_err(|e| io_failure(path, e))?;
    }
    Ok(())
}

fn budget(global: &Global) -> Result<SearchBudget, Failure> {
    let mut b = SearchBudget::default();
    if let Some(spec) = &global.budget {
        b = b.parse_overrides(spec).map_err(|e| Failure {
            status: EXIT_USAGE,
            message: format!("error: {e}"),
        })?;
    }
    if let Some(seed) = global.seed {
        b.seed = seed;
    }
    Ok(b)
}

struct Done {
    record: Record,
    human: String,
    status: i32,
}

fn human_witnesses(value: &str, witnesses: &[String]) -> String {
    let mut s = format!("{value}\n");
    if !witnesses.is_empty() {
        s.push_str(&format!("witnesses ({}):\n", witnesses.len()));
        for w in witnesses {
            s.push_str(&format!("  {w}\n"));
        }
    }
    s
}

fn execute(cli: &Cli) -> Result<Done, Failure> {
    let g = &cli.global;
    let opts = SearchOptions {
        jobs: usize::from(g.jobs),
        override_envelope: g.override_envelope,
    };
    let start = Instant::now();
    let mut status = EXIT_OK;
    let (task, value, witnesses, method, human) = match &cli.command {
        Command::Construct { graph, witness_out } => {
            let h = one_graph(graph)?;
            let code = graph6::encode(&h);
            write_corpus(witness_out, std::slice::from_ref(&code))?;
            let human = format!("{code}\norder {} size {}\n", h.order(), h.size());
            let value = json!({ "order": h.order(), "size": h.size(), "graph6": code });
            (
                format!("construct {graph}"),
                value,
                vec![code],
                "construction",
                human,
            )
        }
        Command::Count { pattern, graph } => {
            let p: Pattern = pattern.parse()?;
            let graphs = read_graphs(graph).map_err(|message| Failure {
                status: EXIT_USAGE,
                message: format!("error: {message}"),
            })?;
            let counts: Vec<u64> = graphs.iter().map(|h| p.count(h)).collect();
            let human: String = counts.iter().map(|c| format!("{c}\n")).collect();
            let value = if counts.len() == 1 {
                json!(counts[0])
            } else {
                json!(counts)
            };
            let codes = graphs.iter().map(graph6::encode).collect();
            (
                format!("count {} in {graph}", p.name()),
                value,
                codes,
                "closed-form",
                human,
            )
        }
        Command::Ex {
            n,
            pattern,
            witness_out,
        } => {
            let set: PatternSet = pattern.parse()?;
            let r = exact::turan_number(*n, &set, opts)?;
            write_corpus(witness_out, &r.extremal)?;
            let human = human_witnesses(&r.ex.to_string(), &r.extremal);
            (
                format!("ex({n}, {set})"),
                json!(r.ex),
                r.extremal,
                "exhaustive",
                human,
            )
        }
        Command::MinCopies(s) => {
            let p: Pattern = s.pattern.parse()?;
            let r = exact::min_copies(s.n, s.e, &p, opts)?;
            write_corpus(&s.witness_out, &r.witnesses)?;
            let human = human_witnesses(&r.min_copies.to_string(), &r.witnesses);
            (
                format!("min-copies {} n={} e={}", p.name(), s.n, s.e),
                json!(r.min_copies),
                r.witnesses,
                "exhaustive",
                human,
            )
        }
        Command::Classify { search: s, copies } => {
            let p: Pattern = s.pattern.parse()?;
            let found = exact::classify_witnesses(s.n, s.e, &p, *copies, opts)?;
            let codes: Vec<String> = found.iter().map(graph6::encode).collect();
            write_corpus(&s.witness_out, &codes)?;
            let human = human_witnesses(&codes.len().to_string(), &codes);
            (
                format!("classify {} n={} e={} copies={copies}", p.name(), s.n, s.e),
                json!(codes.len()),
                codes,
                "exhaustive",
                human,
            )
        }
        Command::WitnessSearch {
            search: s,
            hint,
            no_hint,
        } => {
            let p: Pattern = s.pattern.parse()?;
            let hint = match hint {
                Some(spec) => Some(one_graph(spec)?),
                None if *no_hint => None,
                None => heuristic::default_hint(s.n, &p, opts),
            };
            let b = budget(g)?;
            let r = heuristic::search_min_copies(s.n, s.e, &p, &b, hint.as_ref(), opts.jobs)?;
            write_corpus(&s.witness_out, &r.witnesses)?;
            let human = format!(
                "{}\nupper bound only (seed {}, {} restarts x {} steps)\n{}\n",
                r.min_copies, b.seed, b.restarts, b.max_steps, r.witnesses[0]
            );
            (
                format!("witness-search {} n={} e={}", p.name(), s.n, s.e),
                json!(r.min_copies),
                r.witnesses,
                "heuristic-upper-bound",
                human,
            )
        }
        Command::Encode { graph, canonical } => {
            let h = one_graph(graph)?;
            let code = if *canonical {
                canonical_form(&h).to_graph6()
            } else {
                graph6::encode(&h)
            };
            (
                format!("encode {graph}"),
                json!(code),
                vec![code.clone()],
                "graph6",
                format!("{code}\n"),
            )
        }
        Command::Decode { graph6: code } => {
            let h = graph6::decode(code).map_err(Error::from)?;
            let edges: Vec<[usize; 2]> = h.edges().into_iter().map(|(u, v)| [u, v]).collect();
            let mut human = format!("order {} size {}\n", h.order(), h.size());
            for [u, v] in &edges {
                human.push_str(&format!("{u} {v}\n"));
            }
            let value = json!({ "order": h.order(), "edges": edges });
            (
                format!("decode {code}"),
                value,
                vec![code.trim().to_string()],
                "graph6",
                human,
            )
        }
        Command::VerifyPaper {
            scope,
            report,
            list,
        } => {
            let scope: Scope = scope.parse().map_err(|e: Error| Failure {
                status: EXIT_USAGE,
                message: format!("error: {e}"),
            })?;
            let catalog = Catalog::builtin();
            if *list {
                let human = catalog.to_json() + "\n";
                let value = serde_json::to_value(&catalog).expect("catalogue serialises");
                return Ok(Done {
                    record: Record {
                        task: "verify-paper --list".into(),
                        value,
                        witnesses: vec![],
                        method: "catalogue".into(),
                        runtime_ms: 0,
                    },
                    human,
                    status,
                });
            }
            let cfg = VerifyConfig {
                scope,
                search: opts,
                budget: budget(g)?,
            };
            let mut human = String::new();
            let rep = claims::verify_with(&catalog, &cfg, |o| {
                let tag = match o.verdict {
                    Verdict::Pass => "PASS",
                    Verdict::Fail => "FAIL",
                    Verdict::Skipped => "SKIP",
                };
                let computed = o
                    .computed
                    .as_ref()
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "-".into());
                let mut line = format!(
                    "{tag} {:<28} expected {} computed {computed} ({} ms)",
                    o.id, o.expected, o.runtime_ms
                );
                if o.verdict != Verdict::Pass {
                    if let Some(r) = &o.reason {
                        line.push_str(&format!(" [{r}]"));
                    }
                }
                human.push_str(&line);
                human.push('\n');
            });
            let s = rep.summary;
            human.push_str(&format!(
                "summary: {} pass, {} fail, {} skipped\n",
                s.pass, s.fail, s.skipped
            ));
            let json_report = serde_json::to_string_pretty(&rep).expect("report serialises");
            if let Some(path) = report {
                fs::write(path, json_report + "\n").map_err(|e| io_failure(path, e))?;
            }
            if s.fail > 0 {
                status = EXIT_FAILURE;
            }
            let value = serde_json::to_value(&rep).expect("report serialises");
            (
                format!("verify-paper {scope:?}").to_lowercase(),
                value,
                vec![],
                "claim-catalogue",
                human,
            )
        }
    };
    Ok(Done {
        record: Record {
            task,
            value,
            witnesses,
            method: method.to_string(),
            runtime_ms: start.elapsed().as_millis() as u64,
        },
        human,
        status,
    })
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    status: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    status: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(done) => Outcome {
            status: done.status,
            stdout: if cli.global.json {
                serde_json::to_string(&done.record).expect("record serialises") + "\n"
            } else {
                done.human
            },
            stderr: String::new(),
        },
        Err(f) => Outcome {
            status: f.status,
            stdout: String::new(),
            stderr: f.message + "\n",
        },
    }
}
