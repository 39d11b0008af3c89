//! Acceptance run: one PASS/FAIL line per criterion, then a nonzero exit if
//! anything failed. Every comparison is exact (integer equality); the only
//! non-exact bounds are the wall-clock ceilings below.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::Rng;
use turan_core::constructions::{star_witness, witness, Witness};
use turan_core::counting::count_generic;
use turan_core::enumerate::{Generator, Node};
use turan_core::exact::{self, SearchOptions};
use turan_core::formulas::{ex_book, ex_c4_table, ex_family_fact1, ex_star};
use turan_core::graph6::{decode, encode};
use turan_core::heuristic::{search_min_copies, SearchBudget};
use turan_core::{are_isomorphic, canonical_form, Error, Graph, Pattern, PatternSet};

/// Ceiling for the criteria that promise sub-second runs.
const FAST: Duration = Duration::from_secs(1);
/// Seed recorded for the large-order annealing upper bounds.
const ANNEALING_SEED: u64 = 2024;
/// Independent seeds for the "never at most one copy" property.
const PROPERTY_SEEDS: u64 = 100;
const PROPERTY_STEPS: u64 = 200_000;
const RANDOM_SAMPLES: usize = 10_000;

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Check);

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn ex(n: usize, h: Pattern) -> Result<usize, String> {
    Ok(exact::turan_number(n, &PatternSet::single(h), opts())
        .map_err(err)?
        .ex)
}

fn min_copies(n: usize, e: usize, h: &Pattern) -> Result<u64, String> {
    Ok(exact::min_copies(n, e, h, opts()).map_err(err)?.min_copies)
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("took {t:?}, ceiling {limit:?}"))
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    for p in [2, 4, 6] {
        let bp = Pattern::book(p).map_err(err)?;
        let g5 = witness(Witness::G5, p).map_err(err)?;
        expect_eq(&format!("g5 p={p} order"), g5.order(), p + 2)?;
        expect_eq(&format!("g5 p={p} size"), g5.size(), p * (p + 2) / 2 + 1)?;
        expect_eq(&format!("g5 p={p} books"), bp.count(&g5), 1)?;
        let g6 = witness(Witness::G6, p).map_err(err)?;
        expect_eq(&format!("g6 p={p} order"), g6.order(), p + 3)?;
        expect_eq(&format!("g6 p={p} size"), g6.size(), p * (p + 4) / 2 + 1)?;
        let mut seq = vec![p + 1; p + 2];
        seq.push(p);
        expect_eq(&format!("g6 p={p} degrees"), g6.degree_sequence(), seq)?;
        expect_eq(&format!("g6 p={p} books"), bp.count(&g6), 1)?;
    }
    within(start, FAST)?;
    Ok("g5, g6 for p = 2, 4, 6".into())
}

fn criterion_2() -> Check {
    let start = Instant::now();
    for (p, n) in [(4, 7), (4, 9), (6, 9), (4, 11), (6, 11)] {
        let g = star_witness(p, n).map_err(err)?;
        expect_eq(
            &format!("({p},{n}) size"),
            g.size(),
            ex_star(n, p).map_err(err)? + 1,
        )?;
        expect_eq(
            &format!("({p},{n}) stars"),
            Pattern::star(p).map_err(err)?.count(&g),
            1,
        )?;
    }
    within(start, FAST)?;
    Ok("5 (p, n) pairs".into())
}

fn criterion_3() -> Check {
    let mut checked = 0;
    for n in 3..=9 {
        for p in 2..n {
            let got = ex(n, Pattern::star(p).map_err(err)?)?;
            expect_eq(
                &format!("ex({n}, K1,{p})"),
                got,
                ex_star(n, p).map_err(err)?,
            )?;
            checked += 1;
        }
    }
    for p in 2..=5 {
        for n in [p + 2, p + 3] {
            let got = ex(n, Pattern::book(p).map_err(err)?)?;
            expect_eq(&format!("ex({n}, B{p})"), got, ex_book(n, p).map_err(err)?)?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} exhaustive Turán numbers equal the formulas"
    ))
}

fn criterion_4() -> Check {
    let cases = [
        (2, 6, 9, 10, 2),
        (2, 7, 12, 13, 3),
        (4, 8, 21, 22, 6),
        (4, 9, 27, 28, 21),
    ];
    for (p, n, want_ex, e, want_min) in cases {
        let bp = Pattern::book(p).map_err(err)?;
        expect_eq(&format!("ex({n}, B{p})"), ex(n, bp.clone())?, want_ex)?;
        expect_eq(
            &format!("min({n}, {e}, B{p})"),
            min_copies(n, e, &bp)?,
            want_min,
        )?;
    }
    Ok("B2 at orders 6, 7 and B4 at orders 8, 9".into())
}

fn criterion_5() -> Check {
    for p in [3, 5] {
        let bp = Pattern::book(p).map_err(err)?;
        let small_e = ex_book(p + 2, p).map_err(err)? + 1;
        let large_e = ex_book(p + 3, p).map_err(err)? + 1;
        expect_eq(
            &format!("min({}, {small_e}, B{p})", p + 2),
            min_copies(p + 2, small_e, &bp)?,
            3,
        )?;
        let want = 3 * (p as u64 + 1);
        expect_eq(
            &format!("min({}, {large_e}, B{p})", p + 3),
            min_copies(p + 3, large_e, &bp)?,
            want,
        )?;
        let small = witness(Witness::T4Small, p).map_err(err)?;
        expect_eq(
            "t4_small shape",
            (small.order(), small.size()),
            (p + 2, small_e),
        )?;
        expect_eq("t4_small books", bp.count(&small), 3)?;
        let large = witness(Witness::T4Large, p).map_err(err)?;
        expect_eq(
            "t4_large shape",
            (large.order(), large.size()),
            (p + 3, large_e),
        )?;
        expect_eq("t4_large books", bp.count(&large), want)?;
    }
    Ok("p = 3, 5 minima attained by t4_small, t4_large".into())
}

fn criterion_6() -> Check {
    for p in [2, 4] {
        let bp = Pattern::book(p).map_err(err)?;
        for (n, which) in [(p + 2, Witness::G5), (p + 3, Witness::G6)] {
            let e = ex_book(n, p).map_err(err)? + 1;
            let classes = exact::classify_witnesses(n, e, &bp, 1, opts()).map_err(err)?;
            expect_eq(&format!("classes at ({n}, {e}, B{p})"), classes.len(), 1)?;
            let w = witness(which, p).map_err(err)?;
            if !are_isomorphic(&classes[0], &w) {
                return Err(format!("class at ({n}, {e}) is not {}", which.name()));
            }
        }
    }
    Ok("unique class, isomorphic to g5 / g6".into())
}

fn criterion_7() -> Check {
    let c4 = Pattern::c4();
    let mut witnesses = Vec::new();
    for n in 6..=11 {
        let got = ex(n, c4.clone())?;
        expect_eq(&format!("ex({n}, C4)"), got, ex_c4_table(n).map_err(err)?)?;
        let classes = exact::classify_witnesses(n, got + 1, &c4, 1, opts()).map_err(err)?;
        if classes.is_empty() {
            return Err(format!("no ({n}, {}) graph with one C4", got + 1));
        }
        expect_eq(
            &format!("min({n}, {}, C4)", got + 1),
            min_copies(n, got + 1, &c4)?,
            1,
        )?;
        witnesses.push(classes.len());
    }
    Ok(format!(
        "orders 6..=11 exhaustive (order 11 included); one-C4 classes {witnesses:?}"
    ))
}

/// Returns the criterion line plus the honest skip line for the lower bound.
fn criterion_8() -> (Check, String) {
    let c4 = Pattern::c4();
    let budget = SearchBudget {
        seed: ANNEALING_SEED,
        ..SearchBudget::default()
    };
    let run = || -> Check {
        let mut found = Vec::new();
        for (n, e) in [(12, 22), (13, 25)] {
            let r = search_min_copies(n, e, &c4, &budget, None, 1).map_err(err)?;
            let g = decode(&r.witnesses[0]).map_err(|e| e.to_string())?;
            expect_eq(&format!("annealing ({n}, {e})"), r.min_copies, 2)?;
            expect_eq("witness shape", (g.order(), g.size()), (n, e))?;
            expect_eq("generic recount", count_generic(&g, &c4), 2)?;
            found.push(r.witnesses[0].clone());
        }
        for (n, e) in [(12, 22), (13, 25)] {
            for seed in 0..PROPERTY_SEEDS {
                let b = SearchBudget {
                    seed,
                    max_steps: PROPERTY_STEPS,
                    restarts: 1,
                    ..SearchBudget::default()
                };
                let r = search_min_copies(n, e, &c4, &b, None, 1).map_err(err)?;
                if r.min_copies <= 1 {
                    return Err(format!(
                        "seed {seed} found ({n}, {e}) with {} C4",
                        r.min_copies
                    ));
                }
            }
        }
        Ok(format!(
            "seed {ANNEALING_SEED}: two-C4 witnesses {found:?}; {PROPERTY_SEEDS} seeds x {PROPERTY_STEPS} steps never reach <= 1"
        ))
    };
    let mut skip = Vec::new();
    for (n, e) in [(12, 22), (13, 25)] {
        match exact::min_copies(n, e, &c4, opts()) {
            Err(Error::Infeasible { estimate, .. }) => {
                skip.push(format!("min({n}, {e}, C4) >= 2 [{estimate}]"))
            }
            other => skip.push(format!("min({n}, {e}, C4) unexpectedly ran: {other:?}")),
        }
    }
    (run(), skip.join("; "))
}

fn criterion_9() -> Check {
    let fam: PatternSet = "family:c3,p4,k13".parse().map_err(err)?;
    for n in 3..=9 {
        let got = exact::turan_number(n, &fam, opts()).map_err(err)?.ex;
        expect_eq(
            &format!("ex({n}, family)"),
            got,
            ex_family_fact1(n).map_err(err)?,
        )?;
    }
    let c4 = Pattern::c4();
    expect_eq("min(5, 7, C4)", min_copies(5, 7, &c4)?, 2)?;
    expect_eq("min(6, 9, C4)", min_copies(6, 9, &c4)?, 3)?;
    Ok("family formula for n = 3..=9; C4 minima 2 and 3".into())
}

fn criterion_10() -> Check {
    for (p, n) in [(3, 6), (3, 7), (4, 8)] {
        let e = ex_star(n, p).map_err(err)? + 1;
        expect_eq(
            &format!("min({n}, {e}, K1,{p})"),
            min_copies(n, e, &Pattern::star(p).map_err(err)?)?,
            2,
        )?;
    }
    Ok("(3,6), (3,7), (4,8)".into())
}

fn criterion_11() -> Check {
    let mut rng = common::rng(1111);
    let mut patterns = vec![Pattern::c4(), Pattern::triangle()];
    for p in 2..=5 {
        patterns.push(Pattern::star(p).map_err(err)?);
        patterns.push(Pattern::book(p).map_err(err)?);
    }
    for h in &patterns {
        for i in 0..RANDOM_SAMPLES {
            let g = common::random_graph(1 + i % 9, rng.gen_range(0.05..0.95), &mut rng);
            expect_eq(
                &format!("{} in {}", h.name(), encode(&g)),
                h.count(&g),
                count_generic(&g, h),
            )?;
        }
    }

    for n in 4..=7 {
        let counts = Mutex::new(BTreeMap::new());
        Generator::new(n, n * (n - 1) / 2)
            .run(&|node: &Node| {
                *counts
                    .lock()
                    .unwrap()
                    .entry(node.graph.size())
                    .or_insert(0u64) += 1;
                true
            })
            .map_err(err)?;
        expect_eq(
            &format!("order {n} classes per size"),
            counts.into_inner().unwrap(),
            common::labelled_dedup_counts(n),
        )?;
    }

    for i in 0..RANDOM_SAMPLES {
        let n = 1 + i % 14;
        let g = common::random_graph(n, 0.5, &mut rng);
        let h = common::permute(&g, &common::random_permutation(n, &mut rng));
        if canonical_form(&g) != canonical_form(&h) {
            return Err(format!(
                "relabelling changed the canonical form of {}",
                encode(&g)
            ));
        }
    }

    let mut corpus = 0;
    for n in 0..=8 {
        let graphs: Mutex<Vec<Graph>> = Mutex::new(Vec::new());
        Generator::new(n, n * n.saturating_sub(1) / 2)
            .run(&|node: &Node| {
                graphs.lock().unwrap().push(node.graph.clone());
                true
            })
            .map_err(err)?;
        for g in graphs.into_inner().unwrap() {
            let code = encode(&g);
            expect_eq(
                "graph6 reference",
                code.clone(),
                common::graph6_reference(&g),
            )?;
            expect_eq(
                "graph6 round trip",
                decode(&code).map_err(|e| e.to_string())?,
                g,
            )?;
            corpus += 1;
        }
    }

    for _ in 0..RANDOM_SAMPLES / 10 {
        let mut g = common::random_graph(rng.gen_range(4..=10), 0.2, &mut rng);
        let mut last: Vec<u64> = patterns.iter().map(|h| h.count(&g)).collect();
        loop {
            let open = g.non_edges();
            if open.is_empty() {
                break;
            }
            let (u, v) = open[rng.gen_range(0..open.len())];
            g.add_edge(u, v);
            let now: Vec<u64> = patterns.iter().map(|h| h.count(&g)).collect();
            if now.iter().zip(&last).any(|(a, b)| a < b) {
                return Err(format!(
                    "a counter dropped after adding {u}-{v} to {}",
                    encode(&g)
                ));
            }
            last = now;
        }
    }
    Ok(format!(
        "{} counter samples, totals 11/34/156/1044, {RANDOM_SAMPLES} relabellings, {corpus} graph6 graphs, monotonicity",
        RANDOM_SAMPLES * patterns.len()
    ))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |id: &str, title: &str, start: Instant, result: Check| {
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("PASS  {id:>3}  {title}: {detail} ({ms} ms)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {id:>3}  {title}: {why} ({ms} ms)");
            }
        }
    };
    let criteria: [Criterion; 7] = [
        ("1", "book witnesses g5, g6", criterion_1),
        ("2", "star witnesses", criterion_2),
        (
            "3",
            "star and book formulas vs exhaustive search",
            criterion_3,
        ),
        ("4", "B2 / B4 computer search", criterion_4),
        ("5", "odd-p book minima", criterion_5),
        ("6", "uniqueness of g5 / g6", criterion_6),
        ("7", "ex(n, C4) for n = 6..=11", criterion_7),
    ];
    for (id, title, f) in criteria {
        let t = Instant::now();
        report(id, title, t, f());
    }
    let t = Instant::now();
    let (c8, skipped) = criterion_8();
    report("8", "two-C4 graphs at orders 12, 13 (upper bounds)", t, c8);
    println!("SKIP   8b  exhaustive lower bound, skipped-infeasible: {skipped}");
    let rest: [Criterion; 3] = [
        ("9", "family formula and C4 minima", criterion_9),
        ("10", "star copy minima", criterion_10),
        ("11", "oracle and property suites", criterion_11),
    ];
    for (id, title, f) in rest {
        let t = Instant::now();
        report(id, title, t, f());
    }
    if failed == 0 {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
