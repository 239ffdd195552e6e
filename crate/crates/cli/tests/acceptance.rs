//! Acceptance gate. Runs every criterion and prints one PASS/FAIL line each;
//! exits non-zero if any criterion fails.
//!
//! Run with `cargo test -p eqcol-cli --test acceptance`.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use eqcol::{
    brute_force_chi_eq, lower_bound, naive_heuristic, parse_dimacs, random_graph, solve_with_observer,
    validate_equitable, AuditObserver, ColorOrder, Graph, Pruning, SolverConfig, Status, Strategy,
};
use eqcol_cli::bench::{aggregate, load_suite, run};
use eqcol_cli::suite::{parse_configs, parse_suite};

/// Criterion 1 corpus: n in 4..=10, three densities, 15 seeds each (315 graphs).
fn oracle_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 4..=10usize {
        for (di, d) in [0.2, 0.5, 0.8].into_iter().enumerate() {
            for i in 0..15u64 {
                let seed = 10_000 * n as u64 + 100 * di as u64 + i;
                out.push((format!("n={n} d={d} seed={seed}"), random_graph(n, d, seed).unwrap()));
            }
        }
    }
    out
}

fn instance(name: &str) -> Graph {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../instances").join(name);
    parse_dimacs(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

/// Per-(graph, config) outcome of a corpus sweep.
type Sweep = Vec<(Option<usize>, u64)>;

struct CorpusRun {
    sweep: Sweep,
    mismatches: Vec<String>,
    audit: AuditObserver,
    elapsed: Duration,
}

fn sweep_corpus(corpus: &[(String, Graph)], oracle: &[usize]) -> CorpusRun {
    let start = Instant::now();
    let mut sweep = Vec::new();
    let mut mismatches = Vec::new();
    let mut total = AuditObserver::new();
    for ((name, g), &chi) in corpus.iter().zip(oracle) {
        for cfg in SolverConfig::all() {
            let mut audit = AuditObserver::new();
            let r = solve_with_observer(g, &cfg, &mut audit);
            if r.chi_eq != Some(chi) || r.status != Status::Optimal {
                mismatches.push(format!("{name} {}: got {:?}, oracle {chi}", cfg.label(), r.chi_eq));
            }
            sweep.push((r.chi_eq, r.nodes));
            total.absorb(&audit);
        }
    }
    CorpusRun { sweep, mismatches, audit: total, elapsed: start.elapsed() }
}

struct Gate {
    failures: usize,
}

impl Gate {
    fn report(&mut self, id: u32, title: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => println!("[PASS] criterion {id}: {title} -- {detail}"),
            Err(detail) => {
                self.failures += 1;
                println!("[FAIL] criterion {id}: {title} -- {detail}");
            }
        }
    }
}

fn criterion_2(audit: &mut AuditObserver) -> Result<String, String> {
    let mut eq_time = Duration::ZERO;
    let mut tr_time = Duration::ZERO;
    let (mut eq_nodes, mut tr_nodes) = (0u64, 0u64);
    for seed in 0..10 {
        let g = random_graph(40, 0.5, seed).unwrap();
        let (mut a, mut b) = (AuditObserver::new(), AuditObserver::new());
        let eq = solve_with_observer(&g, &SolverConfig::new(Strategy::Pass, ColorOrder::Index, Pruning::Equity), &mut a);
        let tr = solve_with_observer(&g, &SolverConfig::new(Strategy::Pass, ColorOrder::Index, Pruning::Trivial), &mut b);
        audit.absorb(&a);
        audit.absorb(&b);
        if eq.status != Status::Optimal || tr.status != Status::Optimal || eq.chi_eq != tr.chi_eq {
            return Err(format!("seed {seed}: equity {:?} vs trivial {:?}", eq.chi_eq, tr.chi_eq));
        }
        if eq.nodes > tr.nodes {
            return Err(format!("seed {seed}: equity nodes {} > trivial nodes {}", eq.nodes, tr.nodes));
        }
        eq_time += eq.wall_time;
        tr_time += tr.wall_time;
        eq_nodes += eq.nodes;
        tr_nodes += tr.nodes;
    }
    let detail = format!(
        "nodes {eq_nodes} vs {tr_nodes}, time {:.3}s vs {:.3}s",
        eq_time.as_secs_f64(),
        tr_time.as_secs_f64()
    );
    if eq_time <= tr_time {
        Ok(detail)
    } else {
        Err(format!("equity slower in total: {detail}"))
    }
}

fn criterion_3() -> Result<String, String> {
    let groups = parse_suite(
        "random 50 0.1 10 0\nrandom 50 0.3 10 0\nrandom 50 0.5 10 0\nrandom 50 0.7 10 0\nrandom 50 0.9 10 0\n",
        Path::new("."),
    )
    .map_err(|e| e.to_string())?;
    let instances = load_suite(&groups).map_err(|e| e.to_string())?;
    let configs = parse_configs("pass/size/equity").map_err(|e| e.to_string())?;
    let rows = run(&instances, &configs, Duration::from_secs(120), 1);
    if let Some(r) = rows.iter().find(|r| !r.solved() || r.wall_time > 120.0) {
        return Err(format!("{} {} after {:.1}s", r.instance, r.status, r.wall_time));
    }
    let agg = aggregate(&rows);
    let mut summary = Vec::new();
    for a in &agg {
        if a.instances != 10 || a.solved_pct != 100.0 || a.mean_gap != 0.0 {
            return Err(format!("{}: {}% solved, gap {}", a.group, a.solved_pct, a.mean_gap));
        }
        summary.push(format!("d={} {:.3}s", a.density, a.mean_time.unwrap_or(f64::NAN)));
    }
    Ok(format!("50/50 optimal, gap 0; mean times {}", summary.join(", ")))
}

fn criterion_4(audit: &mut AuditObserver) -> Result<String, String> {
    let eqds1 = SolverConfig::new(Strategy::Pass, ColorOrder::Index, Pruning::Equity);
    let eqds2 = SolverConfig::new(Strategy::Pass, ColorOrder::SizeAsc, Pruning::Equity);
    let mut parts = Vec::new();
    for (name, limit1, limit2) in [("queen8_8.col", 900, 120), ("myciel5.col", 10, 10)] {
        let g = instance(name);
        let (mut a, mut b) = (AuditObserver::new(), AuditObserver::new());
        let r1 = solve_with_observer(&g, &eqds1.clone().with_time_limit(Duration::from_secs(limit1)), &mut a);
        let r2 = solve_with_observer(&g, &eqds2.clone().with_time_limit(Duration::from_secs(limit2)), &mut b);
        audit.absorb(&a);
        audit.absorb(&b);
        for (label, r, limit) in [("EqDS1", &r1, limit1), ("EqDS2", &r2, limit2)] {
            if r.status != Status::Optimal || r.wall_time > Duration::from_secs(limit) {
                return Err(format!("{name} {label}: {} after {:.2}s", r.status, r.wall_time.as_secs_f64()));
            }
        }
        if r1.chi_eq != r2.chi_eq {
            return Err(format!("{name}: EqDS1 {:?} vs EqDS2 {:?}", r1.chi_eq, r2.chi_eq));
        }
        parts.push(format!(
            "{name} chi_eq={} (EqDS1 {:.2}s, EqDS2 {:.2}s)",
            r1.chi_eq.unwrap(),
            r1.wall_time.as_secs_f64(),
            r2.wall_time.as_secs_f64()
        ));
    }
    Ok(parts.join("; "))
}

fn criterion_5(audit: &AuditObserver, corpus: &[(String, Graph)], oracle: &[usize]) -> Result<String, String> {
    if audit.violations() - audit.unbalanced_equity_leaves != 0 {
        return Err(format!("search audit: {audit:?}"));
    }
    for ((name, g), &chi) in corpus.iter().zip(oracle) {
        let lb = lower_bound(g);
        if lb > chi {
            return Err(format!("{name}: lower bound {lb} > chi_eq {chi}"));
        }
        for start in 1..=lb {
            let c = naive_heuristic(g, start);
            if validate_equitable(g, &c) != Ok(true) || c.k < chi {
                return Err(format!("{name}: naive from {start} gave k={} (chi_eq {chi})", c.k));
            }
        }
    }
    Ok(format!(
        "{} incumbents valid, UB monotone, LB <= UB, no color >= UB assigned; bounds bracket oracle on {} graphs",
        audit.incumbents,
        corpus.len()
    ))
}

fn main() {
    let mut gate = Gate { failures: 0 };
    let corpus = oracle_corpus();
    let oracle: Vec<usize> = corpus.iter().map(|(_, g)| brute_force_chi_eq(g, 12).unwrap().chi_eq).collect();

    let first = sweep_corpus(&corpus, &oracle);
    gate.report(
        1,
        "oracle equivalence over all 12 configs",
        if first.mismatches.is_empty() && first.elapsed <= Duration::from_secs(300) {
            Ok(format!("{} graphs x 12 configs exact in {:.2}s", corpus.len(), first.elapsed.as_secs_f64()))
        } else {
            Err(format!(
                "{} mismatches ({:?}), {:.2}s",
                first.mismatches.len(),
                first.mismatches.first(),
                first.elapsed.as_secs_f64()
            ))
        },
    );

    let mut audit = first.audit.clone();
    gate.report(2, "equity pruning vs trivial at n=40, d=0.5", criterion_2(&mut audit));
    gate.report(3, "random table at n=50, PASS + size order", criterion_3());
    gate.report(4, "DIMACS queen8_8 and myciel5", criterion_4(&mut audit));
    gate.report(5, "validity of incumbents and bounds", criterion_5(&audit, &corpus, &oracle));

    let leaves = &first.audit;
    gate.report(
        6,
        "complete states under equity pruning are equitable",
        if leaves.unbalanced_equity_leaves == 0 && leaves.equity_leaves > 0 {
            Ok(format!("{} complete states, 0 unbalanced", leaves.equity_leaves))
        } else {
            Err(format!("{} of {} unbalanced", leaves.unbalanced_equity_leaves, leaves.equity_leaves))
        },
    );

    let second = sweep_corpus(&corpus, &oracle);
    let diffs = first.sweep.iter().zip(&second.sweep).filter(|(a, b)| a != b).count();
    gate.report(
        7,
        "determinism of chi_eq and node counts",
        if diffs == 0 && first.sweep.len() == second.sweep.len() {
            Ok(format!("{} runs identical", first.sweep.len()))
        } else {
            Err(format!("{diffs} runs differ"))
        },
    );

    if gate.failures > 0 {
        println!("{} criterion(s) failed", gate.failures);
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
