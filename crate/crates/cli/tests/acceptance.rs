//! Acceptance run: one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tritau_core::constructions::{
    build_join_h, egt_ratio_pipeline, low_alpha_trifree, norin_check, optimal_d, parse_ratio,
    ConstructionParams, Implication, Objective, PipelineOptions, Truth, DEFAULT_EFFORT,
};
use tritau_core::graph::{gnp, is_triangle_free, Graph, StandardGraph};
use tritau_core::solvers::{
    alpha1_exact, alpha_exact, oracle_bruteforce, phi_max, tau_exact, Budget, Problem, SolveOutcome,
};
use tritau_core::verify::{
    all_labeled_graphs, inequality_suite, inequality_suite_from, random_trifree,
    tightness_and_baselines, Verdict,
};

const UNLIMITED: Budget = Budget::UNLIMITED;
/// Only a refusal threshold; the ascending enumerations stop early.
const ORACLE_LIMIT: u64 = 1 << 40;

fn golden() -> f64 {
    optimal_d(Objective::MinRatio).d
}

/// `count` seeded `G(n, p)` graphs with `n` in `min_n..=max_n` and `p` in
/// `[0.2, 0.8)`.
fn random_graphs(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let p = rng.gen_range(0.2..0.8);
            gnp(n, p, rng.gen()).expect("valid parameters")
        })
        .collect()
}

fn same(a: &SolveOutcome, b: &SolveOutcome) -> bool {
    a.is_optimal() && b.is_optimal() && a.lower == b.lower
}

fn criterion_1() -> (bool, String) {
    let mut graphs: Vec<Graph> = all_labeled_graphs(5).collect();
    graphs.extend(random_graphs(300, 1, 8, 1));
    let mut mismatches = 0;
    let mut compared = 0;
    for g in &graphs {
        let problems = [
            (Problem::Tau, tau_exact(g, UNLIMITED)),
            (Problem::Alpha1, alpha1_exact(g, UNLIMITED)),
            (Problem::Alpha, alpha_exact(g, UNLIMITED)),
            (Problem::Phi { k: 1.0 }, phi_max(g, 1.0, UNLIMITED).unwrap()),
            (Problem::Phi { k: 2.0 }, phi_max(g, 2.0, UNLIMITED).unwrap()),
        ];
        for (problem, bnb) in problems {
            let oracle = oracle_bruteforce(problem, g, ORACLE_LIMIT).unwrap();
            compared += 1;
            if !same(&bnb, &oracle) || !bnb.certificate_is_valid(g) {
                mismatches += 1;
            }
        }
    }
    (
        mismatches == 0,
        format!(
            "{} graphs, {compared} comparisons, {mismatches} mismatches",
            graphs.len()
        ),
    )
}

fn criterion_2() -> (bool, String) {
    let mut graphs: Vec<Graph> = (1..=5)
        .flat_map(all_labeled_graphs)
        .filter(is_triangle_free)
        .collect();
    let exhaustive = graphs.len();
    graphs
        .extend((0..500u64).map(|i| random_trifree(6 + (i % 3) as usize, 0.5, 1000 + i).unwrap()));
    let mut failures = 0;
    let mut cases = 0;
    for g in &graphs {
        for k in 1..=3 {
            cases += 1;
            let phi = phi_max(g, k as f64, UNLIMITED).unwrap();
            let tau = tau_exact(&build_join_h(g, k).unwrap(), UNLIMITED);
            let ok = match (phi.value_int(), tau.value_int()) {
                (Some(p), Some(t)) => t == (g.order() * k) as i64 - p,
                _ => false,
            };
            failures += usize::from(!ok);
        }
    }
    (
        failures == 0,
        format!("{exhaustive} exhaustive + 500 sampled graphs, {cases} cases, {failures} failures"),
    )
}

fn criterion_3() -> (bool, String) {
    let graphs = random_graphs(200, 1, 12, 3);
    let bad = graphs
        .iter()
        .filter(|g| {
            let phi = phi_max(g, 1.0, UNLIMITED).unwrap();
            let alpha = alpha_exact(g, UNLIMITED);
            !same(&phi, &alpha)
        })
        .count();
    (bad == 0, format!("200 graphs, {bad} mismatches"))
}

fn criterion_4() -> (bool, String) {
    let mut failures = 0;
    let mut undecided = 0;
    for g in random_graphs(500, 1, 9, 4) {
        let a1 = oracle_bruteforce(Problem::Alpha1, &g, ORACLE_LIMIT).unwrap();
        let tau = oracle_bruteforce(Problem::Tau, &g, ORACLE_LIMIT).unwrap();
        match inequality_suite_from(&g, &a1, &tau).verdict {
            Verdict::Pass => {}
            Verdict::Fail => failures += 1,
            Verdict::Indeterminate => undecided += 1,
        }
    }
    for g in random_graphs(100, 10, 16, 5) {
        match inequality_suite(&g, UNLIMITED).verdict {
            Verdict::Pass => {}
            Verdict::Fail => failures += 1,
            Verdict::Indeterminate => undecided += 1,
        }
    }
    (
        failures == 0 && undecided == 0,
        format!("500 oracle + 100 B&B graphs, {failures} failures, {undecided} not optimal"),
    )
}

fn criterion_5() -> (bool, String) {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in [4usize, 6, 8, 10] {
        let target = (n * n / 4) as i64;
        for g in [
            StandardGraph::Complete(n).build().unwrap(),
            StandardGraph::CompleteBipartite(n / 2, n / 2)
                .build()
                .unwrap(),
        ] {
            let a1 = alpha1_exact(&g, UNLIMITED).value_int();
            let tau = tau_exact(&g, UNLIMITED).value_int();
            let sum = a1.zip(tau).map(|(a, t)| a + t);
            ok &= sum == Some(target);
            detail.push(sum.map_or("?".into(), |s| s.to_string()));
        }
        detail.push(format!("(n²/4 = {target})"));
    }
    (ok, format!("sums {}", detail.join(" ")))
}

fn criterion_6() -> (bool, String) {
    // K8's τ needs a 2^28 oracle walk
    let r = tightness_and_baselines(8, 8, 3, UNLIMITED, 1 << 28).unwrap();
    let ratio = r
        .measured
        .get("baseline_min_ratio")
        .and_then(|v| v.as_str())
        .unwrap_or("?");
    let checked = r.measured["oracle_cross_checked"]
        .as_array()
        .map_or(0, Vec::len);
    (
        r.verdict == Verdict::Pass && ratio == "12/37" && checked == 4,
        format!(
            "min ratio {ratio}, {checked} oracle cross-checks, verdict {}",
            r.verdict.as_str()
        ),
    )
}

fn criterion_7() -> (bool, String) {
    let c = parse_ratio("3/2").unwrap();
    let mut hits = Vec::new();
    let mut alphas = Vec::new();
    let mut slowest = 0.0f64;
    for seed in 0..10 {
        let start = Instant::now();
        let h = low_alpha_trifree(100, DEFAULT_EFFORT, seed, UNLIMITED);
        let report = norin_check(&h.graph, c, UNLIMITED).unwrap();
        slowest = slowest.max(start.elapsed().as_secs_f64());
        let alpha = h.alpha.value_int();
        alphas.push(alpha.map_or("?".into(), |a| a.to_string()));
        let good = is_triangle_free(&h.graph)
            && alpha.is_some_and(|a| 3 * a < 100)
            && report.tau_g.is_optimal()
            && report.verdict == Truth::True;
        if good {
            hits.push(seed);
        }
    }
    (
        !hits.is_empty() && slowest < 600.0,
        format!(
            "seeds 0..10, alpha(H) = [{}], verdict true on {} seeds, slowest {slowest:.1}s",
            alphas.join(", "),
            hits.len()
        ),
    )
}

fn criterion_8() -> (bool, String) {
    let mut ok = true;
    let mut values = Vec::new();
    for seed in 0..5 {
        let params = ConstructionParams::new(48, golden(), 0.5, seed);
        let options = PipelineOptions {
            direct_tau: true,
            ..Default::default()
        };
        let r = egt_ratio_pipeline(&params, 1.5, UNLIMITED, options).unwrap();
        let formula = r.tau.as_ref().and_then(SolveOutcome::value_int);
        let direct = r.tau_direct.as_ref().and_then(SolveOutcome::value_int);
        ok &= formula.is_some() && formula == direct;
        values.push(format!("{formula:?}/{direct:?}"));
    }
    (ok, format!("formula/direct = {}", values.join(" ")))
}

fn pipeline_runs(
    n: usize,
    seeds: std::ops::Range<u64>,
    budget: Budget,
) -> Vec<tritau_core::constructions::RatioReport> {
    seeds
        .map(|seed| {
            let params = ConstructionParams::new(n, golden(), 0.5, seed);
            egt_ratio_pipeline(&params, 1.5, budget, PipelineOptions::default()).unwrap()
        })
        .collect()
}

fn criterion_9() -> (bool, String) {
    let budget = Budget::nodes(30_000);
    let mut reports = pipeline_runs(128, 0..10, budget);
    reports.extend(pipeline_runs(256, 0..10, budget));
    let count = |i: Implication| reports.iter().filter(|r| r.implication == i).count();
    let (holds, violated, undecided, vacuous) = (
        count(Implication::Holds),
        count(Implication::Violated),
        count(Implication::Indeterminate),
        count(Implication::Vacuous),
    );
    (
        violated == 0 && undecided <= 5,
        format!("20 runs: {holds} hold, {violated} violated, {undecided} indeterminate, {vacuous} vacuous"),
    )
}

/// Raised from the conservative 0.05 after the measured n = 128 runs
/// (lowest 0.2328, mean 0.2452 over seeds 0..10).
const RATIO_FLOOR: f64 = 0.20;

fn criterion_10() -> (bool, String) {
    let reports = pipeline_runs(128, 0..10, Budget::nodes(200_000));
    let mins: Vec<f64> = reports
        .iter()
        .map(|r| r.ratios.as_ref().map_or(0.0, |x| x.min))
        .collect();
    let lowest = mins.iter().cloned().fold(f64::INFINITY, f64::min);
    let mean = mins.iter().sum::<f64>() / mins.len() as f64;
    (
        lowest >= RATIO_FLOOR,
        format!(
            "n=128, seeds 0..10: min ratio lowest {lowest:.4}, mean {mean:.4}, floor {RATIO_FLOOR}"
        ),
    )
}

fn run_cli(args: &[&str], out: &std::path::Path) -> Vec<u8> {
    let status = Command::new(env!("CARGO_BIN_EXE_tritau"))
        .args(args)
        .arg("--out")
        .arg(out)
        .status()
        .expect("binary runs");
    assert!(
        status.code().is_some_and(|c| c == 0 || c == 1),
        "{args:?}: {status}"
    );
    std::fs::read(out).expect("report written")
}

fn criterion_11() -> (bool, String) {
    let dir = tempfile::tempdir().unwrap();
    let configs: &[&[&str]] = &[
        &[
            "sweep",
            "--n",
            "48,64",
            "--seeds",
            "0,1,2",
            "--d",
            "0.5,0.618",
        ],
        &[
            "construct",
            "egt",
            "--n",
            "96",
            "--seed",
            "4",
            "--direct-tau",
        ],
        &["construct", "norin", "--n", "40", "--effort", "300"],
        &["verify", "suite", "--random", "30", "--max-n", "9"],
        &["verify", "density", "--n", "64", "--count", "3"],
        &["solve", "--problem", "phi", "--k", "2.5", "--in", "GRAPHS"],
    ];
    let graphs = dir.path().join("graphs.g6");
    let first = run_cli(
        &["gen", "--kind", "trifree", "--n", "30", "--count", "4"],
        &graphs,
    );
    let mut identical = first
        == run_cli(
            &["gen", "--kind", "trifree", "--n", "30", "--count", "4"],
            &graphs,
        );
    for (i, config) in configs.iter().enumerate() {
        let args: Vec<&str> = config
            .iter()
            .map(|a| {
                if *a == "GRAPHS" {
                    graphs.to_str().unwrap()
                } else {
                    a
                }
            })
            .collect();
        let out = dir.path().join(format!("report{i}"));
        let a = run_cli(&args, &out);
        let b = run_cli(&args, &out);
        identical &= a == b;
        if args[0] == "sweep" {
            let sidecar = dir.path().join(format!("report{i}.json"));
            identical &= std::fs::read(&sidecar).is_ok();
        }
    }
    (
        identical,
        format!(
            "{} configurations run twice, byte-identical: {identical}",
            configs.len() + 1
        ),
    )
}

type Criterion = fn() -> (bool, String);

fn main() {
    let criteria: [(&str, Criterion); 11] = [
        ("oracle equivalence", criterion_1),
        ("join identity", criterion_2),
        ("phi_1 = alpha", criterion_3),
        ("inequality suite", criterion_4),
        ("tightness", criterion_5),
        ("disjoint-union baseline", criterion_6),
        ("K1 join refutation demo", criterion_7),
        ("pipeline consistency", criterion_8),
        ("premise-checked implication", criterion_9),
        ("desk-scale ratio floor", criterion_10),
        ("determinism", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = check();
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} {}: {name}: {detail} [{:.1}s]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
