mod args;
mod output;

use std::error::Error as StdError;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use rayon::prelude::*;
use serde_json::{json, Value};
use tritau_core::constructions::{
    build_join_h, egt_ratio_pipeline, low_alpha_trifree, norin_check, optimal_d, parse_ratio,
    sample_trifree, ConstructionParams, Objective, PipelineOptions,
};
use tritau_core::graph::{gnp, graph6, Graph, StandardGraph};
use tritau_core::report::to_record;
use tritau_core::solvers::{
    alpha1_exact, alpha_exact, oracle_bruteforce, phi_max, tau_exact, tau_join_formula, Budget,
    Problem, SolveOutcome,
};
use tritau_core::verify::{
    density_falsifier, inequality_suite, phi_bound_check, tightness_and_baselines,
    tritau_exhaustive, CheckReport, TritauSample, Verdict,
};

use args::*;
use output::*;

type AnyResult<T> = Result<T, Box<dyn StdError + Send + Sync>>;

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_EXACT: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn usage(msg: impl Into<String>) -> Box<dyn StdError + Send + Sync> {
    msg.into().into()
}

fn budget(c: &Common) -> Budget {
    Budget {
        max_nodes: c.budget_nodes,
        max_seconds: c.budget_secs,
    }
}

fn golden() -> f64 {
    optimal_d(Objective::MinRatio).d
}

/// Order-preserving map over a dedicated pool of `threads` workers.
fn par_map<T, R, F>(threads: usize, items: Vec<T>, f: F) -> AnyResult<Vec<R>>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> AnyResult<R> + Send + Sync,
{
    if threads <= 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?;
    pool.install(|| items.par_iter().map(f).collect())
}

fn read_graphs(path: &Path) -> AnyResult<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(graph6::decode_all(&text)?)
}

fn exit_for(cli: &Cli, doc: &Value, failed: bool) -> u8 {
    if failed {
        EXIT_VERIFY_FAIL
    } else if cli.common.require_exact && has_bounded(doc) {
        EXIT_NOT_EXACT
    } else {
        EXIT_OK
    }
}

fn finish(cli: &Cli, results: &impl serde::Serialize, failed: bool) -> AnyResult<u8> {
    let doc = envelope(cli, results, cli.common.timings);
    emit(cli.common.out.as_deref(), &json_text(&doc))?;
    Ok(exit_for(cli, &doc, failed))
}

fn run(cli: &Cli) -> AnyResult<u8> {
    match &cli.command {
        Command::Gen(a) => run_gen(cli, a),
        Command::Solve(a) => run_solve(cli, a),
        Command::Construct(ConstructCmd::Egt(a)) => {
            let params = ConstructionParams {
                n: a.n,
                theta: a.pipeline.theta,
                d: a.d.unwrap_or_else(golden),
                eps: a.eps,
                seed: cli.common.seed,
                p_override: None,
            };
            let report = egt_ratio_pipeline(
                &params,
                a.pipeline.c,
                budget(&cli.common),
                pipeline_options(&a.pipeline),
            )?;
            finish(cli, &report, false)
        }
        Command::Construct(ConstructCmd::Norin(a)) => run_norin(cli, a),
        Command::Verify(v) => run_verify(cli, v),
        Command::Sweep(a) => run_sweep(cli, a),
    }
}

fn pipeline_options(p: &PipelineArgs) -> PipelineOptions {
    PipelineOptions {
        alpha1_exact: p.alpha1_exact,
        alpha1_budget: Budget::nodes(p.alpha1_budget_nodes),
        direct_tau: p.direct_tau,
    }
}

fn run_gen(cli: &Cli, a: &GenArgs) -> AnyResult<u8> {
    let b = budget(&cli.common);
    let mut lines = String::new();
    for i in 0..a.count {
        let seed = cli.common.seed.wrapping_add(i);
        let p = a.p.unwrap_or_else(|| (a.n as f64).powf(-a.theta));
        let g = match a.kind {
            GraphKind::Gnp => gnp(a.n, p, seed)?,
            GraphKind::Trifree => {
                let params = ConstructionParams {
                    n: a.n,
                    theta: a.theta,
                    d: a.d.unwrap_or_else(golden),
                    eps: a.eps,
                    seed,
                    p_override: a.p,
                };
                sample_trifree(&params, b)?.0
            }
            GraphKind::LowAlpha => low_alpha_trifree(a.n, a.effort, seed, b).graph,
            GraphKind::Complete => StandardGraph::Complete(a.n).build()?,
            GraphKind::Empty => StandardGraph::Empty(a.n).build()?,
            GraphKind::Cycle => StandardGraph::Cycle(a.n).build()?,
            GraphKind::Path => StandardGraph::Path(a.n).build()?,
            GraphKind::Bipartite => {
                let (Some(x), Some(y)) = (a.a, a.b) else {
                    return Err(usage("--kind bipartite needs --a and --b"));
                };
                StandardGraph::CompleteBipartite(x, y).build()?
            }
        };
        lines.push_str(&graph6::encode(&g));
        lines.push('\n');
    }
    emit(cli.common.out.as_deref(), &lines)?;
    Ok(EXIT_OK)
}

fn run_solve(cli: &Cli, a: &SolveArgs) -> AnyResult<u8> {
    let b = budget(&cli.common);
    let problem = match (a.problem, a.k) {
        (ProblemArg::Tau, _) => Problem::Tau,
        (ProblemArg::Alpha1, _) => Problem::Alpha1,
        (ProblemArg::Alpha, _) => Problem::Alpha,
        (ProblemArg::Phi, Some(k)) => Problem::Phi { k },
        (ProblemArg::Phi, None) => return Err(usage("--problem phi needs --k")),
    };
    let hubs = match a.method {
        Method::Join => {
            if problem != Problem::Tau {
                return Err(usage("--method join solves tau only"));
            }
            match a.k {
                Some(k) if k >= 1.0 && k.fract() == 0.0 => Some(k as usize),
                _ => return Err(usage("--method join needs an integer --k >= 1")),
            }
        }
        _ => None,
    };
    let graphs = read_graphs(&a.input)?;
    let results = par_map(cli.common.parallel, graphs, |g| -> AnyResult<Value> {
        let (outcome, checked_on): (SolveOutcome, Graph) = match (a.method, problem) {
            (Method::Oracle, _) => (oracle_bruteforce(problem, g, a.oracle_limit)?, g.clone()),
            (Method::Join, _) => {
                let k = hubs.expect("checked above");
                (tau_join_formula(g, k, b)?, build_join_h(g, k)?)
            }
            (Method::Bnb, Problem::Tau) => (tau_exact(g, b), g.clone()),
            (Method::Bnb, Problem::Alpha1) => (alpha1_exact(g, b), g.clone()),
            (Method::Bnb, Problem::Alpha) => (alpha_exact(g, b), g.clone()),
            (Method::Bnb, Problem::Phi { k }) => (phi_max(g, k, b)?, g.clone()),
        };
        Ok(json!({
            "graph6": graph6::encode(g),
            "n": g.order(),
            "m": g.size(),
            "value": outcome.value(),
            "outcome": to_record(&outcome, cli.common.timings),
            "certificate_valid": outcome.certificate_is_valid(&checked_on),
        }))
    })?;
    finish(cli, &results, false)
}

fn run_norin(cli: &Cli, a: &NorinArgs) -> AnyResult<u8> {
    let b = budget(&cli.common);
    let c = parse_ratio(&a.c)?;
    let (h, effort, surrogate) = match &a.input {
        Some(path) => {
            let graphs = read_graphs(path)?;
            let h = graphs
                .into_iter()
                .next()
                .ok_or_else(|| usage("input has no graphs"))?;
            (h, None, None)
        }
        None => {
            let built = low_alpha_trifree(a.n, a.effort, cli.common.seed, b);
            (built.graph, Some(a.effort), Some(built.surrogate))
        }
    };
    let mut report = norin_check(&h, c, b)?;
    report.effort = effort;
    let results = json!({
        "h_graph6": graph6::encode(&h),
        "seed": cli.common.seed,
        "search_surrogate": surrogate,
        "report": to_record(&report, cli.common.timings),
    });
    finish(cli, &results, false)
}

fn sample_graphs(cli: &Cli, s: &GraphSource) -> AnyResult<Vec<(Graph, f64, u64)>> {
    let p_for = |n: usize| s.p.unwrap_or_else(|| (n as f64).powf(-s.theta));
    if let Some(path) = &s.input {
        return Ok(read_graphs(path)?
            .into_iter()
            .enumerate()
            .map(|(i, g)| {
                let p = p_for(g.order());
                (g, p, cli.common.seed.wrapping_add(i as u64))
            })
            .collect());
    }
    let n = s.n.ok_or_else(|| usage("give --in or --n"))?;
    (0..s.count)
        .map(|i| {
            let seed = cli.common.seed.wrapping_add(i);
            Ok((gnp(n, p_for(n), seed)?, p_for(n), seed))
        })
        .collect()
}

fn run_verify(cli: &Cli, v: &VerifyCmd) -> AnyResult<u8> {
    let b = budget(&cli.common);
    let threads = cli.common.parallel;
    let reports: Vec<CheckReport> = match v {
        VerifyCmd::Suite(a) => {
            let mut graphs = match &a.input {
                Some(path) => read_graphs(path)?,
                None => Vec::new(),
            };
            if a.max_n == 0 && a.random > 0 {
                return Err(usage("--max-n must be positive"));
            }
            for i in 0..a.random {
                let n = 1 + (i as usize % a.max_n);
                graphs.push(gnp(n, a.p, cli.common.seed.wrapping_add(i))?);
            }
            if graphs.is_empty() {
                return Err(usage("give --in or --random"));
            }
            par_map(threads, graphs, |g| Ok(inequality_suite(g, b)))?
        }
        VerifyCmd::Tritau(a) => {
            let sample = (a.sample > 0).then_some(TritauSample {
                count: a.sample,
                seed: cli.common.seed,
                min_n: a.sample_min_n,
                max_n: a.sample_max_n,
            });
            vec![tritau_exhaustive(a.exhaustive_n, &a.k, sample, b)?]
        }
        VerifyCmd::Tightness(a) => vec![tightness_and_baselines(a.n, a.s, a.t, b, a.oracle_limit)?],
        VerifyCmd::Density(a) => {
            let graphs = sample_graphs(cli, &a.source)?;
            par_map(threads, graphs, |(g, p, seed)| {
                Ok(density_falsifier(g, *p, a.eps, a.effort, *seed)?)
            })?
        }
        VerifyCmd::Phibound(a) => {
            let d = a.d.unwrap_or_else(golden);
            let graphs = match (&a.source.input, a.clean) {
                (None, true) => {
                    let n = a.source.n.ok_or_else(|| usage("give --in or --n"))?;
                    (0..a.source.count)
                        .map(|i| -> AnyResult<_> {
                            let seed = cli.common.seed.wrapping_add(i);
                            let params = ConstructionParams {
                                n,
                                theta: a.source.theta,
                                d,
                                eps: a.eps,
                                seed,
                                p_override: a.source.p,
                            };
                            Ok((sample_trifree(&params, b)?.0, params.p(), seed))
                        })
                        .collect::<AnyResult<Vec<_>>>()?
                }
                _ => sample_graphs(cli, &a.source)?,
            };
            par_map(threads, graphs, |(g, p, _)| {
                Ok(phi_bound_check(g, *p, d, a.eps, b)?)
            })?
        }
    };
    let failed = reports.iter().any(|r| r.verdict == Verdict::Fail);
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let results = json!({
        "summary": {
            "pass": count(Verdict::Pass),
            "fail": count(Verdict::Fail),
            "indeterminate": count(Verdict::Indeterminate),
        },
        "checks": to_record(&reports, cli.common.timings),
    });
    let doc = envelope(cli, &results, cli.common.timings);
    emit(cli.common.out.as_deref(), &json_text(&doc))?;
    if failed {
        eprintln!("verification failed; counterexample in the report");
    }
    let undecided = count(Verdict::Indeterminate) > 0;
    Ok(match exit_for(cli, &doc, failed) {
        EXIT_OK if cli.common.require_exact && undecided => EXIT_NOT_EXACT,
        code => code,
    })
}

fn run_sweep(cli: &Cli, a: &SweepArgs) -> AnyResult<u8> {
    let objective = match a.objective {
        ObjectiveArg::MinRatio => Objective::MinRatio,
        ObjectiveArg::SumRatio => Objective::SumRatio,
    };
    let ds = if a.d.is_empty() {
        vec![optimal_d(objective).d]
    } else {
        a.d.clone()
    };
    let mut grid = Vec::new();
    for &n in &a.n {
        for &d in &ds {
            for &eps in &a.eps {
                for &seed in &a.seeds {
                    grid.push(ConstructionParams {
                        n,
                        theta: a.pipeline.theta,
                        d,
                        eps,
                        seed,
                        p_override: None,
                    });
                }
            }
        }
    }
    for params in &grid {
        params.validate()?;
    }
    let b = budget(&cli.common);
    let options = pipeline_options(&a.pipeline);
    let rows = par_map(cli.common.parallel, grid, |params| {
        let report = egt_ratio_pipeline(params, a.pipeline.c, b, options)?;
        Ok(to_record(&report, cli.common.timings))
    })?;
    let table = csv_text(&rows)?;
    emit(cli.common.out.as_deref(), &table)?;
    let sidecar = envelope(
        cli,
        &json!({"rows": rows.len(), "objective_d": optimal_d(objective)}),
        cli.common.timings,
    );
    if let Some(out) = &cli.common.out {
        let mut path = PathBuf::from(out).into_os_string();
        path.push(".json");
        std::fs::write(&path, json_text(&sidecar))?;
    }
    let all = Value::Array(rows);
    Ok(exit_for(cli, &all, false))
}
