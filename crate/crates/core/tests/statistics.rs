//! Seeded statistical expectations at desk scale. Thresholds are the ones
//! stated as expectations; measured values are printed.

use tritau_core::constructions::{optimal_d, sample_trifree, ConstructionParams, Objective, Truth};
use tritau_core::graph::gnp;
use tritau_core::solvers::Budget;
use tritau_core::verify::{density_falsifier, phi_bound_check, tritau_exhaustive, Verdict};

fn golden() -> f64 {
    optimal_d(Objective::MinRatio).d
}

#[test]
fn edge_bullets_at_64() {
    let hits = (0..5)
        .filter(|&seed| {
            let params = ConstructionParams::new(64, golden(), 0.5, seed);
            let (_, r) = sample_trifree(&params, Budget::nodes(100_000)).unwrap();
            r.bullet1 == Truth::True && r.bullet2 == Truth::True
        })
        .count();
    println!("edge bullets hold on {hits}/5 seeds");
    assert!(hits >= 4);
}

#[test]
fn density_on_random_256() {
    let p = 256f64.powf(-0.75);
    let mut verdicts = Vec::new();
    for seed in 0..20 {
        let g = gnp(256, p, seed).unwrap();
        let r = density_falsifier(&g, p, 0.5, 5_000, seed).unwrap();
        if let Some(w) = &r.counterexample {
            // the witness re-checks from scratch
            let set: Vec<usize> = serde_json::from_value(w["set"].clone()).unwrap();
            let mut mask = vec![false; 256];
            set.iter().for_each(|&v| mask[v] = true);
            assert!(set.len() >= 128);
            assert!((g.induced_edge_count(&mask) as f64) < w["threshold"].as_f64().unwrap());
        }
        verdicts.push(r.verdict);
    }
    let passes = verdicts.iter().filter(|v| **v == Verdict::Pass).count();
    println!("density: {passes}/20 seeds without a violation found");
}

#[test]
fn phi_bound_on_cleaned_128() {
    let d = golden();
    let mut non_fail = 0;
    for seed in 0..20 {
        let params = ConstructionParams::new(128, d, 0.5, seed);
        let (g, _) = sample_trifree(&params, Budget::nodes(100_000)).unwrap();
        let r = phi_bound_check(&g, params.p(), d, 0.5, Budget::nodes(100_000)).unwrap();
        non_fail += usize::from(r.verdict != Verdict::Fail);
    }
    println!("phi bound: {non_fail}/20 seeds not failing");
    assert!(non_fail >= 15);
}

#[test]
fn tritau_exhaustive_with_samples() {
    let sample = tritau_core::verify::TritauSample {
        count: 60,
        seed: 9,
        min_n: 6,
        max_n: 8,
    };
    let r = tritau_exhaustive(5, &[1, 2, 3], Some(sample), Budget::UNLIMITED).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    assert_eq!(r.measured["exhaustive_graphs"], 439);
}
