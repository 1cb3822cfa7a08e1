use proptest::prelude::*;
use tritau_core::graph::{Edge, Graph};
use tritau_core::solvers::{
    alpha1_exact, alpha_exact, certify::check_outcome, oracle_bruteforce, phi_max, tau_exact,
    Budget, Problem, SolveOutcome,
};

const LIMIT: u64 = 1 << 30;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = bits
                .iter()
                .enumerate()
                .filter(|(_, b)| **b)
                .map(|(i, _)| Edge::from_canonical_index(i, n).unwrap())
                .map(|e| (e.u, e.v));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn solve(problem: Problem, g: &Graph, budget: Budget) -> SolveOutcome {
    match problem {
        Problem::Tau => tau_exact(g, budget),
        Problem::Alpha1 => alpha1_exact(g, budget),
        Problem::Alpha => alpha_exact(g, budget),
        Problem::Phi { k } => phi_max(g, k, budget).unwrap(),
    }
}

const PROBLEMS: [Problem; 6] = [
    Problem::Tau,
    Problem::Alpha1,
    Problem::Alpha,
    Problem::Phi { k: 1.0 },
    Problem::Phi { k: 2.0 },
    Problem::Phi { k: 1.5 },
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_values_match_oracle(g in small_graph(7)) {
        for problem in PROBLEMS {
            let bnb = solve(problem, &g, Budget::UNLIMITED);
            let oracle = oracle_bruteforce(problem, &g, LIMIT).unwrap();
            prop_assert!(bnb.is_optimal());
            prop_assert!((bnb.lower - oracle.lower).abs() < 1e-9, "{problem:?}: {bnb:?} vs {oracle:?}");
            prop_assert!(check_outcome(&g, &bnb).is_ok());
            prop_assert!(check_outcome(&g, &oracle).is_ok());
        }
    }

    #[test]
    fn truncated_intervals_contain_the_optimum(g in small_graph(8), nodes in 1u64..20) {
        for problem in PROBLEMS {
            let cut = solve(problem, &g, Budget::nodes(nodes));
            let exact = solve(problem, &g, Budget::UNLIMITED).lower;
            prop_assert!(cut.lower <= exact + 1e-9 && exact <= cut.upper + 1e-9,
                "{problem:?}: [{}, {}] misses {exact}", cut.lower, cut.upper);
            prop_assert!(check_outcome(&g, &cut).is_ok());
        }
    }

    #[test]
    fn phi_one_is_alpha(g in small_graph(12)) {
        let phi = phi_max(&g, 1.0, Budget::UNLIMITED).unwrap();
        prop_assert_eq!(phi.value_int(), alpha_exact(&g, Budget::UNLIMITED).value_int());
    }
}

#[test]
fn oracle_refuses_large_instances() {
    let g = Graph::from_edges(12, (0..11).map(|i| (i, i + 1))).unwrap();
    assert!(oracle_bruteforce(Problem::Alpha, &g, 1 << 11).is_err());
    assert!(oracle_bruteforce(Problem::Alpha, &g, 1 << 12).is_ok());
}
