//! Property-based checks: serialization round trips, algebraic invariants of
//! the GF(2) solver, and the universal coloring bounds, over generated and
//! seeded random graphs.

use std::collections::BTreeSet;

use oddsum::codec::{from_graph6, from_json, to_graph6, to_json};
use oddsum::coloring::chromatic_number;
use oddsum::graph::{random_graph, seeded_rng, Graph};
use oddsum::odd_domination::{is_odd_dominating, solve_odd_domination};
use oddsum::odd_sum::{normalize_coloring, odd_sum_chromatic, validate_odd_sum_coloring};
use oddsum::rand::Rng;
use oddsum::{BigUint, DEFAULT_SEED};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bound = n.max(1);
        prop::collection::vec((0..bound, 0..bound), 0..=3 * n.max(1)).prop_map(move |raw| {
            let edges: BTreeSet<(usize, usize)> = raw
                .into_iter()
                .filter(|&(u, v)| u != v && u < n && v < n)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            let edges: Vec<(usize, usize)> = edges.into_iter().collect();
            Graph::build(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip_is_the_identity(g in arb_graph(12)) {
        let decoded = from_graph6(&to_graph6(&g)).unwrap();
        prop_assert_eq!(decoded.n(), g.n());
        prop_assert_eq!(decoded.edges(), g.edges());
    }

    #[test]
    fn json_round_trip_preserves_structure_and_labels(g in arb_graph(12)) {
        let mut g = g;
        let labels: Vec<String> = (0..g.n()).map(|v| format!("vertex {v}")).collect();
        g.set_labels(labels.clone()).unwrap();
        let decoded = from_json(&to_json(&g)).unwrap();
        prop_assert_eq!(decoded.n(), g.n());
        prop_assert_eq!(decoded.edges(), g.edges());
        prop_assert_eq!(decoded.labels().unwrap(), labels.as_slice());
    }

    #[test]
    fn solved_system_counts_and_certifies(g in arb_graph(12)) {
        let system = solve_odd_domination(&g);
        prop_assert!(is_odd_dominating(&g, system.particular()));
        prop_assert_eq!(system.count(), BigUint::from(1u32) << system.nullity());
        // Shifting the particular solution by any basis vector stays a solution.
        for basis in system.basis() {
            let mut shifted = system.particular().clone();
            shifted.xor_with(basis);
            prop_assert!(is_odd_dominating(&g, &shifted));
        }
    }

    #[test]
    fn enumeration_is_exhaustive_and_distinct(g in arb_graph(9)) {
        let system = solve_odd_domination(&g);
        let solutions: Vec<_> = system.solutions(1 << 12).unwrap().collect();
        prop_assert_eq!(BigUint::from(solutions.len()), system.count());
        let distinct: BTreeSet<Vec<usize>> =
            solutions.iter().map(|s| s.to_indices()).collect();
        prop_assert_eq!(distinct.len(), solutions.len());
        for d in &solutions {
            prop_assert!(is_odd_dominating(&g, d));
        }
    }

    #[test]
    fn certificates_validate_and_respect_the_doubling_bound(g in arb_graph(7)) {
        let cert = odd_sum_chromatic(&g).unwrap();
        let check = validate_odd_sum_coloring(&g, cert.coloring());
        prop_assert!(check.is_valid(), "certificate failed validation: {check}");
        let distinct: BTreeSet<usize> = cert.coloring().iter().copied().collect();
        prop_assert_eq!(distinct.len(), cert.chios());
        let chi = chromatic_number(&g).unwrap().k();
        prop_assert!(cert.chios() <= 2 * chi);
        if g.n() > 0 && g.is_bipartite().is_some() {
            prop_assert!(cert.chios() <= 4);
        }
    }

    #[test]
    fn normalization_is_idempotent(g in arb_graph(7)) {
        let cert = odd_sum_chromatic(&g).unwrap();
        let once = normalize_coloring(&g, cert.coloring()).unwrap();
        let twice = normalize_coloring(&g, &once).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert!(validate_odd_sum_coloring(&g, &once).is_valid());
    }
}

/// The elimination must stay total and internally consistent well past the
/// sizes the exact chromatic searches use.
#[test]
fn solver_is_total_on_ten_thousand_random_graphs() {
    let mut rng = seeded_rng(DEFAULT_SEED);
    for round in 0..10_000 {
        let n = rng.random_range(1..=32);
        let p = rng.random_range(0.05..0.95);
        let g = random_graph(n, p, &mut rng);
        let system = solve_odd_domination(&g);
        assert!(
            is_odd_dominating(&g, system.particular()),
            "round {round}: particular solution is not odd-dominating"
        );
        assert_eq!(
            system.count(),
            BigUint::from(1u32) << system.nullity(),
            "round {round}: count must be 2^nullity"
        );
    }
}
