//! Randomized invariants of the descriptor engine: identities that must hold
//! for every connected graph, checked on seeded random samples well past the
//! sizes the exhaustive scans reach.

use netdesc::bounds::{
    descriptor_bounds, min_profile_transmission, min_profile_transmission_exhaustive,
};
use netdesc::descriptors::{
    aggregates, betweenness, betweenness_oracle, descriptor_table, Lambda,
};
use netdesc::graph::{parse_edge_list, write_edge_list, Graph};
use netdesc::search::{random_connected, GraphCode};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lam(v: f64) -> Lambda {
    Lambda::new(v).unwrap()
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// The transmission and centrality totals agree on every graph: each
    /// pair's weight is counted once per side of one of its edges.
    #[test]
    fn transmission_centrality_totals_balance(
        n in 2usize..=12,
        p in 0.3f64..1.0,
        seed: u64,
        l in 0.02f64..0.98,
    ) {
        let g = random_connected(n, p, seed).unwrap();
        let table = descriptor_table(&g, lam(l)).unwrap();
        let sum_t: f64 = table.transmission.iter().sum();
        let sum_c: f64 = table.centrality.iter().sum();
        prop_assert!((sum_t - sum_c).abs() <= 1e-12 * sum_t.max(1.0));
    }

    /// Every pair containing `u` crosses at least one edge at `u`, so the
    /// centrality dominates the damped reach `Σ_{v≠u} λ^{d(u,v)}`.
    #[test]
    fn centrality_dominates_damped_reach(
        n in 2usize..=12,
        p in 0.3f64..1.0,
        seed: u64,
        l in 0.02f64..0.98,
    ) {
        let g = random_connected(n, p, seed).unwrap();
        let table = descriptor_table(&g, lam(l)).unwrap();
        for u in 0..n {
            let reach: f64 = g
                .distances(u)
                .iter()
                .filter(|&&d| d > 0)
                .map(|&d| l.powi(d as i32))
                .sum();
            prop_assert!(table.centrality[u] >= reach - 1e-12 * reach.max(1.0));
        }
    }

    /// An edge's own endpoint pair always routes entirely through it, so
    /// `b(e) ≥ λ`.
    #[test]
    fn edge_betweenness_has_endpoint_floor(
        n in 2usize..=12,
        p in 0.3f64..1.0,
        seed: u64,
        l in 0.02f64..0.98,
    ) {
        let g = random_connected(n, p, seed).unwrap();
        let (edge_b, _) = betweenness(&g, lam(l)).unwrap();
        for &b in &edge_b {
            prop_assert!(b >= l - 1e-12);
        }
    }

    /// Aggregates of random graphs stay inside the closed-form envelope.
    #[test]
    fn aggregates_respect_closed_form_bounds(
        n in 2usize..=12,
        p in 0.3f64..1.0,
        seed: u64,
        l in 0.02f64..0.98,
    ) {
        let g = random_connected(n, p, seed).unwrap();
        let lambda = lam(l);
        let a = aggregates(&descriptor_table(&g, lambda).unwrap());
        let b = descriptor_bounds(n, lambda);
        let tol = |bound: f64| 1e-9 * bound.abs().max(1.0);
        prop_assert!(a.min_transmission.value >= b.min_transmission_lower - tol(b.min_transmission_lower));
        prop_assert!(a.max_transmission.value <= b.max_transmission_upper + tol(b.max_transmission_upper));
        prop_assert!(a.min_centrality.value >= b.min_centrality_lower - tol(b.min_centrality_lower));
        prop_assert!(a.max_centrality.value <= b.max_centrality_upper + tol(b.max_centrality_upper));
        prop_assert!(a.min_networkness.value >= b.min_networkness_lower - tol(b.min_networkness_lower));
        prop_assert!(a.min_networkness.value <= 1.0 + 1e-9);
        prop_assert!(a.max_networkness.value >= 1.0 - 1e-9);
        prop_assert!(a.max_networkness.value <= b.max_networkness_upper + tol(b.max_networkness_upper));
        prop_assert!(a.min_surplus.value >= b.min_surplus_lower - tol(b.min_surplus_lower));
        prop_assert!(a.min_surplus.value <= 1e-9);
        prop_assert!(a.max_surplus.value >= -1e-9);
        prop_assert!(a.max_surplus.value <= b.max_surplus_upper + tol(b.max_surplus_upper));
        if let Some(up) = b.min_transmission_upper {
            prop_assert!(a.min_transmission.value <= up + tol(up));
        }
        if let Some(up) = b.min_centrality_upper {
            prop_assert!(a.min_centrality.value <= up + tol(up));
        }
    }

    /// Descriptors ride along with any relabeling of the vertices.
    #[test]
    fn relabeling_permutes_descriptors(
        n in 2usize..=10,
        p in 0.3f64..1.0,
        seed: u64,
        perm_seed: u64,
        l in 0.02f64..0.98,
    ) {
        let g = random_connected(n, p, seed).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(perm_seed));
        let relabeled_edges: Vec<(usize, usize)> =
            g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::build(n, &relabeled_edges).unwrap();
        let tg = descriptor_table(&g, lam(l)).unwrap();
        let th = descriptor_table(&h, lam(l)).unwrap();
        for (u, &pu) in perm.iter().enumerate() {
            prop_assert!(rel_close(th.transmission[pu], tg.transmission[u], 1e-12));
            prop_assert!(rel_close(th.centrality[pu], tg.centrality[u], 1e-12));
            prop_assert!(rel_close(th.networkness[pu], tg.networkness[u], 1e-11));
        }
    }

    /// Text round trip: writing and reparsing reproduces the graph exactly.
    #[test]
    fn edge_list_round_trip(
        n in 2usize..=12,
        p in 0.3f64..1.0,
        seed: u64,
    ) {
        let g = random_connected(n, p, seed).unwrap();
        let text = write_edge_list(&g, &[]);
        let parsed = parse_edge_list(&text, false).unwrap();
        prop_assert_eq!(parsed, g);
    }

    /// Code round trip: packing and unpacking reproduces the graph exactly.
    #[test]
    fn graph_code_round_trip(
        n in 2usize..=11,
        p in 0.3f64..1.0,
        seed: u64,
    ) {
        let g = random_connected(n, p, seed).unwrap();
        prop_assert_eq!(GraphCode::encode(&g).decode().unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The accumulation engine agrees with literal enumeration of every
    /// shortest path.
    #[test]
    fn fast_betweenness_matches_path_enumeration(
        n in 2usize..=7,
        p in 0.3f64..1.0,
        seed: u64,
        l in 0.02f64..0.98,
    ) {
        let g = random_connected(n, p, seed).unwrap();
        let lambda = lam(l);
        let (fast_b, fast_c) = betweenness(&g, lambda).unwrap();
        let (slow_b, slow_c) = betweenness_oracle(&g, lambda).unwrap();
        for (a, b) in fast_b.iter().zip(&slow_b) {
            prop_assert!(rel_close(*a, *b, 1e-12));
        }
        for (a, b) in fast_c.iter().zip(&slow_c) {
            prop_assert!(rel_close(*a, *b, 1e-12));
        }
    }

    /// The thin layered profile stays optimal across the whole λ < 1/2 range,
    /// not just at grid points.
    #[test]
    fn thin_profile_minimizes_at_random_lambda(
        n in 3usize..=12,
        l in 0.02f64..0.4999,
    ) {
        let lambda = lam(l);
        let (profile, value) = min_profile_transmission(n, lambda);
        let (ex_profile, ex_value) = min_profile_transmission_exhaustive(n, lambda);
        prop_assert!(rel_close(value, ex_value, 1e-12));
        prop_assert_eq!(profile, ex_profile);
    }
}
