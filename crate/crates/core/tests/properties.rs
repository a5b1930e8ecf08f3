use proptest::prelude::*;

use monok_core::colouring::{m_of, normalize};
use monok_core::graph::is_k_connected;
use monok_core::solver::{mck_exact, BoundsReport};
use monok_core::verify::{
    check_superpath_bound, count_disjoint_mono_paths_with, is_monochromatic_k_connected, superpath_profile,
    CountOptions,
};
use monok_core::{EdgeColouring, Graph, SearchBudget};

/// A graph on `n` vertices from an edge-inclusion mask, with arbitrary labels.
fn coloured_graph(max_n: usize, max_colours: u64) -> impl Strategy<Value = (Graph, EdgeColouring)> {
    (3..=max_n)
        .prop_flat_map(move |n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), prop::collection::vec(any::<bool>(), pairs), prop::collection::vec(1..=max_colours, pairs))
        })
        .prop_map(|(n, keep, labels)| {
            let all = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let chosen: Vec<_> = all.zip(&keep).filter(|(_, &k)| k).map(|(p, _)| p).collect();
            let g = Graph::new(n, chosen).unwrap();
            let labels: Vec<u64> = labels[..g.edge_count()].to_vec();
            let phi = EdgeColouring::compacted(&g, &labels).unwrap();
            (g, phi)
        })
}

fn verdict(g: &Graph, phi: &EdgeColouring, k: usize) -> bool {
    is_monochromatic_k_connected(g, phi, k).unwrap().ok
}

fn solve(g: &Graph, k: usize, shortcut: bool) -> BoundsReport {
    let budget = SearchBudget { shortcut_allowed: shortcut, ..SearchBudget::default() };
    mck_exact(g, k, &budget).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalize_is_idempotent_and_keeps_verdict((g, phi) in coloured_graph(6, 5)) {
        let once = normalize(&g, &phi);
        prop_assert!(once.colour_count() >= phi.colour_count());
        prop_assert_eq!(normalize(&g, &once), once.clone());
        for k in 1..g.n().min(4) {
            prop_assert_eq!(verdict(&g, &phi, k), verdict(&g, &once, k), "k={}", k);
        }
    }

    #[test]
    fn one_colour_matches_vertex_connectivity((g, _) in coloured_graph(6, 1)) {
        let phi = EdgeColouring::single(&g);
        for k in 1..g.n() {
            prop_assert_eq!(verdict(&g, &phi, k), is_k_connected(&g, k), "k={}", k);
        }
    }

    #[test]
    fn superpath_counts_respect_degree_caps((g, phi) in coloured_graph(7, 4)) {
        let profile = superpath_profile(&g, &phi).unwrap();
        for (u, v, f) in profile.iter() {
            prop_assert!(f <= m_of(&g, u, v).unwrap());
        }
        prop_assert!(check_superpath_bound(&g, &phi).unwrap().holds);
    }

    #[test]
    fn flow_shortcuts_do_not_change_counts((g, phi) in coloured_graph(6, 3), super_only in any::<bool>()) {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let mut opts = CountOptions::new(g.n(), super_only);
                let fast = count_disjoint_mono_paths_with(&g, &phi, u, v, &opts).unwrap();
                opts.flow_shortcuts = false;
                let slow = count_disjoint_mono_paths_with(&g, &phi, u, v, &opts).unwrap();
                prop_assert_eq!(fast.count, slow.count, "pair {}-{}", u, v);
                prop_assert_eq!(slow.witness.len(), slow.count);
                prop_assert!(slow.witness.validate(&g, &phi).is_ok());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exact_value_is_bracketed_and_search_agrees((g, _) in coloured_graph(5, 1), k in 1usize..=3) {
        prop_assume!(g.n() > k && is_k_connected(&g, k));
        let full = solve(&g, k, false);
        let shortcut = solve(&g, k, true);
        let value = full.exact.unwrap().value;
        prop_assert_eq!(shortcut.exact.unwrap().value, value);
        prop_assert!(full.lower.value <= value && value <= full.upper.value);
        let witness = full.witness.unwrap();
        prop_assert_eq!(witness.colour_count(), value);
        prop_assert!(verdict(&g, &witness, k));
    }

    #[test]
    fn exact_value_is_invariant_under_relabelling(
        (g, _) in coloured_graph(5, 1),
        k in 1usize..=2,
        perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        prop_assume!(g.n() > k && is_k_connected(&g, k));
        let perm: Vec<usize> = perm.into_iter().filter(|&x| x < g.n()).collect();
        let h = g.relabel(&perm);
        prop_assert_eq!(solve(&g, k, false).exact, solve(&h, k, false).exact);
    }

    #[test]
    fn fresh_colour_on_a_new_edge_adds_one((g, _) in coloured_graph(5, 1), k in 1usize..=2, pick in any::<prop::sample::Index>()) {
        prop_assume!(g.n() > k && is_k_connected(&g, k));
        let missing: Vec<(usize, usize)> = (0..g.n())
            .flat_map(|a| (a + 1..g.n()).map(move |b| (a, b)))
            .filter(|&(a, b)| !g.has_edge(a, b))
            .collect();
        prop_assume!(!missing.is_empty());
        let (a, b) = *pick.get(&missing);
        let bigger = g.with_edge(a, b).unwrap();

        let report = solve(&g, k, false);
        let witness = report.witness.unwrap();
        let fresh = witness.colour_count() as u32 + 1;
        let extended = witness.with_inserted(bigger.edge_id(a, b).unwrap(), fresh);
        prop_assert!(verdict(&bigger, &extended, k));
        prop_assert!(solve(&bigger, k, false).exact.unwrap().value > report.exact.unwrap().value);
    }
}
