mod common;

use common::embeddings::random_poset;
use common::*;
use grouptrix::graph::{class_test, ClassKind};
use grouptrix::hierarchy::BuildOptions;
use grouptrix::twins::{cokernel, confluence_test, is_twin_free, ReductionOrder};
use grouptrix::Graph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn small_corpus_properties() {
    let opts = BuildOptions::default();
    let bad: Vec<String> = corpus(120).iter().flat_map(|g| group_properties(g, &opts)).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn product_identities() {
    let opts = BuildOptions::default();
    let bad: Vec<String> = PRODUCT_PAIRS[..4]
        .iter()
        .flat_map(|(a, b)| product_properties(a, b, &opts))
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

fn graph_strategy(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cokernel_size_one_iff_cograph(g in graph_strategy(10)) {
        let trace = cokernel(&g, ReductionOrder::Deterministic);
        prop_assert!(trace.verify());
        prop_assert!(is_twin_free(&trace.result));
        prop_assert_eq!(trace.size() == 1, class_test(&g, ClassKind::Cograph).member);
    }

    #[test]
    fn twin_reduction_is_confluent(g in graph_strategy(12), seed in any::<u64>()) {
        prop_assert!(confluence_test(&g, 5, seed).unwrap());
    }

    #[test]
    fn cokernel_of_complement(g in graph_strategy(10)) {
        let a = cokernel(&g, ReductionOrder::Deterministic).size();
        let b = cokernel(&g.complement(), ReductionOrder::Deterministic).size();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn posets_are_comparability_graphs(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poset(n, 0.5, &mut rng);
        prop_assert!(has_transitive_orientation(&p.comparability_graph()));
    }
}
