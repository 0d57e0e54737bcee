//! Randomized checks of the spectral identities, the clustering and the Jacobi solver.

use andrasfai::export::parse_graph_json;
use andrasfai::oracle::default_threshold;
use andrasfai::spectrum_io::{from_json, round_sig, to_json};
use andrasfai::{
    andrasfai, build_circulant, cluster_distinct, export_graph, jacobi_eigenvalues, pair_multiplicities,
    parse_edge_list, predict, spectrum_closed_form, spectrum_general_circulant, CirculantGraph, DenseMatrix,
    GraphFormat, TOL_CLUSTER, TOL_SYM,
};
use proptest::prelude::*;

fn symmetric_matrix(max_n: usize) -> impl Strategy<Value = DenseMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(-10.0f64..10.0, n * (n + 1) / 2).prop_map(move |upper| {
            let mut data = vec![0.0; n * n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i..n {
                    let x = it.next().unwrap();
                    data[i * n + j] = x;
                    data[j * n + i] = x;
                }
            }
            DenseMatrix::from_row_major(n, data).unwrap()
        })
    })
}

/// A negation-closed subset of Z_n without 0, from a bitmask over 1..=n/2.
fn circulant(max_n: usize) -> impl Strategy<Value = CirculantGraph> {
    (2..=max_n, any::<u64>()).prop_map(|(n, mask)| {
        let set: Vec<usize> = (1..=n / 2).filter(|d| mask >> (d % 64) & 1 == 1).flat_map(|d| [d, n - d]).collect();
        build_circulant(n, &set).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_form_identities(k in 2usize..2_000) {
        let s = spectrum_closed_form(k).unwrap();
        let n = s.n as f64;
        prop_assert_eq!(s.values[0], k as f64);
        prop_assert!(s.palindrome_defect() < TOL_SYM);
        prop_assert!(s.trace().abs() < n * TOL_SYM);
        prop_assert!((s.sum_of_squares() - n * k as f64).abs() < n * 1e-6);
        prop_assert!(s.values.iter().all(|x| x.abs() <= k as f64 + TOL_SYM));
    }

    #[test]
    fn structural_count_matches_prediction(k in 2usize..1_500) {
        let table = pair_multiplicities(&spectrum_closed_form(k).unwrap());
        prop_assert_eq!(table.distinct_count(), predict(k).unwrap().distinct_count);
        prop_assert_eq!(table.total_multiplicity(), 3 * k - 1);
    }

    #[test]
    fn general_circulant_spectrum_has_trace_and_degree(g in circulant(120)) {
        let s = spectrum_general_circulant(&g.first_row()).unwrap();
        let n = g.n() as f64;
        prop_assert!(s.trace().abs() < n * 1e-9);
        prop_assert!((s.values[0] - g.degree() as f64).abs() < 1e-9);
        prop_assert!((s.sum_of_squares() - n * g.degree() as f64).abs() < n * 1e-6);
        prop_assert!(s.palindrome_defect() < TOL_SYM);
    }

    #[test]
    fn graph_round_trips(g in circulant(200)) {
        let edges = parse_edge_list(&export_graph(&g, GraphFormat::EdgeList)).unwrap();
        prop_assert_eq!(edges.len(), g.edge_count());
        let back = CirculantGraph::from_edges(g.n(), &edges).unwrap();
        prop_assert_eq!(back.connection(), g.connection());
        let json = parse_graph_json(&export_graph(&g, GraphFormat::Json)).unwrap();
        prop_assert_eq!(json.connection(), g.connection());
    }

    #[test]
    fn andrasfai_graph_json_round_trip(k in 1usize..500) {
        let g = andrasfai(k).unwrap();
        let back = parse_graph_json(&export_graph(&g, GraphFormat::Json)).unwrap();
        prop_assert_eq!(back.connection(), g.connection());
    }

    #[test]
    fn removing_an_edge_breaks_circulance(g in circulant(60), pick in any::<prop::sample::Index>()) {
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        prop_assume!(!edges.is_empty() && edges.len() < g.n() * (g.n() - 1) / 2);
        edges.remove(pick.index(edges.len()));
        prop_assert!(CirculantGraph::from_edges(g.n(), &edges).is_err());
    }

    #[test]
    fn spectrum_json_is_stable(k in 1usize..400) {
        let first = to_json(&spectrum_closed_form(k).unwrap()).unwrap();
        let second = to_json(&from_json(&first).unwrap()).unwrap();
        prop_assert_eq!(first, second);
    }

    #[test]
    fn rounding_is_idempotent(x in prop::num::f64::NORMAL | prop::num::f64::SUBNORMAL | prop::num::f64::ZERO) {
        let once = round_sig(x, 12);
        prop_assert_eq!(once.to_bits(), round_sig(once, 12).to_bits());
        prop_assert!((once - x).abs() <= x.abs() * 1e-11);
    }

    #[test]
    fn clusters_survive_small_jitter(k in 2usize..60, seed in any::<u64>()) {
        let sorted = spectrum_closed_form(k).unwrap().sorted_values();
        let expected: Vec<usize> = cluster_distinct(&sorted, TOL_CLUSTER).iter().map(|c| c.1).collect();
        // Deterministic jitter below TOL_CLUSTER / 10, from a splitmix-style sequence.
        let mut state = seed;
        let jittered: Vec<f64> = sorted
            .iter()
            .map(|x| {
                state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
                let u = (state >> 11) as f64 / (1u64 << 53) as f64;
                x + (u - 0.5) * TOL_CLUSTER / 10.0
            })
            .collect();
        let mut resorted = jittered;
        resorted.sort_by(f64::total_cmp);
        let observed: Vec<usize> = cluster_distinct(&resorted, TOL_CLUSTER).iter().map(|c| c.1).collect();
        prop_assert_eq!(observed, expected);
    }

    #[test]
    fn jacobi_preserves_trace_and_norm(m in symmetric_matrix(12)) {
        let n = m.n();
        let r = jacobi_eigenvalues(&m, default_threshold(n)).unwrap();
        prop_assert_eq!(r.sorted_values.len(), n);
        prop_assert!(r.sorted_values.windows(2).all(|w| w[0] <= w[1]));
        let scale = m.frobenius_norm_sq().sqrt().max(1.0);
        let sum: f64 = r.sorted_values.iter().sum();
        prop_assert!((sum - m.trace()).abs() < 1e-10 * scale * n as f64);
        let sq: f64 = r.sorted_values.iter().map(|x| x * x).sum();
        prop_assert!((sq - m.frobenius_norm_sq()).abs() < 1e-9 * scale * scale);
    }

    #[test]
    fn jacobi_is_deterministic(m in symmetric_matrix(10)) {
        let a = jacobi_eigenvalues(&m, default_threshold(m.n())).unwrap();
        let b = jacobi_eigenvalues(&m, default_threshold(m.n())).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn jacobi_on_circulants_matches_general_formula(g in circulant(40)) {
        let dense = andrasfai::adjacency_matrix(&g).to_dense();
        let oracle = jacobi_eigenvalues(&dense, default_threshold(g.n())).unwrap();
        let s = spectrum_general_circulant(&g.first_row()).unwrap();
        let dev = s.sorted_values().iter().zip(&oracle.sorted_values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        prop_assert!(dev < 1e-8, "deviation {dev:e}");
    }
}
