//! Closed forms against brute-force measurements on generated graphs.

use std::collections::BTreeMap;

use hfnet_core::address::census_histogram;
use hfnet_core::formulas;
use hfnet_core::oracle::{clustering_empirical, degree_histogram, distance_report};
use hfnet_core::{build_graph, ExactScalar, NetworkSpec, DEFAULT_MAX_NODES};
use num_traits::ToPrimitive;

fn grid() -> Vec<(u32, u32)> {
    let mut points = Vec::new();
    for z in 3..=4 {
        for t in 0..=4 {
            points.push((z, t));
        }
    }
    points.push((3, 5));
    for z in 5..=6 {
        for t in 0..=3 {
            points.push((z, t));
        }
    }
    points
}

#[test]
fn distances_match() {
    for (z, t) in grid() {
        let s = NetworkSpec::new(z, t).unwrap();
        let g = build_graph(&s, DEFAULT_MAX_NODES).unwrap();
        let measured = distance_report(&g, 4).unwrap();
        let as_exact = |v: u128| ExactScalar::from(v);
        assert_eq!(as_exact(measured.total_pairwise), formulas::total_distance(&s).unwrap(), "D {s}");
        assert_eq!(as_exact(measured.to_hub_sum), formulas::hub_distance_sum(&s), "P {s}");
        assert_eq!(as_exact(measured.to_layer_min_sum), formulas::layer_distance_sum(&s), "Q {s}");
    }
}

#[test]
fn cross_block_from_measurements() {
    // Delta_1 = D_1 - z D_0
    for z in 3..=6u32 {
        let d0 = distance_report(&build_graph(&NetworkSpec::new(z, 0).unwrap(), DEFAULT_MAX_NODES).unwrap(), 1)
            .unwrap()
            .total_pairwise;
        let d1 = distance_report(&build_graph(&NetworkSpec::new(z, 1).unwrap(), DEFAULT_MAX_NODES).unwrap(), 1)
            .unwrap()
            .total_pairwise;
        let delta = d1 - u128::from(z) * d0;
        assert_eq!(
            ExactScalar::from(delta),
            formulas::cross_block_distance(&NetworkSpec::new(z, 0).unwrap())
        );
    }
}

#[test]
fn histograms_match_census() {
    for (z, t) in grid() {
        let s = NetworkSpec::new(z, t).unwrap();
        let g = build_graph(&s, DEFAULT_MAX_NODES).unwrap();
        let census: BTreeMap<u64, u64> = census_histogram(&s)
            .into_iter()
            .map(|(k, v)| (k.to_u64().unwrap(), v.to_u64().unwrap()))
            .collect();
        assert_eq!(degree_histogram(&g), census, "{s}");
    }
}

#[test]
fn empirical_clustering_dominates_formula() {
    for (z, t) in grid() {
        let s = NetworkSpec::new(z, t).unwrap();
        let g = build_graph(&s, DEFAULT_MAX_NODES).unwrap();
        let empirical = clustering_empirical(&g).mean;
        let paper = formulas::clustering_paper(&s);
        if t == 0 {
            assert_eq!(empirical, paper);
        } else {
            assert!(empirical > paper, "{s}: {empirical} vs {paper}");
        }
    }
}
