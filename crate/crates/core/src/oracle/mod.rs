//! Brute-force measurements on materialized graphs, independent of the
//! closed forms they are compared against.

mod clustering;
mod distances;

pub use clustering::{clustering_empirical, triangle_count, ClusteringReport, NodeClustering};
pub use distances::{
    bfs_distances, distance_report, hub_layer_sums, multi_source_bfs, total_distance_empirical,
    DistanceReport,
};

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Degree -> number of nodes with that degree.
pub fn degree_histogram(graph: &Graph) -> BTreeMap<u64, u64> {
    let mut hist = BTreeMap::new();
    for d in graph.degrees() {
        *hist.entry(d as u64).or_insert(0) += 1;
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::address::census_histogram;
    use crate::generator::build_graph;
    use crate::network::{NetworkSpec, DEFAULT_MAX_NODES};
    use num_traits::ToPrimitive;

    #[test]
    fn histograms() {
        let g = build_graph(&NetworkSpec::new(3, 1).unwrap(), DEFAULT_MAX_NODES).unwrap();
        assert_eq!(degree_histogram(&g).into_iter().collect::<Vec<_>>(), vec![(2, 4), (3, 4), (6, 1)]);
        let g = build_graph(&NetworkSpec::new(4, 0).unwrap(), DEFAULT_MAX_NODES).unwrap();
        assert_eq!(degree_histogram(&g).into_iter().collect::<Vec<_>>(), vec![(2, 3)]);

        let s = NetworkSpec::new(3, 2).unwrap();
        let g = build_graph(&s, DEFAULT_MAX_NODES).unwrap();
        let census: BTreeMap<u64, u64> = census_histogram(&s)
            .into_iter()
            .map(|(k, v)| (k.to_u64().unwrap(), v.to_u64().unwrap()))
            .collect();
        assert_eq!(degree_histogram(&g), census);
    }
}
