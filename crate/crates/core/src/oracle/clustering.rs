use std::collections::BTreeMap;

use crate::exact::ExactScalar;
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeClustering {
    pub node: NodeId,
    /// Edges among the node's neighbours.
    pub neighbor_edges: u64,
    pub coefficient: ExactScalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusteringReport {
    pub per_node: Vec<NodeClustering>,
    pub mean: ExactScalar,
}

fn sorted_intersection(a: &[NodeId], b: &[NodeId]) -> u64 {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Local clustering `n_u / (k(k-1)/2)` for every node, with `n_u` the true
/// number of edges among the neighbours, and its exact mean.
pub fn clustering_empirical(graph: &Graph) -> ClusteringReport {
    let mut per_node = Vec::with_capacity(graph.node_count());
    // (n_u, k) -> multiplicity, so the exact mean needs few big additions
    let mut groups: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for u in 0..graph.node_count() as NodeId {
        let nbrs = graph.neighbors(u);
        let twice: u64 = nbrs
            .iter()
            .map(|&v| sorted_intersection(nbrs, graph.neighbors(v)))
            .sum();
        let n_u = twice / 2;
        let k = nbrs.len() as u64;
        let coefficient = if k < 2 {
            ExactScalar::zero()
        } else {
            ExactScalar::new(2 * n_u, k * (k - 1))
        };
        *groups.entry((n_u, k)).or_insert(0) += 1;
        per_node.push(NodeClustering {
            node: u,
            neighbor_edges: n_u,
            coefficient,
        });
    }
    let total: ExactScalar = groups
        .into_iter()
        .filter(|&((_, k), _)| k >= 2)
        .map(|((n_u, k), count)| ExactScalar::new(2 * n_u * count, k * (k - 1)))
        .sum();
    let mean = total / ExactScalar::from(graph.node_count() as u64);
    ClusteringReport { per_node, mean }
}

/// Number of triangles, each counted once.
pub fn triangle_count(graph: &Graph) -> u64 {
    let mut count = 0;
    for u in 0..graph.node_count() as NodeId {
        let nu = graph.neighbors(u);
        for &v in nu.iter().filter(|&&v| v > u) {
            count += graph
                .neighbors(v)
                .iter()
                .filter(|&&w| w > v && nu.binary_search(&w).is_ok())
                .count() as u64;
        }
    }
    count
}
