//! Immutable compressed adjacency for one generated network.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::network::NetworkSpec;

pub type NodeId = u32;

/// Simple undirected graph in compressed sparse row form.
///
/// Each edge is stored in both endpoint lists; every list is sorted
/// ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    spec: NetworkSpec,
    offsets: Vec<usize>,
    neighbors: Vec<NodeId>,
}

impl Graph {
    /// Builds the adjacency from a repeatable edge source. `edges` is called
    /// twice: once to size the lists, once to fill them.
    pub(crate) fn from_edge_source<I, F>(spec: NetworkSpec, node_count: usize, edges: F) -> Result<Self>
    where
        F: Fn() -> I,
        I: Iterator<Item = Result<(u64, u64)>>,
    {
        let mut degree = vec![0usize; node_count];
        for (line, edge) in edges().enumerate() {
            let (u, v) = edge?;
            let check = |x: u64| -> Result<usize> {
                if (x as usize) < node_count && x <= u64::from(NodeId::MAX) {
                    Ok(x as usize)
                } else {
                    Err(Error::EdgeList {
                        line: line + 1,
                        reason: format!("node id {x} out of range for {node_count} nodes"),
                    })
                }
            };
            let (u, v) = (check(u)?, check(v)?);
            if u == v {
                return Err(Error::EdgeList {
                    line: line + 1,
                    reason: format!("self-loop on {u}"),
                });
            }
            degree[u] += 1;
            degree[v] += 1;
        }

        let mut offsets = Vec::with_capacity(node_count + 1);
        offsets.push(0usize);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..node_count].to_vec();
        let mut neighbors = vec![0 as NodeId; *offsets.last().unwrap()];
        for edge in edges() {
            let (u, v) = edge?;
            let (u, v) = (u as usize, v as usize);
            neighbors[cursor[u]] = v as NodeId;
            cursor[u] += 1;
            neighbors[cursor[v]] = u as NodeId;
            cursor[v] += 1;
        }
        for u in 0..node_count {
            let list = &mut neighbors[offsets[u]..offsets[u + 1]];
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::EdgeList {
                    line: 0,
                    reason: format!("parallel edge {u} -- {}", w[0]),
                });
            }
        }
        Ok(Self {
            spec,
            offsets,
            neighbors,
        })
    }

    pub fn spec(&self) -> &NetworkSpec {
        &self.spec
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> u64 {
        (self.neighbors.len() / 2) as u64
    }

    #[inline]
    pub fn neighbors(&self, u: NodeId) -> &[NodeId] {
        let u = u as usize;
        &self.neighbors[self.offsets[u]..self.offsets[u + 1]]
    }

    #[inline]
    pub fn degree(&self, u: NodeId) -> usize {
        let u = u as usize;
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.node_count() as NodeId).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Edges with both endpoints inside `range`, in [`Graph::edges`] order.
    pub fn induced_edges(&self, range: Range<NodeId>) -> Vec<(NodeId, NodeId)> {
        range
            .clone()
            .flat_map(|u| {
                let end = range.end;
                self.neighbors(u)
                    .iter()
                    .copied()
                    .filter(move |&v| v > u && v < end)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Degree sequence in id order.
    pub fn degrees(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_pairs(n: usize, pairs: &[(u64, u64)]) -> Result<Graph> {
        let spec = NetworkSpec::new(3, 0).unwrap();
        Graph::from_edge_source(spec, n, || pairs.iter().copied().map(Ok))
    }

    #[test]
    fn builds_sorted_symmetric_lists() {
        let g = from_pairs(4, &[(2, 3), (0, 2), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.neighbors(2), &[0, 1, 3]);
        assert_eq!(g.degrees(), vec![2, 2, 3, 1]);
        assert!(g.has_edge(3, 2));
        assert!(!g.has_edge(0, 3));
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert_eq!(g.induced_edges(1..3), vec![(1, 2)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(from_pairs(3, &[(0, 0)]).is_err());
        assert!(from_pairs(3, &[(0, 3)]).is_err());
        assert!(from_pairs(3, &[(0, 1), (1, 0)]).is_err());
    }
}
