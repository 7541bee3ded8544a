use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generator::last_layer;
use crate::graph::{Graph, NodeId};

const UNSEEN: u32 = u32::MAX;

/// Measured distance totals of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceReport {
    /// Sum over unordered pairs.
    pub total_pairwise: u128,
    /// Sum of distances to node 0.
    pub to_hub_sum: u128,
    /// Sum of distances to the nearest last-layer bottom.
    pub to_layer_min_sum: u128,
    /// Largest eccentricity, i.e. the diameter.
    pub eccentricity_max: u32,
}

struct Scratch {
    dist: Vec<u32>,
    queue: Vec<NodeId>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            dist: vec![UNSEEN; n],
            queue: Vec::with_capacity(n),
        }
    }

    /// BFS from `sources`; returns (distance sum, eccentricity).
    fn run(&mut self, graph: &Graph, sources: &[NodeId]) -> Result<(u128, u32)> {
        self.dist.fill(UNSEEN);
        self.queue.clear();
        for &s in sources {
            if self.dist[s as usize] == UNSEEN {
                self.dist[s as usize] = 0;
                self.queue.push(s);
            }
        }
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let next = self.dist[u as usize] + 1;
            for &v in graph.neighbors(u) {
                let slot = &mut self.dist[v as usize];
                if *slot == UNSEEN {
                    *slot = next;
                    self.queue.push(v);
                }
            }
        }
        if self.queue.len() != graph.node_count() {
            let missing = self.dist.iter().position(|&d| d == UNSEEN).unwrap_or(0);
            return Err(Error::Disconnected {
                source_node: sources.first().copied().unwrap_or(0).into(),
                node: missing as u64,
            });
        }
        let sum = self.dist.iter().map(|&d| u128::from(d)).sum();
        let ecc = self.queue.last().map_or(0, |&u| self.dist[u as usize]);
        Ok((sum, ecc))
    }
}

fn check_source(graph: &Graph, source: u64) -> Result<NodeId> {
    if source < graph.node_count() as u64 {
        Ok(source as NodeId)
    } else {
        Err(Error::InvalidArgument(format!(
            "source {source} outside [0, {})",
            graph.node_count()
        )))
    }
}

/// Unweighted shortest-path distances from `source`.
pub fn bfs_distances(graph: &Graph, source: u64) -> Result<Vec<u32>> {
    let source = check_source(graph, source)?;
    let mut scratch = Scratch::new(graph.node_count());
    scratch.run(graph, &[source])?;
    Ok(scratch.dist)
}

/// Distance from each node to the nearest of `sources`.
pub fn multi_source_bfs(graph: &Graph, sources: &[u64]) -> Result<Vec<u32>> {
    if sources.is_empty() {
        return Err(Error::InvalidArgument("no BFS sources".into()));
    }
    let sources = sources
        .iter()
        .map(|&s| check_source(graph, s))
        .collect::<Result<Vec<_>>>()?;
    let mut scratch = Scratch::new(graph.node_count());
    scratch.run(graph, &sources)?;
    Ok(scratch.dist)
}

/// All-pairs BFS. Returns (sum over unordered pairs, diameter).
///
/// With `jobs > 1` sources are split across a dedicated thread pool; each
/// worker owns its scratch buffers and the partial sums are added, so the
/// result does not depend on `jobs`.
fn all_pairs(graph: &Graph, jobs: usize) -> Result<(u128, u32)> {
    let n = graph.node_count();
    let (ordered, diameter) = if jobs <= 1 {
        let mut scratch = Scratch::new(n);
        let mut acc = (0u128, 0u32);
        for u in 0..n as NodeId {
            let (sum, ecc) = scratch.run(graph, &[u])?;
            acc = (acc.0 + sum, acc.1.max(ecc));
        }
        acc
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| {
            (0..n as NodeId)
                .into_par_iter()
                .map_init(|| Scratch::new(n), |scratch, u| scratch.run(graph, &[u]))
                .try_reduce(|| (0u128, 0u32), |a, b| Ok((a.0 + b.0, a.1.max(b.1))))
        })?
    };
    Ok((ordered / 2, diameter))
}

/// `D_t` measured: half the sum of all ordered-pair distances.
pub fn total_distance_empirical(graph: &Graph, jobs: usize) -> Result<u128> {
    all_pairs(graph, jobs).map(|(total, _)| total)
}

/// `(P_t, Q_t)` measured: distances to node 0, and to the nearest
/// last-layer bottom by one multi-source BFS.
pub fn hub_layer_sums(graph: &Graph) -> Result<(u128, u128)> {
    let mut scratch = Scratch::new(graph.node_count());
    let (p, _) = scratch.run(graph, &[0])?;
    let layer: Vec<NodeId> = last_layer(graph.spec())?
        .into_iter()
        .map(|id| id as NodeId)
        .collect();
    let (q, _) = scratch.run(graph, &layer)?;
    Ok((p, q))
}

pub fn distance_report(graph: &Graph, jobs: usize) -> Result<DistanceReport> {
    let (total_pairwise, eccentricity_max) = all_pairs(graph, jobs)?;
    let (to_hub_sum, to_layer_min_sum) = hub_layer_sums(graph)?;
    Ok(DistanceReport {
        total_pairwise,
        to_hub_sum,
        to_layer_min_sum,
        eccentricity_max,
    })
}
