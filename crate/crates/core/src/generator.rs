//! Direct edge generation for `G_t^z`.
//!
//! The iterative construction takes `z - 1` copies of `G_{t-1}` next to the
//! original and joins the original's global hub to the last-layer bottoms of
//! every copy. Unrolled over all iterations this has a closed description in
//! terms of node addresses (see [`crate::address`]):
//!
//! * every digit string `d` owns a base triangle on `(d, Hub)`, `(d, BottomA)`
//!   and `(d, BottomB)`;
//! * for each scale `s = 1..=t` and each prefix `p` of length `t - s`, the
//!   sub-network with prefix `p` is a copy of `G_s` whose global hub is
//!   `(p 0^s, Hub)`. The edges added when that copy was formed join this hub
//!   to the last-layer bottoms of its `z - 1` replicas, which are exactly the
//!   bottoms `(p e_1..e_s, BottomA/B)` with every `e_i != 0`. There are
//!   `2 (z-1)^s` of them.
//!
//! A copy `b != 0` of `G_{s-1}` contributes its own last layer (all-nonzero
//! suffix of length `s - 1`) with `e_1 = b`, which is why the condition is
//! "all `s` trailing digits nonzero". Summing gives
//! `3 z^t + 2 sum_s z^(t-s) (z-1)^s = (2z+1) z^t - 2 (z-1)^(t+1)` edges.
//!
//! Edges come out in a fixed order: base triangles by ascending digit string
//! (`hub-a`, `hub-b`, `a-b`), then hub-to-layer edges by ascending scale,
//! prefix and bottom id.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::network::NetworkSpec;

/// Deterministic iterator over the edges of `G_t^z`, each `(u, v)` with `u < v`.
#[derive(Debug, Clone)]
pub struct EdgeStream {
    z: u64,
    t: u32,
    triangles: u64,
    phase: Phase,
}

#[derive(Debug, Clone)]
enum Phase {
    Triangles { triangle: u64, corner: u8 },
    Cross(CrossCursor),
    Done,
}

#[derive(Debug, Clone)]
struct CrossCursor {
    scale: u32,
    prefix: u64,
    prefixes: u64,
    block: u64,
    suffix: Vec<u64>,
    suffix_value: u64,
    role: u64,
}

impl CrossCursor {
    fn at_scale(z: u64, t: u32, scale: u32) -> Option<Self> {
        if scale > t {
            return None;
        }
        let suffix = vec![1u64; scale as usize];
        let suffix_value = suffix.iter().fold(0, |acc, &d| acc * z + d);
        Some(Self {
            scale,
            prefix: 0,
            prefixes: z.pow(t - scale),
            block: z.pow(scale),
            suffix,
            suffix_value,
            role: 1,
        })
    }

    fn edge(&self) -> (u64, u64) {
        let base = self.prefix * self.block;
        (3 * base, 3 * (base + self.suffix_value) + self.role)
    }

    /// Moves to the next bottom. Returns false once this scale is exhausted.
    fn advance(&mut self, z: u64) -> bool {
        if self.role == 1 {
            self.role = 2;
            return true;
        }
        self.role = 1;
        // odometer over digits 1..z-1
        let mut place = 1u64;
        for digit in self.suffix.iter_mut().rev() {
            if *digit < z - 1 {
                *digit += 1;
                self.suffix_value += place;
                return true;
            }
            self.suffix_value -= (*digit - 1) * place;
            *digit = 1;
            place *= z;
        }
        self.prefix += 1;
        self.prefix < self.prefixes
    }
}

impl EdgeStream {
    pub fn new(spec: &NetworkSpec) -> Result<Self> {
        let triangles = spec.node_count_u64().and(spec.triangle_count_u64()).ok_or_else(|| {
            Error::InvalidSpec(format!("{spec} has more nodes than fit in a 64-bit id"))
        })?;
        Ok(Self {
            z: u64::from(spec.z()),
            t: spec.t(),
            triangles,
            phase: Phase::Triangles {
                triangle: 0,
                corner: 0,
            },
        })
    }
}

impl Iterator for EdgeStream {
    type Item = (u64, u64);

    fn next(&mut self) -> Option<(u64, u64)> {
        loop {
            match &mut self.phase {
                Phase::Triangles { triangle, corner } => {
                    if *triangle == self.triangles {
                        self.phase = match CrossCursor::at_scale(self.z, self.t, 1) {
                            Some(c) => Phase::Cross(c),
                            None => Phase::Done,
                        };
                        continue;
                    }
                    let base = 3 * *triangle;
                    let edge = match *corner {
                        0 => (base, base + 1),
                        1 => (base, base + 2),
                        _ => (base + 1, base + 2),
                    };
                    if *corner == 2 {
                        *corner = 0;
                        *triangle += 1;
                    } else {
                        *corner += 1;
                    }
                    return Some(edge);
                }
                Phase::Cross(cursor) => {
                    let edge = cursor.edge();
                    if !cursor.advance(self.z) {
                        let next = cursor.scale + 1;
                        self.phase = match CrossCursor::at_scale(self.z, self.t, next) {
                            Some(c) => Phase::Cross(c),
                            None => Phase::Done,
                        };
                    }
                    return Some(edge);
                }
                Phase::Done => return None,
            }
        }
    }
}

impl std::iter::FusedIterator for EdgeStream {}

pub fn edge_stream(spec: &NetworkSpec) -> Result<EdgeStream> {
    EdgeStream::new(spec)
}

/// Materializes `G_t^z`, refusing specs above `max_nodes`.
pub fn build_graph(spec: &NetworkSpec, max_nodes: u64) -> Result<Graph> {
    let n = spec.materializable(max_nodes)?;
    let stream = EdgeStream::new(spec)?;
    Graph::from_edge_source(*spec, n, || stream.clone().map(Ok))
}

/// Id of the global hub. Always 0 under the big-endian layout.
pub fn global_hub(_spec: &NetworkSpec) -> u64 {
    0
}

/// The `2 (z-1)^t` bottoms whose digits are all nonzero, ascending.
pub fn last_layer(spec: &NetworkSpec) -> Result<Vec<u64>> {
    spec.node_count_u64().ok_or_else(|| {
        Error::InvalidSpec(format!("{spec} has more nodes than fit in a 64-bit id"))
    })?;
    let z = u64::from(spec.z());
    let mut values = vec![0u64];
    for _ in 0..spec.t() {
        values = values
            .iter()
            .flat_map(|&v| (1..z).map(move |d| v * z + d))
            .collect();
    }
    Ok(values
        .into_iter()
        .flat_map(|v| [3 * v + 1, 3 * v + 2])
        .collect())
}

/// Writes the edge list: one `u v` line per edge, in stream order.
pub fn write_edge_list<W: Write>(spec: &NetworkSpec, out: &mut W) -> Result<u64> {
    let mut count = 0u64;
    let io_err = |e: io::Error| Error::Internal(format!("write failed: {e}"));
    for (u, v) in EdgeStream::new(spec)? {
        writeln!(out, "{u} {v}").map_err(io_err)?;
        count += 1;
    }
    out.flush().map_err(io_err)?;
    Ok(count)
}

/// Parses the edge-list text format. Blank lines are skipped.
pub fn read_edge_list<R: BufRead>(input: R) -> Result<Vec<(u64, u64)>> {
    let mut edges = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::EdgeList {
            line: i + 1,
            reason: e.to_string(),
        })?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |reason: String| Error::EdgeList { line: i + 1, reason };
        let mut parts = line.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad(format!("expected two ids, got {line:?}")));
        };
        let u: u64 = a.parse().map_err(|_| bad(format!("bad id {a:?}")))?;
        let v: u64 = b.parse().map_err(|_| bad(format!("bad id {b:?}")))?;
        if u >= v {
            return Err(bad(format!("expected u < v, got {u} {v}")));
        }
        edges.push((u, v));
    }
    Ok(edges)
}

/// Rebuilds a graph for `spec` from parsed edges.
pub fn graph_from_edges(spec: &NetworkSpec, edges: &[(u64, u64)], max_nodes: u64) -> Result<Graph> {
    let n = spec.materializable(max_nodes)?;
    Graph::from_edge_source(*spec, n, || edges.iter().copied().map(Ok))
}
