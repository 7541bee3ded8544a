//! The `(z, t)` pair that names one member of the network family.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Default cap on the number of nodes a materialized graph may have.
pub const DEFAULT_MAX_NODES: u64 = 10_000_000;

/// Identifies `G_t^z`: `z` blocks per iteration, `t` iterations.
///
/// Only `z` is validated on construction. Closed forms accept any `t`;
/// materializing a graph additionally goes through [`NetworkSpec::materializable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NetworkSpec {
    z: u32,
    t: u32,
}

impl NetworkSpec {
    pub fn new(z: u32, t: u32) -> Result<Self> {
        if z < 3 {
            return Err(Error::InvalidSpec(format!(
                "block count z must be at least 3, got {z}"
            )));
        }
        Ok(Self { z, t })
    }

    #[inline]
    pub fn z(&self) -> u32 {
        self.z
    }

    #[inline]
    pub fn t(&self) -> u32 {
        self.t
    }

    /// The spec one iteration earlier, or `None` at `t = 0`.
    pub fn previous(&self) -> Option<Self> {
        self.t.checked_sub(1).map(|t| Self { z: self.z, t })
    }

    pub fn next(&self) -> Self {
        Self {
            z: self.z,
            t: self.t + 1,
        }
    }

    /// Exact node count `3 z^t`.
    pub fn node_count(&self) -> BigUint {
        BigUint::from(3u32) * BigUint::from(self.z).pow(self.t)
    }

    /// `z^t`, the number of base triangles, if it fits in a `u64`.
    pub fn triangle_count_u64(&self) -> Option<u64> {
        u64::from(self.z).checked_pow(self.t)
    }

    /// Node count as a `u64`, when it fits.
    pub fn node_count_u64(&self) -> Option<u64> {
        self.triangle_count_u64()?.checked_mul(3)
    }

    /// Checks the size guard and returns the node count as a `usize`.
    ///
    /// The cap is clamped to `u32::MAX` because graph adjacency stores
    /// 32-bit node ids.
    pub fn materializable(&self, max_nodes: u64) -> Result<usize> {
        let cap = max_nodes.min(u64::from(u32::MAX));
        match self.node_count_u64() {
            Some(n) if n <= cap => Ok(n as usize),
            _ => Err(Error::TooLarge {
                nodes: self.node_count().to_string(),
                cap,
            }),
        }
    }

    /// Number of nodes per top-level block, `3 z^(t-1)`; `None` at `t = 0`.
    pub fn block_size(&self) -> Option<u64> {
        self.previous()?.node_count_u64()
    }
}

impl fmt::Display for NetworkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(z={}, t={})", self.z, self.t)
    }
}
