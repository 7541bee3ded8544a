//! Hierarchical node addressing.
//!
//! Every node of `G_t^z` is one corner of a base triangle. A base triangle is
//! named by its block digits `d_1..d_t` (outermost first), and the corner by a
//! [`Role`]. Node ids are laid out big-endian:
//!
//! ```text
//! id = 3 * (d_1 z^(t-1) + ... + d_t) + role
//! ```
//!
//! so the `z` top-level blocks occupy contiguous id ranges and the global hub
//! is id 0.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::network::NetworkSpec;

/// Corner of a base triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Hub = 0,
    BottomA = 1,
    BottomB = 2,
}

impl Role {
    pub const ALL: [Role; 3] = [Role::Hub, Role::BottomA, Role::BottomB];

    #[inline]
    pub fn index(self) -> u64 {
        self as u64
    }

    pub fn from_index(index: u64) -> Option<Self> {
        match index {
            0 => Some(Role::Hub),
            1 => Some(Role::BottomA),
            2 => Some(Role::BottomB),
            _ => None,
        }
    }

    #[inline]
    pub fn is_bottom(self) -> bool {
        self != Role::Hub
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeAddress {
    digits: Vec<u32>,
    role: Role,
}

impl NodeAddress {
    /// Builds an address, checking it against `spec`.
    pub fn new(digits: Vec<u32>, role: Role, spec: &NetworkSpec) -> Result<Self> {
        let addr = Self { digits, role };
        addr.validate(spec)?;
        Ok(addr)
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn role(&self) -> Role {
        self.role
    }

    fn validate(&self, spec: &NetworkSpec) -> Result<()> {
        if self.digits.len() != spec.t() as usize {
            return Err(Error::Address(format!(
                "expected {} digits, got {}",
                spec.t(),
                self.digits.len()
            )));
        }
        if let Some((pos, d)) = self
            .digits
            .iter()
            .enumerate()
            .find(|(_, &d)| d >= spec.z())
        {
            return Err(Error::Address(format!(
                "digit {} at position {} is outside [0, {}]",
                d,
                pos + 1,
                spec.z() - 1
            )));
        }
        Ok(())
    }

    pub fn encode(&self, spec: &NetworkSpec) -> Result<u64> {
        self.validate(spec)?;
        id_space(spec)?;
        let z = u64::from(spec.z());
        let triangle = self
            .digits
            .iter()
            .fold(0u64, |acc, &d| acc * z + u64::from(d));
        Ok(3 * triangle + self.role.index())
    }

    pub fn decode(id: u64, spec: &NetworkSpec) -> Result<Self> {
        let n = id_space(spec)?;
        if id >= n {
            return Err(Error::Address(format!(
                "node id {id} outside [0, {n}) for {spec}"
            )));
        }
        let role = Role::from_index(id % 3).expect("id % 3 < 3");
        let z = u64::from(spec.z());
        let mut triangle = id / 3;
        let mut digits = vec![0u32; spec.t() as usize];
        for slot in digits.iter_mut().rev() {
            *slot = (triangle % z) as u32;
            triangle /= z;
        }
        Ok(Self { digits, role })
    }

    /// Hub level or bottom degree class of this node.
    pub fn classify(&self, spec: &NetworkSpec) -> Result<NodeClass> {
        self.validate(spec)?;
        let t = spec.t();
        let class = match self.role {
            Role::Hub => {
                let last_nonzero = self
                    .digits
                    .iter()
                    .rposition(|&d| d != 0)
                    .map_or(0, |p| p as u32 + 1);
                NodeClass::Hub {
                    level: t - last_nonzero + 1,
                }
            }
            Role::BottomA | Role::BottomB => {
                let suffix = self.digits.iter().rev().take_while(|&&d| d != 0).count() as u32;
                NodeClass::Bottom { degree: suffix + 2 }
            }
        };
        Ok(class)
    }
}

impl fmt::Display for NodeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]:{:?}", self.role)
    }
}

fn id_space(spec: &NetworkSpec) -> Result<u64> {
    spec.node_count_u64().ok_or_else(|| {
        Error::Address(format!("{spec} has more nodes than fit in a 64-bit id"))
    })
}

/// Structural class of a node. Hubs are ranked by `level` in `1..=t+1`
/// (`t+1` is the global hub); bottoms by their degree `2..=t+2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeClass {
    Hub { level: u32 },
    Bottom { degree: u32 },
}

impl NodeClass {
    /// Degree of every node in this class: `(2(z-1)^i - 2)/(z-2)` for a hub
    /// of level `i`, `j` for a bottom of class `j`.
    pub fn degree(&self, z: u32) -> BigUint {
        match *self {
            NodeClass::Hub { level } => hub_degree(z, level),
            NodeClass::Bottom { degree } => BigUint::from(degree),
        }
    }

    pub fn degree_u64(&self, z: u32) -> Option<u64> {
        self.degree(z).to_u64()
    }

    pub fn is_hub(&self) -> bool {
        matches!(self, NodeClass::Hub { .. })
    }
}

pub(crate) fn hub_degree(z: u32, level: u32) -> BigUint {
    // 2 + 2(z-1) + ... + 2(z-1)^(level-1), which is the closed form above
    let two = BigUint::from(2u32);
    (&two * BigUint::from(z - 1).pow(level) - &two) / BigUint::from(z - 2)
}

/// One row of the class table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCount {
    pub class: NodeClass,
    pub count: BigUint,
    pub degree: BigUint,
}

/// Population and degree of every node class.
///
/// Hub rows come first from the global hub down to level 1, followed by
/// bottom rows from the last layer (degree `t+2`) down to degree 2.
pub fn class_census(spec: &NetworkSpec) -> Vec<ClassCount> {
    let z = spec.z();
    let t = spec.t();
    let zb = BigUint::from(z);
    let zm1 = BigUint::from(z - 1);
    let mut rows = Vec::with_capacity(2 * t as usize + 2);

    for level in (1..=t + 1).rev() {
        let count = if level == t + 1 {
            BigUint::from(1u32)
        } else {
            &zm1 * zb.pow(t - level)
        };
        let class = NodeClass::Hub { level };
        rows.push(ClassCount {
            class,
            degree: class.degree(z),
            count,
        });
    }
    for degree in (2..=t + 2).rev() {
        let count = if degree == t + 2 {
            BigUint::from(2u32) * zm1.pow(t)
        } else {
            BigUint::from(2u32) * zm1.pow(degree - 2) * zb.pow(t + 1 - degree)
        };
        rows.push(ClassCount {
            class: NodeClass::Bottom { degree },
            degree: BigUint::from(degree),
            count,
        });
    }
    rows
}

/// Census collapsed to a degree histogram. Hub level 1 and bottom class 2
/// both have degree 2, so their counts merge.
pub fn census_histogram(spec: &NetworkSpec) -> std::collections::BTreeMap<BigUint, BigUint> {
    let mut hist = std::collections::BTreeMap::new();
    for row in class_census(spec) {
        *hist.entry(row.degree).or_insert_with(|| BigUint::from(0u32)) += row.count;
    }
    hist
}
