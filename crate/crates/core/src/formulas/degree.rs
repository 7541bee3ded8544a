//! Cumulative degree distributions of hub and bottom nodes.

use num_bigint::BigInt;

use crate::address::{hub_degree, NodeClass};
use crate::error::Result;
use crate::exact::ExactScalar;
use crate::network::NetworkSpec;

use super::{check_z, int_pow, z_pow};

/// One point of a cumulative distribution: the fraction of all nodes whose
/// class reaches at least `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdfPoint {
    pub class: NodeClass,
    pub degree: BigInt,
    pub fraction: ExactScalar,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    pub spec: NetworkSpec,
    /// Hub power-law exponent `1 + ln z / ln(z-1)`.
    pub gamma: f64,
    /// Bottom decay base `(z-1)/z`.
    pub theta: ExactScalar,
    /// Hub classes `i = 1..=t+1`, ascending degree.
    pub hub_points: Vec<CdfPoint>,
    /// Bottom classes `j = 2..=t+2`, ascending degree.
    pub bottom_points: Vec<CdfPoint>,
}

impl DegreeDistribution {
    /// `(ln k_i, ln P_cum)` for hub levels `from_level..=t+1`.
    pub fn hub_log_log(&self, from_level: u32) -> Vec<(f64, f64)> {
        self.hub_points
            .iter()
            .filter(|p| matches!(p.class, NodeClass::Hub { level } if level >= from_level))
            .map(|p| (ExactScalar::from(p.degree.clone()).ln(), p.fraction.ln()))
            .collect()
    }

    /// `(ln (z-1)^i, ln P_cum)` for every hub level: the cumulative fraction
    /// against the leading-order degree scale `(z-1)^i`, on which it is an
    /// exact power law with slope `-ln z / ln(z-1)`.
    pub fn hub_log_log_scale(&self) -> Vec<(f64, f64)> {
        let zm1 = f64::from(self.spec.z() - 1).ln();
        self.hub_points
            .iter()
            .filter_map(|p| match p.class {
                NodeClass::Hub { level } => Some((f64::from(level) * zm1, p.fraction.ln())),
                NodeClass::Bottom { .. } => None,
            })
            .collect()
    }

    /// Least-squares slope of `ln P_cum` against `ln k` over hub levels
    /// `from_level..=t+1`.
    pub fn hub_slope(&self, from_level: u32) -> Option<f64> {
        least_squares_slope(&self.hub_log_log(from_level))
    }
}

/// Slope of the ordinary least-squares line through `points`.
/// `None` with fewer than two distinct abscissae.
pub fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// `gamma = 1 + ln z / ln(z-1)`.
///
/// For `z = 3` this is about 2.585; a printed value of 1.69 sometimes
/// quoted next to the formula does not match it.
pub fn hub_exponent(z: u32) -> Result<f64> {
    check_z(z)?;
    Ok(1.0 + f64::from(z).ln() / f64::from(z - 1).ln())
}

/// `theta = (z-1)/z`.
pub fn bottom_decay(z: u32) -> Result<ExactScalar> {
    check_z(z)?;
    Ok(ExactScalar::new(z - 1, z))
}

pub fn degree_distribution(spec: &NetworkSpec) -> DegreeDistribution {
    let (z, t) = (spec.z(), spec.t());
    let hub_points = (1..=t + 1)
        .map(|level| CdfPoint {
            class: NodeClass::Hub { level },
            degree: BigInt::from(hub_degree(z, level)),
            // z^(t-i+1) / (3 z^t)
            fraction: z_pow(z, 1 - i64::from(level)) / ExactScalar::from(3i64),
        })
        .collect();
    let bottom_points = (2..=t + 2)
        .map(|degree| CdfPoint {
            class: NodeClass::Bottom { degree },
            degree: BigInt::from(degree),
            fraction: ExactScalar::new(2 * int_pow(z - 1, degree - 2), 3 * int_pow(z, degree - 2)),
        })
        .collect();
    DegreeDistribution {
        spec: *spec,
        gamma: hub_exponent(z).expect("spec has valid z"),
        theta: bottom_decay(z).expect("spec has valid z"),
        hub_points,
        bottom_points,
    }
}
