//! Mean clustering as given by the closed-form class bookkeeping.
//!
//! The formula assigns each hub of level `i` the coefficient
//! `2(z-2)^2 / ((A_i - 2)(A_i - z))` with `A_i = 2(z-1)^i`, each bottom of
//! degree `j` the coefficient `2 / (j(j-1))`, and averages over all nodes.
//! This counts one neighbour edge per node, which is fewer than the
//! generated graph actually has for `t >= 1`; the true triangle-based value
//! is `oracle::clustering_empirical`.

use crate::error::{Error, Result};
use crate::exact::ExactScalar;
use crate::network::NetworkSpec;

use super::{check_z, int_pow};

/// Hard cap on the iteration count searched by [`clustering_paper_limit`].
pub const LIMIT_MAX_ITERATIONS: u32 = 64;

/// The four summands of the mean, before division by `3 z^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperClusteringTerms {
    pub global_hub: ExactScalar,
    pub last_layer: ExactScalar,
    pub hubs: ExactScalar,
    pub bottoms: ExactScalar,
}

impl PaperClusteringTerms {
    pub fn total(&self) -> ExactScalar {
        &(&(&self.global_hub + &self.last_layer) + &self.hubs) + &self.bottoms
    }
}

fn layer_scale(z: u32, k: u32) -> num_bigint::BigInt {
    2 * int_pow(z - 1, k)
}

pub fn clustering_paper_terms(spec: &NetworkSpec) -> PaperClusteringTerms {
    let (z, t) = (spec.z(), spec.t());
    let zm2_sq = int_pow(z - 2, 2);
    let hub_term = |k: u32| {
        let a = layer_scale(z, k);
        (&a - 2) * (&a - z)
    };

    let global_hub = ExactScalar::new(2 * &zm2_sq, hub_term(t + 1));
    let last_layer = ExactScalar::new(4 * int_pow(z - 1, t), (t + 2) * (t + 1));
    let hubs = (0..t)
        .map(|i| {
            ExactScalar::new(
                2 * (z - 1) * &zm2_sq * int_pow(z, i),
                hub_term(t - i),
            )
        })
        .sum();
    let bottoms = (2..=t + 1)
        .map(|j| ExactScalar::new(4 * int_pow(z - 1, j - 2) * int_pow(z, t + 1 - j), j * (j - 1)))
        .sum();
    PaperClusteringTerms {
        global_hub,
        last_layer,
        hubs,
        bottoms,
    }
}

/// Mean clustering from the class bookkeeping. Equals 1 at `t = 0`.
pub fn clustering_paper(spec: &NetworkSpec) -> ExactScalar {
    let n = ExactScalar::from(spec.node_count());
    clustering_paper_terms(spec).total() / n
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusteringLimit {
    pub value: f64,
    /// Iteration at which successive values first differed by less than the tolerance.
    pub iterations: u32,
    pub converged: bool,
}

/// Evaluates [`clustering_paper`] for `t = 1, 2, ...` until two successive
/// values differ by less than `tol`, stopping at [`LIMIT_MAX_ITERATIONS`].
pub fn clustering_paper_limit(z: u32, tol: f64) -> Result<ClusteringLimit> {
    check_z(z)?;
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut previous = clustering_paper(&NetworkSpec::new(z, 0)?);
    for t in 1..=LIMIT_MAX_ITERATIONS {
        let current = clustering_paper(&NetworkSpec::new(z, t)?);
        let step = (&current - &previous).abs().to_f64();
        if step < tol {
            return Ok(ClusteringLimit {
                value: current.to_f64(),
                iterations: t,
                converged: true,
            });
        }
        previous = current;
    }
    Ok(ClusteringLimit {
        value: previous.to_f64(),
        iterations: LIMIT_MAX_ITERATIONS,
        converged: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(z: u32, t: u32) -> NetworkSpec {
        NetworkSpec::new(z, t).unwrap()
    }

    #[test]
    fn initial_value_is_one() {
        for z in 3..=8 {
            assert_eq!(clustering_paper(&spec(z, 0)), ExactScalar::one());
        }
    }

    #[test]
    fn first_iteration_terms() {
        let terms = clustering_paper_terms(&spec(3, 1));
        assert_eq!(terms.global_hub, ExactScalar::new(1, 15));
        assert_eq!(terms.last_layer, ExactScalar::new(4, 3));
        assert_eq!(terms.hubs, ExactScalar::new(2, 1));
        assert_eq!(terms.bottoms, ExactScalar::new(2, 1));
        assert_eq!(clustering_paper(&spec(3, 1)), ExactScalar::new(3, 5));
    }

    #[test]
    fn bound_for_z3() {
        let c9 = clustering_paper(&spec(3, 9)).to_f64();
        assert!((c9 - 0.5279).abs() < 1e-3, "{c9}");
        let c8 = clustering_paper(&spec(3, 8)).to_f64();
        assert!((c9 - c8).abs() < 1e-3);
        let limit = clustering_paper_limit(3, 1e-6).unwrap();
        assert!(limit.converged);
        assert!((limit.value - 0.5279).abs() < 1e-3, "{limit:?}");
    }

    #[test]
    fn decreasing_in_t_and_z() {
        for z in 3..=6 {
            let values: Vec<ExactScalar> = (1..=12).map(|t| clustering_paper(&spec(z, t))).collect();
            assert!(values.windows(2).all(|w| w[0] > w[1]), "z={z}");
        }
        let at = |z| clustering_paper(&spec(z, 12));
        assert!(at(3) > at(4) && at(4) > at(5) && at(5) > at(6));
        let limits: Vec<f64> = (3..=6)
            .map(|z| clustering_paper_limit(z, 1e-6).unwrap().value)
            .collect();
        assert!(limits.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn limit_rejects_bad_input() {
        assert!(clustering_paper_limit(2, 1e-6).is_err());
        assert!(clustering_paper_limit(3, 0.0).is_err());
        assert!(clustering_paper_limit(3, f64::NAN).is_err());
    }

    #[test]
    fn limit_cap() {
        let capped = clustering_paper_limit(3, 1e-300).unwrap();
        assert!(!capped.converged);
        assert_eq!(capped.iterations, LIMIT_MAX_ITERATIONS);
    }
}
