//! Closed-form structural properties of `G_t^z`, in exact arithmetic.

mod clustering;
mod degree;
mod distance;

pub use clustering::{
    clustering_paper, clustering_paper_limit, clustering_paper_terms, ClusteringLimit,
    PaperClusteringTerms, LIMIT_MAX_ITERATIONS,
};
pub use degree::{
    bottom_decay, degree_distribution, hub_exponent, least_squares_slope, CdfPoint,
    DegreeDistribution,
};
pub use distance::{
    apl_asymptote, apl_z3_logform, average_path_length, average_path_length_closed_form,
    cross_block_distance, cross_block_parts, distance_sums_recurrence, hub_distance_closed_form,
    hub_distance_sum, layer_distance_closed_form, layer_distance_sum, path_length_solution,
    total_distance, total_distance_recurrence, weighted_cross_sum, weighted_cross_sum_terms,
    CrossBlockParts, PathLengthSolution,
};

use num_bigint::BigInt;
use num_traits::Pow;

use crate::error::Result;
use crate::exact::ExactScalar;
use crate::network::NetworkSpec;

pub(crate) fn int_pow(base: u32, exp: u32) -> BigInt {
    Pow::pow(BigInt::from(base), exp)
}

/// `z^exp` for a possibly negative exponent.
pub(crate) fn z_pow(z: u32, exp: i64) -> ExactScalar {
    if exp >= 0 {
        ExactScalar::from(int_pow(z, exp as u32))
    } else {
        ExactScalar::new(1, int_pow(z, (-exp) as u32))
    }
}

pub(crate) fn check_z(z: u32) -> Result<()> {
    NetworkSpec::new(z, 0).map(|_| ())
}

/// `N_t = 3 z^t`.
pub fn node_count(spec: &NetworkSpec) -> BigInt {
    BigInt::from(spec.node_count())
}

/// `E_t = (2z+1) z^t - 2 (z-1)^(t+1)`.
pub fn edge_count(spec: &NetworkSpec) -> BigInt {
    let (z, t) = (spec.z(), spec.t());
    BigInt::from(2 * z + 1) * int_pow(z, t) - 2 * int_pow(z - 1, t + 1)
}

/// `E_t` by unrolling `E_k = z E_(k-1) + 2 (z-1)^k` from `E_0 = 3`.
pub fn edge_count_recurrence(spec: &NetworkSpec) -> BigInt {
    let z = spec.z();
    (1..=spec.t()).fold(BigInt::from(3), |e, k| e * z + 2 * int_pow(z - 1, k))
}

/// `<k_t> = 2 E_t / N_t`.
pub fn average_degree(spec: &NetworkSpec) -> ExactScalar {
    ExactScalar::new(2 * edge_count(spec), node_count(spec))
}

/// The same quantity written as `(4z+2)/3 - (4/3)(z-1)^(t+1)/z^t`.
pub fn average_degree_closed_form(spec: &NetworkSpec) -> ExactScalar {
    let (z, t) = (spec.z(), spec.t());
    ExactScalar::new(4 * z + 2, 3)
        - ExactScalar::new(4 * int_pow(z - 1, t + 1), 3 * int_pow(z, t))
}

/// `lim <k_t> = (4z+2)/3`.
pub fn average_degree_limit(z: u32) -> Result<ExactScalar> {
    check_z(z)?;
    Ok(ExactScalar::new(4 * z + 2, 3))
}

/// `rho = 2E / (N (N-1))`.
pub fn density(spec: &NetworkSpec) -> ExactScalar {
    let n = node_count(spec);
    ExactScalar::new(2 * edge_count(spec), &n * (&n - 1))
}
