//! Distance sums and average path length.
//!
//! `P_t` is the total distance from every node to the global hub and `Q_t`
//! the total distance from every node to its nearest last-layer bottom.
//! Splitting `G_{t+1}` into its `z` blocks gives
//!
//! ```text
//! P_(t+1) = (z-1)(Q_t + N_t) + P_t
//! Q_(t+1) = P_t + N_t + (z-1) Q_t
//! D_(t+1) = z D_t + Delta_(t+1)
//! ```
//!
//! with `P_0 = 2`, `Q_0 = 1`, `D_0 = 3`. The polynomial closed forms for `P_t`
//! and `Q_t` solve these recurrences from `t = 1` on; at `t = 0` they only
//! reproduce the initial values when `z = 3`, so `t = 0` returns the initial
//! values directly.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::ExactScalar;
use crate::network::NetworkSpec;

use super::{check_z, int_pow, node_count, z_pow};

fn t_i64(spec: &NetworkSpec) -> i64 {
    i64::from(spec.t())
}

/// Raw `z^(t-2) (4z^2 + (6t-8)z - 6t + 6)`. Valid for `t >= 1`.
pub fn hub_distance_closed_form(spec: &NetworkSpec) -> ExactScalar {
    let (z, t) = (i64::from(spec.z()), t_i64(spec));
    z_pow(spec.z(), t - 2) * ExactScalar::from(4 * z * z + (6 * t - 8) * z - 6 * t + 6)
}

/// Raw `z^(t-2) (z^2 + (6t-2)z - 6t + 6)`. Valid for `t >= 1`.
pub fn layer_distance_closed_form(spec: &NetworkSpec) -> ExactScalar {
    let (z, t) = (i64::from(spec.z()), t_i64(spec));
    z_pow(spec.z(), t - 2) * ExactScalar::from(z * z + (6 * t - 2) * z - 6 * t + 6)
}

/// `P_t`, the sum of distances to the global hub.
pub fn hub_distance_sum(spec: &NetworkSpec) -> ExactScalar {
    if spec.t() == 0 {
        ExactScalar::from(2i64)
    } else {
        hub_distance_closed_form(spec)
    }
}

/// `Q_t`, the sum of distances to the nearest last-layer bottom.
pub fn layer_distance_sum(spec: &NetworkSpec) -> ExactScalar {
    if spec.t() == 0 {
        ExactScalar::one()
    } else {
        layer_distance_closed_form(spec)
    }
}

/// `(P_t, Q_t)` by unrolling the block recurrences.
pub fn distance_sums_recurrence(spec: &NetworkSpec) -> (BigInt, BigInt) {
    let z = spec.z();
    let mut p = BigInt::from(2);
    let mut q = BigInt::from(1);
    for k in 0..spec.t() {
        let n = 3 * int_pow(z, k);
        let next_p = (z - 1) * (&q + &n) + &p;
        let next_q = &p + &n + (z - 1) * &q;
        p = next_p;
        q = next_q;
    }
    (p, q)
}

/// The two pair classes summed in `Delta_(t+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossBlockParts {
    /// Pairs between the hub's block and one replica:
    /// `N_t P_t + N_t^2 + N_t Q_t`.
    pub hub_block_pair: ExactScalar,
    /// Pairs between two replicas, routed through the hub:
    /// `2 (N_t^2 + N_t Q_t)`.
    pub replica_pair: ExactScalar,
}

impl CrossBlockParts {
    /// `(z-1) hub_block_pair + C(z-1, 2) replica_pair`.
    pub fn combine(&self, z: u32) -> ExactScalar {
        let pairs = ExactScalar::new(u64::from(z - 1) * u64::from(z - 2), 2u32);
        ExactScalar::from(u64::from(z - 1)) * &self.hub_block_pair + pairs * &self.replica_pair
    }
}

pub fn cross_block_parts(spec: &NetworkSpec) -> CrossBlockParts {
    let n = ExactScalar::from(node_count(spec));
    let p = hub_distance_sum(spec);
    let q = layer_distance_sum(spec);
    let n_sq = &n * &n;
    let nq = &n * &q;
    CrossBlockParts {
        hub_block_pair: &(&(&n * &p) + &n_sq) + &nq,
        replica_pair: ExactScalar::from(2i64) * (n_sq + nq),
    }
}

/// `Delta_(t+1) = 6(z-1) z^(2t-1) (2z^2 + (3t-1)z - 3t)`: the distance total
/// over pairs in different blocks of `G_(t+1)`, indexed by the target
/// iteration. Takes the spec for iteration `t`.
pub fn cross_block_distance(spec: &NetworkSpec) -> ExactScalar {
    let (z, t) = (i64::from(spec.z()), t_i64(spec));
    ExactScalar::from(6 * (z - 1))
        * z_pow(spec.z(), 2 * t - 1)
        * ExactScalar::from(2 * z * z + (3 * t - 1) * z - 3 * t)
}

/// `D_t = 3 z^(t-2) (4z^(t+2) + (6t-8)z^(t+1) - 6t z^t - 3z^2 + 8z)`.
///
/// Fails with [`Error::Internal`] if the value is not an integer.
pub fn total_distance(spec: &NetworkSpec) -> Result<ExactScalar> {
    let (z, t) = (spec.z(), spec.t());
    let zi = i64::from(z);
    let ti = t_i64(spec);
    let inner = int_pow(z, t + 2) * 4 + int_pow(z, t + 1) * (6 * ti - 8) - int_pow(z, t) * (6 * ti)
        - 3 * zi * zi
        + 8 * zi;
    let value = ExactScalar::from(3i64) * z_pow(z, ti - 2) * ExactScalar::from(inner);
    if !value.is_integer() {
        return Err(Error::Internal(format!(
            "total distance for {spec} is not an integer: {value}"
        )));
    }
    Ok(value)
}

/// `D_t` by unrolling `D_k = z D_(k-1) + Delta_k` from `D_0 = 3`.
pub fn total_distance_recurrence(spec: &NetworkSpec) -> ExactScalar {
    let z = spec.z();
    let mut d = ExactScalar::from(3i64);
    for k in 0..spec.t() {
        let prev = NetworkSpec::new(z, k).expect("z already validated");
        d = ExactScalar::from(u64::from(z)) * d + cross_block_distance(&prev);
    }
    d
}

/// `sum_(i=1..t) z^(t-i) Delta_i` in closed form:
/// `6 z^(t-2) (2z^(t+2) + (3t-4) z^(t+1) - 3t z^t - 2z^2 + 4z)`.
pub fn weighted_cross_sum(spec: &NetworkSpec) -> ExactScalar {
    let (z, t) = (spec.z(), spec.t());
    let zi = i64::from(z);
    let ti = t_i64(spec);
    let inner = int_pow(z, t + 2) * 2 + int_pow(z, t + 1) * (3 * ti - 4) - int_pow(z, t) * (3 * ti)
        - 2 * zi * zi
        + 4 * zi;
    ExactScalar::from(6i64) * z_pow(z, ti - 2) * ExactScalar::from(inner)
}

/// The same sum, term by term.
pub fn weighted_cross_sum_terms(spec: &NetworkSpec) -> ExactScalar {
    let (z, t) = (spec.z(), spec.t());
    (1..=t)
        .map(|i| {
            let prev = NetworkSpec::new(z, i - 1).expect("z already validated");
            ExactScalar::from(int_pow(z, t - i)) * cross_block_distance(&prev)
        })
        .sum()
}

/// `D_t / (N_t (N_t - 1) / 2)`.
pub fn average_path_length(spec: &NetworkSpec) -> Result<ExactScalar> {
    let n = node_count(spec);
    let pairs = ExactScalar::new(&n * (&n - 1), 2);
    Ok(total_distance(spec)? / pairs)
}

/// `2 (4z^(t+2) + (6t-8) z^(t+1) - 6t z^t - 3z^2 + 8z) / (z^2 (3z^t - 1))`.
pub fn average_path_length_closed_form(spec: &NetworkSpec) -> ExactScalar {
    let (z, t) = (spec.z(), spec.t());
    let zi = i64::from(z);
    let ti = t_i64(spec);
    let inner = int_pow(z, t + 2) * 4 + int_pow(z, t + 1) * (6 * ti - 8) - int_pow(z, t) * (6 * ti)
        - 3 * zi * zi
        + 8 * zi;
    ExactScalar::new(2 * inner, int_pow(z, 2) * (3 * int_pow(z, t) - 1))
}

/// `lim D̄_t / t = 4(z-1)/z^2`.
pub fn apl_asymptote(z: u32) -> Result<ExactScalar> {
    check_z(z)?;
    Ok(ExactScalar::new(4 * (z - 1), z * z))
}

/// `8 ln N_t / (9 ln 3)` with `N_t = 3^(t+1)`, the logarithmic form of the
/// average path length at `z = 3`.
pub fn apl_z3_logform(t: u32) -> f64 {
    let n = ExactScalar::from(int_pow(3, t + 1));
    8.0 * n.ln() / (9.0 * 3f64.ln())
}

/// Every distance quantity for one spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathLengthSolution {
    pub spec: NetworkSpec,
    /// `P_t`
    pub hub_sum: ExactScalar,
    /// `Q_t`
    pub layer_sum: ExactScalar,
    /// `Delta_(t+1)`
    pub cross_block_next: ExactScalar,
    /// `D_t`
    pub total: ExactScalar,
    /// `D̄_t`
    pub average: ExactScalar,
}

pub fn path_length_solution(spec: &NetworkSpec) -> Result<PathLengthSolution> {
    Ok(PathLengthSolution {
        spec: *spec,
        hub_sum: hub_distance_sum(spec),
        layer_sum: layer_distance_sum(spec),
        cross_block_next: cross_block_distance(spec),
        total: total_distance(spec)?,
        average: average_path_length(spec)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(z: u32, t: u32) -> NetworkSpec {
        NetworkSpec::new(z, t).unwrap()
    }

    fn int(v: i64) -> ExactScalar {
        ExactScalar::from(v)
    }

    #[test]
    fn initial_values() {
        for z in 3..=8 {
            let s = spec(z, 0);
            assert_eq!(hub_distance_sum(&s), int(2));
            assert_eq!(layer_distance_sum(&s), int(1));
            assert_eq!(total_distance(&s).unwrap(), int(3));
            assert_eq!(average_path_length(&s).unwrap(), int(1));
        }
        // the raw closed forms only hit the initial values at z = 3
        assert_eq!(hub_distance_closed_form(&spec(3, 0)), int(2));
        assert_eq!(layer_distance_closed_form(&spec(3, 0)), int(1));
        assert_eq!(hub_distance_closed_form(&spec(4, 0)), ExactScalar::new(19, 8));
        assert_eq!(layer_distance_closed_form(&spec(4, 0)), ExactScalar::new(7, 8));
    }

    #[test]
    fn small_values() {
        assert_eq!(hub_distance_sum(&spec(3, 1)), int(10));
        assert_eq!(layer_distance_sum(&spec(3, 1)), int(7));
        assert_eq!(total_distance(&spec(3, 1)).unwrap(), int(69));
        assert_eq!(average_path_length(&spec(3, 1)).unwrap(), ExactScalar::new(23, 12));
        assert_eq!(cross_block_distance(&spec(3, 0)), int(60));
        assert_eq!(cross_block_distance(&spec(4, 0)), int(126));
    }

    #[test]
    fn recurrences_match_closed_forms() {
        for z in 3..=6 {
            for t in 0..=8 {
                let s = spec(z, t);
                let (p, q) = distance_sums_recurrence(&s);
                assert_eq!(hub_distance_sum(&s), ExactScalar::from(p), "P {s}");
                assert_eq!(layer_distance_sum(&s), ExactScalar::from(q), "Q {s}");
                let d = total_distance(&s).unwrap();
                assert_eq!(d, total_distance_recurrence(&s), "D {s}");
                assert_eq!(
                    d,
                    ExactScalar::from(int_pow(z, t) * 3) + weighted_cross_sum(&s),
                    "D via weighted sum {s}"
                );
                assert_eq!(weighted_cross_sum(&s), weighted_cross_sum_terms(&s), "{s}");
                assert_eq!(average_path_length(&s).unwrap(), average_path_length_closed_form(&s));
                let next = total_distance(&s.next()).unwrap();
                assert_eq!(next, ExactScalar::from(u64::from(z)) * d + cross_block_distance(&s));
            }
        }
    }

    #[test]
    fn decomposition_identity() {
        for z in 3..=5 {
            for t in 0..=3 {
                let s = spec(z, t);
                assert_eq!(cross_block_parts(&s).combine(z), cross_block_distance(&s), "{s}");
            }
        }
    }

    #[test]
    fn printed_part_forms_hold_from_t1() {
        for z in 3..=6 {
            for t in 1..=6 {
                let s = spec(z, t);
                let parts = cross_block_parts(&s);
                let (zi, ti) = (i64::from(z), i64::from(t));
                let a = int(6)
                    * z_pow(z, 2 * ti - 2)
                    * int(4 * zi * zi + (6 * ti - 5) * zi - 6 * ti + 6);
                let b = int(12)
                    * z_pow(z, 2 * ti - 2)
                    * int(2 * zi * zi + (3 * ti - 1) * zi - 3 * ti + 3);
                assert_eq!(parts.hub_block_pair, a);
                assert_eq!(parts.replica_pair, b);
            }
        }
    }

    #[test]
    fn asymptotes() {
        assert_eq!(apl_asymptote(3).unwrap(), ExactScalar::new(8, 9));
        assert_eq!(apl_asymptote(4).unwrap(), ExactScalar::new(3, 4));
        assert!(apl_asymptote(2).is_err());

        let limit = apl_asymptote(3).unwrap();
        let gaps: Vec<ExactScalar> = (5..=40)
            .map(|t| {
                let s = spec(3, t);
                (&(average_path_length(&s).unwrap() / ExactScalar::from(u64::from(t))) - &limit).abs()
            })
            .collect();
        assert!(gaps.windows(2).all(|w| w[0] > w[1]));

        let apl30 = average_path_length(&spec(3, 30)).unwrap();
        assert!((&apl30 - &ExactScalar::new(8 * 31, 9)).abs() < ExactScalar::new(1, 1_000_000));
    }

    #[test]
    fn logform() {
        assert!((apl_z3_logform(1) - 16.0 / 9.0).abs() < 1e-12);
        let gap = |t| (average_path_length(&spec(3, t)).unwrap().to_f64() - apl_z3_logform(t)).abs();
        assert!(gap(10) < gap(5));
        let ratio = average_path_length(&spec(3, 200)).unwrap().to_f64() / apl_z3_logform(200);
        assert!((ratio - 1.0).abs() < 1e-9);
    }

    #[test]
    fn large_t_stays_exact() {
        let s = spec(3, 100);
        let d = total_distance(&s).unwrap();
        assert!(d.is_integer());
        assert!(path_length_solution(&s).is_ok());
    }
}
