//! The analysis report: closed forms, optional measurements and the
//! per-quantity agreement flags.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use hfnet_core::formulas::{self, DegreeDistribution};
use hfnet_core::oracle::{clustering_empirical, degree_histogram, distance_report};
use hfnet_core::{class_census, ExactScalar, Graph, NetworkSpec, NodeClass, Result};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

/// Significant digits in decimal renderings.
pub const DECIMAL_DIGITS: usize = 12;

/// A number rendered both exactly and as a decimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rendered {
    pub exact: String,
    pub decimal: String,
}

impl Rendered {
    pub fn exact(value: &ExactScalar) -> Self {
        Self {
            exact: value.to_string(),
            decimal: value.to_decimal(DECIMAL_DIGITS),
        }
    }

    pub fn integer(value: &BigInt) -> Self {
        Self::exact(&ExactScalar::from(value.clone()))
    }

    /// For irrational quantities: a symbolic expression plus its decimal.
    pub fn real(expression: String, value: f64) -> Self {
        Self {
            exact: expression,
            decimal: format_f64(value),
        }
    }
}

pub fn format_f64(value: f64) -> String {
    match ExactScalar::from_f64(value) {
        Some(v) => v.to_decimal(DECIMAL_DIGITS),
        None => value.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Match,
    Mismatch,
    NotComputed,
}

impl Check {
    pub fn from_eq(equal: bool) -> Self {
        if equal {
            Check::Match
        } else {
            Check::Mismatch
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Check::Match => "match",
            Check::Mismatch => "mismatch",
            Check::NotComputed => "not-computed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub kind: &'static str,
    /// Hub level `i` or bottom class `j`.
    pub class: u32,
    pub degree: String,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CdfRow {
    pub degree: String,
    pub fraction: Rendered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Distribution {
    pub gamma: Rendered,
    pub theta: Rendered,
    pub hub_points: Vec<CdfRow>,
    pub bottom_points: Vec<CdfRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub node_count: Check,
    pub edge_count: Check,
    pub degree_histogram: Check,
    pub hub_distance_sum: Check,
    pub layer_distance_sum: Check,
    pub total_distance: Check,
    pub average_path_length: Check,
}

impl Checks {
    fn not_computed() -> Self {
        Self {
            node_count: Check::NotComputed,
            edge_count: Check::NotComputed,
            degree_histogram: Check::NotComputed,
            hub_distance_sum: Check::NotComputed,
            layer_distance_sum: Check::NotComputed,
            total_distance: Check::NotComputed,
            average_path_length: Check::NotComputed,
        }
    }

    pub fn entries(&self) -> [(&'static str, Check); 7] {
        [
            ("node_count", self.node_count),
            ("edge_count", self.edge_count),
            ("degree_histogram", self.degree_histogram),
            ("hub_distance_sum", self.hub_distance_sum),
            ("layer_distance_sum", self.layer_distance_sum),
            ("total_distance", self.total_distance),
            ("average_path_length", self.average_path_length),
        ]
    }
}

/// Values measured on the materialized graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Measured {
    pub node_count: Rendered,
    pub edge_count: Rendered,
    pub hub_distance_sum: Rendered,
    pub layer_distance_sum: Rendered,
    pub total_distance: Rendered,
    pub average_path_length: Rendered,
    pub diameter: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub z: u32,
    pub t: u32,
    pub node_count: Rendered,
    pub edge_count: Rendered,
    pub average_degree: Rendered,
    pub average_degree_limit: Rendered,
    pub density: Rendered,
    pub degree_table: Vec<ClassRow>,
    pub distribution: Distribution,
    pub clustering_paper: Rendered,
    pub clustering_empirical: Option<Rendered>,
    pub hub_distance_sum: Rendered,
    pub layer_distance_sum: Rendered,
    pub cross_block_next: Rendered,
    pub total_distance: Rendered,
    pub average_path_length: Rendered,
    pub apl_asymptote: Rendered,
    pub measured: Option<Measured>,
    pub checks: Checks,
}

fn class_row(class: NodeClass, degree: String, count: String) -> ClassRow {
    let (kind, index) = match class {
        NodeClass::Hub { level } => ("hub", level),
        NodeClass::Bottom { degree } => ("bottom", degree),
    };
    ClassRow {
        kind,
        class: index,
        degree,
        count,
    }
}

fn cdf_rows(points: &[formulas::CdfPoint]) -> Vec<CdfRow> {
    points
        .iter()
        .map(|p| CdfRow {
            degree: p.degree.to_string(),
            fraction: Rendered::exact(&p.fraction),
        })
        .collect()
}

fn distribution(z: u32, dist: &DegreeDistribution) -> Distribution {
    Distribution {
        gamma: Rendered::real(format!("1+ln({z})/ln({})", z - 1), dist.gamma),
        theta: Rendered::exact(&dist.theta),
        hub_points: cdf_rows(&dist.hub_points),
        bottom_points: cdf_rows(&dist.bottom_points),
    }
}

/// Closed-form report; when `graph` is given, also measures it and fills
/// the agreement flags.
pub fn analyze(spec: &NetworkSpec, graph: Option<&Graph>, jobs: usize) -> Result<AnalysisReport> {
    let z = spec.z();
    let n = formulas::node_count(spec);
    let e = formulas::edge_count(spec);
    let p = formulas::hub_distance_sum(spec);
    let q = formulas::layer_distance_sum(spec);
    let d = formulas::total_distance(spec)?;
    let apl = formulas::average_path_length(spec)?;

    let mut report = AnalysisReport {
        z,
        t: spec.t(),
        node_count: Rendered::integer(&n),
        edge_count: Rendered::integer(&e),
        average_degree: Rendered::exact(&formulas::average_degree(spec)),
        average_degree_limit: Rendered::exact(&formulas::average_degree_limit(z)?),
        density: Rendered::exact(&formulas::density(spec)),
        degree_table: class_census(spec)
            .into_iter()
            .map(|r| class_row(r.class, r.degree.to_string(), r.count.to_string()))
            .collect(),
        distribution: distribution(z, &formulas::degree_distribution(spec)),
        clustering_paper: Rendered::exact(&formulas::clustering_paper(spec)),
        clustering_empirical: None,
        hub_distance_sum: Rendered::exact(&p),
        layer_distance_sum: Rendered::exact(&q),
        cross_block_next: Rendered::exact(&formulas::cross_block_distance(spec)),
        total_distance: Rendered::exact(&d),
        average_path_length: Rendered::exact(&apl),
        apl_asymptote: Rendered::exact(&formulas::apl_asymptote(z)?),
        measured: None,
        checks: Checks::not_computed(),
    };

    if let Some(graph) = graph {
        let distances = distance_report(graph, jobs)?;
        let measured_n = BigInt::from(graph.node_count());
        let measured_e = BigInt::from(graph.edge_count());
        let measured_p = ExactScalar::from(distances.to_hub_sum);
        let measured_q = ExactScalar::from(distances.to_layer_min_sum);
        let measured_d = ExactScalar::from(distances.total_pairwise);
        let pairs = ExactScalar::new(&measured_n * (&measured_n - 1), 2);
        let measured_apl = &measured_d / &pairs;

        let census: BTreeMap<u64, u64> = hfnet_core::address::census_histogram(spec)
            .into_iter()
            .filter_map(|(k, v)| Some((k.to_u64()?, v.to_u64()?)))
            .collect();

        report.checks = Checks {
            node_count: Check::from_eq(measured_n == n),
            edge_count: Check::from_eq(measured_e == e),
            degree_histogram: Check::from_eq(degree_histogram(graph) == census),
            hub_distance_sum: Check::from_eq(measured_p == p),
            layer_distance_sum: Check::from_eq(measured_q == q),
            total_distance: Check::from_eq(measured_d == d),
            average_path_length: Check::from_eq(measured_apl == apl),
        };
        report.measured = Some(Measured {
            node_count: Rendered::integer(&measured_n),
            edge_count: Rendered::integer(&measured_e),
            hub_distance_sum: Rendered::exact(&measured_p),
            layer_distance_sum: Rendered::exact(&measured_q),
            total_distance: Rendered::exact(&measured_d),
            average_path_length: Rendered::exact(&measured_apl),
            diameter: distances.eccentricity_max,
        });
        report.clustering_empirical = Some(Rendered::exact(&clustering_empirical(graph).mean));
    }
    Ok(report)
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text rendering, one `name = exact (decimal)` line per value.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let line = |out: &mut String, name: &str, v: &Rendered, check: Option<Check>| {
            let _ = write!(out, "{name:<22} = {} ({})", v.exact, v.decimal);
            if let Some(c) = check {
                let _ = write!(out, " [{}]", c.as_str());
            }
            out.push('\n');
        };
        let c = &self.checks;
        let _ = writeln!(out, "network z={} t={}", self.z, self.t);
        line(&mut out, "nodes", &self.node_count, Some(c.node_count));
        line(&mut out, "edges", &self.edge_count, Some(c.edge_count));
        line(&mut out, "average_degree", &self.average_degree, None);
        line(&mut out, "average_degree_limit", &self.average_degree_limit, None);
        line(&mut out, "density", &self.density, None);

        let _ = writeln!(out, "degree_table [{}]", c.degree_histogram.as_str());
        for row in &self.degree_table {
            let _ = writeln!(
                out,
                "  {:<6} class {:<4} degree {:<12} count {}",
                row.kind, row.class, row.degree, row.count
            );
        }
        line(&mut out, "gamma", &self.distribution.gamma, None);
        line(&mut out, "theta", &self.distribution.theta, None);
        for (kind, points) in [
            ("hub", &self.distribution.hub_points),
            ("bottom", &self.distribution.bottom_points),
        ] {
            for p in points {
                let _ = writeln!(
                    out,
                    "  cdf {:<6} degree {:<12} fraction {} ({})",
                    kind, p.degree, p.fraction.exact, p.fraction.decimal
                );
            }
        }

        line(&mut out, "clustering_paper", &self.clustering_paper, None);
        if let Some(emp) = &self.clustering_empirical {
            line(&mut out, "clustering_empirical", emp, None);
        }
        line(&mut out, "hub_distance_sum", &self.hub_distance_sum, Some(c.hub_distance_sum));
        line(&mut out, "layer_distance_sum", &self.layer_distance_sum, Some(c.layer_distance_sum));
        line(&mut out, "cross_block_next", &self.cross_block_next, None);
        line(&mut out, "total_distance", &self.total_distance, Some(c.total_distance));
        line(&mut out, "average_path_length", &self.average_path_length, Some(c.average_path_length));
        line(&mut out, "apl_asymptote", &self.apl_asymptote, None);
        if let Some(m) = &self.measured {
            let _ = writeln!(out, "measured");
            line(&mut out, "  nodes", &m.node_count, None);
            line(&mut out, "  edges", &m.edge_count, None);
            line(&mut out, "  hub_distance_sum", &m.hub_distance_sum, None);
            line(&mut out, "  layer_distance_sum", &m.layer_distance_sum, None);
            line(&mut out, "  total_distance", &m.total_distance, None);
            line(&mut out, "  average_path_length", &m.average_path_length, None);
            let _ = writeln!(out, "  {:<20} = {}", "diameter", m.diameter);
        }
        out
    }
}
