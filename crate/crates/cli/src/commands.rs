use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use hfnet_core::formulas;
use hfnet_core::generator::{build_graph, write_edge_list};
use hfnet_core::oracle::{clustering_empirical, degree_histogram, distance_report};
use hfnet_core::{Error, ExactScalar, Graph, NetworkSpec, Result};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::range::IntRange;
use crate::report::{analyze, format_f64, DECIMAL_DIGITS};
use crate::{Command, SweepQuantity, EXIT_MISMATCH, EXIT_OK};

/// Tolerance used by `limits` when searching for the clustering bound.
pub const LIMIT_TOLERANCE: f64 = 1e-9;

pub fn dispatch(command: &Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Generate { z, t, output, guard } => {
            generate(&NetworkSpec::new(*z, *t)?, output.as_deref(), guard.max_nodes, out)?;
            Ok(EXIT_OK)
        }
        Command::Analyze {
            z,
            t,
            with_graph,
            json,
            jobs,
            guard,
        } => {
            let spec = NetworkSpec::new(*z, *t)?;
            let graph = with_graph
                .then(|| build_graph(&spec, guard.max_nodes))
                .transpose()?;
            let report = analyze(&spec, graph.as_ref(), *jobs)?;
            let text = if *json { report.to_json() + "\n" } else { report.to_text() };
            out.write_all(text.as_bytes()).map_err(io_error)?;
            Ok(EXIT_OK)
        }
        Command::Verify { z, t, jobs, guard } => {
            let max_nodes = guard.max_nodes;
            verify(*z, *t, *jobs, max_nodes, &|s: &NetworkSpec| build_graph(s, max_nodes), out)
        }
        Command::Sweep {
            quantity,
            z,
            t,
            output,
        } => {
            let csv = sweep(*quantity, *z, *t)?;
            emit(output.as_deref(), csv.as_bytes(), out)?;
            Ok(EXIT_OK)
        }
        Command::Limits { z } => {
            out.write_all(limits(*z)?.as_bytes()).map_err(io_error)?;
            Ok(EXIT_OK)
        }
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::Internal(format!("i/o: {e}"))
}

fn emit(path: Option<&Path>, bytes: &[u8], out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(io_error),
        None => out.write_all(bytes).map_err(io_error),
    }
}

/// Writes the edge list after checking the size guard.
pub fn generate(spec: &NetworkSpec, output: Option<&Path>, max_nodes: u64, out: &mut dyn Write) -> Result<u64> {
    spec.materializable(max_nodes)?;
    match output {
        Some(path) => {
            let file = File::create(path).map_err(io_error)?;
            write_edge_list(spec, &mut BufWriter::new(file))
        }
        None => write_edge_list(spec, &mut BufWriter::new(out)),
    }
}

/// Outcome of checking one quantity at one grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub spec: NetworkSpec,
    pub quantity: &'static str,
    pub expected: String,
    pub measured: String,
}

/// Compares N, E, degree histogram, P, Q and D for one spec.
pub fn check_point(spec: &NetworkSpec, graph: &Graph, jobs: usize) -> Result<Vec<Mismatch>> {
    let mut mismatches = Vec::new();
    let mut compare = |quantity: &'static str, expected: String, measured: String| {
        if expected != measured {
            mismatches.push(Mismatch {
                spec: *spec,
                quantity,
                expected,
                measured,
            });
        }
    };
    compare("N", formulas::node_count(spec).to_string(), graph.node_count().to_string());
    compare("E", formulas::edge_count(spec).to_string(), graph.edge_count().to_string());

    let census: Vec<(u64, u64)> = hfnet_core::address::census_histogram(spec)
        .into_iter()
        .filter_map(|(k, v)| Some((k.to_u64()?, v.to_u64()?)))
        .collect();
    let hist: Vec<(u64, u64)> = degree_histogram(graph).into_iter().collect();
    compare("degree-histogram", format!("{census:?}"), format!("{hist:?}"));

    match distance_report(graph, jobs) {
        Ok(d) => {
            compare("P", formulas::hub_distance_sum(spec).to_string(), d.to_hub_sum.to_string());
            compare("Q", formulas::layer_distance_sum(spec).to_string(), d.to_layer_min_sum.to_string());
            compare("D", formulas::total_distance(spec)?.to_string(), d.total_pairwise.to_string());
        }
        Err(Error::Disconnected { source_node, node }) => compare(
            "connectivity",
            "connected".into(),
            format!("node {node} unreachable from {source_node}"),
        ),
        Err(e) => return Err(e),
    }
    Ok(mismatches)
}

/// Runs the exact checks over the grid with a caller-supplied graph builder.
pub fn verify(
    z_range: IntRange,
    t_range: IntRange,
    jobs: usize,
    max_nodes: u64,
    builder: &dyn Fn(&NetworkSpec) -> Result<Graph>,
    out: &mut dyn Write,
) -> Result<i32> {
    let mut specs = Vec::new();
    for z in z_range.iter() {
        for t in t_range.iter() {
            let spec = NetworkSpec::new(z, t)?;
            spec.materializable(max_nodes)?;
            specs.push(spec);
        }
    }

    let mut failures = 0usize;
    for spec in &specs {
        let graph = builder(spec)?;
        let mismatches = check_point(spec, &graph, jobs)?;
        let (z, t) = (spec.z(), spec.t());
        if mismatches.is_empty() {
            writeln!(out, "ok z={z} t={t}: N E degree-histogram P Q D").map_err(io_error)?;
        }
        for m in &mismatches {
            writeln!(
                out,
                "MISMATCH z={z} t={t} quantity={}: expected {} measured {}",
                m.quantity, m.expected, m.measured
            )
            .map_err(io_error)?;
        }
        failures += mismatches.len();

        let paper = formulas::clustering_paper(spec);
        let empirical = clustering_empirical(&graph).mean;
        let relation = if paper == empirical { "equal" } else { "expected-model-difference" };
        writeln!(
            out,
            "note z={z} t={t} clustering paper={paper} empirical={empirical} {relation}"
        )
        .map_err(io_error)?;
    }

    if failures == 0 {
        writeln!(out, "all exact checks passed ({} grid points)", specs.len()).map_err(io_error)?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "{failures} exact check(s) failed").map_err(io_error)?;
        Ok(EXIT_MISMATCH)
    }
}

/// CSV for one sweep.
pub fn sweep(quantity: SweepQuantity, z_range: IntRange, t_range: IntRange) -> Result<String> {
    let dec = |v: &ExactScalar| v.to_decimal(DECIMAL_DIGITS);
    let mut csv = String::new();
    match quantity {
        SweepQuantity::Clustering => {
            csv.push_str("z,t,clustering_paper\n");
            for z in z_range.iter() {
                for t in t_range.iter() {
                    let c = formulas::clustering_paper(&NetworkSpec::new(z, t)?);
                    csv.push_str(&format!("{z},{t},{}\n", dec(&c)));
                }
            }
        }
        SweepQuantity::Apl => {
            csv.push_str("z,t,average_path_length\n");
            for z in z_range.iter() {
                for t in t_range.iter() {
                    let apl = formulas::average_path_length(&NetworkSpec::new(z, t)?)?;
                    csv.push_str(&format!("{z},{t},{}\n", dec(&apl)));
                }
            }
        }
        SweepQuantity::AplVsLnN => {
            if z_range != IntRange::single(3) {
                return Err(Error::InvalidArgument(
                    "apl-vs-lnN is defined for z = 3 only".into(),
                ));
            }
            csv.push_str("t,ln_n,average_path_length,log_form\n");
            for t in t_range.iter() {
                let spec = NetworkSpec::new(3, t)?;
                let ln_n = ExactScalar::from(BigInt::from(spec.node_count())).ln();
                let apl = formulas::average_path_length(&spec)?;
                csv.push_str(&format!(
                    "{t},{},{},{}\n",
                    format_f64(ln_n),
                    dec(&apl),
                    format_f64(formulas::apl_z3_logform(t))
                ));
            }
        }
        SweepQuantity::DegreeCdf => {
            if !z_range.is_single() || !t_range.is_single() {
                return Err(Error::InvalidArgument(
                    "degree-cdf takes a single z and a single t".into(),
                ));
            }
            let dist = formulas::degree_distribution(&NetworkSpec::new(z_range.start, t_range.start)?);
            csv.push_str("degree,cumulative_fraction,kind\n");
            for (kind, points) in [("hub", &dist.hub_points), ("bottom", &dist.bottom_points)] {
                for p in points {
                    csv.push_str(&format!("{},{},{kind}\n", p.degree, dec(&p.fraction)));
                }
            }
        }
    }
    Ok(csv)
}

/// Table of asymptotic constants for `z`.
pub fn limits(z: u32) -> Result<String> {
    let avg = formulas::average_degree_limit(z)?;
    let apl = formulas::apl_asymptote(z)?;
    let bound = formulas::clustering_paper_limit(z, LIMIT_TOLERANCE)?;
    let dec = |v: &ExactScalar| v.to_decimal(DECIMAL_DIGITS);
    let mut text = format!("limits for z={z}\n");
    text.push_str(&format!("{:<22} = {avg} ({})\n", "average_degree_limit", dec(&avg)));
    text.push_str(&format!("{:<22} = 0 (0)\n", "density_limit"));
    text.push_str(&format!(
        "{:<22} = {} ({} at t={})\n",
        "clustering_bound",
        format_f64(bound.value),
        if bound.converged { "converged" } else { "not converged" },
        bound.iterations
    ));
    text.push_str(&format!("{:<22} = {apl} ({})\n", "apl_asymptote", dec(&apl)));
    Ok(text)
}
