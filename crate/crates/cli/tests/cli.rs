use std::process::Command;

use hfnet_cli::commands::{sweep, verify};
use hfnet_cli::{IntRange, SweepQuantity, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use hfnet_core::generator::{edge_stream, graph_from_edges, read_edge_list};
use hfnet_core::oracle::{degree_histogram, total_distance_empirical};
use hfnet_core::{build_graph, NetworkSpec, DEFAULT_MAX_NODES};

fn hfnet(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_hfnet"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
    )
}

fn run_in_process(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hfnet").chain(args.iter().copied());
    let code = hfnet_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn generate_small() {
    let (code, out, _) = hfnet(&["generate", "--z", "3", "--t", "1"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 13);
    assert_eq!(lines[0], "0 1");
    assert!(out.ends_with('\n'));

    let (_, out, _) = hfnet(&["generate", "--z", "3", "--t", "0"]);
    assert_eq!(out, "0 1\n0 2\n1 2\n");
}

#[test]
fn generate_refuses_huge() {
    let (code, out, err) = hfnet(&["generate", "--z", "3", "--t", "40"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("too large"), "{err}");
    let (code, _, _) = hfnet(&["generate", "--z", "3", "--t", "5", "--max-nodes", "100"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn generate_to_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let (code, _, _) = hfnet(&["generate", "--z", "4", "--t", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let spec = NetworkSpec::new(4, 3).unwrap();
    let edges = read_edge_list(std::io::BufReader::new(std::fs::File::open(&path).unwrap())).unwrap();
    let rebuilt = graph_from_edges(&spec, &edges, DEFAULT_MAX_NODES).unwrap();
    let original = build_graph(&spec, DEFAULT_MAX_NODES).unwrap();
    assert_eq!(degree_histogram(&rebuilt), degree_histogram(&original));
    assert_eq!(
        total_distance_empirical(&rebuilt, 2).unwrap(),
        total_distance_empirical(&original, 1).unwrap()
    );
}

#[test]
fn analyze_with_graph() {
    let (code, out) = run_in_process(&["analyze", "--z", "3", "--t", "1", "--with-graph"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("total_distance         = 69 (69) [match]"), "{out}");
    assert!(out.contains("clustering_empirical   = 103/135"));
    assert!(!out.contains("mismatch"));
}

#[test]
fn analyze_closed_forms_only() {
    let (code, out) = run_in_process(&["analyze", "--z", "3", "--t", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("clustering_paper       = 3/5 (0.6)"));
    assert!(!out.contains("clustering_empirical"));

    let (code, out) = run_in_process(&["analyze", "--z", "3", "--t", "100", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["node_count"]["exact"], "1546132562196033993109383389296863818106322566003");
    assert!(v["clustering_empirical"].is_null());
    assert_eq!(v["checks"]["total_distance"], "not-computed");
    assert_eq!(v["apl_asymptote"]["exact"], "8/9");

    let (code, _) = run_in_process(&["analyze", "--z", "3", "--t", "100", "--with-graph"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn json_flags_with_graph() {
    let (_, out) = run_in_process(&["analyze", "--z", "4", "--t", "2", "--with-graph", "--json", "--jobs", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in ["node_count", "edge_count", "degree_histogram", "hub_distance_sum", "layer_distance_sum", "total_distance"] {
        assert_eq!(v["checks"][key], "match", "{key}");
    }
    assert_eq!(v["measured"]["total_distance"]["exact"], "3216");
}

#[test]
fn verify_grid_passes() {
    let (code, out, _) = hfnet(&["verify", "--z", "3..4", "--t", "0..4"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("all exact checks passed"));
}

#[test]
fn verify_notes_clustering_difference() {
    let (code, out) = run_in_process(&["verify", "--z", "3", "--t", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("paper=3/5 empirical=103/135 expected-model-difference"), "{out}");
}

#[test]
fn verify_catches_corrupted_generator() {
    // drop the last edge of every generated graph
    let faulty = |spec: &NetworkSpec| {
        let mut edges: Vec<(u64, u64)> = edge_stream(spec)?.collect();
        edges.pop();
        graph_from_edges(spec, &edges, DEFAULT_MAX_NODES)
    };
    let mut out = Vec::new();
    let code = verify(IntRange::single(3), IntRange { start: 1, end: 2 }, 1, DEFAULT_MAX_NODES, &faulty, &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    assert_eq!(code, EXIT_MISMATCH);
    assert!(text.contains("quantity=E"), "{text}");
    assert!(text.contains("MISMATCH z=3 t=1"));
}

#[test]
fn verify_refuses_oversized_grid() {
    let (code, _) = run_in_process(&["verify", "--z", "3", "--t", "0..20"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn sweeps() {
    let csv = sweep(SweepQuantity::Clustering, "3..6".parse().unwrap(), "0..10".parse().unwrap()).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "z,t,clustering_paper");
    assert_eq!(lines.len(), 45);
    assert_eq!(lines[1], "3,0,1");
    assert_eq!(lines[2], "3,1,0.6");

    let csv = sweep(SweepQuantity::Clustering, IntRange::single(3), "0..12".parse().unwrap()).unwrap();
    let last: f64 = csv.lines().last().unwrap().split(',').nth(2).unwrap().parse().unwrap();
    assert!((last - 0.5279).abs() < 1e-3);

    let csv = sweep(SweepQuantity::AplVsLnN, IntRange::single(3), "0..12".parse().unwrap()).unwrap();
    let gaps: Vec<f64> = csv
        .lines()
        .skip(1)
        .map(|l| {
            let cols: Vec<f64> = l.split(',').map(|c| c.parse().unwrap()).collect();
            cols[2] - cols[3]
        })
        .collect();
    assert_eq!(gaps.len(), 13);
    // the gap grows from t=0 to t=1, then shrinks
    assert!(gaps[1] > gaps[0]);
    assert!(gaps[1..].windows(2).all(|w| w[1] < w[0]));

    assert!(sweep(SweepQuantity::AplVsLnN, IntRange::single(4), IntRange::single(2)).is_err());
    assert!(sweep(SweepQuantity::DegreeCdf, "3..4".parse().unwrap(), IntRange::single(2)).is_err());

    let csv = sweep(SweepQuantity::Apl, "3..4".parse().unwrap(), "0..1".parse().unwrap()).unwrap();
    assert_eq!(csv, "z,t,average_path_length\n3,0,1\n3,1,1.91666666667\n4,0,1\n4,1,2.09090909091\n");
}

#[test]
fn sweep_cli_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let (code, out, _) = hfnet(&["sweep", "apl-vs-lnN", "--t", "0..3", "--output", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("t,ln_n,average_path_length,log_form\n"));
    let (code, _, _) = hfnet(&["sweep", "bogus", "--t", "0"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn limits_table() {
    let (code, out, _) = hfnet(&["limits", "--z", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("average_degree_limit   = 14/3"));
    assert!(out.contains("density_limit          = 0"));
    assert!(out.contains("apl_asymptote          = 8/9"));
    let bound: f64 = out
        .lines()
        .find(|l| l.starts_with("clustering_bound"))
        .and_then(|l| l.split_whitespace().nth(2))
        .unwrap()
        .parse()
        .unwrap();
    assert!((bound - 0.5279).abs() < 1e-3);

    let (_, out, _) = hfnet(&["limits", "--z", "4"]);
    assert!(out.contains("= 6 (6)") && out.contains("= 3/4"));

    let (code, _, err) = hfnet(&["limits", "--z", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("at least 3"));
}

#[test]
fn usage_errors() {
    assert_eq!(hfnet(&[]).0, EXIT_USAGE);
    assert_eq!(hfnet(&["generate", "--z", "3"]).0, EXIT_USAGE);
    assert_eq!(hfnet(&["verify", "--z", "4..3", "--t", "0"]).0, EXIT_USAGE);
    assert_eq!(hfnet(&["--help"]).0, EXIT_OK);
}

#[test]
fn deterministic_output() {
    let a = hfnet(&["analyze", "--z", "4", "--t", "2", "--with-graph", "--jobs", "1"]).1;
    let b = hfnet(&["analyze", "--z", "4", "--t", "2", "--with-graph", "--jobs", "4"]).1;
    assert_eq!(a, b);
}
