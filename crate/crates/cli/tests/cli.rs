// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dnalign::ingest::{parse_correspondence, parse_edge_list};
use dnalign::report::DcsReport;
use dnalign::{extract_dcs, DcsOptions, DualNetwork, HopLimit};
use tempfile::TempDir;

fn dnalign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dnalign")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

struct Instance {
    _dir: TempDir,
    conceptual: PathBuf,
    physical: PathBuf,
    correspondence: PathBuf,
}

impl Instance {
    fn new(conceptual: &str, physical: &str, correspondence: &str) -> Self {
        let dir = TempDir::new().unwrap();
        let write = |name: &str, text: &str| {
            let p = dir.path().join(name);
            fs::write(&p, text).unwrap();
            p
        };
        Instance {
            conceptual: write("c.txt", conceptual),
            physical: write("p.txt", physical),
            correspondence: write("corr.txt", correspondence),
            _dir: dir,
        }
    }

    fn args<'a>(&'a self, sub: &'a str) -> Vec<&'a str> {
        vec![
            sub,
            "--conceptual",
            self.conceptual.to_str().unwrap(),
            "--physical",
            self.physical.to_str().unwrap(),
            "--correspondence",
            self.correspondence.to_str().unwrap(),
        ]
    }

    fn load(&self) -> DualNetwork {
        let open = |p: &Path| fs::read(p).unwrap();
        DualNetwork::new(
            parse_edge_list(open(&self.conceptual).as_slice(), true).unwrap(),
            parse_edge_list(open(&self.physical).as_slice(), false).unwrap(),
            parse_correspondence(open(&self.correspondence).as_slice()).unwrap(),
        )
        .unwrap()
    }
}

/// Triangle a-b-c of unit conceptual weight with light spokes to d and e;
/// the physical network is the path a-b-c with d-e hanging off elsewhere.
fn toy() -> Instance {
    Instance::new(
        "a b 1\nb c 1\na c 1\na d 0.1\nc e 0.1\n",
        "a b\nb c\nd e\n",
        "a a\nb b\nc c\nd d\ne e\n",
    )
}

#[test]
fn dcs_output_matches_the_library() {
    let inst = toy();
    let out = dnalign(&inst.args("dcs"));
    assert!(out.status.success(), "{}", stderr(&out));
    let dn = inst.load();
    let result = extract_dcs(&dn, &DcsOptions::default()).unwrap();
    assert_eq!(stdout(&out), DcsReport::new(&dn, &result).to_json());

    let mut args = inst.args("dcs");
    args.extend(["--delta", "1", "--gap-mode", "conceptual", "--connectivity", "relaxed", "--no-repair"]);
    let out = dnalign(&args);
    let opts = DcsOptions { delta: HopLimit::Finite(1), repair: false, ..DcsOptions::default() };
    let opts = DcsOptions {
        gap_rule: dnalign::GapWeightRule::ConceptualWeight,
        connectivity: dnalign::Connectivity::Relaxed,
        ..opts
    };
    let result = extract_dcs(&dn, &opts).unwrap();
    assert_eq!(stdout(&out), DcsReport::new(&dn, &result).to_json());
}

#[test]
fn dcs_defaults_are_printed() {
    let out = dnalign(&toy().args("dcs"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["delta"], 4);
    assert_eq!(json["gap_mode"], "per-hop");
    assert_eq!(json["connectivity"], "strict");
    assert_eq!(json["repair"], true);
    assert_eq!(json["conceptual_density"], 2.0);
    assert_eq!(json["physically_connected"], true);
    let labels: Vec<_> = json["nodes"].as_array().unwrap().iter().map(|p| p["conceptual"].clone()).collect();
    assert_eq!(labels, ["a", "b", "c"]);
}

#[test]
fn dcs_writes_output_and_dot_files() {
    let inst = toy();
    let dir = TempDir::new().unwrap();
    let json = dir.path().join("out.json");
    let dots = dir.path().join("dots");
    let mut args = inst.args("dcs");
    args.extend(["--output", json.to_str().unwrap(), "--dot-dir", dots.to_str().unwrap()]);
    let out = dnalign(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read_to_string(&json).unwrap(), stdout(&dnalign(&inst.args("dcs"))));
    let physical = fs::read_to_string(dots.join("physical.dot")).unwrap();
    assert!(physical.starts_with("graph G {"));
    assert!(physical.contains("\"a\" [fillcolor="));
    assert!(fs::read_to_string(dots.join("conceptual.dot")).unwrap().contains("penwidth=2"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let inst = toy();
    let first = dnalign(&inst.args("dcs")).stdout;
    for threads in ["1", "8"] {
        let out = Command::new(env!("CARGO_BIN_EXE_dnalign"))
            .args(inst.args("dcs"))
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.stdout, first);
    }
}

#[test]
fn edgeless_alignment_exits_with_one() {
    let inst = Instance::new("a b 1\n", "a x\nb y\n", "a a\nb b\n");
    let mut args = inst.args("dcs");
    args.extend(["--delta", "1"]);
    let out = dnalign(&args);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no edges"), "{}", stderr(&out));
}

#[test]
fn irreparable_selection_exits_with_one_and_reports_the_partial_result() {
    // a and b are only joined through x, which has no conceptual counterpart.
    let inst = Instance::new("a b 1\n", "a x\nx b\n", "a a\nb b\n");
    let out = dnalign(&inst.args("dcs"));
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["physically_connected"], false);
    assert_eq!(json["nodes"].as_array().unwrap().len(), 2);
}

#[test]
fn input_errors_exit_with_two_and_name_the_line() {
    let inst = Instance::new("a b 1\nb c -2\n", "a b\n", "a a\n");
    let out = dnalign(&inst.args("dcs"));
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("c.txt:2:"), "{err}");

    let inst = Instance::new("a b 1\n", "a b\n", "a a\nb b\nz z\n");
    let out = dnalign(&inst.args("dcs"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("corr.txt"), "{}", stderr(&out));

    let inst = Instance::new("a b 1\n", "a b\n", "a a\na b\n");
    let out = dnalign(&inst.args("dcs"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("corr.txt:2:"), "{}", stderr(&out));

    let out = dnalign(&["dcs", "--conceptual", "/nonexistent/c.txt", "--physical", "/nonexistent/p.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/nonexistent/c.txt"));
}

#[test]
fn configuration_errors_exit_with_three() {
    let inst = toy();
    for extra in [["--delta", "0"], ["--delta", "many"], ["--gap-mode", "median"], ["--connectivity", "loose"]] {
        let mut args = inst.args("dcs");
        args.extend(extra);
        assert_eq!(dnalign(&args).status.code(), Some(3), "{extra:?}");
    }
    assert_eq!(dnalign(&["frobnicate"]).status.code(), Some(3));
}

#[test]
fn oracle_refuses_large_instances() {
    let dir = TempDir::new().unwrap();
    let out = dnalign(&["gen", "--nodes", "30", "--planted-size", "5", "--seed", "1", "--output", dir.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let file = |n: &str| dir.path().join(n).to_str().unwrap().to_owned();
    let (c, p) = (file("conceptual.txt"), file("physical.txt"));
    let out = dnalign(&["oracle", "--conceptual", &c, "--physical", &p]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("25"), "{}", stderr(&out));
    let out = dnalign(&["oracle", "--conceptual", &c, "--physical", &p, "--max-oracle-nodes", "6"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["density"], 4.0);
}

#[test]
fn generated_instance_is_recovered() {
    let dir = TempDir::new().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = dnalign(&["gen", "--nodes", "30", "--planted-size", "6", "--seed", "42", "--output", d]);
    assert!(out.status.success(), "{}", stderr(&out));
    let file = |n: &str| dir.path().join(n).to_str().unwrap().to_owned();
    let out = dnalign(&[
        "dcs",
        "--conceptual",
        &file("conceptual.txt"),
        "--physical",
        &file("physical.txt"),
        "--correspondence",
        &file("correspondence.txt"),
        "--delta",
        "2",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let mut found: Vec<String> = json["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["conceptual"].as_str().unwrap().to_owned())
        .collect();
    found.sort();
    let mut planted: Vec<String> = fs::read_to_string(file("planted.txt")).unwrap().lines().map(str::to_owned).collect();
    planted.sort();
    assert_eq!(found, planted);
}

#[test]
fn align_exports_every_format() {
    let inst = toy();
    for (format, marker) in [("json", "\"kind\": \"match\""), ("dot", "kind=\"match\""), ("graphml", "<data key=\"kind\">match</data>")] {
        let mut args = inst.args("align");
        args.extend(["--format", format]);
        let out = dnalign(&args);
        assert!(out.status.success(), "{}", stderr(&out));
        assert!(stdout(&out).contains(marker), "{format}");
    }
}

#[test]
fn peel_and_stats_report_densities() {
    let inst = toy();
    let graph = inst.conceptual.to_str().unwrap();
    let out = dnalign(&["peel", "--graph", graph]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["density"], 2.0);
    assert_eq!(json["peel"]["density_curve"].as_array().unwrap().len(), 5);

    let out = dnalign(&["peel", "--conceptual", graph, "--exact"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["exact"], true);

    let out = dnalign(&["peel", "--graph", inst.physical.to_str().unwrap(), "--unweighted"]);
    assert!(out.status.success(), "{}", stderr(&out));

    let out = dnalign(&inst.args("stats"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["physical"]["edge_ratio_density"], 0.6);
    assert_eq!(json["physical"]["density"], 1.2);
    assert_eq!(json["pairs"], 5);
}
