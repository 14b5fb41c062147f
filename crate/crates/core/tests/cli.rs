use std::path::Path;
use std::process::{Command, Output};

use loclu::io;
use loclu::{generate, SyntheticSpec};
use serde_json::Value;

fn loclu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loclu"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_then_cluster_with_labels() {
    let dir = tempfile::tempdir().unwrap();
    let gen = json(&loclu(&[
        "generate",
        "--out-dir",
        s(dir.path()),
        "--sizes",
        "80,80",
        "--d",
        "4",
        "--min-separation",
        "1",
        "--rng-seed",
        "5",
    ]));
    assert_eq!(gen["n"], 160);
    assert_eq!(gen["clusters"], 4);

    let raw = loclu(&[
        "cluster",
        "--graph",
        s(&dir.path().join("graph.txt")),
        "--attrs",
        s(&dir.path().join("attrs.csv")),
        "--labels",
        s(&dir.path().join("labels.txt")),
        "--seed-vertex",
        "10",
        "--designated",
        "auto",
        "--bootstrap-b",
        "300",
    ]);
    let out = json(&raw);
    // Fields come out in a fixed order.
    let text = String::from_utf8(raw.stdout).unwrap();
    let pos = |k: &str| text.find(&format!("\"{k}\":")).unwrap();
    assert!(
        pos("config") < pos("members")
            && pos("members") < pos("gu")
            && pos("gu") < pos("evaluation")
    );
    assert_eq!(out["config"]["designated_mode"], "auto");
    assert_eq!(out["config"]["designated"].as_array().unwrap().len(), 1);
    let members = out["members"].as_array().unwrap();
    assert!(members.iter().any(|m| m == 10));
    let (gu, au, c) = (
        out["gu"].as_f64().unwrap(),
        out["au"].as_f64().unwrap(),
        out["compactness"].as_f64().unwrap(),
    );
    assert!((c - (gu + au)).abs() < 1e-12);
    let f1 = out["evaluation"]["f1"].as_f64().unwrap();
    assert!(f1 > 0.8, "{f1}");
    assert!(out["evaluation"]["nmi"].as_f64().is_some());
}

#[test]
fn round_trip_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    let spec = SyntheticSpec {
        cluster_sizes: vec![30, 25],
        d: 5,
        rng_seed: 77,
        ..SyntheticSpec::default()
    };
    let inst = generate(&spec).unwrap();
    let (g, a, l) = (
        dir.path().join("g.txt"),
        dir.path().join("a.csv"),
        dir.path().join("l.txt"),
    );
    io::write_graph(&g, &inst.graph).unwrap();
    io::write_attributes(&a, &inst.x).unwrap();
    io::write_ids(&l, &inst.truth).unwrap();
    assert_eq!(io::load_graph(&g).unwrap().0, inst.graph);
    assert_eq!(io::load_attributes(&a, Some(55)).unwrap().matrix, inst.x);
    assert_eq!(io::load_ids(&l).unwrap(), inst.truth);
}

#[test]
fn eval_identical_sets() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("c.txt");
    std::fs::write(&p, "1\n2\n3\n").unwrap();
    let out = json(&loclu(&[
        "eval",
        "--detected",
        s(&p),
        "--truth",
        s(&p),
        "--n",
        "10",
    ]));
    assert_eq!(out["f1"], 1.0);
    assert_eq!(out["nmi"], 1.0);
}

#[test]
fn dip_on_chosen_column() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("x.csv");
    let rows: String = (0..100)
        .map(|i| {
            format!(
                "{},{}\n",
                i,
                if i < 50 { 0.0 } else { 100.0 } + f64::from(i % 7)
            )
        })
        .collect();
    std::fs::write(&p, rows).unwrap();
    let out = json(&loclu(&[
        "dip",
        "--input",
        s(&p),
        "--column",
        "1",
        "--bootstrap-b",
        "200",
    ]));
    assert_eq!(out["column"], 1);
    assert_eq!(out["unimodal"], false);
    assert!(out["result"]["dip"].as_f64().unwrap() > 0.1);

    let out = json(&loclu(&[
        "dip",
        "--input",
        s(&p),
        "--column",
        "0",
        "--bootstrap-b",
        "200",
    ]));
    assert_eq!(out["unimodal"], true);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("c.txt");
    std::fs::write(&p, "0\n").unwrap();
    let report = dir.path().join("r.json");
    let out = loclu(&[
        "eval",
        "--detected",
        s(&p),
        "--truth",
        s(&p),
        "--n",
        "3",
        "--output",
        s(&report),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["f1"], 1.0);
}

#[test]
fn input_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    std::fs::write(&g, "0 1\n1 zebra\n").unwrap();
    let out = loclu(&["cluster", "--graph", s(&g), "--seed-vertex", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(":2:"), "{err}");

    let out = loclu(&[
        "cluster",
        "--graph",
        s(&dir.path().join("missing.txt")),
        "--seed-vertex",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(loclu(&["cluster"]).status.code(), Some(1));
    assert_eq!(loclu(&["--help"]).status.code(), Some(0));
}

#[test]
fn plain_graph_without_attributes() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let mut text = String::new();
    for base in [0, 15] {
        for i in 0..15 {
            for j in (i + 1)..15 {
                text.push_str(&format!("{} {}\n", base + i, base + j));
            }
        }
    }
    text.push_str("14 15\n");
    std::fs::write(&g, text).unwrap();
    let out = json(&loclu(&["cluster", "--graph", s(&g), "--seed-vertex", "3"]));
    assert_eq!(out["au"], 0.0);
    let members: Vec<u64> = out["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m.as_u64().unwrap())
        .collect();
    assert!(members.contains(&3));
    assert!(members.iter().all(|&m| m < 15), "{members:?}");
}
