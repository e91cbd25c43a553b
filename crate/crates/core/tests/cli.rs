use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_torsion-atlas");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("TORSION_ATLAS_MAX_CLOSURE")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("torsion-atlas-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn classify() {
    let o = run(&["classify", "--j", "-25/2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["torsion"], serde_json::json!([1, 15]));
    let o = run(&["classify", "--ainvs", "0,0,0,0,1", "--label", "36a1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["torsion"], serde_json::json!([8, 24]));
    assert_eq!(json(&o)["label"], "36a1");

    let o = run(&["classify", "--j", "0"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("needs a Weierstrass model"));
    assert_eq!(code(&run(&["classify", "--j", "1/0"])), 2);
    assert_eq!(code(&run(&["classify", "--ainvs", "0,0,0,0,0"])), 2);
    assert_eq!(code(&run(&["classify", "--ainvs", "1,2"])), 2);
    assert_eq!(code(&run(&["classify"])), 1);
    assert_eq!(code(&run(&["classify", "--j", "1", "--ainvs", "0,0,0,0,1"])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
}

fn batch_lines(input: &str, jobs: &str) -> (i32, String) {
    let o = run(&["batch", "--in", input, "--jobs", jobs]);
    (code(&o), String::from_utf8(o.stdout).unwrap())
}

#[test]
fn batch_fixtures() {
    for (file, rows) in [("table1.jsonl", 24), ("cm.jsonl", 15)] {
        let (c, out) = batch_lines(&data(file), "2");
        assert_eq!(c, 0, "{file}");
        let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), rows);
        for l in &lines {
            assert_eq!(l["torsion"], l["expected"], "{l}");
            assert!(l.get("error").is_none());
        }
    }
}

#[test]
fn batch_is_deterministic() {
    let input = data("table1.jsonl");
    let (_, one) = batch_lines(&input, "1");
    for jobs in ["3", "8", "0"] {
        assert_eq!(batch_lines(&input, jobs).1, one, "--jobs {jobs}");
    }
}

#[test]
fn batch_edge_cases() {
    let empty = scratch("empty.jsonl");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(batch_lines(empty.to_str().unwrap(), "2"), (0, String::new()));

    let mixed = scratch("mixed.jsonl");
    std::fs::write(
        &mixed,
        "{\"j\": \"8000\"}\nnot json\n{\"j\": \"0\"}\n{\"j\": \"1\", \"ainvs\": [\"0\",\"0\",\"0\",\"0\",\"1\"]}\n{\"label\": \"x\", \"j\": \"1331/8\", \"expected\": [1, 3]}\n",
    )
    .unwrap();
    let (c, out) = batch_lines(mixed.to_str().unwrap(), "2");
    assert_eq!(c, 2);
    let rows: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["torsion"], serde_json::json!([12, 24]));
    assert!(rows[0].get("error").is_none());
    for r in &rows[1..] {
        assert!(r["error"].is_string(), "{r}");
    }
    assert_eq!(rows[4]["torsion"], serde_json::json!([3, 15]));

    let out = scratch("out.jsonl");
    let o = run(&["batch", "--in", &data("cm.jsonl"), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 15);

    assert_eq!(code(&run(&["batch", "--in", "/nonexistent/rows.jsonl"])), 1);
}

#[test]
fn group_type() {
    let o = run(&["group-type", "--gens", "(1,2,3,4);(2,4)"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["gen_d4_type"], true);
    assert_eq!(json(&o)["order"], 8);
    let o = run(&["group-type", "--gens", "(1,2,3,4,5,6,7,8)"]);
    assert_eq!(
        (json(&o)["gen_d4_type"].clone(), json(&o)["exponent"].clone()),
        (false.into(), 8.into())
    );
    let o = run(&["group-type", "--gens", "(1,2,3);(1,2)"]);
    assert_eq!(json(&o)["class"], "NotNilpotent");
    assert_eq!(code(&run(&["group-type", "--gens", "(1,2,x)"])), 2);
    assert_eq!(code(&run(&["group-type", "--gens", "(1,1)"])), 2);
    assert_eq!(
        code(&run(&["--max-closure", "5", "group-type", "--gens", "(1,2,3,4);(2,4)"])),
        4
    );
    assert_eq!(code(&run(&["--max-closure", "0", "group-type", "--gens", "(1,2)"])), 1);
}

#[test]
fn audit_gl2() {
    for m in ["3", "5", "9"] {
        let o = run(&["audit-gl2", "--modulus", m]);
        assert_eq!(code(&o), 0, "modulus {m}");
        assert_eq!(json(&o)["passed"], true);
    }
    // The stated mod-25 group lacks the second property; a subgroup has both.
    let o = run(&["audit-gl2", "--modulus", "25"]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["qualifies"], true);
    assert_eq!(json(&o)["prop2"], false);
    assert!(json(&o)["diagnostics"][0].as_str().unwrap().contains("passes both"));
    assert_eq!(code(&run(&["audit-gl2", "--modulus", "7"])), 1);
}

#[test]
fn catalog_dump_reloads() {
    let o = run(&["catalog"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let cat = torsion_atlas::catalog::Catalog::from_json(&text).unwrap();
    assert_eq!(cat.keys(), torsion_atlas::catalog::builtin_catalog().keys());
}

#[test]
fn selftest() {
    let o = run(&["selftest", "--only", "3,6,8,10"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert_eq!(String::from_utf8_lossy(&o.stdout).matches("PASS").count(), 5);
    assert_eq!(code(&run(&["selftest", "--only", "7"])), 3);
    assert_eq!(code(&run(&["selftest", "--only", "11"])), 1);

    let o = Command::new(BIN)
        .args(["selftest", "--only", "6"])
        .env("TORSION_ATLAS_MAX_CLOSURE", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 4);
}

#[test]
fn selftest_detects_tampering() {
    let text = torsion_atlas::catalog::BUILTIN_JSON;
    // first coefficient of the Z/5 numerator, 3125 -> 3126
    let needle = "\"3125\"";
    assert!(text.contains(needle));
    let bad = scratch("tampered.json");
    std::fs::write(&bad, text.replacen(needle, "\"3126\"", 1)).unwrap();
    let o = run(&["selftest", "--catalog", bad.to_str().unwrap(), "--only", "3"]);
    assert_ne!(code(&o), 0);
    assert_eq!(code(&o), 2);

    let good = scratch("copy.json");
    std::fs::write(&good, text).unwrap();
    assert_eq!(
        code(&run(&["selftest", "--catalog", good.to_str().unwrap(), "--only", "3"])),
        0
    );
}
