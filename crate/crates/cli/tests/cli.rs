use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const FIXED: [&str; 4] = ["g4", "g16", "g17", "g31"];

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn skewopt(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewopt"))
        .current_dir(dir)
        .args(args)
        .env_remove("SKEWOPT_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> String {
    fs::read_to_string(golden_dir().join(name)).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn without_time(text: &str) -> String {
    text.lines()
        .filter(|l| !l.trim_start().starts_with("\"time\""))
        .map(|l| format!("{l}\n"))
        .collect()
}

#[test]
fn construct_matches_golden() {
    let dir = golden_dir();
    for name in FIXED {
        let sgf = skewopt(&dir, &["construct", "--family", name]);
        assert_eq!(sgf.status.code(), Some(0));
        assert_eq!(stdout(&sgf), golden(&format!("{name}.sgf")), "{name}");
        let g6 = skewopt(&dir, &["construct", "--family", name, "--format", "graph6"]);
        assert_eq!(stdout(&g6), golden(&format!("{name}.g6")), "{name}");
        let both = skewopt(&dir, &["construct", "--family", name, "--format", "both"]);
        assert_eq!(stdout(&both), stdout(&sgf) + &stdout(&g6));
    }
}

#[test]
fn verify_and_energy_match_golden() {
    let dir = golden_dir();
    for name in FIXED {
        let file = format!("{name}.sgf");
        let v = skewopt(&dir, &["verify", &file]);
        assert_eq!(v.status.code(), Some(0), "{name}: {}", stderr(&v));
        assert_eq!(stdout(&v), golden(&format!("{name}.verify.json")));
        assert_eq!(json(&v)["is_optimum"], true);
        let e = skewopt(&dir, &["energy", &file]);
        assert_eq!(e.status.code(), Some(0));
        assert_eq!(stdout(&e), golden(&format!("{name}.energy.json")));
    }
    let g4 = json(&skewopt(&dir, &["verify", "g4.sgf"]));
    assert!((g4["energy"].as_f64().unwrap() - 17.8885438).abs() < 1e-7);
}

#[test]
fn search_matches_golden() {
    let dir = golden_dir();
    for name in FIXED {
        let out = skewopt(&dir, &["search", "--graph", &format!("{name}.g6"), "--k", "5"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert_eq!(without_time(&stdout(&out)), golden(&format!("{name}.search.json")));
        // the witness itself verifies
        let witness = json(&out)["witness"].as_str().unwrap().to_string();
        let tmp = tempfile::tempdir().unwrap();
        fs::write(tmp.path().join("w.sgf"), witness).unwrap();
        assert_eq!(skewopt(tmp.path(), &["verify", "w.sgf"]).status.code(), Some(0));
    }
}

#[test]
fn roundtrip_fixed_matrices_byte_for_byte() {
    let dir = golden_dir();
    for name in FIXED {
        for ext in ["sgf", "g6"] {
            let file = format!("{name}.{ext}");
            let out = skewopt(&dir, &["roundtrip", "--check", &file]);
            assert_eq!(out.status.code(), Some(0), "{file}");
            assert_eq!(stdout(&out), golden(&file));
        }
    }
}

#[test]
fn small_verify_cases() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join("k2.sgf"), "2 1 1\n1 2 1\n").unwrap();
    fs::write(tmp.path().join("c3.sgf"), "3 3 2\n1 2 1\n2 3 1\n3 1 1\n").unwrap();
    let k2 = skewopt(tmp.path(), &["verify", "k2.sgf"]);
    assert_eq!(k2.status.code(), Some(0));
    assert_eq!(json(&k2)["energy"], 2.0);
    let c3 = skewopt(tmp.path(), &["verify", "c3.sgf"]);
    assert_eq!(c3.status.code(), Some(2));
    let v = json(&c3);
    assert_eq!(v["is_optimum"], false);
    assert!((v["energy"].as_f64().unwrap() - 2.0 * 3f64.sqrt()).abs() < 1e-9);
}

#[test]
fn malformed_inputs_exit_one() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join("zero.sgf"), "2 1 1\n1 2 0\n").unwrap();
    let out = skewopt(tmp.path(), &["roundtrip", "zero.sgf"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2, column 5"), "{}", stderr(&out));
    assert!(stderr(&out).contains("invalid sign"));
    assert_eq!(skewopt(tmp.path(), &["verify", "missing.sgf"]).status.code(), Some(1));
    assert_eq!(skewopt(tmp.path(), &["frobnicate"]).status.code(), Some(1));
    assert_eq!(skewopt(tmp.path(), &["construct", "--family", "g12"]).status.code(), Some(1));
    assert_eq!(skewopt(tmp.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn k6_search_and_roundtrip() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join("k6.g6"), "E~~w\n").unwrap();
    let rt = skewopt(tmp.path(), &["roundtrip", "--check", "k6.g6"]);
    assert_eq!(rt.status.code(), Some(0));
    assert_eq!(stdout(&rt), "E~~w\n");
    let s = skewopt(tmp.path(), &["search", "--graph", "k6.g6", "--k", "5"]);
    assert_eq!(s.status.code(), Some(2));
    let v = json(&s);
    assert_eq!(v["outcome"], "NONE");
    assert_eq!(v["classes"], 1024);
    assert_eq!(v["witness"], serde_json::Value::Null);
    let b = skewopt(tmp.path(), &["search", "--graph", "k6.g6", "--k", "5", "--brute-force"]);
    assert_eq!(b.status.code(), Some(2));
    assert_eq!(json(&b)["orientations_checked"], 1 << 15);
    let wrong_k = skewopt(tmp.path(), &["search", "--graph", "k6.g6", "--k", "4"]);
    assert_eq!(wrong_k.status.code(), Some(1));
}

#[test]
fn search_options() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join("c4.edges"), "4 4\n1 2\n2 3\n3 4\n4 1\n").unwrap();
    let all = json(&skewopt(tmp.path(), &["search", "--graph", "c4.edges", "--k", "2", "--all"]));
    assert_eq!(all["outcome"], "FOUND");
    assert_eq!(all["solutions"].as_array().unwrap().len(), 1);
    let bf = json(&skewopt(tmp.path(), &["search", "--graph", "c4.edges", "--k", "2", "--brute-force", "--all"]));
    assert_eq!(bf["optimum_orientations"], 8);
    let dir = golden_dir();
    let limited = skewopt(&dir, &["search", "--graph", "g4.g6", "--k", "5", "--max-nodes", "1"]);
    assert_eq!(limited.status.code(), Some(1));
    assert_eq!(json(&limited)["outcome"], "LIMIT");
}

#[test]
fn enumerate_outputs() {
    let tmp = tempfile::tempdir().unwrap();
    let c4 = json(&skewopt(tmp.path(), &["enumerate", "--k", "2", "--n", "4"]));
    assert_eq!(c4["count"], 1);
    assert_eq!(c4["graphs"][0]["graph6"], "C]");
    let q3 = skewopt(tmp.path(), &["enumerate", "--k", "3", "--n", "8", "--triangle-free", "--format", "graph6"]);
    assert_eq!(stdout(&q3).lines().count(), 1);
    let all = json(&skewopt(tmp.path(), &["enumerate", "--k", "3", "--n", "8", "--all-regular"]));
    assert_eq!(all["count"], 5);
    let k4 = json(&skewopt(tmp.path(), &["enumerate", "--k", "4", "--n", "8", "--clique-level", "HAS_K4"]));
    assert_eq!(k4["count"], 1);
    let refused = skewopt(tmp.path(), &["enumerate", "--k", "5", "--n", "40"]);
    assert_eq!(refused.status.code(), Some(1));
    assert!(stderr(&refused).contains("force"));
}

#[test]
fn catalog_file_and_threads() {
    let tmp = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_skewopt"))
        .current_dir(tmp.path())
        .args(["catalog", "--k", "4", "--n-range", "5..8", "--out", "cat.json"])
        .env("SKEWOPT_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(tmp.path().join("cat.json")).unwrap()).unwrap();
    assert_eq!(v["counts"]["6"]["graphs"], 1);
    assert_eq!(v["counts"]["8"]["graphs"], 2);
    assert_eq!(v["counts"]["8"]["orientable"], 2);
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    let bad = Command::new(env!("CARGO_BIN_EXE_skewopt"))
        .current_dir(tmp.path())
        .args(["catalog", "--k", "4", "--n-range", "5..8"])
        .env("SKEWOPT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(skewopt(tmp.path(), &["catalog", "--k", "4", "--n-range", "8..5"]).status.code(), Some(1));
}

#[test]
fn parametric_constructions_verify() {
    let tmp = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [
        &["--family", "g12", "--n", "16"],
        &["--family", "g26", "--n", "20"],
        &["--family", "hypercube", "--n", "4"],
        &["--family", "un", "--n", "5"],
        &["--family", "g4"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        let o = skewopt(tmp.path(), &full);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        let file = format!("c{i}.sgf");
        fs::write(tmp.path().join(&file), stdout(&o)).unwrap();
        assert_eq!(skewopt(tmp.path(), &["verify", &file]).status.code(), Some(0), "{args:?}");
    }
    // lift G4 to a 16-vertex 6-regular optimum orientation
    let lifted = skewopt(tmp.path(), &["construct", "--family", "p2lift", "--input", "c4.sgf"]);
    assert_eq!(lifted.status.code(), Some(0));
    assert!(stdout(&lifted).starts_with("16 48 6\n"));
    fs::write(tmp.path().join("lift.sgf"), stdout(&lifted)).unwrap();
    assert_eq!(skewopt(tmp.path(), &["verify", "lift.sgf"]).status.code(), Some(0));
    // lifting a non-optimum orientation fails
    fs::write(tmp.path().join("c3.sgf"), "3 3 2\n1 2 1\n2 3 1\n3 1 1\n").unwrap();
    assert_eq!(
        skewopt(tmp.path(), &["construct", "--family", "p2lift", "--input", "c3.sgf"]).status.code(),
        Some(1)
    );
}
