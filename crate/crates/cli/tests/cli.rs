// SPDX-License-Identifier: Apache-2.0

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn sigcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigcolor"))
        .args(args)
        .env_remove("SG_GUARD_EDGES")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

struct Dir(tempfile::TempDir);

impl Dir {
    fn new() -> Dir {
        Dir(tempfile::tempdir().unwrap())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    /// Runs `gen` into `name` and returns the path as a string.
    fn gen(&self, name: &str, args: &[&str]) -> String {
        let p = self.path(name);
        let s = p.to_str().unwrap().to_string();
        let mut full = vec!["gen"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["-o", &s]);
        assert_eq!(code(&sigcolor(&full)), 0);
        s
    }
}

fn read(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let a = sigcolor(&["gen", "path", "5", "random(7)"]);
    let b = sigcolor(&["gen", "path", "5", "random(7)"]);
    assert_eq!(a.stdout, b.stdout);
    let g = json(&a);
    assert_eq!(g["n"], 5);
    assert_eq!(g["edges"].as_array().unwrap().len(), 4);

    let d = Dir::new();
    let k4 = d.gen("k4.json", &["complete", "4", "explicit[+,-,+,+,-,+]"]);
    let again = sigcolor(&["switch", "--graph", &k4]);
    assert_eq!(json(&again), read(Path::new(&k4)));
    assert_eq!(code(&sigcolor(&["gen", "complete", "4", "+,-"])), 2);
    assert_eq!(code(&sigcolor(&["gen", "cycle", "4", "bogus"])), 2);
    assert_eq!(code(&sigcolor(&["gen", "--frobnicate", "cycle", "4"])), 2);
    let t = json(&sigcolor(&["gen", "tree", "4", "--parents", "0,0,1"]));
    assert_eq!(t["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn chi_of_paths_and_cycles() {
    let d = Dir::new();
    let c4 = d.gen("c4.json", &["cycle", "4", "all-plus"]);
    let u4 = d.gen("u4.json", &["cycle", "4", "+,-,+,+"]);
    let p6 = d.gen("p6.json", &["path", "6", "random(3)"]);
    for (g, want) in [(&c4, 2), (&u4, 3), (&p6, 2)] {
        let out = sigcolor(&["chi", "--graph", g]);
        assert_eq!(code(&out), 0);
        let v = json(&out);
        assert_eq!(v["chi"], want);
        assert_eq!(v["delta"], 2);

        // The witness passes verify.
        let w = d.path("w.json");
        std::fs::write(&w, v["witness"].to_string()).unwrap();
        assert_eq!(code(&sigcolor(&["verify", "--graph", g, "--coloring", w.to_str().unwrap()])), 0);
    }
    let k1 = d.gen("k1.json", &["path", "1"]);
    let out = sigcolor(&["chi", "--graph", &k1]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("no edges"));
}

#[test]
fn verify_exit_codes() {
    let d = Dir::new();
    let c4 = d.gen("c4.json", &["cycle", "4", "+,-,+,-"]);
    let c3 = d.gen("c3.json", &["cycle", "3", "all-plus"]);
    let col = d.path("col.json");
    let col_s = col.to_str().unwrap();
    assert_eq!(code(&sigcolor(&["color", "--method", "balanced-cycle", "--graph", &c4, "-o", col_s])), 0);
    assert_eq!(code(&sigcolor(&["verify", "--graph", &c4, "--coloring", col_s])), 0);

    let mut c = read(&col);
    let first = c["values"][0][2].as_i64().unwrap();
    c["values"][0][2] = Value::from(-first);
    let bad = d.path("bad.json");
    std::fs::write(&bad, c.to_string()).unwrap();
    let out = sigcolor(&["verify", "--graph", &c4, "--coloring", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["valid"], false);
    let message = v["violations"][0]["message"].as_str().unwrap();
    assert!(message.contains("e0"), "{message}");

    assert_eq!(code(&sigcolor(&["verify", "--graph", &c3, "--coloring", col_s])), 2);
}

#[test]
fn product_constructions_verify() {
    let d = Dir::new();
    let p3 = d.gen("p3.json", &["path", "3", "+,-"]);
    let p2 = d.gen("p2.json", &["path", "2", "-"]);
    let c4 = d.gen("c4.json", &["cycle", "4", "all-minus"]);
    let c3 = d.gen("c3.json", &["cycle", "3", "+,+,-"]);
    let star = d.gen("star.json", &["tree", "4", "--parents", "0,0,0", "-,+,-"]);
    let cases: Vec<(&str, &str, &str, &str)> = vec![
        ("cartesian", "cartesian", &p3, &c4),
        ("path-cycle", "cartesian", &p3, &c3),
        ("cycle-product", "cartesian", &c4, &c3),
        ("tensor", "tensor", &p3, &star),
        ("strong", "strong", &p3, &p3),
        ("corona", "corona", &c3, &p2),
    ];
    for (method, kind, a, b) in cases {
        let g = d.path("g.json");
        let c = d.path("c.json");
        let (g_s, c_s) = (g.to_str().unwrap(), c.to_str().unwrap());
        let built = sigcolor(&["product", kind, "--first", a, "--second", b, "--graph-only", "-o", g_s]);
        assert_eq!(code(&built), 0, "{method}");
        let colored = sigcolor(&["color", "--method", method, "--first", a, "--second", b, "-o", c_s]);
        assert_eq!(code(&colored), 0, "{method}: {}", String::from_utf8_lossy(&colored.stderr));
        let delta = json(&sigcolor(&["chi", "--graph", g_s]))["delta"].clone();
        assert_eq!(read(&c)["k"], delta, "{method}");
        assert_eq!(code(&sigcolor(&["verify", "--graph", g_s, "--coloring", c_s])), 0, "{method}");
    }

    let full = json(&sigcolor(&["product", "strong", "--first", &p3, "--second", &p2]));
    assert_eq!(full["index_map"]["kind"], "strong");

    // Both factors unbalanced and odd: no Δ-coloring, exit 1 with the certificate.
    let out = sigcolor(&["color", "--method", "cycle-product", "--first", &c3, "--second", &c3]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["claim"], "delta-plus-one");
    assert_eq!(code(&sigcolor(&["color", "--method", "tensor", "--first", &p3])), 2);
}

#[test]
fn class_ratio_and_resume() {
    let d = Dir::new();
    let c4 = d.gen("c4.json", &["cycle", "4", "all-plus"]);
    let full = json(&sigcolor(&["class-ratio", "--strategy", "full", "--graph", &c4]));
    assert_eq!((full["total"].as_u64(), full["delta"].as_u64()), (Some(16), Some(8)));
    assert_eq!(full["ratio"], "1/2");
    assert_eq!(full["strategy"], "full");
    let cos = json(&sigcolor(&["class-ratio", "--strategy", "cosets", "--graph", &c4, "--jobs", "2"]));
    assert_eq!((cos["total"].as_u64(), cos["ratio"].as_str()), (Some(2), Some("1/2")));

    let state = d.path("state.json");
    let st = state.to_str().unwrap();
    let part = sigcolor(&[
        "class-ratio", "--strategy", "full", "--graph", &c4, "--chunk", "3", "--max-chunks", "2", "--state-out", st,
    ]);
    assert_eq!(json(&part)["partial"], true);
    let done = json(&sigcolor(&["class-ratio", "--strategy", "full", "--graph", &c4, "--resume", st]));
    assert_eq!(done, full);
    let wrong = sigcolor(&["class-ratio", "--strategy", "cosets", "--graph", &c4, "--resume", st]);
    assert_eq!(code(&wrong), 2);

    let big = d.gen("k7.json", &["complete", "7"]);
    assert_eq!(code(&sigcolor(&["class-ratio", "--strategy", "full", "--graph", &big])), 2);
    let pi = json(&sigcolor(&["class-ratio", "--strategy", "product-induced", "--cycles", "4,5"]));
    assert_eq!(pi["ratio"], "1/2");
    assert_eq!(pi["breakdown"].as_array().unwrap().len(), 4);
}

#[test]
fn switch_carries_the_coloring() {
    let d = Dir::new();
    let c5 = d.gen("c5.json", &["cycle", "5", "-,+,-,+,+"]);
    let col = d.path("col.json");
    let moved = d.path("moved.json");
    let h = d.path("h.json");
    assert_eq!(code(&sigcolor(&["color", "--method", "oracle", "--graph", &c5, "-o", col.to_str().unwrap()])), 0);
    let out = sigcolor(&[
        "switch", "--graph", &c5, "--set", "1,2", "--coloring", col.to_str().unwrap(),
        "--coloring-out", moved.to_str().unwrap(), "-o", h.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let signs: Vec<i64> = read(&h)["edges"].as_array().unwrap().iter().map(|e| e[2].as_i64().unwrap()).collect();
    assert_eq!(signs.iter().filter(|&&s| s < 0).count(), 0);
    assert_eq!(code(&sigcolor(&["verify", "--graph", h.to_str().unwrap(), "--coloring", moved.to_str().unwrap()])), 0);
    assert_eq!(code(&sigcolor(&["switch", "--graph", &c5, "--set", "9"])), 2);
}

#[test]
fn guard_from_environment() {
    let d = Dir::new();
    let c4 = d.gen("c4.json", &["cycle", "4"]);
    let out = Command::new(env!("CARGO_BIN_EXE_sigcolor"))
        .args(["chi", "--graph", &c4])
        .env("SG_GUARD_EDGES", "3")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert_eq!(code(&sigcolor(&["--guard-edges", "4", "chi", "--graph", &c4])), 0);
}

#[test]
fn reproduce_tables() {
    let out = sigcolor(&["reproduce", "cycle-ratios"]);
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    let status: Vec<&str> = rows.iter().map(|r| r["status"].as_str().unwrap()).collect();
    assert_eq!(status, ["fail", "pass", "fail"]);
    assert!(rows.iter().all(|r| r["product_induced_pass"] == true));
    assert_eq!(rows[0]["cosets"], "1/2");
    assert_eq!(rows[2]["cosets"], "511/1024");
    assert_eq!(code(&out), 1);

    let low = sigcolor(&["reproduce", "cycle-ratios", "--coset-cap", "10"]);
    let rows = json(&low)["rows"].as_array().unwrap().clone();
    assert_eq!(rows[0]["status"], "skipped");
    assert_eq!(rows[2]["status"], "fail");
    assert_ne!(code(&low), 0);

    let conj = sigcolor(&["reproduce", "conjectures"]);
    let rows = json(&conj)["rows"].as_array().unwrap().clone();
    let status: Vec<&str> = rows.iter().map(|r| r["status"].as_str().unwrap()).collect();
    assert_eq!(status, ["fail", "pass", "fail", "pass", "pass"]);
    assert_eq!(rows[0]["counterexamples"], 1);
    assert_eq!(rows[2]["counterexamples"], 33);
    assert_eq!(code(&conj), 1);
}
