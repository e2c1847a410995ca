use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::Arc;

use loopforge::bruck::{glauberman_folder, TauAut};
use loopforge::catalog;
use loopforge::structure::{check_properties, theorem1_verify, Property};
use loopforge::{envelope, CayleyLoop, DEFAULT_CAP};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopforge"))
        .args(args)
        .env_remove("LOOPFORGE_CAP")
        .output()
        .expect("spawn loopforge")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn load(name: &str) -> CayleyLoop {
    CayleyLoop::parse(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

#[test]
fn check_c3_bruck() {
    let o = run(&["check", fixture("c3.loop").to_str().unwrap(), "--props", "bruck"]);
    assert_eq!(code(&o), 0);
    let lib = check_properties(&load("c3.loop"), &[Property::Bruck]);
    assert_eq!(stdout(&o), pretty(&lib.to_json()));
}

#[test]
fn check_s3_aip_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("s3.loop");
    std::fs::write(&f, catalog::symmetric3().to_loop_string()).unwrap();
    let o = run(&["check", f.to_str().unwrap(), "--props", "aip"]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let w = v["verdicts"][0]["counterexample"].as_array().unwrap();
    assert_eq!(w.len(), 2);
    let s3 = catalog::symmetric3();
    let (x, y) = (w[0].as_u64().unwrap() as usize, w[1].as_u64().unwrap() as usize);
    let inv = s3.inverses().unwrap();
    assert_ne!(inv[s3.mul(x, y)], s3.mul(inv[x], inv[y]));
}

#[test]
fn check_bruck8_all() {
    let o = run(&["check", fixture("bruck8.loop").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let lib = check_properties(&load("bruck8.loop"), &Property::ALL);
    assert_eq!(stdout(&o), pretty(&lib.to_json()));
}

#[test]
fn verify_c6_theorem1() {
    let o = run(&["verify", fixture("c6.loop").to_str().unwrap(), "--theorem", "1"]);
    assert_eq!(code(&o), 0);
    let lib = theorem1_verify(&load("c6.loop"), DEFAULT_CAP).unwrap();
    assert_eq!(stdout(&o), pretty(&lib.to_json()));
}

#[test]
fn verify_s3_theorem2_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("s3.loop");
    std::fs::write(&f, catalog::symmetric3().to_loop_string()).unwrap();
    let o = run(&["verify", f.to_str().unwrap(), "--theorem", "2"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).to_lowercase().contains("bruck"));
}

#[test]
fn envelope_matches_library_and_cap_exits_3() {
    let path = fixture("c6.loop");
    let o = run(&["envelope", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let lib = envelope(&load("c6.loop"), DEFAULT_CAP).unwrap();
    assert_eq!(stdout(&o), pretty(&lib.folder.to_json()));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("folder.json");
    let o = run(&["envelope", path.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_to_string(out).unwrap(), pretty(&lib.folder.to_json()));

    let o = run(&["--cap", "5", "envelope", path.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_loopforge"))
        .args(["envelope", path.to_str().unwrap()])
        .env("LOOPFORGE_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn decompose_text_mode_renders_report() {
    let o = run(&[
        "--format",
        "text",
        "decompose",
        fixture("bruck8.loop").to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("name: \"loop-factorization\""));
    assert!(s.contains("order: 8"));
}

#[test]
fn glauberman_matches_library() {
    let gr = catalog::abelian(&[3, 3]);
    let t = gr.involutory_automorphisms().into_iter().next().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let gf = dir.path().join("g.json");
    let tf = dir.path().join("t.json");
    std::fs::write(&gf, pretty(&gr.to_json())).unwrap();
    std::fs::write(&tf, pretty(&TauAut::from_full(t.clone()).to_json(&gr))).unwrap();
    let o = run(&[
        "glauberman",
        "--group",
        gf.to_str().unwrap(),
        "--aut",
        tf.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let lib = glauberman_folder(Arc::new(gr), &t).unwrap();
    assert_eq!(stdout(&o), pretty(&lib.to_json(DEFAULT_CAP).unwrap()));
}

#[test]
fn enumerate_order5_writes_six_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "enumerate",
        "--order",
        "5",
        "--class",
        "loop",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let loops: Vec<_> = std::fs::read_dir(dir.path().join("5"))
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.path().extension().is_some_and(|x| x == "loop"))
        .collect();
    assert_eq!(loops.len(), 6);
    let m = loopforge::corpus::read_manifest(dir.path(), 5).unwrap();
    assert_eq!(stdout(&o), pretty(&serde_json::to_value(&m).unwrap()));
    assert_eq!(loopforge::corpus::corpus_read(dir.path(), 5).unwrap().len(), 6);
}

#[test]
fn enumerate_over_bound_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "enumerate",
        "--order",
        "9",
        "--class",
        "loop",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.loop");
    std::fs::write(&f, "3\n0 1 2\n1 1 0\n2 0 1\n").unwrap();
    assert_eq!(code(&run(&["check", f.to_str().unwrap()])), 2);
    assert_eq!(
        code(&run(&[
            "check",
            fixture("c3.loop").to_str().unwrap(),
            "--props",
            "moufang"
        ])),
        2
    );
    assert_eq!(
        code(&run(&["--threads", "0", "check", fixture("c3.loop").to_str().unwrap()])),
        2
    );
}
